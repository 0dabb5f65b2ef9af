#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>

#include "dgd/group.hpp"

namespace dgd {

namespace {

using Perm = std::vector<int>;

FiniteGroup from_elements(int n, const std::function<int(int, int)>& mul, std::string name) {
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) table[static_cast<std::size_t>(a) * n + b] = mul(a, b);
  return FiniteGroup(std::move(table), n, std::move(name));
}

FiniteGroup from_perms(const std::vector<Perm>& perms, std::string name) {
  const int n = static_cast<int>(perms.size());
  auto index_of = [&](const Perm& p) {
    return static_cast<int>(std::lower_bound(perms.begin(), perms.end(), p) - perms.begin());
  };
  return from_elements(
      n,
      [&](int a, int b) {
        // (a*b)(i) = a(b(i))
        Perm c(perms[a].size());
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = perms[a][perms[b][i]];
        return index_of(c);
      },
      std::move(name));
}

bool is_even(const Perm& p) {
  int inversions = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j) inversions += p[i] > p[j];
  return inversions % 2 == 0;
}

std::vector<Perm> all_perms(int n, bool even_only) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<Perm> out;
  do {
    if (!even_only || is_even(p)) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;  // lexicographic, identity first
}

void require(bool ok, const std::string& msg) {
  if (!ok) throw InputError(msg);
}

}  // namespace

FiniteGroup cyclic_group(int n) {
  require(n >= 1, "cyclic group order must be >= 1");
  return from_elements(n, [n](int a, int b) { return (a + b) % n; }, "C" + std::to_string(n));
}

FiniteGroup dihedral_group(int n) {
  require(n >= 1, "dihedral parameter must be >= 1");
  // index f*n + k stands for r^k s^f, with s r s = r^-1
  return from_elements(
      2 * n,
      [n](int a, int b) {
        const int fa = a / n, ka = a % n, fb = b / n, kb = b % n;
        const int k = ((ka + (fa ? -kb : kb)) % n + n) % n;
        return (fa ^ fb) * n + k;
      },
      "D" + std::to_string(n));
}

FiniteGroup symmetric_group(int n) {
  require(n >= 1 && n <= 5, "symmetric group degree must be in 1..5");
  return from_perms(all_perms(n, false), "S" + std::to_string(n));
}

FiniteGroup alternating_group(int n) {
  require(n >= 1 && n <= 5, "alternating group degree must be in 1..5");
  return from_perms(all_perms(n, true), "A" + std::to_string(n));
}

FiniteGroup quaternion_group() {
  // index = 4*sign + unit, unit 0..3 = 1,i,j,k
  static const int unit_mul[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int sign_mul[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  return from_elements(
      8,
      [](int a, int b) {
        const int sa = a / 4, ua = a % 4, sb = b / 4, ub = b % 4;
        return 4 * (sa ^ sb ^ sign_mul[ua][ub]) + unit_mul[ua][ub];
      },
      "Q8");
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const int nb = b.order();
  return from_elements(
      a.order() * nb,
      [&](int x, int y) { return a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb); },
      a.name() + "x" + b.name());
}

namespace {

int parse_int(const std::string& s, const std::string& spec) {
  require(!s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); }),
          "bad integer in group spec: " + spec);
  require(s.size() <= 6, "integer too large in group spec: " + spec);
  return std::stoi(s);
}

// Splits "a,b" at the top-level comma.
std::pair<std::string, std::string> split_args(const std::string& s, const std::string& spec) {
  int depth = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')') --depth;
    if (s[i] == ',' && depth == 0) return {s.substr(0, i), s.substr(i + 1)};
  }
  throw InputError("prod(...) needs two arguments: " + spec);
}

FiniteGroup build(const std::string& raw, int max_order) {
  std::string s;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  require(!s.empty(), "empty group spec");

  if (s.rfind("file:", 0) == 0) return load_cayley_file(s.substr(5));

  std::string low = s;
  std::transform(low.begin(), low.end(), low.begin(), [](unsigned char c) { return std::tolower(c); });

  if (low.rfind("prod(", 0) == 0) {
    require(low.back() == ')', "unbalanced prod(...): " + s);
    const auto [l, r] = split_args(s.substr(5, s.size() - 6), s);
    const FiniteGroup a = build(l, max_order);
    const FiniteGroup b = build(r, max_order);
    require(static_cast<long long>(a.order()) * b.order() <= max_order,
            "group order " + std::to_string(static_cast<long long>(a.order()) * b.order()) +
                " exceeds limit " + std::to_string(max_order));
    return direct_product(a, b);
  }
  const auto colon = low.find(':');
  if (colon != std::string::npos) {
    const std::string fam = low.substr(0, colon);
    const int k = parse_int(low.substr(colon + 1), s);
    require((fam == "dihedral" ? 2LL * k : k) <= max_order || fam == "sym" || fam == "alt",
            "group order exceeds limit " + std::to_string(max_order) + ": " + s);
    if (fam == "cyclic") return cyclic_group(k);
    if (fam == "dihedral") return dihedral_group(k);
    if (fam == "sym") return symmetric_group(k);
    if (fam == "alt") return alternating_group(k);
    throw InputError("unknown group family: " + fam);
  }
  if (low == "q8" || low == "quaternion8") return quaternion_group();
  if (low == "trivial") return cyclic_group(1);
  if (low.size() >= 2 && std::isdigit(static_cast<unsigned char>(low[1]))) {
    const int k = parse_int(low.substr(1), s);
    require((low[0] == 'd' ? 2LL * k : k) <= max_order || low[0] == 's' || low[0] == 'a',
            "group order exceeds limit " + std::to_string(max_order) + ": " + s);
    switch (low[0]) {
      case 'c': return cyclic_group(k);
      case 'd': return dihedral_group(k);
      case 's': return symmetric_group(k);
      case 'a': return alternating_group(k);
      default: break;
    }
  }
  throw InputError("unrecognized group spec: " + s);
}

}  // namespace

FiniteGroup build_group(const std::string& spec, int max_order) {
  FiniteGroup g = build(spec, max_order);
  if (g.order() > max_order)
    throw InputError("group order " + std::to_string(g.order()) + " exceeds limit " +
                     std::to_string(max_order));
  return g;
}

const std::vector<std::string>& builtin_specs() {
  static const std::vector<std::string> specs = {
      "trivial", "C2", "C3", "C4", "prod(C2,C2)", "C5", "C6", "S3", "C8", "D4",
      "Q8", "prod(C2,C4)", "prod(C3,C3)", "dihedral:5", "dihedral:6", "A4", "S4"};
  return specs;
}

}  // namespace dgd
