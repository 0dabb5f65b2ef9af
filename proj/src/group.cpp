#include "dgd/group.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

namespace dgd {

namespace {

std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s;
}

}  // namespace

ValidationReport validate_group(const std::vector<int>& table, int n) {
  ValidationReport rep;
  auto fail = [&](std::string axiom, std::vector<int> w, std::string msg) {
    rep.pass = false;
    rep.violations.push_back({std::move(axiom), std::move(w), std::move(msg)});
  };
  if (n <= 0 || table.size() != static_cast<std::size_t>(n) * n) {
    fail("shape", {n}, "table is not " + std::to_string(n) + "x" + std::to_string(n));
    return rep;
  }
  auto at = [&](int i, int j) { return table[static_cast<std::size_t>(i) * n + j]; };
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (at(i, j) < 0 || at(i, j) >= n) {
        fail("range", {i, j}, "entry (" + std::to_string(i) + "," + std::to_string(j) +
                                  ") out of range");
        return rep;
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    std::vector<char> seen_row(n, 0), seen_col(n, 0);
    for (int j = 0; j < n; ++j) {
      seen_row[at(i, j)] = 1;
      seen_col[at(j, i)] = 1;
    }
    if (std::count(seen_row.begin(), seen_row.end(), 1) != n)
      fail("latin", {i}, "row " + std::to_string(i) + " not a permutation");
    if (std::count(seen_col.begin(), seen_col.end(), 1) != n)
      fail("latin", {i}, "column " + std::to_string(i) + " not a permutation");
  }
  if (!rep.pass) return rep;

  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int j = 0; j < n && ok; ++j) ok = at(e, j) == j && at(j, e) == j;
    if (ok) {
      rep.identity = e;
      break;
    }
  }
  if (!rep.identity) {
    fail("identity", {}, "no two-sided identity element");
    return rep;
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        if (at(at(i, j), k) != at(i, at(j, k))) {
          fail("associativity", {i, j, k},
               "(" + join({i, j}) + ")" + std::to_string(k) + " != " + std::to_string(i) + "(" +
                   join({j, k}) + ")");
          return rep;
        }
      }
    }
  }
  // Latin rows plus an identity give right inverses; check two-sidedness anyway.
  for (int i = 0; i < n; ++i) {
    bool found = false;
    for (int j = 0; j < n && !found; ++j) found = at(i, j) == *rep.identity && at(j, i) == *rep.identity;
    if (!found) fail("inverse", {i}, "element " + std::to_string(i) + " has no inverse");
  }
  return rep;
}

FiniteGroup::FiniteGroup(std::vector<int> cayley, int order, std::string name)
    : n_(order), cayley_(std::move(cayley)), name_(std::move(name)) {
  const ValidationReport rep = validate_group(cayley_, n_);
  if (!rep.pass) {
    const auto& v = rep.violations.front();
    throw InputError("invalid group table (" + v.axiom + "): " + v.message);
  }
  if (*rep.identity != 0) throw InputError("identity must be element 0");
  inverse_.assign(n_, -1);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (mul(i, j) == 0) inverse_[i] = j;
}

int FiniteGroup::pow(int a, long long e) const {
  if (e < 0) {
    a = inv(a);
    e = -e;
  }
  e %= n_;  // a^n = 1
  int r = 0;
  for (long long i = 0; i < e; ++i) r = mul(r, a);
  return r;
}

FiniteGroup parse_cayley_text(const std::string& text, const std::string& name) {
  std::istringstream in(text);
  long long n = 0;
  if (!(in >> n) || n <= 0) throw InputError("malformed Cayley file: missing or bad order");
  if (n > 4096) throw InputError("malformed Cayley file: order too large");
  std::vector<int> table(static_cast<std::size_t>(n * n));
  for (auto& v : table) {
    long long x;
    if (!(in >> x)) throw InputError("malformed Cayley file: expected " + std::to_string(n * n) + " entries");
    v = static_cast<int>(x);
    if (x < 0 || x >= n) throw InputError("malformed Cayley file: entry " + std::to_string(x) + " out of range");
  }
  std::string extra;
  if (in >> extra) throw InputError("malformed Cayley file: trailing data");

  const int order = static_cast<int>(n);
  const ValidationReport rep = validate_group(table, order);
  if (!rep.pass) {
    const auto& v = rep.violations.front();
    throw InputError("group axiom violated (" + v.axiom + "): " + v.message);
  }
  const int e = *rep.identity;
  if (e != 0) {
    // swap labels 0 and e
    auto relabel = [e](int x) { return x == 0 ? e : (x == e ? 0 : x); };
    std::vector<int> t2(table.size());
    for (int i = 0; i < order; ++i)
      for (int j = 0; j < order; ++j)
        t2[static_cast<std::size_t>(relabel(i)) * order + relabel(j)] =
            relabel(table[static_cast<std::size_t>(i) * order + j]);
    table.swap(t2);
  }
  return FiniteGroup(std::move(table), order, name);
}

FiniteGroup load_cayley_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw InputError("cannot open Cayley file: " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_cayley_text(ss.str(), "file:" + path);
}

ConjugacyData conjugacy_classes(const FiniteGroup& g) {
  const int n = g.order();
  ConjugacyData cd;
  cd.class_of.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    if (cd.class_of[a] >= 0) continue;
    const int c = cd.num_classes();
    std::vector<int> cls;
    for (int x = 0; x < n; ++x) {
      const int b = g.conj(x, a);
      if (cd.class_of[b] < 0) {
        cd.class_of[b] = c;
        cls.push_back(b);
      }
    }
    std::sort(cls.begin(), cls.end());
    cd.reps.push_back(a);  // first unseen index is the class minimum
    cd.classes.push_back(std::move(cls));
  }

  for (int c = 0; c < cd.num_classes(); ++c) {
    Centralizer z;
    const int r = cd.reps[c];
    for (int x = 0; x < n; ++x)
      if (g.commute(x, r)) z.elements.push_back(x);
    z.local_of.assign(n, -1);
    const int m = static_cast<int>(z.elements.size());
    for (int i = 0; i < m; ++i) z.local_of[z.elements[i]] = i;
    std::vector<int> table(static_cast<std::size_t>(m) * m);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        table[static_cast<std::size_t>(i) * m + j] = z.local_of[g.mul(z.elements[i], z.elements[j])];
    z.group = std::make_shared<FiniteGroup>(std::move(table), m,
                                            "C(" + std::to_string(r) + ") in " + g.name());
    cd.centralizers.push_back(std::move(z));
  }
  return cd;
}

CommutingPairOrbits commuting_pair_orbits(const FiniteGroup& g) {
  const int n = g.order();
  CommutingPairOrbits cp;
  cp.orbit_of.assign(static_cast<std::size_t>(n) * n, -1);
  std::vector<int> pair_index(static_cast<std::size_t>(n) * n, -1);
  for (int h = 0; h < n; ++h)
    for (int x = 0; x < n; ++x)
      if (g.commute(h, x)) {
        pair_index[static_cast<std::size_t>(h) * n + x] = static_cast<int>(cp.pairs.size());
        cp.pairs.emplace_back(h, x);
      }
  for (std::size_t p = 0; p < cp.pairs.size(); ++p) {
    const auto [h, x] = cp.pairs[p];
    if (cp.orbit_of[static_cast<std::size_t>(h) * n + x] >= 0) continue;
    const int o = cp.num_orbits();
    std::vector<int> orbit;
    for (int l = 0; l < n; ++l) {
      const std::size_t key = static_cast<std::size_t>(g.conj(l, h)) * n + g.conj(l, x);
      if (cp.orbit_of[key] < 0) {
        cp.orbit_of[key] = o;
        orbit.push_back(pair_index[key]);
      }
    }
    std::sort(orbit.begin(), orbit.end());
    cp.orbits.push_back(std::move(orbit));
    cp.reps.emplace_back(h, x);
  }
  return cp;
}

}  // namespace dgd
