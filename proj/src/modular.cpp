#include "dgd/modular.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

#include "dgd/parallel.hpp"

namespace dgd {

using CMat = Eigen::MatrixXcd;

namespace {

GL2 inverse(const GL2& m) {
  const long long det = m.det();
  if (det != 1 && det != -1) throw InputError("matrix is not invertible over the integers");
  return {m.d * det, -m.b * det, -m.c * det, m.a * det};
}

GL2 power(GL2 m, long long e) {
  if (e < 0) {
    m = inverse(m);
    e = -e;
  }
  GL2 r;
  for (long long i = 0; i < e; ++i) r = r * m;
  return r;
}

}  // namespace

GL2 generator(const std::string& name) {
  if (name == "s") return {0, 1, -1, 0};
  if (name == "t") return {1, 1, 0, 1};
  if (name == "j1") return {-1, 0, 0, 1};
  if (name == "j2") return {1, 0, 0, -1};
  const auto caret = name.find("^-1");
  if (caret != std::string::npos && caret + 3 == name.size()) return inverse(generator(name.substr(0, caret)));
  throw InputError("unsupported generator '" + name + "'");
}

GL2 parse_word(const std::string& word) {
  GL2 m;
  std::string tok;
  auto flush = [&] {
    if (tok.empty()) return;
    const auto caret = tok.find('^');
    const std::string base = tok.substr(0, caret);
    long long e = 1;
    if (caret != std::string::npos) {
      const std::string ex = tok.substr(caret + 1);
      std::size_t used = 0;
      try {
        e = std::stoll(ex, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (ex.empty() || used != ex.size()) throw InputError("bad exponent in '" + tok + "'");
    }
    m = m * power(generator(base), e);
    tok.clear();
  };
  for (char ch : word) {
    if (std::isspace(static_cast<unsigned char>(ch)) || ch == '*')
      flush();
    else
      tok += ch;
  }
  flush();
  return m;
}

InvariantFunction act(const GL2& m, const InvariantFunction& f, ActionKind kind, double* invariance) {
  const GL2 j2 = generator("j2");
  const GL2 a = kind == ActionKind::dot ? j2 * m * j2 : m;
  const FiniteGroup& G = *f.space->group;
  const int n = G.order();
  std::vector<cplx> raw(static_cast<std::size_t>(n) * n);
  for (const auto& [h, g] : f.space->orbits.pairs) {
    const int x = G.mul(G.pow(h, a.a), G.pow(g, a.c));
    const int y = G.mul(G.pow(h, a.b), G.pow(g, a.d));
    raw[static_cast<std::size_t>(h) * n + g] = f(x, y);
  }
  return project_invariant(f.space, raw, invariance);
}

InvariantFunction modular_s(const InvariantFunction& f) { return act(generator("s^-1"), f); }
InvariantFunction modular_s_inverse(const InvariantFunction& f) { return act(generator("s"), f); }

InvariantFunction swap_arguments(const InvariantFunction& f) {
  InvariantFunction r = zero_function(f.space);
  const auto& reps = f.space->orbits.reps;
  for (std::size_t o = 0; o < reps.size(); ++o) r.values[o] = f(reps[o].second, reps[o].first);
  return r;
}

InvariantFunction random_invariant(const PairSpacePtr& space, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  InvariantFunction f = zero_function(space);
  for (auto& v : f.values) {
    const double re = u(rng);
    v = cplx(re, u(rng));
  }
  return f;
}

CMat operator_matrix(const std::vector<InvariantFunction>& chars,
                     const std::function<InvariantFunction(const InvariantFunction&)>& op, Exec exec) {
  const int r = static_cast<int>(chars.size());
  std::vector<InvariantFunction> images(r);
  for_each_index(r, exec, [&](std::int64_t j) { images[j] = op(chars[j]); });
  CMat m(r, r);
  for_each_index(static_cast<std::int64_t>(r) * r, exec, [&](std::int64_t p) {
    const int i = static_cast<int>(p / r), j = static_cast<int>(p % r);
    m(i, j) = inner_product(images[j], chars[i]);
  });
  return m;
}

CMat lusztig_fourier_matrix(const DoubleIrreps& irr, Exec exec) {
  const FiniteGroup& G = *irr.group();
  const int n = G.order();
  const int r = irr.size();
  const auto& cd = irr.classes();
  CMat ft(r, r);
  for_each_index(static_cast<std::int64_t>(r) * r, exec, [&](std::int64_t p) {
    const int i = static_cast<int>(p / r), j = static_cast<int>(p % r);
    const MGLabel a = irr.labels()[i], b = irr.labels()[j];
    const int g1 = cd.reps[a.class_index], g2 = cd.reps[b.class_index];
    cplx s = 0;
    for (int h = 0; h < n; ++h) {
      const int x = G.conj(h, g2);  // h g2 h^-1
      if (!G.commute(x, g1)) continue;
      const int y = G.conj(G.inv(h), g1);  // h^-1 g1 h
      s += irr.centralizer_trace(a.class_index, a.irrep_index, x) *
           std::conj(irr.centralizer_trace(b.class_index, b.irrep_index, y));
    }
    ft(i, j) = s * double(cd.class_size(a.class_index)) * double(cd.class_size(b.class_index)) / (double(n) * n);
  });
  return ft;
}

ModularData modular_data(const DoubleIrreps& irr, Exec exec) {
  if (!(irr.labels().front() == MGLabel{0, 0})) throw NumericalError("unit label is not first");
  ModularData md;
  md.labels = irr.labels();
  std::vector<InvariantFunction> chars;
  for (int i = 0; i < irr.size(); ++i) {
    chars.push_back(irr.character(i));
    md.dims.push_back(irr.module_dim(i));
  }
  md.S = operator_matrix(chars, modular_s, exec);
  const GL2 t = generator("t");
  md.T = operator_matrix(chars, [&](const InvariantFunction& f) { return act(t, f); }, exec);
  for (int i = 0; i < md.T.rows(); ++i)
    for (int j = 0; j < md.T.cols(); ++j)
      if (i != j) md.t_offdiagonal = std::max(md.t_offdiagonal, std::abs(md.T(i, j)));
  if (md.t_offdiagonal > 1e-8)
    throw NumericalError("T is not diagonal in the character basis (off-diagonal " +
                         std::to_string(md.t_offdiagonal) + ")");
  md.FT = lusztig_fourier_matrix(irr, exec);
  return md;
}

}  // namespace dgd
