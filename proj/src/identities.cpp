#include <algorithm>
#include <cmath>

#include "dgd/modular.hpp"
#include "dgd/parallel.hpp"

namespace dgd {

using CMat = Eigen::MatrixXcd;

bool ModularReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const IdentityCheck& c) { return c.pass || !c.asserted; });
}

double ModularReport::max_deviation() const {
  double m = 0;
  for (const auto& c : checks)
    if (c.asserted) m = std::max(m, c.deviation);
  return m;
}

namespace {

double max_entry(const CMat& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

double max_abs_diff_dense(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  double m = 0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

// f as the element Σ f(h,g) δ_h g of D(G)
DoubleElement as_element(const DoubleAlgebra& alg, const std::vector<cplx>& f) {
  DoubleElement x = alg.zero();
  for (std::size_t k = 0; k < f.size(); ++k)
    if (f[k] != cplx{}) x.add(static_cast<int>(k), f[k]);
  return x;
}

std::vector<cplx> as_dense(const DoubleAlgebra& alg, const DoubleElement& x) {
  std::vector<cplx> d(alg.dim());
  for (const auto& [k, c] : x.coeffs) d[k] = c;
  return d;
}

// f ↦ f(Q1) h̃(Q2 ·)
std::vector<cplx> hopf_s(const DoubleAlgebra& alg, const TensorElement& q, const std::vector<cplx>& f) {
  std::vector<cplx> out(alg.dim());
  for (const auto& [key, c] : q.coeffs) {
    const auto legs = alg.unpack(key, 2);
    for (int x = 0; x < alg.dim(); ++x) {
      const int p = alg.basis_product(legs[1], x);
      if (p >= 0 && alg.elem(p) == 0) out[x] += c * f[legs[0]];
    }
  }
  return out;
}

// f ↦ f(a ·)
std::vector<cplx> left_translate(const DoubleAlgebra& alg, const DoubleElement& a, const std::vector<cplx>& f) {
  std::vector<cplx> out(alg.dim());
  for (const auto& [k, c] : a.coeffs)
    for (int x = 0; x < alg.dim(); ++x) {
      const int p = alg.basis_product(k, x);
      if (p >= 0) out[x] += c * f[p];
    }
  return out;
}

class Collector {
 public:
  explicit Collector(const ModularOptions& opt) : opt_(opt) {}

  void add(const std::string& name, double dev) { rep_.checks.push_back({name, dev, dev <= opt_.tol, true}); }
  void info(const std::string& name, double dev) { rep_.checks.push_back({name, dev, true, false}); }

  /// max over sample indices of fn(i)
  template <class Fn>
  void sampled(const std::string& name, int count, Fn&& fn) {
    add(name, max_deviation_over(count, opt_.exec, fn).value);
  }

  ModularReport take() { return std::move(rep_); }

 private:
  const ModularOptions& opt_;
  ModularReport rep_;
};

}  // namespace

ModularReport verify_modular_identities(const DoubleIrreps& irr, const ModularData& md, const ModularOptions& opt) {
  Collector out(opt);
  const FiniteGroup& G = *irr.group();
  const int n = G.order();
  const int r = irr.size();
  const auto& space = irr.space();
  const CMat I = CMat::Identity(r, r);
  const CMat& S = md.S;
  const CMat& T = md.T;

  // (a) modular relations
  out.add("S^4 = I", max_entry(S * S * S * S - I));
  const CMat st = S * T;
  out.add("S^2 = (ST)^3", max_entry(S * S - st * st * st));
  out.add("S^2 T = T S^2", max_entry(S * S * T - T * S * S));
  out.add("S unitary", max_entry(S.adjoint() * S - I));
  {
    double dev = md.t_offdiagonal;
    for (int i = 0; i < r; ++i) dev = std::max(dev, std::abs(std::abs(T(i, i)) - 1.0));
    out.add("T diagonal with unit-modulus entries", dev);
  }
  {
    double dev = 0;
    for (int i = 0; i < r; ++i) {
      const MGLabel l = irr.labels()[i];
      const auto& tab = irr.centralizer_table(l.class_index);
      const cplx theta = irr.centralizer_trace(l.class_index, l.irrep_index, irr.classes().reps[l.class_index]) /
                         double(tab.dims[l.irrep_index]);
      dev = std::max(dev, std::abs(T(i, i) - theta));
    }
    out.add("T entries = chi(l)/chi(1)", dev);
  }

  std::mt19937_64 rng(opt.seed);
  std::vector<std::pair<InvariantFunction, InvariantFunction>> pairs;
  for (int i = 0; i < opt.samples; ++i) {
    auto f1 = random_invariant(space, rng);
    auto f2 = random_invariant(space, rng);
    pairs.emplace_back(std::move(f1), std::move(f2));
  }

  // (b) convolution identities
  out.sampled("S(f1.f2) = Sf1 * Sf2", opt.samples, [&](std::int64_t i) {
    const auto& [f1, f2] = pairs[i];
    return max_abs_diff(modular_s(dot_product(f1, f2)), bullet_product(modular_s(f1), modular_s(f2)));
  });
  out.sampled("S(f1*f2) = Sf1 . Sf2", opt.samples, [&](std::int64_t i) {
    const auto& [f1, f2] = pairs[i];
    return max_abs_diff(modular_s(bullet_product(f1, f2)), dot_product(modular_s(f1), modular_s(f2)));
  });

  // (c) S^-1 of the characters diagonalize every fusion operator
  std::vector<InvariantFunction> chi, psi;
  for (int i = 0; i < r; ++i) {
    chi.push_back(irr.character(i));
    psi.push_back(modular_s_inverse(chi.back()));
  }
  auto eigen_residual = [&](const InvariantFunction& f, const InvariantFunction& v) {
    const InvariantFunction fv = bullet_product(f, v);
    const cplx lambda = inner_product(fv, v) / inner_product(v, v);
    return max_abs_diff(fv, lambda * v);
  };
  out.sampled("S^-1 chi_m are eigenvectors of chi_i *", r * r,
              [&](std::int64_t p) { return eigen_residual(chi[p / r], psi[p % r]); });
  out.sampled("S^-1 chi_m are eigenvectors of random f *", opt.samples,
              [&](std::int64_t i) { return eigen_residual(pairs[i].first, psi[i % r]); });

  // (d) the swap FT_G composed with j1 / j2
  const GL2 s = generator("s"), j1 = generator("j1"), j2 = generator("j2");
  out.sampled("(FT o j2) f = s.f", opt.samples, [&](std::int64_t i) {
    const auto& f = pairs[i].first;
    return max_abs_diff(swap_arguments(act(j2, f)), act(s, f, ActionKind::dot));
  });
  out.sampled("(FT o j1) f = s.'f", opt.samples, [&](std::int64_t i) {
    const auto& f = pairs[i].first;
    return max_abs_diff(swap_arguments(act(j1, f)), act(s, f));
  });

  // (e) Lusztig's matrix
  const CMat& F = md.FT;
  out.add("FT unitary", max_entry(F.adjoint() * F - I));
  out.add("FT Hermitian", max_entry(F - F.adjoint()));
  out.add("FT involutive", max_entry(F * F - I));
  out.add("FT = transpose of the swap operator matrix",
          max_entry(F - operator_matrix(chi, swap_arguments, opt.exec).transpose()));

  // (f) label involutions against j1 / j2
  {
    double d1 = 0, d2 = 0;
    for (int i = 0; i < r; ++i) {
      d1 = std::max(d1, max_abs_diff(chi[irr.inverse_class_label(i)], act(j1, chi[i])));
      d2 = std::max(d2, max_abs_diff(chi[irr.dual_irrep_label(i)], act(j2, chi[i])));
    }
    out.add("chi(O_l^-1, rho) = j1 chi(O_l, rho)", d1);
    out.add("chi(O_l, rho*) = j2 chi(O_l, rho)", d2);
  }

  // Action formulas, literally and as a GL2 homomorphism
  out.sampled("generator formulas", opt.samples, [&](std::int64_t i) {
    const auto& f = pairs[i].first;
    InvariantFunction sd = zero_function(space), td = zero_function(space), sp = zero_function(space),
                      tp = zero_function(space);
    for (std::size_t o = 0; o < space->orbits.reps.size(); ++o) {
      const auto [h, g] = space->orbits.reps[o];
      sd.values[o] = f(g, G.inv(h));
      td.values[o] = f(h, G.mul(G.inv(h), g));
      sp.values[o] = f(G.inv(g), h);
      tp.values[o] = f(h, G.mul(h, g));
    }
    const GL2 t = generator("t");
    return std::max({max_abs_diff(act(s, f, ActionKind::dot), sd), max_abs_diff(act(t, f, ActionKind::dot), td),
                     max_abs_diff(act(s, f), sp), max_abs_diff(act(t, f), tp)});
  });
  {
    std::mt19937_64 wrng(opt.seed + 1);
    const char* gens[] = {"s", "t", "j1", "j2", "s^-1", "t^-1"};
    std::vector<std::vector<std::string>> words;
    for (int i = 0; i < opt.samples; ++i) {
      std::vector<std::string> w(1 + wrng() % 6);
      for (auto& tok : w) tok = gens[wrng() % 6];
      words.push_back(std::move(w));
    }
    for (ActionKind kind : {ActionKind::dotprime, ActionKind::dot}) {
      out.sampled(kind == ActionKind::dot ? "word action is a homomorphism (.)" : "word action is a homomorphism (.')",
                  opt.samples, [&](std::int64_t i) {
                    const auto& f = pairs[i].second;
                    GL2 m;
                    InvariantFunction step = f;
                    for (auto it = words[i].rbegin(); it != words[i].rend(); ++it)
                      step = act(generator(*it), step, kind);
                    for (const auto& tok : words[i]) m = m * generator(tok);
                    double inv = 0;
                    const auto whole = act(m, f, kind, &inv);
                    return std::max(inv, max_abs_diff(whole, step));
                  });
    }
  }

  // Products against D(G) and its dual
  if (opt.hopf_level) {
    const DoubleAlgebra alg(irr.group());
    out.sampled("f1.f2 = product in D(G)", opt.samples, [&](std::int64_t i) {
      const auto& [f1, f2] = pairs[i];
      const auto prod = alg.multiply(as_element(alg, f1.dense()), as_element(alg, f2.dense()));
      return max_abs_diff_dense(as_dense(alg, prod), dot_product(f1, f2).dense());
    });
    const double scale = double(n) * n;
    out.sampled("f1*f2 = |G|^2 x dual product under the normalized pairing", opt.samples, [&](std::int64_t i) {
      const auto& [f1, f2] = pairs[i];
      // functional x ↦ (1/|G|^2) Σ f(h,g) x_{h,g}
      DoubleFunctional p1{alg.group(), f1.dense()}, p2{alg.group(), f2.dense()};
      for (auto& v : p1.values) v /= scale;
      for (auto& v : p2.values) v /= scale;
      DoubleFunctional prod = alg.dual_multiply(p1, p2);
      for (auto& v : prod.values) v *= scale * scale;
      return max_abs_diff_dense(prod.values, bullet_product(f1, f2).dense());
    });

    const TensorElement q = alg.monodromy_q(RVariant::standard);
    const DoubleElement s_vinv = alg.antipode(alg.drinfeld_u(RVariant::primed));  // v^-1 = u'
    std::mt19937_64 frng(opt.seed + 2);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<std::vector<cplx>> fs(opt.samples, std::vector<cplx>(alg.dim()));
    for (auto& f : fs)
      for (auto& v : f) {
        const double re = u(frng);
        v = cplx(re, u(frng));
      }
    out.sampled("s.'f = f(Q1) Haar(Q2 -)", opt.samples, [&](std::int64_t i) {
      std::vector<cplx> expect(alg.dim());
      for (int h = 0; h < n; ++h)
        for (int g = 0; g < n; ++g) expect[alg.key(h, g)] = fs[i][alg.key(G.inv(g), h)];
      return max_abs_diff_dense(hopf_s(alg, q, fs[i]), expect);
    });
    out.sampled("t.'f = f(S(v^-1) -)", opt.samples, [&](std::int64_t i) {
      std::vector<cplx> expect(alg.dim());
      for (int h = 0; h < n; ++h)
        for (int g = 0; g < n; ++g) expect[alg.key(h, g)] = fs[i][alg.key(h, G.mul(h, g))];
      return max_abs_diff_dense(left_translate(alg, s_vinv, fs[i]), expect);
    });

    // Off the invariant subspace the extended operators need not satisfy
    // (𝒮t)^3 = 𝒮^2; recorded only.
    {
      const auto& f = fs[0];
      auto s_op = [&](const std::vector<cplx>& x) {
        std::vector<cplx> y(x.size());
        for (int h = 0; h < n; ++h)
          for (int g = 0; g < n; ++g) y[alg.key(h, g)] = x[alg.key(g, G.inv(h))];
        return y;
      };
      auto t_op = [&](const std::vector<cplx>& x) {
        std::vector<cplx> y(x.size());
        for (int h = 0; h < n; ++h)
          for (int g = 0; g < n; ++g) y[alg.key(h, g)] = x[alg.key(h, G.mul(h, g))];
        return y;
      };
      std::vector<cplx> lhs = f;
      for (int k = 0; k < 3; ++k) lhs = s_op(t_op(lhs));
      out.info("(St)^3 = S^2 on all of C(GxG) [not asserted]", max_abs_diff_dense(lhs, s_op(s_op(f))));
    }
  }
  return out.take();
}

}  // namespace dgd
