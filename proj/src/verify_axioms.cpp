#include "dgd/verify.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>

#include "dgd/parallel.hpp"

namespace dgd {

bool SuiteReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass || c.skipped; });
}

double SuiteReport::max_deviation() const {
  double m = 0.0;
  for (const auto& c : checks)
    if (!c.skipped) m = std::max(m, c.max_deviation);
  return m;
}

void SuiteReport::append(const SuiteReport& o) { checks.insert(checks.end(), o.checks.begin(), o.checks.end()); }

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"bialgebra", "hopf",    "quasitriangular", "ybe",
                                              "ribbon",    "antireal", "star",           "closed_form"};
  return names;
}

std::string basis_label(const DoubleAlgebra& alg, int key) {
  return "d_" + std::to_string(alg.degree(key)) + " " + std::to_string(alg.elem(key));
}

namespace {

// Dense Gram / SVD work on D(G) itself is skipped above this order.
constexpr int kDenseLimit = 32;

const char* variant_tag(RVariant v) { return v == RVariant::standard ? "R" : "R'"; }

class Runner {
 public:
  Runner(const DoubleAlgebra& alg, std::string suite, const VerifyOptions& opt)
      : alg_(alg), suite_(std::move(suite)), opt_(opt) {}

  /// Max deviation of fn over [0,count); witness(i) describes the worst case.
  void run(const std::string& check, std::int64_t count, const std::function<double(std::int64_t)>& fn,
           const std::function<std::string(std::int64_t)>& witness) {
    const MaxDeviation m = max_deviation_over(count, opt_.exec, fn);
    CheckResult r{suite_, check, m.index < 0 ? 0.0 : m.value, true, false, ""};
    r.pass = r.max_deviation <= opt_.tol;
    if (m.index >= 0 && r.max_deviation > 0) r.witness = witness(m.index);
    out_.checks.push_back(std::move(r));
  }

  void single(const std::string& check, const std::function<double()>& fn, const std::string& witness = "") {
    run(check, 1, [&](std::int64_t) { return fn(); }, [&](std::int64_t) { return witness; });
  }

  void over_basis(const std::string& check, const std::function<double(int)>& fn) {
    run(check, alg_.dim(), [&](std::int64_t i) { return fn(static_cast<int>(i)); },
        [&](std::int64_t i) { return basis_label(alg_, static_cast<int>(i)); });
  }

  void over_pairs(const std::string& check, const std::function<double(int, int)>& fn) {
    const std::int64_t d = alg_.dim();
    run(check, d * d, [&](std::int64_t i) { return fn(static_cast<int>(i / d), static_cast<int>(i % d)); },
        [&](std::int64_t i) {
          return basis_label(alg_, static_cast<int>(i / d)) + " , " + basis_label(alg_, static_cast<int>(i % d));
        });
  }

  bool guard(const std::string& check, int limit) {
    if (alg_.order() <= limit) return true;
    out_.checks.push_back({suite_, check, 0.0, true, true,
                           "skipped: |G| = " + std::to_string(alg_.order()) + " > " + std::to_string(limit)});
    return false;
  }

  SuiteReport take() { return std::move(out_); }

 private:
  const DoubleAlgebra& alg_;
  std::string suite_;
  const VerifyOptions& opt_;
  SuiteReport out_;
};

DoubleElement basis_elem(const DoubleAlgebra& alg, int k) { return DoubleElement{alg.group(), {{k, 1.0}}}; }

std::vector<RVariant> variants() { return {RVariant::standard, RVariant::primed}; }

TensorElement r_of(const DoubleAlgebra& alg, RVariant v, const StructureOverride* over) {
  if (v == RVariant::standard && over && over->r_matrix) return *over->r_matrix;
  return alg.r_matrix(v);
}

TensorElement r_inv_of(const DoubleAlgebra& alg, RVariant v, const StructureOverride* over) {
  if (v == RVariant::standard && over && over->r_matrix) return alg.antipode_on_leg(*over->r_matrix, 0);
  return alg.r_inverse(v);
}

void bialgebra(const DoubleAlgebra& alg, Runner& r, const VerifyOptions& opt) {
  const DoubleElement one = alg.one();
  r.over_pairs("coproduct is multiplicative", [&](int a, int b) {
    const auto x = basis_elem(alg, a), y = basis_elem(alg, b);
    return max_abs_diff(alg.coproduct(alg.multiply(x, y)), alg.multiply(alg.coproduct(x), alg.coproduct(y)));
  });
  r.over_pairs("counit is multiplicative", [&](int a, int b) {
    const auto x = basis_elem(alg, a), y = basis_elem(alg, b);
    return std::abs(alg.counit(alg.multiply(x, y)) - alg.counit(x) * alg.counit(y));
  });
  r.single("unit maps", [&] {
    return std::max(max_abs_diff(alg.coproduct(one), alg.unit_tensor(2)), std::abs(alg.counit(one) - 1.0));
  });
  r.over_basis("unit law", [&](int a) {
    const auto x = basis_elem(alg, a);
    return std::max(max_abs_diff(alg.multiply(one, x), x), max_abs_diff(alg.multiply(x, one), x));
  });
  r.over_basis("coassociativity", [&](int a) {
    const auto d = alg.coproduct(basis_elem(alg, a));
    return max_abs_diff(alg.coproduct_on_leg(d, 0), alg.coproduct_on_leg(d, 1));
  });
  r.over_basis("counit law", [&](int a) {
    const auto x = basis_elem(alg, a);
    const auto d = alg.coproduct(x);
    return std::max(max_abs_diff(alg.counit_on_leg(d, 0), x), max_abs_diff(alg.counit_on_leg(d, 1), x));
  });
  if (r.guard("associativity", opt.triple_limit)) {
    const std::int64_t d = alg.dim();
    r.run(
        "associativity", d * d * d,
        [&](std::int64_t i) {
          const int a = static_cast<int>(i / (d * d)), b = static_cast<int>(i / d % d), c = static_cast<int>(i % d);
          const int ab = alg.basis_product(a, b), bc = alg.basis_product(b, c);
          const int lhs = ab < 0 ? -1 : alg.basis_product(ab, c);
          const int rhs = bc < 0 ? -1 : alg.basis_product(a, bc);
          return lhs == rhs ? 0.0 : 1.0;
        },
        [&](std::int64_t i) {
          return basis_label(alg, static_cast<int>(i / (d * d))) + " , " +
                 basis_label(alg, static_cast<int>(i / d % d)) + " , " + basis_label(alg, static_cast<int>(i % d));
        });
  }
}

void hopf(const DoubleAlgebra& alg, Runner& r) {
  r.over_basis("m(S x id)D = unit counit", [&](int a) {
    const auto x = basis_elem(alg, a);
    return max_abs_diff(alg.contract(alg.antipode_on_leg(alg.coproduct(x), 0)), alg.counit(x) * alg.one());
  });
  r.over_basis("m(id x S)D = unit counit", [&](int a) {
    const auto x = basis_elem(alg, a);
    return max_abs_diff(alg.contract(alg.antipode_on_leg(alg.coproduct(x), 1)), alg.counit(x) * alg.one());
  });
  r.over_basis("S^2 = id", [&](int a) {
    const auto x = basis_elem(alg, a);
    return max_abs_diff(alg.antipode(alg.antipode(x)), x);
  });
  r.over_basis("counit o S = counit", [&](int a) {
    const auto x = basis_elem(alg, a);
    return std::abs(alg.counit(alg.antipode(x)) - alg.counit(x));
  });
  r.over_basis("D o S = flip (S x S) D", [&](int a) {
    const auto x = basis_elem(alg, a);
    const auto ss = alg.antipode_on_leg(alg.antipode_on_leg(alg.coproduct(x), 0), 1);
    return max_abs_diff(alg.coproduct(alg.antipode(x)), alg.flip(ss));
  });
  r.over_pairs("S antimultiplicative", [&](int a, int b) {
    const auto x = basis_elem(alg, a), y = basis_elem(alg, b);
    return max_abs_diff(alg.antipode(alg.multiply(x, y)), alg.multiply(alg.antipode(y), alg.antipode(x)));
  });
}

void quasitriangular(const DoubleAlgebra& alg, Runner& r, const VerifyOptions& opt, const StructureOverride* over) {
  for (RVariant v : variants()) {
    const std::string tag = variant_tag(v);
    const TensorElement R = r_of(alg, v, over), Rinv = r_inv_of(alg, v, over);
    const TensorElement unit = alg.unit_tensor(2);
    r.single(tag + " invertible", [&] {
      return std::max(max_abs_diff(alg.multiply(R, Rinv), unit), max_abs_diff(alg.multiply(Rinv, R), unit));
    });
    r.over_basis(tag + " D(x) = Dop(x) " + tag, [&](int a) {
      const auto d = alg.coproduct(basis_elem(alg, a));
      return max_abs_diff(alg.multiply(R, d), alg.multiply(alg.flip(d), R));
    });
    if (r.guard(tag + ": (D x id)R = R13 R23", opt.triple_limit)) {
      r.single(tag + ": (D x id)R = R13 R23", [&] {
        return max_abs_diff(alg.coproduct_on_leg(R, 0), alg.multiply(alg.embed(R, 0, 2), alg.embed(R, 1, 2)));
      });
    }
    if (r.guard(tag + ": (id x D)R = R13 R12", opt.triple_limit)) {
      r.single(tag + ": (id x D)R = R13 R12", [&] {
        return max_abs_diff(alg.coproduct_on_leg(R, 1), alg.multiply(alg.embed(R, 0, 2), alg.embed(R, 0, 1)));
      });
    }
  }
}

void ybe(const DoubleAlgebra& alg, Runner& r, const VerifyOptions& opt, const StructureOverride* over) {
  for (RVariant v : variants()) {
    const std::string name = std::string(variant_tag(v)) + ": R12 R13 R23 = R23 R13 R12";
    if (!r.guard(name, opt.triple_limit)) continue;
    const TensorElement R = r_of(alg, v, over);
    r.single(name, [&] {
      const auto r12 = alg.embed(R, 0, 1), r13 = alg.embed(R, 0, 2), r23 = alg.embed(R, 1, 2);
      return max_abs_diff(alg.multiply(alg.multiply(r12, r13), r23), alg.multiply(alg.multiply(r23, r13), r12));
    });
  }
}

void ribbon(const DoubleAlgebra& alg, Runner& r) {
  for (RVariant v : variants()) {
    const std::string tag = v == RVariant::standard ? "v" : "v'";
    const DoubleElement rv = alg.ribbon_v(v), u = alg.drinfeld_u(v);
    const TensorElement Rinv = alg.r_inverse(v);
    const TensorElement qinv = alg.multiply(Rinv, alg.flip(Rinv));  // ((τR)R)^-1
    r.over_basis(tag + " central", [&](int a) {
      const auto x = basis_elem(alg, a);
      return max_abs_diff(alg.multiply(rv, x), alg.multiply(x, rv));
    });
    r.single("S(" + tag + ") = " + tag, [&] { return max_abs_diff(alg.antipode(rv), rv); });
    r.single("counit(" + tag + ") = 1", [&] { return std::abs(alg.counit(rv) - 1.0); });
    r.single(tag + "^2 = u S(u)", [&] {
      return max_abs_diff(alg.multiply(rv, rv), alg.multiply(u, alg.antipode(u)));
    });
    r.single("D(" + tag + ") = Q^-1 (" + tag + " x " + tag + ")", [&] {
      return max_abs_diff(alg.coproduct(rv), alg.multiply(qinv, alg.tensor(rv, rv)));
    });
  }
}

void antireal(const DoubleAlgebra& alg, Runner& r, const StructureOverride* over) {
  for (RVariant v : variants()) {
    const TensorElement R = r_of(alg, v, over);
    r.single(std::string(variant_tag(v)) + " star x star = inverse",
             [&] { return max_abs_diff(alg.star_each_leg(R), r_inv_of(alg, v, over)); });
  }
}

DoubleElement random_element(const DoubleAlgebra& alg, std::mt19937_64& rng, int terms) {
  std::uniform_int_distribution<int> key(0, alg.dim() - 1);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  DoubleElement x = alg.zero();
  for (int i = 0; i < terms; ++i) x.add(key(rng), cplx(u(rng), u(rng)));
  x.prune();
  return x;
}

void star(const DoubleAlgebra& alg, Runner& r, const VerifyOptions& opt) {
  r.over_basis("star involutive", [&](int a) {
    const auto x = basis_elem(alg, a);
    return max_abs_diff(alg.star(alg.star(x)), x);
  });
  r.over_pairs("star antimultiplicative", [&](int a, int b) {
    const auto x = basis_elem(alg, a), y = basis_elem(alg, b);
    return max_abs_diff(alg.star(alg.multiply(x, y)), alg.multiply(alg.star(y), alg.star(x)));
  });
  r.over_basis("star comultiplicative", [&](int a) {
    const auto x = basis_elem(alg, a);
    return max_abs_diff(alg.coproduct(alg.star(x)), alg.star_each_leg(alg.coproduct(x)));
  });
  r.over_basis("(S o star)^2 = id", [&](int a) {
    const auto x = basis_elem(alg, a);
    return max_abs_diff(alg.antipode(alg.star(alg.antipode(alg.star(x)))), x);
  });
  // Antilinearity only shows on genuinely complex combinations.
  std::mt19937_64 rng(opt.seed);
  std::vector<std::pair<DoubleElement, DoubleElement>> samples;
  for (int i = 0; i < 100; ++i) {
    auto x = random_element(alg, rng, 5);
    auto y = random_element(alg, rng, 5);
    samples.emplace_back(std::move(x), std::move(y));
  }
  r.run(
      "star on random elements", static_cast<std::int64_t>(samples.size()),
      [&](std::int64_t i) {
        const auto& [x, y] = samples[i];
        return std::max(max_abs_diff(alg.star(alg.star(x)), x),
                        max_abs_diff(alg.star(alg.multiply(x, y)), alg.multiply(alg.star(y), alg.star(x))));
      },
      [](std::int64_t i) { return "sample " + std::to_string(i); });
}

void closed_form(const DoubleAlgebra& alg, Runner& r, const VerifyOptions& opt) {
  const TensorElement unit = alg.unit_tensor(2);
  for (RVariant v : variants()) {
    const std::string tag = v == RVariant::standard ? "" : "'";
    r.single("Q" + tag + " closed form = (tau R" + tag + ") R" + tag,
             [&] { return max_abs_diff(alg.monodromy_q(v), alg.monodromy_from_r(v)); });
    r.single("u" + tag + " closed form = m(S x id)(tau R" + tag + ")",
             [&] { return max_abs_diff(alg.drinfeld_u(v), alg.drinfeld_u_from_r(v)); });
  }
  r.single("R' = (tau R)^-1", [&] {
    const auto tr = alg.flip(alg.r_matrix(RVariant::standard));
    const auto rp = alg.r_matrix(RVariant::primed);
    return std::max(max_abs_diff(alg.multiply(rp, tr), unit), max_abs_diff(alg.multiply(tr, rp), unit));
  });
  r.single("inverse monodromy closed form = Q^-1 = Q'", [&] {
    const auto qi = alg.monodromy_inverse_closed();
    return std::max({max_abs_diff(alg.multiply(alg.monodromy_q(RVariant::standard), qi), unit),
                     max_abs_diff(alg.multiply(qi, alg.monodromy_q(RVariant::standard)), unit),
                     max_abs_diff(qi, alg.monodromy_q(RVariant::primed))});
  });
  r.single("u' = u^-1", [&] {
    return max_abs_diff(alg.multiply(alg.drinfeld_u(RVariant::standard), alg.drinfeld_u(RVariant::primed)),
                        alg.one());
  });
  r.over_basis("S^2 = id", [&](int a) {
    const auto x = basis_elem(alg, a);
    return max_abs_diff(alg.antipode(alg.antipode(x)), x);
  });
  const DoubleElement u = alg.drinfeld_u(RVariant::standard);
  r.over_basis("u central", [&](int a) {
    const auto x = basis_elem(alg, a);
    return max_abs_diff(alg.multiply(u, x), alg.multiply(x, u));
  });

  const auto orbits = commuting_pair_orbits(*alg.group());
  const auto center = alg.center_basis(orbits);
  const std::int64_t nc = static_cast<std::int64_t>(center.size());
  r.run(
      "orbit sums central", nc * alg.dim(),
      [&](std::int64_t i) {
        const auto& z = center[i / alg.dim()];
        const auto x = basis_elem(alg, static_cast<int>(i % alg.dim()));
        return max_abs_diff(alg.multiply(z, x), alg.multiply(x, z));
      },
      [&](std::int64_t i) {
        return "orbit " + std::to_string(i / alg.dim()) + " , " + basis_label(alg, static_cast<int>(i % alg.dim()));
      });
  if (r.guard("dim center = commuting-pair orbits", kDenseLimit)) {
    const int dc = alg.centralizer_dimension();
    r.single("dim center = commuting-pair orbits", [&] { return std::abs(double(dc - orbits.num_orbits())); },
             "centralizer dim " + std::to_string(dc) + ", orbits " + std::to_string(orbits.num_orbits()));
  }
  if (r.guard("two-sided integral", kDenseLimit)) {
    const DoubleElement lam = alg.integral();
    r.over_basis("two-sided integral", [&](int a) {
      const auto x = basis_elem(alg, a);
      const cplx e = alg.counit(x);
      return std::max(max_abs_diff(alg.multiply(lam, x), e * lam), max_abs_diff(alg.multiply(x, lam), e * lam));
    });
  }
  {
    const DoubleFunctional haar = alg.haar_functional();
    std::mt19937_64 rng(opt.seed);
    std::uniform_real_distribution<double> u01(-1.0, 1.0);
    std::vector<DoubleFunctional> fs;
    for (int i = 0; i < 50; ++i) {
      DoubleFunctional f = alg.functional_zero();
      for (auto& val : f.values) val = cplx(u01(rng), u01(rng));
      fs.push_back(std::move(f));
    }
    r.run(
        "Haar functional is a dual integral", static_cast<std::int64_t>(fs.size()),
        [&](std::int64_t i) {
          DoubleFunctional rhs = haar;
          const cplx e = alg.dual_counit(fs[i]);
          for (auto& val : rhs.values) val *= e;
          return std::max(max_abs_diff(alg.dual_multiply(fs[i], haar), rhs),
                          max_abs_diff(alg.dual_multiply(haar, fs[i]), rhs));
        },
        [](std::int64_t i) { return "sample " + std::to_string(i); });
  }
  if (r.guard("factorizability map invertible", kDenseLimit)) {
    const Eigen::MatrixXcd m = alg.factorizability_map();
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
    const auto& s = svd.singularValues();
    const double smin = s(s.size() - 1), smax = s(0);
    char buf[96];
    std::snprintf(buf, sizeof buf, "smallest singular value %.3g, condition %.3g", smin, smax / smin);
    // The map sends delta functionals to basis elements bijectively, so every
    // singular value is 1.
    r.single("factorizability map invertible", [&] { return std::max(std::abs(smin - 1.0), std::abs(smax - 1.0)); },
             buf);
  }
}

}  // namespace

SuiteReport verify_axioms(const DoubleAlgebra& alg, const std::string& suite, const VerifyOptions& opt,
                          const StructureOverride* over) {
  if (suite == "all") {
    SuiteReport all;
    for (const auto& s : suite_names()) all.append(verify_axioms(alg, s, opt, over));
    return all;
  }
  Runner r(alg, suite, opt);
  if (suite == "bialgebra")
    bialgebra(alg, r, opt);
  else if (suite == "hopf")
    hopf(alg, r);
  else if (suite == "quasitriangular")
    quasitriangular(alg, r, opt, over);
  else if (suite == "ybe")
    ybe(alg, r, opt, over);
  else if (suite == "ribbon")
    ribbon(alg, r);
  else if (suite == "antireal")
    antireal(alg, r, over);
  else if (suite == "star")
    star(alg, r, opt);
  else if (suite == "closed_form")
    closed_form(alg, r, opt);
  else
    throw InputError("unknown suite '" + suite + "'");
  return r.take();
}

}  // namespace dgd
