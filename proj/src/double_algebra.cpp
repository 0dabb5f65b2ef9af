#include "dgd/double_algebra.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <functional>

namespace dgd {

void DoubleElement::add(int key, cplx c) { coeffs[key] += c; }

void DoubleElement::prune() {
  std::erase_if(coeffs, [](const auto& kv) { return std::abs(kv.second) < kPruneTol; });
}

cplx DoubleElement::coeff(int key) const {
  auto it = coeffs.find(key);
  return it == coeffs.end() ? cplx{} : it->second;
}

void TensorElement::add(std::int64_t key, cplx c) { coeffs[key] += c; }

void TensorElement::prune() {
  std::erase_if(coeffs, [](const auto& kv) { return std::abs(kv.second) < kPruneTol; });
}

DoubleAlgebra::DoubleAlgebra(GroupPtr g) : g_(std::move(g)), n_(g_->order()) {
  conj_inv_.resize(static_cast<std::size_t>(n_) * n_);
  for (int x = 0; x < n_; ++x)
    for (int h = 0; h < n_; ++h) conj_inv_[static_cast<std::size_t>(x) * n_ + h] = g_->conj(g_->inv(x), h);
}

void DoubleAlgebra::check_same_group(const GroupPtr& other) const {
  if (other != g_) throw std::invalid_argument("D(G) elements over different groups");
}

std::vector<int> DoubleAlgebra::unpack(std::int64_t k, int arity) const {
  std::vector<int> legs(arity);
  for (int i = arity - 1; i >= 0; --i) {
    legs[i] = static_cast<int>(k % dim());
    k /= dim();
  }
  return legs;
}

namespace {

std::int64_t pack_legs(const std::vector<int>& legs, int dim) {
  std::int64_t k = 0;
  for (int l : legs) k = k * dim + l;
  return k;
}

}  // namespace

DoubleElement DoubleAlgebra::zero() const { return DoubleElement{g_, {}}; }

DoubleElement DoubleAlgebra::basis(int h, int g) const {
  DoubleElement e = zero();
  e.add(key(h, g), 1.0);
  return e;
}

DoubleElement DoubleAlgebra::one() const { return group_element(0); }

DoubleElement DoubleAlgebra::group_element(int g) const {
  DoubleElement e = zero();
  for (int h = 0; h < n_; ++h) e.add(key(h, g), 1.0);
  return e;
}

DoubleElement DoubleAlgebra::delta(int h) const { return basis(h, 0); }

DoubleElement DoubleAlgebra::multiply(const DoubleElement& x, const DoubleElement& y) const {
  check_same_group(x.group);
  check_same_group(y.group);
  DoubleElement r = zero();
  for (const auto& [a, ca] : x.coeffs)
    for (const auto& [b, cb] : y.coeffs) {
      const int p = basis_product(a, b);
      if (p >= 0) r.add(p, ca * cb);
    }
  r.prune();
  return r;
}

TensorElement DoubleAlgebra::coproduct(const DoubleElement& x) const {
  check_same_group(x.group);
  TensorElement t{g_, 2, {}};
  for (const auto& [k, c] : x.coeffs) {
    const int h = degree(k), g = elem(k);
    for (int s = 0; s < n_; ++s) {
      const int tt = g_->mul(g_->inv(s), h);  // s t = h
      t.add(pack(key(tt, g), key(s, g)), c);
    }
  }
  t.prune();
  return t;
}

DoubleElement DoubleAlgebra::antipode(const DoubleElement& x) const {
  check_same_group(x.group);
  DoubleElement r = zero();
  for (const auto& [k, c] : x.coeffs) {
    const int h = degree(k), g = elem(k), gi = g_->inv(g);
    r.add(key(g_->conj(gi, g_->inv(h)), gi), c);
  }
  r.prune();
  return r;
}

cplx DoubleAlgebra::counit(const DoubleElement& x) const {
  check_same_group(x.group);
  cplx s = 0;
  for (const auto& [k, c] : x.coeffs)
    if (degree(k) == 0) s += c;
  return s;
}

DoubleElement DoubleAlgebra::star(const DoubleElement& x) const {
  check_same_group(x.group);
  DoubleElement r = zero();
  for (const auto& [k, c] : x.coeffs) {
    const int h = degree(k), g = elem(k), gi = g_->inv(g);
    r.add(key(g_->conj(gi, h), gi), std::conj(c));
  }
  r.prune();
  return r;
}

TensorElement DoubleAlgebra::tensor(const DoubleElement& x, const DoubleElement& y) const {
  TensorElement t{g_, 2, {}};
  for (const auto& [a, ca] : x.coeffs)
    for (const auto& [b, cb] : y.coeffs) t.add(pack(a, b), ca * cb);
  t.prune();
  return t;
}

TensorElement DoubleAlgebra::tensor(const DoubleElement& x, const DoubleElement& y,
                                    const DoubleElement& z) const {
  TensorElement t{g_, 3, {}};
  for (const auto& [a, ca] : x.coeffs)
    for (const auto& [b, cb] : y.coeffs)
      for (const auto& [c, cc] : z.coeffs) t.add(pack(a, b, c), ca * cb * cc);
  t.prune();
  return t;
}

TensorElement DoubleAlgebra::unit_tensor(int arity) const {
  return arity == 2 ? tensor(one(), one()) : tensor(one(), one(), one());
}

TensorElement DoubleAlgebra::multiply(const TensorElement& x, const TensorElement& y) const {
  check_same_group(x.group);
  check_same_group(y.group);
  if (x.arity != y.arity) throw std::invalid_argument("tensor arity mismatch");
  TensorElement r{g_, x.arity, {}};
  std::vector<std::vector<int>> ylegs;
  std::vector<cplx> ycoef;
  for (const auto& [kb, cb] : y.coeffs) {
    ylegs.push_back(unpack(kb, y.arity));
    ycoef.push_back(cb);
  }
  std::vector<int> out(x.arity);
  for (const auto& [ka, ca] : x.coeffs) {
    const auto xl = unpack(ka, x.arity);
    for (std::size_t j = 0; j < ylegs.size(); ++j) {
      bool zero_term = false;
      for (int i = 0; i < x.arity && !zero_term; ++i) {
        out[i] = basis_product(xl[i], ylegs[j][i]);
        zero_term = out[i] < 0;
      }
      if (!zero_term) r.add(pack_legs(out, dim()), ca * ycoef[j]);
    }
  }
  r.prune();
  return r;
}

TensorElement DoubleAlgebra::flip(const TensorElement& t) const {
  if (t.arity != 2) throw std::invalid_argument("flip needs a 2-tensor");
  TensorElement r{g_, 2, {}};
  for (const auto& [k, c] : t.coeffs) {
    const auto l = unpack(k, 2);
    r.add(pack(l[1], l[0]), c);
  }
  return r;
}

TensorElement DoubleAlgebra::embed(const TensorElement& t, int a, int b) const {
  if (t.arity != 2) throw std::invalid_argument("embed needs a 2-tensor");
  const int free_leg = 3 - a - b;
  TensorElement r{g_, 3, {}};
  std::vector<int> legs(3);
  for (const auto& [k, c] : t.coeffs) {
    const auto l = unpack(k, 2);
    legs[a] = l[0];
    legs[b] = l[1];
    for (int h = 0; h < n_; ++h) {
      legs[free_leg] = key(h, 0);
      r.add(pack_legs(legs, dim()), c);
    }
  }
  return r;
}

TensorElement DoubleAlgebra::coproduct_on_leg(const TensorElement& t, int leg) const {
  TensorElement r{g_, t.arity + 1, {}};
  for (const auto& [k, c] : t.coeffs) {
    const auto l = unpack(k, t.arity);
    const TensorElement d = coproduct(DoubleElement{g_, {{l[leg], 1.0}}});
    for (const auto& [kd, cd] : d.coeffs) {
      const auto dl = unpack(kd, 2);
      std::vector<int> legs;
      for (int i = 0; i < t.arity; ++i) {
        if (i == leg) {
          legs.push_back(dl[0]);
          legs.push_back(dl[1]);
        } else {
          legs.push_back(l[i]);
        }
      }
      r.add(pack_legs(legs, dim()), c * cd);
    }
  }
  r.prune();
  return r;
}

TensorElement DoubleAlgebra::antipode_on_leg(const TensorElement& t, int leg) const {
  TensorElement r{g_, t.arity, {}};
  for (const auto& [k, c] : t.coeffs) {
    auto l = unpack(k, t.arity);
    const DoubleElement s = antipode(DoubleElement{g_, {{l[leg], 1.0}}});
    for (const auto& [ks, cs] : s.coeffs) {
      l[leg] = ks;
      r.add(pack_legs(l, dim()), c * cs);
    }
  }
  r.prune();
  return r;
}

TensorElement DoubleAlgebra::star_each_leg(const TensorElement& t) const {
  TensorElement r{g_, t.arity, {}};
  for (const auto& [k, c] : t.coeffs) {
    auto l = unpack(k, t.arity);
    for (auto& leg : l) leg = star(DoubleElement{g_, {{leg, 1.0}}}).coeffs.begin()->first;
    r.add(pack_legs(l, dim()), std::conj(c));
  }
  return r;
}

DoubleElement DoubleAlgebra::contract(const TensorElement& t) const {
  if (t.arity != 2) throw std::invalid_argument("contract needs a 2-tensor");
  DoubleElement r = zero();
  for (const auto& [k, c] : t.coeffs) {
    const auto l = unpack(k, 2);
    const int p = basis_product(l[0], l[1]);
    if (p >= 0) r.add(p, c);
  }
  r.prune();
  return r;
}

DoubleElement DoubleAlgebra::counit_on_leg(const TensorElement& t, int leg) const {
  if (t.arity != 2) throw std::invalid_argument("counit_on_leg needs a 2-tensor");
  DoubleElement r = zero();
  for (const auto& [k, c] : t.coeffs) {
    const auto l = unpack(k, 2);
    if (degree(l[leg]) == 0) r.add(l[1 - leg], c);
  }
  r.prune();
  return r;
}

TensorElement DoubleAlgebra::r_matrix(RVariant v) const {
  TensorElement r{g_, 2, {}};
  for (int h = 0; h < n_; ++h)
    for (int g = 0; g < n_; ++g) {
      if (v == RVariant::standard)
        r.add(pack(key(h, g), key(g, 0)), 1.0);
      else
        r.add(pack(key(g, 0), key(h, g_->inv(g))), 1.0);  // (τR)^-1
    }
  return r;
}

TensorElement DoubleAlgebra::r_inverse(RVariant v) const {
  if (v == RVariant::standard) return antipode_on_leg(r_matrix(v), 0);
  return flip(r_matrix(RVariant::standard));
}

DoubleElement DoubleAlgebra::drinfeld_u_from_r(RVariant v) const {
  return contract(antipode_on_leg(flip(r_matrix(v)), 0));
}

DoubleElement DoubleAlgebra::drinfeld_u(RVariant v) const {
  DoubleElement u = zero();
  for (int g = 0; g < n_; ++g) u.add(key(v == RVariant::standard ? g_->inv(g) : g, g), 1.0);
  return u;
}

TensorElement DoubleAlgebra::monodromy_q(RVariant v) const {
  TensorElement q{g_, 2, {}};
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b) {
      if (v == RVariant::standard) {
        q.add(pack(key(a, b), key(g_->conj(a, b), a)), 1.0);
      } else {
        const int h = a, g = b;
        q.add(pack(key(g_->conj(h, g_->inv(g)), h), key(g_->inv(h), g)), 1.0);
      }
    }
  return q;
}

TensorElement DoubleAlgebra::monodromy_from_r(RVariant v) const {
  const TensorElement r = r_matrix(v);
  return multiply(flip(r), r);
}

TensorElement DoubleAlgebra::monodromy_inverse_closed() const {
  TensorElement q{g_, 2, {}};
  for (int h = 0; h < n_; ++h)
    for (int g = 0; g < n_; ++g) {
      const int gi = g_->inv(g);
      q.add(pack(key(h, g), key(gi, g_->conj(gi, g_->inv(h)))), 1.0);
    }
  return q;
}

std::vector<DoubleElement> DoubleAlgebra::center_basis(const CommutingPairOrbits& orbits) const {
  std::vector<DoubleElement> out;
  for (const auto& [h, g] : orbits.reps) {
    DoubleElement s = zero();
    for (int l = 0; l < n_; ++l) s.add(key(g_->conj(l, h), g_->conj(l, g)), 1.0);
    out.push_back(std::move(s));
  }
  return out;
}

namespace {

using CMat = Eigen::MatrixXcd;

// Gram matrix Σ_b L_b^* L_b of linear maps given column by column.
CMat gram_of_maps(int dim, int nmaps, const std::function<DoubleElement(int map, int col)>& column) {
  CMat gram = CMat::Zero(dim, dim);
  for (int m = 0; m < nmaps; ++m) {
    std::vector<std::vector<std::pair<int, cplx>>> rows(dim);
    for (int c = 0; c < dim; ++c)
      for (const auto& [r, v] : column(m, c).coeffs) rows[r].emplace_back(c, v);
    for (const auto& row : rows)
      for (const auto& [c1, v1] : row)
        for (const auto& [c2, v2] : row) gram(c1, c2) += std::conj(v1) * v2;
  }
  return gram;
}

}  // namespace

Eigen::MatrixXcd gram_null_space(const Eigen::MatrixXcd& gram, double rel_tol) {
  Eigen::SelfAdjointEigenSolver<CMat> es(gram);
  const auto& ev = es.eigenvalues();
  const double top = std::max(1.0, ev.cwiseAbs().maxCoeff());
  int k = 0;
  while (k < ev.size() && ev(k) < rel_tol * top) ++k;
  return es.eigenvectors().leftCols(k);
}

int DoubleAlgebra::centralizer_dimension() const {
  // Generators: δ_h (h in G) and the group elements g.
  const int nmaps = 2 * n_;
  auto gen = [&](int m) { return m < n_ ? delta(m) : group_element(m - n_); };
  const CMat gram = gram_of_maps(dim(), nmaps, [&](int m, int c) {
    const DoubleElement x{g_, {{c, 1.0}}};
    const DoubleElement b = gen(m);
    return multiply(x, b) - multiply(b, x);
  });
  return static_cast<int>(gram_null_space(gram).cols());
}

DoubleElement DoubleAlgebra::integral() const {
  const int ngen = 2 * n_;
  auto gen = [&](int m) { return m < n_ ? delta(m) : group_element(m - n_); };
  // Right and left integral equations for each generator.
  const CMat gram = gram_of_maps(dim(), 2 * ngen, [&](int m, int c) {
    const DoubleElement x{g_, {{c, 1.0}}};
    const DoubleElement b = gen(m % ngen);
    const DoubleElement prod = m < ngen ? multiply(x, b) : multiply(b, x);
    return prod - counit(b) * x;
  });
  const CMat ker = gram_null_space(gram);
  if (ker.cols() != 1)
    throw NumericalError("integral solution space has dimension " + std::to_string(ker.cols()));
  const Eigen::VectorXcd v = ker.col(0);
  const double scale = v.cwiseAbs().maxCoeff();
  int first = 0;
  while (std::abs(v(first)) < 1e-8 * scale) ++first;
  DoubleElement x = zero();
  for (int k = 0; k < dim(); ++k) x.add(k, v(k) / v(first));
  x.prune();
  for (auto& [k, c] : x.coeffs) {
    // structure constants are integral; snap round-off
    if (std::abs(c - cplx(std::round(c.real()), std::round(c.imag()))) < 1e-9)
      c = {std::round(c.real()), std::round(c.imag())};
  }
  return x;
}

DoubleFunctional DoubleAlgebra::functional_zero() const {
  return DoubleFunctional{g_, std::vector<cplx>(dim(), 0.0)};
}

DoubleFunctional DoubleAlgebra::haar_functional() const {
  DoubleFunctional f = functional_zero();
  for (int h = 0; h < n_; ++h) f.values[key(h, 0)] = 1.0;
  return f;
}

cplx DoubleAlgebra::evaluate(const DoubleFunctional& f, const DoubleElement& x) const {
  check_same_group(f.group);
  cplx s = 0;
  for (const auto& [k, c] : x.coeffs) s += c * f.values[k];
  return s;
}

cplx DoubleAlgebra::evaluate(const DoubleFunctional& f, const DoubleFunctional& g,
                             const TensorElement& t) const {
  cplx s = 0;
  for (const auto& [k, c] : t.coeffs) {
    const auto l = unpack(k, 2);
    s += c * f.values[l[0]] * g.values[l[1]];
  }
  return s;
}

DoubleFunctional DoubleAlgebra::dual_multiply(const DoubleFunctional& f, const DoubleFunctional& g) const {
  check_same_group(f.group);
  check_same_group(g.group);
  DoubleFunctional r = functional_zero();
  for (int h = 0; h < n_; ++h)
    for (int x = 0; x < n_; ++x) {
      cplx s = 0;
      for (int sd = 0; sd < n_; ++sd) {
        const int t = g_->mul(g_->inv(sd), h);
        s += f.values[key(t, x)] * g.values[key(sd, x)];
      }
      r.values[key(h, x)] = s;
    }
  return r;
}

DoubleFunctional DoubleAlgebra::dual_unit() const {
  DoubleFunctional f = functional_zero();
  for (int g = 0; g < n_; ++g) f.values[key(0, g)] = 1.0;
  return f;
}

cplx DoubleAlgebra::dual_counit(const DoubleFunctional& f) const { return evaluate(f, one()); }

DoubleFunctional DoubleAlgebra::dual_antipode(const DoubleFunctional& f) const {
  DoubleFunctional r = functional_zero();
  for (int k = 0; k < dim(); ++k) r.values[k] = evaluate(f, antipode(DoubleElement{g_, {{k, 1.0}}}));
  return r;
}

Eigen::MatrixXcd DoubleAlgebra::factorizability_map(RVariant v) const {
  CMat m = CMat::Zero(dim(), dim());
  for (const auto& [k, c] : monodromy_q(v).coeffs) {
    const auto l = unpack(k, 2);
    m(l[1], l[0]) += c;
  }
  return m;
}

double max_abs_diff(const DoubleElement& a, const DoubleElement& b) {
  double m = 0;
  for (const auto& [k, c] : a.coeffs) m = std::max(m, std::abs(c - b.coeff(k)));
  for (const auto& [k, c] : b.coeffs)
    if (!a.coeffs.count(k)) m = std::max(m, std::abs(c));
  return m;
}

double max_abs_diff(const TensorElement& a, const TensorElement& b) {
  if (a.arity != b.arity) return std::numeric_limits<double>::infinity();
  double m = 0;
  for (const auto& [k, c] : a.coeffs) {
    auto it = b.coeffs.find(k);
    m = std::max(m, std::abs(c - (it == b.coeffs.end() ? cplx{} : it->second)));
  }
  for (const auto& [k, c] : b.coeffs)
    if (!a.coeffs.count(k)) m = std::max(m, std::abs(c));
  return m;
}

double max_abs_diff(const DoubleFunctional& a, const DoubleFunctional& b) {
  double m = 0;
  for (std::size_t i = 0; i < a.values.size(); ++i) m = std::max(m, std::abs(a.values[i] - b.values[i]));
  return m;
}

DoubleElement operator+(const DoubleElement& a, const DoubleElement& b) {
  DoubleElement r = a;
  for (const auto& [k, c] : b.coeffs) r.add(k, c);
  r.prune();
  return r;
}

DoubleElement operator-(const DoubleElement& a, const DoubleElement& b) { return a + cplx(-1.0) * b; }

DoubleElement operator*(cplx s, const DoubleElement& a) {
  DoubleElement r = a;
  for (auto& [k, c] : r.coeffs) c *= s;
  r.prune();
  return r;
}

TensorElement operator+(const TensorElement& a, const TensorElement& b) {
  TensorElement r = a;
  for (const auto& [k, c] : b.coeffs) r.add(k, c);
  r.prune();
  return r;
}

TensorElement operator*(cplx s, const TensorElement& a) {
  TensorElement r = a;
  for (auto& [k, c] : r.coeffs) c *= s;
  r.prune();
  return r;
}

}  // namespace dgd
