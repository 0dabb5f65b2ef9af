#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "dgd/group.hpp"

namespace dgd {

/// Sparse element of D(G) over the basis δ_h g, keyed by h*n + g.
struct DoubleElement {
  GroupPtr group;
  std::map<int, cplx> coeffs;

  void add(int key, cplx c);
  void prune();
  cplx coeff(int key) const;
};

/// Sparse element of D(G)^{⊗2} or D(G)^{⊗3}; key packs one basis index per leg.
struct TensorElement {
  GroupPtr group;
  int arity = 2;
  std::map<std::int64_t, cplx> coeffs;

  void add(std::int64_t key, cplx c);
  void prune();
};

/// A linear functional on D(G); values[h*n + g] is its value on δ_h g.
struct DoubleFunctional {
  GroupPtr group;
  std::vector<cplx> values;
};

enum class RVariant { standard, primed };

/// D(G) with its Hopf, quasitriangular, ribbon and star structure, realized
/// with the basis δ_h g and product (δ_h g)(δ_t l) = [g^-1 h g = t] δ_h gl.
class DoubleAlgebra {
 public:
  explicit DoubleAlgebra(GroupPtr g);

  const GroupPtr& group() const { return g_; }
  int order() const { return n_; }
  int dim() const { return n_ * n_; }
  int key(int h, int g) const { return h * n_ + g; }
  int degree(int key) const { return key / n_; }  // the δ part
  int elem(int key) const { return key % n_; }    // the group part

  /// Product of two basis elements: its basis key, or -1 when it vanishes.
  int basis_product(int a, int b) const {
    const int h = a / n_, g = a % n_, t = b / n_, l = b % n_;
    return conj_inv_[static_cast<std::size_t>(g) * n_ + h] == t ? h * n_ + g_->mul(g, l) : -1;
  }

  std::int64_t pack(int a, int b) const { return static_cast<std::int64_t>(a) * dim() + b; }
  std::int64_t pack(int a, int b, int c) const {
    return (static_cast<std::int64_t>(a) * dim() + b) * dim() + c;
  }
  std::vector<int> unpack(std::int64_t k, int arity) const;

  // Elements
  DoubleElement zero() const;
  DoubleElement basis(int h, int g) const;
  DoubleElement one() const;                 // Σ_h δ_h 1
  DoubleElement group_element(int g) const;  // Σ_h δ_h g
  DoubleElement delta(int h) const;          // δ_h 1

  // Structure maps
  DoubleElement multiply(const DoubleElement& x, const DoubleElement& y) const;
  TensorElement coproduct(const DoubleElement& x) const;
  DoubleElement antipode(const DoubleElement& x) const;
  cplx counit(const DoubleElement& x) const;
  DoubleElement star(const DoubleElement& x) const;

  // Tensors
  TensorElement tensor(const DoubleElement& x, const DoubleElement& y) const;
  TensorElement tensor(const DoubleElement& x, const DoubleElement& y, const DoubleElement& z) const;
  TensorElement unit_tensor(int arity) const;
  TensorElement multiply(const TensorElement& x, const TensorElement& y) const;
  TensorElement flip(const TensorElement& t) const;  // τ on arity 2
  /// Places a 2-tensor on legs (a,b) of a 3-tensor, unit on the remaining leg.
  TensorElement embed(const TensorElement& t, int a, int b) const;
  TensorElement coproduct_on_leg(const TensorElement& t, int leg) const;
  TensorElement antipode_on_leg(const TensorElement& t, int leg) const;
  TensorElement star_each_leg(const TensorElement& t) const;
  /// m: D⊗D → D on a 2-tensor.
  DoubleElement contract(const TensorElement& t) const;
  /// (id⊗ε) or (ε⊗id) on a 2-tensor.
  DoubleElement counit_on_leg(const TensorElement& t, int leg) const;

  // Distinguished elements
  TensorElement r_matrix(RVariant v) const;
  /// R^-1 = (S⊗id)(R) for the standard R; (τR) for the primed one.
  TensorElement r_inverse(RVariant v) const;
  /// m(S⊗id)(τR)
  DoubleElement drinfeld_u_from_r(RVariant v) const;
  /// Σ δ_{g^-1} g (standard) or Σ δ_g g (primed).
  DoubleElement drinfeld_u(RVariant v) const;
  DoubleElement ribbon_v(RVariant v) const { return drinfeld_u(v); }
  /// Closed forms: Q = Σ δ_a b ⊗ δ_{aba^-1} a, Q' = Σ δ_{hg^-1h^-1} h ⊗ δ_{h^-1} g.
  TensorElement monodromy_q(RVariant v) const;
  /// (τR)·R by sparse multiplication.
  TensorElement monodromy_from_r(RVariant v) const;
  /// Closed form Σ δ_h g ⊗ δ_{g^-1} g^-1 h^-1 g, which is Q^-1 (= Q').
  TensorElement monodromy_inverse_closed() const;

  /// One orbit sum Σ_l δ_{lhl^-1} lgl^-1 per orbit of commuting pairs.
  std::vector<DoubleElement> center_basis(const CommutingPairOrbits& orbits) const;
  /// Dimension of {x : xb = bx for all b}, from the linear centering equations.
  int centralizer_dimension() const;

  /// Two-sided integral, normalized so its first nonzero coefficient is 1.
  /// Throws NumericalError if the solution space is not one-dimensional.
  DoubleElement integral() const;

  // Dual algebra D(G)*
  DoubleFunctional haar_functional() const;  // δ_h g -> [g = 1]
  DoubleFunctional functional_zero() const;
  cplx evaluate(const DoubleFunctional& f, const DoubleElement& x) const;
  cplx evaluate(const DoubleFunctional& f, const DoubleFunctional& g, const TensorElement& t) const;
  DoubleFunctional dual_multiply(const DoubleFunctional& f, const DoubleFunctional& g) const;
  DoubleFunctional dual_unit() const;                   // ε
  cplx dual_counit(const DoubleFunctional& f) const;    // f(1)
  DoubleFunctional dual_antipode(const DoubleFunctional& f) const;

  /// Matrix of ζ ↦ (ζ⊗id)Q from delta functionals to basis elements.
  Eigen::MatrixXcd factorizability_map(RVariant v = RVariant::standard) const;

  void check_same_group(const GroupPtr& other) const;

 private:
  GroupPtr g_;
  int n_;
  std::vector<int> conj_inv_;  // [g*n + h] = g^-1 h g
};

double max_abs_diff(const DoubleElement& a, const DoubleElement& b);
double max_abs_diff(const TensorElement& a, const TensorElement& b);
double max_abs_diff(const DoubleFunctional& a, const DoubleFunctional& b);

DoubleElement operator+(const DoubleElement& a, const DoubleElement& b);
DoubleElement operator-(const DoubleElement& a, const DoubleElement& b);
DoubleElement operator*(cplx s, const DoubleElement& a);
TensorElement operator+(const TensorElement& a, const TensorElement& b);
TensorElement operator*(cplx s, const TensorElement& a);

/// Orthonormal basis of the null space of a Hermitian positive semidefinite
/// Gram matrix (eigenvalues below rel_tol * largest count as zero).
Eigen::MatrixXcd gram_null_space(const Eigen::MatrixXcd& gram, double rel_tol = 1e-10);

}  // namespace dgd
