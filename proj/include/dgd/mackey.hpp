#pragma once

#include <Eigen/Dense>
#include <memory>
#include <vector>

#include "dgd/char_table.hpp"
#include "dgd/group.hpp"

namespace dgd {

/// Commuting pairs of a group together with their conjugation orbits.
struct PairSpace {
  GroupPtr group;
  CommutingPairOrbits orbits;
};
using PairSpacePtr = std::shared_ptr<const PairSpace>;

PairSpacePtr make_pair_space(GroupPtr g);

/// A function on commuting pairs, constant on simultaneous-conjugation orbits.
struct InvariantFunction {
  PairSpacePtr space;
  std::vector<cplx> values;  // one per orbit

  int order() const { return space->group->order(); }
  /// Value at (h,g); zero when h and g do not commute.
  cplx operator()(int h, int g) const;
  /// Values on all of G×G, row-major h*n+g.
  std::vector<cplx> dense() const;
};

InvariantFunction zero_function(const PairSpacePtr& space);

/// Projects a function on G×G onto invariant functions by orbit averaging.
/// If deviation is given it receives the largest distance of the input from
/// its projection (off-support values included).
InvariantFunction project_invariant(const PairSpacePtr& space, const std::vector<cplx>& dense,
                                    double* deviation = nullptr);

/// (1/|G|) Σ over commuting pairs of f conj(ψ).
cplx inner_product(const InvariantFunction& f, const InvariantFunction& psi);

/// Product of D(G): (f1·f2)(h,g) = Σ_x f1(h,x) f2(x^-1 h x, x^-1 g).
InvariantFunction dot_product(const InvariantFunction& f1, const InvariantFunction& f2);
/// Character product: (f1•f2)(h,g) = Σ_{st=h} f1(t,g) f2(s,g).
InvariantFunction bullet_product(const InvariantFunction& f1, const InvariantFunction& f2);

InvariantFunction operator+(const InvariantFunction& a, const InvariantFunction& b);
InvariantFunction operator-(const InvariantFunction& a, const InvariantFunction& b);
InvariantFunction operator*(cplx s, const InvariantFunction& a);
double max_abs_diff(const InvariantFunction& a, const InvariantFunction& b);

/// (conjugacy class, row of the centralizer character table)
struct MGLabel {
  int class_index = 0;
  int irrep_index = 0;
  bool operator==(const MGLabel&) const = default;
};

/// The simple D(G)-modules: labels, centralizer data and closed-form characters.
class DoubleIrreps {
 public:
  explicit DoubleIrreps(GroupPtr g);

  const GroupPtr& group() const { return g_; }
  const ConjugacyData& classes() const { return cd_; }
  const PairSpacePtr& space() const { return space_; }
  const std::vector<MGLabel>& labels() const { return labels_; }
  int size() const { return static_cast<int>(labels_.size()); }

  const CharacterTable& centralizer_table(int cls) const { return cent_tables_[cls]; }
  const ConjugacyData& centralizer_classes(int cls) const { return cent_cd_[cls]; }

  int module_dim(int label) const;
  int index_of(const MGLabel& l) const;  // -1 if absent

  /// χ_ρ at an element of C_G(g_O) given by its global index.
  cplx centralizer_trace(int cls, int irrep, int global) const;

  /// χ(h,g) using conjugator x (x g_O x^-1 must equal h).
  cplx character_value(int label, int h, int g, int x) const;
  /// χ(h,g) with the first conjugator in index order; 0 off the support.
  cplx character_value(int label, int h, int g) const;
  InvariantFunction character(int label) const;

  /// Label for (O_{l^-1}, ρ transported); matches f(h,g) -> f(h^-1,g).
  int inverse_class_label(int label) const;
  /// Label for (O_l, ρ*); matches f(h,g) -> f(h,g^-1).
  int dual_irrep_label(int label) const;

  /// Largest spread of χ(h,g) over all admissible conjugators.
  double well_definedness_deviation() const;

 private:
  int find_irrep(int cls, const std::vector<cplx>& values_on_elements) const;

  GroupPtr g_;
  ConjugacyData cd_;
  PairSpacePtr space_;
  std::vector<ConjugacyData> cent_cd_;
  std::vector<CharacterTable> cent_tables_;
  std::vector<MGLabel> labels_;
};

struct OrthonormalityReport {
  double gram_deviation = 0.0;        // max |⟨χ_i,χ_j⟩ - δ_ij|
  double dot_identity_deviation = 0.0;  // χ_i·χ_j vs δ_ij |G|/(|O|dim ρ) χ_i
  double unit_dimension_deviation = 0.0;  // χ at the unit of D(G) vs |O| dim ρ
  bool pass = true;
};

OrthonormalityReport verify_character_orthonormality(const DoubleIrreps& irr, double tol = kDefaultTol);

// Explicit modules

/// Unitary matrices of one irreducible representation of a group, one per
/// element (local indices), from the isotypic block of the regular representation.
std::vector<Eigen::MatrixXcd> centralizer_irrep_matrices(const FiniteGroup& c, const CharacterTable& table,
                                                         const ConjugacyData& cd, int irrep,
                                                         std::uint64_t seed = kDefaultSeed);

struct DoubleModule {
  GroupPtr group;
  int dim = 0;
  std::vector<int> grading;               // degree of each basis vector
  std::vector<Eigen::MatrixXcd> action;   // one matrix per group element
};

/// Induced module kG ⊗_{kC} V_ρ with minimal-index coset representatives.
DoubleModule induce_module(const DoubleIrreps& irr, int label, std::uint64_t seed = kDefaultSeed);

/// One-dimensional module with a given degree and character of its group element
/// action (used for fixtures and the unit object).
DoubleModule trivial_module(GroupPtr g);

struct ModuleReport {
  double homomorphism_deviation = 0.0;
  double grading_deviation = 0.0;  // weight of g·V_h outside V_{ghg^-1}
  double unitarity_deviation = 0.0;
  bool pass = true;
};
ModuleReport verify_module(const DoubleModule& m, double tol = kDefaultTol);

/// χ(h,g) = trace of g on V_h, for every pair (row-major).
std::vector<cplx> module_character(const DoubleModule& m);

/// Matrix of δ_h g acting on the module.
Eigen::MatrixXcd element_action(const DoubleModule& m, int h, int g);
/// Matrix of Δ(δ_h g) on V⊗W.
Eigen::MatrixXcd tensor_action(const DoubleModule& v, const DoubleModule& w, int h, int g);

/// c(v⊗w) = w ⊗ h·v for w of degree h; maps V⊗W to W⊗V.
Eigen::MatrixXcd braiding_matrix(const DoubleModule& v, const DoubleModule& w);

/// max over basis δ_h g of |c Δ_{V⊗W}(δ_h g) - Δ_{W⊗V}(δ_h g) c|
double braiding_naturality_deviation(const DoubleModule& v, const DoubleModule& w);
/// |(c⊗1)(1⊗c)(c⊗1) - (1⊗c)(c⊗1)(1⊗c)| on V⊗V⊗V
double yang_baxter_deviation(const Eigen::MatrixXcd& c, int d);

// Quantum symmetrizer

struct NicholsResult {
  std::vector<int> dims;            // degrees 1..n_max
  double word_independence = 0.0;   // max |M(σ) - M'(σ)| between the two word families
};

/// Ranks of Σ_σ M(σ) for a braiding c on C^d ⊗ C^d. Throws InputError when
/// d^n exceeds limit.
NicholsResult nichols_degree_dims(const Eigen::MatrixXcd& c, int d, int n_max, int limit = 256);

Eigen::MatrixXcd flip_braiding(int d, double sign = 1.0);

}  // namespace dgd
