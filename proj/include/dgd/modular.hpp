#pragma once

#include <Eigen/Dense>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "dgd/double_algebra.hpp"
#include "dgd/mackey.hpp"

namespace dgd {

enum class ActionKind { dot, dotprime };

/// Integer 2×2 matrix (a b; c d).
struct GL2 {
  long long a = 1, b = 0, c = 0, d = 1;

  GL2 operator*(const GL2& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
  }
  bool operator==(const GL2&) const = default;
  long long det() const { return a * d - b * c; }
};

/// s, t, j1, j2 and their inverses (s^-1 etc.).
GL2 generator(const std::string& name);
/// Product of generator tokens, e.g. "s t^-1 s^4 j1"; separators are spaces or '*'.
/// An empty word is the identity. Throws InputError on unknown tokens.
GL2 parse_word(const std::string& word);

/// (A·'f)(h,g) = f(h^a g^c, h^b g^d); the · action is A· = (j2 A j2)·'.
/// invariance receives the distance of the raw result from an invariant function.
InvariantFunction act(const GL2& m, const InvariantFunction& f, ActionKind kind = ActionKind::dotprime,
                      double* invariance = nullptr);

/// 𝒮 = s^-1 under the ·' action: (𝒮f)(h,g) = f(g,h^-1).
InvariantFunction modular_s(const InvariantFunction& f);
InvariantFunction modular_s_inverse(const InvariantFunction& f);

/// f(h,g) -> f(g,h)
InvariantFunction swap_arguments(const InvariantFunction& f);

InvariantFunction random_invariant(const PairSpacePtr& space, std::mt19937_64& rng);

struct ModularData {
  std::vector<MGLabel> labels;
  std::vector<int> dims;
  Eigen::MatrixXcd S;   // 𝒮 in the character basis
  Eigen::MatrixXcd T;   // t in the character basis
  Eigen::MatrixXcd FT;  // Lusztig's pairing matrix
  double t_offdiagonal = 0.0;
};

/// Matrix ⟨op χ_j, χ_i⟩ of an operator on invariant functions.
Eigen::MatrixXcd operator_matrix(const std::vector<InvariantFunction>& chars,
                                 const std::function<InvariantFunction(const InvariantFunction&)>& op,
                                 Exec exec = Exec::parallel);

Eigen::MatrixXcd lusztig_fourier_matrix(const DoubleIrreps& irr, Exec exec = Exec::parallel);

/// Throws NumericalError if T is not diagonal.
ModularData modular_data(const DoubleIrreps& irr, Exec exec = Exec::parallel);

struct FusionTable {
  int rank = 0;
  std::vector<int> N;     // N[(i*rank + j)*rank + k]
  double residual = 0.0;  // largest distance of a raw coefficient from its integer

  int operator()(int i, int j, int k) const { return N[(static_cast<std::size_t>(i) * rank + j) * rank + k]; }
};

/// N(i,j,k) = ⟨χ_i • χ_j, χ_k⟩. Throws NumericalError if the residual exceeds 1e-6.
FusionTable fusion_bruteforce(const DoubleIrreps& irr, Exec exec = Exec::parallel);
/// N(i,j,k) = Σ_m S_mi S_mj conj(S_mk) / S_m0. Throws NumericalError on a
/// vanishing denominator or a residual above 1e-6.
FusionTable verlinde_fusion(const ModularData& md, Exec exec = Exec::parallel);

struct FusionRingReport {
  bool nonnegative = true;
  bool unit = true;
  bool commutative = true;
  bool associative = true;
  bool dimension_homomorphism = true;
  bool pass() const { return nonnegative && unit && commutative && associative && dimension_homomorphism; }
};
FusionRingReport check_fusion_ring(const FusionTable& f, const std::vector<int>& dims);

/// Index of the first differing entry, or -1.
long long first_mismatch(const FusionTable& a, const FusionTable& b);

struct IdentityCheck {
  std::string name;
  double deviation = 0.0;
  bool pass = true;
  bool asserted = true;  // informational entries are recorded but never fail
};

struct ModularReport {
  std::vector<IdentityCheck> checks;
  bool pass() const;
  double max_deviation() const;
};

struct ModularOptions {
  double tol = kDefaultTol;
  std::uint64_t seed = kDefaultSeed;
  int samples = 100;
  Exec exec = Exec::parallel;
  bool hopf_level = true;  // cross-check s and t against D(G) structure maps
};

ModularReport verify_modular_identities(const DoubleIrreps& irr, const ModularData& md,
                                        const ModularOptions& opt = {});

}  // namespace dgd
