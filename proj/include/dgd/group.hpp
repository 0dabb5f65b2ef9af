#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dgd/types.hpp"

namespace dgd {

/// Soft upper bound on supported group orders.
inline constexpr int kDefaultMaxOrder = 64;

/// A finite group given by its Cayley table. Elements are the dense indices
/// 0..n-1 and element 0 is always the identity.
class FiniteGroup {
 public:
  /// Takes a table whose identity is already element 0. Throws InputError if
  /// any group axiom fails.
  FiniteGroup(std::vector<int> cayley, int order, std::string name);

  int order() const { return n_; }
  int identity() const { return 0; }
  const std::string& name() const { return name_; }

  int mul(int a, int b) const { return cayley_[static_cast<std::size_t>(a) * n_ + b]; }
  int inv(int a) const { return inverse_[a]; }
  /// x a x^-1
  int conj(int x, int a) const { return mul(mul(x, a), inverse_[x]); }
  int pow(int a, long long e) const;
  bool commute(int a, int b) const { return mul(a, b) == mul(b, a); }

  const std::vector<int>& cayley() const { return cayley_; }
  const std::vector<int>& inverses() const { return inverse_; }

 private:
  int n_;
  std::vector<int> cayley_;
  std::vector<int> inverse_;
  std::string name_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

struct AxiomViolation {
  std::string axiom;
  std::vector<int> witness;  // offending indices, e.g. a triple for associativity
  std::string message;
};

struct ValidationReport {
  bool pass = true;
  std::optional<int> identity;  // detected identity element, if any
  std::vector<AxiomViolation> violations;
};

/// Checks the group axioms on a row-major n×n table. Never throws.
ValidationReport validate_group(const std::vector<int>& table, int n);

/// Parses a Cayley-table file (first line n, then n rows) and re-indexes so
/// the identity becomes element 0.
FiniteGroup load_cayley_file(const std::string& path);
FiniteGroup parse_cayley_text(const std::string& text, const std::string& name);

FiniteGroup cyclic_group(int n);
FiniteGroup dihedral_group(int n);  // symmetries of the n-gon, order 2n
FiniteGroup symmetric_group(int n);
FiniteGroup alternating_group(int n);
FiniteGroup quaternion_group();
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

/// Builds a group from the CLI mini-grammar: cyclic:n, dihedral:n, sym:n,
/// alt:n, q8, prod(a,b), file:path, and the short aliases Cn, Dn, Sn, An, Q8.
FiniteGroup build_group(const std::string& spec, int max_order = kDefaultMaxOrder);
/// Specs of the builtin groups, ascending order, from the trivial group up to S4.
const std::vector<std::string>& builtin_specs();

struct Centralizer {
  std::vector<int> elements;  // sorted global indices; elements[0] == identity
  std::vector<int> local_of;  // global -> local index, -1 outside
  GroupPtr group;             // induced structure on local indices
};

struct ConjugacyData {
  std::vector<std::vector<int>> classes;  // each sorted; ordered by representative
  std::vector<int> reps;                  // minimal element of each class
  std::vector<int> class_of;              // element -> class
  std::vector<Centralizer> centralizers;  // one per class, of reps[c]

  int num_classes() const { return static_cast<int>(reps.size()); }
  int class_size(int c) const { return static_cast<int>(classes[c].size()); }
};

ConjugacyData conjugacy_classes(const FiniteGroup& g);

struct CommutingPairOrbits {
  std::vector<std::pair<int, int>> pairs;  // all commuting (h,g), h-major order
  std::vector<std::vector<int>> orbits;    // indices into pairs
  std::vector<int> orbit_of;               // h*n+g -> orbit, -1 if h,g do not commute
  std::vector<std::pair<int, int>> reps;   // first pair of each orbit

  int num_orbits() const { return static_cast<int>(orbits.size()); }
};

CommutingPairOrbits commuting_pair_orbits(const FiniteGroup& g);

}  // namespace dgd
