#pragma once

#include <string>
#include <vector>

#include "dgd/group.hpp"

namespace dgd {

/// Class multiplication coefficients a(i,j,k) = #{(x,y) in O_i x O_j : xy = g_k}.
class ClassAlgebra {
 public:
  explicit ClassAlgebra(const FiniteGroup& g, const ConjugacyData& cd);

  int rank() const { return r_; }
  int operator()(int i, int j, int k) const {
    return a_[(static_cast<std::size_t>(i) * r_ + j) * r_ + k];
  }

 private:
  int r_;
  std::vector<int> a_;
};

struct CharacterTable {
  int order = 0;
  std::vector<int> class_sizes;
  std::vector<int> class_reps;
  std::vector<std::vector<cplx>> values;  // values[irrep][class]
  std::vector<int> dims;

  int size() const { return static_cast<int>(dims.size()); }
  cplx operator()(int irrep, int cls) const { return values[irrep][cls]; }
};

/// Irreducible characters by simultaneous diagonalization of the class-sum
/// matrices. Rows: ascending degree, then descending lexicographic order of
/// the rounded values (this places the trivial character first).
CharacterTable character_table(const FiniteGroup& g, const ConjugacyData& cd);

struct OrthogonalityReport {
  double row_deviation = 0.0;
  double column_deviation = 0.0;
  bool pass = true;
  std::string worst;  // location of the largest violation
};

OrthogonalityReport verify_orthogonality(const CharacterTable& t, double tol = kDefaultTol);

/// "a+bi" with 12 significant digits; -0 is printed as 0.
std::string format_complex(cplx z);

/// Header of class representatives, then one row per irreducible character.
std::string character_table_csv(const CharacterTable& t);

}  // namespace dgd
