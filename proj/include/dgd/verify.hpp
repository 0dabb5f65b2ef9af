#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dgd/double_algebra.hpp"

namespace dgd {

struct CheckResult {
  std::string suite;
  std::string check;
  double max_deviation = 0.0;
  bool pass = true;
  bool skipped = false;   // size guard tripped; not counted as a failure
  std::string witness;    // where the largest deviation occurred
};

struct SuiteReport {
  std::vector<CheckResult> checks;

  bool pass() const;
  double max_deviation() const;  // over checks that ran
  void append(const SuiteReport& o);
};

struct VerifyOptions {
  double tol = kDefaultTol;
  int triple_limit = 12;  // largest |G| for checks living in D(G)^{⊗3}
  Exec exec = Exec::parallel;
  std::uint64_t seed = kDefaultSeed;
};

/// Replacement structure used to confirm the verifiers can fail.
struct StructureOverride {
  std::optional<TensorElement> r_matrix;  // replaces the standard R
};

/// bialgebra, hopf, quasitriangular, ybe, ribbon, antireal, star, closed_form
const std::vector<std::string>& suite_names();

/// Runs one suite, or every suite for "all". Throws InputError on an unknown name.
SuiteReport verify_axioms(const DoubleAlgebra& alg, const std::string& suite,
                          const VerifyOptions& opt = {}, const StructureOverride* over = nullptr);

/// Human-readable label of a basis element, e.g. "d_3 1".
std::string basis_label(const DoubleAlgebra& alg, int key);

}  // namespace dgd
