#pragma once

#include <json.hpp>
#include <string>

#include "dgd/mackey.hpp"
#include "dgd/modular.hpp"
#include "dgd/verify.hpp"

namespace dgd {

using Json = nlohmann::ordered_json;

inline constexpr const char* kModularFormat = "dgd-modular-v1";

/// Rounds to 12 significant digits and maps -0 and |x| < 5e-13 to 0.
double clean_number(double x);
/// [re, im], both cleaned.
Json complex_json(cplx z);
Json matrix_json(const Eigen::MatrixXcd& m);

Json group_json(const FiniteGroup& g, const ConjugacyData& cd, const CommutingPairOrbits& orbits);
Json axiom_report_json(const SuiteReport& rep);
Json label_json(const DoubleIrreps& irr, int label);
/// Rows = labels, columns = commuting-pair orbit representatives.
Json irreps_json(const DoubleIrreps& irr);
Json fusion_json(const FusionTable& f);
Json modular_json(const std::string& group_name, const DoubleIrreps& irr, const ModularData& md);
Json modular_report_json(const ModularReport& rep);

std::string matrix_csv(const Eigen::MatrixXcd& m);
/// Nonzero coefficients as i,j,k,N.
std::string fusion_csv(const FusionTable& f);
std::string irreps_csv(const DoubleIrreps& irr);

}  // namespace dgd
