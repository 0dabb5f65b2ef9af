#include "dgd/export.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace dgd {

double clean_number(double x) {
  if (!std::isfinite(x)) return x;
  if (std::abs(x) < 5e-13) return 0.0;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  const double r = std::strtod(buf, nullptr);
  return r == 0.0 ? 0.0 : r;
}

Json complex_json(cplx z) { return Json::array({clean_number(z.real()), clean_number(z.imag())}); }

Json matrix_json(const Eigen::MatrixXcd& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(complex_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json group_json(const FiniteGroup& g, const ConjugacyData& cd, const CommutingPairOrbits& orbits) {
  Json classes = Json::array();
  for (int c = 0; c < cd.num_classes(); ++c)
    classes.push_back({{"representative", cd.reps[c]},
                       {"size", cd.class_size(c)},
                       {"centralizer_order", cd.centralizers[c].group->order()}});
  return {{"group", g.name()},
          {"order", g.order()},
          {"num_classes", cd.num_classes()},
          {"classes", classes},
          {"commuting_pairs", orbits.pairs.size()},
          {"commuting_pair_orbits", orbits.num_orbits()}};
}

Json axiom_report_json(const SuiteReport& rep) {
  Json checks = Json::array();
  for (const auto& c : rep.checks) {
    Json j{{"suite", c.suite},
           {"check", c.check},
           {"max_deviation", clean_number(c.max_deviation)},
           {"pass", c.pass},
           {"skipped", c.skipped}};
    if (!c.witness.empty()) j["witness"] = c.witness;
    checks.push_back(std::move(j));
  }
  return {{"pass", rep.pass()}, {"max_deviation", clean_number(rep.max_deviation())}, {"checks", checks}};
}

Json label_json(const DoubleIrreps& irr, int label) {
  const MGLabel l = irr.labels()[label];
  return {{"index", label},
          {"class", l.class_index},
          {"class_representative", irr.classes().reps[l.class_index]},
          {"irrep", l.irrep_index},
          {"dim", irr.module_dim(label)}};
}

Json irreps_json(const DoubleIrreps& irr) {
  Json cols = Json::array();
  for (const auto& [h, g] : irr.space()->orbits.reps) cols.push_back(Json::array({h, g}));
  Json rows = Json::array();
  long long sum_sq = 0;
  for (int i = 0; i < irr.size(); ++i) {
    Json row = label_json(irr, i);
    Json vals = Json::array();
    for (const auto& v : irr.character(i).values) vals.push_back(complex_json(v));
    row["values"] = std::move(vals);
    rows.push_back(std::move(row));
    sum_sq += static_cast<long long>(irr.module_dim(i)) * irr.module_dim(i);
  }
  return {{"group", irr.group()->name()},
          {"num_labels", irr.size()},
          {"sum_dim_squared", sum_sq},
          {"columns", cols},
          {"rows", rows}};
}

Json fusion_json(const FusionTable& f) {
  Json n = Json::array();
  for (int i = 0; i < f.rank; ++i) {
    Json a = Json::array();
    for (int j = 0; j < f.rank; ++j) {
      Json b = Json::array();
      for (int k = 0; k < f.rank; ++k) b.push_back(f(i, j, k));
      a.push_back(std::move(b));
    }
    n.push_back(std::move(a));
  }
  return {{"rank", f.rank}, {"residual", clean_number(f.residual)}, {"N", n}};
}

Json modular_json(const std::string& group_name, const DoubleIrreps& irr, const ModularData& md) {
  Json labels = Json::array();
  for (int i = 0; i < irr.size(); ++i) labels.push_back(label_json(irr, i));
  return {{"format", kModularFormat}, {"group", group_name}, {"labels", labels},
          {"S", matrix_json(md.S)},   {"T", matrix_json(md.T)},  {"FT", matrix_json(md.FT)}};
}

Json modular_report_json(const ModularReport& rep) {
  Json checks = Json::array();
  for (const auto& c : rep.checks)
    checks.push_back(
        {{"check", c.name}, {"deviation", clean_number(c.deviation)}, {"pass", c.pass}, {"asserted", c.asserted}});
  return {{"pass", rep.pass()}, {"max_deviation", clean_number(rep.max_deviation())}, {"checks", checks}};
}

std::string matrix_csv(const Eigen::MatrixXcd& m) {
  std::string out;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j) out += ",";
      out += format_complex(m(i, j));
    }
    out += "\n";
  }
  return out;
}

std::string fusion_csv(const FusionTable& f) {
  std::string out = "i,j,k,N\n";
  for (int i = 0; i < f.rank; ++i)
    for (int j = 0; j < f.rank; ++j)
      for (int k = 0; k < f.rank; ++k)
        if (f(i, j, k))
          out += std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + "," +
                 std::to_string(f(i, j, k)) + "\n";
  return out;
}

std::string irreps_csv(const DoubleIrreps& irr) {
  std::string out = "label,class,irrep,dim";
  for (const auto& [h, g] : irr.space()->orbits.reps) out += ",(" + std::to_string(h) + ";" + std::to_string(g) + ")";
  out += "\n";
  for (int i = 0; i < irr.size(); ++i) {
    const MGLabel l = irr.labels()[i];
    out += std::to_string(i) + "," + std::to_string(l.class_index) + "," + std::to_string(l.irrep_index) + "," +
           std::to_string(irr.module_dim(i));
    for (const auto& v : irr.character(i).values) out += "," + format_complex(v);
    out += "\n";
  }
  return out;
}

}  // namespace dgd
