#include "dgd/mackey.hpp"

#include <algorithm>
#include <cmath>

namespace dgd {

PairSpacePtr make_pair_space(GroupPtr g) {
  auto orbits = commuting_pair_orbits(*g);
  return std::make_shared<const PairSpace>(PairSpace{std::move(g), std::move(orbits)});
}

cplx InvariantFunction::operator()(int h, int g) const {
  const int n = order();
  const int o = space->orbits.orbit_of[static_cast<std::size_t>(h) * n + g];
  return o < 0 ? cplx{} : values[o];
}

std::vector<cplx> InvariantFunction::dense() const {
  const int n = order();
  std::vector<cplx> d(static_cast<std::size_t>(n) * n);
  for (std::size_t k = 0; k < d.size(); ++k) {
    const int o = space->orbits.orbit_of[k];
    if (o >= 0) d[k] = values[o];
  }
  return d;
}

InvariantFunction zero_function(const PairSpacePtr& space) {
  return InvariantFunction{space, std::vector<cplx>(space->orbits.num_orbits())};
}

InvariantFunction project_invariant(const PairSpacePtr& space, const std::vector<cplx>& dense,
                                    double* deviation) {
  const int n = space->group->order();
  const auto& orb = space->orbits;
  InvariantFunction f = zero_function(space);
  for (int o = 0; o < orb.num_orbits(); ++o) {
    cplx s = 0;
    for (int p : orb.orbits[o]) {
      const auto [h, g] = orb.pairs[p];
      s += dense[static_cast<std::size_t>(h) * n + g];
    }
    f.values[o] = s / double(orb.orbits[o].size());
  }
  if (deviation) {
    double m = 0;
    for (std::size_t k = 0; k < dense.size(); ++k) {
      const int o = orb.orbit_of[k];
      m = std::max(m, std::abs(dense[k] - (o < 0 ? cplx{} : f.values[o])));
    }
    *deviation = m;
  }
  return f;
}

cplx inner_product(const InvariantFunction& f, const InvariantFunction& psi) {
  const auto& orb = f.space->orbits;
  cplx s = 0;
  for (int o = 0; o < orb.num_orbits(); ++o)
    s += double(orb.orbits[o].size()) * f.values[o] * std::conj(psi.values[o]);
  return s / double(f.order());
}

InvariantFunction dot_product(const InvariantFunction& f1, const InvariantFunction& f2) {
  const FiniteGroup& G = *f1.space->group;
  InvariantFunction r = zero_function(f1.space);
  const auto& reps = f1.space->orbits.reps;
  for (std::size_t o = 0; o < reps.size(); ++o) {
    const auto [h, g] = reps[o];
    cplx s = 0;
    for (int x = 0; x < G.order(); ++x) {
      const int xi = G.inv(x);
      s += f1(h, x) * f2(G.conj(xi, h), G.mul(xi, g));
    }
    r.values[o] = s;
  }
  return r;
}

InvariantFunction bullet_product(const InvariantFunction& f1, const InvariantFunction& f2) {
  const FiniteGroup& G = *f1.space->group;
  InvariantFunction r = zero_function(f1.space);
  const auto& reps = f1.space->orbits.reps;
  for (std::size_t o = 0; o < reps.size(); ++o) {
    const auto [h, g] = reps[o];
    cplx sum = 0;
    for (int s = 0; s < G.order(); ++s) sum += f1(G.mul(G.inv(s), h), g) * f2(s, g);
    r.values[o] = sum;
  }
  return r;
}

InvariantFunction operator+(const InvariantFunction& a, const InvariantFunction& b) {
  InvariantFunction r = a;
  for (std::size_t i = 0; i < r.values.size(); ++i) r.values[i] += b.values[i];
  return r;
}

InvariantFunction operator-(const InvariantFunction& a, const InvariantFunction& b) {
  InvariantFunction r = a;
  for (std::size_t i = 0; i < r.values.size(); ++i) r.values[i] -= b.values[i];
  return r;
}

InvariantFunction operator*(cplx s, const InvariantFunction& a) {
  InvariantFunction r = a;
  for (auto& v : r.values) v *= s;
  return r;
}

double max_abs_diff(const InvariantFunction& a, const InvariantFunction& b) {
  double m = 0;
  for (std::size_t i = 0; i < a.values.size(); ++i) m = std::max(m, std::abs(a.values[i] - b.values[i]));
  return m;
}

DoubleIrreps::DoubleIrreps(GroupPtr g) : g_(std::move(g)), cd_(conjugacy_classes(*g_)), space_(make_pair_space(g_)) {
  for (int c = 0; c < cd_.num_classes(); ++c) {
    const FiniteGroup& cg = *cd_.centralizers[c].group;
    cent_cd_.push_back(conjugacy_classes(cg));
    cent_tables_.push_back(character_table(cg, cent_cd_.back()));
    for (int i = 0; i < cent_tables_.back().size(); ++i) labels_.push_back({c, i});
  }
}

int DoubleIrreps::module_dim(int label) const {
  const auto& l = labels_[label];
  return cd_.class_size(l.class_index) * cent_tables_[l.class_index].dims[l.irrep_index];
}

int DoubleIrreps::index_of(const MGLabel& l) const {
  auto it = std::find(labels_.begin(), labels_.end(), l);
  return it == labels_.end() ? -1 : static_cast<int>(it - labels_.begin());
}

cplx DoubleIrreps::centralizer_trace(int cls, int irrep, int global) const {
  const int local = cd_.centralizers[cls].local_of[global];
  if (local < 0) throw std::invalid_argument("element outside the centralizer");
  return cent_tables_[cls](irrep, cent_cd_[cls].class_of[local]);
}

cplx DoubleIrreps::character_value(int label, int h, int g, int x) const {
  const auto& lab = labels_[label];
  const int l = cd_.reps[lab.class_index];
  if (g_->conj(x, l) != h) throw std::invalid_argument("conjugator does not map the representative to h");
  const int y = g_->conj(g_->inv(x), g);  // x^-1 g x
  if (cd_.centralizers[lab.class_index].local_of[y] < 0) return 0.0;
  return centralizer_trace(lab.class_index, lab.irrep_index, y);
}

cplx DoubleIrreps::character_value(int label, int h, int g) const {
  const auto& lab = labels_[label];
  if (cd_.class_of[h] != lab.class_index || !g_->commute(h, g)) return 0.0;
  const int l = cd_.reps[lab.class_index];
  for (int x = 0; x < g_->order(); ++x)
    if (g_->conj(x, l) == h) return character_value(label, h, g, x);
  return 0.0;  // unreachable: h is in the class of l
}

InvariantFunction DoubleIrreps::character(int label) const {
  InvariantFunction f = zero_function(space_);
  const auto& reps = space_->orbits.reps;
  for (std::size_t o = 0; o < reps.size(); ++o) f.values[o] = character_value(label, reps[o].first, reps[o].second);
  return f;
}

int DoubleIrreps::find_irrep(int cls, const std::vector<cplx>& values) const {
  const auto& t = cent_tables_[cls];
  const auto& ccd = cent_cd_[cls];
  for (int i = 0; i < t.size(); ++i) {
    bool ok = true;
    for (std::size_t e = 0; e < values.size() && ok; ++e) ok = std::abs(t(i, ccd.class_of[e]) - values[e]) < 1e-7;
    if (ok) return index_of({cls, i});
  }
  throw NumericalError("transported character is not irreducible");
}

int DoubleIrreps::inverse_class_label(int label) const {
  const auto& lab = labels_[label];
  const int l = cd_.reps[lab.class_index];
  const int li = g_->inv(l);
  const int cls = cd_.class_of[li];
  const int rep = cd_.reps[cls];
  int y = 0;
  while (g_->conj(y, li) != rep) ++y;
  const auto& target = cd_.centralizers[cls].elements;
  std::vector<cplx> vals;
  for (int c : target) vals.push_back(centralizer_trace(lab.class_index, lab.irrep_index, g_->conj(g_->inv(y), c)));
  return find_irrep(cls, vals);
}

int DoubleIrreps::dual_irrep_label(int label) const {
  const auto& lab = labels_[label];
  std::vector<cplx> vals;
  for (int c : cd_.centralizers[lab.class_index].elements)
    vals.push_back(std::conj(centralizer_trace(lab.class_index, lab.irrep_index, c)));
  return find_irrep(lab.class_index, vals);
}

double DoubleIrreps::well_definedness_deviation() const {
  double m = 0;
  const int n = g_->order();
  for (int label = 0; label < size(); ++label) {
    const int cls = labels_[label].class_index;
    const int l = cd_.reps[cls];
    for (int h : cd_.classes[cls])
      for (int g = 0; g < n; ++g) {
        if (!g_->commute(h, g)) continue;
        const cplx ref = character_value(label, h, g);
        for (int x = 0; x < n; ++x)
          if (g_->conj(x, l) == h) m = std::max(m, std::abs(character_value(label, h, g, x) - ref));
      }
  }
  return m;
}

OrthonormalityReport verify_character_orthonormality(const DoubleIrreps& irr, double tol) {
  OrthonormalityReport rep;
  const int r = irr.size();
  const int n = irr.group()->order();
  std::vector<InvariantFunction> chi;
  for (int i = 0; i < r; ++i) chi.push_back(irr.character(i));
  for (int i = 0; i < r; ++i) {
    cplx at_unit = 0;
    for (int h = 0; h < n; ++h) at_unit += chi[i](h, 0);
    rep.unit_dimension_deviation = std::max(rep.unit_dimension_deviation, std::abs(at_unit - double(irr.module_dim(i))));
    for (int j = 0; j < r; ++j) {
      rep.gram_deviation =
          std::max(rep.gram_deviation, std::abs(inner_product(chi[i], chi[j]) - cplx(i == j ? 1.0 : 0.0)));
      InvariantFunction expect = zero_function(irr.space());
      if (i == j) expect = (double(n) / irr.module_dim(i)) * chi[i];
      rep.dot_identity_deviation = std::max(rep.dot_identity_deviation, max_abs_diff(dot_product(chi[i], chi[j]), expect));
    }
  }
  rep.pass = rep.gram_deviation <= tol && rep.dot_identity_deviation <= tol && rep.unit_dimension_deviation <= tol;
  return rep;
}

}  // namespace dgd
