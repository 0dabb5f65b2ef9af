#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <random>

#include "dgd/mackey.hpp"

namespace dgd {

using CMat = Eigen::MatrixXcd;

namespace {

CMat kron(const CMat& a, const CMat& b) {
  CMat r(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) r.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return r;
}

double max_entry(const CMat& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

}  // namespace

std::vector<CMat> centralizer_irrep_matrices(const FiniteGroup& c, const CharacterTable& table, const ConjugacyData& cd,
                                             int irrep, std::uint64_t seed) {
  const int m = c.order();
  const int d = table.dims[irrep];
  auto chi = [&](int x) { return table(irrep, cd.class_of[x]); };
  std::vector<CMat> left(m, CMat::Zero(m, m)), right(m, CMat::Zero(m, m));
  for (int a = 0; a < m; ++a)
    for (int x = 0; x < m; ++x) {
      left[a](c.mul(a, x), x) = 1.0;
      right[a](c.mul(x, c.inv(a)), x) = 1.0;
    }
  CMat e = CMat::Zero(m, m);
  for (int a = 0; a < m; ++a) e += std::conj(chi(a)) * left[a];
  e *= double(d) / m;

  Eigen::SelfAdjointEigenSolver<CMat> es(e);
  std::vector<int> cols;
  for (int k = 0; k < m; ++k)
    if (es.eigenvalues()(k) > 0.5) cols.push_back(k);
  if (static_cast<int>(cols.size()) != d * d) throw NumericalError("isotypic block has the wrong dimension");
  CMat iso(m, d * d);
  for (int k = 0; k < d * d; ++k) iso.col(k) = es.eigenvectors().col(cols[k]);

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int attempt = 0; attempt < 8; ++attempt) {
    CMat block = iso;
    if (d > 1) {
      // A random Hermitian element of the right-regular algebra commutes with
      // the left action and splits the block into copies of ρ.
      CMat herm = CMat::Zero(m, m);
      for (int a = 0; a < m; ++a) {
        const cplx z(u(rng), u(rng));
        herm += z * right[a] + std::conj(z) * right[a].adjoint();
      }
      const CMat reduced = iso.adjoint() * herm * iso;
      Eigen::SelfAdjointEigenSolver<CMat> hs(reduced);
      const auto& ev = hs.eigenvalues();
      const double scale = std::max(1.0, ev.cwiseAbs().maxCoeff());
      int cluster = 1;
      while (cluster < ev.size() && ev(cluster) - ev(0) < 1e-6 * scale) ++cluster;
      if (cluster != d || (d < ev.size() && ev(d) - ev(d - 1) < 1e-6 * scale)) continue;
      block = iso * hs.eigenvectors().leftCols(d);
    }
    std::vector<CMat> rho(m);
    double dev = 0;
    for (int a = 0; a < m; ++a) {
      rho[a] = block.adjoint() * left[a] * block;
      dev = std::max(dev, std::abs(rho[a].trace() - chi(a)));
      dev = std::max(dev, max_entry(rho[a].adjoint() * rho[a] - CMat::Identity(d, d)));
    }
    if (dev <= 1e-8) return rho;
  }
  throw NumericalError("could not extract an irreducible block of dimension " + std::to_string(d));
}

DoubleModule induce_module(const DoubleIrreps& irr, int label, std::uint64_t seed) {
  const FiniteGroup& G = *irr.group();
  const int n = G.order();
  const MGLabel lab = irr.labels()[label];
  const int l = irr.classes().reps[lab.class_index];
  const Centralizer& cent = irr.classes().centralizers[lab.class_index];
  const auto rho = centralizer_irrep_matrices(*cent.group, irr.centralizer_table(lab.class_index),
                                              irr.centralizer_classes(lab.class_index), lab.irrep_index, seed);
  const int d = static_cast<int>(rho[0].rows());

  std::vector<int> coset_of(n, -1), reps;
  for (int x = 0; x < n; ++x) {
    if (coset_of[x] >= 0) continue;
    for (int c : cent.elements) coset_of[G.mul(x, c)] = static_cast<int>(reps.size());
    reps.push_back(x);
  }
  const int k = static_cast<int>(reps.size());

  DoubleModule m{irr.group(), k * d, {}, {}};
  for (int i = 0; i < k; ++i)
    for (int a = 0; a < d; ++a) m.grading.push_back(G.conj(reps[i], l));
  for (int g = 0; g < n; ++g) {
    CMat act = CMat::Zero(m.dim, m.dim);
    for (int i = 0; i < k; ++i) {
      const int gx = G.mul(g, reps[i]);
      const int j = coset_of[gx];
      const int c = G.mul(G.inv(reps[j]), gx);
      act.block(j * d, i * d, d, d) = rho[cent.local_of[c]];
    }
    m.action.push_back(std::move(act));
  }
  return m;
}

DoubleModule trivial_module(GroupPtr g) {
  const int n = g->order();
  return DoubleModule{std::move(g), 1, {0}, std::vector<CMat>(n, CMat::Identity(1, 1))};
}

ModuleReport verify_module(const DoubleModule& m, double tol) {
  const FiniteGroup& G = *m.group;
  const int n = G.order();
  ModuleReport rep;
  const CMat id = CMat::Identity(m.dim, m.dim);
  rep.homomorphism_deviation = max_entry(m.action[0] - id);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b)
      rep.homomorphism_deviation =
          std::max(rep.homomorphism_deviation, max_entry(m.action[a] * m.action[b] - m.action[G.mul(a, b)]));
    rep.unitarity_deviation = std::max(rep.unitarity_deviation, max_entry(m.action[a].adjoint() * m.action[a] - id));
    for (int col = 0; col < m.dim; ++col) {
      const int target = G.conj(a, m.grading[col]);
      for (int row = 0; row < m.dim; ++row)
        if (m.grading[row] != target) rep.grading_deviation = std::max(rep.grading_deviation, std::abs(m.action[a](row, col)));
    }
  }
  rep.pass = rep.homomorphism_deviation <= tol && rep.grading_deviation <= tol && rep.unitarity_deviation <= tol;
  return rep;
}

std::vector<cplx> module_character(const DoubleModule& m) {
  const int n = m.group->order();
  std::vector<cplx> chi(static_cast<std::size_t>(n) * n);
  for (int g = 0; g < n; ++g)
    for (int i = 0; i < m.dim; ++i) chi[static_cast<std::size_t>(m.grading[i]) * n + g] += m.action[g](i, i);
  return chi;
}

CMat element_action(const DoubleModule& m, int h, int g) {
  CMat a = m.action[g];
  for (int row = 0; row < m.dim; ++row)
    if (m.grading[row] != h) a.row(row).setZero();
  return a;
}

CMat tensor_action(const DoubleModule& v, const DoubleModule& w, int h, int g) {
  const FiniteGroup& G = *v.group;
  CMat r = CMat::Zero(v.dim * w.dim, v.dim * w.dim);
  for (int s = 0; s < G.order(); ++s) {
    const int t = G.mul(G.inv(s), h);  // s t = h
    r += kron(element_action(v, t, g), element_action(w, s, g));
  }
  return r;
}

CMat braiding_matrix(const DoubleModule& v, const DoubleModule& w) {
  CMat c = CMat::Zero(w.dim * v.dim, v.dim * w.dim);
  for (int i = 0; i < v.dim; ++i)
    for (int j = 0; j < w.dim; ++j) {
      const CMat& a = v.action[w.grading[j]];
      for (int k = 0; k < v.dim; ++k) c(j * v.dim + k, i * w.dim + j) = a(k, i);
    }
  return c;
}

double braiding_naturality_deviation(const DoubleModule& v, const DoubleModule& w) {
  const int n = v.group->order();
  const CMat c = braiding_matrix(v, w);
  double m = 0;
  for (int h = 0; h < n; ++h)
    for (int g = 0; g < n; ++g) m = std::max(m, max_entry(c * tensor_action(v, w, h, g) - tensor_action(w, v, h, g) * c));
  return m;
}

double yang_baxter_deviation(const CMat& c, int d) {
  const CMat id = CMat::Identity(d, d);
  const CMat c12 = kron(c, id), c23 = kron(id, c);
  return max_entry(c12 * c23 * c12 - c23 * c12 * c23);
}

}  // namespace dgd
