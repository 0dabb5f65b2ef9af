#include "dgd/char_table.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>

namespace dgd {

using CMat = Eigen::MatrixXcd;

ClassAlgebra::ClassAlgebra(const FiniteGroup& g, const ConjugacyData& cd) : r_(cd.num_classes()) {
  a_.assign(static_cast<std::size_t>(r_) * r_ * r_, 0);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < r_; ++j)
      for (int x : cd.classes[i])
        for (int y : cd.classes[j]) {
          const int z = g.mul(x, y);
          const int k = cd.class_of[z];
          if (z == cd.reps[k]) ++a_[(static_cast<std::size_t>(i) * r_ + j) * r_ + k];
        }
}

namespace {

constexpr double kClusterTol = 1e-7;

// Columns of an orthonormal basis for ker(A) (A square).
CMat kernel(const CMat& a, double scale) {
  Eigen::JacobiSVD<CMat> svd(a, Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  int k = 0;
  for (int i = 0; i < s.size(); ++i)
    if (s(i) <= kClusterTol * scale) ++k;
  return svd.matrixV().rightCols(k);
}

// Splits span(basis) into eigenspaces of m restricted to it. Returns the
// pieces, or just {basis} if the eigenspace dimensions do not add up.
std::vector<CMat> split(const CMat& basis, const CMat& m) {
  const CMat a = basis.adjoint() * m * basis;
  Eigen::ComplexEigenSolver<CMat> es(a, false);
  std::vector<cplx> ev(es.eigenvalues().data(), es.eigenvalues().data() + a.rows());
  std::sort(ev.begin(), ev.end(), [](cplx x, cplx y) {
    return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag();
  });
  std::vector<cplx> centers;
  std::vector<int> counts;
  for (cplx z : ev) {
    bool placed = false;
    for (std::size_t c = 0; c < centers.size() && !placed; ++c) {
      const double scale = std::max({1.0, std::abs(z), std::abs(centers[c])});
      if (std::abs(z - centers[c]) <= kClusterTol * scale) {
        centers[c] = (centers[c] * double(counts[c]) + z) / double(counts[c] + 1);
        ++counts[c];
        placed = true;
      }
    }
    if (!placed) {
      centers.push_back(z);
      counts.push_back(1);
    }
  }
  if (centers.size() == 1) return {basis};
  const double scale = std::max(1.0, a.norm());
  std::vector<CMat> out;
  Eigen::Index total = 0;
  for (std::size_t c = 0; c < centers.size(); ++c) {
    CMat shifted = a - centers[c] * CMat::Identity(a.rows(), a.cols());
    CMat k = kernel(shifted, scale);
    if (k.cols() != counts[c]) return {basis};
    total += k.cols();
    out.push_back(basis * k);
  }
  if (total != basis.cols()) return {basis};
  return out;
}

bool less_row(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  auto q = [](double x) { return std::llround(x * 1e8); };
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (q(a[k].real()) != q(b[k].real())) return q(a[k].real()) > q(b[k].real());
    if (q(a[k].imag()) != q(b[k].imag())) return q(a[k].imag()) > q(b[k].imag());
  }
  return false;
}

}  // namespace

CharacterTable character_table(const FiniteGroup& g, const ConjugacyData& cd) {
  const ClassAlgebra alg(g, cd);
  const int r = alg.rank();
  std::vector<CMat> sums(r, CMat::Zero(r, r));
  for (int j = 0; j < r; ++j)
    for (int i = 0; i < r; ++i)
      for (int k = 0; k < r; ++k) sums[j](i, k) = double(alg(j, i, k));

  std::vector<CMat> spaces{CMat::Identity(r, r)};
  auto refine = [&](const CMat& m) {
    std::vector<CMat> next;
    for (const auto& s : spaces) {
      if (s.cols() == 1) {
        next.push_back(s);
        continue;
      }
      for (auto& p : split(s, m)) next.push_back(std::move(p));
    }
    spaces.swap(next);
  };
  auto done = [&] {
    return std::all_of(spaces.begin(), spaces.end(), [](const CMat& s) { return s.cols() == 1; });
  };
  for (int j = 1; j < r && !done(); ++j) refine(sums[j]);
  if (!done()) {
    std::mt19937_64 rng(kDefaultSeed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int attempt = 0; attempt < 4 && !done(); ++attempt) {
      CMat mix = CMat::Zero(r, r);
      for (int j = 0; j < r; ++j) mix += u(rng) * sums[j];
      refine(mix);
    }
  }
  if (!done() || static_cast<int>(spaces.size()) != r)
    throw NumericalError("eigenspace splitting failed for group " + g.name());

  CharacterTable t;
  t.order = g.order();
  t.class_reps = cd.reps;
  for (int k = 0; k < r; ++k) t.class_sizes.push_back(cd.class_size(k));

  std::vector<std::pair<int, std::vector<cplx>>> rows;
  for (const auto& s : spaces) {
    Eigen::VectorXcd w = s.col(0);
    if (std::abs(w(0)) < 1e-12) throw NumericalError("central character vanishes at identity class");
    w /= w(0);
    double denom = 0.0;
    for (int k = 0; k < r; ++k) denom += std::norm(w(k)) / t.class_sizes[k];
    const double d = std::sqrt(g.order() / denom);
    const long long dim = std::llround(d);
    if (dim < 1 || std::abs(d - double(dim)) > 1e-6)
      throw NumericalError("non-integral character degree " + std::to_string(d));
    std::vector<cplx> vals(r);
    for (int k = 0; k < r; ++k) {
      cplx v = double(dim) * w(k) / double(t.class_sizes[k]);
      if (std::abs(v.imag()) < 1e-9) v = {v.real(), 0.0};
      if (std::abs(v.real()) < 1e-12) v = {0.0, v.imag()};
      vals[k] = v;
    }
    rows.emplace_back(static_cast<int>(dim), std::move(vals));
  }
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return less_row(a.second, b.second);
  });
  long long sum_sq = 0;
  for (auto& [d, v] : rows) {
    t.dims.push_back(d);
    t.values.push_back(std::move(v));
    sum_sq += static_cast<long long>(d) * d;
  }
  if (sum_sq != g.order()) throw NumericalError("sum of squared degrees != |G|");
  return t;
}

OrthogonalityReport verify_orthogonality(const CharacterTable& t, double tol) {
  OrthogonalityReport rep;
  const int r = t.size();
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      cplx s = 0;
      for (int k = 0; k < r; ++k) s += double(t.class_sizes[k]) * t(i, k) * std::conj(t(j, k));
      s /= double(t.order);
      const double dev = std::abs(s - cplx(i == j ? 1.0 : 0.0));
      if (dev > rep.row_deviation) {
        rep.row_deviation = dev;
        if (dev > tol) rep.worst = "rows " + std::to_string(i) + "," + std::to_string(j);
      }
    }
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b) {
      cplx s = 0;
      for (int i = 0; i < r; ++i) s += t(i, a) * std::conj(t(i, b));
      const double expect = a == b ? double(t.order) / t.class_sizes[a] : 0.0;
      const double dev = std::abs(s - expect);
      if (dev > rep.column_deviation) {
        rep.column_deviation = dev;
        if (dev > tol && dev > rep.row_deviation)
          rep.worst = "columns " + std::to_string(a) + "," + std::to_string(b);
      }
    }
  rep.pass = rep.row_deviation <= tol && rep.column_deviation <= tol;
  return rep;
}

std::string format_complex(cplx z) {
  auto clean = [](double x) { return std::abs(x) < 5e-13 ? 0.0 : x; };
  char buf[64];
  const double re = clean(z.real()), im = clean(z.imag());
  std::snprintf(buf, sizeof buf, "%.12g%s%.12gi", re, im < 0 ? "-" : "+", std::abs(im));
  return buf;
}

std::string character_table_csv(const CharacterTable& t) {
  std::string out = "irrep";
  for (int rep : t.class_reps) out += "," + std::to_string(rep);
  out += "\n";
  for (int i = 0; i < t.size(); ++i) {
    out += std::to_string(i);
    for (const auto& v : t.values[i]) out += "," + format_complex(v);
    out += "\n";
  }
  return out;
}

}  // namespace dgd
