#include <algorithm>
#include <cmath>

#include "dgd/modular.hpp"
#include "dgd/parallel.hpp"

namespace dgd {

namespace {

constexpr double kRoundTol = 1e-6;

// Rounds raw coefficients; residual is the largest rounding distance.
FusionTable round_table(int r, const std::vector<cplx>& raw) {
  FusionTable f{r, std::vector<int>(raw.size()), 0.0};
  for (std::size_t p = 0; p < raw.size(); ++p) {
    const double nearest = std::round(raw[p].real());
    f.residual = std::max(f.residual, std::abs(raw[p] - cplx(nearest, 0.0)));
    f.N[p] = static_cast<int>(nearest);
  }
  if (!(f.residual <= kRoundTol))
    throw NumericalError("fusion coefficients are not integral (residual " + std::to_string(f.residual) + ")");
  return f;
}

}  // namespace

FusionTable fusion_bruteforce(const DoubleIrreps& irr, Exec exec) {
  const int r = irr.size();
  std::vector<InvariantFunction> chi;
  for (int i = 0; i < r; ++i) chi.push_back(irr.character(i));
  std::vector<cplx> raw(static_cast<std::size_t>(r) * r * r);
  for_each_index(static_cast<std::int64_t>(r) * r, exec, [&](std::int64_t p) {
    const InvariantFunction prod = bullet_product(chi[p / r], chi[p % r]);
    for (int k = 0; k < r; ++k) raw[static_cast<std::size_t>(p) * r + k] = inner_product(prod, chi[k]);
  });
  return round_table(r, raw);
}

FusionTable verlinde_fusion(const ModularData& md, Exec exec) {
  const auto& S = md.S;
  const int r = static_cast<int>(S.rows());
  for (int m = 0; m < r; ++m)
    if (std::abs(S(m, 0)) <= 1e-9)
      throw NumericalError("Verlinde denominator S(" + std::to_string(m) + ",0) vanishes");
  std::vector<cplx> raw(static_cast<std::size_t>(r) * r * r);
  for_each_index(static_cast<std::int64_t>(r) * r, exec, [&](std::int64_t p) {
    const int i = static_cast<int>(p / r), j = static_cast<int>(p % r);
    for (int k = 0; k < r; ++k) {
      cplx s = 0;
      for (int m = 0; m < r; ++m) s += S(m, i) * S(m, j) * std::conj(S(m, k)) / S(m, 0);
      raw[static_cast<std::size_t>(p) * r + k] = s;
    }
  });
  return round_table(r, raw);
}

FusionRingReport check_fusion_ring(const FusionTable& f, const std::vector<int>& dims) {
  FusionRingReport rep;
  const int r = f.rank;
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      long long dim = 0;
      for (int k = 0; k < r; ++k) {
        if (f(i, j, k) < 0) rep.nonnegative = false;
        if (f(i, j, k) != f(j, i, k)) rep.commutative = false;
        if (f(0, j, k) != (j == k ? 1 : 0)) rep.unit = false;
        dim += static_cast<long long>(f(i, j, k)) * dims[k];
      }
      if (dim != static_cast<long long>(dims[i]) * dims[j]) rep.dimension_homomorphism = false;
    }
  // (i j) k = i (j k)
  for (int i = 0; i < r && rep.associative; ++i)
    for (int j = 0; j < r && rep.associative; ++j)
      for (int k = 0; k < r && rep.associative; ++k)
        for (int l = 0; l < r; ++l) {
          long long left = 0, right = 0;
          for (int m = 0; m < r; ++m) {
            left += static_cast<long long>(f(i, j, m)) * f(m, k, l);
            right += static_cast<long long>(f(j, k, m)) * f(i, m, l);
          }
          if (left != right) {
            rep.associative = false;
            break;
          }
        }
  return rep;
}

long long first_mismatch(const FusionTable& a, const FusionTable& b) {
  if (a.rank != b.rank) return 0;
  for (std::size_t p = 0; p < a.N.size(); ++p)
    if (a.N[p] != b.N[p]) return static_cast<long long>(p);
  return -1;
}

}  // namespace dgd
