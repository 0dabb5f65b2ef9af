#include <Eigen/SVD>
#include <algorithm>
#include <numeric>

#include "dgd/mackey.hpp"

namespace dgd {

using CMat = Eigen::MatrixXcd;

CMat flip_braiding(int d, double sign) {
  CMat c = CMat::Zero(d * d, d * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) c(j * d + i, i * d + j) = sign;
  return c;
}

namespace {

long long ipow(int b, int e) {
  long long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// c acting on tensor legs (j, j+1) of every column of m.
CMat apply_local(const CMat& c, const CMat& m, int d, int n, int j) {
  const long long prefix = ipow(d, j), suffix = ipow(d, n - j - 2);
  const int dd = d * d;
  CMat out(m.rows(), m.cols());
  std::vector<Eigen::Index> idx(dd);
  CMat gathered(dd, m.cols());
  for (long long p = 0; p < prefix; ++p)
    for (long long r = 0; r < suffix; ++r) {
      for (int ab = 0; ab < dd; ++ab) {
        idx[ab] = (p * dd + ab) * suffix + r;
        gathered.row(ab) = m.row(idx[ab]);
      }
      const CMat t = c * gathered;
      for (int ab = 0; ab < dd; ++ab) out.row(idx[ab]) = t.row(ab);
    }
  return out;
}

// Adjacent swaps that sort perm; left-to-right or right-to-left passes.
std::vector<int> bubble_word(std::vector<int> perm, bool reverse_scan) {
  std::vector<int> word;
  const int n = static_cast<int>(perm.size());
  bool swapped = true;
  while (swapped) {
    swapped = false;
    for (int s = 0; s + 1 < n; ++s) {
      const int i = reverse_scan ? n - 2 - s : s;
      if (perm[i] > perm[i + 1]) {
        std::swap(perm[i], perm[i + 1]);
        word.push_back(i);
        swapped = true;
      }
    }
  }
  return word;
}

// c_{w1} c_{w2} ... c_{wr}
CMat word_matrix(const CMat& c, const std::vector<int>& word, int d, int n) {
  const long long dim = ipow(d, n);
  CMat m = CMat::Identity(dim, dim);
  for (auto it = word.rbegin(); it != word.rend(); ++it) m = apply_local(c, m, d, n, *it);
  return m;
}

int numeric_rank(const CMat& m) {
  Eigen::BDCSVD<CMat> svd(m);
  const auto& s = svd.singularValues();
  if (s.size() == 0) return 0;
  // Floor the scale at 1: a symmetrizer that vanishes up to roundoff would
  // otherwise count its own noise as rank.
  const double cut = 1e-8 * std::max(s(0), 1.0);
  int r = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) > cut) ++r;
  return r;
}

}  // namespace

NicholsResult nichols_degree_dims(const CMat& c, int d, int n_max, int limit) {
  if (d < 1 || c.rows() != d * d || c.cols() != d * d) throw InputError("braiding must be d^2 x d^2");
  if (n_max < 1) throw InputError("nmax must be positive");
  for (int n = 1; n <= n_max; ++n)
    if (ipow(d, n) > limit)
      throw InputError("degree " + std::to_string(n) + " needs dimension " + std::to_string(ipow(d, n)) +
                       " > limit " + std::to_string(limit));
  NicholsResult res;
  for (int n = 1; n <= n_max; ++n) {
    const long long dim = ipow(d, n);
    CMat sym = CMat::Zero(dim, dim);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      const auto w1 = bubble_word(perm, false);
      const CMat m1 = word_matrix(c, w1, d, n);
      sym += m1;
      const auto w2 = bubble_word(perm, true);
      if (w2 != w1) {
        const CMat diff = m1 - word_matrix(c, w2, d, n);
        res.word_independence = std::max(res.word_independence, diff.cwiseAbs().maxCoeff());
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    res.dims.push_back(numeric_rank(sym));
  }
  return res;
}

}  // namespace dgd
