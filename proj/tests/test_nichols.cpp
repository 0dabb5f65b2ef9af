#include <doctest.h>

#include "dgd/mackey.hpp"
#include "helpers.hpp"

using namespace dgd;

namespace {

int binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return static_cast<int>(r);
}

}  // namespace

TEST_CASE("symmetric and exterior algebras") {
  for (int d = 1; d <= 3; ++d)
    for (double sign : {1.0, -1.0}) {
      CAPTURE(d);
      CAPTURE(sign);
      const NicholsResult res = nichols_degree_dims(flip_braiding(d, sign), d, 5);
      REQUIRE(res.dims.size() == 5);
      for (int n = 1; n <= 5; ++n)
        CHECK(res.dims[n - 1] == (sign > 0 ? binomial(d + n - 1, n) : binomial(d, n)));
      CHECK(res.word_independence <= 1e-12);
    }
  CHECK(nichols_degree_dims(flip_braiding(2, 1), 2, 4).dims == std::vector<int>{2, 3, 4, 5});
  CHECK(nichols_degree_dims(flip_braiding(2, -1), 2, 4).dims == std::vector<int>{2, 1, 0, 0});
}

TEST_CASE("modules of the double") {
  const auto c2 = testing::make("C2");
  const DoubleModule triv = trivial_module(c2);
  CHECK(nichols_degree_dims(braiding_matrix(triv, triv), 1, 4).dims == std::vector<int>{1, 1, 1, 1});

  // degree a, sign character: braiding scalar -1
  const DoubleIrreps irr(c2);
  const int lab = irr.index_of({1, 1});
  REQUIRE(lab >= 0);
  const DoubleModule m = induce_module(irr, lab);
  const Eigen::MatrixXcd c = braiding_matrix(m, m);
  CHECK(std::abs(c(0, 0) - cplx(-1)) <= 1e-12);
  CHECK(nichols_degree_dims(c, 1, 5).dims == std::vector<int>{1, 0, 0, 0, 0});

  // a 3-dimensional D(S3) module: the two word families agree on a real braiding
  const auto s3 = testing::make("S3");
  const DoubleIrreps si(s3);
  for (int i = 0; i < si.size(); ++i) {
    const DoubleModule v = induce_module(si, i);
    if (v.dim != 3) continue;
    const NicholsResult res = nichols_degree_dims(braiding_matrix(v, v), 3, 4);
    CHECK(res.dims[0] == 3);
    CHECK(res.word_independence <= 1e-9);
  }
}

TEST_CASE("size limit") {
  CHECK_THROWS_AS(nichols_degree_dims(flip_braiding(3, 1), 3, 6), InputError);
  CHECK_THROWS_AS(nichols_degree_dims(flip_braiding(2, 1), 3, 2), InputError);
  CHECK_THROWS_AS(nichols_degree_dims(flip_braiding(2, 1), 2, 0), InputError);
}
