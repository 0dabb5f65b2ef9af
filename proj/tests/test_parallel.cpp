// The OpenMP kernels must reproduce the serial reference bit for bit.
#include <doctest.h>

#include <limits>

#include "dgd/modular.hpp"
#include "dgd/parallel.hpp"
#include "dgd/verify.hpp"
#include "helpers.hpp"

using namespace dgd;

TEST_CASE("max reduction ties and NaN") {
  for (Exec e : {Exec::serial, Exec::parallel}) {
    const MaxDeviation m = max_deviation_over(1000, e, [](std::int64_t i) { return i % 100 == 37 ? 5.0 : 1.0; });
    CHECK(m.value == 5.0);
    CHECK(m.index == 37);
    const MaxDeviation nan = max_deviation_over(
        50, e, [](std::int64_t i) { return i == 20 ? std::numeric_limits<double>::quiet_NaN() : 0.0; });
    CHECK(nan.index == 20);
    CHECK(std::isinf(nan.value));
    CHECK(max_deviation_over(0, e, [](std::int64_t) { return 1.0; }).index == -1);
  }
  std::vector<int> hits(777, 0);
  for_each_index(777, Exec::parallel, [&](std::int64_t i) { hits[i] += 1; });
  for (int h : hits) CHECK(h == 1);
}

TEST_CASE("axiom reports agree") {
  for (const char* spec : {"S3", "Q8"}) {
    CAPTURE(spec);
    const DoubleAlgebra alg(testing::make(spec));
    VerifyOptions ser, par;
    ser.exec = Exec::serial;
    par.exec = Exec::parallel;
    const SuiteReport a = verify_axioms(alg, "all", ser), b = verify_axioms(alg, "all", par);
    REQUIRE(a.checks.size() == b.checks.size());
    for (std::size_t i = 0; i < a.checks.size(); ++i) {
      CHECK(a.checks[i].check == b.checks[i].check);
      CHECK(a.checks[i].max_deviation == b.checks[i].max_deviation);
      CHECK(a.checks[i].witness == b.checks[i].witness);
    }
  }
}

TEST_CASE("modular data, fusion and identities agree") {
  for (const char* spec : {"S3", "A4"}) {
    CAPTURE(spec);
    const DoubleIrreps irr(testing::make(spec));
    const ModularData ms = modular_data(irr, Exec::serial), mp = modular_data(irr, Exec::parallel);
    CHECK(ms.S == mp.S);
    CHECK(ms.T == mp.T);
    CHECK(ms.FT == mp.FT);
    const FusionTable bs = fusion_bruteforce(irr, Exec::serial), bp = fusion_bruteforce(irr, Exec::parallel);
    CHECK(bs.N == bp.N);
    CHECK(bs.residual == bp.residual);
    const FusionTable vs = verlinde_fusion(ms, Exec::serial), vp = verlinde_fusion(ms, Exec::parallel);
    CHECK(vs.N == vp.N);
    CHECK(vs.residual == vp.residual);

    ModularOptions os, op;
    os.exec = Exec::serial;
    os.samples = op.samples = 30;
    const ModularReport rs = verify_modular_identities(irr, ms, os), rp = verify_modular_identities(irr, ms, op);
    REQUIRE(rs.checks.size() == rp.checks.size());
    for (std::size_t i = 0; i < rs.checks.size(); ++i) CHECK(rs.checks[i].deviation == rp.checks[i].deviation);
  }
}
