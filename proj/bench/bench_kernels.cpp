// Serial reference vs OpenMP kernels: wall time and agreement.
#include <omp.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <memory>

#include "dgd/modular.hpp"
#include "dgd/verify.hpp"

using namespace dgd;

namespace {

double seconds(const std::function<void()>& fn, int reps) {
  const auto t0 = std::chrono::steady_clock::now();
  for (int i = 0; i < reps; ++i) fn();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() / reps;
}

void row(const char* kernel, const std::string& group, double ts, double tp, bool same) {
  std::printf("%-22s %-8s %10.4f %10.4f %8.2fx  %s\n", kernel, group.c_str(), ts, tp, tp > 0 ? ts / tp : 0.0,
              same ? "identical" : "DIFFERENT");
}

}  // namespace

int main(int argc, char** argv) {
  const int reps = argc > 1 ? std::atoi(argv[1]) : 3;
  std::printf("threads: %d, repetitions: %d\n", omp_get_max_threads(), reps);
  std::printf("%-22s %-8s %10s %10s %9s\n", "kernel", "group", "serial s", "parallel s", "speedup");

  for (const char* spec : {"S3", "D4", "Q8", "A4", "S4"}) {
    const auto g = std::make_shared<const FiniteGroup>(build_group(spec));
    const DoubleAlgebra alg(g);

    VerifyOptions ser, par;
    ser.exec = Exec::serial;
    par.exec = Exec::parallel;
    SuiteReport rs, rp;
    const double ts = seconds([&] { rs = verify_axioms(alg, "all", ser); }, reps);
    const double tp = seconds([&] { rp = verify_axioms(alg, "all", par); }, reps);
    bool same = rs.checks.size() == rp.checks.size();
    for (std::size_t i = 0; same && i < rs.checks.size(); ++i)
      same = rs.checks[i].max_deviation == rp.checks[i].max_deviation && rs.checks[i].witness == rp.checks[i].witness;
    row("verify_axioms(all)", spec, ts, tp, same);

    const DoubleIrreps irr(g);
    FusionTable fs, fp;
    const double fts = seconds([&] { fs = fusion_bruteforce(irr, Exec::serial); }, reps);
    const double ftp = seconds([&] { fp = fusion_bruteforce(irr, Exec::parallel); }, reps);
    row("fusion_bruteforce", spec, fts, ftp, first_mismatch(fs, fp) < 0 && fs.residual == fp.residual);

    ModularData ms, mp;
    const double mts = seconds([&] { ms = modular_data(irr, Exec::serial); }, reps);
    const double mtp = seconds([&] { mp = modular_data(irr, Exec::parallel); }, reps);
    row("modular_data", spec, mts, mtp, ms.S == mp.S && ms.T == mp.T && ms.FT == mp.FT);

    FusionTable vs, vp;
    const double vts = seconds([&] { vs = verlinde_fusion(ms, Exec::serial); }, reps);
    const double vtp = seconds([&] { vp = verlinde_fusion(ms, Exec::parallel); }, reps);
    row("verlinde_fusion", spec, vts, vtp, first_mismatch(vs, vp) < 0 && vs.residual == vp.residual);
  }
  return 0;
}
