// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <memory>
#include <string>

#include "dgd/modular.hpp"
#include "dgd/verify.hpp"

using namespace dgd;

namespace {

constexpr double kTol = 1e-9;

GroupPtr make(const std::string& spec) { return std::make_shared<const FiniteGroup>(build_group(spec)); }

std::vector<std::string> builtins_up_to(int order) {
  std::vector<std::string> out;
  for (const auto& s : builtin_specs())
    if (build_group(s).order() <= order) out.push_back(s);
  return out;
}

const std::vector<std::string> kAxiomGroups = {"C1", "C2", "C4", "prod(C2,C2)", "S3", "D4", "Q8"};

struct Outcome {
  bool pass = true;
  double worst = 0.0;
  std::string note;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) note = what;
    pass = pass && ok;
  }
  void deviation(double d, const std::string& what, double tol = kTol) {
    worst = std::max(worst, d);
    require(d <= tol, what);
  }
};

Outcome axioms() {
  Outcome o;
  for (const auto& spec : kAxiomGroups) {
    const DoubleAlgebra alg(make(spec));
    for (const char* suite : {"bialgebra", "hopf", "quasitriangular", "ybe", "ribbon", "antireal"}) {
      const SuiteReport rep = verify_axioms(alg, suite);
      for (const auto& c : rep.checks) {
        o.require(!c.skipped, spec + ": " + c.check + " skipped");
        o.deviation(c.max_deviation, spec + ": " + c.check);
      }
    }
  }
  return o;
}

Outcome closed_forms() {
  Outcome o;
  for (const auto& spec : kAxiomGroups) {
    const DoubleAlgebra alg(make(spec));
    SuiteReport rep = verify_axioms(alg, "closed_form");
    rep.append(verify_axioms(alg, "hopf"));
    for (const char* needle : {"Q", "R' = (tau R)^-1", "S^2 = id", "u central", "dim center = commuting-pair orbits"}) {
      bool seen = false;
      for (const auto& c : rep.checks)
        if (c.check.rfind(needle, 0) == 0) {
          seen = true;
          o.require(!c.skipped, spec + ": " + c.check + " skipped");
          o.deviation(c.max_deviation, spec + ": " + c.check);
        }
      o.require(seen, spec + ": missing check " + needle);
    }
  }
  return o;
}

Outcome classification() {
  Outcome o;
  for (const auto& spec : builtins_up_to(24)) {
    const auto g = make(spec);
    const DoubleIrreps irr(g);
    o.require(irr.size() == commuting_pair_orbits(*g).num_orbits(), spec + ": label count");
    long long sum = 0;
    for (int i = 0; i < irr.size(); ++i) sum += static_cast<long long>(irr.module_dim(i)) * irr.module_dim(i);
    o.require(sum == static_cast<long long>(g->order()) * g->order(), spec + ": sum of squared dims");
  }
  return o;
}

Outcome characters() {
  Outcome o;
  for (const auto& spec : builtins_up_to(12)) {
    const DoubleIrreps irr(make(spec));
    o.deviation(verify_character_orthonormality(irr).gram_deviation, spec + ": Gram matrix");
    for (int i = 0; i < irr.size(); ++i) {
      const auto induced = module_character(induce_module(irr, i));
      const auto closed = irr.character(i).dense();
      double d = 0;
      for (std::size_t k = 0; k < closed.size(); ++k) d = std::max(d, std::abs(induced[k] - closed[k]));
      o.deviation(d, spec + ": induced character " + std::to_string(i));
    }
  }
  return o;
}

Outcome modular(const std::vector<std::string>& names) {
  Outcome o;
  for (const auto& spec : builtins_up_to(24)) {
    const DoubleIrreps irr(make(spec));
    const ModularData md = modular_data(irr);
    ModularOptions opt;
    opt.hopf_level = false;
    const ModularReport rep = verify_modular_identities(irr, md, opt);
    for (const auto& name : names) {
      bool seen = false;
      for (const auto& c : rep.checks)
        if (c.name == name) {
          seen = true;
          o.deviation(c.deviation, spec + ": " + name);
        }
      o.require(seen, spec + ": missing " + name);
    }
  }
  return o;
}

Outcome verlinde() {
  Outcome o;
  for (const char* spec : {"C2", "prod(C2,C2)", "S3", "D4", "Q8", "A4", "S4"}) {
    const DoubleIrreps irr(make(spec));
    const ModularData md = modular_data(irr);
    try {
      const FusionTable brute = fusion_bruteforce(irr);
      const FusionTable verl = verlinde_fusion(md);
      o.require(first_mismatch(brute, verl) < 0, std::string(spec) + ": tables differ");
      o.deviation(std::max(brute.residual, verl.residual), std::string(spec) + ": residual", 1e-6);
    } catch (const NumericalError& e) {
      o.require(false, std::string(spec) + ": " + e.what());
    }
  }
  return o;
}

Outcome fourier() {
  Outcome o;
  for (const auto& spec : builtins_up_to(24)) {
    const DoubleIrreps irr(make(spec));
    ModularOptions opt;
    opt.samples = 100;
    const ModularReport rep = verify_modular_identities(irr, modular_data(irr), opt);
    for (const auto& c : rep.checks)
      if (c.asserted) o.deviation(c.deviation, spec + ": " + c.name);
  }
  return o;
}

Outcome braiding() {
  Outcome o;
  for (const auto& spec : builtins_up_to(8)) {
    const DoubleIrreps irr(make(spec));
    std::vector<DoubleModule> mods;
    for (int i = 0; i < irr.size(); ++i) mods.push_back(induce_module(irr, i));
    for (std::size_t i = 0; i < mods.size(); ++i) {
      o.deviation(yang_baxter_deviation(braiding_matrix(mods[i], mods[i]), mods[i].dim),
                  spec + ": YBE on module " + std::to_string(i));
      for (const auto& w : mods)
        o.deviation(braiding_naturality_deviation(mods[i], w), spec + ": naturality at " + std::to_string(i));
    }
  }
  return o;
}

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

Outcome symmetrizer() {
  Outcome o;
  for (int d = 1; d <= 3; ++d)
    for (double sign : {1.0, -1.0}) {
      const NicholsResult res = nichols_degree_dims(flip_braiding(d, sign), d, 5);
      for (int n = 1; n <= 5; ++n) {
        const long long want = sign > 0 ? binomial(d + n - 1, n) : binomial(d, n);
        o.require(res.dims[n - 1] == want, (sign > 0 ? "flip" : "-flip") + std::string(" d=") + std::to_string(d) +
                                               " n=" + std::to_string(n));
      }
      o.deviation(res.word_independence, "word independence d=" + std::to_string(d));
    }
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "axiom certification", axioms},
      {2, "closed-form cross-checks", closed_forms},
      {3, "classification counts", classification},
      {4, "character consistency", characters},
      {5, "modular data",
       [] {
         return modular({"T diagonal with unit-modulus entries", "S^4 = I", "S^2 = (ST)^3", "FT unitary",
                         "FT Hermitian", "FT involutive"});
       }},
      {6, "Verlinde reproduction", verlinde},
      {7, "Fourier identities", fourier},
      {8, "braiding and YBE on modules", braiding},
      {9, "quantum symmetrizer", symmetrizer},
  };

  bool all = true;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.note = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s criterion %d (%s): max deviation %.3g, %.2f s%s%s\n", o.pass ? "PASS" : "FAIL", c.id, c.title,
                o.worst, secs, o.note.empty() ? "" : "; first failure: ", o.note.c_str());
    all = all && o.pass;
  }
  return all ? 0 : 1;
}
