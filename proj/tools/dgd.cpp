// dgd: command-line front end for the Drinfeld double library.
#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "dgd/export.hpp"

using namespace dgd;

namespace {

struct RunConfig {
  std::string spec;
  double tol = kDefaultTol;
  std::string seed_text = "0x5EED";
  std::uint64_t seed = kDefaultSeed;
  int triple_limit = 12;
  int limit = 256;
  int max_order = kDefaultMaxOrder;
  std::string format = "pretty";
  std::string out;
  std::string suite = "all";
  int nmax = 4;
  int label = 0;
  bool serial = false;
  Exec exec() const { return serial ? Exec::serial : Exec::parallel; }
};

// A command fills `text` and returns its exit code.
struct Outcome {
  int code = 0;
  std::string text;
};

std::string num(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.3g", clean_number(x));
  return buf;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

GroupPtr load(const RunConfig& cfg) {
  return std::make_shared<const FiniteGroup>(build_group(cfg.spec, cfg.max_order));
}

std::string matrix_pretty(const std::string& name, const Eigen::MatrixXcd& m) {
  std::string s = name + ":\n";
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    s += " ";
    for (Eigen::Index j = 0; j < m.cols(); ++j) s += " " + format_complex(m(i, j));
    s += "\n";
  }
  return s;
}

Outcome cmd_group(const RunConfig& cfg) {
  const GroupPtr g = load(cfg);
  const ConjugacyData cd = conjugacy_classes(*g);
  const CommutingPairOrbits orb = commuting_pair_orbits(*g);
  if (cfg.format == "json") return {0, dump(group_json(*g, cd, orb))};
  if (cfg.format == "csv") {
    std::string s = "class,representative,size,centralizer_order\n";
    for (int c = 0; c < cd.num_classes(); ++c)
      s += std::to_string(c) + "," + std::to_string(cd.reps[c]) + "," + std::to_string(cd.class_size(c)) + "," +
           std::to_string(cd.centralizers[c].group->order()) + "\n";
    return {0, s};
  }
  std::string s = "group: " + g->name() + "\norder: " + std::to_string(g->order()) +
                  "\nclasses: " + std::to_string(cd.num_classes()) + "\n";
  for (int c = 0; c < cd.num_classes(); ++c)
    s += "  class " + std::to_string(c) + ": representative " + std::to_string(cd.reps[c]) + ", size " +
         std::to_string(cd.class_size(c)) + ", centralizer order " +
         std::to_string(cd.centralizers[c].group->order()) + "\n";
  s += "commuting pairs: " + std::to_string(orb.pairs.size()) + "\n";
  s += "orbits: " + std::to_string(orb.num_orbits()) + "\n";
  return {0, s};
}

Outcome cmd_verify(const RunConfig& cfg) {
  const GroupPtr g = load(cfg);
  const DoubleAlgebra alg(g);
  VerifyOptions opt;
  opt.tol = cfg.tol;
  opt.triple_limit = cfg.triple_limit;
  opt.exec = cfg.exec();
  opt.seed = cfg.seed;
  const SuiteReport rep = verify_axioms(alg, cfg.suite, opt);
  const int code = rep.pass() ? 0 : 1;
  if (cfg.format == "json") {
    Json j = axiom_report_json(rep);
    j["group"] = g->name();
    j["tolerance"] = cfg.tol;
    return {code, dump(j)};
  }
  if (cfg.format == "csv") {
    std::string s = "suite,check,max_deviation,pass,skipped\n";
    for (const auto& c : rep.checks)
      s += c.suite + ",\"" + c.check + "\"," + num(c.max_deviation) + "," + (c.pass ? "true" : "false") + "," +
           (c.skipped ? "true" : "false") + "\n";
    return {code, s};
  }
  std::string s;
  for (const auto& c : rep.checks) {
    const char* tag = c.skipped ? "SKIP" : c.pass ? "PASS" : "FAIL";
    s += std::string("[") + tag + "] " + c.suite + ": " + c.check;
    if (!c.skipped) s += "  (deviation " + num(c.max_deviation) + ")";
    if (!c.pass && !c.witness.empty()) s += "  at " + c.witness;
    s += "\n";
  }
  s += "group: " + g->name() + "\npass: " + (rep.pass() ? "true" : "false") +
       "\nmax deviation: " + num(rep.max_deviation()) + "\n";
  return {code, s};
}

Outcome cmd_irreps(const RunConfig& cfg) {
  const DoubleIrreps irr(load(cfg));
  const OrthonormalityReport orth = verify_character_orthonormality(irr, cfg.tol);
  const int code = orth.pass ? 0 : 1;
  if (cfg.format == "json") {
    Json j = irreps_json(irr);
    j["gram_deviation"] = clean_number(orth.gram_deviation);
    return {code, dump(j)};
  }
  if (cfg.format == "csv") return {code, irreps_csv(irr)};
  std::string s = "group: " + irr.group()->name() + "\nlabels: " + std::to_string(irr.size()) + "\n";
  long long sum = 0;
  for (int i = 0; i < irr.size(); ++i) {
    const MGLabel l = irr.labels()[i];
    const int d = irr.module_dim(i);
    sum += static_cast<long long>(d) * d;
    s += "  " + std::to_string(i) + ": class " + std::to_string(l.class_index) + " (representative " +
         std::to_string(irr.classes().reps[l.class_index]) + "), irrep " + std::to_string(l.irrep_index) +
         ", dim " + std::to_string(d) + "\n";
  }
  s += "sum of squared dims: " + std::to_string(sum) + "\n";
  s += "character table (columns are orbit representatives (h,g)):\n ";
  for (const auto& [h, g] : irr.space()->orbits.reps) s += " (" + std::to_string(h) + "," + std::to_string(g) + ")";
  s += "\n";
  for (int i = 0; i < irr.size(); ++i) {
    s += "  " + std::to_string(i) + ":";
    for (const auto& v : irr.character(i).values) s += " " + format_complex(v);
    s += "\n";
  }
  s += "gram deviation: " + num(orth.gram_deviation) + "\n";
  return {code, s};
}

std::string fusion_pretty(const FusionTable& f) {
  std::string s;
  for (int i = 0; i < f.rank; ++i)
    for (int j = i; j < f.rank; ++j) {
      s += "  " + std::to_string(i) + " x " + std::to_string(j) + " =";
      bool first = true;
      for (int k = 0; k < f.rank; ++k) {
        if (!f(i, j, k)) continue;
        s += std::string(first ? " " : " + ") + (f(i, j, k) > 1 ? std::to_string(f(i, j, k)) + "*" : "") +
             std::to_string(k);
        first = false;
      }
      s += "\n";
    }
  return s;
}

Outcome cmd_fusion(const RunConfig& cfg) {
  const DoubleIrreps irr(load(cfg));
  const FusionTable f = fusion_bruteforce(irr, cfg.exec());
  std::vector<int> dims;
  for (int i = 0; i < irr.size(); ++i) dims.push_back(irr.module_dim(i));
  const FusionRingReport ring = check_fusion_ring(f, dims);
  const int code = ring.pass() ? 0 : 1;
  if (cfg.format == "json") {
    Json j{{"format", kModularFormat}, {"group", irr.group()->name()}};
    j["fusion"] = fusion_json(f);
    j["fusion_ring_valid"] = ring.pass();
    return {code, dump(j)};
  }
  if (cfg.format == "csv") return {code, fusion_csv(f)};
  return {code, "group: " + irr.group()->name() + "\nrank: " + std::to_string(f.rank) + "\n" + fusion_pretty(f) +
                    "residual: " + num(f.residual) + "\nfusion ring valid: " + (ring.pass() ? "true" : "false") +
                    "\n"};
}

Outcome cmd_modular(const RunConfig& cfg) {
  const DoubleIrreps irr(load(cfg));
  const ModularData md = modular_data(irr, cfg.exec());
  ModularOptions opt;
  opt.tol = cfg.tol;
  opt.seed = cfg.seed;
  opt.exec = cfg.exec();
  const ModularReport rep = verify_modular_identities(irr, md, opt);
  const int code = rep.pass() ? 0 : 1;
  if (cfg.format == "json") {
    Json j = modular_json(irr.group()->name(), irr, md);
    j["identities"] = modular_report_json(rep);
    return {code, dump(j)};
  }
  if (cfg.format == "csv")
    return {code, "# S\n" + matrix_csv(md.S) + "# T\n" + matrix_csv(md.T) + "# FT\n" + matrix_csv(md.FT)};
  std::string s = "group: " + irr.group()->name() + "\nrank: " + std::to_string(irr.size()) + "\n";
  s += matrix_pretty("S", md.S) + matrix_pretty("T", md.T) + matrix_pretty("FT", md.FT);
  for (const auto& c : rep.checks)
    s += std::string("[") + (!c.asserted ? "INFO" : c.pass ? "PASS" : "FAIL") + "] " + c.name + "  (deviation " +
         num(c.deviation) + ")\n";
  s += std::string("pass: ") + (rep.pass() ? "true" : "false") + "\n";
  return {code, s};
}

Outcome cmd_verlinde(const RunConfig& cfg) {
  const DoubleIrreps irr(load(cfg));
  const ModularData md = modular_data(irr, cfg.exec());
  const FusionTable brute = fusion_bruteforce(irr, cfg.exec());
  const FusionTable verl = verlinde_fusion(md, cfg.exec());
  const long long mismatch = first_mismatch(brute, verl);
  const bool ring = check_fusion_ring(verl, md.dims).pass();
  const bool match = mismatch < 0;
  const int code = match && ring ? 0 : 1;
  if (cfg.format == "json") {
    Json j{{"format", kModularFormat}, {"group", irr.group()->name()}, {"match", match}};
    if (!match) j["first_mismatch"] = mismatch;
    j["fusion_ring_valid"] = ring;
    j["verlinde"] = fusion_json(verl);
    j["bruteforce_residual"] = clean_number(brute.residual);
    return {code, dump(j)};
  }
  if (cfg.format == "csv") return {code, fusion_csv(verl)};
  std::string s = "group: " + irr.group()->name() + "\nrank: " + std::to_string(verl.rank) +
                  "\nmatch: " + (match ? "true" : "false") + "\n";
  if (!match) {
    const int r = verl.rank;
    const long long p = mismatch;
    s += "first mismatch: N(" + std::to_string(p / (r * r)) + "," + std::to_string(p / r % r) + "," +
         std::to_string(p % r) + ")\n";
  }
  s += "verlinde residual: " + num(verl.residual) + "\nbrute-force residual: " + num(brute.residual) +
       "\nfusion ring valid: " + (ring ? "true" : "false") + "\n";
  return {code, s};
}

Outcome cmd_nichols(const RunConfig& cfg) {
  Eigen::MatrixXcd c;
  int d = 0;
  std::string source;
  const auto colon = cfg.spec.find(':');
  const std::string head = cfg.spec.substr(0, colon);
  if (colon != std::string::npos && (head == "flip" || head == "negflip")) {
    d = std::stoi(cfg.spec.substr(colon + 1));
    if (d < 1 || d > 16) throw InputError("fixture dimension must be in 1..16: " + cfg.spec);
    c = flip_braiding(d, head == "flip" ? 1.0 : -1.0);
    source = cfg.spec;
  } else {
    const DoubleIrreps irr(load(cfg));
    if (cfg.label < 0 || cfg.label >= irr.size())
      throw InputError("label " + std::to_string(cfg.label) + " out of range 0.." + std::to_string(irr.size() - 1));
    const DoubleModule m = induce_module(irr, cfg.label, cfg.seed);
    c = braiding_matrix(m, m);
    d = m.dim;
    source = irr.group()->name() + " label " + std::to_string(cfg.label);
  }
  const NicholsResult res = nichols_degree_dims(c, d, cfg.nmax, cfg.limit);
  if (cfg.format == "json") {
    Json j{{"source", source}, {"dim", d}, {"degree_dims", res.dims},
           {"word_independence", clean_number(res.word_independence)}};
    return {0, dump(j)};
  }
  if (cfg.format == "csv") {
    std::string s = "degree,dim\n";
    for (std::size_t n = 0; n < res.dims.size(); ++n) s += std::to_string(n + 1) + "," + std::to_string(res.dims[n]) + "\n";
    return {0, s};
  }
  std::string s = "source: " + source + "\ndim: " + std::to_string(d) + "\ndegree dims:";
  for (int x : res.dims) s += " " + std::to_string(x);
  s += "\nword independence: " + num(res.word_independence) + "\n";
  return {0, s};
}

void add_common(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("spec", cfg.spec, "group spec: cyclic:n, dihedral:n, sym:n, alt:n, q8, prod(a,b), file:path")
      ->required();
  sub->add_option("--tol", cfg.tol, "pass threshold")->check(CLI::PositiveNumber);
  sub->add_option("--seed", cfg.seed_text, "seed for every randomized step (decimal or 0x hex)");
  sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "csv", "pretty"}));
  sub->add_option("--out", cfg.out, "write output to this file instead of stdout");
  sub->add_option("--max-order", cfg.max_order, "largest accepted group order")->check(CLI::PositiveNumber);
  sub->add_flag("--serial", cfg.serial, "use the serial reference kernels");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Drinfeld double D(G) of a finite group: axioms, irreducibles, modular data, fusion"};
  app.require_subcommand(1);
  RunConfig cfg;

  struct Entry {
    const char* name;
    const char* help;
    Outcome (*fn)(const RunConfig&);
  };
  const Entry entries[] = {
      {"group", "group summary: order, classes, centralizers, commuting-pair orbits", cmd_group},
      {"verify", "certify the Hopf, quasitriangular and ribbon structure", cmd_verify},
      {"irreps", "irreducible modules and their characters", cmd_irreps},
      {"fusion", "fusion coefficients from character decomposition", cmd_fusion},
      {"modular", "S, T and Fourier matrices with identity checks", cmd_modular},
      {"verlinde", "compare Verlinde fusion with the brute-force table", cmd_verlinde},
      {"nichols", "degree dimensions of the quantum symmetrizer image", cmd_nichols},
  };
  std::vector<std::pair<CLI::App*, Outcome (*)(const RunConfig&)>> subs;
  for (const auto& e : entries) {
    CLI::App* sub = app.add_subcommand(e.name, e.help);
    add_common(sub, cfg);
    subs.emplace_back(sub, e.fn);
  }
  app.get_subcommand("verify")->add_option("--suite", cfg.suite, "suite name or all");
  app.get_subcommand("verify")
      ->add_option("--triple-limit", cfg.triple_limit, "largest |G| for triple-tensor checks")
      ->check(CLI::PositiveNumber);
  CLI::App* nich = app.get_subcommand("nichols");
  nich->add_option("--label", cfg.label, "irreducible module index");
  nich->add_option("--nmax", cfg.nmax, "highest degree")->check(CLI::PositiveNumber);
  nich->add_option("--limit", cfg.limit, "largest d^n handled")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    std::size_t used = 0;
    cfg.seed = std::stoull(cfg.seed_text, &used, 0);
    if (used != cfg.seed_text.size()) throw std::invalid_argument("trailing characters");
  } catch (const std::exception&) {
    std::cerr << "error: bad --seed value: " << cfg.seed_text << "\n";
    return 2;
  }

  Outcome result;
  try {
    for (const auto& [sub, fn] : subs)
      if (sub->parsed()) result = fn(cfg);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const NumericalError& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return 1;
  }

  if (cfg.out.empty()) {
    std::cout << result.text;
  } else {
    std::ofstream f(cfg.out, std::ios::binary);
    if (!f) {
      std::cerr << "error: cannot write " << cfg.out << "\n";
      return 2;
    }
    f << result.text;
  }
  return result.code;
}
