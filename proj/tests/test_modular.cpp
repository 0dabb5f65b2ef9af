#include <doctest.h>

#include "dgd/export.hpp"
#include "dgd/modular.hpp"
#include "helpers.hpp"

using namespace dgd;

namespace {

double max_entry(const Eigen::MatrixXcd& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

const IdentityCheck* find(const ModularReport& rep, const std::string& name) {
  for (const auto& c : rep.checks)
    if (c.name == name) return &c;
  return nullptr;
}

// N(i,j,k) from explicit tensor-product modules: decompose the trace of Δ(δ_h g) on V_i⊗V_j.
FusionTable fusion_from_modules(const DoubleIrreps& irr) {
  const FiniteGroup& G = *irr.group();
  const int n = G.order(), r = irr.size();
  std::vector<DoubleModule> mods;
  for (int i = 0; i < r; ++i) mods.push_back(induce_module(irr, i));
  FusionTable f{r, std::vector<int>(static_cast<std::size_t>(r) * r * r), 0.0};
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      std::vector<cplx> chi(static_cast<std::size_t>(n) * n);
      for (int h = 0; h < n; ++h)
        for (int g = 0; g < n; ++g) chi[h * n + g] = tensor_action(mods[i], mods[j], h, g).trace();
      const InvariantFunction prod = project_invariant(irr.space(), chi);
      for (int k = 0; k < r; ++k) {
        const cplx c = inner_product(prod, irr.character(k));
        f.residual = std::max(f.residual, std::abs(c - std::round(c.real())));
        f.N[(static_cast<std::size_t>(i) * r + j) * r + k] = static_cast<int>(std::lround(c.real()));
      }
    }
  return f;
}

}  // namespace

TEST_CASE("GL2 words") {
  const GL2 s = generator("s"), t = generator("t");
  CHECK(s == GL2{0, 1, -1, 0});
  CHECK(t == GL2{1, 1, 0, 1});
  CHECK(s * s * s * s == GL2{});
  CHECK(s * generator("s^-1") == GL2{});
  CHECK(parse_word("") == GL2{});
  CHECK(parse_word("s t^-1 s^4 j1") == s * generator("t^-1") * generator("j1"));
  CHECK(parse_word("s*s") == s * s);
  CHECK_THROWS_AS(parse_word("q"), InputError);
  CHECK(generator("j1").det() == -1);
}

TEST_CASE("actions on invariant functions") {
  const auto g = testing::make("S3");
  const DoubleIrreps irr(g);
  for (int i = 0; i < irr.size(); ++i) {
    const InvariantFunction chi = irr.character(i);
    CHECK(max_abs_diff(act(GL2{}, chi), chi) == 0.0);
    double inv = 1;
    const InvariantFunction s4 = act(parse_word("s s s s"), chi, ActionKind::dotprime, &inv);
    CHECK(max_abs_diff(s4, chi) <= 1e-12);
    CHECK(inv <= 1e-12);
    CHECK(max_abs_diff(act(parse_word("s^4"), chi, ActionKind::dot), chi) <= 1e-12);
  }

  // (h,g)(a b; c d) = (h^a g^c, h^b g^d) on C4
  const auto c4 = testing::make("C4");
  const PairSpacePtr sp = make_pair_space(c4);
  auto rng = testing::rng();
  for (int trial = 0; trial < 20; ++trial) {
    const InvariantFunction f = random_invariant(sp, rng);
    for (const char* w : {"s", "t", "j1", "j2", "s t", "t^-1 s j2"}) {
      const GL2 m = parse_word(w);
      const InvariantFunction r = act(m, f);
      for (int h = 0; h < 4; ++h)
        for (int k = 0; k < 4; ++k)
          CHECK(std::abs(r(h, k) - f(c4->mul(c4->pow(h, m.a), c4->pow(k, m.c)),
                                     c4->mul(c4->pow(h, m.b), c4->pow(k, m.d)))) <= 1e-12);
    }
  }
}

TEST_CASE("modular data of small groups") {
  {
    const DoubleIrreps irr(testing::make("trivial"));
    const ModularData md = modular_data(irr);
    CHECK(md.S.rows() == 1);
    CHECK(std::abs(md.S(0, 0) - cplx(1)) <= 1e-12);
    CHECK(std::abs(md.T(0, 0) - cplx(1)) <= 1e-12);
    CHECK(std::abs(md.FT(0, 0) - cplx(1)) <= 1e-12);
  }
  // abelian groups: FT((a,χ1),(b,χ2)) = (1/n) χ1(b) conj(χ2(a))
  for (const char* spec : {"C2", "C3", "C4", "prod(C2,C2)"}) {
    CAPTURE(spec);
    const auto g = testing::make(spec);
    const DoubleIrreps irr(g);
    const ModularData md = modular_data(irr);
    const int n = g->order();
    for (int i = 0; i < irr.size(); ++i)
      for (int j = 0; j < irr.size(); ++j) {
        const MGLabel a = irr.labels()[i], b = irr.labels()[j];
        const int ga = irr.classes().reps[a.class_index], gb = irr.classes().reps[b.class_index];
        const cplx want = irr.centralizer_trace(a.class_index, a.irrep_index, gb) *
                          std::conj(irr.centralizer_trace(b.class_index, b.irrep_index, ga)) / double(n);
        CHECK(std::abs(md.FT(i, j) - want) <= 1e-12);
      }
  }
  // the C2 matrix is ½[[1,1,1,1],[1,-1,1,-1],[1,1,-1,-1],[1,-1,-1,1]] up to label order
  const DoubleIrreps c2(testing::make("C2"));
  const ModularData md = modular_data(c2);
  int plus = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      CHECK(std::abs(std::abs(md.FT(i, j)) - 0.5) <= 1e-12);
      plus += md.FT(i, j).real() > 0;
    }
  CHECK(plus == 10);
}

TEST_CASE("T eigenvalues are central character ratios") {
  for (const char* spec : {"S3", "Q8", "A4"}) {
    CAPTURE(spec);
    const DoubleIrreps irr(testing::make(spec));
    const ModularData md = modular_data(irr);
    for (int i = 0; i < irr.size(); ++i) {
      const MGLabel l = irr.labels()[i];
      const int rep = irr.classes().reps[l.class_index];
      const double dim = irr.centralizer_table(l.class_index).dims[l.irrep_index];
      CHECK(std::abs(md.T(i, i) - irr.centralizer_trace(l.class_index, l.irrep_index, rep) / dim) <= 1e-9);
    }
    CHECK(md.t_offdiagonal <= 1e-9);
  }
}

TEST_CASE("S agrees with traces of the double braiding") {
  for (const char* spec : {"C3", "S3", "Q8", "D4"}) {
    CAPTURE(spec);
    const auto g = testing::make(spec);
    const DoubleIrreps irr(g);
    const ModularData md = modular_data(irr);
    const int r = irr.size();
    std::vector<DoubleModule> mods;
    for (int i = 0; i < r; ++i) mods.push_back(induce_module(irr, i));
    Eigen::MatrixXcd m(r, r);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j)
        m(i, j) = (braiding_matrix(mods[j], mods[i]) * braiding_matrix(mods[i], mods[j])).trace() / double(g->order());
    // S is the double-braiding trace matrix or its conjugate, depending on orientation
    CHECK(std::min(max_entry(md.S - m), max_entry(md.S - m.conjugate())) <= 1e-9);
  }
}

TEST_CASE("fusion") {
  {
    const DoubleIrreps irr(testing::make("trivial"));
    const FusionTable f = verlinde_fusion(modular_data(irr));
    CHECK(f.N == std::vector<int>{1});
  }
  const DoubleIrreps c2(testing::make("C2"));
  const FusionTable fc = fusion_bruteforce(c2);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      int row = 0;
      for (int k = 0; k < 4; ++k) {
        CHECK((fc(i, j, k) == 0 || fc(i, j, k) == 1));
        row += fc(i, j, k);
      }
      CHECK(row == 1);
      CHECK(fc(0, j, i) == (i == j ? 1 : 0));
    }

  for (const char* spec : {"C2", "S3", "D4", "Q8", "A4"}) {
    CAPTURE(spec);
    const DoubleIrreps irr(testing::make(spec));
    const ModularData md = modular_data(irr);
    const FusionTable brute = fusion_bruteforce(irr);
    const FusionTable verl = verlinde_fusion(md);
    CHECK(first_mismatch(brute, verl) == -1);
    CHECK(brute.residual <= 1e-6);
    CHECK(verl.residual <= 1e-6);
    const FusionRingReport ring = check_fusion_ring(brute, md.dims);
    CHECK(ring.pass());
  }

  // independent oracle: decomposing explicit tensor-product modules
  for (const char* spec : {"C2", "S3", "Q8", "D4"}) {
    CAPTURE(spec);
    const DoubleIrreps irr(testing::make(spec));
    const FusionTable explicit_table = fusion_from_modules(irr);
    CHECK(explicit_table.residual <= 1e-9);
    CHECK(first_mismatch(explicit_table, fusion_bruteforce(irr)) == -1);
  }
}

TEST_CASE("fusion ring checks reject broken tables") {
  const DoubleIrreps irr(testing::make("S3"));
  const ModularData md = modular_data(irr);
  FusionTable f = fusion_bruteforce(irr);
  CHECK(check_fusion_ring(f, md.dims).pass());
  FusionTable g = f;
  g.N[(1 * g.rank + 2) * g.rank + 3] += 1;
  const FusionRingReport rep = check_fusion_ring(g, md.dims);
  CHECK_FALSE(rep.commutative);
  CHECK_FALSE(rep.dimension_homomorphism);
  CHECK(first_mismatch(f, g) >= 0);
}

TEST_CASE("modular identities") {
  {
    const DoubleIrreps irr(testing::make("trivial"));
    const ModularReport rep = verify_modular_identities(irr, modular_data(irr));
    CHECK(rep.pass());
    CHECK(rep.max_deviation() <= 1e-12);
  }
  const DoubleIrreps irr(testing::make("S3"));
  const ModularData md = modular_data(irr);
  const ModularReport rep = verify_modular_identities(irr, md);
  for (const auto& c : rep.checks) {
    CAPTURE(c.name);
    if (c.asserted) CHECK(c.deviation <= 1e-9);
  }
  CHECK(rep.pass());
  for (const char* name : {"FT unitary", "FT Hermitian", "FT involutive", "S^4 = I", "S^2 = (ST)^3"}) {
    CAPTURE(name);
    const IdentityCheck* c = find(rep, name);
    REQUIRE(c != nullptr);
    CHECK(c->pass);
  }
  // off the invariant subspace the relation fails and is only recorded
  bool recorded = false;
  for (const auto& c : rep.checks)
    if (!c.asserted) {
      recorded = true;
      CHECK(c.deviation > 1e-6);
    }
  CHECK(recorded);

  // FT is the transpose of the swap operator matrix; s undoes 𝒮
  std::vector<InvariantFunction> chars;
  for (int i = 0; i < irr.size(); ++i) chars.push_back(irr.character(i));
  CHECK(max_entry(md.FT - operator_matrix(chars, swap_arguments).transpose()) <= 1e-9);
  CHECK(max_entry(operator_matrix(chars, modular_s_inverse) * md.S -
                  Eigen::MatrixXcd::Identity(irr.size(), irr.size())) <= 1e-9);
}

TEST_CASE("every builtin group") {
  for (const auto& spec : builtin_specs()) {
    CAPTURE(spec);
    const DoubleIrreps irr(testing::make(spec));
    const ModularData md = modular_data(irr);
    ModularOptions opt;
    opt.samples = 20;
    const ModularReport rep = verify_modular_identities(irr, md, opt);
    for (const auto& c : rep.checks)
      if (c.asserted && !c.pass) FAIL_CHECK(c.name << " deviation " << c.deviation);
    const FusionTable verl = verlinde_fusion(md);
    CHECK(first_mismatch(verl, fusion_bruteforce(irr)) == -1);
    CHECK(check_fusion_ring(verl, md.dims).pass());
  }
}

TEST_CASE("export") {
  CHECK(clean_number(-0.0) == 0.0);
  CHECK_FALSE(std::signbit(clean_number(-1e-15)));
  CHECK(clean_number(0.1234567890123456) == 0.123456789012);
  CHECK(complex_json({-0.0, 1e-16}).dump() == "[0.0,0.0]");

  const DoubleIrreps irr(testing::make("S3"));
  const ModularData md = modular_data(irr);
  const Json j = modular_json("S3", irr, md);
  CHECK(j["format"] == "dgd-modular-v1");
  CHECK(j["S"].size() == 8);
  CHECK(j["S"][0][0].size() == 2);
  CHECK(j.dump() == modular_json("S3", irr, modular_data(irr)).dump());

  const Json f = fusion_json(fusion_bruteforce(irr));
  CHECK(f["rank"] == 8);
  CHECK(f["N"][0][3][3] == 1);

  const Json t = irreps_json(irr);
  CHECK(t["num_labels"] == 8);
  CHECK(t["sum_dim_squared"] == 36);
  CHECK(t["rows"].size() == 8);
  CHECK(t["columns"].size() == 8);

  const std::string csv = fusion_csv(fusion_bruteforce(DoubleIrreps(testing::make("C2"))));
  CHECK(csv.rfind("i,j,k,N\n0,0,0,1\n", 0) == 0);
  CHECK(matrix_csv(Eigen::MatrixXcd::Identity(2, 2)) == "1+0i,0+0i\n0+0i,1+0i\n");
}
