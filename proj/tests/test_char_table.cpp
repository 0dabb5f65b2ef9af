#include <doctest.h>

#include <cmath>
#include <numbers>

#include "dgd/char_table.hpp"
#include "helpers.hpp"

using namespace dgd;

namespace {

// a(i,j,k) by a direct double loop over the two classes.
int naive_class_constant(const FiniteGroup& g, const ConjugacyData& cd, int i, int j, int k) {
  int count = 0;
  for (int x : cd.classes[i])
    for (int y : cd.classes[j]) count += g.mul(x, y) == cd.reps[k];
  return count;
}

bool near(cplx a, cplx b, double tol = 1e-9) { return std::abs(a - b) <= tol; }

}  // namespace

TEST_CASE("class algebra constants") {
  {
    const FiniteGroup g = build_group("trivial");
    const ClassAlgebra a(g, conjugacy_classes(g));
    CHECK(a(0, 0, 0) == 1);
  }
  {
    const FiniteGroup g = build_group("C2");
    const ClassAlgebra a(g, conjugacy_classes(g));
    CHECK(a(1, 1, 0) == 1);
    CHECK(a(1, 1, 1) == 0);
  }
  {
    const FiniteGroup g = build_group("S3");
    const ConjugacyData cd = conjugacy_classes(g);
    const ClassAlgebra a(g, cd);
    const int tr = testing::class_with_size(cd, 3);
    REQUIRE(tr >= 0);
    int total = 0;
    for (int k = 0; k < cd.num_classes(); ++k) total += a(tr, tr, k) * cd.class_size(k);
    CHECK(total == 9);
    CHECK(a(tr, tr, testing::class_with_size(cd, 3)) == 0);
  }
  for (const auto& spec : builtin_specs()) {
    CAPTURE(spec);
    const FiniteGroup g = build_group(spec);
    const ConjugacyData cd = conjugacy_classes(g);
    const ClassAlgebra a(g, cd);
    for (int i = 0; i < a.rank(); ++i)
      for (int j = 0; j < a.rank(); ++j)
        for (int k = 0; k < a.rank(); ++k) REQUIRE(a(i, j, k) == naive_class_constant(g, cd, i, j, k));
  }
}

TEST_CASE("cyclic group of order two") {
  const FiniteGroup g = build_group("C2");
  const CharacterTable t = character_table(g, conjugacy_classes(g));
  REQUIRE(t.size() == 2);
  CHECK(near(t(0, 0), 1));
  CHECK(near(t(0, 1), 1));
  CHECK(near(t(1, 0), 1));
  CHECK(near(t(1, 1), -1));
}

TEST_CASE("symmetric group on three letters") {
  const FiniteGroup g = build_group("S3");
  const ConjugacyData cd = conjugacy_classes(g);
  const CharacterTable t = character_table(g, cd);
  REQUIRE(t.size() == 3);
  CHECK(t.dims == std::vector<int>{1, 1, 2});
  const int e = 0, tr = testing::class_with_size(cd, 3), cyc = testing::class_with_size(cd, 2);
  const cplx want[3][3] = {{1, 1, 1}, {1, -1, 1}, {2, 0, -1}};
  for (int i = 0; i < 3; ++i) {
    CHECK(near(t(i, e), want[i][0]));
    CHECK(near(t(i, tr), want[i][1]));
    CHECK(near(t(i, cyc), want[i][2]));
  }
}

TEST_CASE("quaternion degrees") {
  const FiniteGroup g = build_group("Q8");
  const CharacterTable t = character_table(g, conjugacy_classes(g));
  CHECK(t.dims == std::vector<int>{1, 1, 1, 1, 2});
}

TEST_CASE("cyclic tables are the roots-of-unity tables") {
  for (int n : {3, 4, 5, 8}) {
    CAPTURE(n);
    const FiniteGroup g = build_group("cyclic:" + std::to_string(n));
    const CharacterTable t = character_table(g, conjugacy_classes(g));
    REQUIRE(t.size() == n);
    // each row is k -> w^k for some n-th root of unity w, each w once
    std::vector<bool> seen(n, false);
    const int gen = 1;  // the builtin cyclic group uses addition mod n
    for (int i = 0; i < n; ++i) {
      const cplx w = t(i, gen);
      const double ang = std::arg(w) / (2 * std::numbers::pi) * n;
      const int j = ((static_cast<int>(std::lround(ang)) % n) + n) % n;
      CHECK(std::abs(ang - std::round(ang)) < 1e-9);
      CHECK_FALSE(seen[j]);
      seen[j] = true;
      for (int k = 0; k < n; ++k) CHECK(near(t(i, k), std::pow(w, k)));
    }
  }
}

TEST_CASE("orthogonality reports") {
  {
    const FiniteGroup g = build_group("trivial");
    const auto rep = verify_orthogonality(character_table(g, conjugacy_classes(g)));
    CHECK(rep.pass);
    CHECK(rep.row_deviation == 0.0);
    CHECK(rep.column_deviation == 0.0);
  }
  const FiniteGroup s4 = build_group("S4");
  CharacterTable t = character_table(s4, conjugacy_classes(s4));
  const auto good = verify_orthogonality(t);
  CHECK(good.pass);
  CHECK(good.row_deviation <= 1e-9);
  CHECK(good.column_deviation <= 1e-9);

  t.values[1][1] = -t.values[1][1];  // sign character, a nonzero entry
  const auto bad = verify_orthogonality(t);
  CHECK_FALSE(bad.pass);
  CHECK_FALSE(bad.worst.empty());
}

TEST_CASE("tables of every builtin group and its centralizers") {
  for (const auto& spec : builtin_specs()) {
    CAPTURE(spec);
    const FiniteGroup g = build_group(spec);
    const ConjugacyData cd = conjugacy_classes(g);
    std::vector<const FiniteGroup*> groups{&g};
    for (const auto& z : cd.centralizers) groups.push_back(z.group.get());
    for (const FiniteGroup* h : groups) {
      const ConjugacyData hc = conjugacy_classes(*h);
      const CharacterTable t = character_table(*h, hc);
      CHECK(t.size() == hc.num_classes());
      CHECK(verify_orthogonality(t).pass);
      int sum = 0;
      for (int i = 0; i < t.size(); ++i) {
        CHECK(std::abs(t(i, 0) - cplx(t.dims[i], 0)) < 1e-6);
        sum += t.dims[i] * t.dims[i];
        if (i) CHECK(t.dims[i - 1] <= t.dims[i]);
      }
      CHECK(sum == h->order());
      for (int c = 0; c < t.size(); ++c) CHECK(near(t(0, c), 1));  // trivial row first
    }
  }
}

TEST_CASE("abelian tables are closed under products") {
  for (const char* spec : {"C4", "prod(C2,C2)", "C6", "prod(C2,C4)", "prod(C3,C3)"}) {
    CAPTURE(spec);
    const FiniteGroup g = build_group(spec);
    const CharacterTable t = character_table(g, conjugacy_classes(g));
    for (int d : t.dims) CHECK(d == 1);
    for (int i = 0; i < t.size(); ++i)
      for (int j = 0; j < t.size(); ++j) {
        bool found = false;
        for (int k = 0; k < t.size() && !found; ++k) {
          bool same = true;
          for (int c = 0; c < t.size() && same; ++c) same = near(t(i, c) * t(j, c), t(k, c));
          found = same;
        }
        CHECK(found);
      }
  }
}

TEST_CASE("formatting") {
  CHECK(format_complex({1, 0}) == "1+0i");
  CHECK(format_complex({-0.0, -0.0}) == "0+0i");
  CHECK(format_complex({0.5, -1e-14}) == "0.5+0i");
  CHECK(format_complex({-0.5, std::sqrt(3.0) / 2}) == "-0.5+0.866025403784i");
  const FiniteGroup g = build_group("C2");
  CHECK(character_table_csv(character_table(g, conjugacy_classes(g))) == "irrep,0,1\n0,1+0i,1+0i\n1,1+0i,-1+0i\n");
}
