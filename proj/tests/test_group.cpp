#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <set>

#include "helpers.hpp"

using namespace dgd;

namespace {

// Classes by naive closure under conjugation, as sorted sets.
std::set<std::vector<int>> naive_classes(const FiniteGroup& g) {
  std::set<std::vector<int>> out;
  for (int a = 0; a < g.order(); ++a) {
    std::set<int> cls;
    for (int x = 0; x < g.order(); ++x) cls.insert(g.mul(g.mul(x, a), g.inv(x)));
    out.insert({cls.begin(), cls.end()});
  }
  return out;
}

// Orbit count of commuting pairs by Burnside's lemma.
int burnside_pair_orbits(const FiniteGroup& g) {
  const int n = g.order();
  long long fixed = 0;
  for (int x = 0; x < n; ++x)
    for (int h = 0; h < n; ++h)
      for (int k = 0; k < n; ++k)
        if (g.commute(h, k) && g.conj(x, h) == h && g.conj(x, k) == k) ++fixed;
  return static_cast<int>(fixed / n);
}

std::vector<int> sorted_sizes(const ConjugacyData& cd) {
  std::vector<int> s;
  for (int c = 0; c < cd.num_classes(); ++c) s.push_back(cd.class_size(c));
  std::sort(s.begin(), s.end());
  return s;
}

}  // namespace

TEST_CASE("trivial group") {
  const FiniteGroup g = build_group("cyclic:1");
  CHECK(g.order() == 1);
  CHECK(g.mul(0, 0) == 0);
  CHECK(validate_group(g.cayley(), 1).pass);
  const auto orb = commuting_pair_orbits(g);
  CHECK(orb.pairs.size() == 1);
  CHECK(orb.num_orbits() == 1);
}

TEST_CASE("symmetric group on three letters") {
  const FiniteGroup g = build_group("sym:3");
  CHECK(g.order() == 6);
  const ConjugacyData cd = conjugacy_classes(g);
  REQUIRE(cd.num_classes() == 3);
  CHECK(sorted_sizes(cd) == std::vector<int>{1, 2, 3});
  CHECK(cd.class_size(0) == 1);
  for (int c = 0; c < 3; ++c) {
    const int want = cd.class_size(c) == 1 ? 6 : cd.class_size(c) == 3 ? 2 : 3;
    CHECK(cd.centralizers[c].group->order() == want);
  }
  const auto orb = commuting_pair_orbits(g);
  CHECK(orb.pairs.size() == 18);
  CHECK(orb.num_orbits() == 8);
}

TEST_CASE("small group examples") {
  const FiniteGroup v4 = build_group("prod(cyclic:2,cyclic:2)");
  CHECK(v4.order() == 4);
  CHECK(conjugacy_classes(v4).num_classes() == 4);

  const ConjugacyData c3 = conjugacy_classes(build_group("cyclic:3"));
  CHECK(c3.num_classes() == 3);
  for (const auto& z : c3.centralizers) CHECK(z.group->order() == 3);

  CHECK(sorted_sizes(conjugacy_classes(build_group("q8"))) == std::vector<int>{1, 1, 2, 2, 2});

  for (int n = 1; n <= 7; ++n) {
    const auto orb = commuting_pair_orbits(build_group("cyclic:" + std::to_string(n)));
    CHECK(orb.pairs.size() == static_cast<std::size_t>(n * n));
    CHECK(orb.num_orbits() == n * n);
  }
}

TEST_CASE("validate_group on hand-made tables") {
  CHECK(validate_group({0}, 1).pass);
  CHECK(validate_group({0, 1, 1, 0}, 2).pass);

  const ValidationReport bad = validate_group({0, 1, 1, 1}, 2);
  CHECK_FALSE(bad.pass);
  REQUIRE_FALSE(bad.violations.empty());
  bool row1 = false;
  for (const auto& v : bad.violations) row1 |= v.axiom == "latin" && v.message.find("row 1") != std::string::npos;
  CHECK(row1);

  // non-associative loop of order 5 (a Latin square with identity 0)
  const std::vector<int> loop = {0, 1, 2, 3, 4, 1, 0, 3, 4, 2, 2, 4, 0, 1, 3, 3, 2, 4, 0, 1, 4, 3, 1, 2, 0};
  const ValidationReport l = validate_group(loop, 5);
  CHECK_FALSE(l.pass);
  CHECK(l.identity == 0);

  CHECK_FALSE(validate_group({0, 1, 2}, 2).pass);
  CHECK_FALSE(validate_group({0, 5, 1, 0}, 2).pass);
}

TEST_CASE("Cayley files") {
  CHECK_THROWS_AS(parse_cayley_text("2\n0 1\n1 1\n", "bad"), InputError);
  CHECK_THROWS_AS(parse_cayley_text("2\n0 1\n1\n", "short"), InputError);
  CHECK_THROWS_AS(parse_cayley_text("", "empty"), InputError);

  // identity is element 1 in the file; loading re-indexes it to 0
  const FiniteGroup g = parse_cayley_text("3\n2 0 1\n0 1 2\n1 2 0\n", "shifted");
  CHECK(g.order() == 3);
  CHECK(g.mul(0, 1) == 1);
  CHECK(g.mul(1, 0) == 1);
  CHECK(validate_group(g.cayley(), 3).pass);

  const std::string path = "dgd_test_c2.cayley";
  {
    std::ofstream f(path);
    f << "2\n0 1\n1 0\n";
  }
  CHECK(build_group("file:" + path).order() == 2);
  std::remove(path.c_str());
  CHECK_THROWS_AS(build_group("file:/nonexistent/x.cayley"), InputError);
}

TEST_CASE("group spec grammar") {
  CHECK(build_group("dihedral:4").order() == 8);
  CHECK(build_group("D4").order() == 8);
  CHECK(build_group("sym:4").order() == 24);
  CHECK(build_group("alt:4").order() == 12);
  CHECK(build_group("Q8").order() == 8);
  CHECK(build_group("prod(S3,prod(C2,C2))").order() == 24);
  CHECK(build_group("trivial").order() == 1);
  CHECK_THROWS_AS(build_group("banana"), InputError);
  CHECK_THROWS_AS(build_group("cyclic:x"), InputError);
  CHECK_THROWS_AS(build_group("prod(C2)"), InputError);
  CHECK_THROWS_AS(build_group("cyclic:65"), InputError);
  CHECK(build_group("cyclic:65", 100).order() == 65);
  CHECK_THROWS_AS(build_group("sym:5", 64), InputError);
}

TEST_CASE("powers") {
  const FiniteGroup g = build_group("C6");
  for (int a = 0; a < 6; ++a) {
    CHECK(g.pow(a, 0) == 0);
    CHECK(g.pow(a, 6) == 0);
    CHECK(g.pow(a, -1) == g.inv(a));
    CHECK(g.pow(a, 7) == a);
  }
}

TEST_CASE("invariants over every builtin group") {
  for (const auto& spec : builtin_specs()) {
    CAPTURE(spec);
    const FiniteGroup g = build_group(spec);
    const int n = g.order();
    CHECK(validate_group(g.cayley(), n).pass);
    const ConjugacyData cd = conjugacy_classes(g);

    // partition agrees with naive closure; reps are class minima
    std::set<std::vector<int>> ours(cd.classes.begin(), cd.classes.end());
    CHECK(ours == naive_classes(g));
    for (int c = 0; c < cd.num_classes(); ++c) {
      CHECK(cd.reps[c] == cd.classes[c].front());
      if (c) CHECK(cd.reps[c - 1] < cd.reps[c]);
    }

    int class_count_sum = 0;
    for (int a = 0; a < n; ++a) {
      const int c = cd.class_of[a];
      int cent = 0;
      for (int x = 0; x < n; ++x) cent += g.commute(a, x);
      CHECK(cd.class_size(c) * cent == n);
    }
    for (int c = 0; c < cd.num_classes(); ++c) {
      const Centralizer& z = cd.centralizers[c];
      CHECK(z.elements.front() == 0);
      CHECK(z.group->order() * cd.class_size(c) == n);
      CHECK(validate_group(z.group->cayley(), z.group->order()).pass);
      for (int i = 0; i < z.group->order(); ++i)
        for (int j = 0; j < z.group->order(); ++j)
          CHECK(z.elements[z.group->mul(i, j)] == g.mul(z.elements[i], z.elements[j]));
      class_count_sum += conjugacy_classes(*z.group).num_classes();
    }

    const auto orb = commuting_pair_orbits(g);
    CHECK(orb.num_orbits() == burnside_pair_orbits(g));
    CHECK(orb.num_orbits() == class_count_sum);
    std::size_t members = 0;
    for (const auto& o : orb.orbits) members += o.size();
    CHECK(members == orb.pairs.size());
  }
}
