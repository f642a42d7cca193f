#include "doctest.h"
#include "nig/classify.hpp"
#include "nig/families.hpp"
#include "nig/graph_io.hpp"

using namespace nig;

TEST_CASE("theorem names") {
  CHECK(theorem_from_string("3.10") == Theorem::k3_10);
  CHECK(std::string(to_string(Theorem::k2_9)) == "2.9");
  CHECK_FALSE(theorem_from_string("3.7"));
}

TEST_CASE("girth lower bound equality") {
  auto c8 = classify_theorem_3_6(gen_cycle(8));
  CHECK(c8.structural);
  CHECK(c8.computed);
  REQUIRE(c8.family);
  CHECK(*c8.family == FamilySpec{FamilyKind::kCycle, {8}});

  auto k23 = classify_theorem_3_6(gen_complete_bipartite(2, 3));
  CHECK(k23.structural);
  CHECK(k23.computed);
  REQUIRE(k23.family);
  CHECK(k23.family->kind == FamilyKind::kCompleteBipartite);

  auto c6 = classify_theorem_3_6(gen_cycle(6));
  CHECK_FALSE(c6.structural);
  CHECK_FALSE(c6.computed);
  CHECK(c6.family == std::nullopt);

  // K_{2,2} = C4 is a 4-cycle with 4 = 0 mod 4.
  CHECK(classify_theorem_3_6(gen_cycle(4)).structural);
  CHECK_FALSE(classify_theorem_3_6(gen_cycle(7)).structural);

  CHECK_THROWS_AS(classify_theorem_3_6(gen_path(4)), std::invalid_argument);
  CHECK_THROWS_AS(classify_theorem_3_6(disjoint_union(gen_cycle(4), gen_cycle(4))), std::invalid_argument);
}

TEST_CASE("girth equality plus one, girth at least five") {
  auto c6 = classify_theorem_3_10(gen_cycle(6));
  CHECK(c6.structural);
  CHECK(c6.computed);
  REQUIRE(c6.family);
  CHECK(c6.family->kind == FamilyKind::kCycle);

  auto b555 = classify_theorem_3_10(gen_theta(5, 5, 5));
  CHECK(b555.structural);
  CHECK(b555.computed);
  REQUIRE(b555.family);
  CHECK(*b555.family == FamilySpec{FamilyKind::kTheta, {5, 5, 5}});

  auto c5 = classify_theorem_3_10(gen_cycle(5));
  CHECK_FALSE(c5.structural);
  CHECK_FALSE(c5.computed);

  auto cs = classify_theorem_3_10(gen_cycle_star(8, 2));
  CHECK(cs.structural);
  CHECK(cs.computed);
  REQUIRE(cs.family);
  CHECK(*cs.family == FamilySpec{FamilyKind::kCycleStar, {8, 2}});

  auto one_major = classify_theorem_3_10(gen_canonical_unicyclic(6, {1, 0, 0, 0, 0, 0}));
  CHECK(one_major.structural);
  CHECK(one_major.computed);

  auto five = classify_theorem_3_10(gen_canonical_unicyclic(5, {1, 0, 1, 0, 0}));
  CHECK(five.structural);
  CHECK(five.computed);
  CHECK(five.agrees());

  CHECK_THROWS_AS(classify_theorem_3_10(gen_path(5)), std::invalid_argument);
}

TEST_CASE("girth equality plus one, girth three or four") {
  auto k3 = classify_theorem_3_10(gen_complete(3));
  CHECK(k3.computed);
  CHECK(k3.structural);
  auto k4 = classify_theorem_3_10(gen_complete(4));
  CHECK_FALSE(k4.computed);
  CHECK_FALSE(k4.structural);
  auto c4 = classify_theorem_3_10(gen_cycle(4));
  CHECK_FALSE(c4.computed);  // n(C4) = 1
  CHECK_FALSE(c4.structural);
}

TEST_CASE("shape probes") {
  CHECK(is_cycle_graph(gen_cycle(7)));
  CHECK_FALSE(is_cycle_graph(gen_path(7)));
  CHECK(complete_bipartite_sides(gen_complete_bipartite(2, 4)) == std::pair{2, 4});
  CHECK_FALSE(complete_bipartite_sides(gen_cycle(6)));
  auto shape = canonical_unicyclic_shape(gen_canonical_unicyclic(5, {0, 2, 0, 1, 0}));
  REQUIRE(shape);
  CHECK(shape->girth == 5);
  int total = 0;
  for (int t : shape->leaves) total += t;
  CHECK(total == 3);
  CHECK(cycle_star_shape(gen_cycle_star(6, 3)) == std::pair{6, 3});
  CHECK_FALSE(cycle_star_shape(gen_cycle(6)));
}

TEST_CASE("parity rule") {
  CHECK(unicyclic_parity_rule({6, {1, 0, 0, 0, 0, 0}}));
  CHECK(unicyclic_parity_rule({5, {1, 0, 1, 0, 0}}));        // segments 1 and 2
  CHECK_FALSE(unicyclic_parity_rule({4, {1, 1, 0, 0}}));     // segments 0 and 2
  CHECK(unicyclic_parity_rule({6, {1, 0, 1, 0, 0, 0}}));     // segments 1 and 3
  CHECK(unicyclic_parity_rule({5, {1, 1, 0, 0, 0}}));        // segments 0 and 3
  CHECK_FALSE(unicyclic_parity_rule({5, {1, 1, 1, 0, 0}}));  // segments 0, 0 and 2
  CHECK(unicyclic_parity_rule({7, {1, 0, 1, 0, 1, 0, 0}}));        // 1, 1, 2
  CHECK_FALSE(unicyclic_parity_rule({7, {1, 1, 1, 0, 0, 0, 0}}));  // 0, 0, 4
}

TEST_CASE("diameter equality") {
  auto p4 = classify_theorem_2_9(gen_path(4));
  CHECK(p4.structural);
  CHECK(p4.computed);
  CHECK(p4.k == 1);
  CHECK(p4.inertia.rank() == 4);
  CHECK(p4.rank_equality);

  auto c6 = classify_theorem_2_9(gen_cycle(6));
  CHECK_FALSE(c6.computed);
  CHECK(c6.inertia.negative == 3);

  auto k2 = classify_theorem_2_9(gen_path(2));
  CHECK(k2.structural);
  CHECK(k2.computed);

  auto g1 = classify_theorem_2_9(construct_G1(2).graph);
  CHECK(g1.structural);
  CHECK(g1.computed);
  CHECK(g1.k == 2);
  CHECK(g1.witness.rfind("embedding=", 0) == 0);

  CHECK_THROWS_AS(classify_theorem_2_9(gen_path(5)), std::invalid_argument);
  CHECK_THROWS_AS(classify_theorem_2_9(gen_complete_bipartite(2, 3)), std::invalid_argument);
  CHECK_THROWS_AS(classify_theorem_2_9(Graph(2)), std::invalid_argument);
}

TEST_CASE("describe flags disagreement") {
  Verdict v;
  v.structural = true;
  v.computed = false;
  CHECK(v.describe().find("MISMATCH") != std::string::npos);
  v.computed = true;
  CHECK(v.describe().find("MISMATCH") == std::string::npos);
}
