#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "revlab/error.hpp"
#include "revlab/fixtures.hpp"
#include "revlab/postulates.hpp"
#include "revlab/random.hpp"
#include "support.hpp"

using namespace revlab;

namespace {

SubsetMask S(std::initializer_list<int> members) { return mask_of(members); }

std::vector<oracle::Mask> chain_of(const Witness& w) {
  std::vector<oracle::Mask> xs;
  for (const auto& s : w.sets) xs.push_back(s.set.bits);
  return xs;
}

}  // namespace

TEST_CASE("(|1) containment") {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 50; ++t) {
    const PseudoDistance d = random_distance(1 + t % 4, 4, DistanceShape::kAny, rng);
    CHECK(check_containment(operator_from_distance(d)).holds);
  }
  const SetOperator bad =
      operator_from_distance(trivial_distance(3)).with_entry(S({0}), S({1, 2}), S({0}));
  const ConditionResult r = check_containment(bad);
  CHECK_FALSE(r.holds);
  REQUIRE(r.witness);
  CHECK(r.witness->sets[0].set == S({0}));
  CHECK(r.witness->sets[1].set == S({1, 2}));

  CHECK(check_containment(*fixture_patchwork().op).holds);
}

TEST_CASE("(|2) intersection") {
  CHECK(check_intersection(operator_from_distance(trivial_distance(3))).holds);
  CHECK(check_intersection(operator_from_distance(hamming_distance(2))).holds);

  // Search the two-element tables for one whose large self-distance breaks (|2).
  std::optional<oracle::Ranks> found;
  oracle::for_each_table(2, 5, [&](const oracle::Ranks& r) {
    if (!found && r.at(0, 0) == 5 && r.at(0, 1) < 5) found = r;
  });
  REQUIRE(found);
  const ConditionResult r = check_intersection(operator_from_distance(support::distance_of(*found)));
  CHECK_FALSE(r.holds);
  REQUIRE(r.witness);
}

TEST_CASE("comparison graph structure") {
  SUBCASE("shrinking the right argument is an edge") {
    std::mt19937_64 rng(2);
    for (int t = 0; t < 20; ++t) {
      const SetOperator op = random_contained_operator(3, rng);
      const ComparisonGraph g(op);
      for (int i = 0; i < op.family_size(); ++i) {
        for (int j = 0; j < op.family_size(); ++j) {
          for (int k = 0; k < op.family_size(); ++k) {
            const SubsetMask a = subset_at(i), b = subset_at(j), b2 = subset_at(k);
            if (b2.subset_of(b)) CHECK(g.le(g.node_index(a, b), g.node_index(a, b2)));
          }
        }
      }
    }
  }
  SUBCASE("single element") {
    const ComparisonGraph g(operator_from_distance(trivial_distance(1)));
    CHECK(g.nodes().size() == 1);
    CHECK(g.le(0, 0));
    CHECK_FALSE(g.strict(0, 0));
  }
  SUBCASE("edges follow the definition") {
    std::mt19937_64 rng(3);
    const SetOperator op = random_contained_operator(3, rng);
    const ComparisonGraph g(op);
    for (int i = 0; i < 7; ++i) {
      for (int j = 0; j < 7; ++j) {
        for (int k = 0; k < 7; ++k) {
          const SubsetMask a = subset_at(i), b = subset_at(j), b2 = subset_at(k);
          const SubsetMask r = op(a, b | b2);
          const std::size_t u = g.node_index(a, b), v = g.node_index(a, b2);
          if (r.intersects(b)) {
            CHECK(g.le(u, v));
            if (!r.intersects(b2)) CHECK(g.strict(u, v));
          }
        }
      }
    }
    // Unordered pairs: both orders name one node.
    CHECK(g.node_index(S({0}), S({1, 2})) == g.node_index(S({1, 2}), S({0})));
    CHECK(g.nodes().size() == 28);
  }
  SUBCASE("needs (|1)") {
    const SetOperator bad =
        operator_from_distance(trivial_distance(2)).with_entry(S({0}), S({1}), S({0}));
    CHECK_THROWS_AS(build_comparison_graph(bad), PreconditionError);
  }
}

TEST_CASE("Loop holds for symmetric distances and has no strict cycle") {
  CHECK(check_loop(operator_from_distance(hamming_distance(1))).holds);
  std::mt19937_64 rng(4);
  for (int t = 0; t < 120; ++t) {
    const int n = 1 + t % 4;
    const PseudoDistance d = random_distance(n, 4, DistanceShape::kSymmetric, rng);
    const SetOperator op = operator_from_distance(d);
    CHECK(check_loop(op).holds);

    const ComparisonGraph g(op);
    const BitMatrix reach = g.edges().reflexive_transitive_closure();
    for (std::size_t u = 0; u < g.nodes().size(); ++u) {
      for (std::size_t v : g.strict_edges().row_members(u)) CHECK_FALSE(reach.test(v, u));
    }
  }
}

TEST_CASE("Loop fails on the patchwork operator with a checkable chain") {
  const SetOperator op = *fixture_patchwork().op;
  const ConditionResult r = check_loop(op);
  CHECK_FALSE(r.holds);
  REQUIRE(r.witness);
  const Witness& w = *r.witness;

  CHECK(oracle::loop_chain_violates(support::fn_of(op), chain_of(w)));

  REQUIRE(w.cycle.size() >= 2);
  CHECK(w.cycle.front() == w.cycle.back());
  const ComparisonGraph g(op);
  bool strict = false;
  for (std::size_t i = 0; i + 1 < w.cycle.size(); ++i) {
    const std::size_t u = g.node_index(w.cycle[i].first, w.cycle[i].second);
    const std::size_t v = g.node_index(w.cycle[i + 1].first, w.cycle[i + 1].second);
    CHECK(g.le(u, v));
    strict = strict || g.strict(u, v);
  }
  CHECK(strict);
}

TEST_CASE("Loop decision agrees with chain enumeration") {
  std::mt19937_64 rng(5);
  int violated = 0;
  for (int t = 0; t < 200; ++t) {
    const int n = 1 + t % 3;
    const SetOperator op = t % 2 ? random_contained_operator(n, rng)
                                 : operator_from_distance(
                                       random_distance(n, 3, DistanceShape::kAny, rng));
    const bool oracle_violated = oracle::loop_violated(support::fn_of(op), n);
    const ConditionResult r = check_loop(op);
    CHECK(r.holds == !oracle_violated);
    if (!r.holds) {
      ++violated;
      CHECK(oracle::loop_chain_violates(support::fn_of(op), chain_of(*r.witness)));
    }
  }
  CHECK(violated > 0);
}

TEST_CASE("relation R cases") {
  std::mt19937_64 rng(6);
  const SetOperator op = random_contained_operator(3, rng);
  const RelationR plain(op, false);
  const RelationR with_identity(op, true);
  const int m = op.family_size();
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      const SubsetMask a = subset_at(i), b = subset_at(j);
      CHECK(plain.related(a, b, a, b));
      CHECK(plain.reaches(a, b, a, b));
      for (int k = 0; k < m; ++k) {
        const SubsetMask x = subset_at(k);
        if (op(a, b | x).intersects(b)) CHECK(plain.related(a, b, a, x));
        if (op(a | x, b) != op(x, b)) CHECK(plain.related(a, b, x, b));
      }
      if (a.intersects(b)) {
        for (int k = 0; k < m; ++k) {
          for (int l = 0; l < m; ++l) CHECK(with_identity.related(a, b, subset_at(k), subset_at(l)));
        }
      }
    }
  }
  // Without the identity case, nothing beyond cases (1) and (2) is added.
  for (std::size_t u = 0; u < plain.node_count(); ++u) {
    for (std::size_t v : plain.edges().row_members(u)) {
      const auto [a, b] = plain.node(u);
      const auto [a2, b2] = plain.node(v);
      const bool case1 = a == a2 && op(a, b | b2).intersects(b);
      const bool case2 = b == b2 && op(a | a2, b) != op(a2, b);
      CHECK((case1 || case2));
    }
  }
}

TEST_CASE("R* never contradicts the generating distance") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 30; ++t) {
    const PseudoDistance d = random_distance(3, 5, DistanceShape::kAny, rng);
    const SetOperator op = operator_from_distance(d);
    const RelationR rel(op, false);
    for (std::size_t u = 0; u < rel.node_count(); ++u) {
      const auto [a, b] = rel.node(u);
      for (std::size_t v : rel.closure().row_members(u)) {
        const auto [a2, b2] = rel.node(v);
        CHECK(set_distance(d, a, b) <= set_distance(d, a2, b2));
      }
    }
  }
}

TEST_CASE("A-conditions are sound for distance-generated operators") {
  oracle::for_each_table(2, 3, [](const oracle::Ranks& r) {
    const PseudoDistance d = support::distance_of(r);
    const SetOperator op = operator_from_distance(d);
    CHECK(check_A_conditions(op, false).all_hold());
    if (d.respects_identity()) {
      const AConditionsReport rep = check_A_conditions(op, true);
      CHECK(rep.all_hold());
      REQUIRE(rep.find("(|A4)"));
      REQUIRE(rep.find("(|2)"));
    }
  });
  std::mt19937_64 rng(8);
  for (int t = 0; t < 60; ++t) {
    const int n = 3 + t % 2;
    const bool identity = t % 2 == 0;
    const PseudoDistance d = random_distance(
        n, 5, identity ? DistanceShape::kIdentity : DistanceShape::kAny, rng);
    CHECK(check_A_conditions(operator_from_distance(d), identity).all_hold());
  }
}

TEST_CASE("A-conditions catch the patchwork operator") {
  const AConditionsReport rep = check_A_conditions(*fixture_patchwork().op, false);
  CHECK_FALSE(rep.all_hold());
  int failing = 0;
  for (const char* name : {"(|A1)", "(|A2)", "(|A3)"}) {
    REQUIRE(rep.find(name));
    failing += rep.find(name)->holds ? 0 : 1;
  }
  CHECK(failing >= 1);
}

TEST_CASE("or-rule") {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 40; ++t) {
    const PseudoDistance d = random_distance(3, 4, DistanceShape::kAny, rng);
    CHECK(check_or_rule(operator_from_distance(d)).holds);
  }
  // Any table that satisfies (|A3) satisfies the or-rule.
  int with_a3 = 0;
  for (int t = 0; t < 400; ++t) {
    const SetOperator op = random_contained_operator(2 + t % 2, rng);
    const AConditionsReport rep = check_A_conditions(op, false);
    if (rep.find("(|A3)")->holds) {
      ++with_a3;
      CHECK(check_or_rule(op).holds);
    }
  }
  CHECK(with_a3 > 0);

  // A violating table on three elements, found by search.
  std::optional<SetOperator> violating;
  for (int t = 0; t < 1000 && !violating; ++t) {
    SetOperator op = random_contained_operator(3, rng);
    if (!check_or_rule(op).holds) violating = std::move(op);
  }
  REQUIRE(violating);
  const ConditionResult r = check_or_rule(*violating);
  REQUIRE(r.witness);
  const SubsetMask a = r.witness->sets[0].set, a2 = r.witness->sets[1].set,
                   b = r.witness->sets[2].set;
  const SetOperator& op = *violating;
  CHECK_FALSE((op(a, b) & op(a2, b)).subset_of(op(a | a2, b)));
}

TEST_CASE("condition results serialize") {
  const ConditionResult r = check_loop(*fixture_patchwork().op);
  const auto doc = to_json(r);
  CHECK(doc["name"] == "(|S1)");
  CHECK(doc["holds"] == false);
  CHECK(doc["witness"]["sets"].size() == r.witness->sets.size());
  CHECK(doc["witness"]["cycle"].size() == r.witness->cycle.size());
  CHECK(to_json(check_containment(*fixture_patchwork().op))["holds"] == true);
}
