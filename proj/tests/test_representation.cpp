#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>

#include "oracles.hpp"
#include "revlab/fixtures.hpp"
#include "revlab/postulates.hpp"
#include "revlab/random.hpp"
#include "revlab/representation.hpp"
#include "support.hpp"

using namespace revlab;

namespace {

bool round_trips_symmetric(const SetOperator& op, bool identity = false) {
  const PseudoDistance d = synthesize_symmetric(op, identity);
  return d.symmetric() && verify_representation(op, d).holds &&
         (!identity || d.respects_identity());
}

bool round_trips_general(const SetOperator& op, bool identity) {
  const PseudoDistance d = synthesize_general(op, identity);
  return verify_representation(op, d).holds && (!identity || d.respects_identity());
}

/// 1 when `attempt` succeeds and returns true, 0 when it is refused, -1
/// when it succeeds with a result that does not check out.
template <class F>
int accepted(F&& attempt) {
  try {
    return attempt() ? 1 : -1;
  } catch (const PostulateViolation&) {
    return 0;
  }
}

}  // namespace

TEST_CASE("total preorder extension: small cases") {
  SUBCASE("unrelated nodes stay apart, ordered by index") {
    const RankAssignment r = extend_total_preorder(BitMatrix(2));
    CHECK(r.rank_of == std::vector<std::size_t>{0, 1});
    CHECK(r.class_count == 2);
  }
  SUBCASE("mutual edges merge") {
    BitMatrix m(2);
    m.set(0, 1);
    m.set(1, 0);
    const RankAssignment r = extend_total_preorder(m);
    CHECK(r.rank_of[0] == r.rank_of[1]);
    CHECK(r.class_count == 1);
  }
  SUBCASE("chain") {
    BitMatrix m(3);
    m.set(2, 1);
    m.set(1, 0);
    const RankAssignment r = extend_total_preorder(m);
    CHECK(r.rank_of[2] < r.rank_of[1]);
    CHECK(r.rank_of[1] < r.rank_of[0]);
  }
}

TEST_CASE("total preorder extension: extends R and ties only mutual pairs") {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = 1 + draw(rng, 14);
    BitMatrix m(n);
    std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) {
      reach[i][i] = true;
      for (std::size_t j = 0; j < n; ++j) {
        if (draw(rng, 5) == 0) {
          m.set(i, j);
          reach[i][j] = true;
        }
      }
    }
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          if (reach[i][k] && reach[k][j]) reach[i][j] = true;
        }
      }
    }
    const RankAssignment r = extend_total_preorder(m);
    std::set<std::size_t> distinct(r.rank_of.begin(), r.rank_of.end());
    CHECK(distinct.size() == r.class_count);
    CHECK(*distinct.rbegin() == r.class_count - 1);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (m.test(i, j)) CHECK(r.rank_of[i] <= r.rank_of[j]);
        CHECK((r.rank_of[i] == r.rank_of[j]) == (reach[i][j] && reach[j][i]));
      }
    }
  }
}

TEST_CASE("symmetric synthesis: worked examples") {
  const SetOperator trivial = operator_from_distance(trivial_distance(2));
  CHECK(round_trips_symmetric(trivial));
  CHECK(round_trips_symmetric(trivial, true));

  const NamedFixture tripod = fixture_tripod();
  const SetOperator first = operator_from_distance(tripod.distances[0]);
  const SetOperator second = operator_from_distance(tripod.distances[1]);
  const PseudoDistance d1 = synthesize_symmetric(first);
  const PseudoDistance d2 = synthesize_symmetric(second);
  CHECK(operator_from_distance(d1) == operator_from_distance(d2));
  CHECK(d1 == d2);

  std::mt19937_64 rng(22);
  for (int t = 0; t < 50; ++t) {
    const PseudoDistance d = random_distance(4, 5, DistanceShape::kSymmetric, rng);
    CHECK(round_trips_symmetric(operator_from_distance(d)));
  }
}

TEST_CASE("general synthesis: worked examples") {
  const NamedFixture road = fixture_one_way_road();
  CHECK(round_trips_general(operator_from_distance(road.distances[1]), false));
  CHECK(round_trips_general(operator_from_distance(road.distances[1]), true));

  const SetOperator hamming = operator_from_distance(hamming_distance(2));
  const PseudoDistance d = synthesize_general(hamming, true);
  CHECK(verify_representation(hamming, d).holds);
  for (int m = 0; m < 4; ++m) CHECK(d(m, m) == 0);
}

TEST_CASE("patchwork operator is refused with the failing condition") {
  const SetOperator op = *fixture_patchwork().op;
  try {
    synthesize_symmetric(op);
    FAIL("symmetric synthesis accepted the patchwork operator");
  } catch (const PostulateViolation& v) {
    CHECK(v.failed().name == "(|S1)");
    CHECK(std::string(v.what()).find("cannot be defined by a pseudo-distance") != std::string::npos);
  }
  try {
    synthesize_general(op, false);
    FAIL("general synthesis accepted the patchwork operator");
  } catch (const PostulateViolation& v) {
    CHECK_FALSE(v.failed().holds);
    REQUIRE(v.failed().witness);
  }

  // No sampled distance represents it either.
  std::mt19937_64 rng(23);
  for (int t = 0; t < 3000; ++t) {
    const auto shape = static_cast<DistanceShape>(t % 4);
    CHECK_FALSE(verify_representation(op, random_distance(4, 6, shape, rng)).holds);
  }
}

TEST_CASE("verify_representation") {
  const NamedFixture road = fixture_one_way_road();
  CHECK(verify_representation(operator_from_distance(road.distances[0]), road.distances[1]).holds);

  const SetOperator op = operator_from_distance(trivial_distance(3));
  const PseudoDistance line(3, {0, 1, 2, 1, 0, 1, 2, 1, 0});
  const ConditionResult r = verify_representation(op, line);
  CHECK_FALSE(r.holds);
  REQUIRE(r.witness);
  CHECK(r.witness->sets.size() == 4);
  CHECK_THROWS_AS(verify_representation(op, trivial_distance(2)), DimensionError);
}

TEST_CASE("round trips: exhaustive on small universes") {
  for (int n = 1; n <= 3; ++n) {
    oracle::for_each_symmetric_table(n, 2, [&](const oracle::Ranks& r) {
      const PseudoDistance d = support::distance_of(r);
      const SetOperator op = operator_from_distance(d);
      CHECK(round_trips_symmetric(op));
      if (d.respects_identity()) CHECK(round_trips_symmetric(op, true));
    });
  }
  oracle::for_each_table(2, 3, [](const oracle::Ranks& r) {
    const PseudoDistance d = support::distance_of(r);
    const SetOperator op = operator_from_distance(d);
    CHECK(round_trips_general(op, false));
    if (d.respects_identity()) CHECK(round_trips_general(op, true));
  });
  std::mt19937_64 rng(24);
  for (int t = 0; t < 300; ++t) {
    const bool identity = t % 2 == 1;
    const PseudoDistance d = random_distance(
        3, 4, identity ? DistanceShape::kIdentity : DistanceShape::kAny, rng);
    CHECK(round_trips_general(operator_from_distance(d), identity));
  }
}

TEST_CASE("decision completeness on two elements") {
  // Operators realized by some distance; small rank ranges cover every
  // ordering pattern of the 3 (symmetric) or 4 (general) entries.
  std::set<std::vector<oracle::Mask>> sym, sym_id, gen, gen_id;
  oracle::for_each_symmetric_table(2, 2, [&](const oracle::Ranks& r) {
    sym.insert(oracle::operator_table(r));
    if (oracle::respects_identity(r)) sym_id.insert(oracle::operator_table(r));
  });
  oracle::for_each_table(2, 3, [&](const oracle::Ranks& r) {
    gen.insert(oracle::operator_table(r));
    if (oracle::respects_identity(r)) gen_id.insert(oracle::operator_table(r));
  });

  // Every table of nonempty results, (|1) or not: 3^9 of them.
  std::vector<oracle::Mask> table(9, 1);
  int total = 0, sym_count = 0, gen_count = 0;
  while (true) {
    ++total;
    const SetOperator op = support::operator_of(2, table);

    const int s = accepted([&] { return round_trips_symmetric(op); });
    CHECK(s >= 0);
    CHECK((s == 1) == (sym.count(table) > 0));
    CHECK((s == 1) == (check_containment(op).holds && check_loop(op).holds));
    const int si = accepted([&] { return round_trips_symmetric(op, true); });
    CHECK(si >= 0);
    CHECK((si == 1) == (sym_id.count(table) > 0));

    const int g = accepted([&] { return round_trips_general(op, false); });
    CHECK(g >= 0);
    CHECK((g == 1) == (gen.count(table) > 0));
    CHECK((g == 1) == check_A_conditions(op, false).all_hold());
    const int gi = accepted([&] { return round_trips_general(op, true); });
    CHECK(gi >= 0);
    CHECK((gi == 1) == (gen_id.count(table) > 0));
    CHECK((gi == 1) == check_A_conditions(op, true).all_hold());

    sym_count += s == 1;
    gen_count += g == 1;

    std::size_t i = 0;
    while (i < table.size() && table[i] == 3) table[i++] = 1;
    if (i == table.size()) break;
    ++table[i];
  }
  CHECK(total == 19683);
  CHECK(sym_count == static_cast<int>(sym.size()));
  CHECK(gen_count == static_cast<int>(gen.size()));
}

TEST_CASE("set-level ranks of general synthesis: minimum over right singletons") {
  std::mt19937_64 rng(25);
  for (int t = 0; t < 60; ++t) {
    const PseudoDistance d = random_distance(3, 4, DistanceShape::kAny, rng);
    const Synthesis s = synthesize_general_detailed(operator_from_distance(d), false);
    CHECK_FALSE(s.pairs.symmetric);
    for (int i = 0; i < 7; ++i) {
      for (int j = 0; j < 7; ++j) {
        const SubsetMask a = subset_at(i), b = subset_at(j);
        std::size_t best = SIZE_MAX;
        for (int e : elements(b)) best = std::min(best, s.pairs.rank(a, SubsetMask::singleton(e)));
        CHECK(s.pairs.rank(a, b) == best);
      }
    }
  }
}

TEST_CASE("symmetric synthesis: chosen pairs are minimal among A x B") {
  std::mt19937_64 rng(26);
  for (int t = 0; t < 60; ++t) {
    const PseudoDistance d = random_distance(3, 4, DistanceShape::kSymmetric, rng);
    const SetOperator op = operator_from_distance(d);
    const Synthesis s = synthesize_symmetric_detailed(op);
    CHECK(s.pairs.symmetric);
    for (int i = 0; i < 7; ++i) {
      for (int j = 0; j < 7; ++j) {
        const SubsetMask a = subset_at(i), bs = subset_at(j);
        for (int b : elements(op(a, bs))) {
          const SubsetMask sb = SubsetMask::singleton(b);
          for (int ab : elements(op(sb, a))) {
            const std::size_t chosen = s.pairs.rank(SubsetMask::singleton(ab), sb);
            for (int x : elements(a)) {
              for (int y : elements(bs)) {
                CHECK(chosen <= s.pairs.rank(SubsetMask::singleton(x), SubsetMask::singleton(y)));
              }
            }
          }
        }
      }
    }
  }
}

TEST_CASE("synthesis provenance") {
  const SetOperator op = operator_from_distance(hamming_distance(2));
  const auto sym = synthesis_to_json(synthesize_symmetric_detailed(op, true));
  CHECK(sym["provenance"]["source"] == "synthesize_symmetric");
  CHECK(sym["rank"].size() == 4);
  const auto gen = synthesis_to_json(synthesize_general_detailed(op, true));
  CHECK(gen["provenance"]["source"] == "synthesize_general");
  const auto& checked = gen["provenance"]["postulates_checked"];
  CHECK(std::find(checked.begin(), checked.end(), "(|A4)") != checked.end());
}
