#include <doctest.h>

#include <map>

#include "revlab/error.hpp"
#include "revlab/fixtures.hpp"
#include "revlab/postulates.hpp"
#include "revlab/representation.hpp"

using namespace revlab;

namespace {

SubsetMask S(std::initializer_list<int> members) { return mask_of(members); }

// The other points, nearest first; ties share a group.
std::vector<std::vector<int>> seen_from(const PseudoDistance& d, int from) {
  std::map<Rank, std::vector<int>> groups;
  for (int to = 0; to < d.size(); ++to) {
    if (to != from) groups[d(from, to)].push_back(to);
  }
  std::vector<std::vector<int>> out;
  for (auto& [rank, members] : groups) out.push_back(members);
  return out;
}

using Groups = std::vector<std::vector<int>>;

}  // namespace

TEST_CASE("every fixture meets its expectations") {
  for (const NamedFixture& f : all_fixtures()) {
    CAPTURE(f.name);
    const auto outcomes = run_fixture(f);
    CHECK(outcomes.size() == f.expected.size());
    CHECK_FALSE(outcomes.empty());
    for (const auto& o : outcomes) {
      CAPTURE(o.description);
      CHECK(o.passed);
    }
  }
}

TEST_CASE("lookup by name") {
  CHECK(fixture_by_name("tripod").name == "tripod");
  CHECK(fixture_by_name("one-way-road").distances.size() == 2);
  CHECK(fixture_by_name("patchwork").op.has_value());
  CHECK_THROWS_AS(fixture_by_name("nonesuch"), FormatError);
}

TEST_CASE("tripod: the orderings seen from each point") {
  // Elements: 0 = a (a'), 1 = b (b'), 2 = x, 3 = y.
  const NamedFixture f = fixture_tripod();
  for (const PseudoDistance& d : f.distances) {
    CHECK(seen_from(d, 0) == Groups{{3}, {1}, {2}});
    CHECK(seen_from(d, 1) == Groups{{3}, {0}, {2}});
    CHECK(seen_from(d, 3) == Groups{{0, 1}, {2}});
    CHECK(seen_from(d, 2) == Groups{{3}, {0, 1}});
  }
  // a closer to b than x to y; a' farther from b' than x from y;
  // a' closer to y than x to y.
  CHECK(f.distances[0](0, 1) < f.distances[0](2, 3));
  CHECK(f.distances[1](0, 1) > f.distances[1](2, 3));
  CHECK(f.distances[1](0, 3) < f.distances[1](2, 3));
  CHECK(operator_from_distance(f.distances[0]) == operator_from_distance(f.distances[1]));
}

TEST_CASE("one-way road: scaled ranks keep the unscaled operator") {
  const NamedFixture f = fixture_one_way_road();
  const PseudoDistance unscaled = PseudoDistance::from_matrix(
      {{0, 1, 16, 20}, {1, 0, 15, 19}, {16, 15, 0, 4}, {20, 19, 4, 0}});
  CHECK(operator_from_distance(unscaled) == operator_from_distance(f.distances[0]));
  CHECK(f.distances[1](1, 0) == 10);  // a' to a: 1
  CHECK(f.distances[1](0, 1) == 12);  // a to a': 1.2
  CHECK(operator_from_distance(f.distances[0]) == operator_from_distance(f.distances[1]));
  CHECK(f.distances[0] != f.distances[1]);
  const PseudoDistance back = synthesize_general(f.operator_table(), false);
  CHECK(verify_representation(f.operator_table(), back).holds);
}

TEST_CASE("patchwork: the published entries and per-argument AGM behaviour") {
  const NamedFixture f = fixture_patchwork();
  const SetOperator& op = *f.op;
  const SubsetMask a = S({0}), b = S({1}), c = S({2}), d = S({3});
  CHECK(op(a, c | d) == c);
  CHECK(op(b, c | d) == c);
  CHECK(op(a | b, c | d) == d);

  // Squared Euclidean distances: a-c = 2, a-d = 5, b-c = 2, b-d = 5, c-d = 1.
  const PseudoDistance& plain = f.distances[0];
  CHECK(plain(0, 2) < plain(0, 3));
  CHECK(plain(2, 3) < plain(0, 2));
  CHECK(plain.symmetric());
  CHECK(plain.respects_identity());

  // Each left argument on its own: results inside B, the overlap when
  // there is one, and restriction to a subset keeps whatever survives.
  for (int i = 0; i < 15; ++i) {
    const SubsetMask left = subset_at(i);
    for (int j = 0; j < 15; ++j) {
      const SubsetMask right = subset_at(j);
      const SubsetMask r = op(left, right);
      CHECK(r.subset_of(right));
      if (left.intersects(right)) CHECK(r == (left & right));
      for (int k = 0; k < 15; ++k) {
        const SubsetMask cut = subset_at(k);
        if ((r & cut).empty()) continue;
        CHECK(op(left, right & cut) == (r & cut));
      }
    }
  }
  CHECK_FALSE(check_loop(op).holds);
}
