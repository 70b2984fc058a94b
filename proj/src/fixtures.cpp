#include "revlab/fixtures.hpp"

#include <algorithm>
#include <array>

#include "revlab/error.hpp"
#include "revlab/postulates.hpp"
#include "revlab/representation.hpp"
#include "revlab/star.hpp"

namespace revlab {

namespace {

bool rejects_symmetric(const SetOperator& op) {
  try {
    synthesize_symmetric(op);
  } catch (const PostulateViolation&) {
    return true;
  }
  return false;
}

bool rejects_general(const SetOperator& op, bool identity) {
  try {
    synthesize_general(op, identity);
  } catch (const PostulateViolation&) {
    return true;
  }
  return false;
}

bool symmetric_round_trip(const SetOperator& op) {
  return verify_representation(op, synthesize_symmetric(op)).holds;
}

bool general_round_trip(const SetOperator& op, bool identity) {
  return verify_representation(op, synthesize_general(op, identity)).holds;
}

SubsetMask set_of(std::initializer_list<int> members) { return mask_of(members); }

}  // namespace

SetOperator NamedFixture::operator_table() const {
  return op ? *op : operator_from_distance(distances.front());
}

NamedFixture fixture_tripod() {
  // Element order: a (resp. a'), b (resp. b'), x, y.
  // Ranks: d(a,y) = d(b,y) = 1, d(a,x) = d(b,x) = 4, and d(a,b) vs d(x,y)
  // takes the values 2 and 3 in opposite order in the two situations.
  auto table = [](Rank ab, Rank xy, std::vector<std::string> labels) {
    return PseudoDistance::from_matrix(
        {{0, ab, 4, 1}, {ab, 0, 4, 1}, {4, 4, 0, xy}, {1, 1, xy, 0}}, std::move(labels));
  };
  NamedFixture f{
      "tripod",
      "same orderings seen from every point, opposite order of d(a,b) and d(x,y)",
      Universe(4, {"a", "b", "x", "y"}),
      {table(2, 3, {"a", "b", "x", "y"}), table(3, 2, {"a'", "b'", "x", "y"})},
      std::nullopt,
      {}};
  f.expected = {
      {"both situations are symmetric, identity-respecting distances",
       [](const NamedFixture& x) {
         return std::all_of(x.distances.begin(), x.distances.end(), [](const auto& d) {
           return d.symmetric() && d.respects_identity();
         });
       }},
      {"the distances disagree on d(a,b) versus d(x,y)",
       [](const NamedFixture& x) {
         return (x.distances[0](0, 1) < x.distances[0](2, 3)) !=
                (x.distances[1](0, 1) < x.distances[1](2, 3));
       }},
      {"both distances induce the same operator after renaming a->a', b->b'",
       [](const NamedFixture& x) {
         return operator_from_distance(x.distances[0]) == operator_from_distance(x.distances[1]);
       }},
      {"Loop holds in both situations",
       [](const NamedFixture& x) {
         return check_loop(operator_from_distance(x.distances[0])).holds &&
                check_loop(operator_from_distance(x.distances[1])).holds;
       }},
      {"symmetric synthesis round-trips in both situations",
       [](const NamedFixture& x) {
         return symmetric_round_trip(operator_from_distance(x.distances[0])) &&
                symmetric_round_trip(operator_from_distance(x.distances[1]));
       }},
  };
  return f;
}

NamedFixture fixture_one_way_road() {
  const std::vector<std::string> labels{"a", "a'", "b", "b'"};
  // Case 1: positions 0, 1, 16, 20 on a two-way road.
  const std::array<Rank, 4> position{0, 1, 16, 20};
  std::vector<std::vector<Rank>> two_way(4, std::vector<Rank>(4));
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      two_way[i][j] = 10 * (position[i] > position[j] ? position[i] - position[j]
                                                      : position[j] - position[i]);
    }
  }
  // Case 2: a' at 0, a at 1, b at 16, b' at 20; between a' and a traffic
  // flows a' -> a directly, while a -> a' runs 0.1 further right and back
  // over a parallel road of length 1.1.
  const std::vector<std::vector<Rank>> one_way{
      {0, 12, 150, 190},
      {10, 0, 160, 200},
      {170, 160, 0, 40},
      {210, 200, 40, 0},
  };
  NamedFixture f{"one-way-road",
                 "two-way versus one-way road between a and a'; revision cannot tell",
                 Universe(4, labels),
                 {PseudoDistance::from_matrix(two_way, labels),
                  PseudoDistance::from_matrix(one_way, labels)},
                 std::nullopt,
                 {}};
  const SubsetMask a = set_of({0}), a2 = set_of({1}), bs = set_of({2, 3});
  f.expected = {
      {"the two-way road is symmetric, the one-way road is not",
       [](const NamedFixture& x) {
         return x.distances[0].symmetric() && !x.distances[1].symmetric();
       }},
      {"seen from a/a', {b,b'} is closer from a' on the two-way road and from a on the one-way road",
       [=](const NamedFixture& x) {
         return set_distance(x.distances[0], a2, bs) < set_distance(x.distances[0], a, bs) &&
                set_distance(x.distances[1], a, bs) < set_distance(x.distances[1], a2, bs);
       }},
      {"both roads induce the same operator",
       [](const NamedFixture& x) {
         return operator_from_distance(x.distances[0]) == operator_from_distance(x.distances[1]);
       }},
      {"each road's distance represents the other road's operator",
       [](const NamedFixture& x) {
         return verify_representation(operator_from_distance(x.distances[0]), x.distances[1]).holds &&
                verify_representation(operator_from_distance(x.distances[1]), x.distances[0]).holds;
       }},
      {"general synthesis round-trips, with and without identity",
       [](const NamedFixture& x) {
         const SetOperator op = operator_from_distance(x.distances[1]);
         return general_round_trip(op, false) && general_round_trip(op, true);
       }},
  };
  return f;
}

NamedFixture fixture_patchwork() {
  const std::vector<std::string> labels{"a", "b", "c", "d"};
  using Point = std::array<int, 2>;
  const std::array<Point, 4> plain{Point{0, 1}, Point{0, -1}, Point{1, 0}, Point{2, 0}};
  std::array<Point, 4> swapped = plain;
  std::swap(swapped[2], swapped[3]);

  auto squared = [](const std::array<Point, 4>& p, int i, int j) {
    const int dx = p[i][0] - p[j][0], dy = p[i][1] - p[j][1];
    return dx * dx + dy * dy;
  };
  // Ranks: position of each squared distance among the distinct values of both layouts.
  std::vector<int> values;
  for (const auto& layout : {plain, swapped}) {
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) values.push_back(squared(layout, i, j));
    }
  }
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  auto ranked = [&](const std::array<Point, 4>& layout) {
    std::vector<std::vector<Rank>> rows(4, std::vector<Rank>(4));
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) {
        rows[i][j] = static_cast<Rank>(
            std::lower_bound(values.begin(), values.end(), squared(layout, i, j)) -
            values.begin());
      }
    }
    return PseudoDistance::from_matrix(rows, labels);
  };
  const PseudoDistance natural = ranked(plain);
  const PseudoDistance exchanged = ranked(swapped);
  const SubsetMask ab = set_of({0, 1});
  SetOperator op = SetOperator::tabulate(Universe(4, labels), [&](SubsetMask left, SubsetMask right) {
    return closest(left == ab ? exchanged : natural, left, right);
  });

  NamedFixture f{"patchwork",
                 "per-left-argument Euclidean revisions with c and d swapped for {a,b}",
                 Universe(4, labels),
                 {natural, exchanged},
                 std::move(op),
                 {}};
  const SubsetMask a = set_of({0}), b = set_of({1}), c = set_of({2}), d = set_of({3});
  f.expected = {
      {"{a}|{c,d} = {b}|{c,d} = {c} but {a,b}|{c,d} = {d}",
       [=](const NamedFixture& x) {
         const SetOperator& t = *x.op;
         return t(a, c | d) == c && t(b, c | d) == c && t(ab, c | d) == d;
       }},
      {"each left argument on its own satisfies (*0)-(*4)",
       [](const NamedFixture& x) {
         return check_star_postulates(Revision::from_operator(*x.op),
                                      StarSelection{true, false, false, false})
             .all_hold();
       }},
      {"Loop fails with a strict cycle",
       [](const NamedFixture& x) {
         const ConditionResult loop = check_loop(*x.op);
         return !loop.holds && loop.witness && !loop.witness->cycle.empty();
       }},
      {"at least one of (|A1)-(|A3) fails",
       [](const NamedFixture& x) { return !check_A_conditions(*x.op, false).all_hold(); }},
      {"both synthesizers refuse the operator",
       [](const NamedFixture& x) {
         return rejects_symmetric(*x.op) && rejects_general(*x.op, false) &&
                rejects_general(*x.op, true);
       }},
  };
  return f;
}

std::vector<NamedFixture> all_fixtures() {
  return {fixture_tripod(), fixture_one_way_road(), fixture_patchwork()};
}

NamedFixture fixture_by_name(const std::string& name) {
  for (auto& f : all_fixtures()) {
    if (f.name == name) return f;
  }
  throw FormatError("unknown fixture '" + name + "' (expected tripod, one-way-road or patchwork)");
}

std::vector<FixtureOutcome> run_fixture(const NamedFixture& fixture) {
  std::vector<FixtureOutcome> out;
  for (const auto& e : fixture.expected) out.push_back({e.description, e.check(fixture)});
  return out;
}

}  // namespace revlab
