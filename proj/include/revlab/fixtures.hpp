#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "revlab/distance.hpp"
#include "revlab/set_operator.hpp"

namespace revlab {

struct NamedFixture;

struct Expectation {
  std::string description;
  std::function<bool(const NamedFixture&)> check;
};

/// A small worked instance with the facts it is expected to exhibit.
struct NamedFixture {
  std::string name;
  std::string summary;
  Universe universe;
  /// One or two tables over `universe`.
  std::vector<PseudoDistance> distances;
  /// Explicit table, when the fixture is not distance-generated.
  std::optional<SetOperator> op;
  std::vector<Expectation> expected;

  /// `op` if present, else the operator of the first distance.
  SetOperator operator_table() const;
};

struct FixtureOutcome {
  std::string description;
  bool passed = false;
};

/// Two three-armed star configurations (arms at 120 degrees around y) whose
/// element-wise distance orderings coincide, so their operators coincide,
/// while d(a,b) < d(x,y) in one and d(a,b) > d(x,y) in the other.
NamedFixture fixture_tripod();

/// Points on a line (a=0, a'=1, b=16, b'=20). Case 1 is the two-way road;
/// case 2 makes the stretch between a' and a one-way (a'->a costs 1,
/// a->a' costs 1.2 via a detour). Ranks are the distances times ten.
NamedFixture fixture_one_way_road();

/// a=(0,1), b=(0,-1), c=(1,0), d=(2,0) in the plane; every left argument is
/// revised by squared Euclidean distance except {a,b}, which sees c and d
/// swapped. Each left argument is AGM on its own, the whole is not
/// distance-representable.
NamedFixture fixture_patchwork();

std::vector<NamedFixture> all_fixtures();
/// Accepts "tripod", "one-way-road", "patchwork". Throws FormatError otherwise.
NamedFixture fixture_by_name(const std::string& name);

std::vector<FixtureOutcome> run_fixture(const NamedFixture& fixture);

}  // namespace revlab
