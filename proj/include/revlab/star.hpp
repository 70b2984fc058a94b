#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "revlab/distance.hpp"
#include "revlab/postulates.hpp"
#include "revlab/set_operator.hpp"
#include "revlab/theory.hpp"

namespace revlab {

/// A model-level revision T * T' over the 2^k valuations, backed either by
/// a pseudo-distance or by an explicit operator table.
class Revision {
 public:
  static Revision from_distance(PseudoDistance d);
  static Revision from_operator(SetOperator op);

  int atoms() const { return atoms_; }
  int universe_size() const { return valuation_count(atoms_); }

  SubsetMask apply(SubsetMask theory, SubsetMask input) const;
  TheoryModels operator()(const TheoryModels& theory, const TheoryModels& input) const;

  /// Dense table of the revision over all consistent theory pairs.
  SetOperator tabulate() const;

 private:
  explicit Revision(std::variant<PseudoDistance, SetOperator> source);
  std::variant<PseudoDistance, SetOperator> source_;
  int atoms_;
};

struct StarSelection {
  bool agm = true;         // (*0)-(*4)
  bool loop = true;        // (*S1)
  bool asymmetric = true;  // (*A1)-(*A3)
  bool identity = true;    // (*A4), with relation case (3)
};

struct StarReport {
  std::vector<ConditionResult> conditions;

  bool all_hold() const;
  const ConditionResult* find(const std::string& name) const;
};

/// (*0)-(*4) are evaluated over theories (all nonempty model sets); (*S1)
/// and (*A1)-(*A4) go through the algebraic checks on the tabulated
/// revision, since M(.) is a bijection between consistent theories and
/// nonempty model sets here. (*0) holds structurally.
StarReport check_star_postulates(const Revision& revision, StarSelection which = {});

struct DisjunctionOptions {
  /// Used only when the atom count makes exhaustive checking too large.
  std::uint64_t seed = 0;
  std::size_t samples = 20000;
};

struct DisjunctionReport {
  ConditionResult left_disjunction;
  ConditionResult ventilation;
  ConditionResult iterated_or;
  ConditionResult iterated_disjunctive;
  bool exhaustive = false;
  std::size_t cases = 0;

  bool all_hold() const;
  std::vector<ConditionResult> conditions() const;
};

/// Left disjunction, right ventilation and the two iterated-revision
/// implications, exhaustive for k <= 2 and sampled above. Requires an
/// identity-respecting distance.
DisjunctionReport check_disjunction_properties(const PseudoDistance& d,
                                               DisjunctionOptions options = {});

/// Violation of (K * a) * (a & b) = K * (a & b).
struct C1Witness {
  SubsetMask theory;
  SubsetMask alpha;
  SubsetMask beta;
  SubsetMask iterated;  // (K * a) * (a & b)
  SubsetMask direct;    // K * (a & b)
};

/// Exhaustive search over theory triples (k <= 3).
std::optional<C1Witness> find_c1_violation(const Revision& revision);

struct C1Search {
  std::optional<PseudoDistance> distance;
  std::optional<C1Witness> witness;
  std::size_t trials_run = 0;
};

/// Random identity-respecting distances on 2^k valuations until one
/// violates C1, each trial on its own substream.
C1Search search_c1_violation(int atoms, std::uint64_t seed, std::size_t trials,
                             Rank max_rank = 4);

}  // namespace revlab
