#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "revlab/bit_matrix.hpp"
#include "revlab/distance.hpp"
#include "revlab/error.hpp"
#include "revlab/postulates.hpp"
#include "revlab/set_operator.hpp"

namespace revlab {

/// Rank per node of a relation's carrier; equal ranks are exactly the
/// strongly connected components.
struct RankAssignment {
  std::vector<std::size_t> rank_of;
  std::size_t class_count = 0;
};

/// Extends `relation` to a total preorder: x R y implies rank(x) <= rank(y),
/// and rank(x) = rank(y) only when x and y reach each other under R*.
///
/// Components are emitted in topological order; among the components that
/// are free at a given step, the one holding the smallest node index goes
/// first, so node indices double as the tie-breaking key.
RankAssignment extend_total_preorder(const BitMatrix& relation);

/// Thrown when an operator fails a postulate a synthesizer needs.
class PostulateViolation : public Error {
 public:
  explicit PostulateViolation(ConditionResult failed)
      : Error("operator violates " + failed.name +
              "; it cannot be defined by a pseudo-distance"),
        failed_(std::move(failed)) {}

  const ConditionResult& failed() const { return failed_; }

 private:
  ConditionResult failed_;
};

/// Ranks of the set-level pairs the synthesis went through.
struct PairRanking {
  bool symmetric = false;
  int universe_size = 0;
  /// Indexed by subset_index(A) * family + subset_index(B); for the
  /// symmetric construction (A,B) and (B,A) carry the same rank.
  std::vector<std::size_t> ranks;

  std::size_t rank(SubsetMask a, SubsetMask b) const {
    return ranks[static_cast<std::size_t>(subset_index(a)) * subset_count(universe_size) +
                 subset_index(b)];
  }
};

struct Synthesis {
  PseudoDistance distance;
  PairRanking pairs;
  std::string source;
  std::vector<std::string> postulates_checked;
};

/// Symmetric pseudo-distance representing `op`. Requires (|1) and Loop; when
/// (|2) also holds the result respects identity. `require_identity` makes a
/// (|2) failure an error.
PseudoDistance synthesize_symmetric(const SetOperator& op, bool require_identity = false);
Synthesis synthesize_symmetric_detailed(const SetOperator& op, bool require_identity = false);

/// Possibly asymmetric pseudo-distance representing `op`. Requires (|1),
/// (|A1)-(|A3); with `identity` also (|2), (|A4), and the result then
/// respects identity.
PseudoDistance synthesize_general(const SetOperator& op, bool identity);
Synthesis synthesize_general_detailed(const SetOperator& op, bool identity);

/// Holds iff operator_from_distance(d) equals `op` entrywise.
ConditionResult verify_representation(const SetOperator& op, const PseudoDistance& d);

/// Distance JSON plus {"provenance": {"source", "postulates_checked"}}.
nlohmann::json synthesis_to_json(const Synthesis& s);

}  // namespace revlab
