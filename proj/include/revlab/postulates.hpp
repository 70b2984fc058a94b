#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "revlab/bit_matrix.hpp"
#include "revlab/set_operator.hpp"

namespace revlab {

/// Unordered pair {A, B}; the smaller mask is stored first.
struct PairNode {
  SubsetMask first;
  SubsetMask second;

  static PairNode canonical(SubsetMask a, SubsetMask b) {
    return a <= b ? PairNode{a, b} : PairNode{b, a};
  }
  friend auto operator<=>(const PairNode&, const PairNode&) = default;
};

struct NamedSet {
  std::string role;
  SubsetMask set;
};

/// Counterexample attached to a failed condition.
struct Witness {
  std::vector<NamedSet> sets;
  /// Loop violations: closed walk of pair nodes, first node repeated last.
  std::vector<PairNode> cycle;
  std::string detail;
};

struct ConditionResult {
  std::string name;
  bool holds = true;
  std::optional<Witness> witness;
  /// Free-form remark, e.g. why a condition was not evaluated.
  std::string note;
};

nlohmann::json to_json(const ConditionResult& result);

/// (|1)  A | B is a subset of B.
ConditionResult check_containment(const SetOperator& op);

/// (|2)  A and B meet  =>  A | B = A & B.
ConditionResult check_intersection(const SetOperator& op);

/// Lemma-style Or rule: (A|B) & (A'|B) is a subset of (A u A') | B.
ConditionResult check_or_rule(const SetOperator& op);

/// (|A1)  (A u A') | B is a subset of (A|B) u (A'|B).
ConditionResult check_left_disjunction(const SetOperator& op);

/// The <=-graph on unordered pairs: ||A,B|| <= ||A,B'|| iff
/// (A | B u B') meets B; the edge is strict iff that set also misses B'.
class ComparisonGraph {
 public:
  explicit ComparisonGraph(const SetOperator& op);

  int universe_size() const { return n_; }
  const std::vector<PairNode>& nodes() const { return nodes_; }
  std::size_t node_index(SubsetMask a, SubsetMask b) const {
    return lookup_[subset_index(a) * family_ + subset_index(b)];
  }
  const BitMatrix& edges() const { return le_; }
  const BitMatrix& strict_edges() const { return strict_; }
  bool le(std::size_t from, std::size_t to) const { return le_.test(from, to); }
  bool strict(std::size_t from, std::size_t to) const { return strict_.test(from, to); }

 private:
  int n_;
  int family_;
  std::vector<PairNode> nodes_;
  std::vector<std::size_t> lookup_;
  BitMatrix le_;
  BitMatrix strict_;
};

/// Throws PreconditionError when `op` violates (|1).
ComparisonGraph build_comparison_graph(const SetOperator& op);

/// (|S1) Loop: holds iff no cycle of the comparison graph uses a strict edge.
/// Requires (|1).
ConditionResult check_loop(const SetOperator& op);

/// The relation R on ordered pairs (A,B):
///   (1) (A | B u B') meets B          =>  (A,B) R (A,B')
///   (2) (A u A') | B  !=  A' | B       =>  (A,B) R (A',B)
///   (3) [identity case] A meets B      =>  (A,B) R (A',B') for all A', B'
class RelationR {
 public:
  RelationR(const SetOperator& op, bool identity_case);

  int universe_size() const { return n_; }
  bool identity_case() const { return identity_case_; }
  std::size_t node_count() const { return edges_.size(); }
  std::size_t node_index(SubsetMask a, SubsetMask b) const {
    return static_cast<std::size_t>(subset_index(a)) * family_ + subset_index(b);
  }
  std::pair<SubsetMask, SubsetMask> node(std::size_t index) const {
    return {subset_at(static_cast<int>(index / family_)),
            subset_at(static_cast<int>(index % family_))};
  }

  const BitMatrix& edges() const { return edges_; }
  /// Reflexive-transitive closure R*.
  const BitMatrix& closure() const { return closure_; }

  bool related(SubsetMask a, SubsetMask b, SubsetMask a2, SubsetMask b2) const {
    return edges_.test(node_index(a, b), node_index(a2, b2));
  }
  bool reaches(SubsetMask a, SubsetMask b, SubsetMask a2, SubsetMask b2) const {
    return closure_.test(node_index(a, b), node_index(a2, b2));
  }

 private:
  int n_;
  int family_;
  bool identity_case_;
  BitMatrix edges_;
  BitMatrix closure_;
};

RelationR build_relation_R(const SetOperator& op, bool identity_case);

/// Results for (|1), (|A1)-(|A3) and, in the identity case, (|2) and (|A4).
struct AConditionsReport {
  std::vector<ConditionResult> conditions;

  bool all_hold() const;
  const ConditionResult* find(const std::string& name) const;
};

AConditionsReport check_A_conditions(const SetOperator& op, bool identity);
AConditionsReport check_A_conditions(const SetOperator& op, const RelationR& relation);

}  // namespace revlab
