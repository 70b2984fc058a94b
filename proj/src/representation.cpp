#include "revlab/representation.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <stdexcept>

#include "revlab/json_io.hpp"

namespace revlab {

namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

void require(const ConditionResult& result) {
  if (!result.holds) throw PostulateViolation(result);
}

/// Renumbers the singleton-pair ranks to 0..k-1, keeping their order.
PseudoDistance compact_singleton_ranks(const Universe& universe,
                                       const PairRanking& pairs) {
  const int n = universe.size();
  std::vector<std::size_t> raw(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      raw[a * n + b] = pairs.rank(SubsetMask::singleton(a), SubsetMask::singleton(b));
    }
  }
  std::vector<std::size_t> levels = raw;
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  std::vector<Rank> ranks;
  ranks.reserve(raw.size());
  for (std::size_t r : raw) {
    ranks.push_back(static_cast<Rank>(
        std::lower_bound(levels.begin(), levels.end(), r) - levels.begin()));
  }
  return PseudoDistance(universe, std::move(ranks));
}

/// With (|2) in force, the diagonal class must be the unique minimum, which
/// makes it rank 0 after compaction.
void require_zero_diagonal(const PseudoDistance& d) {
  if (!d.respects_identity()) {
    throw std::logic_error(
        "synthesized distance does not respect identity although (|2) holds");
  }
}

}  // namespace

RankAssignment extend_total_preorder(const BitMatrix& relation) {
  const std::size_t n = relation.size();
  const BitMatrix reach = relation.reflexive_transitive_closure();
  const BitMatrix back = reach.transposed();

  std::vector<std::size_t> component(n, kNone);
  std::vector<std::size_t> representative;
  for (std::size_t i = 0; i < n; ++i) {
    if (component[i] != kNone) continue;
    const std::size_t id = representative.size();
    representative.push_back(i);
    for (std::size_t j : reach.row_members(i)) {
      if (back.test(i, j)) component[j] = id;
    }
  }

  const std::size_t count = representative.size();
  std::vector<std::vector<std::size_t>> successors(count);
  std::vector<std::size_t> indegree(count, 0);
  std::vector<std::size_t> seen(count, kNone);
  for (std::size_t c = 0; c < count; ++c) {
    for (std::size_t j : reach.row_members(representative[c])) {
      const std::size_t d = component[j];
      if (d == c || seen[d] == c) continue;
      seen[d] = c;
      successors[c].push_back(d);
      ++indegree[d];
    }
  }

  std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
  for (std::size_t c = 0; c < count; ++c) {
    if (indegree[c] == 0) ready.push(c);
  }
  std::vector<std::size_t> position(count, kNone);
  std::size_t next = 0;
  while (!ready.empty()) {
    const std::size_t c = ready.top();
    ready.pop();
    position[c] = next++;
    for (std::size_t d : successors[c]) {
      if (--indegree[d] == 0) ready.push(d);
    }
  }

  RankAssignment out;
  out.class_count = count;
  out.rank_of.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.rank_of[i] = position[component[i]];
  return out;
}

Synthesis synthesize_symmetric_detailed(const SetOperator& op, bool require_identity) {
  std::vector<std::string> checked{"(|1)", "(|S1)"};
  require(check_containment(op));
  require(check_loop(op));
  const ConditionResult intersection = check_intersection(op);
  if (require_identity) require(intersection);
  if (intersection.holds) checked.push_back("(|2)");

  const ComparisonGraph graph(op);
  const RankAssignment ranks = extend_total_preorder(graph.edges());
  const int m = op.family_size();
  PairRanking pairs{true, op.size(), {}};
  pairs.ranks.reserve(static_cast<std::size_t>(m) * m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      pairs.ranks.push_back(ranks.rank_of[graph.node_index(subset_at(i), subset_at(j))]);
    }
  }
  PseudoDistance d = compact_singleton_ranks(op.universe(), pairs);
  if (intersection.holds) require_zero_diagonal(d);
  return Synthesis{std::move(d), std::move(pairs), "synthesize_symmetric",
                   std::move(checked)};
}

PseudoDistance synthesize_symmetric(const SetOperator& op, bool require_identity) {
  return synthesize_symmetric_detailed(op, require_identity).distance;
}

Synthesis synthesize_general_detailed(const SetOperator& op, bool identity) {
  const RelationR relation(op, identity);
  const AConditionsReport report = check_A_conditions(op, relation);
  std::vector<std::string> checked;
  for (const auto& condition : report.conditions) {
    require(condition);
    checked.push_back(condition.name);
  }

  const RankAssignment ranks = extend_total_preorder(relation.edges());
  PairRanking pairs{false, op.size(), ranks.rank_of};
  PseudoDistance d = compact_singleton_ranks(op.universe(), pairs);
  if (identity) require_zero_diagonal(d);
  return Synthesis{std::move(d), std::move(pairs), "synthesize_general",
                   std::move(checked)};
}

PseudoDistance synthesize_general(const SetOperator& op, bool identity) {
  return synthesize_general_detailed(op, identity).distance;
}

ConditionResult verify_representation(const SetOperator& op, const PseudoDistance& d) {
  if (op.size() != d.size()) {
    throw DimensionError("operator and distance live on universes of different size");
  }
  const SetOperator induced = operator_from_distance(d, SizeLimit{kHardMaxUniverse});
  if (auto diff = first_difference(op, induced)) {
    const auto [a, b] = *diff;
    return ConditionResult{
        "representation", false,
        Witness{{{"A", a}, {"B", b}, {"A|B", op(a, b)}, {"closest", induced(a, b)}},
                {},
                "the distance selects a different closest set"},
        {}};
  }
  return ConditionResult{"representation", true, {}, {}};
}

nlohmann::json synthesis_to_json(const Synthesis& s) {
  nlohmann::json doc = distance_to_json(s.distance);
  doc["provenance"] = {{"source", s.source}, {"postulates_checked", s.postulates_checked}};
  return doc;
}

}  // namespace revlab
