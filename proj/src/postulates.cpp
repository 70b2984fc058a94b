#include "revlab/postulates.hpp"

#include "revlab/error.hpp"

namespace revlab {

namespace {

using Sets = std::vector<NamedSet>;

ConditionResult pass(std::string name) { return ConditionResult{std::move(name), true, {}, {}}; }

ConditionResult fail(std::string name, Sets sets, std::string detail) {
  return ConditionResult{std::move(name), false,
                         Witness{std::move(sets), {}, std::move(detail)}, {}};
}

void require_closure_budget(int n) {
  if (n > kMaxClosureUniverse) {
    throw SizeLimitError("pair-relation closure supports universes up to " +
                         std::to_string(kMaxClosureUniverse) + " elements, got " +
                         std::to_string(n));
  }
}

/// Pivot P and the two outer sets for a <=-edge between `from` and `to`,
/// preferring P = `preferred` when that reading of the edge is valid.
struct EdgeReading {
  SubsetMask pivot;
  SubsetMask from_other;
  SubsetMask to_other;
};

std::optional<EdgeReading> read_edge(const SetOperator& op, PairNode from, PairNode to,
                                     std::optional<SubsetMask> preferred, bool strict) {
  const SubsetMask f[2] = {from.first, from.second};
  const SubsetMask t[2] = {to.first, to.second};
  std::optional<EdgeReading> fallback;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      if (f[i] != t[j]) continue;
      const SubsetMask p = f[i], b = f[1 - i], b2 = t[1 - j];
      const SubsetMask r = op(p, b | b2);
      if (!r.intersects(b)) continue;
      if (strict && r.intersects(b2)) continue;
      EdgeReading reading{p, b, b2};
      if (!preferred || *preferred == p) return reading;
      if (!fallback) fallback = reading;
    }
  }
  return fallback;
}

/// Rewrites a closed walk whose last edge is strict into a sequence
/// X0..Xk whose Loop premises hold and whose conclusion fails.
Sets loop_sequence(const SetOperator& op, const std::vector<PairNode>& walk) {
  // walk = v, ..., u, v with u -> v strict.
  const PairNode u = walk[walk.size() - 2];
  const PairNode v = walk.front();
  const auto strict_edge = read_edge(op, u, v, std::nullopt, true);
  std::vector<SubsetMask> xs{strict_edge->pivot, strict_edge->to_other};
  for (std::size_t i = 0; i + 2 < walk.size(); ++i) {
    const SubsetMask last = xs.back();
    const SubsetMask prev = xs[xs.size() - 2];
    auto edge = read_edge(op, PairNode::canonical(prev, last), walk[i + 1], last, false);
    if (edge->pivot != last) xs.push_back(prev);
    xs.push_back(edge->to_other);
  }
  if (xs.back() != xs.front()) xs.push_back(xs[xs.size() - 2]);
  xs.pop_back();
  Sets sets;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sets.push_back({"X" + std::to_string(i), xs[i]});
  }
  return sets;
}

}  // namespace

nlohmann::json to_json(const ConditionResult& result) {
  nlohmann::json doc;
  doc["name"] = result.name;
  doc["holds"] = result.holds;
  if (result.witness) {
    nlohmann::json w;
    nlohmann::json sets = nlohmann::json::array();
    for (const auto& s : result.witness->sets) {
      sets.push_back({{"role", s.role}, {"set", elements(s.set)}});
    }
    w["sets"] = std::move(sets);
    if (!result.witness->cycle.empty()) {
      nlohmann::json cycle = nlohmann::json::array();
      for (const auto& node : result.witness->cycle) {
        cycle.push_back({elements(node.first), elements(node.second)});
      }
      w["cycle"] = std::move(cycle);
    }
    if (!result.witness->detail.empty()) w["detail"] = result.witness->detail;
    doc["witness"] = std::move(w);
  }
  if (!result.note.empty()) doc["note"] = result.note;
  return doc;
}

ConditionResult check_containment(const SetOperator& op) {
  const int m = op.family_size();
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      const SubsetMask a = subset_at(i), b = subset_at(j), r = op(a, b);
      if (!r.subset_of(b)) {
        return fail("(|1)", {{"A", a}, {"B", b}, {"A|B", r}}, "A|B is not a subset of B");
      }
    }
  }
  return pass("(|1)");
}

ConditionResult check_intersection(const SetOperator& op) {
  const int m = op.family_size();
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      const SubsetMask a = subset_at(i), b = subset_at(j), r = op(a, b);
      if (a.intersects(b) && r != (a & b)) {
        return fail("(|2)", {{"A", a}, {"B", b}, {"A|B", r}},
                    "A and B meet but A|B differs from their intersection");
      }
    }
  }
  return pass("(|2)");
}

ConditionResult check_or_rule(const SetOperator& op) {
  const int m = op.family_size();
  for (int j = 0; j < m; ++j) {
    const SubsetMask b = subset_at(j);
    for (int i = 0; i < m; ++i) {
      for (int k = 0; k < m; ++k) {
        const SubsetMask a = subset_at(i), a2 = subset_at(k);
        const SubsetMask common = op(a, b) & op(a2, b);
        if (!common.subset_of(op(a | a2, b))) {
          return fail("or-rule", {{"A", a}, {"A'", a2}, {"B", b}},
                      "(A|B) & (A'|B) is not a subset of (A u A')|B");
        }
      }
    }
  }
  return pass("or-rule");
}

ConditionResult check_left_disjunction(const SetOperator& op) {
  const int m = op.family_size();
  for (int i = 0; i < m; ++i) {
    for (int k = 0; k < m; ++k) {
      for (int j = 0; j < m; ++j) {
        const SubsetMask a = subset_at(i), a2 = subset_at(k), b = subset_at(j);
        if (!op(a | a2, b).subset_of(op(a, b) | op(a2, b))) {
          return fail("(|A1)", {{"A", a}, {"A'", a2}, {"B", b}},
                      "(A u A')|B is not a subset of (A|B) u (A'|B)");
        }
      }
    }
  }
  return pass("(|A1)");
}

ComparisonGraph::ComparisonGraph(const SetOperator& op)
    : n_(op.size()), family_(op.family_size()) {
  require_closure_budget(n_);
  lookup_.assign(static_cast<std::size_t>(family_) * family_, 0);
  for (int i = 0; i < family_; ++i) {
    for (int j = i; j < family_; ++j) {
      const std::size_t index = nodes_.size();
      nodes_.push_back(PairNode{subset_at(i), subset_at(j)});
      lookup_[static_cast<std::size_t>(i) * family_ + j] = index;
      lookup_[static_cast<std::size_t>(j) * family_ + i] = index;
    }
  }
  le_ = BitMatrix(nodes_.size());
  strict_ = BitMatrix(nodes_.size());
  for (int i = 0; i < family_; ++i) {
    const SubsetMask a = subset_at(i);
    for (int j = 0; j < family_; ++j) {
      const SubsetMask b = subset_at(j);
      for (int k = 0; k < family_; ++k) {
        const SubsetMask b2 = subset_at(k);
        const SubsetMask r = op(a, b | b2);
        if (!r.intersects(b)) continue;
        const std::size_t from = node_index(a, b), to = node_index(a, b2);
        le_.set(from, to);
        if (!r.intersects(b2)) strict_.set(from, to);
      }
    }
  }
}

ComparisonGraph build_comparison_graph(const SetOperator& op) {
  if (!check_containment(op).holds) {
    throw PreconditionError("the comparison graph requires (|1)");
  }
  return ComparisonGraph(op);
}

ConditionResult check_loop(const SetOperator& op) {
  const ComparisonGraph graph = build_comparison_graph(op);
  const BitMatrix reach = graph.edges().reflexive_transitive_closure();
  const auto& nodes = graph.nodes();
  for (std::size_t u = 0; u < nodes.size(); ++u) {
    for (std::size_t v : graph.strict_edges().row_members(u)) {
      if (!reach.test(v, u)) continue;
      auto path = graph.edges().shortest_path(v, u);
      Witness w;
      for (std::size_t idx : *path) w.cycle.push_back(nodes[idx]);
      w.cycle.push_back(nodes[v]);
      w.sets = loop_sequence(op, w.cycle);
      w.detail = "cycle of pair distances through a strict comparison";
      return ConditionResult{"(|S1)", false, std::move(w), {}};
    }
  }
  return pass("(|S1)");
}

RelationR::RelationR(const SetOperator& op, bool identity_case)
    : n_(op.size()), family_(op.family_size()), identity_case_(identity_case) {
  require_closure_budget(n_);
  edges_ = BitMatrix(static_cast<std::size_t>(family_) * family_);
  for (int i = 0; i < family_; ++i) {
    const SubsetMask a = subset_at(i);
    for (int j = 0; j < family_; ++j) {
      const SubsetMask b = subset_at(j);
      const std::size_t from = node_index(a, b);
      if (identity_case && a.intersects(b)) {
        edges_.set_row(from);
        continue;
      }
      for (int k = 0; k < family_; ++k) {
        const SubsetMask other = subset_at(k);
        // case (1): vary the right argument
        if (op(a, b | other).intersects(b)) edges_.set(from, node_index(a, other));
        // case (2): vary the left argument
        if (op(a | other, b) != op(other, b)) edges_.set(from, node_index(other, b));
      }
    }
  }
  closure_ = edges_.reflexive_transitive_closure();
}

RelationR build_relation_R(const SetOperator& op, bool identity_case) {
  return RelationR(op, identity_case);
}

bool AConditionsReport::all_hold() const {
  for (const auto& c : conditions) {
    if (!c.holds) return false;
  }
  return true;
}

const ConditionResult* AConditionsReport::find(const std::string& name) const {
  for (const auto& c : conditions) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

AConditionsReport check_A_conditions(const SetOperator& op, bool identity) {
  return check_A_conditions(op, RelationR(op, identity));
}

AConditionsReport check_A_conditions(const SetOperator& op, const RelationR& rel) {
  AConditionsReport report;
  const int m = op.family_size();
  report.conditions.push_back(check_containment(op));
  report.conditions.push_back(check_left_disjunction(op));

  ConditionResult a2 = pass("(|A2)");
  for (int i = 0; i < m && a2.holds; ++i) {
    const SubsetMask a = subset_at(i);
    for (int j = 0; j < m && a2.holds; ++j) {
      const SubsetMask b = subset_at(j);
      for (int k = 0; k < m; ++k) {
        const SubsetMask b2 = subset_at(k);
        if (rel.reaches(a, b, a, b2) && !op(a, b).subset_of(op(a, b | b2))) {
          a2 = fail("(|A2)", {{"A", a}, {"B", b}, {"B'", b2}},
                    "(A,B) R* (A,B') but A|B is not a subset of A|(B u B')");
          break;
        }
      }
    }
  }
  report.conditions.push_back(std::move(a2));

  ConditionResult a3 = pass("(|A3)");
  for (int i = 0; i < m && a3.holds; ++i) {
    const SubsetMask a = subset_at(i);
    for (int j = 0; j < m && a3.holds; ++j) {
      const SubsetMask b = subset_at(j);
      for (int k = 0; k < m; ++k) {
        const SubsetMask a2set = subset_at(k);
        if (rel.reaches(a, b, a2set, b) && !op(a, b).subset_of(op(a | a2set, b))) {
          a3 = fail("(|A3)", {{"A", a}, {"A'", a2set}, {"B", b}},
                    "(A,B) R* (A',B) but A|B is not a subset of (A u A')|B");
          break;
        }
      }
    }
  }
  report.conditions.push_back(std::move(a3));

  if (rel.identity_case()) {
    report.conditions.push_back(check_intersection(op));
    ConditionResult a4 = pass("(|A4)");
    for (std::size_t from = 0; from < rel.node_count() && a4.holds; ++from) {
      const auto [a, b] = rel.node(from);
      if (a.intersects(b)) continue;
      for (std::size_t to : rel.closure().row_members(from)) {
        const auto [a2, b2] = rel.node(to);
        if (a2.intersects(b2)) {
          a4 = fail("(|A4)", {{"A", a}, {"B", b}, {"A'", a2}, {"B'", b2}},
                    "(A,B) R* (A',B') and A' meets B', but A and B are disjoint");
          break;
        }
      }
    }
    report.conditions.push_back(std::move(a4));
  }
  return report;
}

}  // namespace revlab
