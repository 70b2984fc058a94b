#include "revlab/star.hpp"

#include <bit>

#include "revlab/error.hpp"
#include "revlab/random.hpp"

namespace revlab {

namespace {

int atoms_for_universe(int n) {
  if (n < 2 || !std::has_single_bit(static_cast<unsigned>(n))) {
    throw DimensionError("a revision over valuations needs 2^k elements, got " +
                         std::to_string(n));
  }
  return std::countr_zero(static_cast<unsigned>(n));
}

ConditionResult pass(std::string name) { return ConditionResult{std::move(name), true, {}, {}}; }

ConditionResult fail(std::string name, std::vector<NamedSet> sets, std::string detail) {
  return ConditionResult{std::move(name), false,
                         Witness{std::move(sets), {}, std::move(detail)}, {}};
}

std::string star_name(const std::string& algebraic) {
  // "(|A2)" -> "(*A2)"
  std::string out = algebraic;
  out[1] = '*';
  return out;
}

/// Calls f with `arity` nonempty subsets of an n-element universe, either
/// every combination or `samples` random ones.
template <typename F>
std::size_t for_each_tuple(int n, int arity, bool exhaustive, std::uint64_t seed,
                           std::size_t samples, F&& f) {
  const int m = subset_count(n);
  std::vector<SubsetMask> tuple(arity);
  if (!exhaustive) {
    for (std::size_t s = 0; s < samples; ++s) {
      auto rng = substream(seed, s);
      for (auto& x : tuple) x = subset_at(static_cast<int>(draw(rng, m)));
      if (!f(tuple)) return s + 1;
    }
    return samples;
  }
  std::vector<int> idx(arity, 0);
  std::size_t count = 0;
  while (true) {
    for (int i = 0; i < arity; ++i) tuple[i] = subset_at(idx[i]);
    ++count;
    if (!f(tuple)) return count;
    int pos = arity - 1;
    while (pos >= 0 && ++idx[pos] == m) idx[pos--] = 0;
    if (pos < 0) return count;
  }
}

bool one_of_three(SubsetMask r, SubsetMask a, SubsetMask b) {
  return r == (a | b) || r == a || r == b;
}

}  // namespace

Revision::Revision(std::variant<PseudoDistance, SetOperator> source)
    : source_(std::move(source)),
      atoms_(atoms_for_universe(std::visit([](const auto& s) { return s.size(); }, source_))) {}

Revision Revision::from_distance(PseudoDistance d) { return Revision(std::move(d)); }
Revision Revision::from_operator(SetOperator op) { return Revision(std::move(op)); }

SubsetMask Revision::apply(SubsetMask theory, SubsetMask input) const {
  if (const auto* d = std::get_if<PseudoDistance>(&source_)) return closest(*d, theory, input);
  const auto& op = std::get<SetOperator>(source_);
  if (theory.empty() || input.empty() || !theory.fits(op.size()) || !input.fits(op.size())) {
    throw DimensionError("revision arguments must be nonempty model sets of the universe");
  }
  return op(theory, input);
}

TheoryModels Revision::operator()(const TheoryModels& theory, const TheoryModels& input) const {
  if (theory.atoms() != atoms_ || input.atoms() != atoms_) {
    throw DimensionError("theories and revision use different atom counts");
  }
  return TheoryModels(atoms_, apply(theory.models(), input.models()));
}

SetOperator Revision::tabulate() const {
  if (const auto* op = std::get_if<SetOperator>(&source_)) return *op;
  return SetOperator::tabulate(
      Universe(universe_size()), [&](SubsetMask a, SubsetMask b) { return apply(a, b); },
      SizeLimit{kHardMaxUniverse});
}

bool StarReport::all_hold() const {
  for (const auto& c : conditions) {
    if (!c.holds) return false;
  }
  return true;
}

const ConditionResult* StarReport::find(const std::string& name) const {
  for (const auto& c : conditions) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

StarReport check_star_postulates(const Revision& revision, StarSelection which) {
  StarReport report;
  const int n = revision.universe_size();
  const int m = subset_count(n);

  ConditionResult s1 = pass("(*1)"), s2 = pass("(*2)"), s3 = pass("(*3)"), s4 = pass("(*4)");
  for (int i = 0; i < m; ++i) {
    const SubsetMask t = subset_at(i);
    for (int j = 0; j < m; ++j) {
      const SubsetMask t2 = subset_at(j);
      const SubsetMask r = revision.apply(t, t2);
      if (s1.holds && (r.empty() || !r.fits(n))) {
        s1 = fail("(*1)", {{"T", t}, {"T'", t2}}, "T*T' is inconsistent");
      }
      if (s2.holds && !r.subset_of(t2)) {
        s2 = fail("(*2)", {{"T", t}, {"T'", t2}, {"T*T'", r}}, "T*T' does not entail T'");
      }
      if (s3.holds && t.intersects(t2) && r != (t & t2)) {
        s3 = fail("(*3)", {{"T", t}, {"T'", t2}, {"T*T'", r}},
                  "T u T' is consistent but T*T' differs from Cn(T u T')");
      }
      if (!s4.holds) continue;
      for (int k = 0; k < m; ++k) {
        const SubsetMask t3 = subset_at(k);
        if (!r.intersects(t3)) continue;
        const SubsetMask both = t2 & t3;
        if (both.empty() || revision.apply(t, both) != (r & t3)) {
          s4 = fail("(*4)", {{"T", t}, {"T'", t2}, {"T''", t3}},
                    "T*T' is consistent with T'' but T*(T' u T'') differs from "
                    "Cn((T*T') u T'')");
          break;
        }
      }
    }
  }
  if (which.agm) {
    report.conditions.push_back(ConditionResult{
        "(*0)", true, std::nullopt, "holds structurally: theories are kept as model sets"});
    report.conditions.push_back(std::move(s1));
    report.conditions.push_back(s2);
    report.conditions.push_back(std::move(s3));
    report.conditions.push_back(std::move(s4));
  }

  if (!which.loop && !which.asymmetric) return report;
  const SetOperator table = revision.tabulate();
  if (which.loop) {
    if (!s2.holds) {
      report.conditions.push_back(ConditionResult{
          "(*S1)", false, std::nullopt, "not evaluated: the Loop check presupposes (*2)"});
    } else {
      ConditionResult loop = check_loop(table);
      loop.name = "(*S1)";
      report.conditions.push_back(std::move(loop));
    }
  }
  if (which.asymmetric) {
    const AConditionsReport algebraic = check_A_conditions(table, which.identity);
    for (const auto& c : algebraic.conditions) {
      if (c.name == "(|1)" || c.name == "(|2)") continue;
      ConditionResult renamed = c;
      renamed.name = star_name(c.name);
      report.conditions.push_back(std::move(renamed));
    }
  }
  return report;
}

bool DisjunctionReport::all_hold() const {
  return left_disjunction.holds && ventilation.holds && iterated_or.holds &&
         iterated_disjunctive.holds;
}

std::vector<ConditionResult> DisjunctionReport::conditions() const {
  return {left_disjunction, ventilation, iterated_or, iterated_disjunctive};
}

DisjunctionReport check_disjunction_properties(const PseudoDistance& d,
                                               DisjunctionOptions options) {
  if (!d.respects_identity()) {
    throw PreconditionError("disjunction properties are stated for identity-respecting distances");
  }
  const Revision revision = Revision::from_distance(d);
  const int n = revision.universe_size();
  const bool exhaustive = revision.atoms() <= 2;
  DisjunctionReport report{pass("left-disjunction"), pass("ventilation"),
                           pass("iterated-or"), pass("iterated-disjunctive"), exhaustive, 0};

  report.cases += for_each_tuple(n, 3, exhaustive, options.seed, options.samples,
                                 [&](const std::vector<SubsetMask>& x) {
    const SubsetMask a1 = x[0], a2 = x[1], b = x[2];
    if (!one_of_three(revision.apply(a1 | a2, b), revision.apply(a1, b), revision.apply(a2, b))) {
      report.left_disjunction =
          fail("left-disjunction", {{"alpha1", a1}, {"alpha2", a2}, {"beta", b}},
               "(a1 v a2)*b is none of (a1*b) v (a2*b), a1*b, a2*b");
      return false;
    }
    return true;
  });

  report.cases += for_each_tuple(n, 3, exhaustive, options.seed + 1, options.samples,
                                 [&](const std::vector<SubsetMask>& x) {
    const SubsetMask a = x[0], b1 = x[1], b2 = x[2];
    if (!one_of_three(revision.apply(a, b1 | b2), revision.apply(a, b1), revision.apply(a, b2))) {
      report.ventilation = fail("ventilation", {{"alpha", a}, {"beta1", b1}, {"beta2", b2}},
                                "a*(b1 v b2) is none of (a*b1) v (a*b2), a*b1, a*b2");
      return false;
    }
    return true;
  });

  const std::uint32_t deltas = std::uint32_t{1} << n;
  report.cases += for_each_tuple(n, 4, exhaustive, options.seed + 2, options.samples,
                                 [&](const std::vector<SubsetMask>& x) {
    const SubsetMask k = x[0], a = x[1], b = x[2], g = x[3];
    const SubsetMask via_a = revision.apply(revision.apply(k, a), g);
    const SubsetMask via_b = revision.apply(revision.apply(k, b), g);
    const SubsetMask via_or = revision.apply(revision.apply(k, a | b), g);
    // delta ranges over every formula, i.e. every model set including the empty one
    for (std::uint32_t bits = 0; bits < deltas; ++bits) {
      const SubsetMask delta{bits};
      const bool in_a = via_a.subset_of(delta), in_b = via_b.subset_of(delta);
      const bool in_or = via_or.subset_of(delta);
      std::vector<NamedSet> sets{{"K", k}, {"alpha", a}, {"beta", b}, {"gamma", g}, {"delta", delta}};
      if (report.iterated_or.holds && in_a && in_b && !in_or) {
        report.iterated_or = fail("iterated-or", sets,
                                  "delta follows from (K*a)*g and (K*b)*g but not from (K*(a v b))*g");
      }
      if (report.iterated_disjunctive.holds && in_or && !in_a && !in_b) {
        report.iterated_disjunctive =
            fail("iterated-disjunctive", sets,
                 "delta follows from (K*(a v b))*g but from neither (K*a)*g nor (K*b)*g");
      }
    }
    return report.iterated_or.holds && report.iterated_disjunctive.holds;
  });
  return report;
}

std::optional<C1Witness> find_c1_violation(const Revision& revision) {
  const int m = subset_count(revision.universe_size());
  for (int i = 0; i < m; ++i) {
    const SubsetMask k = subset_at(i);
    for (int j = 0; j < m; ++j) {
      const SubsetMask a = subset_at(j);
      const SubsetMask after_a = revision.apply(k, a);
      for (int l = 0; l < m; ++l) {
        const SubsetMask b = subset_at(l);
        const SubsetMask both = a & b;
        if (both.empty()) continue;
        const SubsetMask iterated = revision.apply(after_a, both);
        const SubsetMask direct = revision.apply(k, both);
        if (iterated != direct) return C1Witness{k, a, b, iterated, direct};
      }
    }
  }
  return std::nullopt;
}

C1Search search_c1_violation(int atoms, std::uint64_t seed, std::size_t trials, Rank max_rank) {
  if (atoms < 1 || valuation_count(atoms) > kHardMaxUniverse) {
    throw SizeLimitError("C1 search supports 1 <= atoms and 2^atoms <= " +
                         std::to_string(kHardMaxUniverse));
  }
  C1Search out;
  for (std::size_t t = 0; t < trials; ++t) {
    auto rng = substream(seed, t);
    PseudoDistance d =
        random_distance(valuation_count(atoms), max_rank, DistanceShape::kIdentity, rng);
    out.trials_run = t + 1;
    if (auto w = find_c1_violation(Revision::from_distance(d))) {
      out.distance = std::move(d);
      out.witness = *w;
      return out;
    }
  }
  return out;
}

}  // namespace revlab
