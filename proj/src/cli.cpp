#include "revlab/cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "revlab/error.hpp"
#include "revlab/fixtures.hpp"
#include "revlab/json_io.hpp"
#include "revlab/postulates.hpp"
#include "revlab/random.hpp"
#include "revlab/representation.hpp"
#include "revlab/star.hpp"
#include "revlab/theory.hpp"

namespace revlab {

namespace {

using nlohmann::json;

// ---------------------------------------------------------------------------
// Option groups

struct Common {
  std::string format = "text";
  std::optional<int> max_size;

  bool json_output() const { return format == "json"; }
  SizeLimit limit() const {
    return max_size ? SizeLimit::checked(*max_size) : SizeLimit::from_env();
  }
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--format", c.format, "Output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--max-size", c.max_size,
                  "Universe-size cap for operator tables (overrides REVLAB_MAX_SIZE)");
}

struct SourceOptions {
  std::string operator_path;
  std::string distance;
  std::string fixture;
  std::optional<int> atoms;
};

void add_source(CLI::App* cmd, SourceOptions& s) {
  auto* op = cmd->add_option("--operator", s.operator_path, "Operator table file (JSON)");
  auto* d = cmd->add_option("--distance", s.distance,
                            "hamming, trivial, or a distance file (JSON)");
  auto* f = cmd->add_option("--fixture", s.fixture,
                            "Built-in fixture: tripod, one-way-road or patchwork");
  op->excludes(d)->excludes(f);
  d->excludes(f);
  cmd->add_option("--atoms", s.atoms,
                  "Atom count k; the universe is the 2^k valuations");
}

struct Source {
  std::string description;
  SetOperator op;
  std::optional<PseudoDistance> distance;
};

PseudoDistance load_distance(const std::string& spec, std::optional<int> atoms) {
  if (spec == "hamming" || spec == "trivial") {
    if (!atoms) throw FormatError("--distance " + spec + " needs --atoms");
    if (*atoms < 1 || valuation_count(std::min(*atoms, 30)) > kHardMaxUniverse) {
      throw SizeLimitError("built-in distances need 1 <= atoms and 2^atoms <= " +
                           std::to_string(kHardMaxUniverse));
    }
    return spec == "hamming" ? hamming_distance(*atoms)
                             : trivial_distance(valuation_count(*atoms));
  }
  return distance_from_json(read_json_file(spec));
}

Source load_source(const SourceOptions& s, SizeLimit limit) {
  if (!s.fixture.empty()) {
    NamedFixture f = fixture_by_name(s.fixture);
    return {"fixture " + f.name, f.operator_table(), std::nullopt};
  }
  if (!s.operator_path.empty()) {
    return {"operator " + s.operator_path, operator_from_json(read_json_file(s.operator_path), limit),
            std::nullopt};
  }
  if (!s.distance.empty()) {
    PseudoDistance d = load_distance(s.distance, s.atoms);
    SetOperator op = operator_from_distance(d, limit);
    return {"distance " + s.distance, std::move(op), std::move(d)};
  }
  throw FormatError("one of --operator, --distance or --fixture is required");
}

// ---------------------------------------------------------------------------
// Rendering

Universe valuation_universe(int atoms) {
  std::vector<std::string> labels;
  for (int v = 0; v < valuation_count(atoms); ++v) labels.push_back(valuation_string(v, atoms));
  return Universe(valuation_count(atoms), std::move(labels));
}

std::string render_witness(const Universe& u, const Witness& w) {
  std::ostringstream s;
  for (std::size_t i = 0; i < w.sets.size(); ++i) {
    s << (i ? ", " : "") << w.sets[i].role << "=" << u.describe(w.sets[i].set);
  }
  if (!w.cycle.empty()) {
    s << (w.sets.empty() ? "" : "; ") << "cycle ";
    for (std::size_t i = 0; i < w.cycle.size(); ++i) {
      s << (i ? " -> " : "") << "|" << u.describe(w.cycle[i].first) << ","
        << u.describe(w.cycle[i].second) << "|";
    }
  }
  if (!w.detail.empty()) s << (w.sets.empty() && w.cycle.empty() ? "" : "; ") << w.detail;
  return s.str();
}

void print_conditions(std::ostream& out, const Universe& u,
                      const std::vector<ConditionResult>& conditions) {
  for (const auto& c : conditions) {
    std::string name = c.name;
    name.resize(std::max<std::size_t>(name.size(), 14), ' ');
    out << "  " << name << (c.holds ? "holds" : "FAILS");
    if (c.witness) out << "  " << render_witness(u, *c.witness);
    if (!c.note.empty()) out << "  [" << c.note << "]";
    out << "\n";
  }
}

json conditions_json(const std::vector<ConditionResult>& conditions) {
  json arr = json::array();
  for (const auto& c : conditions) arr.push_back(to_json(c));
  return arr;
}

void print_matrix(std::ostream& out, const PseudoDistance& d) {
  const int n = d.size();
  std::size_t width = 1;
  for (int i = 0; i < n; ++i) {
    width = std::max(width, d.universe().label(i).size());
    for (int j = 0; j < n; ++j) width = std::max(width, std::to_string(d(i, j)).size());
  }
  auto cell = [&](const std::string& text) {
    out << std::string(width + 2 - text.size(), ' ') << text;
  };
  cell("");
  for (int j = 0; j < n; ++j) cell(d.universe().label(j));
  out << "\n";
  for (int i = 0; i < n; ++i) {
    cell(d.universe().label(i));
    for (int j = 0; j < n; ++j) cell(std::to_string(d(i, j)));
    out << "\n";
  }
}

std::string join_models(SubsetMask models, int atoms) {
  std::string s = "{";
  const auto names = model_strings(models, atoms);
  for (std::size_t i = 0; i < names.size(); ++i) s += (i ? ", " : "") + names[i];
  return s + "}";
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw FormatError("cannot open '" + path + "' for writing");
  f << text;
  if (!f) throw FormatError("failed writing '" + path + "'");
}

// ---------------------------------------------------------------------------
// revise

struct ReviseOptions {
  std::optional<int> atoms;
  std::string distance = "hamming";
  std::vector<std::string> left;
  std::vector<std::string> right;
  std::string left_file;
  std::string right_file;
};

bool same_atoms(const AtomTable& a, const AtomTable& b) {
  if (a.size() != b.size()) return false;
  for (int i = 0; i < a.size(); ++i) {
    if (a.name(i) != b.name(i)) return false;
  }
  return true;
}

TheoryModels build_theory(const char* side, const std::optional<TheoryText>& text,
                          const std::vector<std::string>& formulas, const AtomTable& atoms) {
  std::vector<Formula> all;
  if (text) all = text->formulas;
  for (const auto& f : formulas) all.push_back(parse_formula(f, atoms));
  if (!text && formulas.empty()) {
    throw FormatError(std::string(side) + " theory missing; give --" + side + " or --" + side +
                      "-file");
  }
  try {
    return TheoryModels::from_formulas(std::move(all), atoms.size());
  } catch (const InconsistentTheoryError& e) {
    throw InconsistentTheoryError(std::string(side) + " theory: " + e.what());
  }
}

int cmd_revise(const Common& c, const ReviseOptions& r, std::ostream& out) {
  const int default_atoms = r.atoms.value_or(2);
  std::optional<TheoryText> left_text, right_text;
  if (!r.left_file.empty()) left_text = parse_theory_text(read_text_file(r.left_file), default_atoms);
  if (!r.right_file.empty()) {
    right_text = parse_theory_text(read_text_file(r.right_file), default_atoms);
  }
  const AtomTable atoms = left_text    ? left_text->atoms
                          : right_text ? right_text->atoms
                                       : AtomTable::numbered(default_atoms);
  if (right_text && !same_atoms(atoms, right_text->atoms)) {
    throw FormatError("left and right theories declare different atoms");
  }
  const int k = atoms.size();
  const TheoryModels left = build_theory("left", left_text, r.left, atoms);
  const TheoryModels right = build_theory("right", right_text, r.right, atoms);
  const PseudoDistance d = load_distance(r.distance, k);
  const TheoryModels result = revise(left, right, d);

  if (c.json_output()) {
    json names = json::array();
    for (int i = 0; i < k; ++i) names.push_back(atoms.name(i));
    json doc{{"atoms", names},
             {"distance", r.distance},
             {"left", {{"models", model_strings(left.models(), k)}}},
             {"right", {{"models", model_strings(right.models(), k)}}},
             {"revised",
              {{"models", model_strings(result.models(), k)},
               {"theory", to_string(result.canonical(), atoms)}}}};
    out << doc.dump(2) << "\n";
    return kExitOk;
  }
  out << "atoms:";
  for (int i = 0; i < k; ++i) out << " " << atoms.name(i);
  out << "\ndistance: " << r.distance << "\n"
      << "left models: " << join_models(left.models(), k) << "\n"
      << "right models: " << join_models(right.models(), k) << "\n"
      << "revised models: " << join_models(result.models(), k) << "\n"
      << "revised theory: " << to_string(result.canonical(), atoms) << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------------------
// check

std::vector<ConditionResult> algebraic_conditions(const SetOperator& op, bool identity) {
  std::vector<ConditionResult> out;
  const ConditionResult containment = check_containment(op);
  out.push_back(containment);
  if (identity) out.push_back(check_intersection(op));
  if (containment.holds) {
    out.push_back(check_loop(op));
  } else {
    out.push_back({"(|S1)", false, std::nullopt, "not evaluated: requires (|1)"});
  }
  for (auto& r : check_A_conditions(op, identity).conditions) {
    if (r.name != "(|1)" && r.name != "(|2)") out.push_back(std::move(r));
  }
  out.push_back(check_or_rule(op));
  return out;
}

int cmd_check(const Common& c, const SourceOptions& s, bool identity, std::ostream& out) {
  const Source src = load_source(s, c.limit());
  const std::vector<ConditionResult> algebraic = algebraic_conditions(src.op, identity);

  std::optional<StarReport> star;
  if (s.atoms) {
    if (*s.atoms < 1 || *s.atoms > 3 || valuation_count(*s.atoms) != src.op.size()) {
      throw DimensionError("--atoms " + std::to_string(*s.atoms) + " does not match a universe of " +
                           std::to_string(src.op.size()) + " elements");
    }
    const Revision rev = src.distance ? Revision::from_distance(*src.distance)
                                      : Revision::from_operator(src.op);
    star = check_star_postulates(rev, StarSelection{true, true, true, identity});
  }

  std::size_t total = algebraic.size(), failed = 0;
  for (const auto& r : algebraic) failed += r.holds ? 0 : 1;
  if (star) {
    total += star->conditions.size();
    for (const auto& r : star->conditions) failed += r.holds ? 0 : 1;
  }

  if (c.json_output()) {
    json doc{{"source", src.description},
             {"size", src.op.size()},
             {"identity", identity},
             {"algebraic", conditions_json(algebraic)}};
    if (star) doc["star"] = conditions_json(star->conditions);
    doc["all_hold"] = failed == 0;
    out << doc.dump(2) << "\n";
  } else {
    out << "source: " << src.description << " over " << src.op.size() << " elements\n"
        << "algebraic conditions:\n";
    print_conditions(out, src.op.universe(), algebraic);
    if (star) {
      out << "star postulates (" << *s.atoms << " atoms):\n";
      print_conditions(out, valuation_universe(*s.atoms), star->conditions);
    }
    if (failed == 0) {
      out << "result: all " << total << " requested conditions hold\n";
    } else {
      out << "result: " << failed << " of " << total << " requested conditions fail\n";
    }
  }
  return failed == 0 ? kExitOk : kExitViolation;
}

// ---------------------------------------------------------------------------
// synthesize

struct SynthesizeOptions {
  bool symmetric = false;
  bool general = false;
  bool identity = false;
  std::string output;
};

int cmd_synthesize(const Common& c, const SourceOptions& s, const SynthesizeOptions& o,
                   std::ostream& out) {
  if (o.symmetric == o.general) throw FormatError("give exactly one of --symmetric or --general");
  const Source src = load_source(s, c.limit());
  std::optional<Synthesis> syn;
  try {
    syn = o.symmetric ? synthesize_symmetric_detailed(src.op, o.identity)
                      : synthesize_general_detailed(src.op, o.identity);
  } catch (const PostulateViolation& v) {
    if (c.json_output()) {
      out << json{{"source", src.description}, {"representable", false},
                  {"failed", to_json(v.failed())}}
                 .dump(2)
          << "\n";
    } else {
      out << "source: " << src.description << " over " << src.op.size() << " elements\n"
          << "not representable: " << v.what() << "\n";
      print_conditions(out, src.op.universe(), {v.failed()});
    }
    return kExitViolation;
  }

  const ConditionResult verification = verify_representation(src.op, syn->distance);
  json doc = synthesis_to_json(*syn);
  doc["verification"] = to_json(verification);
  if (!o.output.empty()) write_file(o.output, doc.dump(2) + "\n");

  if (c.json_output()) {
    out << json{{"source", src.description}, {"representable", true}, {"distance", doc}}.dump(2)
        << "\n";
  } else {
    out << "source: " << src.description << " over " << src.op.size() << " elements\n"
        << "synthesized " << (o.symmetric ? "symmetric" : "general") << " distance"
        << (syn->distance.respects_identity() ? " (respects identity)" : "") << "\n";
    print_matrix(out, syn->distance);
    out << "checked:";
    for (const auto& name : syn->postulates_checked) out << " " << name;
    out << "\nverification: " << (verification.holds ? "holds" : "FAILS") << "\n";
    if (verification.witness) {
      out << "  " << render_witness(src.op.universe(), *verification.witness) << "\n";
    }
    if (!o.output.empty()) out << "wrote " << o.output << "\n";
  }
  return verification.holds ? kExitOk : kExitViolation;
}

// ---------------------------------------------------------------------------
// demo and export-fixture

int cmd_demo(const Common& c, const std::string& name, std::ostream& out) {
  const std::vector<NamedFixture> fixtures =
      name.empty() ? all_fixtures() : std::vector<NamedFixture>{fixture_by_name(name)};
  bool all_pass = true;
  json doc = json::array();
  for (const auto& f : fixtures) {
    const auto outcomes = run_fixture(f);
    json checks = json::array();
    if (!c.json_output()) out << f.name << ": " << f.summary << "\n";
    for (const auto& o : outcomes) {
      all_pass = all_pass && o.passed;
      checks.push_back({{"description", o.description}, {"passed", o.passed}});
      if (!c.json_output()) out << "  " << (o.passed ? "PASS " : "FAIL ") << o.description << "\n";
    }
    doc.push_back({{"name", f.name}, {"summary", f.summary}, {"checks", checks}});
  }
  if (c.json_output()) out << doc.dump(2) << "\n";
  return all_pass ? kExitOk : kExitViolation;
}

int cmd_export_fixture(const std::string& name, const std::string& output, std::ostream& out) {
  const NamedFixture f = fixture_by_name(name);
  json distances = json::array();
  for (const auto& d : f.distances) distances.push_back(distance_to_json(d));
  const json doc{{"name", f.name},
                 {"summary", f.summary},
                 {"distances", distances},
                 {"operator", operator_to_json(f.operator_table())}};
  if (output.empty()) {
    out << doc.dump(2) << "\n";
  } else {
    write_file(output, doc.dump(2) + "\n");
    out << "wrote " << output << "\n";
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// fuzz

struct FuzzOptions {
  std::size_t trials = 200;
  int size = 3;
  std::uint64_t seed = 0;
  std::size_t c1_trials = 2000;
  int c1_atoms = 2;
};

struct Suite {
  std::string name;
  std::size_t passed = 0;
  std::size_t run = 0;
};

struct Counterexample {
  std::string suite;
  std::size_t trial;
  json subject;
};

template <class F>
bool synthesizes(F&& attempt) {
  try {
    return attempt();
  } catch (const PostulateViolation&) {
    return false;
  }
}

int cmd_fuzz(const Common& c, const FuzzOptions& o, std::ostream& out) {
  const SizeLimit limit = c.limit();
  const int cap = std::min(limit.max_universe, kMaxClosureUniverse);
  if (o.size < 1 || o.size > cap) {
    throw SizeLimitError("--size must lie in [1, " + std::to_string(cap) + "], got " +
                         std::to_string(o.size));
  }
  if (o.c1_atoms < 1 || o.c1_atoms > 3) throw SizeLimitError("--c1-atoms must lie in [1, 3]");

  const int n = o.size;
  const Rank max_rank = static_cast<Rank>(n + 1);
  Suite sym_sound{"symmetric soundness"}, sym_trip{"symmetric round-trip"},
      gen_sound{"general soundness"}, gen_trip{"general round-trip"},
      decision{"decision consistency"};
  std::optional<Counterexample> first_failure;
  auto record = [&](Suite& suite, bool ok, std::size_t trial, json subject) {
    ++suite.run;
    if (ok) {
      ++suite.passed;
    } else if (!first_failure) {
      first_failure = Counterexample{suite.name, trial, std::move(subject)};
    }
  };

  for (std::size_t t = 0; t < o.trials; ++t) {
    auto rng = substream(o.seed, t);
    const bool identity = t % 2 == 1;

    const PseudoDistance ds = random_distance(
        n, max_rank, identity ? DistanceShape::kSymmetricIdentity : DistanceShape::kSymmetric, rng);
    const SetOperator os = operator_from_distance(ds, limit);
    record(sym_sound,
           check_containment(os).holds && check_loop(os).holds &&
               (!identity || check_intersection(os).holds),
           t, distance_to_json(ds));
    record(sym_trip, synthesizes([&] {
             const PseudoDistance back = synthesize_symmetric(os, identity);
             return verify_representation(os, back).holds &&
                    (!identity || back.respects_identity());
           }),
           t, distance_to_json(ds));

    const PseudoDistance dg = random_distance(
        n, max_rank, identity ? DistanceShape::kIdentity : DistanceShape::kAny, rng);
    const SetOperator og = operator_from_distance(dg, limit);
    record(gen_sound, check_A_conditions(og, identity).all_hold(), t, distance_to_json(dg));
    record(gen_trip, synthesizes([&] {
             const PseudoDistance back = synthesize_general(og, identity);
             return verify_representation(og, back).holds &&
                    (!identity || back.respects_identity());
           }),
           t, distance_to_json(dg));

    // A random table is accepted by a synthesizer exactly when its
    // conditions hold, and whatever comes out must reproduce the table.
    const SetOperator ro = random_contained_operator(n, rng, limit);
    bool verified = true;
    const bool sym_built = synthesizes([&] {
      verified = verified && verify_representation(ro, synthesize_symmetric(ro)).holds;
      return true;
    });
    const bool gen_built = synthesizes([&] {
      verified = verified && verify_representation(ro, synthesize_general(ro, false)).holds;
      return true;
    });
    const bool sym_expected = check_loop(ro).holds;
    const bool gen_expected = check_A_conditions(ro, false).all_hold();
    record(decision, verified && sym_built == sym_expected && gen_built == gen_expected, t,
           operator_to_json(ro));
  }

  const C1Search c1 = search_c1_violation(o.c1_atoms, o.seed, o.c1_trials);
  const std::vector<Suite> suites{sym_sound, sym_trip, gen_sound, gen_trip, decision};
  const bool clean = !first_failure;

  if (c.json_output()) {
    json suites_doc = json::array();
    for (const auto& s : suites) {
      suites_doc.push_back({{"name", s.name}, {"passed", s.passed}, {"run", s.run}});
    }
    json c1_doc{{"atoms", o.c1_atoms}, {"trials_run", c1.trials_run}, {"found", c1.witness.has_value()}};
    if (c1.witness) {
      const int k = o.c1_atoms;
      c1_doc["distance"] = distance_to_json(*c1.distance);
      c1_doc["theory"] = model_strings(c1.witness->theory, k);
      c1_doc["alpha"] = model_strings(c1.witness->alpha, k);
      c1_doc["beta"] = model_strings(c1.witness->beta, k);
      c1_doc["iterated"] = model_strings(c1.witness->iterated, k);
      c1_doc["direct"] = model_strings(c1.witness->direct, k);
    }
    json doc{{"trials", o.trials}, {"size", n},       {"seed", o.seed},
             {"suites", suites_doc}, {"c1_search", c1_doc}, {"sound", clean}};
    if (first_failure) {
      doc["counterexample"] = {{"suite", first_failure->suite},
                               {"trial", first_failure->trial},
                               {"subject", first_failure->subject}};
    }
    out << doc.dump(2) << "\n";
  } else {
    out << "fuzz: " << o.trials << " trials, size " << n << ", seed " << o.seed << "\n";
    for (const auto& s : suites) {
      std::string name = s.name;
      name.resize(24, ' ');
      out << "  " << name << s.passed << "/" << s.run << "\n";
    }
    if (first_failure) {
      out << "counterexample (" << first_failure->suite << ", trial " << first_failure->trial
          << "):\n"
          << first_failure->subject.dump() << "\n";
    }
    out << "C1 search (" << o.c1_atoms << " atoms): ";
    if (c1.witness) {
      const int k = o.c1_atoms;
      const auto& w = *c1.witness;
      out << "violation found after " << c1.trials_run << " trials\n";
      print_matrix(out, *c1.distance);
      out << "  K = " << join_models(w.theory, k) << ", alpha = " << join_models(w.alpha, k)
          << ", beta = " << join_models(w.beta, k) << "\n"
          << "  (K * alpha) * (alpha & beta) = " << join_models(w.iterated, k) << "\n"
          << "  K * (alpha & beta)           = " << join_models(w.direct, k) << "\n";
    } else {
      out << "no violation in " << c1.trials_run << " trials\n";
    }
    out << "result: " << (clean ? "no soundness violations" : "SOUNDNESS VIOLATION") << "\n";
  }
  return clean ? kExitOk : kExitViolation;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Distance-based belief revision on finite universes", "revlab"};
  app.require_subcommand(1);

  Common common;

  ReviseOptions revise_opts;
  auto* revise = app.add_subcommand("revise", "Revise one theory by another");
  add_common(revise, common);
  revise->add_option("--atoms", revise_opts.atoms, "Atom count (default 2)");
  revise->add_option("--distance", revise_opts.distance,
                     "hamming (default), trivial, or a distance file (JSON)");
  revise->add_option("--left", revise_opts.left, "Formula of the theory being revised");
  revise->add_option("--right", revise_opts.right, "Formula of the incoming information");
  revise->add_option("--left-file", revise_opts.left_file, "Theory file being revised");
  revise->add_option("--right-file", revise_opts.right_file, "Theory file of incoming information");

  SourceOptions check_src;
  bool check_identity = false;
  auto* check = app.add_subcommand("check", "Check representation conditions of an operator");
  add_common(check, common);
  add_source(check, check_src);
  check->add_flag("--identity", check_identity, "Also require the identity conditions");

  SourceOptions synth_src;
  SynthesizeOptions synth_opts;
  auto* synth = app.add_subcommand("synthesize", "Build a pseudo-distance for an operator");
  add_common(synth, common);
  add_source(synth, synth_src);
  auto* sym_flag = synth->add_flag("--symmetric", synth_opts.symmetric, "Symmetric distance");
  auto* gen_flag = synth->add_flag("--general", synth_opts.general, "Possibly asymmetric distance");
  sym_flag->excludes(gen_flag);
  synth->add_flag("--identity", synth_opts.identity, "Require d(a,b) = 0 iff a = b");
  synth->add_option("--output", synth_opts.output, "Write the distance file here");

  std::string demo_fixture;
  auto* demo = app.add_subcommand("demo", "Run the built-in fixtures and their expectations");
  add_common(demo, common);
  demo->add_option("--fixture", demo_fixture, "Only this fixture");

  std::string export_name, export_output;
  auto* exporter = app.add_subcommand("export-fixture", "Write a fixture as JSON");
  add_common(exporter, common);
  exporter->add_option("--fixture", export_name, "tripod, one-way-road or patchwork")->required();
  exporter->add_option("--output", export_output, "Destination file (default: stdout)");

  FuzzOptions fuzz_opts;
  auto* fuzz = app.add_subcommand("fuzz", "Randomized soundness and round-trip sweeps");
  add_common(fuzz, common);
  fuzz->add_option("--trials", fuzz_opts.trials, "Trials per suite (default 200)");
  fuzz->add_option("--size", fuzz_opts.size, "Universe size (default 3)");
  fuzz->add_option("--seed", fuzz_opts.seed, "Seed (default 0)");
  fuzz->add_option("--c1-trials", fuzz_opts.c1_trials, "Distances tried by the C1 search");
  fuzz->add_option("--c1-atoms", fuzz_opts.c1_atoms, "Atom count for the C1 search (default 2)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (revise->parsed()) return cmd_revise(common, revise_opts, out);
    if (check->parsed()) return cmd_check(common, check_src, check_identity, out);
    if (synth->parsed()) return cmd_synthesize(common, synth_src, synth_opts, out);
    if (demo->parsed()) return cmd_demo(common, demo_fixture, out);
    if (exporter->parsed()) return cmd_export_fixture(export_name, export_output, out);
    if (fuzz->parsed()) return cmd_fuzz(common, fuzz_opts, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace revlab
