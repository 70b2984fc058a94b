#include "revlab/theory.hpp"

#include <sstream>

#include "revlab/error.hpp"

namespace revlab {

namespace {

void check_atoms(int atoms) {
  if (atoms < 1 || atoms > kMaxAtoms) {
    throw SizeLimitError("atom count must lie in [1, " + std::to_string(kMaxAtoms) +
                         "], got " + std::to_string(atoms));
  }
}

void check_formula_atoms(const Formula& f, int atoms) {
  if (f.max_atom() >= atoms) {
    throw DimensionError("formula mentions atom " + std::to_string(f.max_atom()) +
                         " but only " + std::to_string(atoms) + " atoms exist");
  }
}

}  // namespace

SubsetMask models_of(std::span<const Formula> formulas, int atoms) {
  check_atoms(atoms);
  for (const auto& f : formulas) check_formula_atoms(f, atoms);
  SubsetMask out;
  for (int v = 0; v < valuation_count(atoms); ++v) {
    bool all = true;
    for (const auto& f : formulas) {
      if (!f.evaluate(static_cast<std::uint32_t>(v))) {
        all = false;
        break;
      }
    }
    if (all) out = out | SubsetMask::singleton(v);
  }
  return out;
}

SubsetMask models_of(const Formula& formula, int atoms) {
  return models_of(std::span<const Formula>(&formula, 1), atoms);
}

Formula theory_of_models(SubsetMask models, int atoms) {
  check_atoms(atoms);
  if (models.empty()) throw InconsistentTheoryError("no theory has an empty model set here");
  if (!models.fits(valuation_count(atoms))) {
    throw DimensionError("model set exceeds the valuations of " + std::to_string(atoms) + " atoms");
  }
  std::optional<Formula> result;
  for (int v : elements(models)) {
    std::optional<Formula> minterm;
    for (int j = 0; j < atoms; ++j) {
      Formula literal = ((v >> j) & 1) ? Formula::atom(j) : Formula::negation(Formula::atom(j));
      minterm = minterm ? Formula::conjunction(*minterm, literal) : literal;
    }
    result = result ? Formula::disjunction(*result, *minterm) : *minterm;
  }
  return *result;
}

TheoryModels::TheoryModels(int atoms, SubsetMask models, std::vector<Formula> source)
    : atoms_(atoms), models_(models), source_(std::move(source)) {
  check_atoms(atoms);
  if (models.empty()) throw InconsistentTheoryError("inconsistent theory");
  if (!models.fits(valuation_count(atoms))) {
    throw DimensionError("model set exceeds the valuations of " + std::to_string(atoms) + " atoms");
  }
}

TheoryModels TheoryModels::from_formulas(std::vector<Formula> formulas, int atoms) {
  const SubsetMask models = models_of(formulas, atoms);
  return TheoryModels(atoms, models, std::move(formulas));
}

bool entails(const TheoryModels& theory, const Formula& phi) {
  return theory.models().subset_of(models_of(phi, theory.atoms()));
}

bool consistent_with(const TheoryModels& a, const TheoryModels& b) {
  if (a.atoms() != b.atoms()) throw DimensionError("theories over different atom sets");
  return a.models().intersects(b.models());
}

TheoryModels revise(const TheoryModels& theory, const TheoryModels& input,
                    const PseudoDistance& d) {
  if (theory.atoms() != input.atoms()) throw DimensionError("theories over different atom sets");
  if (d.size() != valuation_count(theory.atoms())) {
    throw DimensionError("distance over " + std::to_string(d.size()) +
                         " elements cannot compare the " +
                         std::to_string(valuation_count(theory.atoms())) + " valuations");
  }
  return TheoryModels(theory.atoms(), closest(d, theory.models(), input.models()));
}

std::string valuation_string(int valuation, int atoms) {
  std::string out;
  for (int j = 0; j < atoms; ++j) out += ((valuation >> j) & 1) ? '1' : '0';
  return out;
}

std::vector<std::string> model_strings(SubsetMask models, int atoms) {
  std::vector<std::string> out;
  for (int v : elements(models)) out.push_back(valuation_string(v, atoms));
  return out;
}

TheoryText parse_theory_text(std::string_view text, int default_atoms) {
  std::vector<std::string> lines;
  std::istringstream in{std::string(text)};
  for (std::string line; std::getline(in, line);) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    lines.push_back(line.substr(first));
  }
  std::optional<AtomTable> atoms;
  std::size_t start = 0;
  if (!lines.empty() && lines[0].rfind("@atoms", 0) == 0) {
    std::istringstream names(lines[0].substr(6));
    std::vector<std::string> declared;
    for (std::string name; names >> name;) declared.push_back(name);
    atoms = AtomTable::named(std::move(declared));
    start = 1;
  }
  if (!atoms) atoms = AtomTable::numbered(default_atoms);
  TheoryText out{*atoms, {}};
  for (std::size_t i = start; i < lines.size(); ++i) {
    if (lines[i].rfind("@atoms", 0) == 0) {
      throw FormatError("@atoms must be the first non-comment line");
    }
    try {
      out.formulas.push_back(parse_formula(lines[i], out.atoms));
    } catch (const ParseError& e) {
      throw FormatError("line '" + lines[i] + "': " + e.what());
    }
  }
  return out;
}

}  // namespace revlab
