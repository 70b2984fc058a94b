#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "revlab/distance.hpp"
#include "revlab/formula.hpp"
#include "revlab/subset.hpp"

namespace revlab {

/// Valuations of k atoms are the integers 0..2^k-1; bit j is atom j.
constexpr int valuation_count(int atoms) { return 1 << atoms; }

/// Valuations satisfying every formula. May be empty (inconsistent input).
SubsetMask models_of(std::span<const Formula> formulas, int atoms);
SubsetMask models_of(const Formula& formula, int atoms);

/// Full-minterm disjunction whose models are exactly `models`.
Formula theory_of_models(SubsetMask models, int atoms);

/// A consistent theory, kept as its model set.
class TheoryModels {
 public:
  /// Throws InconsistentTheoryError on an empty model set.
  TheoryModels(int atoms, SubsetMask models, std::vector<Formula> source = {});

  static TheoryModels from_formulas(std::vector<Formula> formulas, int atoms);

  int atoms() const { return atoms_; }
  SubsetMask models() const { return models_; }
  const std::vector<Formula>& source() const { return source_; }

  /// Th(M(T)) in canonical form.
  Formula canonical() const { return theory_of_models(models_, atoms_); }

 private:
  int atoms_;
  SubsetMask models_;
  std::vector<Formula> source_;
};

/// phi is in Cn(T), i.e. M(T) is a subset of M(phi).
bool entails(const TheoryModels& theory, const Formula& phi);

/// Con(T, S): the two theories have a common model.
bool consistent_with(const TheoryModels& a, const TheoryModels& b);

/// T *_d T' = Th(M(T) |_d M(T')). `d` must live on the 2^k valuations.
TheoryModels revise(const TheoryModels& theory, const TheoryModels& input,
                    const PseudoDistance& d);

/// Valuation as a string of atom values, atom 0 first ("01": p0 false, p1 true).
std::string valuation_string(int valuation, int atoms);
std::vector<std::string> model_strings(SubsetMask models, int atoms);

/// A theory file: optional `@atoms name...` header, one formula per line,
/// `#` starts a comment, blank lines ignored.
struct TheoryText {
  AtomTable atoms;
  std::vector<Formula> formulas;
};

/// Without a header, atoms default to p0..p{default_atoms-1}.
TheoryText parse_theory_text(std::string_view text, int default_atoms);

}  // namespace revlab
