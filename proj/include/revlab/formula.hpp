#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace revlab {

/// Largest atom count the propositional layer accepts (32 valuations fit a mask).
inline constexpr int kMaxAtoms = 5;

/// Names of the atoms p0..p{k-1}, or user-declared names.
class AtomTable {
 public:
  static AtomTable numbered(int atoms);
  static AtomTable named(std::vector<std::string> names);

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int index) const { return names_[index]; }
  /// -1 when unknown.
  int index_of(std::string_view name) const;

 private:
  explicit AtomTable(std::vector<std::string> names) : names_(std::move(names)) {}
  std::vector<std::string> names_;
};

/// Immutable propositional formula; copies share structure.
class Formula {
 public:
  enum class Kind { kAtom, kNot, kAnd, kOr, kImplies, kIff };

  static Formula atom(int index);
  static Formula negation(Formula operand);
  static Formula conjunction(Formula lhs, Formula rhs);
  static Formula disjunction(Formula lhs, Formula rhs);
  static Formula implication(Formula lhs, Formula rhs);
  static Formula biconditional(Formula lhs, Formula rhs);

  Kind kind() const;
  int atom_index() const;
  /// Operand of a negation, or left operand of a binary connective.
  const Formula& lhs() const;
  const Formula& rhs() const;

  /// Truth value under the valuation whose bit j is the value of atom j.
  bool evaluate(std::uint32_t valuation) const;
  /// Largest atom index occurring in the formula.
  int max_atom() const;

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Grammar, loosest to tightest binding:
///   iff     := implies ( "<->" iff )?
///   implies := or ( "->" implies )?
///   or      := and ( "|" and )*
///   and     := unary ( "&" unary )*
///   unary   := "!" unary | atom | "(" iff ")"
Formula parse_formula(std::string_view text, const AtomTable& atoms);
Formula parse_formula(std::string_view text, int atoms);

/// Prints with the fewest parentheses the grammar needs.
std::string to_string(const Formula& f, const AtomTable& atoms);

}  // namespace revlab
