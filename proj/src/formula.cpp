#include "revlab/formula.hpp"

#include <cctype>
#include <optional>

#include "revlab/error.hpp"

namespace revlab {

struct Formula::Node {
  Kind kind;
  int atom = -1;
  std::optional<Formula> lhs;
  std::optional<Formula> rhs;
};

AtomTable AtomTable::numbered(int atoms) {
  if (atoms < 1 || atoms > kMaxAtoms) {
    throw SizeLimitError("atom count must lie in [1, " + std::to_string(kMaxAtoms) +
                         "], got " + std::to_string(atoms));
  }
  std::vector<std::string> names;
  for (int i = 0; i < atoms; ++i) names.push_back("p" + std::to_string(i));
  return AtomTable(std::move(names));
}

AtomTable AtomTable::named(std::vector<std::string> names) {
  if (names.empty() || static_cast<int>(names.size()) > kMaxAtoms) {
    throw SizeLimitError("atom count must lie in [1, " + std::to_string(kMaxAtoms) + "]");
  }
  for (std::size_t i = 0; i < names.size(); ++i) {
    const std::string& n = names[i];
    bool ok = !n.empty() && (std::isalpha(static_cast<unsigned char>(n[0])) || n[0] == '_');
    for (char c : n) ok = ok && (std::isalnum(static_cast<unsigned char>(c)) || c == '_');
    if (!ok) throw FormatError("invalid atom name '" + n + "'");
    for (std::size_t j = 0; j < i; ++j) {
      if (names[j] == n) throw FormatError("atom '" + n + "' declared twice");
    }
  }
  return AtomTable(std::move(names));
}

int AtomTable::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return static_cast<int>(i);
  }
  return -1;
}

Formula Formula::atom(int index) {
  return Formula(std::make_shared<const Node>(Node{Kind::kAtom, index, {}, {}}));
}
Formula Formula::negation(Formula operand) {
  return Formula(std::make_shared<const Node>(Node{Kind::kNot, -1, std::move(operand), {}}));
}
Formula Formula::conjunction(Formula lhs, Formula rhs) {
  return Formula(std::make_shared<const Node>(Node{Kind::kAnd, -1, std::move(lhs), std::move(rhs)}));
}
Formula Formula::disjunction(Formula lhs, Formula rhs) {
  return Formula(std::make_shared<const Node>(Node{Kind::kOr, -1, std::move(lhs), std::move(rhs)}));
}
Formula Formula::implication(Formula lhs, Formula rhs) {
  return Formula(std::make_shared<const Node>(Node{Kind::kImplies, -1, std::move(lhs), std::move(rhs)}));
}
Formula Formula::biconditional(Formula lhs, Formula rhs) {
  return Formula(std::make_shared<const Node>(Node{Kind::kIff, -1, std::move(lhs), std::move(rhs)}));
}

Formula::Kind Formula::kind() const { return node_->kind; }
int Formula::atom_index() const { return node_->atom; }
const Formula& Formula::lhs() const { return *node_->lhs; }
const Formula& Formula::rhs() const { return *node_->rhs; }

bool Formula::evaluate(std::uint32_t valuation) const {
  switch (node_->kind) {
    case Kind::kAtom: return (valuation >> node_->atom) & 1U;
    case Kind::kNot: return !lhs().evaluate(valuation);
    case Kind::kAnd: return lhs().evaluate(valuation) && rhs().evaluate(valuation);
    case Kind::kOr: return lhs().evaluate(valuation) || rhs().evaluate(valuation);
    case Kind::kImplies: return !lhs().evaluate(valuation) || rhs().evaluate(valuation);
    case Kind::kIff: return lhs().evaluate(valuation) == rhs().evaluate(valuation);
  }
  return false;
}

int Formula::max_atom() const {
  switch (node_->kind) {
    case Kind::kAtom: return node_->atom;
    case Kind::kNot: return lhs().max_atom();
    default: return std::max(lhs().max_atom(), rhs().max_atom());
  }
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Formula::Kind::kAtom: return a.atom_index() == b.atom_index();
    case Formula::Kind::kNot: return a.lhs() == b.lhs();
    default: return a.lhs() == b.lhs() && a.rhs() == b.rhs();
  }
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, const AtomTable& atoms) : text_(text), atoms_(atoms) {}

  Formula parse() {
    Formula f = parse_iff();
    skip_space();
    if (pos_ != text_.size()) {
      throw ParseError("unexpected '" + std::string(1, text_[pos_]) + "'", pos_);
    }
    return f;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(std::string_view token) {
    skip_space();
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  Formula parse_iff() {
    Formula lhs = parse_implies();
    if (accept("<->")) return Formula::biconditional(std::move(lhs), parse_iff());
    return lhs;
  }

  Formula parse_implies() {
    Formula lhs = parse_or();
    if (accept("->")) return Formula::implication(std::move(lhs), parse_implies());
    return lhs;
  }

  Formula parse_or() {
    Formula lhs = parse_and();
    while (accept("|")) lhs = Formula::disjunction(std::move(lhs), parse_and());
    return lhs;
  }

  Formula parse_and() {
    Formula lhs = parse_unary();
    while (accept("&")) lhs = Formula::conjunction(std::move(lhs), parse_unary());
    return lhs;
  }

  Formula parse_unary() {
    if (accept("!")) return Formula::negation(parse_unary());
    if (accept("(")) {
      Formula inner = parse_iff();
      if (!accept(")")) throw ParseError("expected ')'", pos_);
      return inner;
    }
    skip_space();
    const std::size_t start = pos_;
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
    if (!std::isalpha(static_cast<unsigned char>(text_[pos_])) && text_[pos_] != '_') {
      throw ParseError("expected an atom, '!' or '('", pos_);
    }
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    const std::string_view name = text_.substr(start, pos_ - start);
    const int index = atoms_.index_of(name);
    if (index < 0) throw UnknownAtomError(std::string(name), start);
    return Formula::atom(index);
  }

  std::string_view text_;
  const AtomTable& atoms_;
  std::size_t pos_ = 0;
};

int precedence(Formula::Kind kind) {
  switch (kind) {
    case Formula::Kind::kIff: return 0;
    case Formula::Kind::kImplies: return 1;
    case Formula::Kind::kOr: return 2;
    case Formula::Kind::kAnd: return 3;
    case Formula::Kind::kNot: return 4;
    case Formula::Kind::kAtom: return 5;
  }
  return 5;
}

const char* symbol(Formula::Kind kind) {
  switch (kind) {
    case Formula::Kind::kIff: return " <-> ";
    case Formula::Kind::kImplies: return " -> ";
    case Formula::Kind::kOr: return " | ";
    case Formula::Kind::kAnd: return " & ";
    default: return "";
  }
}

void print(const Formula& f, const AtomTable& atoms, int context, std::string& out) {
  const int prec = precedence(f.kind());
  const bool wrap = prec < context;
  if (wrap) out += '(';
  switch (f.kind()) {
    case Formula::Kind::kAtom:
      out += atoms.name(f.atom_index());
      break;
    case Formula::Kind::kNot:
      out += '!';
      print(f.lhs(), atoms, prec, out);
      break;
    case Formula::Kind::kAnd:
    case Formula::Kind::kOr:
      // left associative: a right operand of equal precedence needs parentheses
      print(f.lhs(), atoms, prec, out);
      out += symbol(f.kind());
      print(f.rhs(), atoms, prec + 1, out);
      break;
    case Formula::Kind::kImplies:
    case Formula::Kind::kIff:
      print(f.lhs(), atoms, prec + 1, out);
      out += symbol(f.kind());
      print(f.rhs(), atoms, prec, out);
      break;
  }
  if (wrap) out += ')';
}

}  // namespace

Formula parse_formula(std::string_view text, const AtomTable& atoms) {
  return Parser(text, atoms).parse();
}

Formula parse_formula(std::string_view text, int atoms) {
  return parse_formula(text, AtomTable::numbered(atoms));
}

std::string to_string(const Formula& f, const AtomTable& atoms) {
  std::string out;
  print(f, atoms, 0, out);
  return out;
}

}  // namespace revlab
