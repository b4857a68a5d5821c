#pragma once

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace planelog {

enum class FormulaKind { Var, Not, And, Box, Dia };

// Immutable modal formula. Copies share structure.
//
// Disjunction, implication and equivalence do not exist as nodes: the parser
// rewrites them into Not/And. Dia is kept as its own node so that formulas
// print the way they were written; semantically it is the dual of Box.
class Formula {
public:
  static Formula var(std::string name);
  static Formula negation(Formula f);
  static Formula conjunction(Formula l, Formula r);
  static Formula box(Formula f);
  static Formula dia(Formula f);

  // Derived connectives, built from Not/And.
  static Formula disjunction(Formula l, Formula r);
  static Formula implication(Formula l, Formula r);
  static Formula equivalence(Formula l, Formula r);

  FormulaKind kind() const;
  const std::string& name() const;  // Var only
  const Formula& operand() const;   // Not, Box, Dia
  const Formula& left() const;      // And
  const Formula& right() const;     // And

  bool is_modal() const {
    return kind() == FormulaKind::Box || kind() == FormulaKind::Dia;
  }

  // Number of nodes in the tree (shared subtrees counted once per occurrence).
  std::size_t size() const;
  std::size_t modal_depth() const;

  // Variable names occurring in the formula, sorted.
  std::vector<std::string> variables() const;

  std::string to_string() const;

  friend bool operator==(const Formula& a, const Formula& b);
  friend bool operator<(const Formula& a, const Formula& b);
  std::size_t hash() const;

private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static Formula make(FormulaKind k, std::string name, std::vector<Formula> kids);

  std::shared_ptr<const Node> node_;
};

struct FormulaHash {
  std::size_t operator()(const Formula& f) const { return f.hash(); }
};

class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at offset " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

// Grammar (ASCII):
//   formula ::= implish
//   implish ::= orish ( "->" implish | "<->" implish )?
//   orish   ::= andish ( "|" andish )*
//   andish  ::= unary ( "&" unary )*
//   unary   ::= "~" unary | "[]" unary | "<>" unary | atom
//   atom    ::= ident | "(" formula ")"
//   ident   ::= [a-z][a-z0-9_]*
Formula parse(std::string_view text);

enum class ModalOp { Box, Dia };

// A proper affirmative modality: a nonempty word over {Box, Dia}.
class Modality {
public:
  explicit Modality(std::vector<ModalOp> word);
  static Modality from_string(std::string_view s);  // e.g. "[]<>[]"

  const std::vector<ModalOp>& word() const { return word_; }
  std::size_t length() const { return word_.size(); }
  std::string to_string() const;

  friend bool operator==(const Modality&, const Modality&) = default;
  friend auto operator<=>(const Modality&, const Modality&) = default;

private:
  std::vector<ModalOp> word_;
};

Formula iterate(ModalOp op, std::size_t n, Formula f);

// The first symbol of the word is outermost: ([Dia, Box], p) gives <>[]p.
Formula apply_modality(const Modality& m, Formula f);

// Subformula closure in post-order with duplicates removed; the formula
// itself is last.
std::vector<Formula> subformulas(const Formula& f);

}  // namespace planelog
