#include "planelog/formula.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <set>
#include <unordered_set>

namespace planelog {

struct Formula::Node {
  FormulaKind kind;
  std::string name;
  std::vector<Formula> kids;
  std::size_t size = 1;
  std::size_t depth = 0;
  std::size_t hash = 0;
};

FormulaKind Formula::kind() const { return node_->kind; }
std::size_t Formula::size() const { return node_->size; }
std::size_t Formula::modal_depth() const { return node_->depth; }
std::size_t Formula::hash() const { return node_->hash; }

Formula Formula::make(FormulaKind k, std::string name, std::vector<Formula> kids) {
  auto n = std::make_shared<Node>();
  n->kind = k;
  n->hash = std::hash<int>{}(static_cast<int>(k)) * 1000003u;
  if (k == FormulaKind::Var) n->hash ^= std::hash<std::string>{}(name);
  for (const auto& c : kids) {
    n->size += c.size();
    n->depth = std::max(n->depth, c.modal_depth());
    n->hash = n->hash * 31u + c.hash() + 0x9e3779b97f4a7c15ull + (n->hash << 6) + (n->hash >> 2);
  }
  if (k == FormulaKind::Box || k == FormulaKind::Dia) ++n->depth;
  n->name = std::move(name);
  n->kids = std::move(kids);
  return Formula(std::move(n));
}

Formula Formula::var(std::string name) { return make(FormulaKind::Var, std::move(name), {}); }
Formula Formula::negation(Formula f) { return make(FormulaKind::Not, {}, {std::move(f)}); }
Formula Formula::conjunction(Formula l, Formula r) {
  return make(FormulaKind::And, {}, {std::move(l), std::move(r)});
}
Formula Formula::box(Formula f) { return make(FormulaKind::Box, {}, {std::move(f)}); }
Formula Formula::dia(Formula f) { return make(FormulaKind::Dia, {}, {std::move(f)}); }

Formula Formula::disjunction(Formula l, Formula r) {
  return negation(conjunction(negation(std::move(l)), negation(std::move(r))));
}
Formula Formula::implication(Formula l, Formula r) {
  return negation(conjunction(std::move(l), negation(std::move(r))));
}
Formula Formula::equivalence(Formula l, Formula r) {
  return conjunction(implication(l, r), implication(r, l));
}

const std::string& Formula::name() const {
  if (kind() != FormulaKind::Var) throw std::logic_error("name() on non-variable");
  return node_->name;
}
const Formula& Formula::operand() const {
  if (node_->kids.size() != 1) throw std::logic_error("operand() on non-unary formula");
  return node_->kids[0];
}
const Formula& Formula::left() const {
  if (kind() != FormulaKind::And) throw std::logic_error("left() on non-conjunction");
  return node_->kids[0];
}
const Formula& Formula::right() const {
  if (kind() != FormulaKind::And) throw std::logic_error("right() on non-conjunction");
  return node_->kids[1];
}

std::vector<std::string> Formula::variables() const {
  std::set<std::string> names;
  std::function<void(const Formula&)> walk = [&](const Formula& f) {
    if (f.kind() == FormulaKind::Var) {
      names.insert(f.name());
      return;
    }
    for (const auto& k : f.node_->kids) walk(k);
  };
  walk(*this);
  return {names.begin(), names.end()};
}

namespace {

void print(const Formula& f, std::string& out) {
  auto wrapped = [&out](const Formula& g) {
    if (g.kind() == FormulaKind::And) {
      out += '(';
      print(g, out);
      out += ')';
    } else {
      print(g, out);
    }
  };
  switch (f.kind()) {
    case FormulaKind::Var: out += f.name(); break;
    case FormulaKind::Not: out += '~'; wrapped(f.operand()); break;
    case FormulaKind::Box: out += "[]"; wrapped(f.operand()); break;
    case FormulaKind::Dia: out += "<>"; wrapped(f.operand()); break;
    case FormulaKind::And:
      // '&' chains associate to the left, so only a right conjunct needs parens.
      print(f.left(), out);
      out += " & ";
      wrapped(f.right());
      break;
  }
}

}  // namespace

std::string Formula::to_string() const {
  std::string out;
  print(*this, out);
  return out;
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.hash() != b.hash() || a.kind() != b.kind() || a.size() != b.size()) return false;
  if (a.kind() == FormulaKind::Var) return a.node_->name == b.node_->name;
  const auto& ka = a.node_->kids;
  const auto& kb = b.node_->kids;
  for (std::size_t i = 0; i < ka.size(); ++i)
    if (!(ka[i] == kb[i])) return false;
  return true;
}

bool operator<(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return false;
  if (a.kind() != b.kind()) return a.kind() < b.kind();
  if (a.kind() == FormulaKind::Var) return a.node_->name < b.node_->name;
  const auto& ka = a.node_->kids;
  const auto& kb = b.node_->kids;
  for (std::size_t i = 0; i < ka.size(); ++i) {
    if (ka[i] < kb[i]) return true;
    if (kb[i] < ka[i]) return false;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Parser

namespace {

enum class Tok { Ident, Not, Box, Dia, And, Or, Implies, Iff, LParen, RParen, End };

struct Token {
  Tok type;
  std::size_t pos;
  std::string text;
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> toks;
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    auto starts = [&](std::string_view lit) { return s.substr(i, lit.size()) == lit; };
    if (c >= 'a' && c <= 'z') {
      std::size_t j = i + 1;
      while (j < s.size() && ((s[j] >= 'a' && s[j] <= 'z') || (s[j] >= '0' && s[j] <= '9') || s[j] == '_'))
        ++j;
      toks.push_back({Tok::Ident, i, std::string(s.substr(i, j - i))});
      i = j;
    } else if (starts("<->")) {
      toks.push_back({Tok::Iff, i, "<->"});
      i += 3;
    } else if (starts("->")) {
      toks.push_back({Tok::Implies, i, "->"});
      i += 2;
    } else if (starts("[]")) {
      toks.push_back({Tok::Box, i, "[]"});
      i += 2;
    } else if (starts("<>")) {
      toks.push_back({Tok::Dia, i, "<>"});
      i += 2;
    } else if (c == '~') {
      toks.push_back({Tok::Not, i++, "~"});
    } else if (c == '&') {
      toks.push_back({Tok::And, i++, "&"});
    } else if (c == '|') {
      toks.push_back({Tok::Or, i++, "|"});
    } else if (c == '(') {
      toks.push_back({Tok::LParen, i++, "("});
    } else if (c == ')') {
      toks.push_back({Tok::RParen, i++, ")"});
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", i);
    }
  }
  toks.push_back({Tok::End, s.size(), ""});
  return toks;
}

class Parser {
public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  Formula parse_all() {
    if (peek().type == Tok::End) throw ParseError("empty formula", peek().pos);
    Formula f = implish();
    if (peek().type != Tok::End) throw ParseError("unexpected '" + peek().text + "'", peek().pos);
    return f;
  }

private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& take() { return toks_[pos_++]; }

  Formula implish() {
    Formula l = orish();
    if (peek().type == Tok::Implies) {
      take();
      return Formula::implication(l, implish());
    }
    if (peek().type == Tok::Iff) {
      take();
      return Formula::equivalence(l, implish());
    }
    return l;
  }

  Formula orish() {
    Formula l = andish();
    while (peek().type == Tok::Or) {
      take();
      l = Formula::disjunction(l, andish());
    }
    return l;
  }

  Formula andish() {
    Formula l = unary();
    while (peek().type == Tok::And) {
      take();
      l = Formula::conjunction(l, unary());
    }
    return l;
  }

  Formula unary() {
    switch (peek().type) {
      case Tok::Not: take(); return Formula::negation(unary());
      case Tok::Box: take(); return Formula::box(unary());
      case Tok::Dia: take(); return Formula::dia(unary());
      default: return atom();
    }
  }

  Formula atom() {
    const Token& t = take();
    if (t.type == Tok::Ident) return Formula::var(t.text);
    if (t.type == Tok::LParen) {
      Formula f = implish();
      if (peek().type != Tok::RParen) throw ParseError("expected ')'", peek().pos);
      take();
      return f;
    }
    if (t.type == Tok::End) throw ParseError("unexpected end of input", t.pos);
    throw ParseError("unexpected '" + t.text + "'", t.pos);
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

Formula parse(std::string_view text) { return Parser(tokenize(text)).parse_all(); }

// ---------------------------------------------------------------------------

Modality::Modality(std::vector<ModalOp> word) : word_(std::move(word)) {
  if (word_.empty()) throw std::invalid_argument("a proper modality is a nonempty word");
}

Modality Modality::from_string(std::string_view s) {
  std::vector<ModalOp> w;
  for (std::size_t i = 0; i < s.size(); i += 2) {
    auto sym = s.substr(i, 2);
    if (sym == "[]") w.push_back(ModalOp::Box);
    else if (sym == "<>") w.push_back(ModalOp::Dia);
    else throw ParseError("expected '[]' or '<>'", i);
  }
  return Modality(std::move(w));
}

std::string Modality::to_string() const {
  std::string s;
  for (auto op : word_) s += op == ModalOp::Box ? "[]" : "<>";
  return s;
}

Formula iterate(ModalOp op, std::size_t n, Formula f) {
  for (std::size_t i = 0; i < n; ++i)
    f = op == ModalOp::Box ? Formula::box(std::move(f)) : Formula::dia(std::move(f));
  return f;
}

Formula apply_modality(const Modality& m, Formula f) {
  const auto& w = m.word();
  for (auto it = w.rbegin(); it != w.rend(); ++it) f = iterate(*it, 1, std::move(f));
  return f;
}

std::vector<Formula> subformulas(const Formula& f) {
  std::vector<Formula> out;
  std::unordered_set<Formula, FormulaHash> seen;
  std::function<void(const Formula&)> walk = [&](const Formula& g) {
    if (seen.count(g)) return;
    switch (g.kind()) {
      case FormulaKind::Var: break;
      case FormulaKind::And:
        walk(g.left());
        walk(g.right());
        break;
      default: walk(g.operand()); break;
    }
    seen.insert(g);
    out.push_back(g);
  };
  walk(f);
  return out;
}

}  // namespace planelog
