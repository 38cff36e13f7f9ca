#include "contingent/formula.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>

namespace contingent {

namespace {

bool is_unary(Conn k) { return k == Conn::Not || k == Conn::Delta || k == Conn::Box; }
bool is_binary(Conn k) {
  return k == Conn::And || k == Conn::Or || k == Conn::Imp || k == Conn::Iff;
}

}  // namespace

bool is_metavariable_name(std::string_view name) {
  return name == "phi" || name == "psi" || name == "chi";
}

bool is_atom_name(std::string_view name) {
  if (name.empty() || name[0] < 'a' || name[0] > 'z') return false;
  for (char ch : name) {
    const bool ok = (ch >= 'a' && ch <= 'z') || (ch >= '0' && ch <= '9') || ch == '_';
    if (!ok) return false;
  }
  return true;
}

Formula Formula::atom(std::string name) {
  if (!is_atom_name(name)) {
    throw std::invalid_argument("invalid atom name: '" + name + "'");
  }
  return Formula(std::make_shared<Node>(Node{Conn::Atom, std::move(name), nullptr, nullptr}));
}

Formula Formula::top() {
  static const Formula instance(std::make_shared<Node>(Node{Conn::Top, "", nullptr, nullptr}));
  return instance;
}

Formula Formula::bot() {
  static const Formula instance(std::make_shared<Node>(Node{Conn::Bot, "", nullptr, nullptr}));
  return instance;
}

Formula Formula::lnot(Formula f) {
  return Formula(std::make_shared<Node>(Node{Conn::Not, "", std::move(f.node_), nullptr}));
}

Formula Formula::land(Formula l, Formula r) {
  return Formula(std::make_shared<Node>(Node{Conn::And, "", std::move(l.node_), std::move(r.node_)}));
}

Formula Formula::lor(Formula l, Formula r) {
  return Formula(std::make_shared<Node>(Node{Conn::Or, "", std::move(l.node_), std::move(r.node_)}));
}

Formula Formula::imp(Formula l, Formula r) {
  return Formula(std::make_shared<Node>(Node{Conn::Imp, "", std::move(l.node_), std::move(r.node_)}));
}

Formula Formula::iff(Formula l, Formula r) {
  return Formula(std::make_shared<Node>(Node{Conn::Iff, "", std::move(l.node_), std::move(r.node_)}));
}

Formula Formula::delta(Formula f) {
  return Formula(std::make_shared<Node>(Node{Conn::Delta, "", std::move(f.node_), nullptr}));
}

Formula Formula::box(Formula f) {
  return Formula(std::make_shared<Node>(Node{Conn::Box, "", std::move(f.node_), nullptr}));
}

const std::string& Formula::atom_name() const {
  if (node_->kind != Conn::Atom) throw std::logic_error("atom_name on non-atom");
  return node_->name;
}

Formula Formula::child() const {
  if (!is_unary(node_->kind)) throw std::logic_error("child on non-unary formula");
  return Formula(node_->a);
}

Formula Formula::left() const {
  if (!is_binary(node_->kind)) throw std::logic_error("left on non-binary formula");
  return Formula(node_->a);
}

Formula Formula::right() const {
  if (!is_binary(node_->kind)) throw std::logic_error("right on non-binary formula");
  return Formula(node_->b);
}

namespace {

bool nodes_equal(const Formula& x, const Formula& y) {
  if (x.kind() != y.kind()) return false;
  switch (x.kind()) {
    case Conn::Atom:
      return x.atom_name() == y.atom_name();
    case Conn::Top:
    case Conn::Bot:
      return true;
    case Conn::Not:
    case Conn::Delta:
    case Conn::Box:
      return nodes_equal(x.child(), y.child());
    default:
      return nodes_equal(x.left(), y.left()) && nodes_equal(x.right(), y.right());
  }
}

}  // namespace

bool Formula::operator==(const Formula& other) const {
  if (node_ == other.node_) return true;
  return nodes_equal(*this, other);
}

int Formula::modal_depth() const {
  switch (kind()) {
    case Conn::Atom:
    case Conn::Top:
    case Conn::Bot:
      return 0;
    case Conn::Not:
      return child().modal_depth();
    case Conn::Delta:
    case Conn::Box:
      return 1 + child().modal_depth();
    default:
      return std::max(left().modal_depth(), right().modal_depth());
  }
}

bool Formula::contains(Conn k) const {
  if (kind() == k) return true;
  switch (kind()) {
    case Conn::Atom:
    case Conn::Top:
    case Conn::Bot:
      return false;
    case Conn::Not:
    case Conn::Delta:
    case Conn::Box:
      return child().contains(k);
    default:
      return left().contains(k) || right().contains(k);
  }
}

namespace {

void collect_atoms(const Formula& f, std::set<std::string>& object_atoms,
                   std::set<std::string>& metas) {
  switch (f.kind()) {
    case Conn::Atom:
      if (is_metavariable_name(f.atom_name())) {
        metas.insert(f.atom_name());
      } else {
        object_atoms.insert(f.atom_name());
      }
      return;
    case Conn::Top:
    case Conn::Bot:
      return;
    case Conn::Not:
    case Conn::Delta:
    case Conn::Box:
      collect_atoms(f.child(), object_atoms, metas);
      return;
    default:
      collect_atoms(f.left(), object_atoms, metas);
      collect_atoms(f.right(), object_atoms, metas);
  }
}

}  // namespace

std::vector<std::string> Formula::atoms() const {
  std::set<std::string> object_atoms, metas;
  collect_atoms(*this, object_atoms, metas);
  return {object_atoms.begin(), object_atoms.end()};
}

std::vector<std::string> Formula::metavariables() const {
  std::set<std::string> object_atoms, metas;
  collect_atoms(*this, object_atoms, metas);
  return {metas.begin(), metas.end()};
}

std::size_t Formula::node_count() const {
  switch (kind()) {
    case Conn::Atom:
    case Conn::Top:
    case Conn::Bot:
      return 1;
    case Conn::Not:
    case Conn::Delta:
    case Conn::Box:
      return 1 + child().node_count();
    default:
      return 1 + left().node_count() + right().node_count();
  }
}

// ---------------------------------------------------------------------------
// Parser.
// ---------------------------------------------------------------------------

namespace {

enum class Tok : unsigned char {
  Atom, Top, Bot, Not, And, Or, Imp, Iff, Delta, Box, LParen, RParen, End,
};

struct Token {
  Tok kind;
  std::string text;  // Atom only
  int column;        // 1-based, code points
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (pos_ < text_.size()) {
      const int col = column_;
      const char ch = text_[pos_];
      if (ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r') {
        advance(1);
        continue;
      }
      switch (ch) {
        case '~': out.push_back({Tok::Not, "", col}); advance(1); continue;
        case '&': out.push_back({Tok::And, "", col}); advance(1); continue;
        case '|': out.push_back({Tok::Or, "", col}); advance(1); continue;
        case '(': out.push_back({Tok::LParen, "", col}); advance(1); continue;
        case ')': out.push_back({Tok::RParen, "", col}); advance(1); continue;
        case 'D': out.push_back({Tok::Delta, "", col}); advance(1); continue;
        case 'B': out.push_back({Tok::Box, "", col}); advance(1); continue;
        case 'T': out.push_back({Tok::Top, "", col}); advance(1); continue;
        case 'F': out.push_back({Tok::Bot, "", col}); advance(1); continue;
        case '-':
          if (rest().substr(0, 2) == "->") {
            out.push_back({Tok::Imp, "", col});
            advance(2);
            continue;
          }
          throw ParseError("expected '->'", col);
        case '<':
          if (rest().substr(0, 3) == "<->") {
            out.push_back({Tok::Iff, "", col});
            advance(3);
            continue;
          }
          throw ParseError("expected '<->'", col);
        default:
          break;
      }
      if (ch >= 'a' && ch <= 'z') {
        std::size_t end = pos_ + 1;
        while (end < text_.size() && is_atom_char(text_[end])) ++end;
        out.push_back({Tok::Atom, std::string(text_.substr(pos_, end - pos_)), col});
        advance(end - pos_);
        continue;
      }
      if (auto alias = match_unicode_alias()) {
        out.push_back({*alias, "", col});
        continue;
      }
      throw ParseError("unexpected character", col);
    }
    out.push_back({Tok::End, "", column_});
    return out;
  }

 private:
  static bool is_atom_char(char ch) {
    return (ch >= 'a' && ch <= 'z') || (ch >= '0' && ch <= '9') || ch == '_';
  }

  std::string_view rest() const { return text_.substr(pos_); }

  // Columns count code points so that error positions stay meaningful on
  // Unicode input.
  void advance(std::size_t bytes) {
    for (std::size_t i = 0; i < bytes && pos_ < text_.size(); ++i, ++pos_) {
      if ((static_cast<unsigned char>(text_[pos_]) & 0xC0) != 0x80) ++column_;
    }
  }

  std::optional<Tok> match_unicode_alias() {
    struct Alias { std::string_view utf8; Tok tok; };
    static constexpr Alias kAliases[] = {
        {"¬", Tok::Not},    // ¬
        {"∧", Tok::And},    // ∧
        {"∨", Tok::Or},     // ∨
        {"→", Tok::Imp},    // →
        {"↔", Tok::Iff},    // ↔
        {"Δ", Tok::Delta},  // Δ
        {"□", Tok::Box},    // □
        {"⊤", Tok::Top},    // ⊤
        {"⊥", Tok::Bot},    // ⊥
    };
    for (const auto& alias : kAliases) {
      if (rest().substr(0, alias.utf8.size()) == alias.utf8) {
        advance(alias.utf8.size());
        return alias.tok;
      }
    }
    return std::nullopt;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int column_ = 1;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  Formula run() {
    Formula f = parse_iff();
    expect(Tok::End, "unexpected trailing input");
    return f;
  }

 private:
  const Token& peek() const { return tokens_[index_]; }

  Token take() { return tokens_[index_++]; }

  void expect(Tok kind, const char* message) {
    if (peek().kind != kind) throw ParseError(message, peek().column);
    ++index_;
  }

  Formula parse_iff() {
    Formula f = parse_imp();
    while (peek().kind == Tok::Iff) {
      take();
      f = Formula::iff(f, parse_imp());
    }
    return f;
  }

  Formula parse_imp() {
    Formula f = parse_or();
    if (peek().kind == Tok::Imp) {
      take();
      return Formula::imp(f, parse_imp());
    }
    return f;
  }

  Formula parse_or() {
    Formula f = parse_and();
    while (peek().kind == Tok::Or) {
      take();
      f = Formula::lor(f, parse_and());
    }
    return f;
  }

  Formula parse_and() {
    Formula f = parse_unary();
    while (peek().kind == Tok::And) {
      take();
      f = Formula::land(f, parse_unary());
    }
    return f;
  }

  Formula parse_unary() {
    switch (peek().kind) {
      case Tok::Not: take(); return Formula::lnot(parse_unary());
      case Tok::Delta: take(); return Formula::delta(parse_unary());
      case Tok::Box: take(); return Formula::box(parse_unary());
      default: return parse_primary();
    }
  }

  Formula parse_primary() {
    const Token tok = take();
    switch (tok.kind) {
      case Tok::Atom: return Formula::atom(tok.text);
      case Tok::Top: return Formula::top();
      case Tok::Bot: return Formula::bot();
      case Tok::LParen: {
        Formula f = parse_iff();
        expect(Tok::RParen, "expected ')'");
        return f;
      }
      case Tok::End: throw ParseError("unexpected end of input", tok.column);
      default: throw ParseError("expected a formula", tok.column);
    }
  }

  std::vector<Token> tokens_;
  std::size_t index_ = 0;
};

}  // namespace

Formula parse(std::string_view text) { return Parser(Lexer(text).run()).run(); }

// ---------------------------------------------------------------------------
// Printer. Precedence mirrors the grammar; parentheses appear only where the
// grammar would otherwise re-associate.
// ---------------------------------------------------------------------------

namespace {

int precedence(Conn k) {
  switch (k) {
    case Conn::Iff: return 1;
    case Conn::Imp: return 2;
    case Conn::Or: return 3;
    case Conn::And: return 4;
    default: return 5;  // unary and primary
  }
}

void print_into(const Formula& f, int min_prec, std::string& out) {
  const int prec = precedence(f.kind());
  const bool parens = prec < min_prec;
  if (parens) out += '(';
  switch (f.kind()) {
    case Conn::Atom: out += f.atom_name(); break;
    case Conn::Top: out += 'T'; break;
    case Conn::Bot: out += 'F'; break;
    case Conn::Not:
      out += '~';
      print_into(f.child(), 5, out);
      break;
    case Conn::Delta:
      out += 'D';
      print_into(f.child(), 5, out);
      break;
    case Conn::Box:
      out += 'B';
      print_into(f.child(), 5, out);
      break;
    case Conn::And:
      print_into(f.left(), 4, out);
      out += " & ";
      print_into(f.right(), 5, out);
      break;
    case Conn::Or:
      print_into(f.left(), 3, out);
      out += " | ";
      print_into(f.right(), 4, out);
      break;
    case Conn::Imp:
      // Right-associative: the left operand needs strictly tighter binding.
      print_into(f.left(), 3, out);
      out += " -> ";
      print_into(f.right(), 2, out);
      break;
    case Conn::Iff:
      print_into(f.left(), 1, out);
      out += " <-> ";
      print_into(f.right(), 2, out);
      break;
  }
  if (parens) out += ')';
}

}  // namespace

std::string to_string(const Formula& f) {
  std::string out;
  print_into(f, 0, out);
  return out;
}

// ---------------------------------------------------------------------------
// Instantiation and the tautology test.
// ---------------------------------------------------------------------------

Formula instantiate(const Formula& schema, const Substitution& subst) {
  switch (schema.kind()) {
    case Conn::Atom: {
      const std::string& name = schema.atom_name();
      if (!is_metavariable_name(name)) return schema;
      auto it = subst.find(name);
      if (it == subst.end()) {
        throw InstantiationError("metavariable '" + name + "' unbound");
      }
      return it->second;
    }
    case Conn::Top:
    case Conn::Bot:
      return schema;
    case Conn::Not:
      return Formula::lnot(instantiate(schema.child(), subst));
    case Conn::Delta:
      return Formula::delta(instantiate(schema.child(), subst));
    case Conn::Box:
      return Formula::box(instantiate(schema.child(), subst));
    case Conn::And:
      return Formula::land(instantiate(schema.left(), subst), instantiate(schema.right(), subst));
    case Conn::Or:
      return Formula::lor(instantiate(schema.left(), subst), instantiate(schema.right(), subst));
    case Conn::Imp:
      return Formula::imp(instantiate(schema.left(), subst), instantiate(schema.right(), subst));
    default:
      return Formula::iff(instantiate(schema.left(), subst), instantiate(schema.right(), subst));
  }
}

namespace {

// Propositional skeleton: every maximal Delta/Box subformula becomes a fresh
// variable, syntactically equal modal subformulas sharing one variable.
struct Skeleton {
  enum class Op : unsigned char { Var, True, False, Not, And, Or, Imp, Iff };
  Op op;
  int var = -1;
  int a = -1, b = -1;
};

class Abstraction {
 public:
  int build(const Formula& f) {
    switch (f.kind()) {
      case Conn::Top: return push({Skeleton::Op::True});
      case Conn::Bot: return push({Skeleton::Op::False});
      case Conn::Atom:
      case Conn::Delta:
      case Conn::Box:
        return push({Skeleton::Op::Var, var_for(f)});
      case Conn::Not: {
        const int a = build(f.child());
        return push({Skeleton::Op::Not, -1, a});
      }
      default: {
        const int a = build(f.left());
        const int b = build(f.right());
        Skeleton::Op op = Skeleton::Op::And;
        if (f.kind() == Conn::Or) op = Skeleton::Op::Or;
        if (f.kind() == Conn::Imp) op = Skeleton::Op::Imp;
        if (f.kind() == Conn::Iff) op = Skeleton::Op::Iff;
        return push({op, -1, a, b});
      }
    }
  }

  bool eval(int root, std::uint32_t assignment) const {
    switch (nodes_[root].op) {
      case Skeleton::Op::Var: return (assignment >> nodes_[root].var) & 1u;
      case Skeleton::Op::True: return true;
      case Skeleton::Op::False: return false;
      case Skeleton::Op::Not: return !eval(nodes_[root].a, assignment);
      case Skeleton::Op::And:
        return eval(nodes_[root].a, assignment) && eval(nodes_[root].b, assignment);
      case Skeleton::Op::Or:
        return eval(nodes_[root].a, assignment) || eval(nodes_[root].b, assignment);
      case Skeleton::Op::Imp:
        return !eval(nodes_[root].a, assignment) || eval(nodes_[root].b, assignment);
      default:
        return eval(nodes_[root].a, assignment) == eval(nodes_[root].b, assignment);
    }
  }

  int var_count() const { return static_cast<int>(vars_.size()); }

 private:
  int var_for(const Formula& f) {
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (vars_[i] == f) return static_cast<int>(i);
    }
    vars_.push_back(f);
    return static_cast<int>(vars_.size()) - 1;
  }

  int push(Skeleton node) {
    nodes_.push_back(node);
    return static_cast<int>(nodes_.size()) - 1;
  }

  std::vector<Formula> vars_;
  std::vector<Skeleton> nodes_;
};

constexpr int kMaxTautologyVars = 24;

}  // namespace

bool is_tautology_instance(const Formula& f) {
  Abstraction abs;
  const int root = abs.build(f);
  const int vars = abs.var_count();
  if (vars > kMaxTautologyVars) {
    throw std::invalid_argument("tautology check limited to " +
                                std::to_string(kMaxTautologyVars) + " distinct variables");
  }
  const std::uint32_t count = 1u << vars;
  for (std::uint32_t assignment = 0; assignment < count; ++assignment) {
    if (!abs.eval(root, assignment)) return false;
  }
  return true;
}

}  // namespace contingent
