#ifndef CONTINGENT_FORMULA_HPP
#define CONTINGENT_FORMULA_HPP

#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace contingent {

// Connectives of the modal languages handled here. `Delta` is the
// noncontingency operator, `Box` plain necessity. The full Boolean set is
// kept primitive (no desugaring), so formulas print back exactly as written.
enum class Conn : unsigned char {
  Atom,
  Top,
  Bot,
  Not,
  And,
  Or,
  Imp,
  Iff,
  Delta,
  Box,
};

// Immutable formula tree with cheap value semantics (shared subtrees).
// Equality is exact syntactic equality; nothing is normalized.
class Formula {
 public:
  Formula() : Formula(top()) {}

  static Formula atom(std::string name);
  static Formula top();
  static Formula bot();
  static Formula lnot(Formula f);
  static Formula land(Formula l, Formula r);
  static Formula lor(Formula l, Formula r);
  static Formula imp(Formula l, Formula r);
  static Formula iff(Formula l, Formula r);
  static Formula delta(Formula f);
  static Formula box(Formula f);

  Conn kind() const { return node_->kind; }
  bool is(Conn k) const { return node_->kind == k; }

  // Atom only.
  const std::string& atom_name() const;
  // Unary connectives (Not/Delta/Box) only.
  Formula child() const;
  // Binary connectives only.
  Formula left() const;
  Formula right() const;

  bool operator==(const Formula& other) const;
  bool operator!=(const Formula& other) const { return !(*this == other); }

  // Max nesting of Delta/Box; 0 for purely Boolean formulas.
  int modal_depth() const;
  bool contains(Conn k) const;

  // Sorted names of the atoms occurring in the formula, metavariables
  // excluded.
  std::vector<std::string> atoms() const;

  // Schema metavariables are the reserved atom names phi/psi/chi. Object
  // formulas must not use them.
  std::vector<std::string> metavariables() const;
  bool has_metavariables() const { return !metavariables().empty(); }

  std::size_t node_count() const;

 private:
  struct Node {
    Conn kind;
    std::string name;                    // Atom only
    std::shared_ptr<const Node> a, b;    // children
  };

  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  std::shared_ptr<const Node> node_;
};

bool is_metavariable_name(std::string_view name);
bool is_atom_name(std::string_view name);

// ---------------------------------------------------------------------------
// Concrete syntax.
//
// ASCII grammar (Unicode aliases accepted on input only):
//
//   formula := iff
//   iff     := imp ("<->" imp)*            left-associative
//   imp     := or ("->" imp)?              right-associative
//   or      := and ("|" and)*              left-associative
//   and     := unary ("&" unary)*          left-associative
//   unary   := ("~" | "D" | "B") unary | primary
//   primary := atom | "T" | "F" | "(" formula ")"
//   atom    := [a-z][a-z0-9_]*
//
// Aliases: ¬ ~, ∧ &, ∨ |, → ->, ↔ <->, Δ D, □ B, ⊤ T, ⊥ F.
// ---------------------------------------------------------------------------

struct ParseError : std::runtime_error {
  ParseError(const std::string& what, int column_)
      : std::runtime_error(what), column(column_) {}
  int column;  // 1-based, in code points
};

Formula parse(std::string_view text);

// Canonical rendering; parse(to_string(f)) == f for every formula.
std::string to_string(const Formula& f);

// ---------------------------------------------------------------------------
// Schema instantiation.
// ---------------------------------------------------------------------------

// Bindings from metavariable name (phi/psi/chi) to replacement formula.
using Substitution = std::map<std::string, Formula>;

struct InstantiationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Simultaneous replacement of every metavariable in `schema` by its binding.
// Every metavariable occurring in the schema must be bound; the result
// contains none.
Formula instantiate(const Formula& schema, const Substitution& subst);

// True iff the formula, with each maximal Delta/Box subformula abstracted to
// a fresh atom, is true under every truth assignment. This is the "all
// instances of propositional tautologies" test of Hilbert systems.
bool is_tautology_instance(const Formula& f);

}  // namespace contingent

#endif  // CONTINGENT_FORMULA_HPP
