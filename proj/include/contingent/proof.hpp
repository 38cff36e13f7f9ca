#ifndef CONTINGENT_PROOF_HPP
#define CONTINGENT_PROOF_HPP

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "contingent/formula.hpp"
#include "contingent/model.hpp"

namespace contingent {

// An axiom schema: a formula over the metavariables phi/psi/chi.
struct Schema {
  std::string name;
  Formula pattern;
};

// Registered schemas:
//   dEqu  Dphi <-> D~phi
//   dM    Dphi -> D(phi | psi) | D(~phi | chi)
//   dC    Dphi & Dpsi -> D(phi & psi)
//   dN    DT
//   sdM   Dphi -> D(phi | psi)
//   dM'   Dphi -> D(phi -> psi) | D(~phi -> chi)
//   dC'   D(psi -> phi) & D(~psi -> phi) -> Dphi
// plus the Box-language schemas M, C, N, Z used for frame correspondence.
const std::vector<Schema>& schema_registry();
const Schema* find_schema(std::string_view name);

enum class SystemStatus {
  Axiomatized,   // sound and complete for its frame class
  Conjectured,   // schema set proposed, completeness open
  SemanticOnly,  // no axiomatization known; derivations are rejected
};

// A Hilbert system: TAUT, MP and RE-Delta are implicit in every system; the
// schema list is what varies. frame_class records the class of frames the
// system is paired with.
struct System {
  std::string name;
  std::vector<std::string> schemas;
  SystemStatus status;
  PropertySet frame_class;

  bool has_schema(std::string_view schema) const;
};

const std::vector<System>& system_registry();
const System* find_system(std::string_view name);

// Deductive-strength arrows between the registered Delta-systems, as
// (weaker, stronger) pairs.
std::vector<std::pair<std::string, std::string>> lattice_edges();

// ---------------------------------------------------------------------------
// Derivations.
// ---------------------------------------------------------------------------

struct Justification {
  enum class Kind { Taut, Axiom, MP, REDelta };
  Kind kind = Kind::Taut;
  std::string schema;       // Axiom
  Substitution subst;       // Axiom
  int from = 0, implication = 0;  // MP cites (from, implication); REDelta uses from
};

struct DerivationLine {
  int index = 0;
  Formula formula;
  Justification just;
};

struct Derivation {
  std::string system;
  std::vector<DerivationLine> lines;
};

struct CheckResult {
  bool ok = false;
  int line = 0;         // offending line index when !ok, 0 for file-level errors
  std::string reason;   // empty when ok
  bool conjectured = false;  // system carries only a conjectured axiomatization

  static CheckResult pass(bool conjectured_) { return {true, 0, "", conjectured_}; }
  static CheckResult fail(int line_, std::string reason_) {
    return {false, line_, std::move(reason_), false};
  }
};

// Checks every line in order against exactly four justification forms:
// TAUT (tautology instance), Axiom (exact schema instance in the system's
// set), MP(i, j) with line j == (line i -> this line), and RE-Delta(i) with
// line i == (a <-> b) and this line == (Da <-> Db). Citations must point
// strictly backwards. The checker is the trusted kernel; nothing here
// normalizes formulas.
CheckResult check_derivation(const Derivation& d);

// ---------------------------------------------------------------------------
// Derivation text format, line-oriented:
//
//   system: R-delta
//   1. Dp -> Dp                       taut
//   2. (Dp & Dq) -> D(p&q)            axiom dC phi=p; psi=q
//   3. Dq                             mp 1 2
//   4. D(p|q) <-> Dq                  re-delta 3
//
// The formula and the justification are separated by two or more spaces (or
// a tab). Lines starting with `#` are comments.
// ---------------------------------------------------------------------------

struct DerivationFormatError : std::runtime_error {
  DerivationFormatError(const std::string& what, int line_)
      : std::runtime_error(what), line(line_) {}
  int line;  // 1-based file line
};

Derivation parse_derivation(std::string_view text);
std::string to_text(const Derivation& d);

}  // namespace contingent

#endif  // CONTINGENT_PROOF_HPP
