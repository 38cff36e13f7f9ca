#include "contingent/proof.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace contingent {

const std::vector<Schema>& schema_registry() {
  static const std::vector<Schema> registry = [] {
    std::vector<Schema> out;
    const auto add = [&out](const char* name, const char* pattern) {
      out.push_back(Schema{name, parse(pattern)});
    };
    add("dEqu", "Dphi <-> D~phi");
    add("dM", "Dphi -> D(phi | psi) | D(~phi | chi)");
    add("dC", "Dphi & Dpsi -> D(phi & psi)");
    add("dN", "DT");
    add("sdM", "Dphi -> D(phi | psi)");
    add("dM'", "Dphi -> D(phi -> psi) | D(~phi -> chi)");
    add("dC'", "D(psi -> phi) & D(~psi -> phi) -> Dphi");
    add("M", "B(phi & psi) -> Bphi & Bpsi");
    add("C", "Bphi & Bpsi -> B(phi & psi)");
    add("N", "BT");
    add("Z", "Bphi -> B~phi");
    return out;
  }();
  return registry;
}

const Schema* find_schema(std::string_view name) {
  for (const auto& schema : schema_registry()) {
    if (schema.name == name) return &schema;
  }
  return nullptr;
}

bool System::has_schema(std::string_view schema) const {
  return std::find(schemas.begin(), schemas.end(), schema) != schemas.end();
}

const std::vector<System>& system_registry() {
  static const std::vector<System> registry = [] {
    using Status = SystemStatus;
    const auto props = [](const char* flags) { return PropertySet::from_flags(flags); };
    std::vector<System> out = {
        {"E-delta", {"dEqu"}, Status::Axiomatized, props("")},
        {"M-delta", {"dEqu", "dM"}, Status::Axiomatized, props("m")},
        {"ECZ-delta", {"dEqu", "dC"}, Status::Axiomatized, props("cz")},
        {"EN-delta", {"dEqu", "dN"}, Status::Axiomatized, props("n")},
        {"R-delta", {"dEqu", "dM", "dC"}, Status::Axiomatized, props("mc")},
        {"EMN-delta", {"dEqu", "dM", "dN"}, Status::Axiomatized, props("mn")},
        {"ECNZ-delta", {"dEqu", "dC", "dN"}, Status::Axiomatized, props("cnz")},
        {"K-delta", {"dEqu", "dM", "dC", "dN"}, Status::Axiomatized, props("mcn")},
        // Third level of the cube: swapping dM for sdM is a conjectured
        // axiomatization, so verdicts in these systems are flagged.
        {"MZ-delta", {"dEqu", "sdM"}, Status::Conjectured, props("mz")},
        {"RZ-delta", {"dEqu", "sdM", "dC"}, Status::Conjectured, props("mcz")},
        {"EMNZ-delta", {"dEqu", "sdM", "dN"}, Status::Conjectured, props("mnz")},
        {"KZ-delta", {"dEqu", "sdM", "dC", "dN"}, Status::Conjectured, props("mcnz")},
        // No axiomatization is known for these two classes.
        {"EC-delta", {}, Status::SemanticOnly, props("c")},
        {"ECN-delta", {}, Status::SemanticOnly, props("cn")},
        // Alternative axiomatizations of R-delta and M-delta.
        {"M-delta+dC'", {"dEqu", "dM", "dC'"}, Status::Axiomatized, props("mc")},
        {"E-delta+dM'", {"dEqu", "dM'"}, Status::Axiomatized, props("m")},
    };
    return out;
  }();
  return registry;
}

const System* find_system(std::string_view name) {
  for (const auto& system : system_registry()) {
    if (system.name == name) return &system;
  }
  return nullptr;
}

std::vector<std::pair<std::string, std::string>> lattice_edges() {
  // The two cubes of Delta-systems; an edge means the target is deductively
  // stronger. E-delta covers the z-less and z-full bottom corners at once
  // (E-delta = EZ-delta), likewise EN-delta = ENZ-delta.
  return {
      {"E-delta", "EC-delta"},
      {"E-delta", "EN-delta"},
      {"E-delta", "M-delta"},
      {"EC-delta", "ECN-delta"},
      {"EC-delta", "ECZ-delta"},
      {"ECN-delta", "ECNZ-delta"},
      {"ECNZ-delta", "K-delta"},
      {"ECZ-delta", "ECNZ-delta"},
      {"ECZ-delta", "R-delta"},
      {"EMN-delta", "EMNZ-delta"},
      {"EMN-delta", "K-delta"},
      {"EMNZ-delta", "KZ-delta"},
      {"EN-delta", "ECN-delta"},
      {"EN-delta", "EMN-delta"},
      {"K-delta", "KZ-delta"},
      {"M-delta", "EMN-delta"},
      {"M-delta", "MZ-delta"},
      {"M-delta", "R-delta"},
      {"MZ-delta", "EMNZ-delta"},
      {"MZ-delta", "RZ-delta"},
      {"R-delta", "K-delta"},
      {"R-delta", "RZ-delta"},
      {"RZ-delta", "KZ-delta"},
  };
}

// ---------------------------------------------------------------------------
// Checker kernel.
// ---------------------------------------------------------------------------

CheckResult check_derivation(const Derivation& d) {
  const System* system = find_system(d.system);
  if (!system) return CheckResult::fail(0, "unknown system '" + d.system + "'");
  if (system->status == SystemStatus::SemanticOnly) {
    return CheckResult::fail(0, "system '" + d.system +
                                    "' has no axiomatization; derivations cannot be checked");
  }

  std::map<int, const Formula*> proved;
  int previous_index = 0;

  for (const auto& line : d.lines) {
    if (line.index <= previous_index) {
      return CheckResult::fail(line.index, "line indices must be strictly increasing");
    }
    previous_index = line.index;
    if (line.formula.has_metavariables()) {
      return CheckResult::fail(line.index, "line formula contains metavariables");
    }

    const auto cited = [&](int i) -> const Formula* {
      auto it = proved.find(i);
      return it == proved.end() ? nullptr : it->second;
    };

    switch (line.just.kind) {
      case Justification::Kind::Taut:
        if (!is_tautology_instance(line.formula)) {
          return CheckResult::fail(line.index, "not a tautology instance");
        }
        break;

      case Justification::Kind::Axiom: {
        const Schema* schema = find_schema(line.just.schema);
        if (!schema) {
          return CheckResult::fail(line.index, "unknown schema '" + line.just.schema + "'");
        }
        if (!system->has_schema(schema->name)) {
          return CheckResult::fail(line.index, "schema '" + schema->name + "' is not in system '" +
                                                   system->name + "'");
        }
        Formula instance = Formula::top();
        try {
          instance = instantiate(schema->pattern, line.just.subst);
        } catch (const InstantiationError& err) {
          return CheckResult::fail(line.index, err.what());
        }
        if (!(instance == line.formula)) {
          return CheckResult::fail(line.index, "substitution mismatch: expected " +
                                                   to_string(instance));
        }
        break;
      }

      case Justification::Kind::MP: {
        const int i = line.just.from;
        const int j = line.just.implication;
        if (i >= line.index || j >= line.index) {
          return CheckResult::fail(line.index, "forward reference");
        }
        const Formula* antecedent = cited(i);
        const Formula* implication = cited(j);
        if (!antecedent || !implication) {
          return CheckResult::fail(line.index, "cites a missing line");
        }
        const Formula expected = Formula::imp(*antecedent, line.formula);
        if (!(*implication == expected)) {
          return CheckResult::fail(line.index,
                                   "rule shape mismatch: line " + std::to_string(j) +
                                       " is not (line " + std::to_string(i) + " -> this line)");
        }
        break;
      }

      case Justification::Kind::REDelta: {
        const int i = line.just.from;
        if (i >= line.index) return CheckResult::fail(line.index, "forward reference");
        const Formula* premise = cited(i);
        if (!premise) return CheckResult::fail(line.index, "cites a missing line");
        if (!premise->is(Conn::Iff)) {
          return CheckResult::fail(line.index, "rule shape mismatch: cited line is not a " +
                                                   std::string("biconditional"));
        }
        const Formula expected =
            Formula::iff(Formula::delta(premise->left()), Formula::delta(premise->right()));
        if (!(line.formula == expected)) {
          return CheckResult::fail(line.index,
                                   "rule shape mismatch: expected " + to_string(expected));
        }
        break;
      }
    }

    proved[line.index] = &line.formula;
  }

  return CheckResult::pass(system->status == SystemStatus::Conjectured);
}

// ---------------------------------------------------------------------------
// Text format.
// ---------------------------------------------------------------------------

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string> split_ws(std::string_view text) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    const std::size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i > start) out.emplace_back(text.substr(start, i - start));
  }
  return out;
}

int parse_line_ref(const std::string& token, int file_line) {
  for (char ch : token) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) {
      throw DerivationFormatError("expected a line number, got '" + token + "'", file_line);
    }
  }
  if (token.empty() || token.size() > 6) {
    throw DerivationFormatError("bad line number '" + token + "'", file_line);
  }
  return std::stoi(token);
}

Formula parse_object_formula(std::string_view text, int file_line) {
  Formula f = Formula::top();
  try {
    f = parse(text);
  } catch (const ParseError& err) {
    throw DerivationFormatError(
        "formula error at column " + std::to_string(err.column) + ": " + err.what(), file_line);
  }
  if (f.has_metavariables()) {
    throw DerivationFormatError("phi/psi/chi are reserved for schemas", file_line);
  }
  return f;
}

Justification parse_justification(std::string_view text, int file_line) {
  const std::vector<std::string> tokens = split_ws(text);
  if (tokens.empty()) throw DerivationFormatError("missing justification", file_line);
  Justification just;
  if (tokens[0] == "taut") {
    if (tokens.size() != 1) throw DerivationFormatError("'taut' takes no arguments", file_line);
    just.kind = Justification::Kind::Taut;
    return just;
  }
  if (tokens[0] == "mp") {
    if (tokens.size() != 3) throw DerivationFormatError("'mp' takes two line numbers", file_line);
    just.kind = Justification::Kind::MP;
    just.from = parse_line_ref(tokens[1], file_line);
    just.implication = parse_line_ref(tokens[2], file_line);
    return just;
  }
  if (tokens[0] == "re-delta") {
    if (tokens.size() != 2) {
      throw DerivationFormatError("'re-delta' takes one line number", file_line);
    }
    just.kind = Justification::Kind::REDelta;
    just.from = parse_line_ref(tokens[1], file_line);
    return just;
  }
  if (tokens[0] == "axiom") {
    if (tokens.size() < 2) throw DerivationFormatError("'axiom' needs a schema name", file_line);
    just.kind = Justification::Kind::Axiom;
    just.schema = tokens[1];
    // Everything after the schema name is a ;-separated binding list.
    std::size_t rest_pos = text.find(tokens[1]);
    rest_pos += tokens[1].size();
    std::string_view rest = trim(text.substr(rest_pos));
    while (!rest.empty()) {
      const std::size_t semi = rest.find(';');
      std::string_view binding = trim(rest.substr(0, semi));
      rest = (semi == std::string_view::npos) ? std::string_view{} : trim(rest.substr(semi + 1));
      if (binding.empty()) continue;
      const std::size_t eq = binding.find('=');
      if (eq == std::string_view::npos) {
        throw DerivationFormatError("expected 'name=formula' binding", file_line);
      }
      const std::string name(trim(binding.substr(0, eq)));
      if (!is_metavariable_name(name)) {
        throw DerivationFormatError("'" + name + "' is not a metavariable", file_line);
      }
      if (just.subst.count(name)) {
        throw DerivationFormatError("duplicate binding for '" + name + "'", file_line);
      }
      just.subst.emplace(name, parse_object_formula(trim(binding.substr(eq + 1)), file_line));
    }
    return just;
  }
  throw DerivationFormatError("unknown justification '" + tokens[0] + "'", file_line);
}

// The formula and the justification are separated by a tab or >= 2 spaces.
std::pair<std::string_view, std::string_view> split_formula_just(std::string_view text,
                                                                 int file_line) {
  for (std::size_t i = 0; i + 1 < text.size(); ++i) {
    if (text[i] == '\t' || (text[i] == ' ' && text[i + 1] == ' ') ||
        (text[i] == ' ' && text[i + 1] == '\t')) {
      return {trim(text.substr(0, i)), trim(text.substr(i + 1))};
    }
  }
  throw DerivationFormatError("expected '<formula>  <justification>' (two-space separator)",
                              file_line);
}

}  // namespace

Derivation parse_derivation(std::string_view text) {
  Derivation d;
  bool have_system = false;
  int file_line = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos ? eol : eol - pos);
    ++file_line;
    pos = (eol == std::string_view::npos) ? text.size() + 1 : eol + 1;
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;

    if (!have_system) {
      if (line.substr(0, 7) != "system:") {
        throw DerivationFormatError("expected 'system: <name>' first", file_line);
      }
      d.system = std::string(trim(line.substr(7)));
      if (d.system.empty()) throw DerivationFormatError("missing system name", file_line);
      have_system = true;
      continue;
    }

    std::size_t dot = 0;
    while (dot < line.size() && std::isdigit(static_cast<unsigned char>(line[dot]))) ++dot;
    if (dot == 0 || dot >= line.size() || line[dot] != '.') {
      throw DerivationFormatError("expected '<index>. <formula>  <justification>'", file_line);
    }
    DerivationLine entry;
    entry.index = std::stoi(std::string(line.substr(0, dot)));
    const auto [formula_text, just_text] = split_formula_just(trim(line.substr(dot + 1)), file_line);
    entry.formula = parse_object_formula(formula_text, file_line);
    entry.just = parse_justification(just_text, file_line);
    d.lines.push_back(std::move(entry));
  }
  if (!have_system) throw DerivationFormatError("empty derivation file", file_line);
  if (d.lines.empty()) throw DerivationFormatError("no derivation lines", file_line);
  return d;
}

std::string to_text(const Derivation& d) {
  std::ostringstream out;
  out << "system: " << d.system << '\n';
  for (const auto& line : d.lines) {
    out << line.index << ". " << to_string(line.formula) << "  ";
    switch (line.just.kind) {
      case Justification::Kind::Taut:
        out << "taut";
        break;
      case Justification::Kind::Axiom: {
        out << "axiom " << line.just.schema;
        bool first = true;
        for (const char* name : {"phi", "psi", "chi"}) {
          auto it = line.just.subst.find(name);
          if (it == line.just.subst.end()) continue;
          out << (first ? " " : "; ") << name << '=' << to_string(it->second);
          first = false;
        }
        break;
      }
      case Justification::Kind::MP:
        out << "mp " << line.just.from << ' ' << line.just.implication;
        break;
      case Justification::Kind::REDelta:
        out << "re-delta " << line.just.from;
        break;
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace contingent
