#include "contingent/model.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace contingent {

PropertySet PropertySet::from_flags(std::string_view flags) {
  PropertySet p;
  if (flags == "none" || flags == "all") return p;
  for (char ch : flags) {
    switch (ch) {
      case 'm': p.m = true; break;
      case 'c': p.c = true; break;
      case 'n': p.n = true; break;
      case 'z': p.z = true; break;
      default:
        throw std::invalid_argument(std::string("unknown property flag '") + ch + "'");
    }
  }
  return p;
}

std::string PropertySet::flags() const {
  std::string out;
  if (m) out += 'm';
  if (c) out += 'c';
  if (n) out += 'n';
  if (z) out += 'z';
  return out;
}

Frame::Frame(std::vector<std::string> states, std::vector<std::vector<StateSet>> neighborhoods)
    : states_(std::move(states)), nbhd_(std::move(neighborhoods)) {
  if (states_.empty()) throw std::invalid_argument("frame needs at least one state");
  if (states_.size() > kMaxStates) {
    throw BoundExceeded("frame exceeds " + std::to_string(kMaxStates) + " states");
  }
  for (const auto& name : states_) {
    if (!is_atom_name(name)) throw std::invalid_argument("invalid state name: '" + name + "'");
  }
  for (std::size_t i = 0; i < states_.size(); ++i) {
    for (std::size_t j = i + 1; j < states_.size(); ++j) {
      if (states_[i] == states_[j]) {
        throw std::invalid_argument("duplicate state name: '" + states_[i] + "'");
      }
    }
  }
  if (nbhd_.size() != states_.size()) {
    throw std::invalid_argument("one neighborhood collection per state required");
  }
  const StateSet full = full_set();
  for (auto& collection : nbhd_) {
    for (StateSet x : collection) {
      if ((x & ~full) != 0) throw std::invalid_argument("neighborhood not a subset of the states");
    }
    std::sort(collection.begin(), collection.end());
    collection.erase(std::unique(collection.begin(), collection.end()), collection.end());
  }
}

std::optional<int> Frame::state_index(std::string_view name) const {
  for (std::size_t i = 0; i < states_.size(); ++i) {
    if (states_[i] == name) return static_cast<int>(i);
  }
  return std::nullopt;
}

bool Frame::in_neighborhoods(int state, StateSet x) const {
  const auto& collection = nbhd_[state];
  return std::binary_search(collection.begin(), collection.end(), x);
}

Model::Model(Frame frame, std::map<std::string, StateSet> valuation)
    : frame_(std::move(frame)), valuation_(std::move(valuation)) {
  const StateSet full = frame_.full_set();
  for (const auto& [atom, set] : valuation_) {
    if (!is_atom_name(atom) || is_metavariable_name(atom)) {
      throw std::invalid_argument("invalid atom in valuation: '" + atom + "'");
    }
    if ((set & ~full) != 0) throw std::invalid_argument("valuation not a subset of the states");
  }
}

StateSet Model::value_of(std::string_view atom) const {
  auto it = valuation_.find(std::string(atom));
  return it == valuation_.end() ? 0 : it->second;
}

StateSet truth_set(const Model& m, const Formula& f) {
  const Frame& frame = m.frame();
  const StateSet full = frame.full_set();
  switch (f.kind()) {
    case Conn::Atom:
      if (is_metavariable_name(f.atom_name())) {
        throw std::invalid_argument("formula contains metavariable '" + f.atom_name() + "'");
      }
      return m.value_of(f.atom_name());
    case Conn::Top:
      return full;
    case Conn::Bot:
      return 0;
    case Conn::Not:
      return full & ~truth_set(m, f.child());
    case Conn::And:
      return truth_set(m, f.left()) & truth_set(m, f.right());
    case Conn::Or:
      return truth_set(m, f.left()) | truth_set(m, f.right());
    case Conn::Imp:
      return (full & ~truth_set(m, f.left())) | truth_set(m, f.right());
    case Conn::Iff: {
      const StateSet l = truth_set(m, f.left());
      const StateSet r = truth_set(m, f.right());
      return full & ~(l ^ r);
    }
    case Conn::Delta: {
      const StateSet t = truth_set(m, f.child());
      StateSet out = 0;
      for (int s = 0; s < frame.size(); ++s) {
        if (frame.in_neighborhoods(s, t) || frame.in_neighborhoods(s, full & ~t)) {
          out |= 1u << s;
        }
      }
      return out;
    }
    case Conn::Box: {
      const StateSet t = truth_set(m, f.child());
      StateSet out = 0;
      for (int s = 0; s < frame.size(); ++s) {
        if (frame.in_neighborhoods(s, t)) out |= 1u << s;
      }
      return out;
    }
  }
  return 0;  // unreachable
}

bool eval(const Model& m, int state, const Formula& f) {
  if (state < 0 || state >= m.frame().size()) throw UnknownState("state index out of range");
  return (truth_set(m, f) >> state) & 1u;
}

bool eval(const Model& m, std::string_view state, const Formula& f) {
  const auto index = m.frame().state_index(state);
  if (!index) throw UnknownState("unknown state '" + std::string(state) + "'");
  return eval(m, *index, f);
}

bool check_property(const Frame& frame, PropertySet props) {
  const StateSet full = frame.full_set();
  for (int s = 0; s < frame.size(); ++s) {
    const auto& collection = frame.neighborhoods(s);
    if (props.n && !frame.in_neighborhoods(s, full)) return false;
    if (props.z) {
      for (StateSet x : collection) {
        if (!frame.in_neighborhoods(s, full & ~x)) return false;
      }
    }
    if (props.m) {
      // Closure under adding one state at a time implies full superset
      // closure.
      for (StateSet x : collection) {
        for (int b = 0; b < frame.size(); ++b) {
          const StateSet y = x | (1u << b);
          if (y != x && !frame.in_neighborhoods(s, y)) return false;
        }
      }
    }
    if (props.c) {
      for (StateSet x : collection) {
        for (StateSet y : collection) {
          if (!frame.in_neighborhoods(s, x & y)) return false;
        }
      }
    }
  }
  return true;
}

namespace {

constexpr std::uint64_t kMaxValuationAssignments = 1ull << 24;

}  // namespace

bool is_valid_in_frame(const Frame& frame, const Formula& f) {
  if (f.has_metavariables()) {
    throw std::invalid_argument("formula contains metavariables");
  }
  const std::vector<std::string> atoms = f.atoms();
  const std::uint64_t per_atom = 1ull << frame.size();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    total *= per_atom;
    if (total > kMaxValuationAssignments) {
      throw BoundExceeded("too many valuations to check exhaustively");
    }
  }
  const StateSet full = frame.full_set();
  std::map<std::string, StateSet> valuation;
  for (std::uint64_t index = 0; index < total; ++index) {
    std::uint64_t rest = index;
    // Last atom varies fastest.
    for (auto it = atoms.rbegin(); it != atoms.rend(); ++it) {
      valuation[*it] = static_cast<StateSet>(rest % per_atom);
      rest /= per_atom;
    }
    const Model m(frame, valuation);
    if (truth_set(m, f) != full) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Text format.
// ---------------------------------------------------------------------------

namespace {

std::vector<std::string> split_ws(std::string_view text) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i > start) out.emplace_back(text.substr(start, i - start));
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

struct RawLine {
  int number;
  std::string head;     // before the colon, e.g. "states", "N s", "V p"
  std::string payload;  // after the colon
};

std::vector<RawLine> raw_lines(std::string_view text) {
  std::vector<RawLine> out;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos ? eol : eol - pos);
    ++number;
    pos = (eol == std::string_view::npos) ? text.size() + 1 : eol + 1;
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    const std::size_t colon = line.find(':');
    if (colon == std::string_view::npos) {
      throw ModelFormatError("expected 'head: payload'", number);
    }
    out.push_back({number, std::string(trim(line.substr(0, colon))),
                   std::string(trim(line.substr(colon + 1)))});
  }
  return out;
}

StateSet parse_state_list(const Frame& frame, std::string_view payload, int line) {
  StateSet set = 0;
  for (const auto& name : split_ws(payload)) {
    const auto index = frame.state_index(name);
    if (!index) throw ModelFormatError("unknown state '" + name + "'", line);
    set |= 1u << *index;
  }
  return set;
}

std::vector<StateSet> parse_subset_list(const Frame& frame, std::string_view payload, int line) {
  std::vector<StateSet> out;
  std::size_t i = 0;
  while (i < payload.size()) {
    if (std::isspace(static_cast<unsigned char>(payload[i]))) {
      ++i;
      continue;
    }
    if (payload[i] != '{') throw ModelFormatError("expected '{'", line);
    const std::size_t close = payload.find('}', i);
    if (close == std::string_view::npos) throw ModelFormatError("expected '}'", line);
    out.push_back(parse_state_list(frame, payload.substr(i + 1, close - i - 1), line));
    i = close + 1;
  }
  return out;
}

}  // namespace

Model parse_model(std::string_view text) {
  const std::vector<RawLine> lines = raw_lines(text);

  const RawLine* states_line = nullptr;
  for (const auto& line : lines) {
    if (line.head == "states") {
      if (states_line) throw ModelFormatError("duplicate 'states' line", line.number);
      states_line = &line;
    }
  }
  if (!states_line) throw ModelFormatError("missing 'states' line", lines.empty() ? 1 : lines.back().number);

  const std::vector<std::string> names = split_ws(states_line->payload);
  if (names.empty()) throw ModelFormatError("empty state list", states_line->number);
  std::vector<std::vector<StateSet>> empty_nbhd(names.size());
  Frame frame(names, std::move(empty_nbhd));

  std::vector<std::vector<StateSet>> nbhd(names.size());
  std::vector<bool> seen_nbhd(names.size(), false);
  std::map<std::string, StateSet> valuation;

  for (const auto& line : lines) {
    if (&line == states_line) continue;
    const std::vector<std::string> head = split_ws(line.head);
    if (head.size() == 2 && head[0] == "N") {
      const auto index = frame.state_index(head[1]);
      if (!index) throw ModelFormatError("unknown state '" + head[1] + "'", line.number);
      if (seen_nbhd[*index]) {
        throw ModelFormatError("duplicate 'N " + head[1] + "' line", line.number);
      }
      seen_nbhd[*index] = true;
      nbhd[*index] = parse_subset_list(frame, line.payload, line.number);
    } else if (head.size() == 2 && head[0] == "V") {
      if (!is_atom_name(head[1]) || is_metavariable_name(head[1])) {
        throw ModelFormatError("invalid atom name '" + head[1] + "'", line.number);
      }
      if (valuation.count(head[1])) {
        throw ModelFormatError("duplicate 'V " + head[1] + "' line", line.number);
      }
      valuation[head[1]] = parse_state_list(frame, line.payload, line.number);
    } else {
      throw ModelFormatError("unrecognized line '" + line.head + ": ...'", line.number);
    }
  }

  return Model(Frame(names, std::move(nbhd)), std::move(valuation));
}

std::string state_set_to_string(const Frame& frame, StateSet set) {
  std::string out = "{";
  bool first = true;
  for (int s = 0; s < frame.size(); ++s) {
    if ((set >> s) & 1u) {
      if (!first) out += ' ';
      out += frame.state_name(s);
      first = false;
    }
  }
  out += '}';
  return out;
}

std::string to_text(const Model& m) {
  const Frame& frame = m.frame();
  std::ostringstream out;
  out << "states:";
  for (const auto& name : frame.states()) out << ' ' << name;
  out << '\n';
  for (int s = 0; s < frame.size(); ++s) {
    out << "N " << frame.state_name(s) << ':';
    for (StateSet x : frame.neighborhoods(s)) out << ' ' << state_set_to_string(frame, x);
    out << '\n';
  }
  for (const auto& [atom, set] : m.valuation()) {
    if (set == 0) continue;
    out << "V " << atom << ':';
    for (int s = 0; s < frame.size(); ++s) {
      if ((set >> s) & 1u) out << ' ' << frame.state_name(s);
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace contingent
