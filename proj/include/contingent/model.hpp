#ifndef CONTINGENT_MODEL_HPP
#define CONTINGENT_MODEL_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "contingent/formula.hpp"

namespace contingent {

// A set of states, one bit per state in frame order. Frames are capped at
// kMaxStates so a subset always fits a 32-bit mask.
using StateSet = std::uint32_t;

constexpr int kMaxStates = 30;

struct BoundExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UnknownState : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Closure flags a neighborhood collection may be required to satisfy, per
// state: (m) closed under supersets, (c) closed under binary intersections,
// (n) contains the full state set, (z) closed under complements.
struct PropertySet {
  bool m = false;
  bool c = false;
  bool n = false;
  bool z = false;

  bool operator==(const PropertySet&) const = default;

  bool none() const { return !(m || c || n || z); }
  bool quasi_filter() const { return m && c; }
  bool filter() const { return m && c && n; }

  // "mcz" style flag strings; "" or "none" for the empty set.
  static PropertySet from_flags(std::string_view flags);
  std::string flags() const;
};

// Finite neighborhood frame: an ordered list of named states plus, for each
// state, a set of state subsets. Immutable after construction.
class Frame {
 public:
  Frame(std::vector<std::string> states, std::vector<std::vector<StateSet>> neighborhoods);

  int size() const { return static_cast<int>(states_.size()); }
  const std::vector<std::string>& states() const { return states_; }
  const std::string& state_name(int i) const { return states_[i]; }
  std::optional<int> state_index(std::string_view name) const;

  // Sorted, duplicate-free list of subsets in N(state).
  const std::vector<StateSet>& neighborhoods(int state) const { return nbhd_[state]; }
  bool in_neighborhoods(int state, StateSet x) const;

  StateSet full_set() const { return (size() == 32) ? ~0u : ((1u << size()) - 1u); }

  bool operator==(const Frame&) const = default;

 private:
  std::vector<std::string> states_;
  std::vector<std::vector<StateSet>> nbhd_;
};

// Frame plus a valuation; atoms missing from the valuation denote the empty
// set.
class Model {
 public:
  explicit Model(Frame frame, std::map<std::string, StateSet> valuation = {});

  const Frame& frame() const { return frame_; }
  const std::map<std::string, StateSet>& valuation() const { return valuation_; }
  StateSet value_of(std::string_view atom) const;

  bool operator==(const Model&) const = default;

 private:
  Frame frame_;
  std::map<std::string, StateSet> valuation_;
};

// Truth set of a formula: the states where it holds. The noncontingency
// clause puts s in the result iff the subformula's truth set or its
// complement is a neighborhood of s; the necessity clause requires the truth
// set itself. Rejects formulas containing metavariables.
StateSet truth_set(const Model& m, const Formula& f);

bool eval(const Model& m, int state, const Formula& f);
bool eval(const Model& m, std::string_view state, const Formula& f);

bool check_property(const Frame& frame, PropertySet props);

// Validity in a frame: true at every state under every valuation of the
// atoms occurring in the formula. Other atoms cannot affect truth, so the
// check stays finite: (2^n)^k assignments.
bool is_valid_in_frame(const Frame& frame, const Formula& f);

// A falsifying model/state pair, as returned by class-level search.
struct Countermodel {
  Model model;
  int state;
};

enum class SearchModeKind { Exhaustive, Sample };

struct SearchMode {
  SearchModeKind kind = SearchModeKind::Exhaustive;
  std::uint64_t samples = 0;  // Sample only
  std::uint64_t seed = 0;     // Sample only

  static SearchMode exhaustive() { return {SearchModeKind::Exhaustive, 0, 0}; }
  static SearchMode sample(std::uint64_t samples, std::uint64_t seed) {
    return {SearchModeKind::Sample, samples, seed};
  }
};

// Bounded verdict: either no countermodel up to the size bound, or the first
// countermodel in enumeration (resp. sampling) order. Never a claim of
// unbounded validity.
struct ClassVerdict {
  bool valid_up_to_bound = true;
  std::optional<Countermodel> witness;
  std::uint64_t frames_examined = 0;
};

// Searches frames of size <= max_size satisfying the flagged properties.
// Exhaustive mode requires max_size <= 3; sample mode requires
// max_size <= 5 and draws frames of size exactly max_size, repairing random
// neighborhoods to the requested closure properties. Any returned witness
// has been re-verified against check_property and eval.
ClassVerdict is_valid_on_class(PropertySet props, const Formula& f, int max_size,
                               const SearchMode& mode);

// ---------------------------------------------------------------------------
// Model text format, one item per line, order-insensitive:
//
//   states: s t u
//   N s: {t u} {s t u}
//   N t:
//   V p: s
//
// Subsets are brace-enclosed and space-separated; `{}` is the empty set; an
// `N` line with nothing after the colon (or no `N` line at all) is an empty
// collection; omitted `V` lines denote the empty valuation. Lines starting
// with `#` are comments.
// ---------------------------------------------------------------------------

struct ModelFormatError : std::runtime_error {
  ModelFormatError(const std::string& what, int line_)
      : std::runtime_error(what), line(line_) {}
  int line;  // 1-based
};

Model parse_model(std::string_view text);
std::string to_text(const Model& m);

std::string state_set_to_string(const Frame& frame, StateSet set);

}  // namespace contingent

#endif  // CONTINGENT_MODEL_HPP
