#ifndef CONTINGENT_SEARCH_HPP
#define CONTINGENT_SEARCH_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "contingent/formula.hpp"
#include "contingent/model.hpp"
#include "contingent/proof.hpp"
#include "contingent/random.hpp"

namespace contingent {

// Exhaustive enumeration is capped here: n states give 2^(2^n) collections
// per state, (2^(2^n))^n frames.
constexpr int kMaxEnumerationStates = 3;

// Every neighborhood collection over n states that satisfies the flagged
// closure properties, encoded as a bitmask over the 2^n subsets (bit x set
// iff the subset with state mask x is a member), in increasing order.
std::vector<std::uint64_t> admissible_collections(int n, PropertySet props);

std::vector<StateSet> collection_from_mask(int n, std::uint64_t mask);

// Number of frames enumerate_frames yields: |admissible collections|^n.
std::uint64_t frame_count(int n, PropertySet props);

// Calls `visit` for every frame on n states satisfying the properties,
// exactly once each. Canonical order: states are indexed 0..n-1 and the
// tuple of per-state collection choices counts up with the last state's
// collection varying fastest. Return false from `visit` to stop.
void enumerate_frames(int n, PropertySet props, const std::function<bool(const Frame&)>& visit);

// A search outcome plus enough context to reproduce it. Any witness has been
// re-verified: the model passes check_property for the searched class and
// eval falsifies the instance at the recorded state. The verdict for a clean
// sweep is only ever "valid up to the bound".
struct SearchReport {
  std::string subject;         // printed instance that was checked
  std::string schema;          // schema name when the search came from one
  Substitution subst;          // instantiation used, when applicable
  PropertySet props;
  int max_size = 0;
  SearchMode mode;
  bool falsified = false;
  std::optional<Countermodel> witness;
  std::uint64_t frames_examined = 0;
  double elapsed_ms = 0.0;

  // Stable machine rendering; timing is deliberately excluded so identical
  // inputs and seeds reproduce identical lines.
  std::string machine_line() const;
  std::string human_text() const;
};

// Instantiates the schema with the given atoms (in metavariable order
// phi, psi, chi) and searches the flagged frame class for a countermodel.
SearchReport find_countermodel(const Schema& schema, const std::vector<std::string>& atoms,
                               PropertySet props, int max_size, const SearchMode& mode);
SearchReport find_countermodel_formula(const Formula& instance, PropertySet props, int max_size,
                                       const SearchMode& mode);

// Default instantiation atoms, in metavariable order.
std::vector<std::string> default_instance_atoms(const Schema& schema);

// Per-frame agreement between a closure property and its defining
// Box-formula:
//   m: B(p & q) -> Bp & Bq      c: Bp & Bq -> B(p & q)
//   n: BT                       z: Bp -> B~p
struct CorrespondenceReport {
  char flag = 0;
  std::string formula;
  int max_size = 0;
  SearchMode mode;
  bool consistent = true;
  std::optional<Frame> discrepancy;
  bool discrepancy_property = false;  // property verdict on the discrepant frame
  std::uint64_t frames_examined = 0;
  double elapsed_ms = 0.0;
};

Formula defining_formula(char flag);

CorrespondenceReport correspondence_check(char flag, const Formula& defining, int max_size,
                                          const SearchMode& mode);

// ---------------------------------------------------------------------------
// Reproduction suite: the stock schema-versus-frame-class results, checked
// by bounded sweeps (size <= 2 exhaustive, size 3 sampled) for validities
// and by the shipped countermodels for invalidities.
// ---------------------------------------------------------------------------

struct SuiteItem {
  std::string id;
  bool pass = false;
  std::uint64_t frames_examined = 0;
  double elapsed_ms = 0.0;
  std::string detail;
};

// Machine line: item=<id> verdict=<pass|fail> frames=<k> elapsed_ms=<t>
std::string machine_line(const SuiteItem& item);

std::vector<SuiteItem> fixture_suite(std::uint64_t seed = kDefaultSeed,
                                     std::uint64_t samples_per_class = 10000);

}  // namespace contingent

#endif  // CONTINGENT_SEARCH_HPP
