#include "contingent/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <mutex>
#include <sstream>
#include <thread>

#include "contingent/fixtures.hpp"
#include "contingent/transform.hpp"

namespace contingent {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// ---------------------------------------------------------------------------
// Flattened formulas and mask frames: the inner loops of class-level search
// run on plain integers, no allocation.
// ---------------------------------------------------------------------------

struct FlatNode {
  Conn op;
  int atom = -1;  // Atom only, index into FlatFormula::atoms
  int a = -1, b = -1;
};

struct FlatFormula {
  std::vector<FlatNode> nodes;
  int root = -1;
  std::vector<std::string> atoms;  // sorted
};

int flatten_into(const Formula& f, FlatFormula& out) {
  FlatNode node;
  node.op = f.kind();
  switch (f.kind()) {
    case Conn::Atom: {
      const auto it = std::find(out.atoms.begin(), out.atoms.end(), f.atom_name());
      node.atom = static_cast<int>(it - out.atoms.begin());
      break;
    }
    case Conn::Top:
    case Conn::Bot:
      break;
    case Conn::Not:
    case Conn::Delta:
    case Conn::Box:
      node.a = flatten_into(f.child(), out);
      break;
    default:
      node.a = flatten_into(f.left(), out);
      node.b = flatten_into(f.right(), out);
  }
  out.nodes.push_back(node);
  return static_cast<int>(out.nodes.size()) - 1;
}

FlatFormula flatten(const Formula& f) {
  if (f.has_metavariables()) {
    throw std::invalid_argument("formula contains metavariables");
  }
  FlatFormula out;
  out.atoms = f.atoms();
  out.root = flatten_into(f, out);
  return out;
}

// Neighborhood collections as bitmasks over subset indices: subset with
// state mask x is a member of N(s) iff bit x of collections[s] is set.
// Valid for frames of up to 5 states (32 subsets).
StateSet flat_truth_set(const FlatFormula& ff, int index, const std::uint64_t* collections,
                        int n, const StateSet* values) {
  const FlatNode& node = ff.nodes[index];
  const StateSet full = (1u << n) - 1u;
  switch (node.op) {
    case Conn::Atom:
      return values[node.atom];
    case Conn::Top:
      return full;
    case Conn::Bot:
      return 0;
    case Conn::Not:
      return full & ~flat_truth_set(ff, node.a, collections, n, values);
    case Conn::And:
      return flat_truth_set(ff, node.a, collections, n, values) &
             flat_truth_set(ff, node.b, collections, n, values);
    case Conn::Or:
      return flat_truth_set(ff, node.a, collections, n, values) |
             flat_truth_set(ff, node.b, collections, n, values);
    case Conn::Imp:
      return (full & ~flat_truth_set(ff, node.a, collections, n, values)) |
             flat_truth_set(ff, node.b, collections, n, values);
    case Conn::Iff: {
      const StateSet l = flat_truth_set(ff, node.a, collections, n, values);
      const StateSet r = flat_truth_set(ff, node.b, collections, n, values);
      return full & ~(l ^ r);
    }
    case Conn::Delta: {
      const StateSet t = flat_truth_set(ff, node.a, collections, n, values);
      const StateSet complement = full & ~t;
      StateSet out = 0;
      for (int s = 0; s < n; ++s) {
        if (((collections[s] >> t) & 1u) || ((collections[s] >> complement) & 1u)) {
          out |= 1u << s;
        }
      }
      return out;
    }
    case Conn::Box: {
      const StateSet t = flat_truth_set(ff, node.a, collections, n, values);
      StateSet out = 0;
      for (int s = 0; s < n; ++s) {
        if ((collections[s] >> t) & 1u) out |= 1u << s;
      }
      return out;
    }
  }
  return 0;  // unreachable
}

struct Falsification {
  std::vector<StateSet> values;  // per atom, in FlatFormula::atoms order
  int state = 0;
};

// First falsifying valuation/state in canonical order: the assignment
// odometer runs with the last atom fastest, and the lowest falsified state
// index wins. Empty optional when the formula holds everywhere.
std::optional<Falsification> find_falsification(const FlatFormula& ff,
                                                const std::uint64_t* collections, int n) {
  const StateSet full = (1u << n) - 1u;
  const std::size_t k = ff.atoms.size();
  if (k * static_cast<std::size_t>(n) > 24) {
    throw BoundExceeded("too many atom/state combinations to sweep valuations");
  }
  const std::uint64_t per_atom = 1ull << n;
  std::vector<StateSet> values(k, 0);
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < k; ++i) total *= per_atom;
  for (std::uint64_t index = 0; index < total; ++index) {
    std::uint64_t rest = index;
    for (std::size_t i = k; i-- > 0;) {
      values[i] = static_cast<StateSet>(rest % per_atom);
      rest /= per_atom;
    }
    const StateSet truth = flat_truth_set(ff, ff.root, collections, n, values.data());
    const StateSet falsified = full & ~truth;
    if (falsified != 0) {
      Falsification hit;
      hit.values = values;
      hit.state = std::countr_zero(falsified);
      return hit;
    }
  }
  return std::nullopt;
}

Frame frame_from_collections(int n, const std::uint64_t* collections) {
  std::vector<std::vector<StateSet>> nbhd;
  nbhd.reserve(n);
  for (int s = 0; s < n; ++s) nbhd.push_back(collection_from_mask(n, collections[s]));
  return Frame(canonical_state_names(n), std::move(nbhd));
}

std::vector<std::uint64_t> collections_of_frame(const Frame& frame) {
  std::vector<std::uint64_t> out(frame.size(), 0);
  for (int s = 0; s < frame.size(); ++s) {
    for (StateSet x : frame.neighborhoods(s)) out[s] |= 1ull << x;
  }
  return out;
}

Model witness_model(int n, const std::uint64_t* collections, const FlatFormula& ff,
                    const Falsification& hit) {
  Frame frame = frame_from_collections(n, collections);
  std::map<std::string, StateSet> valuation;
  for (std::size_t i = 0; i < ff.atoms.size(); ++i) valuation[ff.atoms[i]] = hit.values[i];
  return Model(std::move(frame), std::move(valuation));
}

// Witnesses must survive the public double-entry check before they are
// reported.
void verify_witness(const Countermodel& witness, PropertySet props, const Formula& f) {
  if (!check_property(witness.model.frame(), props)) {
    throw std::logic_error("search produced a witness outside the frame class");
  }
  if (eval(witness.model, witness.state, f)) {
    throw std::logic_error("search produced a witness that does not falsify");
  }
}

struct StripeResult {
  std::uint64_t index = UINT64_MAX;  // global frame index of the hit
  std::optional<Falsification> hit;
  std::vector<std::uint64_t> collections;
};

}  // namespace

std::vector<std::uint64_t> admissible_collections(int n, PropertySet props) {
  if (n < 1 || n > kMaxEnumerationStates) {
    throw BoundExceeded("exhaustive enumeration limited to " +
                        std::to_string(kMaxEnumerationStates) + " states");
  }
  const std::uint32_t subsets = 1u << n;
  const StateSet full = subsets - 1u;
  const std::uint64_t count = 1ull << subsets;
  std::vector<std::uint64_t> out;
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    bool ok = true;
    if (props.n && !((mask >> full) & 1u)) ok = false;
    for (std::uint32_t x = 0; ok && x < subsets; ++x) {
      if (!((mask >> x) & 1u)) continue;
      if (props.z && !((mask >> (full & ~x)) & 1u)) ok = false;
      if (props.m) {
        for (int b = 0; ok && b < n; ++b) {
          const std::uint32_t y = x | (1u << b);
          if (y != x && !((mask >> y) & 1u)) ok = false;
        }
      }
      if (props.c) {
        for (std::uint32_t y = 0; ok && y < subsets; ++y) {
          if (((mask >> y) & 1u) && !((mask >> (x & y)) & 1u)) ok = false;
        }
      }
    }
    if (ok) out.push_back(mask);
  }
  return out;
}

std::vector<StateSet> collection_from_mask(int n, std::uint64_t mask) {
  const std::uint32_t subsets = 1u << n;
  std::vector<StateSet> out;
  for (std::uint32_t x = 0; x < subsets; ++x) {
    if ((mask >> x) & 1u) out.push_back(x);
  }
  return out;
}

std::uint64_t frame_count(int n, PropertySet props) {
  const std::uint64_t per_state = admissible_collections(n, props).size();
  std::uint64_t total = 1;
  for (int s = 0; s < n; ++s) total *= per_state;
  return total;
}

void enumerate_frames(int n, PropertySet props, const std::function<bool(const Frame&)>& visit) {
  const std::vector<std::uint64_t> admissible = admissible_collections(n, props);
  const std::uint64_t per_state = admissible.size();
  std::uint64_t total = 1;
  for (int s = 0; s < n; ++s) total *= per_state;
  std::vector<std::uint64_t> collections(n, 0);
  for (std::uint64_t index = 0; index < total; ++index) {
    std::uint64_t rest = index;
    for (int s = n; s-- > 0;) {
      collections[s] = admissible[rest % per_state];
      rest /= per_state;
    }
    if (!visit(frame_from_collections(n, collections.data()))) return;
  }
}

namespace {

// Exhaustive sweep of one size, stripe-parallel over the first state's
// collection choice. The returned hit is the one with the smallest global
// frame index, so the verdict is identical to a sequential left-to-right
// scan.
std::optional<StripeResult> sweep_size(const FlatFormula& ff, int n, PropertySet props,
                                       std::uint64_t& frames_seen) {
  // Raise the valuation bound here, on the caller's thread, so workers never
  // throw.
  if (ff.atoms.size() * static_cast<std::size_t>(n) > 24) {
    throw BoundExceeded("too many atom/state combinations to sweep valuations");
  }
  const std::vector<std::uint64_t> admissible = admissible_collections(n, props);
  const std::uint64_t per_state = admissible.size();
  std::uint64_t total = 1;
  for (int s = 0; s < n; ++s) total *= per_state;
  frames_seen = total;
  if (total == 0) return std::nullopt;

  std::uint64_t inner_total = total / per_state;  // frames per first-state choice

  const auto scan_block = [&](std::uint64_t first_choice,
                              std::uint64_t stop_before) -> std::optional<StripeResult> {
    std::vector<std::uint64_t> collections(n, 0);
    collections[0] = admissible[first_choice];
    const std::uint64_t base = first_choice * inner_total;
    for (std::uint64_t inner = 0; inner < inner_total; ++inner) {
      const std::uint64_t global = base + inner;
      if (global >= stop_before) return std::nullopt;
      std::uint64_t rest = inner;
      for (int s = n; s-- > 1;) {
        collections[s] = admissible[rest % per_state];
        rest /= per_state;
      }
      if (auto hit = find_falsification(ff, collections.data(), n)) {
        StripeResult result;
        result.index = global;
        result.hit = std::move(hit);
        result.collections = collections;
        return result;
      }
    }
    return std::nullopt;
  };

  const unsigned hw = std::thread::hardware_concurrency();
  const bool parallel = total >= (1u << 14) && hw > 1 && per_state > 1;
  if (!parallel) {
    for (std::uint64_t choice = 0; choice < per_state; ++choice) {
      if (auto result = scan_block(choice, UINT64_MAX)) return result;
    }
    return std::nullopt;
  }

  const unsigned workers = std::min<unsigned>(hw, 16);
  std::atomic<std::uint64_t> best{UINT64_MAX};
  std::vector<StripeResult> found(workers);
  std::vector<std::thread> threads;
  for (unsigned w = 0; w < workers; ++w) {
    threads.emplace_back([&, w] {
      for (std::uint64_t choice = w; choice < per_state; choice += workers) {
        const std::uint64_t base = choice * inner_total;
        if (base >= best.load(std::memory_order_relaxed)) break;
        if (auto result = scan_block(choice, best.load(std::memory_order_relaxed))) {
          found[w] = std::move(*result);
          std::uint64_t expected = best.load(std::memory_order_relaxed);
          while (expected > found[w].index &&
                 !best.compare_exchange_weak(expected, found[w].index)) {
          }
          break;
        }
      }
    });
  }
  for (auto& thread : threads) thread.join();

  const std::uint64_t winner = best.load();
  if (winner == UINT64_MAX) return std::nullopt;
  for (auto& result : found) {
    if (result.index == winner) return result;
  }
  throw std::logic_error("parallel sweep lost its witness");
}

}  // namespace

ClassVerdict is_valid_on_class(PropertySet props, const Formula& f, int max_size,
                               const SearchMode& mode) {
  if (max_size < 1) throw std::invalid_argument("max_size must be at least 1");
  const FlatFormula ff = flatten(f);

  ClassVerdict verdict;
  if (mode.kind == SearchModeKind::Exhaustive) {
    if (max_size > kMaxEnumerationStates) {
      throw BoundExceeded("exhaustive class search limited to " +
                          std::to_string(kMaxEnumerationStates) + " states");
    }
    for (int n = 1; n <= max_size; ++n) {
      std::uint64_t frames_at_size = 0;
      const auto result = sweep_size(ff, n, props, frames_at_size);
      if (result) {
        const Model model = witness_model(n, result->collections.data(), ff, *result->hit);
        Countermodel witness{model, result->hit->state};
        verify_witness(witness, props, f);
        verdict.valid_up_to_bound = false;
        verdict.witness = std::move(witness);
        verdict.frames_examined += result->index + 1;
        return verdict;
      }
      verdict.frames_examined += frames_at_size;
    }
    return verdict;
  }

  // Sampling: frames of size exactly max_size, uniform neighborhoods
  // repaired to the requested properties.
  if (max_size > kMaxCloseUnderStates) {
    throw BoundExceeded("sampled class search limited to " +
                        std::to_string(kMaxCloseUnderStates) + " states");
  }
  if (mode.samples == 0) throw std::invalid_argument("sample count must be positive");
  Rng rng(mode.seed);
  for (std::uint64_t i = 0; i < mode.samples; ++i) {
    const Frame frame = random_frame_with(rng, max_size, props);
    const std::vector<std::uint64_t> collections = collections_of_frame(frame);
    if (auto hit = find_falsification(ff, collections.data(), max_size)) {
      std::map<std::string, StateSet> valuation;
      for (std::size_t a = 0; a < ff.atoms.size(); ++a) valuation[ff.atoms[a]] = hit->values[a];
      Countermodel witness{Model(frame, std::move(valuation)), hit->state};
      verify_witness(witness, props, f);
      verdict.valid_up_to_bound = false;
      verdict.witness = std::move(witness);
      verdict.frames_examined = i + 1;
      return verdict;
    }
  }
  verdict.frames_examined = mode.samples;
  return verdict;
}

// ---------------------------------------------------------------------------
// Reports.
// ---------------------------------------------------------------------------

namespace {

std::string mode_string(const SearchMode& mode) {
  if (mode.kind == SearchModeKind::Exhaustive) return "exhaustive";
  return "sample:" + std::to_string(mode.samples) + ":seed:" + std::to_string(mode.seed);
}

}  // namespace

std::string SearchReport::machine_line() const {
  std::ostringstream out;
  if (!schema.empty()) out << "schema=" << schema << ' ';
  out << "instance=" << subject << " props=" << (props.none() ? "all" : props.flags())
      << " max=" << max_size << " mode=" << mode_string(mode)
      << " verdict=" << (falsified ? "countermodel" : "valid_up_to_bound")
      << " frames=" << frames_examined;
  if (witness) out << " state=" << witness->model.frame().state_name(witness->state);
  return out.str();
}

std::string SearchReport::human_text() const {
  std::ostringstream out;
  if (!schema.empty()) out << "schema " << schema << ", ";
  out << "instance: " << subject << '\n';
  out << "frame class: " << (props.none() ? "all frames" : "(" + props.flags() + ")-frames")
      << ", size <= " << max_size << ", mode " << mode_string(mode) << '\n';
  if (falsified) {
    out << "FALSIFIED after " << frames_examined << " frame(s), at state "
        << witness->model.frame().state_name(witness->state) << " of:\n"
        << to_text(witness->model);
  } else {
    out << "valid up to the bound (" << frames_examined
        << " frame(s) examined); no claim beyond it\n";
  }
  out << "elapsed: " << elapsed_ms << " ms\n";
  return out.str();
}

std::vector<std::string> default_instance_atoms(const Schema& schema) {
  static const std::vector<std::string> kDefault = {"p", "q", "r"};
  const std::vector<std::string> metas = schema.pattern.metavariables();
  std::vector<std::string> out;
  const std::vector<std::string> order = {"phi", "psi", "chi"};
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (std::find(metas.begin(), metas.end(), order[i]) != metas.end()) {
      out.push_back(kDefault[i]);
    }
  }
  return out;
}

SearchReport find_countermodel(const Schema& schema, const std::vector<std::string>& atoms,
                               PropertySet props, int max_size, const SearchMode& mode) {
  const std::vector<std::string> order = {"phi", "psi", "chi"};
  const std::vector<std::string> metas = schema.pattern.metavariables();
  Substitution subst;
  std::size_t next = 0;
  for (const auto& meta : order) {
    if (std::find(metas.begin(), metas.end(), meta) == metas.end()) continue;
    if (next >= atoms.size()) {
      throw std::invalid_argument("schema '" + schema.name + "' needs " +
                                  std::to_string(metas.size()) + " instantiation atoms");
    }
    subst.emplace(meta, Formula::atom(atoms[next++]));
  }
  SearchReport report = find_countermodel_formula(instantiate(schema.pattern, subst), props,
                                                  max_size, mode);
  report.schema = schema.name;
  report.subst = std::move(subst);
  return report;
}

SearchReport find_countermodel_formula(const Formula& instance, PropertySet props, int max_size,
                                       const SearchMode& mode) {
  const auto start = Clock::now();
  SearchReport report;
  report.subject = to_string(instance);
  report.props = props;
  report.max_size = max_size;
  report.mode = mode;
  const ClassVerdict verdict = is_valid_on_class(props, instance, max_size, mode);
  report.falsified = !verdict.valid_up_to_bound;
  report.witness = verdict.witness;
  report.frames_examined = verdict.frames_examined;
  report.elapsed_ms = ms_since(start);
  return report;
}

Formula defining_formula(char flag) {
  switch (flag) {
    case 'm': return parse("B(p & q) -> Bp & Bq");
    case 'c': return parse("Bp & Bq -> B(p & q)");
    case 'n': return parse("BT");
    case 'z': return parse("Bp -> B~p");
    default: throw std::invalid_argument("unknown property flag");
  }
}

CorrespondenceReport correspondence_check(char flag, const Formula& defining, int max_size,
                                          const SearchMode& mode) {
  const auto start = Clock::now();
  CorrespondenceReport report;
  report.flag = flag;
  report.formula = to_string(defining);
  report.max_size = max_size;
  report.mode = mode;
  const PropertySet props = PropertySet::from_flags(std::string(1, flag));

  const auto examine = [&](const Frame& frame) {
    const bool has_property = check_property(frame, props);
    const bool valid = is_valid_in_frame(frame, defining);
    ++report.frames_examined;
    if (has_property != valid) {
      report.consistent = false;
      report.discrepancy = frame;
      report.discrepancy_property = has_property;
      return false;
    }
    return true;
  };

  if (mode.kind == SearchModeKind::Exhaustive) {
    for (int n = 1; n <= max_size && report.consistent; ++n) {
      enumerate_frames(n, PropertySet{}, examine);
    }
  } else {
    Rng rng(mode.seed);
    for (std::uint64_t i = 0; i < mode.samples && report.consistent; ++i) {
      examine(random_frame(rng, max_size));
    }
  }
  report.elapsed_ms = ms_since(start);
  return report;
}

// ---------------------------------------------------------------------------
// Reproduction suite.
// ---------------------------------------------------------------------------

namespace {

SuiteItem validity_item(const std::string& id, const char* schema_name, PropertySet props,
                        std::uint64_t seed, std::uint64_t samples) {
  const auto start = Clock::now();
  SuiteItem item;
  item.id = id;
  const Schema* schema = find_schema(schema_name);
  const SearchReport exhaustive =
      find_countermodel(*schema, default_instance_atoms(*schema), props, 2,
                        SearchMode::exhaustive());
  const SearchReport sampled =
      find_countermodel(*schema, default_instance_atoms(*schema), props, 3,
                        SearchMode::sample(samples, seed));
  item.pass = !exhaustive.falsified && !sampled.falsified;
  item.frames_examined = exhaustive.frames_examined + sampled.frames_examined;
  item.detail = item.pass ? "no countermodel up to the bound" : "countermodel found";
  item.elapsed_ms = ms_since(start);
  return item;
}

SuiteItem invalidity_item(const std::string& id, const Model& model, PropertySet props,
                          const Formula& instance) {
  const auto start = Clock::now();
  SuiteItem item;
  item.id = id;
  const bool in_class = check_property(model.frame(), props);
  const bool falsified = !eval(model, 0, instance);
  item.pass = in_class && falsified;
  item.frames_examined = 1;
  if (!in_class) {
    item.detail = "shipped model is outside the class";
  } else if (!falsified) {
    item.detail = "shipped model does not falsify the instance";
  } else {
    item.detail = "shipped countermodel re-verified";
  }
  item.elapsed_ms = ms_since(start);
  return item;
}

}  // namespace

std::string machine_line(const SuiteItem& item) {
  std::ostringstream out;
  out << "item=" << item.id << " verdict=" << (item.pass ? "pass" : "fail")
      << " frames=" << item.frames_examined << " elapsed_ms=" << static_cast<long long>(item.elapsed_ms);
  return out.str();
}

std::vector<SuiteItem> fixture_suite(std::uint64_t seed, std::uint64_t samples_per_class) {
  const Model small_c = fixture_model("c_not_dc");
  const Model cn = fixture_model("cn_not_dc");
  const Model mcn = fixture_model("mcn_not_sdm");

  const Formula dc_negated_instance = parse("Dp & D~p -> D(p & ~p)");
  const Formula dc_instance = parse("Dp & Dq -> D(p & q)");
  const Formula sdm_instance = parse("Dp -> D(p | q)");

  std::vector<SuiteItem> items;
  items.push_back(validity_item("dN_valid_n", "dN", PropertySet::from_flags("n"), seed,
                                samples_per_class));
  items.push_back(validity_item("dM_valid_m", "dM", PropertySet::from_flags("m"), seed,
                                samples_per_class));
  items.push_back(validity_item("dC_valid_cz", "dC", PropertySet::from_flags("cz"), seed,
                                samples_per_class));
  items.push_back(validity_item("dC_valid_mc", "dC", PropertySet::from_flags("mc"), seed,
                                samples_per_class));
  items.push_back(invalidity_item("dC_falsified_c", small_c, PropertySet::from_flags("c"),
                                  dc_negated_instance));
  items.push_back(invalidity_item("dC_falsified_cn", cn, PropertySet::from_flags("cn"),
                                  dc_instance));
  items.push_back(invalidity_item("sdM_falsified_mcn", mcn, PropertySet::from_flags("mcn"),
                                  sdm_instance));
  items.push_back(invalidity_item("sdM_falsified_m", mcn, PropertySet::from_flags("m"),
                                  sdm_instance));
  items.push_back(invalidity_item("sdM_falsified_mc", mcn, PropertySet::from_flags("mc"),
                                  sdm_instance));
  items.push_back(invalidity_item("sdM_falsified_mn", mcn, PropertySet::from_flags("mn"),
                                  sdm_instance));
  items.push_back(validity_item("sdM_valid_mz", "sdM", PropertySet::from_flags("mz"), seed,
                                samples_per_class));
  return items;
}

}  // namespace contingent
