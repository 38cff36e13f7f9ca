#include "contingent/acceptance.hpp"

#include <chrono>
#include <ostream>
#include <sstream>

#include "contingent/fixtures.hpp"
#include "contingent/random.hpp"
#include "contingent/search.hpp"
#include "contingent/transform.hpp"

namespace contingent {

namespace {

using Clock = std::chrono::steady_clock;

constexpr std::uint64_t kSamplesPerClass = 10000;
constexpr std::uint64_t kTransformModels = 10000;
constexpr int kMutations = 100;

// A tiny check collector: the first failure wins the detail slot.
struct Checker {
  bool pass = true;
  std::string detail;

  void expect(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

CriterionResult finish(int number, const char* name, double budget_ms, Checker& checks,
                       Clock::time_point start) {
  CriterionResult result;
  result.number = number;
  result.name = name;
  result.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  result.budget_ms = budget_ms;
  result.pass = checks.pass;
  result.detail = checks.detail;
  if (result.pass && budget_ms > 0 && result.elapsed_ms >= budget_ms) {
    result.pass = false;
    result.detail = "runtime budget exceeded";
  }
  if (result.pass) result.detail = "ok";
  return result;
}

// Criterion 1: the three shipped countermodels reproduce every recorded
// truth value, and the monotone-class variants fall out of the third model.
CriterionResult criterion_shipped_countermodels() {
  const auto start = Clock::now();
  Checker checks;

  const Model c_model = fixture_model("c_not_dc");
  checks.expect(eval(c_model, "s", parse("Dp")), "c_not_dc: Dp at s");
  checks.expect(eval(c_model, "s", parse("D~p")), "c_not_dc: D~p at s");
  checks.expect(!eval(c_model, "s", parse("D(p & ~p)")), "c_not_dc: D(p & ~p) at s");
  checks.expect(!eval(c_model, "s", parse("Dp & D~p -> D(p & ~p)")), "c_not_dc: instance at s");
  checks.expect(check_property(c_model.frame(), PropertySet::from_flags("c")),
                "c_not_dc: class membership");

  const Model cn_model = fixture_model("cn_not_dc");
  checks.expect(eval(cn_model, "s", parse("Dp")), "cn_not_dc: Dp at s");
  checks.expect(eval(cn_model, "s", parse("Dq")), "cn_not_dc: Dq at s");
  checks.expect(!eval(cn_model, "s", parse("D(p & q)")), "cn_not_dc: D(p & q) at s");
  checks.expect(!eval(cn_model, "s", parse("Dp & Dq -> D(p & q)")), "cn_not_dc: instance at s");
  checks.expect(check_property(cn_model.frame(), PropertySet::from_flags("cn")),
                "cn_not_dc: class membership");

  const Model mcn_model = fixture_model("mcn_not_sdm");
  checks.expect(eval(mcn_model, "s", parse("Dp")), "mcn_not_sdm: Dp at s");
  checks.expect(!eval(mcn_model, "s", parse("D(p | q)")), "mcn_not_sdm: D(p | q) at s");
  checks.expect(!eval(mcn_model, "s", parse("Dp -> D(p | q)")), "mcn_not_sdm: instance at s");

  // The same model settles the m / mc / mn classes.
  for (const char* flags : {"mcn", "m", "mc", "mn"}) {
    checks.expect(check_property(mcn_model.frame(), PropertySet::from_flags(flags)),
                  std::string("mcn_not_sdm: membership in (") + flags + ")");
  }

  return finish(1, "shipped-countermodels", 1000, checks, start);
}

// Criterion 2: bounded validity sweep, exhaustive to size 2 and sampled at
// size 3, plus the size-2 witness against dC on mere (c)-frames.
CriterionResult criterion_validity_sweep() {
  const auto start = Clock::now();
  Checker checks;

  const struct {
    const char* schema;
    const char* flags;
  } valid_cases[] = {
      {"dN", "n"}, {"dM", "m"}, {"dC", "cz"}, {"dC", "mc"}, {"sdM", "mz"},
  };
  for (const auto& entry : valid_cases) {
    const Schema* schema = find_schema(entry.schema);
    const PropertySet props = PropertySet::from_flags(entry.flags);
    const SearchReport exhaustive = find_countermodel(
        *schema, default_instance_atoms(*schema), props, 2, SearchMode::exhaustive());
    checks.expect(!exhaustive.falsified, std::string(entry.schema) + " falsified on (" +
                                             entry.flags + ") at size <= 2");
    const SearchReport sampled =
        find_countermodel(*schema, default_instance_atoms(*schema), props, 3,
                          SearchMode::sample(kSamplesPerClass, kDefaultSeed));
    checks.expect(!sampled.falsified, std::string(entry.schema) + " falsified on (" +
                                          entry.flags + ") at sampled size 3");
  }

  const Schema* dc = find_schema("dC");
  const SearchReport c_search = find_countermodel(*dc, default_instance_atoms(*dc),
                                                  PropertySet::from_flags("c"), 2,
                                                  SearchMode::exhaustive());
  checks.expect(c_search.falsified, "no (c)-frame falsifying dC at size <= 2");
  checks.expect(c_search.witness && c_search.witness->model.frame().size() == 2,
                "dC witness should first appear at size 2");

  return finish(2, "bounded-validity-sweep", 60000, checks, start);
}

// Criterion 3: property <=> defining-formula validity, per flag.
CriterionResult criterion_correspondence() {
  const auto start = Clock::now();
  Checker checks;
  for (char flag : {'m', 'c', 'n', 'z'}) {
    const Formula defining = defining_formula(flag);
    const CorrespondenceReport exhaustive =
        correspondence_check(flag, defining, 2, SearchMode::exhaustive());
    checks.expect(exhaustive.consistent,
                  std::string("(") + flag + ") discrepancy at size <= 2");
    const CorrespondenceReport sampled = correspondence_check(
        flag, defining, 3, SearchMode::sample(kSamplesPerClass, kDefaultSeed));
    checks.expect(sampled.consistent, std::string("(") + flag + ") discrepancy at size 3");
  }
  return finish(3, "frame-correspondence", 60000, checks, start);
}

// Criterion 4: transform laws on random models of sizes 2..5.
CriterionResult criterion_transforms() {
  const auto start = Clock::now();
  Checker checks;
  Rng rng(kDefaultSeed);
  const std::vector<std::string> atoms = {"p", "q"};

  const auto subset_of = [](const Frame& small, const Frame& large) {
    for (int s = 0; s < small.size(); ++s) {
      for (StateSet x : small.neighborhoods(s)) {
        if (!large.in_neighborhoods(s, x)) return false;
      }
    }
    return true;
  };

  for (std::uint64_t i = 0; i < kTransformModels; ++i) {
    const int n = 2 + static_cast<int>(i % 4);
    const Model model = random_model(rng, n, atoms);

    const Model supplemented = supplementation(model);
    checks.expect(subset_of(model.frame(), supplemented.frame()), "N not within N+");
    checks.expect(check_property(supplemented.frame(), PropertySet::from_flags("m")),
                  "supplementation output not supplemented");

    const Model c_closed = close_under(model, PropertySet::from_flags("c"));
    checks.expect(check_property(supplementation(c_closed).frame(), PropertySet::from_flags("c")),
                  "supplementation broke (c)");
    const Model n_closed = close_under(model, PropertySet::from_flags("n"));
    checks.expect(check_property(supplementation(n_closed).frame(), PropertySet::from_flags("n")),
                  "supplementation broke (n)");

    const Model complemented = complementation(model);
    checks.expect(check_property(complemented.frame(), PropertySet::from_flags("z")),
                  "complementation output not z-closed");
    checks.expect(subset_of(model.frame(), complemented.frame()), "N not within N^z");

    const Formula f = random_formula(rng, 4, atoms, /*with_box=*/false);
    checks.expect(truth_set(model, f) == truth_set(complemented, f),
                  "complementation changed the truth of: " + to_string(f));
    checks.expect(truth_set(model, f) == truth_set(model, star_translate(f)),
                  "star translation disagreed on: " + to_string(f));
    checks.expect(truth_set(complemented, Formula::delta(f)) ==
                      truth_set(complemented, Formula::box(f)),
                  "Box/Delta split on a z-frame for: " + to_string(f));
  }

  return finish(4, "transform-laws", 120000, checks, start);
}

// Criterion 5: the shipped derivations verify, their lines are valid on the
// matching frame class, and random connective flips are all rejected.
CriterionResult criterion_proof_fixtures() {
  const auto start = Clock::now();
  Checker checks;

  const struct {
    const char* fixture;
    const char* flags;
  } entries[] = {
      {"dcprime_from_dc", "mc"},
      {"dc_from_dcprime", "mc"},
      {"dmprime_from_dm", "m"},
      {"dm_from_dmprime", "m"},
  };

  std::vector<Derivation> derivations;
  for (const auto& entry : entries) {
    Derivation derivation = fixture_derivation(entry.fixture);
    const CheckResult result = check_derivation(derivation);
    checks.expect(result.ok, std::string(entry.fixture) + ": line " +
                                 std::to_string(result.line) + ": " + result.reason);
    const PropertySet props = PropertySet::from_flags(entry.flags);
    for (const auto& line : derivation.lines) {
      bool valid = true;
      for (int n = 1; n <= 2 && valid; ++n) {
        enumerate_frames(n, props, [&](const Frame& frame) {
          valid = is_valid_in_frame(frame, line.formula);
          return valid;
        });
      }
      checks.expect(valid, std::string(entry.fixture) + ": line " + std::to_string(line.index) +
                               " invalid on (" + entry.flags + ")-frames");
    }
    derivations.push_back(std::move(derivation));
  }

  Rng rng(kDefaultSeed);
  int rejected = 0;
  for (int i = 0; i < kMutations; ++i) {
    const Derivation& original = derivations[rng.below(derivations.size())];
    Derivation mutated = original;
    const std::size_t target = rng.below(mutated.lines.size());
    Formula& formula = mutated.lines[target].formula;
    const Formula flipped = mutate_connective(rng, formula);
    if (flipped == formula) continue;  // no connective to flip; cannot happen here
    formula = flipped;
    if (!check_derivation(mutated).ok) ++rejected;
  }
  checks.expect(rejected == kMutations,
                "only " + std::to_string(rejected) + "/" + std::to_string(kMutations) +
                    " mutations rejected");

  return finish(5, "proof-fixtures", 30000, checks, start);
}

// Criterion 6: per-frame equivalence of the paired monotonicity forms at
// size <= 2.
CriterionResult criterion_frame_equivalences() {
  const auto start = Clock::now();
  Checker checks;

  const Formula sdm_or = parse("Dp -> D(p | q)");
  const Formula sdm_and = parse("D(p & q) -> Dp");
  const Formula dm = instantiate(find_schema("dM")->pattern,
                                 {{"phi", parse("p")}, {"psi", parse("q")}, {"chi", parse("r")}});
  const Formula dm_prime =
      instantiate(find_schema("dM'")->pattern,
                  {{"phi", parse("p")}, {"psi", parse("q")}, {"chi", parse("r")}});

  for (int n = 1; n <= 2; ++n) {
    enumerate_frames(n, PropertySet{}, [&](const Frame& frame) {
      checks.expect(is_valid_in_frame(frame, sdm_or) == is_valid_in_frame(frame, sdm_and),
                    "sdM forms split on a size-" + std::to_string(n) + " frame");
      checks.expect(is_valid_in_frame(frame, dm) == is_valid_in_frame(frame, dm_prime),
                    "dM and dM' split on a size-" + std::to_string(n) + " frame");
      return checks.pass;
    });
  }

  return finish(6, "frame-equivalences", 30000, checks, start);
}

// Criterion 7: enumeration counts, witness re-verification, determinism.
CriterionResult criterion_enumeration_sanity() {
  const auto start = Clock::now();
  Checker checks;

  for (int n = 1; n <= 2; ++n) {
    std::uint64_t seen = 0;
    enumerate_frames(n, PropertySet{}, [&](const Frame&) {
      ++seen;
      return true;
    });
    std::uint64_t expected = 1;
    for (int s = 0; s < n; ++s) expected *= 1ull << (1u << n);
    checks.expect(seen == expected, "enumeration count mismatch at size " + std::to_string(n));
    checks.expect(seen == frame_count(n, PropertySet{}), "frame_count disagrees with enumeration");
  }

  const auto verify_report = [&](const SearchReport& report, PropertySet props,
                                 const Formula& instance) {
    checks.expect(report.falsified && report.witness.has_value(), "expected a witness");
    if (!report.witness) return;
    checks.expect(check_property(report.witness->model.frame(), props),
                  "witness outside its frame class");
    checks.expect(!eval(report.witness->model, report.witness->state, instance),
                  "witness does not falsify");
  };

  const Schema* dc = find_schema("dC");
  const Schema* sdm = find_schema("sdM");
  const Formula dc_instance = parse("Dp & Dq -> D(p & q)");
  const Formula sdm_instance = parse("Dp -> D(p | q)");

  verify_report(find_countermodel(*dc, {"p", "q"}, PropertySet::from_flags("c"), 2,
                                  SearchMode::exhaustive()),
                PropertySet::from_flags("c"), dc_instance);
  verify_report(find_countermodel(*sdm, {"p", "q"}, PropertySet::from_flags("mcn"), 3,
                                  SearchMode::exhaustive()),
                PropertySet::from_flags("mcn"), sdm_instance);
  verify_report(find_countermodel(*dc, {"p", "q"}, PropertySet::from_flags("c"), 3,
                                  SearchMode::sample(2000, kDefaultSeed)),
                PropertySet::from_flags("c"), dc_instance);

  const auto run_sampled = [&] {
    return find_countermodel(*dc, {"p", "q"}, PropertySet::from_flags("c"), 3,
                             SearchMode::sample(2000, kDefaultSeed))
        .machine_line();
  };
  checks.expect(run_sampled() == run_sampled(), "sampled reports not reproducible");
  const auto run_suite_lines = [&] {
    std::string all;
    for (const auto& report : fixture_suite(kDefaultSeed, 200)) {
      SuiteItem stripped = report;
      stripped.elapsed_ms = 0;  // timing is not part of the reproducibility contract
      all += machine_line(stripped) + "\n";
    }
    return all;
  };
  checks.expect(run_suite_lines() == run_suite_lines(), "suite reports not reproducible");

  return finish(7, "enumeration-sanity", 0, checks, start);
}

}  // namespace

std::string criterion_line(const CriterionResult& result) {
  std::ostringstream out;
  out << "criterion=" << result.number << " name=" << result.name
      << " verdict=" << (result.pass ? "pass" : "fail") << " elapsed_ms="
      << static_cast<long long>(result.elapsed_ms);
  if (!result.pass) out << " detail=" << result.detail;
  return out.str();
}

std::vector<CriterionResult> run_acceptance(std::ostream* progress) {
  std::vector<CriterionResult> results;
  const auto push = [&](CriterionResult result) {
    if (progress) *progress << criterion_line(result) << std::endl;
    results.push_back(std::move(result));
  };
  push(criterion_shipped_countermodels());
  push(criterion_validity_sweep());
  push(criterion_correspondence());
  push(criterion_transforms());
  push(criterion_proof_fixtures());
  push(criterion_frame_equivalences());
  push(criterion_enumeration_sanity());
  return results;
}

}  // namespace contingent
