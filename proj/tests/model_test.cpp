#include "contingent/model.hpp"

#include <doctest.h>

#include "contingent/fixtures.hpp"
#include "contingent/random.hpp"
#include "contingent/search.hpp"

using namespace contingent;

namespace {

// S = {s, t}, N(s) = {{s}}, N(t) = {}, V(p) = {s}: a (c)-model where Dp and
// D~p hold at s but D(p & ~p) does not.
Model two_state_model() { return fixture_model("c_not_dc"); }

// S = {s, t, u}, N(s) = {{t u}, S}, N(t) = N(u) = {S}, V(p) = {s}, V(q) = {t}.
Model three_state_model() { return fixture_model("mcn_not_sdm"); }

}  // namespace

TEST_CASE("truth sets follow the noncontingency clause") {
  const Model m = two_state_model();
  CHECK(truth_set(m, parse("Dp")) == 0b01u);            // true at s only
  CHECK(truth_set(m, parse("D(p & ~p)")) == 0b00u);     // false everywhere
  CHECK(truth_set(m, parse("T")) == m.frame().full_set());
  CHECK(truth_set(m, parse("p | ~p")) == 0b11u);
  CHECK(truth_set(m, parse("q")) == 0b00u);             // absent atoms denote the empty set
}

TEST_CASE("eval matches the recorded verdicts of the shipped models") {
  const Model m = three_state_model();
  CHECK(eval(m, "s", parse("Dp")));
  CHECK_FALSE(eval(m, "s", parse("D(p | q)")));

  const Model cn = fixture_model("cn_not_dc");
  CHECK(eval(cn, "s", parse("Dp")));
  CHECK(eval(cn, "s", parse("Dq")));
  CHECK_FALSE(eval(cn, "s", parse("D(p & q)")));
}

TEST_CASE("eval rejects unknown states and metavariables") {
  const Model m = two_state_model();
  CHECK_THROWS_AS(eval(m, "x", parse("p")), UnknownState);
  CHECK_THROWS_AS(eval(m, "s", parse("Dphi")), std::invalid_argument);
}

TEST_CASE("check_property covers the four closure conditions") {
  const Model m2 = two_state_model();
  CHECK(check_property(m2.frame(), PropertySet::from_flags("c")));
  CHECK_FALSE(check_property(m2.frame(), PropertySet::from_flags("m")));
  CHECK_FALSE(check_property(m2.frame(), PropertySet::from_flags("n")));
  CHECK_FALSE(check_property(m2.frame(), PropertySet::from_flags("z")));

  const Model m3 = three_state_model();
  CHECK(check_property(m3.frame(), PropertySet::from_flags("mcn")));
  CHECK_FALSE(check_property(m3.frame(), PropertySet::from_flags("z")));

  // The full powerset at every state satisfies everything.
  std::vector<StateSet> all = {0, 1, 2, 3};
  const Frame full({"s", "t"}, {all, all});
  CHECK(check_property(full, PropertySet::from_flags("mcnz")));
}

TEST_CASE("validity in a frame quantifies over valuations of occurring atoms") {
  // Any frame with S in every N(s) validates DT.
  const Frame n_frame({"s", "t"}, {{0b11}, {0b11}});
  CHECK(is_valid_in_frame(n_frame, parse("DT")));

  const Model m2 = two_state_model();
  CHECK_FALSE(is_valid_in_frame(m2.frame(), parse("Dp & D~p -> D(p & ~p)")));

  const Frame lonely({"s"}, {{}});
  CHECK(is_valid_in_frame(lonely, parse("p -> p")));
  CHECK_FALSE(is_valid_in_frame(lonely, parse("Dp")));

  CHECK_THROWS_AS(is_valid_in_frame(lonely, parse("Dphi")), std::invalid_argument);
}

TEST_CASE("frame validity ignores atoms not in the formula") {
  Rng rng(kDefaultSeed + 2);
  for (int i = 0; i < 50; ++i) {
    const Frame frame = random_frame(rng, 3);
    const Formula with_q = parse("Dp -> Dp | Dq");
    const Formula without_q = parse("Dp -> Dp");
    CHECK(is_valid_in_frame(frame, without_q));
    CHECK(is_valid_in_frame(frame, with_q));
  }
}

TEST_CASE("boolean clauses agree with classical truth tables") {
  Rng rng(kDefaultSeed + 3);
  const std::vector<std::string> atoms = {"p", "q"};
  for (int i = 0; i < 300; ++i) {
    const Model m = random_model(rng, 1 + static_cast<int>(rng.below(4)), atoms);
    const Formula a = random_formula(rng, 4, atoms, true);
    const Formula b = random_formula(rng, 4, atoms, true);
    const StateSet full = m.frame().full_set();
    const StateSet sa = truth_set(m, a);
    const StateSet sb = truth_set(m, b);
    CHECK(truth_set(m, Formula::lnot(a)) == (full & ~sa));
    CHECK(truth_set(m, Formula::land(a, b)) == (sa & sb));
    CHECK(truth_set(m, Formula::lor(a, b)) == (sa | sb));
    CHECK(truth_set(m, Formula::imp(a, b)) == ((full & ~sa) | sb));
    CHECK(truth_set(m, Formula::iff(a, b)) == (full & ~(sa ^ sb)));
  }
}

TEST_CASE("on z-frames Box and Delta coincide") {
  Rng rng(kDefaultSeed + 4);
  const std::vector<std::string> atoms = {"p", "q"};
  int z_frames_seen = 0;
  for (int i = 0; i < 400; ++i) {
    const Model m = random_model(rng, 1 + static_cast<int>(rng.below(3)), atoms);
    if (!check_property(m.frame(), PropertySet::from_flags("z"))) continue;
    ++z_frames_seen;
    const Formula f = random_formula(rng, 3, atoms, false);
    CHECK(truth_set(m, Formula::box(f)) == truth_set(m, Formula::delta(f)));
  }
  CHECK(z_frames_seen > 0);
}

TEST_CASE("tautology instances are valid on every small frame") {
  Rng rng(kDefaultSeed + 5);
  const std::vector<std::string> atoms = {"p", "q"};
  int tautologies_seen = 0;
  for (int i = 0; i < 400; ++i) {
    const Formula f = random_formula(rng, 3, atoms, false);
    if (!is_tautology_instance(f)) continue;
    ++tautologies_seen;
    bool valid = true;
    for (int n = 1; n <= 2 && valid; ++n) {
      enumerate_frames(n, PropertySet{}, [&](const Frame& frame) {
        valid = is_valid_in_frame(frame, f);
        return valid;
      });
    }
    CHECK(valid);
  }
  CHECK(tautologies_seen > 5);
}

TEST_CASE("class-level search finds the recorded verdicts") {
  const SearchMode exhaustive = SearchMode::exhaustive();

  const ClassVerdict dm = is_valid_on_class(
      PropertySet::from_flags("m"),
      parse("Dp -> D(p | q) | D(~p | r)"), 2, exhaustive);
  CHECK(dm.valid_up_to_bound);

  const ClassVerdict dc = is_valid_on_class(PropertySet::from_flags("c"),
                                            parse("Dp & D~p -> D(p & ~p)"), 2, exhaustive);
  REQUIRE_FALSE(dc.valid_up_to_bound);
  REQUIRE(dc.witness.has_value());
  CHECK(check_property(dc.witness->model.frame(), PropertySet::from_flags("c")));
  CHECK_FALSE(eval(dc.witness->model, dc.witness->state, parse("Dp & D~p -> D(p & ~p)")));

  const ClassVerdict sdm = is_valid_on_class(PropertySet::from_flags("mz"),
                                             parse("Dp -> D(p | q)"), 2, exhaustive);
  CHECK(sdm.valid_up_to_bound);
}

TEST_CASE("class-level search respects its bounds") {
  CHECK_THROWS_AS(
      is_valid_on_class(PropertySet{}, parse("p"), 4, SearchMode::exhaustive()),
      BoundExceeded);
  CHECK_THROWS_AS(
      is_valid_on_class(PropertySet{}, parse("p"), 6, SearchMode::sample(10, 1)),
      BoundExceeded);
  CHECK_THROWS_AS(is_valid_on_class(PropertySet{}, parse("p"), 0, SearchMode::exhaustive()),
                  std::invalid_argument);
}

TEST_CASE("model text format round trips") {
  const Model m = fixture_model("cn_not_dc");
  const Model back = parse_model(to_text(m));
  CHECK(back == m);

  // Order-insensitive and comment-tolerant.
  const Model shuffled = parse_model("V p: s\n# a comment\nN s: {s}\nstates: s t\n");
  CHECK(shuffled.frame().state_index("t") == 1);
  CHECK(shuffled.value_of("p") == 0b01u);
  CHECK(shuffled.frame().neighborhoods(1).empty());

  // The empty subset is written {} and differs from an empty collection.
  const Model with_empty = parse_model("states: s\nN s: {}\n");
  CHECK(with_empty.frame().neighborhoods(0) == std::vector<StateSet>{0});
}

TEST_CASE("model text format rejects malformed input") {
  CHECK_THROWS_AS(parse_model("N s: {s}\n"), ModelFormatError);           // no states line
  CHECK_THROWS_AS(parse_model("states: s\nN t: {}\n"), ModelFormatError);  // unknown state
  CHECK_THROWS_AS(parse_model("states: s\nV p: t\n"), ModelFormatError);
  CHECK_THROWS_AS(parse_model("states: s\nstates: s\n"), ModelFormatError);
  CHECK_THROWS_AS(parse_model("states: s\nN s: {s\n"), ModelFormatError);
  CHECK_THROWS_AS(parse_model("states: s\nN s: {s} junk\n"), ModelFormatError);
  CHECK_THROWS_AS(parse_model("states: s\nV phi: s\n"), ModelFormatError);
  CHECK_THROWS_AS(parse_model("states: s\nN s: {s}\nN s: {}\n"), ModelFormatError);
  try {
    parse_model("states: s\nN s: {s\n");
    FAIL("expected ModelFormatError");
  } catch (const ModelFormatError& err) {
    CHECK(err.line == 2);
  }
}

TEST_CASE("frames validate their construction") {
  CHECK_THROWS_AS(Frame({}, {}), std::invalid_argument);
  CHECK_THROWS_AS(Frame({"s", "s"}, {{}, {}}), std::invalid_argument);
  CHECK_THROWS_AS(Frame({"s"}, {{0b10}}), std::invalid_argument);  // not a subset
  CHECK_THROWS_AS(Frame({"s"}, {{}, {}}), std::invalid_argument);
  const std::vector<std::string> many(31, "s");
  CHECK_THROWS_AS(Frame(many, std::vector<std::vector<StateSet>>(31)), BoundExceeded);
  // Duplicate subsets collapse (set semantics).
  const Frame f({"s"}, {{1, 1, 0, 1}});
  CHECK(f.neighborhoods(0) == std::vector<StateSet>{0, 1});
}
