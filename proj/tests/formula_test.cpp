#include "contingent/formula.hpp"

#include <doctest.h>

#include "contingent/random.hpp"

using namespace contingent;

TEST_CASE("parser handles the grammar cases") {
  const Formula f = parse("D(p & q) -> Dp");
  REQUIRE(f.is(Conn::Imp));
  CHECK(f.left() == Formula::delta(Formula::land(Formula::atom("p"), Formula::atom("q"))));
  CHECK(f.right() == Formula::delta(Formula::atom("p")));

  const Formula equ = parse("Dp <-> D~p");
  REQUIRE(equ.is(Conn::Iff));
  CHECK(equ.left() == Formula::delta(Formula::atom("p")));
  CHECK(equ.right() == Formula::delta(Formula::lnot(Formula::atom("p"))));

  CHECK(parse("T") == Formula::top());
  CHECK(parse("F") == Formula::bot());
  CHECK(parse("Bp") == Formula::box(Formula::atom("p")));
  CHECK(parse("some_atom1") == Formula::atom("some_atom1"));
}

TEST_CASE("operator precedence and associativity") {
  // <->, ->, |, & from loosest to tightest; -> right-associative.
  CHECK(parse("p -> q -> r") == parse("p -> (q -> r)"));
  CHECK(parse("p & q | r") == parse("(p & q) | r"));
  CHECK(parse("p | q -> r") == parse("(p | q) -> r"));
  CHECK(parse("p <-> q -> r") == parse("p <-> (q -> r)"));
  CHECK(parse("p & q & r") == parse("(p & q) & r"));
  CHECK(parse("~Dp") == Formula::lnot(Formula::delta(Formula::atom("p"))));
  CHECK(parse("Dp & q") == Formula::land(Formula::delta(Formula::atom("p")), Formula::atom("q")));
  CHECK(parse("p <-> q <-> r") == parse("(p <-> q) <-> r"));
}

TEST_CASE("unicode aliases are accepted on input") {
  CHECK(parse("Δp ↔ Δ¬p") == parse("Dp <-> D~p"));
  CHECK(parse("□(p ∧ q) → □p ∨ ⊥") == parse("B(p & q) -> Bp | F"));
  CHECK(parse("⊤") == Formula::top());
}

TEST_CASE("syntax errors carry 1-based columns") {
  CHECK_THROWS_WITH_AS(parse("D(p"), "expected ')'", ParseError);
  try {
    parse("D(p");
    FAIL("expected ParseError");
  } catch (const ParseError& err) {
    CHECK(err.column == 4);
  }
  try {
    parse("p -> ");
    FAIL("expected ParseError");
  } catch (const ParseError& err) {
    CHECK(err.column == 6);
  }
  CHECK_THROWS_AS(parse("p @ q"), ParseError);
  CHECK_THROWS_AS(parse("(p"), ParseError);
  CHECK_THROWS_AS(parse("p q"), ParseError);
  CHECK_THROWS_AS(parse(""), ParseError);
}

TEST_CASE("printer produces the expected renderings") {
  CHECK(to_string(Formula::delta(Formula::top())) == "DT");
  CHECK(to_string(Formula::atom("p")) == "p");
  CHECK(to_string(Formula::lor(Formula::box(Formula::atom("p")),
                               Formula::box(Formula::lnot(Formula::atom("p"))))) == "Bp | B~p");
  CHECK(to_string(parse("D(p&q) -> Dp")) == "D(p & q) -> Dp");
  CHECK(to_string(parse("p -> (q -> r)")) == "p -> q -> r");
  CHECK(to_string(parse("(p -> q) -> r")) == "(p -> q) -> r");
  CHECK(to_string(parse("p | (q & r)")) == "p | q & r");
  CHECK(to_string(parse("~(p & q)")) == "~(p & q)");
}

TEST_CASE("parse/print round trip on random formulas") {
  Rng rng(kDefaultSeed);
  const std::vector<std::string> atoms = {"p", "q", "r", "s1"};
  for (int i = 0; i < 2000; ++i) {
    const Formula f = random_formula(rng, 6, atoms, /*with_box=*/true);
    CAPTURE(to_string(f));
    CHECK(parse(to_string(f)) == f);
  }
}

TEST_CASE("modal depth") {
  CHECK(parse("p & q").modal_depth() == 0);
  CHECK(parse("Dp").modal_depth() == 1);
  CHECK(parse("D(p & Dq)").modal_depth() == 2);
  CHECK(parse("Bp & D(Dq | r)").modal_depth() == 2);
}

TEST_CASE("atom collection and metavariables") {
  const Formula schema = parse("Dphi -> D(phi | psi)");
  CHECK(schema.metavariables() == std::vector<std::string>{"phi", "psi"});
  CHECK(schema.atoms().empty());
  CHECK(schema.has_metavariables());

  const Formula object = parse("Dp -> D(p | q)");
  CHECK(object.atoms() == std::vector<std::string>{"p", "q"});
  CHECK_FALSE(object.has_metavariables());
}

TEST_CASE("instantiate replaces metavariables simultaneously") {
  const Formula equ = parse("Dphi <-> D~phi");
  CHECK(instantiate(equ, {{"phi", parse("p & q")}}) == parse("D(p&q) <-> D~(p&q)"));

  const Formula dc = parse("Dphi & Dpsi -> D(phi & psi)");
  CHECK(instantiate(dc, {{"phi", parse("p")}, {"psi", parse("q")}}) ==
        parse("(Dp & Dq) -> D(p&q)"));

  // A binding that itself mentions a metavariable name is not re-expanded.
  const Formula tricky = instantiate(parse("Dphi"), {{"phi", Formula::atom("psi")}});
  CHECK(tricky == Formula::delta(Formula::atom("psi")));
}

TEST_CASE("instantiate reports unbound metavariables") {
  const Formula dm = parse("Dphi -> D(phi | psi) | D(~phi | chi)");
  CHECK_THROWS_AS(instantiate(dm, {{"phi", parse("p")}}), InstantiationError);
  CHECK_NOTHROW(
      instantiate(dm, {{"phi", parse("p")}, {"psi", parse("q")}, {"chi", parse("r")}}));
}

TEST_CASE("instantiation leaves no metavariables behind") {
  Rng rng(kDefaultSeed + 1);
  const Formula dm = parse("Dphi -> D(phi | psi) | D(~phi | chi)");
  const std::vector<std::string> atoms = {"p", "q"};
  for (int i = 0; i < 200; ++i) {
    const Substitution subst = {{"phi", random_formula(rng, 3, atoms, false)},
                                {"psi", random_formula(rng, 3, atoms, false)},
                                {"chi", random_formula(rng, 3, atoms, false)}};
    CHECK_FALSE(instantiate(dm, subst).has_metavariables());
  }
}

TEST_CASE("tautology instances") {
  CHECK(is_tautology_instance(parse("Dp -> Dp")));
  CHECK(is_tautology_instance(parse("((p -> q) & (~p -> q)) <-> q")));
  CHECK_FALSE(is_tautology_instance(parse("Dp -> D~p")));  // distinct abstracted atoms
  CHECK(is_tautology_instance(parse("T")));
  CHECK_FALSE(is_tautology_instance(parse("F")));
  CHECK(is_tautology_instance(parse("Bp | ~Bp")));
  CHECK_FALSE(is_tautology_instance(parse("Dp | D~p")));
  CHECK(is_tautology_instance(parse("D(p & q) -> D(p & q)")));
  // Syntactically equal modal subformulas share one abstracted atom.
  CHECK(is_tautology_instance(parse("D(p & q) & r -> D(p & q)")));
  CHECK_FALSE(is_tautology_instance(parse("D(p & q) -> D(q & p)")));
}

TEST_CASE("atom names are validated") {
  CHECK_THROWS_AS(Formula::atom("P"), std::invalid_argument);
  CHECK_THROWS_AS(Formula::atom(""), std::invalid_argument);
  CHECK_THROWS_AS(Formula::atom("1p"), std::invalid_argument);
  CHECK_NOTHROW(Formula::atom("p_1"));
}
