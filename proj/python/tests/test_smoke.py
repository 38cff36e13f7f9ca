import pytest

import contingent


def test_parse_and_print_round_trip():
    f = contingent.parse("D(p & q) -> Dp")
    assert str(f) == "D(p & q) -> Dp"
    assert contingent.parse(str(f)) == f
    assert f.modal_depth == 1
    assert f.atoms == ["p", "q"]


def test_parse_error_carries_a_message():
    with pytest.raises(ValueError):
        contingent.parse("D(p")


def test_model_eval_and_properties():
    m = contingent.load_model(contingent.fixture_text("c_not_dc"))
    assert m.states == ["s", "t"]
    assert m.eval("Dp", "s")
    assert m.eval("D~p", "s")
    assert not m.eval("D(p & ~p)", "s")
    assert m.truth_set("Dp") == ["s"]
    assert m.check_property("c")
    assert not m.check_property("m")


def test_transforms():
    m = contingent.load_model(contingent.fixture_text("c_not_dc"))
    z = m.complement()
    assert z.check_property("z")
    assert "N s: {s} {t}" in z.to_text()
    plus = m.supplement()
    assert plus.check_property("m")
    assert contingent.star_translate(contingent.parse("Dp")) == contingent.parse("Bp | B~p")


def test_instantiate_and_tautologies():
    dc = contingent.schema_pattern("dC")
    inst = contingent.instantiate(
        dc, {"phi": contingent.parse("p"), "psi": contingent.parse("q")}
    )
    assert inst == contingent.parse("Dp & Dq -> D(p & q)")
    assert contingent.is_tautology_instance(contingent.parse("Dp -> Dp"))
    assert not contingent.is_tautology_instance(contingent.parse("Dp -> D~p"))


def test_check_derivation():
    result = contingent.check_derivation(contingent.fixture_text("dc_from_dcprime"))
    assert result.ok
    bad = "system: E-delta\n1. Dp & Dq -> D(p & q)  axiom dC phi=p; psi=q\n"
    result = contingent.check_derivation(bad)
    assert not result.ok
    assert result.line == 1


def test_find_countermodel_and_reproducibility():
    hit = contingent.find_countermodel("dC", props="c", max_size=2)
    assert hit.falsified
    witness = contingent.load_model(hit.witness_text)
    assert witness.check_property("c")
    assert not witness.eval("Dp & Dq -> D(p & q)", hit.witness_state)

    a = contingent.find_countermodel("dC", props="c", max_size=3, exhaustive=False,
                                     samples=500, seed=11)
    b = contingent.find_countermodel("dC", props="c", max_size=3, exhaustive=False,
                                     samples=500, seed=11)
    assert a.machine_line() == b.machine_line()

    clean = contingent.find_countermodel("dN", props="n", max_size=2)
    assert not clean.falsified
    assert clean.witness_text is None


def test_registries_and_lattice():
    assert "dEqu" in contingent.schema_names()
    assert "R-delta" in contingent.system_names()
    assert set(contingent.system_schemas("R-delta")) == {"dEqu", "dM", "dC"}
    edges = contingent.lattice_edges()
    assert ("E-delta", "EN-delta") in edges
    assert ("ECNZ-delta", "K-delta") in edges
    assert len(edges) == 23


def test_frame_count_closed_form():
    assert contingent.frame_count(1, "") == 4
    assert contingent.frame_count(2, "") == 256


def test_fixture_suite_small_sample():
    items = contingent.fixture_suite(samples=200)
    assert len(items) == 11
    assert all(item["pass"] for item in items)
