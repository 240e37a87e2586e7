import json
import pathlib

import pytest

from qbalg.cli import main

FIX = pathlib.Path(__file__).resolve().parents[1] / "src" / "qbalg" / "fixtures"
GOLDEN = pathlib.Path(__file__).parent / "golden"


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


def doc(capsys, *argv):
    code, out, err = run(capsys, *argv)
    assert code == 0, err
    return json.loads(out)


def test_check(capsys):
    d = doc(capsys, "check", FIX / "example1.qb")
    assert d["predicates"]["symmetric"] and d["n"] == 5
    d = doc(capsys, "check", FIX / "example2.qb")
    assert d["quantum_binomial_algebra"] and not d["predicates"]["braided"]


def test_orbits(capsys):
    d = doc(capsys, "orbits", FIX / "example2.qb")
    assert d["count"] == 18 and d["sizes_total"] == 64
    assert d["profile"]["q"] == 2
    d = doc(capsys, "orbits", FIX / "example3.qb", "--degree", "2")
    assert d["count"] == 10


def test_dims(capsys):
    d = doc(capsys, "dims", FIX / "example3.qb", "--max", "5")
    assert d["dim_A"] == {str(m): v for m, v in enumerate([1, 4, 10, 20, 35, 56])}
    assert d["oracles_agree"] and d["quantum_grassmann_dual"]
    assert d["dual_formula_degree3"]["holds"]


def test_pbw_single_order(capsys):
    d = doc(capsys, "pbw", FIX / "example3.qb", "--order", "t>x>z>y")
    assert d["is_pbw"] and d["overlaps"] == ["txz", "txy", "tzy", "xzy"]
    assert "xy -> zt" in d["rules"]
    d = doc(capsys, "pbw", FIX / "example2.qb", "--order", "y<z<x<t")
    assert not d["is_pbw"] and "failing_overlap" in d


def test_pbw_search(capsys):
    d = doc(capsys, "pbw", FIX / "example3.qb", "--search")
    assert d["pbw_order_count"] == 8 and len(d["pbw_orders"]) == 8


def test_graphs(capsys):
    d = doc(capsys, "graphs", FIX / "example3.qb", "--order", "txzy")
    assert d["gldim"] == 4 and d["growth_degree"] == 4
    assert d["hilbert"][:6] == [1, 4, 10, 20, 35, 56]
    assert d["tournament_relabel"] == ["y", "z", "x", "t"]
    assert "t -> x" in d["gamma_W"]


def test_harness_file(capsys):
    d = doc(capsys, "harness", FIX / "example2.qb")
    assert set(d["equivalence_matrix"]["conditions"].values()) == {False}
    d = doc(capsys, "harness", FIX / "example3.qb")
    assert set(d["equivalence_matrix"]["conditions"].values()) == {True}
    assert len(d["pbw_orders"]) == 8
    assert all(v["pbw_conditions"] == [True] * 4 for v in d["pbw_orders"].values())


def test_harness_scope(capsys, tmp_path):
    d = doc(capsys, "harness", "--scope", "fixtures", "--witness-dir", tmp_path)
    assert d["passed"] and d["scope"] == "fixtures"


def test_classify(capsys):
    d = doc(capsys, "classify", "--n", "2")
    assert d["classes"] == 1 and len(d["representatives"]) == 1
    d = doc(capsys, "classify", "--n", "3")
    assert d["classes"] == 2 and d["symmetric_classes"] == 2


def test_golden_example2(capsys):
    code, out, _ = run(capsys, "report", FIX / "example2.qb")
    assert code == 0
    assert out == (GOLDEN / "example2_report.json").read_text()
    d = json.loads(out)
    assert d["dim_A"]["3"] == 18 and d["yang_baxter"] is False
    assert d["pbw_orders"] == []


def test_report_example3(capsys):
    d = doc(capsys, "report", FIX / "example3.qb")
    assert d["pbw_order_count"] == 8 and d["yang_baxter"]


def test_report_free_algebra(capsys, tmp_path):
    p = tmp_path / "free.qb"
    p.write_text("gens a b\n")
    d = doc(capsys, "report", p, "--bound", "4")
    assert d["dim_A"] == {str(m): 2 ** m for m in range(5)}


def test_report_to_file(capsys, tmp_path):
    out = tmp_path / "r.json"
    code, text, _ = run(capsys, "check", FIX / "example3.qb", "--report", out)
    assert code == 0 and text == ""
    assert json.loads(out.read_text())["format"] == 1


@pytest.mark.parametrize("argv", [
    ("check", "/no/such/file.qb"),
    ("pbw", "EX3"),
    ("pbw", "EX3", "--order", "t>x>z"),
    ("harness",),
    ("classify", "--n", "9"),
    ("bogus",),
])
def test_input_errors_exit_2(capsys, argv):
    argv = [str(FIX / "example3.qb") if a == "EX3" else a for a in argv]
    code, _, err = run(capsys, *argv)
    assert code == 2


def test_bad_presentation_exit_2(capsys, tmp_path):
    p = tmp_path / "bad.qb"
    p.write_text("gens x y z t\nrel x*y = 0 * z*t\n")
    code, _, err = run(capsys, "check", p)
    assert code == 2 and "line 2" in err


def test_violation_exit_1(capsys, monkeypatch):
    import qbalg.report as rep
    from qbalg.errors import TheoremViolation

    def boom(*a, **k):
        raise TheoremViolation("planted")

    monkeypatch.setattr(rep, "theorem3_harness", boom)
    code, _, err = run(capsys, "harness", FIX / "example3.qb")
    assert code == 1 and "planted" in err


def test_failed_suite_exit_1(capsys, monkeypatch):
    from qbalg import harness
    monkeypatch.setitem(harness.SET_CHECKS, "q_bound", lambda qs: (False, "x"))
    code, out, _ = run(capsys, "harness", "--scope", "fixtures")
    assert code == 1 and json.loads(out)["passed"] is False


@pytest.mark.parametrize("argv", [
    ("check", "EX1"), ("orbits", "EX2"), ("dims", "EX3"),
    ("pbw", "EX3", "--search"), ("graphs", "EX3", "--order", "txzy"),
    ("harness", "EX1"), ("report", "EX2"), ("classify", "--n", "3"),
])
def test_deterministic(capsys, argv):
    argv = [str(FIX / f"example{a[-1]}.qb") if a.startswith("EX") else a for a in argv]
    first = run(capsys, *argv)
    second = run(capsys, *argv)
    assert first == second and first[0] == 0
