import os
import subprocess
import sys

import pytest

from lathull import fileformat
from lathull.cli import main
from lathull.completion import verify_hull
from lathull.order_core import LIMITS, LatticeMap

INPUTS = os.path.join(os.path.dirname(__file__), os.pardir, "inputs")


def inp(name):
    return os.path.join(INPUTS, name)


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    rows = {}
    for line in out.split("\n\n", 1)[0].splitlines():
        if " = " in line:
            k, v = line.split(" = ", 1)
            rows.setdefault(k, v)
    return code, out, err, rows


def test_check_m3(capsys):
    code, _, _, rows = run(capsys, "check", inp("m3.lat"))
    assert code == 0
    assert rows["lattice"] == "true" and rows["distributive"] == "false" and rows["heyting"] == "false"


def test_hull_n5_and_reparse(capsys, tmp_path):
    out_path = str(tmp_path / "h.lat")
    code, out, _, rows = run(capsys, "hull", inp("n5.lat"), "-o", out_path)
    assert code == 0 and rows["hull_size"] == "6"
    assert any(k.startswith("resolution.") for k in rows)
    L = fileformat.read(inp("n5.lat")).lattice()
    M = fileformat.read(out_path).lattice()
    assert M.n == 6
    e = LatticeMap(L, M, tuple(M.idx(rows[f"embedding.{x}"]) for x in L.labels))
    assert verify_hull(L, M, e).is_hull
    # the document printed after the report is the same file
    assert out.split("\n\n", 1)[1] == open(out_path).read()


@pytest.mark.parametrize("name", ["m3.lat", "n5.lat", "chain2.lat", "mo2.lat", "o6.lat", "square3.lat"])
def test_every_emitted_hull_passes_verification(capsys, tmp_path, name):
    out_path = str(tmp_path / "h.lat")
    code, _, _, rows = run(capsys, "hull", inp(name), "-o", out_path)
    assert code == 0
    L = fileformat.read(inp(name)).lattice()
    M = fileformat.read(out_path).lattice()
    e = LatticeMap(L, M, tuple(M.idx(rows[f"embedding.{x}"]) for x in L.labels))
    assert verify_hull(L, M, e).is_hull


def test_cartan_square(capsys):
    code, _, err, rows = run(capsys, "cartan", inp("square3.lat"))
    assert code == 0, err
    assert rows["faithful"] == "false"
    assert rows["superposition_states{a,a'}"] == "{q}"
    assert rows["superposition_properties{a,a'}"] == "{}"
    assert rows["states_without_properties"] == "{a,a'}"
    assert rows["disjunctive_hull_size"] == "5"


def test_cartan_weak_topology(capsys):
    code, _, _, rows = run(capsys, "cartan", inp("topology.lat"))
    assert code == 0 and rows["weak"] == "true" and rows["completion_added"] == "0"


def test_ortho_o6(capsys):
    code, _, _, rows = run(capsys, "ortho", inp("o6.lat"))
    assert code == 0
    assert rows["orthomodular"] == "false" and rows["orthomodular_witness"] == "(a,b)"
    assert "(b,a)" in rows["sasaki.b"]
    assert rows["sasaki_iff_orthomodular"] == "true"
    assert rows["roundtrip_forward"] == rows["roundtrip_reverse"] == "true"


def test_ortho_mo2(capsys):
    code, _, _, rows = run(capsys, "ortho", inp("mo2.lat"))
    assert code == 0 and rows["orthomodular"] == "true"
    assert rows["orthogonal.a"] == "{0,a'}"


def test_dhull_and_macneille(capsys, tmp_path):
    code, _, _, rows = run(capsys, "dhull", inp("square3.lat"))
    assert code == 0 and rows["disjunctive_hull_size"] == "5"
    code, _, _, rows = run(capsys, "macneille", inp("m3.lat"), "-o", str(tmp_path / "m.lat"))
    assert code == 0 and rows["already_complete"] == "true"


def test_search_commands(capsys):
    code, _, _, rows = run(capsys, "search", "--list")
    assert code == 0 and "faithfulness-agree" in rows
    code, out, _, rows = run(capsys, "search", "states-without-properties", "--max-elements", "4", "--max-states", "3")
    assert code == 0 and rows["found"] == "true"
    assert "states p1 p2 p3" in out
    code, _, _, rows = run(capsys, "search", "faithful", "--mode", "count", "--sampled", "--samples", "20", "--seed", "2")
    assert code == 0 and rows["certificate"].startswith("sampled seed=2")


def test_tabular_format(capsys):
    code, out, _, _ = run(capsys, "check", inp("chain2.lat"), "--format", "tabular")
    assert code == 0
    assert all(" | " in line for line in out.strip().splitlines())


def test_failing_claim_exits_one(capsys):
    code, _, err, rows = run(capsys, "search", "faithfulness-agree", "--mode", "counterexample", "--max-elements", "2")
    assert code == 0 and rows["no_counterexample"] == "true"
    code, _, err, rows = run(capsys, "search", "distributive", "--mode", "counterexample", "--max-elements", "5")
    assert code == 1 and rows["no_counterexample"] == "false"
    assert "failed: no_counterexample" in err


def test_input_errors_exit_two(capsys, write_doc):
    code, _, err, _ = run(capsys, "check", write_doc("elements 0 1\ncover 0 z\n"))
    assert code == 2 and "line 2" in err
    code, _, err, _ = run(capsys, "check", write_doc("elements a b\n"))
    assert code == 2 and "lattice" in err
    code, _, err, _ = run(capsys, "cartan", inp("m3.lat"))
    assert code == 2 and "states" in err
    code, _, err, _ = run(capsys, "ortho", inp("m3.lat"))
    assert code == 2
    bad = write_doc("elements 0 a b 1\ncover 0 a\ncover 0 b\ncover a 1\ncover b 1\nstates p\nmu 0 :\nmu a : p\nmu b : p\nmu 1 : p\n")
    code, _, err, _ = run(capsys, "cartan", bad)
    assert code == 2 and "not a valid Cartan map" in err
    code, _, err, _ = run(capsys, "search")
    assert code == 2 and "predicate" in err


def test_cap_fails_closed_with_hint(capsys):
    code, out, err, _ = run(capsys, "hull", inp("n5.lat"), "--max-subset-bits", "3")
    assert code == 2 and out == ""
    assert "raise --max-subset-bits" in err
    assert LIMITS.hull == 16


def test_module_entry_point():
    r = subprocess.run(
        [sys.executable, "-m", "lathull", "check", inp("chain2.lat")], capture_output=True, text=True
    )
    assert r.returncode == 0 and "distributive = true" in r.stdout
