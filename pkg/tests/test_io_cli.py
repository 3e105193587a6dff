import json
import subprocess
import sys

import pytest

from sftkit import BiPoint, CylinderFunction, EvPerPoint, full_shift
from sftkit.cli import main
from sftkit.errors import ParseError
from sftkit import io as sio

GOLDEN = "sft v1\nvertices 2\nedge 0 0\nedge 0 1\nedge 1 0\n"
FULL2 = "sft v1\nvertices 2\nedge 0 0\nedge 0 1\nedge 1 0\nedge 1 1\n"
PE = ("oe v1\ndomain full2.sft\ncodomain full2.sft\n"
      "map 0 -> 10\nmap 10 -> 0\nmap 11 -> 11\n")


@pytest.fixture
def tree(tmp_path):
    (tmp_path / "golden.sft").write_text(GOLDEN)
    (tmp_path / "full2.sft").write_text(FULL2)
    (tmp_path / "pe.oe").write_text(PE)
    (tmp_path / "fn.fn").write_text("fn depth=2\n00 1\n01 -1\n10 2\n11 0\n")
    (tmp_path / "neg.fn").write_text("fn depth=1\n0 -1\n1 3\n")
    return tmp_path


def test_presentation_roundtrip(gm):
    text = sio.format_presentation(gm)
    again = sio.parse_presentation(text)
    assert again == gm
    assert sio.format_presentation(again) == text


def test_presentation_parse_errors():
    with pytest.raises(ParseError):
        sio.parse_presentation("vertices 2\n")
    with pytest.raises(ParseError):
        sio.parse_presentation("sft v1\nvertices 2\nedge 0 5\n")
    with pytest.raises(ParseError):
        sio.parse_presentation("sft v1\nvertices 2\nedge 0 0\nedge 0 1\n")


def test_cylinder_function_roundtrip(full2):
    f = CylinderFunction.from_values(full2, {"00": 1, "01": -1,
                                             "10": 2, "11": 0})
    text = sio.format_cylinder_function(full2, f)
    again = sio.parse_cylinder_function(text, full2)
    assert again == f
    assert sio.format_cylinder_function(full2, again) == text


def test_point_syntax(full2):
    p = sio.parse_point(full2, "1/0")
    assert p == EvPerPoint.make(full2, (1,), (0,))
    assert sio.format_point(full2, p) == "1/0"
    q = sio.parse_point(full2, "-/01")
    assert q == EvPerPoint.make(full2, (), (0, 1))
    b = sio.parse_bipoint(full2, "0|11|01@2")
    assert b == BiPoint.make(full2, (0,), (1, 1), (0, 1), 2)


def test_oe_roundtrip(tree):
    h = sio.read_orbit_equivalence(str(tree / "pe.oe"))
    assert h.domain == full_shift(2)
    text = sio.format_orbit_equivalence(h, "full2.sft", "full2.sft")
    (tree / "again.oe").write_text(text)
    h2 = sio.read_orbit_equivalence(str(tree / "again.oe"))
    x = EvPerPoint.make(h.domain, (), (0,))
    assert h(x) == h2(x)


def test_oe_composition_file(tree):
    (tree / "comp.oe").write_text("oe v1\ncompose pe.oe pe.oe\n")
    comp = sio.read_orbit_equivalence(str(tree / "comp.oe"))
    single = sio.read_orbit_equivalence(str(tree / "pe.oe"))
    x = EvPerPoint.make(comp.domain, (1, 0), (0, 1))
    assert comp(x) == single(single(x))


def test_cli_invariants(tree, capsys):
    assert main(["invariants", str(tree / "golden.sft")]) == 0
    assert capsys.readouterr().out.strip() == "snf: 1 1 / det: -1"


def test_cli_language(tree, capsys):
    assert main(["language", str(tree / "golden.sft"), "-m", "2"]) == 0
    assert capsys.readouterr().out.split() == ["00", "01", "10"]


def test_cli_tower(tree, capsys):
    rc = main(["tower", str(tree / "golden.sft"), "--f", "const:2",
               "--check-invariants", "--out", str(tree / "t.sft")])
    assert rc == 0
    assert "det preserved: true" in capsys.readouterr().out
    t = sio.read_presentation(str(tree / "t.sft"))
    assert len(t.labels) == 4


def test_cli_positive_exit_codes(tree, capsys):
    assert main(["positive", str(tree / "full2.sft"),
                 "--f", str(tree / "fn.fn")]) == 0
    out = capsys.readouterr().out
    assert "certificate positive" in out
    assert main(["positive", str(tree / "full2.sft"),
                 "--f", str(tree / "neg.fn")]) == 1
    assert "negative-cycle sum=-1" in capsys.readouterr().out


def test_cli_pipeline_and_claims(tree, capsys):
    assert main(["pipeline", str(tree / "pe.oe")]) == 0
    capsys.readouterr()
    assert main(["verify-claims", str(tree / "pe.oe"), "--samples", "3"]) == 0


def test_cli_parse_error_exit_2(tree, capsys):
    (tree / "broken.sft").write_text("nonsense\n")
    assert main(["invariants", str(tree / "broken.sft")]) == 2
    assert main(["invariants", str(tree / "missing.sft")]) == 2


def test_cli_json_deterministic(tree, capsys):
    outs = []
    for _ in range(2):
        assert main(["pipeline", str(tree / "pe.oe"), "--json",
                     "--seed", "3"]) == 0
        outs.append(capsys.readouterr().out)
    assert outs[0] == outs[1]
    payload = json.loads(outs[0])
    assert payload["claims_failed"] == 0


def test_cli_move_and_groupoid_check(tree, capsys):
    rc = main(["move", str(tree / "full2.sft"), "--kind", "out_split",
               "--vertex", "0", "--parts", "0;1"])
    assert rc == 0
    out = capsys.readouterr().out
    assert "vertices 3" in out
    assert main(["move", str(tree / "golden.sft"), "--kind", "attach_head",
                 "--vertex", "0"]) == 2
    capsys.readouterr()
    assert main(["groupoid-check", str(tree / "golden.sft"),
                 "--samples", "5"]) == 0


def test_console_script_runs():
    proc = subprocess.run([sys.executable, "-m", "sftkit.cli", "--help"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert "sftkit" in proc.stdout
