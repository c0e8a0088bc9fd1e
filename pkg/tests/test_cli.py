from __future__ import annotations

import json
import subprocess
import sys

import pytest

from srkit import __version__
from srkit.cli import main
from srkit.complex import format_sc, parse_sc
from srkit.families import FAMILIES, hibi_cycle, moebius, rp2

PENTAGON = format_sc(hibi_cycle(3), comment="pentagon")


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def pentagon(tmp_path):
    p = tmp_path / "pentagon.sc"
    p.write_text(PENTAGON)
    return str(p)


def test_props_json(capsys, pentagon):
    code, out, _ = run(capsys, "props", pentagon, "--field", "q")
    rep = json.loads(out)
    assert code == 0 and rep["schema_version"] == 1
    assert (rep["d"], rep["c"], rep["qLinear"], rep["h"], rep["minMultTypeQ"]) == (3, 2, True, 1, True)


def test_props_text(capsys, pentagon):
    code, out, _ = run(capsys, "props", pentagon, "--text")
    assert code == 0 and "minMultTypeQ: True" in out


def test_json_is_byte_identical(capsys, pentagon):
    first = run(capsys, "props", pentagon, "--field", "gf:2")[1]
    second = run(capsys, "props", pentagon, "--field", "gf:2")[1]
    assert first == second


def test_betti_and_homology(capsys, pentagon):
    code, out, _ = run(capsys, "betti", pentagon)
    assert code == 0 and json.loads(out)["betti"] == [[1, 3, 5], [2, 4, 5], [3, 5, 1]]
    code, out, _ = run(capsys, "homology", pentagon)
    assert json.loads(out)["dims"] == {"-1": 0, "0": 0, "1": 1, "2": 0}
    code, out, _ = run(capsys, "betti", pentagon, "--text")
    assert out.splitlines()[0].split() == ["0", "1", "2", "3"]


def test_dual(capsys, pentagon):
    code, out, _ = run(capsys, "dual", pentagon)
    assert code == 0 and parse_sc(out) == hibi_cycle(3).alexander_dual()


@pytest.mark.parametrize(
    "family,params",
    [("hibi-cycle", ["4"]), ("hanano", ["7"]), ("rp2", []), ("moebius", []), ("cyclic-dual", ["4", "3"]),
     ("skeleton", ["6", "3"]), ("terai", ["6"]), ("bruns-hibi-dual", ["6"]), ("disjoint-union-q2", ["7", "3", "2"])],
)
def test_gen_props_round_trip(capsys, tmp_path, family, params):
    out_file = tmp_path / "g.sc"
    code, _, _ = run(capsys, "gen", family, *params, "--out", str(out_file))
    assert code == 0
    code, out, _ = run(capsys, "props", str(out_file))
    assert code == 0 and json.loads(out)["n"] == parse_sc(out_file.read_text()).n


def test_gen_to_stdout(capsys):
    code, out, _ = run(capsys, "gen", "moebius")
    assert code == 0 and parse_sc(out) == moebius()
    assert set(FAMILIES)  # registry drives the argparse choices


def test_cover(capsys, tmp_path):
    src = tmp_path / "m.sc"
    src.write_text(format_sc(moebius()))
    dest = tmp_path / "cover.sc"
    code, out, _ = run(capsys, "cover", str(src), "--field", "gf:2", "--out", str(dest))
    payload = json.loads(out)
    assert code == 0 and len(payload["added_facets"]) == 1
    assert len(parse_sc(dest.read_text()).facets) == 10


def test_sandwich(capsys, tmp_path):
    lo, hi = tmp_path / "lo.sc", tmp_path / "hi.sc"
    lo.write_text(format_sc(moebius()))
    hi.write_text(format_sc(rp2()))
    code, out, _ = run(capsys, "sandwich", str(lo), str(hi), "10")
    assert code == 0 and len(json.loads(out)["facets"]) == 10
    code, _, err = run(capsys, "sandwich", str(hi), str(lo), "10")
    assert code == 2 and "error [" in err


def test_explore_writes_witness(capsys, tmp_path):
    code, out, _ = run(capsys, "explore", "3", "3", "3", "2", "--seed", "1", "--out-dir", str(tmp_path))
    payload = json.loads(out)
    assert code == 0 and payload["status"] == "Realized"
    witness = tmp_path / payload["witness_file"]
    assert parse_sc(witness.read_text()).n == 6


def test_explore_infeasible(capsys, tmp_path):
    code, out, _ = run(capsys, "explore", "2", "3", "3", "5", "--out-dir", str(tmp_path))
    assert code == 0 and json.loads(out)["status"] == "InfeasibleByBound"
    assert not list(tmp_path.iterdir())


def test_verify_bundle(capsys):
    code, out, _ = run(capsys, "verify", "ex5.7", "--field", "gf:2")
    payload = json.loads(out)
    assert code == 0 and payload["ok"] and payload["checked"] > 0
    code, out, _ = run(capsys, "verify", "rmk2.9", "--text")
    assert code == 0 and "0 failures" in out


def test_parse_error_reports_position(capsys, tmp_path):
    bad = tmp_path / "bad.sc"
    bad.write_text("vertices 3\n0 1\n1 x\n")
    code, _, err = run(capsys, "props", str(bad))
    assert code == 2 and "E_PARSE" in err and "line 3" in err


def test_usage_errors(capsys, pentagon, tmp_path):
    assert run(capsys, "props", pentagon, "--max-n", "4")[0] == 2
    assert run(capsys, "props", str(tmp_path / "missing.sc"))[0] == 2
    assert run(capsys, "gen", "hanano", "3")[0] == 2
    code, _, err = run(capsys, "props", pentagon, "--field", "gf:4")
    assert code == 2 and "not prime" in err
    with pytest.raises(SystemExit) as info:
        main(["nonsense"])
    assert info.value.code == 2


def test_version_and_entry_point():
    proc = subprocess.run([sys.executable, "-m", "srkit.cli", "--version"], capture_output=True, text=True)
    assert proc.returncode == 0 and __version__ in proc.stdout
