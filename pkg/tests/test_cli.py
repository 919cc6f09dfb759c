import io
import json
import os
import subprocess
import sys
from pathlib import Path

import pytest

from wadabiq import corpus
from wadabiq.cli import run

GOLDEN = Path(__file__).parent / "golden" / "cli.json"

# (label, argv suffix) replayed on every corpus entry
PER_ENTRY = [
    ("count-w2-f20", ["color-count", "--biquandle", "w2", "--group", "sd:5:4:2"]),
    ("count-w1-s3", ["color-count", "--biquandle", "w1", "--group", "s:3"]),
    ("count-core-s3", ["color-count", "--biquandle", "core", "--group", "s:3"]),
    ("count-z5", ["color-count", "--biquandle", "abelian", "--n", "5"]),
    ("state-sum-z3", ["state-sum", "--biquandle", "abelian", "--n", "3"]),
    ("state-sum-z5-mochizuki", ["state-sum", "--biquandle", "abelian", "--n", "5",
                                "--cocycle", "mochizuki"]),
    ("wada-group-w2", ["wada-group", "--biquandle", "w2"]),
    ("wada-group-w2-simplified", ["wada-group", "--biquandle", "w2", "--simplify"]),
    ("abelianization-w1", ["abelianization", "--biquandle", "w1"]),
    ("abelianization-w2", ["abelianization", "--biquandle", "w2"]),
    ("abelianization-core", ["abelianization", "--biquandle", "core"]),
    ("hom-count-w2-d4", ["hom-count", "--biquandle", "w2", "--group", "d:4"]),
    ("alex-numbering", ["alex-numbering"]),
    ("span", ["span"]),
    ("obstruct-z3", ["obstruct", "--n", "3"]),
    ("obstruct-z", ["obstruct"]),
]


def call(argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(argv, out, err)
    return code, out.getvalue(), err.getvalue()


def golden_runs():
    for e in corpus.entries():
        for label, suffix in PER_ENTRY:
            yield f"{e.name}/{label}", suffix + ["--name", e.name]


def _current():
    table = {}
    for key, argv in golden_runs():
        code, text, _ = call(argv)
        assert code == 0, key
        table[key] = text
    return table


if os.environ.get("WADABIQ_UPDATE_GOLDEN"):
    GOLDEN.parent.mkdir(exist_ok=True)
    GOLDEN.write_text(json.dumps(_current(), indent=1, sort_keys=True) + "\n")


# documented examples -------------------------------------------------------------------

def test_kishino_w2_count():
    assert call(["color-count", "--name", "kishino", "--biquandle", "w2",
                 "--group", "sd:5:4:2"]) == (0, "40\n", "")


def test_unknot_w2_count():
    assert call(["color-count", "--braid", "n=1", "--biquandle", "w2",
                 "--group", "sd:5:4:2"]) == (0, "20\n", "")


def test_vt22_state_sum():
    code, out, _ = call(["state-sum", "--name", "vt2_2", "--biquandle", "abelian", "--n", "3",
                         "--cocycle", "additive"])
    assert (code, out) == (0, "1 + t + t^2 (mod 3)\n")


def test_trefoil_state_sum_and_gauss_input():
    code, out, _ = call(["state-sum", "--gauss", "O1+ U2+ O3+ U1+ O2+ U3+",
                         "--biquandle", "abelian", "--n", "3"])
    assert (code, out) == (0, "9 (mod 3)\n")


def test_wada_group_text():
    code, out, _ = call(["wada-group", "--name", "unknot", "--biquandle", "w2"])
    assert (code, out) == (0, "<g0 | >\n")
    code, out, _ = call(["abelianization", "--name", "hopf_virtual", "--biquandle", "w1"])
    assert code == 0 and "Z_2" in out


def test_axioms_command():
    code, out, _ = call(["axioms", "--biquandle", "w2", "--group", "s:3"])
    assert code == 0 and "T=pass M=pass B=pass" in out and "type I: pass" in out
    code, out, _ = call(["axioms", "--biquandle", "abelian", "--n", "4", "--json"])
    data = json.loads(out)
    assert data["yang_baxter"] and data["type_one"] and data["wada"] is None


def test_obstruct_wording_separates_diagram_and_link():
    _, out, _ = call(["obstruct", "--name", "vt2_2", "--n", "3"])
    assert out.startswith("obstructed: the link is not checkerboard colorable")
    assert "this diagram admits no mod-2 Alexander numbering" in out
    _, out, _ = call(["obstruct", "--name", "trefoil", "--n", "3"])
    assert out.startswith("not obstructed") and "this diagram admits mod-2" in out


def test_mirror_flag():
    a = call(["alex-numbering", "--name", "trefoil"])[1]
    b = call(["alex-numbering", "--name", "trefoil", "--mirror"])[1]
    assert a.startswith("mod 2: ") and b.startswith("mod 2: ")
    assert call(["color-count", "--name", "kishino", "--mirror", "--biquandle", "w2",
                 "--group", "sd:5:4:2"])[1] == "40\n"


def test_corpus_listing():
    code, out, _ = call(["corpus"])
    assert code == 0 and "kishino" in out and "~" in out
    data = json.loads(call(["corpus", "--json"])[1])
    assert [e["name"] for e in data["entries"]] == corpus.names()
    data = json.loads(call(["corpus", "--name", "trefoil", "--json"])[1])
    assert data["diagram"]["edges"] == 6


# exit codes ------------------------------------------------------------------------------

@pytest.mark.parametrize("argv", [
    ["color-count", "--gauss", "O1+ U2+", "--biquandle", "w1", "--group", "z:3"],
    ["color-count", "--braid", "s1 s1", "--biquandle", "w1", "--group", "z:3"],
    ["color-count", "--name", "trefoil", "--biquandle", "w1", "--group", "q:3"],
    ["color-count", "--name", "nope", "--biquandle", "w1", "--group", "z:3"],
    ["color-count", "--name", "trefoil"],
    ["color-count", "--name", "trefoil", "--biquandle", "w1"],
    ["color-count", "--biquandle", "w1", "--group", "z:3"],
    ["color-count", "--name", "trefoil", "--gauss", "O1+ U1+"],
    ["state-sum", "--name", "trefoil", "--biquandle", "abelian", "--n", "4",
     "--cocycle", "mochizuki"],
    ["state-sum", "--name", "trefoil", "--biquandle", "w1", "--group", "s:3"],
    ["obstruct", "--name", "trefoil", "--n", "4"],
    ["span", "--name", "trefoil", "--bound", "0"],
    ["wada-group", "--name", "trefoil"],
    ["frobnicate"],
    ["color-count", "--name", "trefoil", "--threads", "0"],
])
def test_parse_errors_exit_2(argv):
    code, out, err = call(argv)
    assert code == 2 and out == "" and err


def test_validation_failure_exits_3():
    code, _, err = call(["color-count", "--name", "trefoil", "--biquandle", "w1",
                         "--group", "sd:5:3:2"])
    assert code == 3 and err


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "wadabiq", "color-count", "--name", "trefoil",
                          "--biquandle", "abelian", "--n", "3"], capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout == "9\n"


# JSON mirrors the human output ---------------------------------------------------------------

def _listing(values):
    return " ".join(f"{e}:{v}" for e, v in enumerate(values))


def human_from_json(data):
    cmd = data["command"]
    if cmd in ("color-count", "hom-count"):
        return str(data["count"])
    if cmd in ("state-sum", "wada-group", "abelianization"):
        return data["text"]
    if cmd == "alex-numbering":
        m2, z = data["mod2"], data["integer"]
        return "\n".join([
            "mod 2: " + (_listing(m2) if m2 is not None
                         else "none (this diagram admits no mod-2 Alexander numbering)"),
            "integer: " + (_listing(z) if z is not None
                           else "none (this diagram admits no Alexander numbering)")])
    if cmd == "span":
        head = f"span {data['span']}" + ("" if data["exact"]
                                          else f" (searched coefficients up to {data['bound']})")
        return "\n".join([head, "witness: " + _listing(data["witness"]),
                          f"lattice rank {len(data['basis'])}"])
    if cmd == "obstruct":
        where = "Z" if data["n"] == 0 else f"Z_{data['n']}"
        lines = [f"obstructed: the link is not checkerboard colorable "
                 f"(a coloring by {where} has weight {data['weight']})" if data["obstructed"]
                 else f"not obstructed by {where}"]
        if data["witness"]:
            lines.append("witness: " + _listing(data["witness"]))
        lines.append("this diagram " + ("admits" if data["diagram_numbering"] else "admits no")
                     + " mod-2 Alexander numbering")
        return "\n".join(lines)
    raise AssertionError(cmd)


@pytest.mark.parametrize("key,argv", list(golden_runs()), ids=lambda x: x if isinstance(x, str) else "")
def test_json_and_human_agree(key, argv):
    code, human, _ = call(argv)
    code_j, raw, _ = call(argv + ["--json"])
    assert code == code_j == 0
    data = json.loads(raw)
    assert raw.count("\n") == 1
    assert human_from_json(data) + "\n" == human


# golden replay -------------------------------------------------------------------------------

def test_golden_file_covers_every_entry():
    table = json.loads(GOLDEN.read_text())
    assert set(table) == {k for k, _ in golden_runs()}


@pytest.mark.parametrize("key,argv", list(golden_runs()), ids=lambda x: x if isinstance(x, str) else "")
def test_golden(key, argv):
    table = json.loads(GOLDEN.read_text())
    assert call(argv) == (0, table[key], "")


def test_golden_spot_values():
    """Values in the golden file fixed independently of the CLI."""
    table = json.loads(GOLDEN.read_text())
    assert table["kishino/count-w2-f20"] == "40\n"
    assert table["unknot/count-w2-f20"] == "20\n"
    assert table["hopf_virtual/count-w1-s3"] == "12\n"
    assert table["hopf_virtual/count-core-s3"] == "24\n"
    assert table["vt2_2/state-sum-z3"] == "1 + t + t^2 (mod 3)\n"
    assert table["trefoil/count-z5"] == "5\n"
    for k in range(1, 6):
        assert table[f"vt2_{k}/count-z5"] == "5\n"
