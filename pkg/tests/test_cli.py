import json
from pathlib import Path

import pytest

from dgroupoid.cli import main

GOLDEN = Path(__file__).parent / "golden"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.mark.parametrize("argv,golden", [
    (["present", "trefoil.tri", "--reduce"], "present_trefoil_reduced.txt"),
    (["present", "fig8.tri"], "present_fig8.txt"),
    (["rings", "fig8.tri", "--functor", "b"], "rings_fig8_b.txt"),
    (["rings", "fig8.tri", "--functor", "a"], "rings_fig8_a.txt"),
    (["rings", "trefoil.tri", "--functor", "b"], "rings_trefoil_b.txt"),
])
def test_golden(capsys, argv, golden):
    code, out, _ = run(capsys, *argv)
    assert code == 0
    assert out == (GOLDEN / golden).read_text()


def test_output_is_stable(capsys):
    first = run(capsys, "rings", "fig8.tri", "--functor", "a")[1]
    assert run(capsys, "rings", "fig8.tri", "--functor", "a")[1] == first


def test_present_reads_files(capsys, tmp_path):
    f = tmp_path / "t.tri"
    f.write_text("# a file\ntet x u y v\ntet v y u x\n")
    code, out, _ = run(capsys, "present", str(f), "--reduce")
    assert code == 0 and out.splitlines()[1:] == ["y=(x*y)xy", "x=(x*y)*(xy)"]


def test_eval(capsys):
    assert run(capsys, "eval", "--model", "f8-b", "a*(a+1)")[1] == "w - 1 + eps\n"
    assert run(capsys, "eval", "--model", "f8-b", "5*eps")[1] == "0\n"
    assert run(capsys, "eval", "--model", "trefoil-a", "t^-1")[1] == "1 - t\n"


def test_verify_trefoil(capsys):
    code, out, _ = run(capsys, "verify", "trefoil")
    assert code == 0
    body = [l for l in out.splitlines() if not l.startswith("==")]
    assert body and all(l.startswith("PASS") for l in body)


def test_verify_json(capsys):
    code, out, _ = run(capsys, "verify", "m2", "--json")
    doc = json.loads(out)
    assert code == 0 and doc["ok"] and doc["failed"] == 0
    assert set(doc) == {"ok", "passed", "failed", "reports"}


def test_verify_fig8_reports_known_discrepancies(capsys):
    code, out, _ = run(capsys, "verify", "fig8", "--json")
    doc = json.loads(out)
    failed = sorted(c["name"] for r in doc["reports"] for c in r["checks"] if c["status"] != "PASS")
    assert code == 1
    assert failed == ["(R/I)/(eps, w-d) free of rank 6", "L(xi ba)=(1+d)eps",
                      "kernel = ideal (eps, w-d)"]


@pytest.mark.parametrize("family,size", [("coarse", 3), ("triple", 3), ("ar", 7), ("br", 5),
                                         ("malnormal", 0)])
def test_axioms(capsys, family, size):
    code, out, _ = run(capsys, "axioms", "--family", family, "--size", str(size))
    assert code == 0 and "FAIL" not in out


@pytest.mark.parametrize("argv", [
    ["eval", "--model", "f8-b", "a +"],
    ["eval", "--model", "f8-b", "x"],
    ["present", "missing.tri"],
])
def test_input_errors_exit_2(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_bad_diagram_exit_2(capsys, tmp_path):
    f = tmp_path / "bad.tri"
    f.write_text("tet x u y\n")
    code, _, err = run(capsys, "present", str(f))
    assert code == 2 and "line 1" in err


def test_unknown_flag_rejected(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["present", "trefoil.tri", "--bogus"])
    assert exc.value.code == 2


def test_noninvertible_exit_1(capsys):
    assert run(capsys, "eval", "--model", "f8-b", "inv(eps)")[0] == 1
