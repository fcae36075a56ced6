import json
import subprocess
import sys

import pytest

from cuspkit import cli
from cuspkit.report import ANCHORS, CheckResult, Report, Status


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr().out
    return code, (json.loads(out) if out else None)


def statuses(doc, section):
    return {c["id"]: c["status"] for c in doc["sections"][section]}


def test_verify_lattice_p6(capsys):
    code, doc = run(capsys, "verify-lattice", "--p", "6")
    assert code == 0
    euler = next(c for c in doc["sections"]["verify-lattice"] if c["id"] == "lemma1.euler.p6")
    assert euler["details"] == {"euler": 24, "type": "K3"}
    assert doc["summary"]["fail"] == 0


def test_verify_lattice_p9(capsys):
    code, doc = run(capsys, "verify-lattice", "--p", "9")
    assert code == 0
    assert set(statuses(doc, "verify-lattice").values()) == {"pass"}


@pytest.mark.parametrize("argv", [["verify-lattice", "--p", "0"], ["lemma3", "--trials", "0"],
                                  ["verify-hesse", "--lambda", "0.5"], ["verify-hesse", "--lambda", "1/0"],
                                  ["frobnicate"]])
def test_usage_errors_exit_2(argv):
    with pytest.raises(SystemExit) as info:
        cli.main(argv)
    assert info.value.code == 2


def test_bad_output_path(tmp_path):
    with pytest.raises(SystemExit) as info:
        cli.main(["verify-lattice", "--out", str(tmp_path / "missing" / "r.json")])
    assert info.value.code == 2


def test_lemma3_single_trial(capsys):
    code, doc = run(capsys, "lemma3", "--trials", "1", "--seed", "42")
    assert code == 0
    sweep = doc["sections"]["lemma3"][0]
    assert sweep["details"]["zero_mod_3"] == 1


def test_lemma3_injected_fault(capsys):
    code, doc = run(capsys, "lemma3", "--trials", "5", "--seed", "7", "--inject-fault")
    assert code == 1
    fault = next(c for c in doc["sections"]["lemma3"] if c["id"] == "lemma3.injected_fault")
    assert fault["status"] == "fail"
    assert fault["details"]["counterexample"]["det_mod_3"] in (1, 2)


def test_verify_hesse_fermat_skips_conic(capsys):
    code, doc = run(capsys, "verify-hesse", "--lambda", "0")
    assert code == 0
    st = statuses(doc, "verify-hesse")
    assert st["hesse.flexes"] == "pass"
    assert st["hesse.dual_conic"] == "skipped"
    conic = next(c for c in doc["sections"]["verify-hesse"] if c["id"] == "hesse.dual_conic")
    assert conic["details"]["reason"] == "Fermat"


def test_verify_hesse_singular_skips(capsys):
    code, doc = run(capsys, "verify-hesse", "--lambda", "-1", "--dual")
    assert code == 0
    checks = doc["sections"]["verify-hesse"]
    skipped = [c for c in checks if c["status"] == "skipped"]
    assert skipped and all(c["details"]["reason"] == "Singular" for c in skipped)


def test_verify_hesse_lambda_2_with_dual(capsys):
    code, doc = run(capsys, "verify-hesse", "--lambda", "2", "--dual")
    assert code == 0
    st = statuses(doc, "verify-hesse")
    assert set(st.values()) == {"pass"}
    assert {"hesse.dual_sextic", "hesse.cusps", "hesse.conic_contact", "class.rr_solve"} <= set(st)


def test_reports_are_byte_identical(tmp_path):
    outs = []
    for name in ("a.json", "b.json"):
        path = tmp_path / name
        assert cli.main(["verify-hesse", "--lambda", "3/2", "--out", str(path)]) == 0
        outs.append(path.read_bytes())
    assert outs[0] == outs[1]


def test_timings_are_opt_in(capsys):
    _, plain = run(capsys, "verify-lattice", "--p", "2")
    _, timed = run(capsys, "verify-lattice", "--p", "2", "--timings")
    assert "elapsed" not in plain["sections"]["verify-lattice"][0]
    assert "elapsed" in timed["sections"]["verify-lattice"][0]


def test_every_location_is_an_anchor(capsys):
    _, doc = run(capsys, "verify-hesse", "--lambda", "2")
    assert all(c["paper_location"] in ANCHORS for c in doc["sections"]["verify-hesse"])
    with pytest.raises(ValueError):
        CheckResult("x", "somewhere", Status.PASS)


def test_report_summary_and_duplicates():
    rep = Report()
    rep.add_section("a", [CheckResult("x", "Lemma 1", Status.PASS), CheckResult("y", "Lemma 1", Status.FAIL)])
    assert rep.summary() == {"pass": 1, "fail": 1, "skipped": 0, "total": 2}
    assert rep.failed
    with pytest.raises(ValueError):
        rep.add_section("b", [CheckResult("x", "Lemma 2", Status.PASS)])


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "cuspkit", "verify-lattice", "--p", "1"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["summary"]["fail"] == 0


@pytest.mark.slow
def test_full_report(tmp_path):
    path = tmp_path / "report.json"
    assert cli.main(["report", "--out", str(path)]) == 0
    doc = json.loads(path.read_text())
    assert set(doc["sections"]) == {"verify-lattice", "lemma3", "enumerate-codes", "verify-hesse"}
    assert doc["summary"]["fail"] == 0
