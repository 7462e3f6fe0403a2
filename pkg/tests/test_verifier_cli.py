"""
Verifier 与命令行入口
"""

import csv
import io
import json

import pytest

from main.main import join_signed_values, main
from src import Verifier, create_verifier
from src.checks import SUITES, CompatibleCheck, TablesCheck, VerifyCase, VerifyContext
from src.state import VerifyReport
from src.utils import Config


@pytest.fixture(autouse=True)
def _single_thread(monkeypatch):
    monkeypatch.delenv("QCARTAN_THREADS", raising=False)


def test_verifier_runs_selected_suites():
    context = VerifyContext(config=Config(), type_name="G2")
    report = Verifier(Config(), context).run(["tables", "structure"], save_report=False)
    assert report.all_passed()
    assert report.suites() == ["structure", "tables"]


def test_verifier_is_independent_of_thread_count():
    reports = []
    for threads in (1, 3):
        config = Config(threads=threads)
        context = VerifyContext(config=config, type_name="B3")
        report = Verifier(config, context).run(["additive", "bijection"], save_report=False)
        reports.append(report.to_dict(with_timestamps=False))
    for data in reports:
        for row in data["results"]:
            row.pop("elapsed")
    assert reports[0] == reports[1]


def test_verifier_saves_report(tmp_path):
    config = Config(output_dir=str(tmp_path), save_reports=True)
    Verifier(config, VerifyContext(config=config, type_name="G2")).run(["tables"])
    saved = list(tmp_path.glob("verify_report_*.json"))
    assert len(saved) == 1
    assert VerifyReport.load_from_file(str(saved[0])).all_passed()


def test_create_verifier():
    verifier = create_verifier(type_name="G2")
    assert isinstance(verifier, Verifier)
    assert verifier.context.type_name == "G2"
    assert verifier.run(["tables"], save_report=False).all_passed()


def test_verifier_rejects_unknown_suite():
    with pytest.raises(ValueError):
        Verifier(Config()).run(["no-such-suite"], save_report=False)


def test_check_errors_become_failures():
    context = VerifyContext(config=Config(), type_name="B3", word=(1, 1, 2))
    check = CompatibleCheck(context)
    result = check.execute(check.cases()[0])
    assert not result.passed
    assert result.counterexample.startswith("ValueError")


def test_case_from_other_suite_is_rejected():
    check = TablesCheck(VerifyContext(config=Config()))
    result = check.execute(VerifyCase("structure", "B3"))
    assert not result.passed


def test_compatible_word_needs_type():
    with pytest.raises(ValueError):
        CompatibleCheck(VerifyContext(config=Config(), word=(1, 2))).cases()


def test_cli_unknown_type_is_usage_error():
    assert main(["verify", "--type", "Z9"]) == 2
    assert main(["tables", "--type", "B3", "--format", "dot"]) == 2
    assert main(["quiver", "--type", "B3", "--window", "5,1"]) == 2
    assert main(["pair", "--type", "B3", "--word", "1,a"]) == 2


def test_cli_tables_csv(tmp_path):
    out = tmp_path / "g2.csv"
    assert main(["tables", "--type", "G2", "--what", "delta", "--format", "csv", "--out", str(out)]) == 0
    rows = list(csv.DictReader(io.StringIO(out.read_text(encoding="utf-8"))))
    pairs = {(int(r["i"]), int(r["j"])) for r in rows if int(r["i"]) <= int(r["j"])}
    assert pairs == {(1, 1), (1, 2), (2, 2)}
    coefficients = [int(r["coef"]) for r in rows if (r["i"], r["j"]) == ("2", "2")]
    assert coefficients == [0, 3, 0, 6, 0, 3]


def test_cli_tables_tfb_json(tmp_path):
    out = tmp_path / "a1.json"
    assert main(["tables", "--type", "A1", "--what", "tfb", "--max-u", "6", "--out", str(out)]) == 0
    data = json.loads(out.read_text(encoding="utf-8"))
    assert data["entries"]["1,1"] == [0, 1, 0, -1, 0, 1, 0]


def test_cli_quiver_dot(tmp_path):
    out = tmp_path / "b3.dot"
    args = ["quiver", "--type", "B3", "--height", "3,2,1", "--emit", "ar", "--format", "dot", "--out", str(out)]
    assert main(args) == 0
    text = out.read_text(encoding="utf-8")
    assert text.count("[label=") == 9


def test_cli_hasse_json(tmp_path):
    out = tmp_path / "hasse.json"
    assert main(["quiver", "--type", "B3", "--emit", "hasse", "--out", str(out)]) == 0
    data = json.loads(out.read_text(encoding="utf-8"))
    assert len(data["vertices"]) == 9


def test_cli_torus_element(tmp_path):
    out = tmp_path / "torus.json"
    args = ["torus", "--type", "B3", "--height", "3,2,1", "--element", "X[1,1]", "--out", str(out)]
    assert main(args) == 0
    data = json.loads(out.read_text(encoding="utf-8"))
    assert data["bar_normalized"] == ["q^1*X[1,1]"]
    assert data["wtQ"] == [[0, 1, 0]]


def test_cli_torus_check(tmp_path):
    out = tmp_path / "calN.json"
    args = ["torus", "--type", "G2", "--check", "calN", "--window", "-2,4", "--out", str(out)]
    assert main(args) == 0
    data = json.loads(out.read_text(encoding="utf-8"))
    assert data["checks"]["calN"]["passed"] is True
    assert data["window"] == [-2, 4]


def test_cli_pair(tmp_path):
    out = tmp_path / "pair.json"
    assert main(["pair", "--type", "B3", "--word", "1,2,3,1", "--check", "--out", str(out)]) == 0
    data = json.loads(out.read_text(encoding="utf-8"))
    assert data["je"] == [1]
    assert data["product_diag"] == [-4]
    assert data["product_diag_intro"] == [4]
    assert data["transposed"] is True


def test_cli_verify_word(tmp_path):
    out = tmp_path / "report.json"
    args = ["verify", "--type", "B3", "--suite", "compatible", "--word", "1,2,3,1,2,3,1,2,3", "--out", str(out)]
    assert main(args) == 0
    report = VerifyReport.load_from_file(str(out))
    assert report.all_passed()
    assert report.suites() == ["compatible"]


def test_cli_verify_failure_exit_code():
    assert main(["verify", "--type", "B3", "--suite", "compatible", "--word", "1,1,2"]) == 1


def test_cli_verify_list(tmp_path):
    out = tmp_path / "suites.csv"
    assert main(["verify", "--list", "--format", "csv", "--out", str(out)]) == 0
    rows = list(csv.DictReader(io.StringIO(out.read_text(encoding="utf-8"))))
    assert [row["suite"] for row in rows] == list(SUITES)


def test_cli_unwritable_output(tmp_path):
    blocker = tmp_path / "file"
    blocker.write_text("x", encoding="utf-8")
    out = blocker / "inside.json"
    assert main(["tables", "--type", "G2", "--out", str(out)]) == 3


def test_signed_option_values_are_joined():
    assert join_signed_values(["torus", "--window", "-12,12", "--type", "B3"]) == [
        "torus", "--window=-12,12", "--type", "B3",
    ]
    assert join_signed_values(["quiver", "--window"]) == ["quiver", "--window"]


def test_cli_negative_windows(tmp_path):
    out = tmp_path / "rep.json"
    args = ["quiver", "--type", "B3", "--height", "3,2,1", "--emit", "rep", "--window", "-8,8", "--out", str(out)]
    assert main(args) == 0
    data = json.loads(out.read_text(encoding="utf-8"))
    assert data["vertices"]
    assert all(-8 <= v["p"] <= 8 for v in data["vertices"])

    out = tmp_path / "calN.json"
    args = ["torus", "--type", "B3", "--height", "3,2,1", "--check", "calN", "--window", "-12,12", "--out", str(out)]
    assert main(args) == 0
    data = json.loads(out.read_text(encoding="utf-8"))
    assert data["window"] == [-12, 12]
    assert data["checks"]["calN"]["passed"] is True


def test_compatible_suite_checks_random_words_per_type():
    config = Config(random_words=12, random_quivers=1)
    check = CompatibleCheck(VerifyContext(config=config, type_name="B3"))
    random_cases = [case for case in check.cases() if case.note == "random"]
    assert len(random_cases) == 1
    result = check.execute(random_cases[0])
    assert result.passed, result.counterexample
    assert result.checked == 12
    assert Config().random_words == 100
