"""
配置、命令行参数校验与报告状态
"""

import pytest
from pydantic import ValidationError

from src.state import CheckResult, VerifyReport
from src.utils import Config, RunConfig, dump_csv, load_config, print_config


def test_default_config_is_valid():
    config = Config()
    assert config.validate()
    assert config.threads == 1
    assert config.window_factor == 2


@pytest.mark.parametrize(
    "field,value",
    [("threads", 0), ("random_quivers", 0), ("random_words", 0), ("window_factor", 0), ("series_factor", -1)],
)
def test_invalid_config_values(field, value, capsys):
    config = Config(**{field: value})
    assert not config.validate()
    assert "错误" in capsys.readouterr().out


def test_print_config(capsys):
    print_config(Config(threads=2))
    assert "threads" in capsys.readouterr().err


def test_config_from_python_file(tmp_path):
    path = tmp_path / "settings.py"
    path.write_text("QCARTAN_THREADS = 4\nDEFAULT_SEED = 7\nSAVE_REPORTS = True\n", encoding="utf-8")
    config = Config.from_file(str(path))
    assert config.threads == 4
    assert config.seed == 7
    assert config.save_reports is True


def test_config_from_env_file(tmp_path):
    path = tmp_path / ".env"
    path.write_text('# 注释\nRANDOM_QUIVERS=5\nOUTPUT_DIR="out"\nSAVE_REPORTS=false\nUNKNOWN=1\n', encoding="utf-8")
    config = Config.from_file(str(path))
    assert config.random_quivers == 5
    assert config.output_dir == "out"
    assert config.save_reports is False


def test_threads_from_environment(monkeypatch):
    monkeypatch.setenv("QCARTAN_THREADS", "6")
    assert load_config().threads == 6
    monkeypatch.setenv("QCARTAN_THREADS", "many")
    with pytest.raises(ValueError):
        load_config()
    monkeypatch.setenv("QCARTAN_THREADS", "0")
    with pytest.raises(ValueError):
        load_config()


def test_missing_config_file(tmp_path):
    with pytest.raises(FileNotFoundError):
        load_config(str(tmp_path / "missing.env"))


def test_run_config_normalizes_fields():
    run = RunConfig(command="verify", type="b3", window="-3,5", suites="compatible, ya")
    assert run.type == "B3"
    assert run.window == (-3, 5)
    assert run.suites == ["compatible", "ya"]
    assert len(RunConfig(command="verify", suites="all").suites) > 10


@pytest.mark.parametrize(
    "fields",
    [
        {"command": "draw"},
        {"command": "tables"},
        {"command": "verify", "type": "H3"},
        {"command": "verify", "height": "1;2"},
        {"command": "verify", "word": "0,1"},
        {"command": "verify", "window": "1"},
        {"command": "verify", "format": "xml"},
        {"command": "verify", "seed": -1},
        {"command": "verify", "threads": 0},
        {"command": "verify", "suites": "nope"},
    ],
)
def test_run_config_rejects(fields):
    with pytest.raises(ValidationError):
        RunConfig(**fields)


def test_report_summary_and_round_trip(tmp_path):
    report = VerifyReport()
    report.add_result(CheckResult(suite="ya", case="B3", passed=True, checked=10))
    report.add_result(CheckResult(suite="calN", case="G2", passed=False, checked=3, counterexample="N(1,1;2,2)"))
    report.add_result(CheckResult(suite="calN", case="B3", passed=True, checked=4))
    assert [r.case for r in report.results] == ["B3", "G2", "B3"]
    assert not report.all_passed()
    assert report.failed_suites() == ["calN"]
    summary = report.get_summary()
    assert summary["calN"] == {"cases": 2, "passed": False, "checked": 7, "counterexample": "G2: N(1,1;2,2)"}
    assert summary["ya"]["counterexample"] is None
    assert "created_at" not in report.to_dict(with_timestamps=False)

    path = tmp_path / "reports" / "report.json"
    report.save_to_file(str(path))
    loaded = VerifyReport.load_from_file(str(path))
    assert [r.to_dict() for r in loaded.results] == [r.to_dict() for r in report.results]
    assert loaded.created_at == report.created_at


def test_dump_csv():
    assert dump_csv(("a", "b"), [(1, "x,y")]) == 'a,b\n1,"x,y"\n'
