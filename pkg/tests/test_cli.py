import csv
import json

from loguru import logger

from xiprime.app import main


def _payload(capsys):
    return json.loads(capsys.readouterr().out)


def test_run_fig3_writes_interlacing_csv(tmp_path, capsys):
    out_dir = tmp_path / "out"
    code = main(
        ["run", "fig3", "--t-max", "60", "--cache-dir", str(tmp_path / "cache"), "--out-dir", str(out_dir)]
    )
    assert code == 0
    target = out_dir / "fig3.csv"
    assert capsys.readouterr().out.strip() == str(target)
    with target.open(encoding="utf-8") as fh:
        rows = list(csv.DictReader(fh))
    assert len(rows) == 12
    assert all(row["violation"] == "0" for row in rows)
    assert (tmp_path / "cache" / "zeros.db").exists()


def test_invalid_flags_exit_with_config_error(tmp_path, capsys):
    code = main(["run", "fig3", "--K", "9", "--out-dir", str(tmp_path)])
    assert code == 2
    payload = _payload(capsys)
    assert payload["error"] == "ConfigError"
    assert payload["exit_code"] == 2


def test_arith_primes(capsys):
    assert main(["arith", "primes", "--u", "2", "--v", "1", "--x", "1000"]) == 0
    payload = _payload(capsys)
    assert payload["u"] == 2
    assert payload["empirical"] > 0


def test_missing_zero_file_is_an_io_error(tmp_path, capsys):
    code = main(["formfactor", "--zeros", str(tmp_path / "absent.txt"), "--T", "100"])
    assert code == 4
    assert _payload(capsys)["exit_code"] == 4


def test_formfactor_from_zero_file(zeta_zeros_path, tmp_path, capsys):
    out = tmp_path / "ff.csv"
    code = main(
        [
            "formfactor",
            "--zeros",
            str(zeta_zeros_path),
            "--T",
            "100",
            "--alpha-grid",
            "0.1,0.5,0.1",
            "--out",
            str(out),
        ]
    )
    assert code == 0
    payload = _payload(capsys)
    assert payload["count"] == 29
    with out.open(encoding="utf-8") as fh:
        rows = list(csv.reader(fh))
    assert rows[0] == ["alpha", "empirical", "theory_f1", "theory_montgomery", "sine_ref"]
    assert [float(row[0]) for row in rows[1:]] == [0.1, 0.2, 0.3, 0.4, 0.5]


def test_simulate_ah(tmp_path, capsys):
    out = tmp_path / "ah.txt"
    code = main(["simulate", "ah", "--count", "500", "--seed", "5", "--out", str(out)])
    assert code == 0
    payload = _payload(capsys)
    assert payload["count"] == 500
    assert payload["source"] == "synthetic:ah(seed=5)"
    assert out.exists()


def test_explicit_sample_from_zero_file(tmp_path, capsys):
    zeros = tmp_path / "toy.txt"
    zeros.write_text("# t_max = 1000\n14.0\n30.0\n", encoding="utf-8")
    out = tmp_path / "ef.json"
    code = main(["explicit", "--x", "10", "--t", "20", "--K", "5", "--zeros", str(zeros), "--out", str(out)])
    assert code == 0
    payload = _payload(capsys)
    assert len(payload["samples"]) == 1
    assert payload["samples"][0]["K"] == 5
    assert json.loads(out.read_text(encoding="utf-8")) == payload


def test_compare_zprime_without_two_xi_zeros(tmp_path, capsys):
    code = main(["zeros", "compare-zprime", "--t-max", "18", "--cache-dir", str(tmp_path / "cache")])
    assert code == 3
    payload = _payload(capsys)
    assert payload["error"] == "PreconditionError"
    assert payload["details"]["found"] == 0


def test_logging_sink_is_released_after_main(capsys):
    assert main(["arith", "primes", "--u", "2", "--v", "1", "--x", "1000", "--log-level", "DEBUG"]) == 0
    capsys.readouterr()
    logger.warning("after main returned")
    assert "after main returned" not in capsys.readouterr().err


def test_zeros_simple_report(tmp_path, capsys):
    code = main(["zeros", "simple-report", "--t-max", "60", "--cache-dir", str(tmp_path / "cache")])
    assert code == 0
    payload = _payload(capsys)
    assert payload["xi_distinct"] == 13
    assert payload["simple_floor"] == 0.8584
    assert payload["above_floors"]
