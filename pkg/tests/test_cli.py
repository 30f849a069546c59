"""The command-line adapters: output formats, exit codes, and thinness."""

import csv
import io
import json
import math

import pytest

from hardimer import cli
from hardimer.chdc import census, census_to_json_obj
from hardimer.growth import lyapunov_estimate, mean_growth, spectrum
from hardimer.transfer import TransferParams, damped_partial_sums, level_sum


def run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_count(capsys):
    code, out, _ = run(capsys, "count", "brrb")
    assert code == 0
    assert out == "3\n"


def test_malformed_word_is_a_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["count", "brxb"])
    assert exc.value.code == 2
    assert "'x'" in capsys.readouterr().err


def test_census_text_and_json(capsys):
    code, out, _ = run(capsys, "census", "brrb")
    assert code == 0
    assert out.strip() == "1 + r3 + b3*y^2"
    code, out, _ = run(capsys, "census", "brrb", "--json")
    assert code == 0
    assert json.loads(out) == census_to_json_obj(census("brrb"))


def test_census_json_contains_figure_monomial(capsys):
    _, out, _ = run(capsys, "census", "rbrrbrbbrbrb", "--json")
    terms = json.loads(out)
    hits = [t for t in terms if (t["i"], t["j"], t["k"]) == (2, 1, 3)]
    assert hits and hits[0]["m"] >= 1


def test_coeff_matches_census(capsys):
    _, via_rep, _ = run(capsys, "coeff", "brrb")
    _, via_census, _ = run(capsys, "census", "brrb")
    assert via_rep == via_census


def test_coeff_block_choice(capsys):
    _, out, _ = run(capsys, "coeff", "rb", "--rep", "sb")
    assert out.strip() == "0"
    _, out, _ = run(capsys, "coeff", "rb", "--rep", "sr")
    assert out.strip() == "1"


def test_coeff_dump_rep(capsys):
    code, out, _ = run(capsys, "coeff", "bb", "--rep", "sb", "--dump-rep")
    assert code == 0
    data = json.loads(out)
    assert data["word"] == "bb"
    assert data["representation"]["dim"] == 19
    assert len(data["representation"]["mat_b"]) == 19
    assert data["coefficient"] == [
        {"c": "1", "i": 0, "j": 0, "k": 0},
        {"c": "1", "i": 1, "j": 0, "k": 0},
    ]


def test_coeff_rejects_empty_word(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["coeff", ""])
    assert exc.value.code == 2


def test_series_modes_agree(capsys):
    _, rec, _ = run(capsys, "series", "--mode", "recursive", "--len", "4")
    _, rat, _ = run(capsys, "series", "--mode", "rational", "--len", "4")
    assert json.loads(rec)["series"] == json.loads(rat)["series"]


def test_series_parts(capsys):
    _, out, _ = run(capsys, "series", "--mode", "rational", "--len", "3", "--part", "blue")
    data = json.loads(out)
    assert data["part"] == "blue"
    assert all(t["word"].startswith("b") for t in data["series"]["terms"])


def test_series_rejects_bad_length(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["series", "--mode", "rational", "--len", "0"])
    assert exc.value.code == 2


def test_zn_exact_json(capsys):
    code, out, _ = run(capsys, "zn", "--n", "2", "--u", "1/3", "--v", "1/5", "--w", "0", "--exact")
    assert code == 0
    data = json.loads(out)
    from fractions import Fraction

    entry = level_sum(2, Fraction(1, 3), Fraction(1, 5), Fraction(0), exact=True)
    assert data["value"] == str(entry.value)
    assert data["mode"] == "exact"
    assert data["singular_words"] == []


def test_zn_float_json(capsys):
    _, out, _ = run(capsys, "zn", "--n", "6", "--u", "0.3", "--v", "0.2", "--w", "0.5")
    data = json.loads(out)
    entry = level_sum(6, 0.3, 0.2, 0.5)
    assert data["value"] == entry.value
    assert data["mode"] == "float"


def test_zn_singular_is_a_runtime_failure(capsys):
    code, out, err = run(capsys, "zn", "--n", "2", "--u", "1", "--v", "0", "--w", "0", "--exact")
    assert code == 1
    assert "bb" in err
    code, out, _ = run(
        capsys, "zn", "--n", "2", "--u", "1", "--v", "0", "--w", "0", "--exact", "--skip-singular"
    )
    assert code == 0
    assert json.loads(out)["singular_words"] == ["bb"]


def test_zpartial_csv(capsys):
    code, out, err = run(
        capsys, "zpartial", "--gamma", "1.0", "--nmax", "4", "--u", "0.3", "--v", "0.2", "--w", "0.5"
    )
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["n", "z_n", "partial_sum"]
    assert len(rows) == 5
    report = damped_partial_sums(TransferParams(u=0.3, v=0.2, w=0.5, gamma=1.0, n_max=4))
    for row, entry, partial in zip(rows[1:], report.levels, report.partial_sums):
        assert int(row[0]) == entry.n
        assert float(row[1]) == float(entry.value)
        assert float(row[2]) == partial
    assert "remainder_bound" in err


def test_lyapunov_is_a_thin_adapter(capsys):
    _, out, _ = run(capsys, "lyapunov", "--n", "200", "--trials", "3", "--seed", "11")
    data = json.loads(out)
    est = lyapunov_estimate(200, 3, 11)
    assert data["alpha_hat"] == est.alpha_hat
    assert data["per_trial"] == est.per_trial
    assert data["seed"] == 11


def test_spectrum_json(capsys):
    _, out, _ = run(capsys, "spectrum", "--tol", "1e-10")
    data = json.loads(out)
    report = spectrum(tolerance=1e-10)
    assert data["dominant"] == report.dominant
    assert abs(data["dominant"] - 1.5) < 1e-9
    assert data["tolerance"] == 1e-10


def test_growthcurve_csv(capsys):
    _, out, _ = run(capsys, "growthcurve", "--nmax", "30", "--step", "10")
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["n", "mean_growth"]
    assert [int(r[0]) for r in rows[1:]] == [10, 20, 30]
    for r in rows[1:]:
        assert float(r[1]) == mean_growth(int(r[0]))


def test_growthcurve_validates_step(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["growthcurve", "--nmax", "10", "--step", "20"])
    assert exc.value.code == 2


def test_verify_small(capsys):
    code, out, _ = run(capsys, "verify", "--max-len", "5")
    assert code == 0
    assert "PASS" in out
    assert "62 words" in out


def test_output_redirect(tmp_path, capsys):
    path = tmp_path / "result.txt"
    code, out, _ = run(capsys, "count", "bb", "--output", str(path))
    assert code == 0
    assert out == ""
    assert path.read_text() == "2\n"


def test_output_redirect_csv_line_endings(tmp_path, capsys):
    path = tmp_path / "curve.csv"
    run(capsys, "growthcurve", "--nmax", "2", "--step", "1", "--output", str(path))
    raw = path.read_bytes()
    assert b"\r" not in raw
    assert raw.startswith(b"n,mean_growth\n")


def test_threads_env_fallback(monkeypatch, capsys):
    monkeypatch.setenv("HARDIMER_THREADS", "4")
    code, out, _ = run(capsys, "count", "bb")
    assert code == 0 and out == "2\n"
    monkeypatch.setenv("HARDIMER_THREADS", "zero")
    with pytest.raises(SystemExit) as exc:
        cli.main(["count", "bb"])
    assert exc.value.code == 2


def test_threads_flag_validation(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["count", "bb", "--threads", "0"])
    assert exc.value.code == 2


def test_unknown_flag_rejected(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["count", "bb", "--frobnicate"])
    assert exc.value.code == 2


def test_emit_csv_contract():
    buf = io.StringIO()
    cli.emit_csv([["a", "b"], [1, 1 / 3]], buf)
    assert buf.getvalue() == "a,b\n1,0.33333333333333331\n"
    empty = io.StringIO()
    cli.emit_csv([["only", "header"]], empty)
    assert empty.getvalue() == "only,header\n"
    with pytest.raises(ValueError):
        cli.emit_csv([["a"], [1, 2]], io.StringIO())


def test_emit_csv_floats_round_trip():
    buf = io.StringIO()
    values = [math.pi, math.e, 1.5, 0.1]
    cli.emit_csv([["x"]] + [[v] for v in values], buf)
    rows = list(csv.reader(io.StringIO(buf.getvalue())))
    assert [float(r[0]) for r in rows[1:]] == values
