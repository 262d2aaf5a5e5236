"""CLI contract: formats, determinism and exit codes."""

import csv
import io
import json
import math

import pytest

from delseq.cli import main, parse_rle, format_rle
from delseq.core import Rle


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def parse_csv(text):
    rows = list(csv.reader(io.StringIO(text)))
    return rows[0], rows[1:]


def test_parse_rle():
    assert parse_rle("1,1") == Rle(1, (1, 1))
    assert parse_rle("s=0,2,2,1") == Rle(0, (2, 2, 1))
    assert format_rle(parse_rle("s=0,2,2,1")) == "s=0,2,2,1"
    with pytest.raises(ValueError):
        parse_rle("s=1")


def test_posterior_csv(capsys):
    code, out = run_cli(capsys, "posterior", "--x", "0", "--n", "2")
    assert code == 0
    assert out == (
        "y,omega,prob\n"
        "00,2,0.5\n"
        "01,1,0.25\n"
        "10,1,0.25\n"
        "total,4,3\n"
    )


def test_posterior_sorted_and_complete(capsys):
    code, out = run_cli(capsys, "posterior", "--x", "110", "--n", "5")
    assert code == 0
    header, rows = parse_csv(out)
    assert header == ["y", "omega", "prob"]
    data, total = rows[:-1], rows[-1]
    assert len(data) == 16
    assert [r[0] for r in data] == sorted(r[0] for r in data)
    assert total == ["total", "40", "16"]


def test_csv_json_value_equivalence(capsys):
    _, out_csv = run_cli(capsys, "posterior", "--x", "10", "--n", "4")
    _, out_json = run_cli(
        capsys, "posterior", "--x", "10", "--n", "4", "--format", "json"
    )
    header, rows = parse_csv(out_csv)
    doc = json.loads(out_json)
    assert doc["schema"] == "posterior"
    assert doc["params"] == {"x": "10", "n": "4"}
    assert [list(r.values()) for r in doc["rows"]] == rows
    assert [list(r.keys()) for r in doc["rows"]] == [header] * len(rows)


def test_byte_identical_reruns(capsys):
    first = run_cli(capsys, "entropy-scan", "--n", "6", "--m", "3")
    second = run_cli(capsys, "entropy-scan", "--n", "6", "--m", "3")
    assert first == second
    v1 = run_cli(capsys, "verify", "--max-n", "4")
    v2 = run_cli(capsys, "verify", "--max-n", "4")
    assert v1 == v2


def test_exit_codes(capsys):
    code, _ = run_cli(capsys, "posterior", "--x", "11", "--n", "1")
    assert code == 2
    code, _ = run_cli(capsys, "posterior", "--x", "1", "--n", "30")
    assert code == 3
    with pytest.raises(SystemExit) as exc:
        main(["posterior", "--n", "2"])  # missing --x
    assert exc.value.code == 2


def test_cap_env_variable(capsys, monkeypatch):
    monkeypatch.setenv("DELSEQ_MAX_BITS", "3")
    code, _ = run_cli(capsys, "posterior", "--x", "1", "--n", "4")
    assert code == 3
    # an explicit flag wins over the environment
    code, _ = run_cli(capsys, "posterior", "--x", "1", "--n", "4", "--max-bits", "8")
    assert code == 0


def test_entropy_scan_columns_and_ordering(capsys):
    code, out = run_cli(
        capsys, "entropy-scan", "--n", "7", "--m", "3",
        "--measures", "shannon,renyi2,min",
    )
    assert code == 0
    header, rows = parse_csv(out)
    assert header == ["x", "kappa2", "shannon", "renyi2", "min"]
    assert [r[0] for r in rows] == [format(i, "03b") for i in range(8)]
    for r in rows:
        h, r2, hmin = float(r[2]), float(r[3]), float(r[4])
        assert h >= r2 >= hmin


def test_entropy_scan_all_zero_at_m_equals_n(capsys):
    _, out = run_cli(capsys, "entropy-scan", "--n", "3", "--m", "3")
    _, rows = parse_csv(out)
    assert all(float(r[2]) == 0.0 for r in rows)


def test_kappa_sorted_descending(capsys):
    code, out = run_cli(capsys, "kappa", "--m", "4")
    assert code == 0
    _, rows = parse_csv(out)
    kappas = [int(r[1]) for r in rows]
    assert kappas == sorted(kappas, reverse=True)
    assert len(rows) == 16


def test_clusters_methods_agree(capsys):
    code, out = run_cli(capsys, "clusters", "--x", "110", "--n", "5")
    assert code == 0
    _, rows = parse_csv(out)
    assert [r[:4] for r in rows] == [
        ["0", "6", "6", "6"],
        ["1", "7", "7", "7"],
        ["2", "3", "3", "3"],
    ]


def test_singletons_row(capsys):
    code, out = run_cli(capsys, "singletons", "--x", "110", "--n", "5")
    assert code == 0
    header, rows = parse_csv(out)
    assert header == ["rho0", "rho1", "count_formula", "count_bruteforce"]
    assert rows == [["1", "2", "6", "6"]]


def test_classes_example(capsys):
    code, out = run_cli(capsys, "classes", "--x-rle", "1,1", "--deletions", "2")
    assert code == 0
    _, rows = parse_csv(out)
    assert [(int(r[0]), int(r[1])) for r in rows] == [(4, 1), (3, 3), (2, 4), (1, 3)]
    assert all(r[2] == "true" and r[3] == "true" for r in rows)


def test_gchain_decreasing(capsys):
    code, out = run_cli(capsys, "gchain", "--x", "101010", "--n", "8")
    assert code == 0
    _, rows = parse_csv(out)
    values = [float(r[2]) for r in rows]
    assert len(values) == 6
    assert all(a > b for a, b in zip(values, values[1:]))


def test_estimate_within_bound(capsys):
    code, out = run_cli(capsys, "estimate", "--x", "010", "--n", "9")
    assert code == 0
    _, rows = parse_csv(out)
    exact, estimate, bound = (float(v) for v in rows[0])
    assert abs(exact - estimate) <= bound


def test_verify_passes(capsys):
    code, out = run_cli(capsys, "verify", "--max-n", "4")
    assert code == 0
    header, rows = parse_csv(out)
    assert header == ["suite", "checks", "failures", "status", "note"]
    assert all(r[3] == "pass" for r in rows)
    from delseq.verify import suite_names

    assert [r[0] for r in rows] == suite_names()


def test_verify_help_lists_suites(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--help"])
    assert exc.value.code == 0
    # argparse wraps long lines, so strip all whitespace before matching
    flat = "".join(capsys.readouterr().out.split())
    from delseq.verify import suite_names

    for name in suite_names():
        assert name in flat
