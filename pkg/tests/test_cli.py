import concurrent.futures
import json
import pathlib
import subprocess
import sys

import pytest

from diagbench.cli import main

DATA = pathlib.Path(__file__).parent / "data"


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# --- diagonal -------------------------------------------------------------


def test_family_scan_report(capsys):
    code, out, err = run(capsys, "diagonal", "--family", "lower-tri-22", "--depth", "5")
    assert code == 0 and err == ""
    payload = json.loads(out)
    assert payload == {
        "antidiagonal": "(1)",
        "cover": "1/1",
        "scan_depth": 5,
        "found_at": None,
        "first_difference": {"1": 1, "2": 2, "3": 3, "4": 4, "5": 5},
    }


def test_family_scan_finds_a_member(capsys):
    code, out, _ = run(
        capsys, "diagonal", "--family", "upper-tri-23", "--depth", "5",
        "--candidate", "(1)",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["found_at"] == 1
    assert payload["first_difference"] == {}
    assert payload["antidiagonal"] == "(0)"


def test_decimal_family_scan(capsys):
    code, out, _ = run(
        capsys, "diagonal", "--family", "decimal-29", "--antidiag", "(3)",
        "--depth", "6", "--candidate", "3333(0)",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["found_at"] == 5
    assert payload["first_difference"] == {"1": 1, "2": 2, "3": 3, "4": 4}


def test_family_array_csv(capsys):
    code, out, _ = run(
        capsys, "diagonal", "--family", "lower-tri-22", "--depth", "4",
        "--format", "csv",
    )
    assert code == 0
    assert out == "n,digits\n1,0000\n2,1000\n3,1100\n4,1110\n"


def test_explicit_scan(capsys):
    code, out, _ = run(
        capsys, "diagonal", "--explicit", str(DATA / "b4.txt"), "--depth", "16",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["antidiagonal"] == "1111"
    assert payload["cover"] == "1/4"
    assert payload["found_at"] == 16
    assert len(payload["first_difference"]) == 15


# --- subsets ----------------------------------------------------------------


def test_rank_and_unrank(capsys):
    code, out, _ = run(capsys, "subsets", "rank", "--elements", "1,3")
    assert code == 0
    assert json.loads(out) == {"elements": [1, 3], "rank": 4}

    code, out, _ = run(capsys, "subsets", "rank", "--elements", "")
    assert code == 0
    assert json.loads(out) == {"elements": [], "rank": 0}

    code, out, _ = run(capsys, "subsets", "unrank", "--p", "3", "--r", "1")
    assert code == 0
    assert json.loads(out) == {"p": 3, "r": 1, "elements": [0, 1, 3]}


def test_dovetail_listing(capsys):
    code, out, _ = run(capsys, "subsets", "dovetail", "--count", "10")
    assert code == 0
    assert out == (
        "index,elements\n"
        "0,\n"
        "1,0\n"
        "2,1\n"
        "3,0 1\n"
        "4,2\n"
        "5,0 2\n"
        "6,0 1 2\n"
        "7,3\n"
        "8,1 2\n"
        "9,0 1 3\n"
    )


def test_table_rows(capsys):
    code, out, _ = run(
        capsys, "subsets", "table1", "--n", "40", "--labels", "n/2-1,n/4",
    )
    assert code == 0
    assert out == (
        "label,d,q_num,q_den,matches\n"
        "n/2-1,19,1,40,true\n"
        "n/4,10,10,31,true\n"
    )


def test_figure1_series(capsys):
    code, out, _ = run(capsys, "subsets", "figure1", "--n", "2")
    assert code == 0
    assert out == (
        "series,k,num,den\n"
        "coeff,0,1,1\n"
        "coeff,1,2,1\n"
        "coeff,2,1,1\n"
        "ratio,0,1,2\n"
    )


# --- density ------------------------------------------------------------------


def test_rho_classification_payload(capsys):
    code, out, _ = run(capsys, "density", "rho", "--a", "even", "--b", "nat")
    assert code == 0
    payload = json.loads(out)
    assert payload["pair"] == ["even", "nat"]
    assert [s["n"] for s in payload["samples"]] == [10, 100, 1000, 10000]
    assert all(s["rho"] == "1/2" for s in payload["samples"])
    assert all(s["decimal"] == "0.500000" for s in payload["samples"])
    assert payload["classification"] == {
        "kind": "converges",
        "limit": "1/2",
        "tolerance": "1/100",
    }


def test_rho_csv_with_explicit_schedule(capsys):
    code, out, _ = run(
        capsys, "density", "rho", "--a", "nat", "--b", "real",
        "--schedule", "5,10,20,40", "--format", "csv",
    )
    assert code == 0
    assert out == (
        "n,rho_num,rho_den,rho_decimal\n"
        "5,1,64,0.015625\n"
        "10,1,2048,0.000488\n"
        "20,1,2097152,0.000000\n"
        "40,1,2199023255552,0.000000\n"
    )


def test_grid_csv(capsys):
    code, out, _ = run(capsys, "density", "grid", "--n", "2")
    assert code == 0
    assert out == (
        "a,b,in_unit,lowest_terms\n"
        "1,1,true,true\n"
        "2,1,false,true\n"
        "1,2,true,true\n"
        "2,2,true,false\n"
    )


def test_figure2_csv(capsys):
    code, out, _ = run(capsys, "density", "figure2", "--max", "1000")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "n,f_num,f_den,f_decimal"
    assert [line.split(",")[0] for line in lines[1:]] == ["100", "316", "1000"]
    for line in lines[1:]:
        assert line.split(",")[3].startswith("0.6")


# --- chains -------------------------------------------------------------------


def test_preset_verdict_payload(capsys):
    code, out, _ = run(capsys, "chains", "preset", "cda")
    assert code == 0
    payload = json.loads(out)
    assert payload["chain"] == "~P <=> Q1 <=> Q2 <=> Q3 => Q4 <=> P"
    assert payload["pattern"] == "FLAWED_38"
    assert payload["iff_prefix_len"] == 3
    assert payload["independent"] == ["Q4"]
    assert payload["inconceivable"] == ["Q1", "Q2", "Q3"]
    assert payload["valid"] is False
    assert set(payload["annotations"]) == {"P", "~P", "Q1", "Q2", "Q3", "Q4"}


def test_analyze_expression(capsys):
    code, out, _ = run(
        capsys, "chains", "analyze", "--expr", "~P => Q1 => Q2 => CONTRA",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["pattern"] == "VALID_31"
    assert payload["valid"] is True
    assert "annotations" not in payload


def test_analyze_script(tmp_path, capsys):
    script = tmp_path / "chains.txt"
    script.write_text(
        "# a valid refutation and a circular one\n"
        "~P => Q1 => Q2 => CONTRA\n"
        "\n"
        "~P <=> Q1 <=> P\n",
        encoding="utf-8",
    )
    code, out, _ = run(capsys, "chains", "analyze", "--script", str(script))
    assert code == 0
    payload = json.loads(out)
    assert [p["pattern"] for p in payload] == ["VALID_31", "FLAWED_38"]


# --- exit codes -----------------------------------------------------------------


def test_domain_errors_exit_2(capsys):
    code, _, err = run(capsys, "diagonal", "--family", "lower-tri-22", "--depth", "0")
    assert code == 2
    assert err.startswith("error: DomainError:")

    code, _, err = run(capsys, "chains", "analyze", "--expr", "garbage")
    assert code == 2
    assert "ChainSyntaxError" in err and "position 8" in err

    code, _, err = run(capsys, "diagonal", "--family", "decimal-29")
    assert code == 2
    assert "DomainError" in err

    code, _, err = run(capsys, "diagonal", "--family", "lower-tri-22",
                       "--candidate", "abc")
    assert code == 2

    code, _, err = run(capsys, "density", "rho", "--a", "even", "--b", "nat",
                       "--schedule", "1,2,3")
    assert code == 2
    assert "BadSchedule" in err

    code, _, err = run(capsys, "diagonal", "--explicit", "/no/such/file")
    assert code == 2


def test_usage_errors_exit_2(capsys):
    assert run(capsys, "diagonal", "--bogus")[0] == 2
    assert run(capsys, "subsets")[0] == 2
    assert run(capsys, "chains", "preset", "classic")[0] == 2
    assert run(capsys, "diagonal")[0] == 2  # needs --family or --explicit


# --- determinism ------------------------------------------------------------------


COMMANDS = (
    ("diagonal", "--family", "random-below-26", "--depth", "8", "--prefix", "12",
     "--candidate", "111111(0)", "--seed", "9"),
    ("diagonal", "--family", "alt-24", "--depth", "12", "--format", "csv"),
    ("subsets", "dovetail", "--count", "30"),
    ("subsets", "figure1", "--n", "16", "--format", "json"),
    ("subsets", "table1", "--n", "2520", "--format", "json"),
    ("density", "rho", "--a", "real", "--b", "complex"),
    ("density", "figure2", "--max", "1000", "--format", "json"),
    ("density", "grid", "--n", "9"),
    ("chains", "preset", "cda"),
    ("chains", "analyze", "--expr", "~P <=> Q1 <=> Q2 => Q3 => CONTRA"),
)


def test_repeated_runs_are_byte_identical(capsys):
    for argv in COMMANDS:
        first = run(capsys, *argv)
        second = run(capsys, *argv)
        assert first == second
        assert first[0] == 0


def test_output_file_matches_stdout(tmp_path, capsys):
    argv = ("density", "rho", "--a", "nat", "--b", "int")
    _, out, _ = run(capsys, *argv)
    path = tmp_path / "rho.json"
    assert main([*argv, "--output", str(path)]) == 0
    capsys.readouterr()
    assert path.read_text(encoding="utf-8") == out


def test_concurrent_runs_match_serial_ones(tmp_path):
    def to_file(tag, argv):
        path = tmp_path / f"task-{tag}.out"
        code = main([*argv, "--output", str(path)])
        return code, path.read_bytes()

    serial = [to_file(f"ref-{i}", argv) for i, argv in enumerate(COMMANDS)]
    tasks = [(i, argv) for argv in (COMMANDS,) * 3 for i, argv in enumerate(argv)]
    with concurrent.futures.ThreadPoolExecutor(max_workers=8) as pool:
        futures = {
            pool.submit(to_file, f"run-{k}", argv): i
            for k, (i, argv) in enumerate(tasks)
        }
        for fut, i in futures.items():
            assert fut.result() == serial[i]


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "diagbench", "subsets", "rank", "--elements", "1,3"],
        capture_output=True,
        text=True,
        timeout=60,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout) == {"elements": [1, 3], "rank": 4}
