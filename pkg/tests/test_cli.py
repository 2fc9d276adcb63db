import contextlib
import io
import json
import os
import shlex
import subprocess
import sys

import pytest

from toriglue.cli import main

from conftest import EXAMPLES

GOLDEN = EXAMPLES / "golden"


def run(args, cwd=EXAMPLES):
    out, err = io.StringIO(), io.StringIO()
    here = os.getcwd()
    os.chdir(cwd)
    try:
        with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
            try:
                code = main(args)
            except SystemExit as exc:
                code = exc.code
    finally:
        os.chdir(here)
    return code, out.getvalue(), err.getvalue()


def golden_cases():
    cases = []
    for line in (GOLDEN / "cases.txt").read_text().splitlines():
        if line.strip() and not line.startswith("#"):
            name, args = (part.strip() for part in line.split("|", 1))
            cases.append(pytest.param(shlex.split(args), id=name))
    return cases


@pytest.mark.parametrize("args", golden_cases())
def test_golden(request, args):
    name = request.node.callspec.id
    code, out, _ = run(args)
    assert f"{out}exit: {code}\n" == (GOLDEN / f"{name}.txt").read_text()


def test_every_golden_file_has_a_case():
    names = {p.id for p in golden_cases()}
    files = {p.stem for p in GOLDEN.glob("*.txt")} - {"cases"}
    assert names == files


class TestExitCodes:
    def test_ok(self):
        assert run(["rank", "a3x5.mat"])[0] == 0

    def test_mathematical_failure(self):
        code, out, _ = run(["graph", "check", "bowtie.g", "bowtie2.g", "--json"])
        assert code == 0
        payload = json.loads(out)["payload"]
        assert payload["graph_split"]["status"] == "fail"
        assert payload["hypergraph_split"]["status"] == "ok"
        assert run(["homcheck", "sift_a.mat"])[0] == 1

    def test_usage(self):
        assert run([])[0] == 2
        assert run(["rank"])[0] == 2
        assert run(["toric", "--order", "elim", "a3x5.mat"])[0] == 2

    def test_parse_error(self, tmp_path):
        bad = tmp_path / "bad.mat"
        bad.write_text("2 2\n1 2\n")
        code, out, err = run(["rank", str(bad)])
        assert code == 2 and out == "" and "error" in err

    def test_missing_file(self):
        assert run(["rank", "nowhere.mat"])[0] == 2

    def test_not_homogeneous(self):
        assert run(["glue", "sift_a.mat", "b3x5.mat"])[0] == 2

    def test_budget(self):
        code, out, _ = run(["split", "a3x5.mat", "b3x5.mat", "--budget", "2"])
        assert code == 3 and "unverified-budget" in out
        assert run(["toric", "b3x5.mat", "--max-degree", "3"])[0] == 3

    def test_bad_numbers(self):
        assert run(["rank", "a3x5.mat", "--jobs", "0"])[0] == 2
        assert run(["selfglue", "ns_5_12_13_16.mat", "7", "18"])[0] == 2
        assert run(["iterate", "ns_5_8_11.mat", "ns_7_10_12.mat", "--step", "17"])[0] == 2


class TestJson:
    def test_envelope(self):
        code, out, _ = run(["split", "a3x5.mat", "b3x5.mat", "--json"])
        data = json.loads(out)
        assert code == 0
        assert set(data) == {"status", "command", "payload", "timing_ms"}
        assert data["status"] == "ok" and data["command"] == "split"
        assert data["payload"]["c"]["rows"] == 5
        assert data["payload"]["report"]["heights"] == [2, 2, 4]

    def test_nested_command_name(self):
        data = json.loads(run(["graph", "toric", "square.g", "--json"])[1])
        assert data["command"] == "graph toric"

    def test_only_timing_varies(self):
        first = json.loads(run(["toric", "b3x5.mat", "--json"])[1])
        second = json.loads(run(["toric", "b3x5.mat", "--json"])[1])
        first.pop("timing_ms")
        second.pop("timing_ms")
        assert first == second


def test_text_output_is_deterministic():
    args = ["iterate", "ns_5_8_11.mat", "ns_7_10_12.mat", "ns_6_11_14.mat",
            "--step", "7:11", "--step", "6:77", "--verify"]
    assert run(args) == run(args + ["--jobs", "2"])


def test_order_flag_keeps_verdicts():
    grevlex = run(["split", "a3x5.mat", "b3x5.mat"])
    lex = run(["split", "a3x5.mat", "b3x5.mat", "--order", "lex"])
    assert grevlex[0] == lex[0] == 0
    assert "status: ok" in grevlex[1] and "status: ok" in lex[1]


def test_console_script():
    proc = subprocess.run([sys.executable, "-m", "toriglue", "rank", "a3x5.mat"],
                          cwd=EXAMPLES, capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.strip() == "3"
