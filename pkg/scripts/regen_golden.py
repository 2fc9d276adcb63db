"""Regenerate the expected CLI outputs under examples/golden/."""

import contextlib
import io
import os
import shlex
from pathlib import Path

from toriglue.cli import main

ROOT = Path(__file__).resolve().parent.parent / "examples"
GOLDEN = ROOT / "golden"


def load_cases():
    cases = []
    for line in (GOLDEN / "cases.txt").read_text().splitlines():
        if line.strip() and not line.startswith("#"):
            name, args = (part.strip() for part in line.split("|", 1))
            cases.append((name, shlex.split(args)))
    return cases


def run(args):
    buf = io.StringIO()
    cwd = os.getcwd()
    os.chdir(ROOT)
    try:
        with contextlib.redirect_stdout(buf):
            code = main(args)
    finally:
        os.chdir(cwd)
    return f"{buf.getvalue()}exit: {code}\n"


if __name__ == "__main__":
    for name, args in load_cases():
        (GOLDEN / f"{name}.txt").write_text(run(args))
        print(name)
