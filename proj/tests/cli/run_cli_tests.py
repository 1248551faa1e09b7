#
# ms4wb - Copyright 2026 The ms4wb Authors.
# SPDX-License-Identifier: Apache-2.0
#
"""Runs the command-line golden tests listed in cases.json.

Each case gives the arguments, optional stdin, the expected exit code and
either a golden output file or substrings that must appear in stdout/stderr.
"""

import argparse
import json
import pathlib
import subprocess
import sys


def run_case(binary, case, root, update):
    proc = subprocess.run(
        [binary, *case["args"]],
        input=case.get("stdin", ""),
        capture_output=True,
        text=True,
        timeout=case.get("timeout", 120),
    )
    problems = []
    if proc.returncode != case["exit"]:
        problems.append(f"exit {proc.returncode}, expected {case['exit']}")
    if "golden" in case:
        path = root / "golden" / case["golden"]
        if update:
            path.write_text(proc.stdout)
        elif not path.exists():
            problems.append(f"missing golden file {path.name}")
        elif path.read_text() != proc.stdout:
            problems.append(f"stdout differs from {path.name}:\n{proc.stdout}")
    for needle in case.get("stdout_contains", []):
        if needle not in proc.stdout:
            problems.append(f"stdout lacks {needle!r}")
    for needle in case.get("stderr_contains", []):
        if needle not in proc.stderr:
            problems.append(f"stderr lacks {needle!r}: {proc.stderr.strip()}")
    return problems


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("binary")
    parser.add_argument("root", type=pathlib.Path)
    parser.add_argument("--update", action="store_true", help="rewrite golden files")
    args = parser.parse_args()

    cases = json.loads((args.root / "cases.json").read_text())
    failed = 0
    for case in cases:
        problems = run_case(args.binary, case, args.root, args.update)
        status = "FAIL" if problems else "ok"
        print(f"{status:4} {case['name']}")
        for p in problems:
            print(f"     {p}")
        failed += bool(problems)
    print(f"{len(cases) - failed}/{len(cases)} cases passed")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
