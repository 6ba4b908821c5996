#!/usr/bin/env python3
"""Runs the CLI on every case in cases.json and compares stdout and exit code
with the files under expected/. Pass --update to rewrite the expected files.
An argument starting with "@/" names a file in the golden directory; the CLI
runs from that directory so reports echo the same relative path."""
import argparse
import json
import pathlib
import subprocess
import sys


def run(binary, golden, args):
    argv = [a[2:] if a.startswith("@/") else a for a in args]
    proc = subprocess.run([str(pathlib.Path(binary).resolve()), *argv], capture_output=True, text=True,
                          timeout=120, cwd=golden)
    return proc.returncode, proc.stdout


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("binary")
    parser.add_argument("golden", type=pathlib.Path)
    parser.add_argument("--update", action="store_true")
    opts = parser.parse_args()

    cases = json.loads((opts.golden / "cases.json").read_text())
    failures = []
    for case in cases:
        code, out = run(opts.binary, opts.golden, case["args"])
        want_code = case.get("exit", 0)
        expected = opts.golden / "expected" / (case["name"] + ".out")
        if code != want_code:
            failures.append(f"{case['name']}: exit {code}, expected {want_code}")
            continue
        if want_code != 0:
            continue
        if opts.update:
            expected.write_text(out)
        elif not expected.exists():
            failures.append(f"{case['name']}: no expected output")
        elif expected.read_text() != out:
            failures.append(f"{case['name']}: output differs from {expected.name}")
        # Reports are deterministic.
        if run(opts.binary, opts.golden, case["args"]) != (code, out):
            failures.append(f"{case['name']}: second run differs")

    for f in failures:
        print("FAIL", f)
    print(f"{len(cases) - len(failures)}/{len(cases)} golden cases passed")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
