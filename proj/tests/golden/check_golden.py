#!/usr/bin/env python3
"""Runs every case of corpus/*.json through the CLI and checks the expected fragment.

usage: check_golden.py path/to/dsseq SOURCE_DIR

A fragment matches when every key it names is present with a matching value; lists must
have the same length and match item by item; everything else compares equal.
"""
import json
import pathlib
import subprocess
import sys


def mismatch(want, got, path="$"):
    if isinstance(want, dict):
        if not isinstance(got, dict):
            return f"{path}: expected an object, got {got!r}"
        for k, v in want.items():
            if k not in got:
                return f"{path}.{k}: missing"
            m = mismatch(v, got[k], f"{path}.{k}")
            if m:
                return m
        return None
    if isinstance(want, list):
        if not isinstance(got, list) or len(got) != len(want):
            return f"{path}: expected {want!r}, got {got!r}"
        for i, (a, b) in enumerate(zip(want, got)):
            m = mismatch(a, b, f"{path}[{i}]")
            if m:
                return m
        return None
    return None if want == got else f"{path}: expected {want!r}, got {got!r}"


def main():
    binary, source = sys.argv[1], pathlib.Path(sys.argv[2])
    files = sorted((source / "corpus").glob("*.json"))
    if not files:
        print("no golden files found")
        return 1
    total = failed = 0
    for f in files:
        for case in json.loads(f.read_text())["cases"]:
            total += 1
            assert case["provenance"] in ("paper-lemma", "derived-oracle"), case["name"]
            proc = subprocess.run([binary, "--json", case["command"], *case["args"]], capture_output=True, text=True)
            if proc.returncode != 0:
                failed += 1
                print(f"FAIL {f.name}: {case['name']}: exit {proc.returncode}: {proc.stderr.strip()}")
                continue
            m = mismatch(case["expected"], json.loads(proc.stdout))
            if m:
                failed += 1
                print(f"FAIL {f.name}: {case['name']}: {m}")
    print(f"{total - failed}/{total} golden cases match ({len(files)} files)")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
