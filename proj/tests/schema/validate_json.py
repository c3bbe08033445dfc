#!/usr/bin/env python3
"""Validates the --json output of every subcommand against schemas/<command>.schema.json.

usage: validate_json.py path/to/dsseq SOURCE_DIR

Inputs are the golden corpus invocations plus a few extra ones, so every command is covered.
"""
import json
import pathlib
import subprocess
import sys

import jsonschema

EXTRA = [
    ["ds", "W(2)_{1/2}", "--direction", "y"],
    ["ss", "W(1) (x) X(2)", "--order", "xy"],
    ["filtration", "X(1) (+) Y(1) (+) W(0)_{1/2}"],
    ["bifilt", "W(-1) (x) Y(2)"],
    ["homs", "W(1)", "W(2)"],
    ["homs", "X(2)", "W(1) (x) W(1)", "--equivariance", "sl"],
    ["lr", "2,1", "2,1", "3,2,1"],
    ["lr", "", "1", "1"],
    ["arc", "7/2,1/2,-1/2,-7/2"],
    ["qmult", "1/2,-1/2", "", "1"],
    ["verify", "--suite", "lr"],
    ["verify", "--suite", "desk-scale"],
    ["decompose", "S[c=1] (+) W(1)"],
]


def main():
    binary, source = sys.argv[1], pathlib.Path(sys.argv[2])
    schemas = {p.name.split(".")[0]: json.loads(p.read_text()) for p in (source / "schemas").glob("*.schema.json")}
    runs = list(EXTRA)
    for f in sorted((source / "corpus").glob("*.json")):
        runs += [[c["command"], *c["args"]] for c in json.loads(f.read_text())["cases"]]
    seen, failed = set(), 0
    for args in runs:
        proc = subprocess.run([binary, "--json", *args], capture_output=True, text=True)
        if proc.returncode not in (0, 1):
            failed += 1
            print(f"FAIL {args}: exit {proc.returncode}: {proc.stderr.strip()}")
            continue
        doc = json.loads(proc.stdout)
        cmd = doc.get("command")
        try:
            jsonschema.validate(doc, schemas[cmd])
            seen.add(cmd)
        except (KeyError, jsonschema.ValidationError) as e:
            failed += 1
            print(f"FAIL {args}: {str(e).splitlines()[0]}")
    missing = set(schemas) - seen
    if missing:
        failed += 1
        print(f"FAIL no valid output seen for: {sorted(missing)}")
    print(f"{len(runs) - failed}/{len(runs)} outputs valid, {len(seen)} commands covered")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
