#!/usr/bin/env python3
"""Run the CLI on a fixed set of queries and validate every JSON output.

Checks each document against the output schema and that two runs of the
same query produce identical bytes.
"""

import argparse
import json
import subprocess
import sys

import jsonschema

QUERIES = [
    ["torsion", "--group", "gl1z"],
    ["torsion", "--group", "gl2z"],
    ["torsion", "--group", "gl3z"],
    ["chi-h", "--group", "gl2z", "--sym", "10"],
    ["chi-h", "--group", "gl3z", "--sym", "6", "--det"],
    ["chi-h", "--group", "gl2gauss", "--sym", "4"],
    ["chi-h", "--group", "gl2eisenstein", "--sym", "6"],
    ["chi-h", "--group", "gl11z"],
    ["gamma1", "--m", "2", "--level", "5", "--sym", "1"],
    ["gamma1", "--m", "4", "--level", "35"],
    ["gamma1", "--m", "2", "--ideal", "2+i"],
    ["gamma1", "--m", "2", "--ideal", "3+w"],
    ["zeta", "--field", "Q", "--given", "chi_h=1"],
    ["zeta", "--field", "Q_sqrt5", "--given", "zeta=1/30"],
]


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--cli", required=True)
    ap.add_argument("--schema", required=True)
    args = ap.parse_args()

    with open(args.schema) as f:
        schema = json.load(f)
    validator = jsonschema.Draft202012Validator(schema)

    bad = 0
    for q in QUERIES:
        cmd = [args.cli, *q, "--format", "json"]
        first = subprocess.run(cmd, capture_output=True, text=True)
        second = subprocess.run(cmd, capture_output=True, text=True)
        name = " ".join(q)
        if first.returncode != 0:
            print(f"FAIL {name}: exit {first.returncode}: {first.stderr.strip()}")
            bad += 1
            continue
        if first.stdout != second.stdout:
            print(f"FAIL {name}: output differs between runs")
            bad += 1
            continue
        errors = sorted(validator.iter_errors(json.loads(first.stdout)), key=str)
        if errors:
            print(f"FAIL {name}: {errors[0].message}")
            bad += 1
        else:
            print(f"ok   {name}")
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
