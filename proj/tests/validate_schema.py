"""Runs the CLI with --json and validates every record against the schema."""

import json
import subprocess
import sys

import jsonschema

COMMANDS = [
    ["hyperbola", "--eps", "+1", "--bound", "100", "--generate", "3"],
    ["hyperbola", "--eps=-1", "--bound", "50"],
    ["markov", "brute", "--max", "1000"],
    ["markov", "tree", "--depth", "14"],
    ["markov", "tree", "--depth", "30", "--max", "100000"],
    ["factorize", "--target", "-7,-1,1,0", "--length", "2", "--bound", "20", "--eps", "all"],
    ["factorize", "--target", "1,0,9,1", "--length", "3", "--bound", "6"],
    ["hurwitz", "--tuple", "1:5:1;1:2:1", "--moves", "0,-0,0"],
    ["orbit", "--tuple", "1:5:1;1:2:1", "--max-nodes", "50"],
    ["orbit", "--tuple", "1:3:1;1:0:1;1:-3:1", "--conjugator", "1,0,1,1", "--max-nodes", "200"],
    ["verify-paper", "--bound-3pt", "10"],
]


def main() -> int:
    exe, schema_path = sys.argv[1], sys.argv[2]
    with open(schema_path) as f:
        schema = json.load(f)
    jsonschema.Draft202012Validator.check_schema(schema)
    validator = jsonschema.Draft202012Validator(schema)
    failures = 0
    for args in COMMANDS:
        proc = subprocess.run([exe, "--json", *args], capture_output=True, text=True)
        if proc.returncode != 0:
            print(f"FAIL {' '.join(args)}: exit {proc.returncode}: {proc.stderr.strip()}")
            failures += 1
            continue
        record = json.loads(proc.stdout)
        errors = sorted(validator.iter_errors(record), key=lambda e: list(e.path))
        if errors:
            print(f"FAIL {' '.join(args)}: {errors[0].message}")
            failures += 1
            continue
        again = subprocess.run([exe, "--json", "--workers", "3", *args], capture_output=True, text=True)
        if again.stdout != proc.stdout:
            print(f"FAIL {' '.join(args)}: output depends on the worker count")
            failures += 1
            continue
        print(f"ok   {' '.join(args)}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
