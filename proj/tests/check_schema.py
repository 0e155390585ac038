"""Validate CLI JSON output against the schemas in docs/schema.

Usage: check_schema.py <quiver executable> <schema directory>

Also checks that each document survives parse and re-serialization byte for
byte, and that repeated runs print identical output.
"""

import json
import pathlib
import subprocess
import sys

import jsonschema
from referencing import Registry, Resource

CASES = [
    ("analyze.schema.json", ["analyze", "-d", "2,3,2,3"], 0),
    ("analyze.schema.json", ["analyze", "-d", "8,7,5,9,5,8", "--methods", "qip,closedform,qseries,bruteforce"], 0),
    ("analyze.schema.json", ["analyze", "-d", "2,3,2,3", "--truncation", "2"], 2),
    ("components.schema.json", ["components", "-d", "2,3,2,3"], 0),
    ("components.schema.json", ["components", "-d", "8,7,5,9,5,8", "--format", "json"], 0),
    ("components.schema.json", ["components", "-d", "3,0,2"], 0),
    ("verify.schema.json", ["verify", "-d", "2,3,2,3"], 0),
    ("verify.schema.json", ["verify", "-d", "2,2,2", "--timing"], 0),
    ("verify.schema.json", ["verify", "-d", "2,3,2,3", "--cap", "3"], 2),
    ("draw.schema.json", ["draw", "-d", "5,5,7,8,8,9", "-e", "4,1,0,0,0", "--format", "json"], 0),
    ("draw.schema.json", ["draw", "-d", "8,7,5,9,5,8", "-e", "0,1,*,0,4,0", "--format", "json"], 0),
]

JSONL_CASES = [
    ("enumerate-line.schema.json", ["enumerate", "-d", "2,3,2,3"]),
    ("enumerate-line.schema.json", ["enumerate", "-d", "4,4,4", "--sigma-only", "--limit", "20"]),
]


def run(exe, args):
    return subprocess.run([exe, *args], capture_output=True, text=True, check=False)


def main():
    exe, schema_dir = sys.argv[1], pathlib.Path(sys.argv[2])
    schemas = {p.name: json.loads(p.read_text()) for p in schema_dir.glob("*.schema.json")}
    registry = Registry().with_resources((name, Resource.from_contents(s)) for name, s in schemas.items())

    def validator(name):
        cls = jsonschema.validators.validator_for(schemas[name])
        cls.check_schema(schemas[name])
        return cls(schemas[name], registry=registry)

    failures = []
    for schema, args, code in CASES:
        label = " ".join(args)
        first = run(exe, args)
        if first.returncode != code:
            failures.append(f"{label}: exit {first.returncode}, expected {code}: {first.stderr.strip()}")
            continue
        doc = json.loads(first.stdout)
        errors = list(validator(schema).iter_errors(doc))
        for e in errors:
            failures.append(f"{label}: {e.json_path}: {e.message}")
        if json.dumps(doc, indent=2) + "\n" != first.stdout:
            failures.append(f"{label}: re-serialized document differs")
        if "--timing" not in args and run(exe, args).stdout != first.stdout:
            failures.append(f"{label}: output is not deterministic")
        print(f"ok {label}" if not errors else f"FAIL {label}")

    for schema, args in JSONL_CASES:
        label = " ".join(args)
        out = run(exe, args)
        if out.returncode != 0:
            failures.append(f"{label}: exit {out.returncode}")
            continue
        lines = out.stdout.splitlines()
        if not lines:
            failures.append(f"{label}: no output")
        v = validator(schema)
        for i, line in enumerate(lines):
            doc = json.loads(line)
            for e in v.iter_errors(doc):
                failures.append(f"{label} line {i}: {e.json_path}: {e.message}")
            if json.dumps(doc, separators=(",", ":")) != line:
                failures.append(f"{label} line {i}: re-serialized line differs")
        print(f"ok {label} ({len(lines)} lines)")

    for f in failures:
        print("FAIL", f)
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
