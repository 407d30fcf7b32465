#!/usr/bin/env python3
"""Validate modrep JSON reports against docs/report.schema.json.

Usage: check_report_schema.py <modrep binary> <schema> <scenario files...>
Each scenario runs twice; the reports must validate, be byte-identical and
survive a parse/serialize round trip.
"""
import json
import subprocess
import sys

import jsonschema


def main() -> int:
    binary, schema_path, *scenarios = sys.argv[1:]
    with open(schema_path) as f:
        schema = json.load(f)
    jsonschema.Draft202012Validator.check_schema(schema)
    validator = jsonschema.Draft202012Validator(schema)
    failures = 0
    for path in scenarios:
        runs = [subprocess.run([binary, "run", path, "--format", "json"], capture_output=True, text=True)
                for _ in range(2)]
        if runs[0].returncode != 0 or runs[0].stdout != runs[1].stdout:
            print(f"FAIL {path}: exit {runs[0].returncode} or non-deterministic output")
            failures += 1
            continue
        report = json.loads(runs[0].stdout)
        errors = sorted(validator.iter_errors(report), key=lambda e: list(e.path))
        if json.dumps(json.loads(json.dumps(report))) != json.dumps(report):
            errors.append("parse/serialize round trip changed the report")
        for e in errors:
            print(f"FAIL {path}: {getattr(e, 'message', e)}")
        failures += bool(errors)
        if not errors:
            print(f"PASS {path}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
