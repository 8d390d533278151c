#!/usr/bin/env python3
"""Run every CLI subcommand once and validate each report against the schema.

usage: validate_reports.py <hamcolor binary> <report.schema.json>
"""
import json
import subprocess
import sys
import tempfile
from pathlib import Path

import jsonschema


def main() -> int:
    cli, schema_path = sys.argv[1], sys.argv[2]
    schema = json.loads(Path(schema_path).read_text())
    validator = jsonschema.Draft202012Validator(schema)
    failures = 0

    with tempfile.TemporaryDirectory() as tmp:
        d = Path(tmp)
        g = d / "g.ecg"
        x = d / "x.ecg"
        bow = d / "b.txt"
        host = d / "host.ecg"
        # K9 in color 2 with 01 and 02 recolored to 1: one bad bowtie at 0.
        edges = [(u, v, 1 if (u, v) in ((0, 1), (0, 2)) else 2)
                 for u in range(9) for v in range(u + 1, 9)]
        host.write_text("9 2\n" + "".join(f"{u} {v} {c}\n" for u, v, c in edges))
        bow.write_text("0 1 2 3 4\n")

        # (args, expected exit code)
        runs = [
            (["gen", "general-r", "--n", "8", "--r", "2", "-o", str(g)], 0),
            (["gen", "counterexample2", "--n", "10", "--t", "2", "-o", str(x)], 0),
            (["gen", "tripartite3", "--n", "8", "-o", str(d / "bad.ecg")], 1),
            (["verify-balance", str(g), "--max-bias-scaled", "0"], 0),
            (["verify-balance", str(x), "--max-bias-scaled", "0", "--budget", "10"], 1),
            (["analyze", str(g)], 0),
            (["analyze", str(x), "--s", "2"], 0),
            (["analyze", str(d / "missing.ecg")], 1),
            (["search", "--n", "7", "--r", "2", "--min-degree", "4", "--samples", "4",
              "--seed", "3", "--save-extremal", str(d / "ext.ecg")], 0),
            (["amplify", str(host), str(bow), "--color", "1"], 0),
            (["bowties", str(host), "--packing"], 0),
            (["--timing", "bowties", str(g), "--only-bad"], 0),
        ]
        for args, expected in runs:
            proc = subprocess.run([cli, *args], capture_output=True, text=True)
            label = " ".join(args[:2])
            if proc.returncode != expected:
                print(f"FAIL {label}: exit {proc.returncode}, expected {expected}")
                failures += 1
                continue
            try:
                report = json.loads(proc.stdout)
            except json.JSONDecodeError as e:
                print(f"FAIL {label}: stdout is not JSON ({e})")
                failures += 1
                continue
            errors = sorted(validator.iter_errors(report), key=lambda e: list(e.path))
            if errors:
                failures += 1
                for e in errors:
                    print(f"FAIL {label}: {'/'.join(map(str, e.path))}: {e.message}")
            else:
                print(f"ok   {label} ({report['status']})")

    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
