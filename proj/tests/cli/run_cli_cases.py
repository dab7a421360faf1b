#!/usr/bin/env python3
"""Exit-code and report contract tests for the command line runner."""

import json
import subprocess
import sys
import tempfile
from pathlib import Path

FAILURES = []


def run(binary, *args):
    return subprocess.run([binary, *args], capture_output=True, text=True)


def check(name, cond, extra=""):
    tag = "ok" if cond else "FAIL"
    print(f"[{tag}] {name}{(' ' + extra) if extra and not cond else ''}")
    if not cond:
        FAILURES.append(name)


def strip_runtimes(report):
    for entry in report.get("checks", []):
        entry.pop("runtime_ms", None)
    return report


def main():
    binary = sys.argv[1]
    scenarios = Path(sys.argv[2])
    tmp = Path(tempfile.mkdtemp(prefix="magsym_cli_"))

    r = run(binary, "version")
    check("version exits 0", r.returncode == 0, r.stderr)
    check("version prints the name", "magsym" in r.stdout)

    r = run(binary, "list-checks")
    check("list-checks exits 0", r.returncode == 0, r.stderr)
    check("list-checks names the ray phase check", "ray-phase — Eq. (19)" in r.stdout)
    check("list-checks names the existence gate",
          "passive-generator-existence — Eq. (8)" in r.stdout)
    names = [line.split(" — ")[0] for line in r.stdout.splitlines()
             if " — " in line]
    check("at least 15 checks are registered", len(names) >= 15, str(len(names)))

    report_path = tmp / "uniform.json"
    r = run(binary, "run", str(scenarios / "uniform_field_full_suite.json"),
            "--out", str(report_path))
    check("uniform suite exits 0", r.returncode == 0, r.stdout + r.stderr)
    report = json.loads(report_path.read_text())
    check("uniform suite reports pass", report["overall"] == "pass")
    check("report entries carry provenance",
          all(any("provenance" in v for v in entry["expected"].values())
              for entry in report["checks"] if entry["expected"]))

    r2 = run(binary, "run", str(scenarios / "uniform_field_full_suite.json"),
             "--out", str(tmp / "uniform2.json"), "--jobs", "4")
    check("parallel run exits 0", r2.returncode == 0, r2.stderr)
    a = strip_runtimes(json.loads(report_path.read_text()))
    b = strip_runtimes(json.loads((tmp / "uniform2.json").read_text()))
    check("reports are deterministic across jobs", json.dumps(a) == json.dumps(b))

    for name in ("gradient_field", "dipole_field"):
        r = run(binary, "run", str(scenarios / f"{name}.json"))
        check(f"{name} exits 0", r.returncode == 0, r.stdout + r.stderr)

    r = run(binary, "run", str(scenarios / "negative_control.json"))
    check("expected-to-exist L1 fails with exit 1", r.returncode == 1, str(r.returncode))

    malformed = tmp / "malformed.json"
    malformed.write_text(json.dumps({
        "label": "malformed",
        "field": {"components": [
            [{"coefficient": "1/oops", "exponents": [0, 1, 0]}], [], []]},
        "checks": ["poisson-canonical-pairs"],
    }))
    r = run(binary, "run", str(malformed))
    check("malformed coefficient exits 2", r.returncode == 2, str(r.returncode))

    r = run(binary, "run", str(tmp / "missing.json"))
    check("missing file exits 2", r.returncode == 2, str(r.returncode))

    r = run(binary, "run", str(scenarios / "dipole_field.json"),
            "--export-dir", str(tmp / "exports"))
    check("export run exits 0", r.returncode == 0, r.stderr)
    check("trajectory export written", (tmp / "exports" / "trajectory.csv").exists())
    if (tmp / "exports" / "trajectory.csv").exists():
        header = (tmp / "exports" / "trajectory.csv").read_text().splitlines()[0]
        check("trajectory export schema",
              header.startswith("t,x1,x2,x3,p1,p2,p3,pi1,pi2,pi3,H"), header)

    if FAILURES:
        print(f"{len(FAILURES)} CLI case(s) failed: {FAILURES}")
        return 1
    print("all CLI cases pass")
    return 0


if __name__ == "__main__":
    sys.exit(main())
