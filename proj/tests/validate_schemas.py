#!/usr/bin/env python3
"""Run the concord binary over a corpus of command lines and validate every
--json document against the shipped schemas. Also checks that the exit code
matches the reported status and that the CSV artifact has the documented
header.

usage: validate_schemas.py CONCORD_BINARY SCHEMA_DIR DATA_DIR
"""

import json
import subprocess
import sys
import tempfile
from pathlib import Path

try:
    import jsonschema
except ImportError:  # ctest treats 77 as skipped
    print("jsonschema not installed; skipping")
    sys.exit(77)

EXIT_CODES = {"ok": 0, "invalid": 1, "inconclusive": 1, "error": 2}


def corpus(data_dir):
    registry = str(Path(data_dir) / "published_registry.json")
    return [
        ["alexander", "T(2,3) # -T(2,3)", "--fox-milnor"],
        ["alexander", "Cable(Wh(T(2,3));3,4) # -T(3,4)"],
        ["alexander", "T(2,4)"],
        ["genus", "T(3,5)"],
        ["genus", "Cable(Wh(T(2,3));2,1) # -Wh(T(2,3))"],
        ["gsp-bound", "T(3,5)"],
        ["gsp-bound", "T(2,3) # -T(2,3)"],
        ["fox-milnor", "2t - 5 + 2t^-1"],
        ["fox-milnor", "t - 1 + t^-1"],
        ["fox-milnor", "t^2 + 1"],
        ["factor", "t^4 - 1"],
        ["factor", "-12t^-3 + 12t^-2"],
        ["factor", "0"],
        ["sig-jumps", "T(3,4)"],
        ["sig-jumps", "T(2,3)", "--at", "1/2"],
        ["sig-jumps", "T(2,3)", "--at", "1/6"],
        ["sig-certify", "--pair", "5,7", "--pair", "11,13", "--pair", "17,19", "--k", "4"],
        ["sig-certify", "--pair", "5,7", "--pair", "5,7", "--k", "2"],
        ["upsilon", "T(3,4) # -T(2,7)"],
        ["upsilon", "Wh(T(2,3))"],
        ["upsilon-obstruct", "T(2,3)", "--n", "1"],
        ["upsilon-obstruct", "--jprime", "4", "--n", "3"],
        ["upsilon-certify", "--k", "2", "--max", "6"],
        ["upsilon-certify", "--k", "2", "--max", "1"],
        ["ordered-demo", "--trials", "50", "--seed", "7"],
        ["eps-obstruct", "--label", "J_6", "--n", "3"],
        ["eps-obstruct", "--a1", "1", "--a2", "5", "--n", "3"],
        ["eps-obstruct", "--a1", "2", "--a2", "5", "--n", "3"],
        ["eps-certify", "--k", "2", "--max", "8", "--registry", registry],
        ["eps-certify", "--k", "2", "--max", "12", "--family", "L"],
        ["family", "J", "3"],
        ["family", "Jprime", "4"],
        ["family", "L", "5"],
        ["family", "L", "1"],
    ]


def main():
    binary, schema_dir, data_dir = sys.argv[1], Path(sys.argv[2]), sys.argv[3]

    def load(name):
        return json.loads((schema_dir / f"{name}.schema.json").read_text())

    envelope = load("envelope")
    error = load("error")
    failures = 0
    with tempfile.TemporaryDirectory() as tmp:
        for i, args in enumerate(corpus(data_dir)):
            path = Path(tmp) / f"doc{i}.json"
            extra = ["--json", str(path)]
            if args[0] == "upsilon":
                extra += ["--csv", str(Path(tmp) / f"doc{i}.csv"), "--svg", str(Path(tmp) / f"doc{i}.svg")]
            proc = subprocess.run([binary, *args, *extra], capture_output=True, text=True)
            label = " ".join(args)
            try:
                doc = json.loads(path.read_text())
                jsonschema.validate(doc, envelope)
                result = doc["result"]
                schema = error if "error" in result else load(args[0])
                jsonschema.validate(result, schema)
                if doc["command"] != args[0]:
                    raise AssertionError(f"command field {doc['command']!r}")
                if proc.returncode != EXIT_CODES[doc["status"]]:
                    raise AssertionError(f"exit {proc.returncode} for status {doc['status']}")
                if doc["status"] == "ok" and "error" in result:
                    raise AssertionError("ok status with an error payload")
                if args[0] == "upsilon" and doc["status"] == "ok":
                    csv = (Path(tmp) / f"doc{i}.csv").read_text().splitlines()
                    if csv[0] != "t,value" or len(csv) != len(result["breakpoints"]) + 1:
                        raise AssertionError("malformed CSV artifact")
                print(f"ok    {label}  [{doc['status']}]")
            except Exception as exc:  # report every failure, then fail once
                failures += 1
                print(f"FAIL  {label}: {exc}")

        # Usage errors: exit 2, no document needed.
        for args in (["frobnicate"], ["gsp-bound"], ["genus", "T(2,3)", "--csv", str(Path(tmp) / "x.csv")]):
            proc = subprocess.run([binary, *args], capture_output=True, text=True)
            ok = proc.returncode == 2
            failures += 0 if ok else 1
            print(f"{'ok   ' if ok else 'FAIL '} usage error {' '.join(args)} -> exit {proc.returncode}")

    print(f"{failures} failure(s)")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
