# Copyright 2026 The hyperrec Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Runs the CLI on the shipped configs and validates every report line.

Usage: cli_test.py HYPERREC_BINARY SOURCE_DIR OUT_DIR
"""

import json
import pathlib
import subprocess
import sys

import jsonschema


def main() -> int:
    binary, source, out = sys.argv[1], pathlib.Path(sys.argv[2]), pathlib.Path(sys.argv[3])
    schema = json.loads((source / "docs" / "report.schema.json").read_text())
    jsonschema.Draft202012Validator.check_schema(schema)
    validator = jsonschema.Draft202012Validator(schema)
    failures = []

    def check(cond, what):
        print(("ok   " if cond else "FAIL ") + what)
        if not cond:
            failures.append(what)

    def lines_of(path):
        return [json.loads(l) for l in path.read_text().splitlines() if l]

    def validate(path):
        lines = lines_of(path)
        errors = [f"{path.name}:{i + 1}: {e.message}"
                  for i, line in enumerate(lines) for e in validator.iter_errors(line)]
        check(not errors, f"{path.name} validates" + ("" if not errors else ": " + errors[0]))
        check(lines[0]["kind"] == "header", f"{path.name} starts with the header")
        return lines

    def run(*args):
        return subprocess.run([binary, *args], capture_output=True, text=True)

    configs = sorted((source / "configs").glob("*.yaml"))
    check(len(configs) >= 5, "shipped configs found")
    for cfg in configs:
        dest = out / cfg.stem
        r = run("run", "--config", str(cfg), "--out", str(dest), "--jobs", "2")
        check(r.returncode == 0, f"{cfg.name} exits 0 ({r.stderr.strip()[-200:]})")
        for report in dest.glob("*.jsonl"):
            validate(report)
        for svg in dest.glob("*.svg"):
            check(svg.read_text().startswith("<svg"), f"{svg.name} is an SVG")
        for csv in dest.glob("*.csv"):
            check(csv.read_text().startswith("index,name,op,status"), f"{csv.name} has the header")

    golden = lines_of(out / "golden_point" / "golden.jsonl")
    window = golden[2]["result"]["window"]
    members = {s + k for s, n in window["runs"] for k in range(n)}
    check(89 in members, "golden point window contains 89")

    sweep = lines_of(out / "oracle_sweep" / "report.jsonl")
    check(all(l.get("status") == "ok" and l["result"]["agreement"]
              for l in sweep if l["kind"] == "analysis"), "oracle sweep agrees everywhere")

    again = out / "golden_again"
    run("run", "--config", str(source / "configs" / "golden_point.yaml"), "--out", str(again))
    check(lines_of(again / "golden.jsonl")[1:] == golden[1:], "same seed gives the same body")
    check((again / "golden.jsonl").read_text().splitlines()[1:] ==
          (out / "golden_point" / "golden.jsonl").read_text().splitlines()[1:],
          "same seed gives byte-identical body lines")

    reseeded = out / "reseeded"
    run("run", "--config", str(source / "configs" / "doubling.yaml"), "--out", str(reseeded),
        "--seed", "42")
    check(lines_of(reseeded / "doubling.jsonl")[1]["seed"] == 42, "--seed overrides the config")

    bad = run("run", "--config", str(source / "tests" / "data" / "malformed.yaml"),
              "--out", str(out / "bad"))
    check(bad.returncode == 1, "malformed config exits 1")
    check("malformed.yaml:9:" in bad.stderr, "diagnostic names the line: " + bad.stderr.strip())
    check(run("run", "--config", str(out / "missing.yaml")).returncode == 1,
          "missing config exits 1")

    cat = run("catalog")
    for name in ("rotation", "doubling", "finite", "product", "wandering", "translation"):
        check(cat.returncode == 0 and name in cat.stdout, f"catalog lists {name}")

    plot = run("plot", str(out / "doubling" / "doubling.jsonl"), str(out / "replot.svg"))
    check(plot.returncode == 0 and
          (out / "replot.svg").read_text() == (out / "doubling" / "doubling.svg").read_text(),
          "plot verb reproduces the run plot")
    check(run("plot", str(out / "none.jsonl"), str(out / "x.svg")).returncode == 1,
          "plot of a missing report exits 1")
    check(run("bogus").returncode == 1, "unknown verb exits 1")

    print(f"{len(failures)} failure(s)")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
