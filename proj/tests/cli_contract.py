# Copyright 2026 The stabpoly Authors.
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
# ==============================================================================

"""CLI contract: exit codes, documented examples, schema-valid sorted JSON."""

import json
import subprocess
import sys

import jsonschema

STAB = sys.argv[1]
SCHEMA = json.load(open(sys.argv[2]))
VALIDATOR = jsonschema.Draft202012Validator(SCHEMA)
failures = []


def run(*args):
    return subprocess.run([STAB, *args], capture_output=True, text=True, timeout=300)


def check(cond, what):
    if not cond:
        failures.append(what)


def report(*args, code=0):
    p = run(*args)
    check(p.returncode == code, f"{args}: exit {p.returncode}, expected {code}: {p.stderr.strip()}")
    if p.returncode != code:
        return None
    doc = json.loads(p.stdout)
    for err in VALIDATOR.iter_errors(doc):
        failures.append(f"{args}: schema: {err.message} at {list(err.absolute_path)}")
    check(p.stdout == json.dumps(doc, indent=2, sort_keys=True) + "\n", f"{args}: keys not sorted or layout changed")
    return doc


doc = report("test", "--field", "3", "--poly", "1,0,1")
check(doc and doc["verdict"] == "Stable", "X^2+1 over F_3 should be Stable")

doc = report("verify", "stickelberger", "--field", "5", "--max-degree", "4")
check(doc and doc["violations"] == 0 and doc["checked"] > 0, "stickelberger over F_5")

doc = report("census", "--field", "3", "--degree", "2", "--monic", "--depth", "5")
check(doc and doc["counts"]["stable"] == 1 and doc["population"] == 9, "census F_3 monic quadratics")
check(doc and "seconds" not in doc, "census without --timing must omit seconds")

doc = report("verify", "cubic-char3", "--field", "3^2")
check(doc and doc["checked"] == 648 and doc["violations"] == 0, "cubic-char3 over F_9")
doc = report("verify", "lemma42", "--field", "3^3")
check(doc and doc["checked"] == 19683 and doc["violations"] == 0, "lemma42 over F_27")
doc = report("verify", "counterexample", "--field", "3^2", "--degree", "5", "--a0", "1")
check(doc and doc["details"]["root"] == [0, 0] and doc["details"]["s2_all_squares"], "counterexample certificate")

for args in [
    ("field", "--field", "3^2/3"),
    ("field", "--field", "3^2", "--op", "mul", "--a", "[1,1]", "--b", "[0,1]"),
    ("field", "--field", "7", "--op", "char", "--a", "3"),
    ("field", "--field", "7", "--op", "sqrt", "--a", "3"),
    ("field", "--field", "3^2", "--op", "norm", "--a", "[0,1]"),
    ("field", "--field", "5", "--op", "pow", "--a", "2", "--exp", "-1"),
    ("test", "--field", "3^2", "--poly", "0,2,2,1,1,1", "--depth", "2"),
    ("test", "--field", "5", "--poly", "4,0,1"),
    ("test", "--field", "3", "--poly", "1,2,0,1"),
    ("orbit", "--field", "5", "--poly", "1,1,0,1"),
    ("census", "--field", "5", "--degree", "3", "--depth", "3", "--zero", "2"),
    ("census", "--field", "3", "--degree", "2", "--timing"),
    ("verify", "resultant-identities", "--field", "3^2", "--count", "20", "--seed", "4"),
    ("verify", "norm-identity", "--field", "5", "--degree", "3"),
    ("verify", "quadratic-iff", "--field", "7"),
    ("verify", "soundness", "--field", "3", "--max-degree", "3"),
    ("verify", "orbit-equivalence", "--field", "5", "--count", "50"),
]:
    report(*args)

doc = report("test", "--field", "3", "--poly", "1,0,1", "--depth", "20")
check(doc and doc["depth_verified"] == 12, "direct depth should clamp to the degree cap")

# Determinism: repeated runs and job counts give identical bytes.
outs = {run("census", "--field", "5", "--degree", "3", "--depth", "3", "--jobs", j).stdout for j in ("1", "1", "3", "8")}
check(len(outs) == 1, "census output depends on --jobs")
outs = {run("verify", "orbit-equivalence", "--field", "3^2", "--count", "40", "--seed", "11").stdout for _ in range(2)}
check(len(outs) == 1, "seeded suite not reproducible")

tsv = run("census", "--field", "3", "--degree", "2", "--monic", "--tsv")
check(tsv.returncode == 0, "census --tsv exit code")
lines = tsv.stdout.splitlines()
check(len(lines) == 2 and lines[0].split("\t")[-2:] == ["bound_reference", "seconds"], "census TSV layout")

# Domain errors exit 1, usage errors exit 2.
for args in [
    ("test", "--field", "9", "--poly", "1,0,1"),
    ("test", "--field", "4", "--poly", "1,0,1"),
    ("test", "--field", "3^2:2,0,1", "--poly", "1,0,1"),
    ("test", "--field", "3", "--poly", "1,1"),
    ("orbit", "--field", "3", "--poly", "1,0,0,1"),
    ("field", "--field", "5", "--op", "inv", "--a", "0"),
    ("verify", "counterexample", "--field", "3", "--degree", "5", "--a0", "1"),
    ("census", "--field", "5", "--degree", "6", "--max-population", "1000"),
]:
    p = run(*args)
    check(p.returncode == 1, f"{args}: exit {p.returncode}, expected 1")
    check(p.stderr.startswith("error:"), f"{args}: stderr {p.stderr!r}")

for args in [
    (),
    ("frobnicate",),
    ("test", "--field", "3", "--poly", "1,0,1", "--bogus"),
    ("test", "--poly", "1,0,1"),
    ("test", "--field", "3", "--poly", "1,,1"),
    ("census", "--field", "3"),
    ("verify", "no-such-suite"),
    ("field", "--field", "5", "--op", "xor", "--a", "1"),
]:
    p = run(*args)
    check(p.returncode == 2, f"{args}: exit {p.returncode}, expected 2")
p = run("test", "--field", "3", "--poly", "1,0,1", "--bogus")
check("--bogus" in p.stderr and "Usage" in p.stderr, "usage error should name the flag and show the grammar")

for f in failures:
    print("FAIL:", f)
print(f"{len(failures)} failures")
sys.exit(1 if failures else 0)
