"""End-to-end checks of the tfu command line."""
import argparse
import json
import os
import shutil
import subprocess
import sys

import jsonschema

parser = argparse.ArgumentParser()
parser.add_argument("--tfu", required=True)
parser.add_argument("--schema", required=True)
parser.add_argument("--workdir", required=True)
args = parser.parse_args()

shutil.rmtree(args.workdir, ignore_errors=True)
os.makedirs(args.workdir)
with open(args.schema) as fh:
    schema = json.load(fh)

failures = []


def path(name):
    return os.path.join(args.workdir, name)


def run(*argv, expect=0):
    proc = subprocess.run([args.tfu, *argv], capture_output=True, text=True)
    if proc.returncode != expect:
        failures.append(f"{' '.join(argv)}: exit {proc.returncode}, expected {expect}\n{proc.stderr}")
    return proc


def check(name, ok, detail=""):
    print(f"{'ok  ' if ok else 'FAIL'} {name}")
    if not ok:
        failures.append(f"{name} {detail}")


def validated(name, text):
    try:
        doc = json.loads(text)
        jsonschema.validate(doc, schema)
    except (json.JSONDecodeError, jsonschema.ValidationError) as e:
        check(f"{name} validates", False, str(e)[:400])
        return None
    check(f"{name} validates", True)
    return doc


# generate -> compute round trip from a chirp spec
with open(path("spec.json"), "w") as fh:
    json.dump({"zeta": 0.15915494309189535, "eps": 1.0, "x0": [0.0], "w0": [0.0],
               "partition": {"j1": [1], "j2": [], "j3": [], "j4": []}}, fh)
run("generate", "--chirp", path("spec.json"), "--out", path("f.csv"))
run("compute", "--signal", path("f.csv"), "--kernel", "unit", "--out", path("wd.csv"))
with open(path("wd.csv")) as fh:
    header = fh.readline()
    columns = fh.readline().strip()
    rows = sum(1 for line in fh if line.strip())
check("distribution header", header.startswith("# distribution ") and "kernel=unit" in header, header)
check("distribution columns", columns == "ix,iw,re,im", columns)
check("distribution rows", rows == 256 * 256, str(rows))

run("compute", "--signal", path("f.csv"), "--kernel", "timemul:chirp(1)", "--route", "freq",
    "--out", path("wd.bin"))
with open(path("wd.bin"), "rb") as fh:
    check("binary distribution magic", fh.read(4) == b"TFDB")

# theorem verification
proc = run("verify", "--theorem", "T1", "--zeta", "0.159154943", "--kernel", "unit")
doc = validated("T1 report", proc.stdout)
check("T1 verdict equality", doc is not None and doc["bounds"][0]["verdict"] == "equality")
run("verify", "--theorem", "T1", "--eps", "1", "--kernel", "unit", expect=2)

# suites validate and are byte-identical across runs
for suite in ("lemmas", "theorems", "flandrin"):
    proc = run("verify", "--suite", suite, "--grid", "256:-8:8")
    validated(f"{suite} suite report", proc.stdout)
first = run("verify", "--suite", "all", "--seed", "7").stdout
second = run("verify", "--suite", "all", "--seed", "7").stdout
check("suite all deterministic", first == second and len(first) > 0)
threaded = subprocess.run([args.tfu, "verify", "--suite", "all", "--seed", "7"], capture_output=True, text=True,
                          env={**os.environ, "TFU_THREADS": "1"}).stdout
check("suite all independent of thread count", threaded == first)

proc = run("report", "--signal", path("f.csv"), "--kernel", "unit")
doc = validated("moment report", proc.stdout)
check("moment report carries tolerance", doc is not None and doc["moments"]["tol"] == 1e-3)

# usage and I/O errors
proc = run("compute", "--signal", path("f.csv"), "--kernel", "spiral", "--out", path("x.csv"), expect=2)
check("unknown kernel named", "spiral" in proc.stderr, proc.stderr)
with open(path("bad.json"), "w") as fh:
    fh.write('{"zeta": "wide"}')
proc = run("generate", "--chirp", path("bad.json"), expect=2)
check("malformed spec field named", "zeta" in proc.stderr, proc.stderr)
run("compute", "--signal", path("missing.csv"), "--out", path("x.csv"), expect=2)
run("verify", "--suite", "everything", expect=2)
run("verify", "--grid", "abc", "--suite", "lemmas", expect=2)
run("frobnicate", expect=2)

for f in failures:
    print("FAIL:", f, file=sys.stderr)
sys.exit(1 if failures else 0)
