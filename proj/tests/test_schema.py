"""Validates every command's json output against the shipped schema and
checks that decomposition documents reconstruct the input pair."""

import json
import subprocess
import sys

import jsonschema

CASES = ["diff", "shift", "qshift", "shift-qshift", "qshift-shift",
         "mixed-sx", "mixed-qx", "mixed-sy", "mixed-qy"]
Q_CASES = {"qshift", "shift-qshift", "qshift-shift", "mixed-qx", "mixed-qy"}
KINDS = {
    "diff": ["exact", "logder", "random"],
    "mixed-sx": ["exact", "random"], "mixed-qx": ["exact", "random"],
    "mixed-sy": ["exact", "random"], "mixed-qy": ["exact", "random"],
}


def run(binary, args, stdin=None):
    p = subprocess.run([binary, *args, "--format", "json"], input=stdin,
                       capture_output=True, text=True, check=False)
    if p.returncode != 0:
        raise AssertionError(f"{args}: exit {p.returncode}: {p.stderr}")
    return p.stdout


def q_args(case):
    return ["--q", "2/3"] if case in Q_CASES else []


def main():
    binary, schema_path = sys.argv[1], sys.argv[2]
    with open(schema_path, encoding="utf-8") as fh:
        validator = jsonschema.Draft202012Validator(json.load(fh))

    checked = 0

    def validate(text):
        nonlocal checked
        doc = json.loads(text)
        validator.validate(doc)
        checked += 1
        return doc

    for case in CASES:
        for kind in KINDS.get(case, ["exact", "cyclic", "random"]):
            for seed in range(4):
                gen = validate(run(binary, ["generate", "--case", case, *q_args(case),
                                            "--kind", kind, "--seed", str(seed)]))
                pair = ["-f", gen["f"], "-g", gen["g"]]
                validate(run(binary, ["verify", "--case", case, *q_args(case), *pair]))
                dec_text = run(binary, ["decompose", "--case", case, *q_args(case), *pair])
                validate(dec_text)
                back = validate(run(binary, ["reconstruct"], stdin=dec_text))
                if (back["f"], back["g"]) != (gen["f"], gen["g"]) or not back["verified"]:
                    raise AssertionError(f"{case}/{kind}/{seed}: reconstruct differs")

    exprs = ["(1-x^2)/(x^2+1)^2", "1/(y^2*(y+1))", "3+y+1/(2/3*y-1)^2", "1/(x+y)+x^2*y"]
    for f in exprs:
        for var in ["x", "y"]:
            for op in ["hermite", "abramov", "qabramov"]:
                extra = ["--q", "2/3"] if op == "qabramov" else []
                validate(run(binary, ["reduce", "--var", var, "--op", op, *extra, "-f", f]))
            for kind in ["pseudo", "shift", "qshift"]:
                extra = ["--q", "2/3"] if kind == "qshift" else []
                validate(run(binary, ["residues", "--var", var, "--kind", kind, *extra, "-f", f]))
    validate(run(binary, ["residues", "--var", "y", "--kind", "diff", "-f", "1/(y^2+x)"]))

    if validator.is_valid({"command": "verify", "case": "diff"}):
        raise AssertionError("schema accepts an incomplete document")

    print(f"{checked} documents valid")


if __name__ == "__main__":
    main()
