#!/usr/bin/env python3
"""Drives the pnb binary: exit codes, golden outputs, schema validity, determinism."""

import json
import pathlib
import re
import subprocess
import sys
import tempfile
import unittest

import jsonschema
from referencing import Registry, Resource

PNB = sys.argv.pop(1)
SCHEMAS = pathlib.Path(sys.argv.pop(1))


def load_registry():
    resources = []
    for path in SCHEMAS.glob("*.schema.json"):
        doc = json.loads(path.read_text())
        resources.append((path.name, Resource.from_contents(doc)))
    return Registry().with_resources(resources)


REGISTRY = load_registry()


def validate(payload, schema_name):
    schema = json.loads((SCHEMAS / schema_name).read_text())
    validator = jsonschema.Draft202012Validator(schema, registry=REGISTRY)
    validator.validate(payload)


def run(*args, stdin=None, env=None):
    return subprocess.run([PNB, *args], input=stdin, capture_output=True, text=True, env=env, timeout=120)


def run_ok(*args, **kw):
    res = run(*args, **kw)
    if res.returncode != 0:
        raise AssertionError(f"pnb {' '.join(args)} exited {res.returncode}: {res.stderr}")
    return res.stdout


def run_json(*args, **kw):
    return json.loads(run_ok(*args, **kw))


class Golden(unittest.TestCase):
    def test_enumerate_csv_ex1(self):
        lines = run_ok("enumerate", "--n", "3", "--rank", "4", "--degree", "9", "--format", "csv").splitlines()
        self.assertEqual(len(lines), 6)
        self.assertIn("1,1,1,1,1,4", lines)
        self.assertIn("5,4", lines)

    def test_admissible_equality_case(self):
        res = run("admissible", "--n", "3", "--a", "1", "--b", "0,0,0,1")
        self.assertEqual(res.returncode, 0)
        self.assertEqual(res.stdout.strip(), "false")
        self.assertEqual(run_ok("admissible", "--n", "3", "--a", "2", "--b", "0,0,0,1").strip(), "true")

    def test_lattice_json_eight_nodes(self):
        out = run_json("lattice", "--n", "3", "--seq", "5,4", "--anchor", "-1", "--max-reg", "2", "--format", "json")
        validate(out, "lattice.schema.json")
        self.assertEqual(len(out["nodes"]), 8)
        self.assertEqual(len(out["edges"]), 12)
        self.assertEqual(out["grade_sizes"], [1, 3, 3, 1])
        self.assertEqual(out["cmax"], [0, 1, 2])

    def test_lattice_dot(self):
        out = run_ok("lattice", "--n", "3", "--seq", "5,4", "--anchor", "-1", "--max-reg", "2", "--format", "dot")
        self.assertTrue(out.startswith("digraph"))
        self.assertEqual(len(re.findall(r"^  n\d+ -> n\d+ ", out, re.M)), 12)

    def test_caret_input(self):
        plain = run_json("hilbert", "--n", "3", "--seq", "1,1,1,1,1,4", "--anchor", "0")
        caret = run_json("hilbert", "--n", "3", "--seq", "1^5,4", "--anchor", "0")
        self.assertEqual(plain, caret)
        self.assertEqual(caret["minimal"]["b"], [0, 5, 5, 5])


class Schemas(unittest.TestCase):
    def test_enumerate_variants(self):
        validate(run_json("enumerate", "--n", "3", "--rank", "4", "--degree", "9"), "enumerate.schema.json")
        validate(run_json("enumerate", "--n", "3", "--rank", "4", "--max-reg", "1"), "enumerate.schema.json")
        validate(run_json("enumerate", "--n", "3", "--rank", "4", "--max-reg", "0", "--c1", "5"), "enumerate.schema.json")

    def test_hilbert_variants(self):
        validate(run_json("hilbert", "--n", "3", "--seq", "5,4", "--anchor", "-1", "--at", "-1,0,40,400"), "hilbert.schema.json")
        validate(run_json("hilbert", "--n", "2", "--a", "1", "--b", "0,0,0"), "hilbert.schema.json")
        validate(run_json("hilbert", "--n", "3", "--delta", "1,2,4", "--start", "0"), "hilbert.schema.json")
        validate(run_json("hilbert", "--n", "3", "--delta", "2,1,4", "--start", "0"), "hilbert.schema.json")

    def test_big_values_become_strings(self):
        out = run_json("hilbert", "--n", "3", "--seq", "5,4", "--anchor", "-1", "--at", "10000000")
        self.assertIsInstance(out["values"]["10000000"], str)

    def test_present_check_roundtrip(self):
        for mode in ("explicit", "random"):
            mat = run_json("present", "--n", "3", "--a", "2", "--b", "0,0,0,1,1", "--mode", mode, "--seed", "7")
            validate(mat, "matrix.schema.json")
            res = run_json("check", "-", stdin=json.dumps(mat))
            validate(res, "check.schema.json")
            self.assertTrue(res["bundle"])

    def test_check_rejects_zero_block(self):
        mat = {"n": 3, "p": 32003, "a": [2], "b": [0, 0, 0, 1, 1], "entries": [["x0^2"], ["x1^2"], ["0"], ["0"], ["0"]]}
        res = run_json("check", "-", stdin=json.dumps(mat))
        validate(res, "check.schema.json")
        self.assertFalse(res["bundle"])
        self.assertIsNone(res["minimal_pair"])

    def test_check_multiple_files_with_jobs(self):
        with tempfile.TemporaryDirectory() as tmp:
            paths = []
            for seed in range(4):
                mat = run_ok("present", "--n", "3", "--a", "2", "--b", "0,0,0,1,1", "--mode", "random", "--seed", str(seed))
                path = pathlib.Path(tmp) / f"m{seed}.json"
                path.write_text(mat)
                paths.append(str(path))
            serial = run_json("check", *paths)
            parallel = run_json("--jobs", "3", "check", *paths)
            validate(serial, "check.schema.json")
            self.assertEqual(serial, parallel)
            self.assertEqual(len(serial), 4)

    def test_deform(self):
        out = run_json("deform", "--n", "3", "--small", "2:0,0,0,1,1", "--big", "2,2:0,0,0,1,1,2", "--samples", "5", "--seed", "3")
        validate(out, "deform.schema.json")
        self.assertEqual(out["samples"][0]["t"], 0)
        self.assertEqual(out["samples"][0]["pair"], out["big"])
        self.assertGreaterEqual(sum(s.get("equals_small", False) for s in out["samples"][1:]), 4)


class Errors(unittest.TestCase):
    def assert_domain_error(self, code, *args, stdin=None):
        res = run(*args, stdin=stdin)
        self.assertEqual(res.returncode, 1, res.stderr)
        err = json.loads(res.stderr)
        validate(err, "error.schema.json")
        self.assertEqual(err["error"], code)
        self.assertEqual(res.stdout, "")

    def test_domain_errors(self):
        self.assert_domain_error("NotAdmissible", "present", "--n", "3", "--a", "1", "--b", "0,0,0,1")
        self.assert_domain_error("InvalidBundleSequence", "hilbert", "--n", "3", "--seq", "4,4")
        self.assert_domain_error("RegularityTooSmall", "lattice", "--n", "3", "--seq", "5,4", "--anchor", "-1", "--max-reg", "-3")
        self.assert_domain_error("ParseError", "admissible", "--n", "3", "--a", "x", "--b", "0")
        self.assert_domain_error("ParseError", "check", "-", stdin="{not json")
        self.assert_domain_error("UnknownFormat", "--format", "dot", "enumerate", "--n", "3", "--rank", "4", "--degree", "9")
        self.assert_domain_error("NotGeneralization", "deform", "--n", "3", "--small", "2:0,0,0,1,1", "--big", "3,3:0,0,0,1,1,3")

    def test_usage_errors(self):
        self.assertEqual(run().returncode, 2)
        self.assertEqual(run("frobnicate").returncode, 2)
        self.assertEqual(run("admissible", "--n", "3", "--a", "1").returncode, 2)
        self.assertEqual(run("--format", "xml", "admissible", "--n", "3", "--a", "1", "--b", "0,0,0,1").returncode, 2)

    def test_env_prime(self):
        env = {"PNB_PRIME": "101"}
        mat = run_json("present", "--n", "3", "--a", "2", "--b", "0,0,0,1,1", env=env)
        self.assertEqual(mat["p"], 101)
        res = run("admissible", "--n", "3", "--a", "2", "--b", "0,0,0,1", env={"PNB_PRIME": "100"})
        self.assertEqual(res.returncode, 1)


class Determinism(unittest.TestCase):
    COMMANDS = [
        ["enumerate", "--n", "3", "--rank", "4", "--max-reg", "2", "--format", "csv"],
        ["--jobs", "4", "enumerate", "--n", "3", "--rank", "4", "--max-reg", "2", "--format", "csv"],
        ["lattice", "--n", "3", "--seq", "5,4", "--anchor", "-1", "--max-reg", "3", "--format", "dot"],
        ["--seed", "42", "present", "--n", "3", "--a", "2,3", "--b", "0,0,0,1,1,2,2", "--mode", "random"],
        ["--seed", "9", "deform", "--n", "3", "--small", "2:0,0,0,1,1", "--big", "2,3:0,0,0,1,1,3", "--samples", "4"],
    ]

    def test_byte_identical(self):
        for cmd in self.COMMANDS:
            first = run(*cmd)
            second = run(*cmd)
            self.assertEqual(first.returncode, 0, f"{cmd}: {first.stderr}")
            self.assertEqual(first.stdout, second.stdout, cmd)

    def test_jobs_do_not_change_output(self):
        self.assertEqual(run_ok(*self.COMMANDS[0]), run_ok(*self.COMMANDS[1]))


if __name__ == "__main__":
    unittest.main(verbosity=2)
