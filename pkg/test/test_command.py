"""
CUTSPEC - Cut monoids, quasi-valuations and prime spectra
MIT License

Copyright (c) 2026 cutspec developers

Permission is hereby granted, free of charge, to any person obtaining a copy
of this software and associated documentation files (the "Software"), to deal
in the Software without restriction, including without limitation the rights
to use, copy, modify, merge, publish, distribute, sublicense, and/or sell
copies of the Software, and to permit persons to whom the Software is
furnished to do so, subject to the following conditions:

The above copyright notice and this permission notice shall be included in all
copies or substantial portions of the Software.

THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM,
OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN THE
SOFTWARE.
"""
import contextlib
import io
import json
import os
import tempfile

from cutspec import command
from cutspec.checks import instance_digest
from cutspec.instances import read_instance_spec

from . import TestCase, fixture_names, test_instances


def run(argv):
    """Runs the command line in process; returns (code, stdout, stderr)."""
    out, err = io.StringIO(), io.StringIO()
    args = command.parse(argv)
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        code = command.main(args)
    return code, out.getvalue(), err.getvalue()


class TestParser(TestCase):
    def test_defaults(self):
        args = command.parse(["verify"])
        self.assertEqual(args.target, "all")
        self.assertEqual(args.samples, 1000)
        self.assertEqual(args.seed, 0)
        self.assertEqual(args.jobs, 1)
        self.assertFalse(args.timing)
        args = command.parse(["-vv", "qv", "-i", "m2_ov", "-e", "[]"])
        self.assertEqual(args.verbose, 2)
        self.assertEqual(args.which, "all")

    def test_rejects(self):
        for argv in (["cut", "top"], ["qv", "-i", "m2_ov"], [],
                     ["qv", "-i", "m2_ov", "-e", "[]", "-w", "best"]):
            with self.subTest(argv=argv), contextlib.redirect_stderr(
                io.StringIO()
            ):
                with self.assertRaises(SystemExit):
                    command.parse(argv)


class TestCut(TestCase):
    def test_expression(self):
        code, out, _ = run(["cut", "embed([1, 2]) + prefix([3])", "-r", "2"])
        self.assertEqual(code, command.EXIT_OK)
        self.assertEqual(json.loads(out), {"cut": "prefix", "p": [4]})

    def test_bad_expression(self):
        code, out, err = run(["cut", "embed(", "-r", "1"])
        self.assertEqual(code, command.EXIT_ERROR)
        self.assertEqual(out, "")
        self.assertIn("position", err)


class TestQv(TestCase):
    def test_all(self):
        element = json.dumps({"e00": [[1, 1, [0, 2]]]})
        code, out, _ = run(["qv", "-i", "m2_ov", "-e", element])
        self.assertEqual(code, command.EXIT_OK)
        report = json.loads(out)
        self.assertEqual(report["instance"], "m2_ov")
        expected = {"cut": "prefix", "p": [0, 2]}
        self.assertEqual(
            report["values"],
            {"filter": expected, "min_formula": expected,
             "entry_min": expected},
        )

    def test_skips_undefined(self):
        element = json.dumps({"x": [[1, 1, [0]]]})
        code, out, _ = run(["qv", "-i", "dualnum_ax_x2", "-e", element])
        self.assertEqual(code, command.EXIT_OK)
        self.assertEqual(list(json.loads(out)["values"]), ["filter"])

    def test_hypothesis_unmet(self):
        element = json.dumps({"e11": [[1, 1, [0]]]})
        code, _, err = run(
            ["qv", "-i", "diag_f_ov", "-e", element, "-w", "min_formula"]
        )
        self.assertEqual(code, command.EXIT_ERROR)
        self.assertIn("cutspec qv", err)

    def test_not_a_member(self):
        element = json.dumps({"e01": [[1, 1, [0]]]})
        code, _, _ = run(["qv", "-i", "r1_example", "-e", element])
        self.assertEqual(code, command.EXIT_ERROR)


class TestSpec(TestCase):
    def test_base_map(self):
        code, out, _ = run(["spec", "-r", "2"])
        self.assertEqual(code, command.EXIT_OK)
        report = json.loads(out)
        self.assertIsNone(report["instance"])
        self.assertEqual(report["spec_size"], 3)
        self.assertEqual(report["completeness"], "exact")

    def test_instance(self):
        code, out, _ = run(["spec", "-i", test_instances["upper_triangular"]])
        self.assertEqual(code, command.EXIT_OK)
        report = json.loads(out)
        self.assertEqual(report["instance"], "upper_triangular")
        self.assertEqual(report["spec_size"], 4)
        self.assertEqual(
            report["properties"]["verdicts"]["GU"]["status"], "pass"
        )

    def test_errors(self):
        for argv in (["spec"], ["spec", "-i", "no_such_fixture"],
                     ["spec", "-i", "m2_ov", "-b", "10"]):
            with self.subTest(argv=argv):
                code, _, _ = run(argv)
                self.assertEqual(code, command.EXIT_ERROR)


class TestVerify(TestCase):
    def test_conformant_fixture(self):
        with tempfile.TemporaryDirectory() as tmp:
            report_file = os.path.join(tmp, "report.json")
            code, out, _ = run(
                ["verify", "m2_ov", "-n", "40", "-o", report_file,
                 "--timing"]
            )
            self.assertEqual(code, command.EXIT_OK)
            self.assertEqual(out, "")
            with open(report_file, "r") as fp:
                run_report = json.load(fp)
        self.assertEqual(run_report["schema"], "cutspec/1")
        self.assertEqual(run_report["samples"], 40)
        self.assertEqual(run_report["failures"], [])
        (instance,) = run_report["instances"]
        self.assertEqual(instance["fixture"], "m2_ov")
        self.assertTrue(instance["instance_digest"].startswith("0x"))
        self.assertIn("spectrum", instance["timing"])
        self.assertTrue(all(instance["conformance"].values()))

    def test_failed_expectation(self):
        spec = read_instance_spec("dualnum_ax_x2")
        spec["expect"] = {"spec_size": 3}
        with tempfile.NamedTemporaryFile("w", suffix=".json") as fp:
            json.dump(spec, fp)
            fp.flush()
            code, out, err = run(["verify", fp.name, "-n", "30"])
        self.assertEqual(code, command.EXIT_NONCONFORMANT)
        run_report = json.loads(out)
        self.assertEqual(run_report["failures"], ["dualnum_ax_x2"])
        conformance = run_report["instances"][0]["conformance"]
        self.assertFalse(conformance["expect:spec_size"])
        self.assertIn("dualnum_ax_x2", err)

    def test_invalid_instance(self):
        code, out, _ = run(
            ["verify", test_instances["corrupted_closure"], "-n", "10"]
        )
        self.assertEqual(code, command.EXIT_NONCONFORMANT)
        instance = json.loads(out)["instances"][0]
        self.assertFalse(instance["suites"]["validate"]["valid"])
        self.assertEqual(instance["suites"]["validate"]["witness"], [0, 1, 0])

    def test_fixture_dir(self):
        with tempfile.TemporaryDirectory() as tmp:
            spec = read_instance_spec("localization_subring")
            with open(os.path.join(tmp, "local.json"), "w") as fp:
                json.dump(spec, fp)
            code, out, _ = run(
                ["verify", "--fixture-dir", tmp, "-n", "30"]
            )
        self.assertEqual(code, command.EXIT_OK)
        names = [item["fixture"] for item in json.loads(out)["instances"]]
        self.assertEqual(names, ["localization_subring"])

    def test_non_unital_conditions(self):
        code, out, _ = run(["verify", "r2_example", "-n", "30"])
        self.assertEqual(code, command.EXIT_OK)
        (instance,) = json.loads(out)["instances"]
        conditions = instance["suites"]["conditions"]
        self.assertVerdict(conditions, "not_applicable")
        for key in ("a", "b", "b_witness", "units", "c"):
            self.assertIsNone(conditions[key], key)
        self.assertNotIn("a_iff_b", instance["conformance"])
        self.assertTrue(instance["passed"])

    def test_shipped_fixtures(self):
        code, out, _ = run(["verify", "-n", "20"])
        self.assertEqual(code, command.EXIT_OK)
        run_report = json.loads(out)
        names = [item["fixture"] for item in run_report["instances"]]
        self.assertEqual(names, fixture_names)
        self.assertEqual(run_report["failures"], [])
        self.assertTrue(run_report["passed"])

    def test_reports_are_reproducible(self):
        argv = ["verify", "-n", "20", "-s", "7"]
        with tempfile.TemporaryDirectory() as tmp:
            contents = []
            for i, jobs in enumerate(("1", "1", "3")):
                path = os.path.join(tmp, f"run{i}.json")
                code, _, _ = run(argv + ["-j", jobs, "-o", path])
                self.assertEqual(code, command.EXIT_OK)
                with open(path, "rb") as fp:
                    contents.append(fp.read())
        self.assertEqual(contents[0], contents[1])
        self.assertEqual(contents[0], contents[2])
        _, out, _ = run(argv)
        self.assertEqual(out.encode("utf-8"), contents[0])


class TestDigest(TestCase):
    def test_key_order(self):
        spec = read_instance_spec("m2_ov")
        shuffled = dict(reversed(list(spec.items())))
        self.assertEqual(instance_digest(spec), instance_digest(shuffled))
        self.assertRegex(instance_digest(spec), r"^0x[0-9a-f]{2}$")

    def test_content(self):
        spec = read_instance_spec("m2_ov")
        other = dict(spec, rank=1)
        self.assertNotEqual(instance_digest(spec), instance_digest(other))
