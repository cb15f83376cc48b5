import contextlib
import io
import json
import logging
import tempfile
import unittest
from pathlib import Path

from hyperfan import exceptions
from hyperfan.cli import main, parse_invocation, run
from hyperfan.models.cli import CliInvocation, Subcommand

# Configure logging
logging.basicConfig(level=logging.DEBUG)

FAN4_DOCUMENT = '{"n":4,"r":3,"edges":[[0,1,2],[0,2,3]]}\n'


def invoke(argv: list[str], stdin: str = "") -> tuple[int, str, str]:
    inv, _ = parse_invocation(argv)
    out, err = io.StringIO(), io.StringIO()
    status = run(inv, stdout=out, stderr=err, stdin=io.StringIO(stdin))
    return status, out.getvalue(), err.getvalue()


class TestParsing(unittest.TestCase):
    def test_defaults(self) -> None:
        inv, verbose = parse_invocation(["scan", "7"])
        self.assertEqual(inv.subcommand, Subcommand.SCAN)
        self.assertEqual(inv.n, 7)
        self.assertEqual(inv.tol, 1e-10)
        self.assertEqual(inv.max_iter, 1_000_000)
        self.assertEqual(inv.workers, 1)
        self.assertEqual(inv.cache, "none")
        self.assertEqual(verbose, 0)

    def test_flags(self) -> None:
        inv, verbose = parse_invocation(
            ["scan", "9", "--dedupe", "--workers", "3", "--tol", "1e-9", "--seed", "4", "--shift", "2", "-vv"],
        )
        self.assertTrue(inv.dedupe)
        self.assertEqual(inv.workers, 3)
        self.assertEqual(inv.solver_config().seed, 4)
        self.assertEqual(inv.solver_config().shift, 2.0)
        self.assertEqual(verbose, 2)

    def test_usage_errors(self) -> None:
        for argv in (
            ["fan", "2"],
            ["scan", "13"],
            ["scan", "6", "--workers", "0"],
            ["lambda", "--tol", "-1"],
            ["bound", "x"],
            ["plot", "5"],
            ["asymptotics", "2"],
            ["scan", "5", "--cache", "disk"],
            [],
        ):
            with self.subTest(argv=argv), self.assertRaises(exceptions.UsageError):
                parse_invocation(argv)

    def test_max_n_override(self) -> None:
        inv, _ = parse_invocation(["scan", "13", "--max-n", "13"])
        self.assertEqual(inv.max_n, 13)


class TestCommands(unittest.TestCase):
    def test_fan(self) -> None:
        status, out, err = invoke(["fan", "4"])
        self.assertEqual(status, 0)
        self.assertEqual(out, "# hyperfan fan n=4\n" + FAN4_DOCUMENT)
        self.assertEqual(err, "")

    def test_lambda_from_stdin(self) -> None:
        status, out, _ = invoke(["lambda", "-"], stdin="# from fan\n" + FAN4_DOCUMENT)
        self.assertEqual(status, 0)
        header, body = out.splitlines()
        self.assertTrue(header.startswith("# hyperfan lambda input=- tol=1e-10"))
        record = json.loads(body)
        self.assertAlmostEqual(record["lambda"], 2.0 ** (2.0 / 3.0), delta=1e-8)
        self.assertEqual(len(record["vector"]), 4)

    def test_lambda_with_cache(self) -> None:
        first = invoke(["lambda", "--cache", "memory"], stdin=FAN4_DOCUMENT)
        second = invoke(["lambda", "--cache", "memory"], stdin=FAN4_DOCUMENT)
        self.assertEqual(first, second)

    def test_enumerate(self) -> None:
        status, out, _ = invoke(["enumerate", "6"])
        lines = out.splitlines()
        self.assertEqual(status, 0)
        self.assertEqual(lines[0], "# hyperfan enumerate n=6 dedupe=false")
        self.assertEqual(lines[-1], "count: 14")
        self.assertEqual(len(lines), 16)
        _, out, _ = invoke(["enumerate", "6", "--dedupe"])
        self.assertEqual(out.splitlines()[-1], "count: 3")

    def test_scan(self) -> None:
        status, out, _ = invoke(["scan", "6", "--dedupe"])
        self.assertEqual(status, 0)
        lines = out.splitlines()
        self.assertTrue(lines[0].startswith("# hyperfan scan n=6 dedupe=true"))
        self.assertEqual(lines[1], "rank,triangulation,lambda,gap_to_fan,residual,iterations,is_fan,canonical,tie_class,error")
        rows = [line for line in lines[2:] if not line.startswith("#")]
        self.assertEqual(len(rows), 3)
        self.assertTrue(any(line.startswith("# summary raw_count=14 canonical_count=3") for line in lines))

    def test_scan_is_reproducible(self) -> None:
        self.assertEqual(invoke(["scan", "7"]), invoke(["scan", "7"]))
        self.assertEqual(invoke(["scan", "7"])[1], invoke(["scan", "7", "--workers", "2"])[1])

    def test_bound(self) -> None:
        status, out, _ = invoke(["bound", "3"])
        self.assertEqual(status, 0)
        lines = out.splitlines()
        self.assertEqual(lines[1], "n,lambda_fan,bound,ratio,ok")
        self.assertTrue(lines[2].startswith("3,"))
        self.assertTrue(lines[2].endswith(",true"))

    def test_asymptotics(self) -> None:
        status, out, _ = invoke(["asymptotics", "10", "100"])
        self.assertEqual(status, 0)
        lines = out.splitlines()
        self.assertEqual(lines[0].split()[:4], ["#", "hyperfan", "asymptotics", "ns=10,100"])
        self.assertEqual([line.split(",")[0] for line in lines[2:]], ["10", "100"])

    def test_check(self) -> None:
        with tempfile.TemporaryDirectory() as directory:
            path = Path(directory) / "fan6.json"
            path.write_text(invoke(["fan", "6"])[1], encoding="utf-8")
            status, out, _ = invoke(["check", str(path)])
        self.assertEqual(status, 0)
        self.assertIn("hyperedges: 4", out)
        self.assertIn("shadow_edges: 9", out)
        self.assertIn("outerplanar: true", out)
        self.assertIn("outer_cycle: 0,1,2,3,4,5", out)
        self.assertIn("maximal: true", out)
        self.assertIn("lambda: ", out)

    def test_check_non_outerplanar(self) -> None:
        document = '{"n":4,"r":3,"edges":[[0,1,2],[0,1,3],[0,2,3],[1,2,3]]}'
        status, out, _ = invoke(["check"], stdin=document)
        self.assertEqual(status, 0)
        self.assertIn("outerplanar: false", out)
        self.assertIn("failure_reason: shadow_not_outerplanar", out)
        self.assertIn("maximal: false", out)

    def test_output_file(self) -> None:
        with tempfile.TemporaryDirectory() as directory:
            path = Path(directory) / "out.json"
            status, out, _ = invoke(["fan", "4", "--out", str(path)])
            self.assertEqual(status, 0)
            self.assertEqual(out, "")
            self.assertEqual(path.read_text(encoding="utf-8"), "# hyperfan fan n=4\n" + FAN4_DOCUMENT)


class TestFailures(unittest.TestCase):
    def test_missing_file(self) -> None:
        status, out, err = invoke(["lambda", "/nonexistent/hypergraph.json"])
        self.assertEqual(status, 1)
        self.assertEqual(out, "")
        record = json.loads(err)
        self.assertEqual(record["code"], 4003)
        self.assertEqual(record["error"], "InputFileError")

    def test_malformed_document(self) -> None:
        status, _, err = invoke(["lambda"], stdin='{"n": 4,\n"edges": [[0, 1, 2]] oops}')
        self.assertEqual(status, 1)
        record = json.loads(err)
        self.assertEqual(record["code"], 4001)
        self.assertEqual(record["details"]["line"], 2)

    def test_convergence_failure(self) -> None:
        status, _, err = invoke(["lambda", "--max-iter", "1", "--tol", "1e-15"], stdin=invoke(["fan", "6"])[1])
        self.assertEqual(status, 1)
        record = json.loads(err)
        self.assertEqual(record["code"], 2003)
        self.assertIn("bracket_low", record["details"])

    def test_main_reports_usage_errors(self) -> None:
        err = io.StringIO()
        with contextlib.redirect_stderr(err):
            status = main(["fan", "2"])
        self.assertEqual(status, 1)
        self.assertEqual(json.loads(err.getvalue())["code"], 4002)

    def test_run_with_model(self) -> None:
        inv = CliInvocation(subcommand=Subcommand.FAN, n=5)
        out = io.StringIO()
        self.assertEqual(run(inv, stdout=out), 0)
        self.assertIn('"edges":[[0,1,2],[0,2,3],[0,3,4]]', out.getvalue())


if __name__ == "__main__":
    unittest.main()
