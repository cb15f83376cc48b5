import io
import json
import logging
import unittest

from hyperfan import exceptions
from hyperfan.models.hypergraph import UniformHypergraph
from hyperfan.models.verify import BoundReport
from hyperfan.outerplanar import fan
from hyperfan.serialization import (
    config_header,
    dump_hypergraph,
    dump_perron,
    format_float,
    load_hypergraph,
    perron_record,
    round_float,
    write_bound_csv,
)
from hyperfan.spectral import spectral_radius

# Configure logging
logging.basicConfig(level=logging.DEBUG)


class TestFloats(unittest.TestCase):
    def test_format(self) -> None:
        self.assertEqual(format_float(1.0 / 3.0), "0.333333333333333")
        self.assertEqual(format_float(2.0), "2")
        self.assertEqual(format_float(float("nan")), "nan")
        self.assertEqual(round_float(2.0 / 3.0), 0.666666666666667)


class TestHypergraphDocument(unittest.TestCase):
    def test_dump_is_canonical(self) -> None:
        H = UniformHypergraph.from_edges(4, [[3, 0, 2], [2, 1, 0]])
        self.assertEqual(dump_hypergraph(H), '{"n":4,"r":3,"edges":[[0,1,2],[0,2,3]]}\n')
        self.assertEqual(
            dump_hypergraph(H, "# hyperfan fan n=4"),
            '# hyperfan fan n=4\n{"n":4,"r":3,"edges":[[0,1,2],[0,2,3]]}\n',
        )

    def test_load_skips_comments(self) -> None:
        text = "# hyperfan fan n=5\n# another comment\n" + dump_hypergraph(fan(5))
        self.assertEqual(load_hypergraph(text), fan(5))

    def test_load_defaults_uniformity(self) -> None:
        self.assertEqual(load_hypergraph('{"n": 4, "edges": [[2, 3, 0], [0, 1, 2]]}'), fan(4))

    def test_malformed_json_names_line(self) -> None:
        text = '# header\n{"n": 4,\n"edges": [[0, 1, 2]] oops}\n'
        with self.assertRaises(exceptions.ParseError) as ctx:
            load_hypergraph(text)
        self.assertEqual(ctx.exception.line, 3)

    def test_invalid_field(self) -> None:
        with self.assertRaises(exceptions.ParseError) as ctx:
            load_hypergraph('{"n": "four", "edges": []}')
        self.assertEqual(ctx.exception.field, "n")
        with self.assertRaises(exceptions.ParseError) as ctx:
            load_hypergraph('{"n": 4}')
        self.assertEqual(ctx.exception.field, "edges")
        with self.assertRaises(exceptions.ParseError) as ctx:
            load_hypergraph('{"n": 4, "edges": [[0, 1, 7]]}')
        self.assertEqual(ctx.exception.field, "edges")

    def test_empty_document(self) -> None:
        with self.assertRaises(exceptions.ParseError) as ctx:
            load_hypergraph("# only a comment\n")
        self.assertEqual(ctx.exception.line, 1)
        with self.assertRaises(exceptions.ParseError):
            load_hypergraph("[1, 2]")


class TestRecords(unittest.TestCase):
    def test_perron_record(self) -> None:
        result = spectral_radius(fan(4))
        record = perron_record(result)
        self.assertEqual(
            set(record),
            {"lambda", "bracket_low", "bracket_high", "residual", "iterations", "normalization", "degenerate", "vector"},
        )
        self.assertEqual(record["normalization"], "unit-r-norm")
        self.assertEqual(record["lambda"], round_float(result.lambda_))
        header, body = dump_perron(result, "# hyperfan lambda").splitlines()
        self.assertEqual(header, "# hyperfan lambda")
        self.assertEqual(json.loads(body), record)

    def test_config_header(self) -> None:
        self.assertEqual(
            config_header("scan", n=7, dedupe=True, tol=1e-10, ns=[10, 100], output=None),
            "# hyperfan scan n=7 dedupe=true tol=1e-10 ns=10,100",
        )

    def test_bound_csv(self) -> None:
        stream = io.StringIO()
        report = BoundReport(n=3, lambda_fan=1.0, bound=1.0, ratio_to_cbrt4n=1.0 / 12.0 ** (1.0 / 3.0), ok=True)
        write_bound_csv([report], stream, "# hyperfan bound n=3")
        lines = stream.getvalue().splitlines()
        self.assertEqual(lines[0], "# hyperfan bound n=3")
        self.assertEqual(lines[1], "n,lambda_fan,bound,ratio,ok")
        self.assertEqual(lines[2], f"3,1,1,{format_float(report.ratio_to_cbrt4n)},true")


if __name__ == "__main__":
    unittest.main()
