import io
import json

import pytest

from ncalg.ncpoly import ONE, T1, X, Y
from deriv.derivation import DEFAULT_CAP
from cli.app import EXIT_DOMAIN_ERROR, EXIT_OK, EXIT_USAGE_ERROR, main
from cli.report import poly_from_json, poly_to_json
from cli.verify import run_checks


def run_cli(*argv, stdin=""):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), stdin=io.StringIO(stdin), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def structured(*argv):
    code, out, _ = run_cli(*argv, "--format", "structured")
    assert code == EXIT_OK
    return json.loads(out)


class TestTextOutput:
    def test_derive(self):
        code, out, _ = run_cli("derive", "--f", "X", "--expr", "Y^2")
        assert code == EXIT_OK
        assert out.splitlines()[0] == "command: derive"
        assert "value: YX + XY" in out
        assert "delta degree of input: 2" in out

    def test_derive_commutator(self):
        code, out, _ = run_cli("derive", "--f", "X^2 + 1", "--expr", "comm(Y, X)")
        assert code == EXIT_OK
        assert "value: 0" in out

    def test_decode(self):
        code, out, _ = run_cli("decode", "--m", "1", "--word", "YYXX")
        assert code == EXIT_OK
        assert "bracketed: {T1}" in out

    def test_gens(self):
        code, out, _ = run_cli("gens", "--f", "X", "--weight-max", "4")
        assert code == EXIT_OK
        assert "count: 3" in out

    def test_expression_from_stdin(self):
        code, out, _ = run_cli("eval", "--expr", "-", stdin="comm(Y, X)\n")
        assert code == EXIT_OK
        assert "value: YX - XY" in out
        assert "abelianization: 0" in out


class TestStructuredOutput:
    def test_kernel(self):
        report = structured("kernel", "--f", "X", "--weight", "2", "--n", "2")
        assert report["command"] == "kernel"
        assert report["parameters"]["weight"] == 2
        assert report["results"]["dimension"] == 2
        assert poly_from_json(report["results"]["basis"][0]) == T1
        assert report["results"]["iterated_dimension"] == 3

    def test_serialization(self):
        report = structured("eval", "--expr", "3/2*X^2 - 1")
        assert report["results"]["value"] == [
            {"word": "XX", "coeff": "3/2"},
            {"word": "1", "coeff": "-1/1"},
        ]
        assert report["results"]["leading_monomial"] == "XX"

    def test_tseq(self):
        report = structured("tseq", "--f", "X", "--n", "2")
        assert poly_from_json(report["results"]["value"]) == Y * T1 * X - X * T1 * Y
        assert report["results"]["leading_monomial"] == "YYXX"

    def test_expmap(self):
        report = structured("expmap", "--f", "X", "--expr", "Y^2")
        assert poly_from_json(report["results"]["value"]) == (Y + X) * (Y + X)

    def test_rewrite(self):
        report = structured("rewrite", "--f", "X", "--expr", "X*comm(Y, X) + 2*X^3")
        assert report["results"]["terms"] == [
            {"factors": ["X", "T1"], "coeff": "1/1"},
            {"factors": ["X", "X", "X"], "coeff": "2/1"},
        ]

    def test_ak(self):
        report = structured("ak", "--weight", "4")
        assert [poly_from_json(p) for p in report["results"]["basis"]] == [T1 * T1, T1, ONE]

    def test_output_is_deterministic(self):
        argv = ("gens", "--f", "X^2", "--weight-max", "11")
        assert run_cli(*argv, "--format", "structured") == run_cli(*argv, "--format", "structured")


class TestExitCodes:
    @pytest.mark.parametrize(
        "argv",
        [
            ("derive", "--expr", "Y"),
            ("frobnicate",),
            ("kernel", "--f", "X", "--weight", "-1"),
            ("eval", "--expr", "X +"),
            ("derive", "--f", "X + Y", "--expr", "Y"),
            ("gens", "--f", "X", "--m", "2", "--weight-max", "4"),
            ("decode", "--word", "YYXX"),
            ("gens", "--f", "X", "--weight-max", "40"),
            ("tseq", "--f", "X", "--n", "1000"),
            ("eval", "--expr", "X^100000000"),
            ("eval", "--expr", "X^²"),
        ],
    )
    def test_usage_errors(self, argv):
        code, out, _ = run_cli(*argv)
        assert code == EXIT_USAGE_ERROR
        assert out == ""

    @pytest.mark.parametrize(
        "argv",
        [
            ("decode", "--m", "1", "--word", "YX"),
            ("rewrite", "--f", "X", "--expr", "Y"),
            ("kernel", "--f", "X", "--weight", "99"),
            ("derive", "--f", "0", "--expr", "Y"),
            ("rewrite", "--f", "X", "--expr", "X^13"),
        ],
    )
    def test_domain_errors(self, argv):
        code, _, err = run_cli(*argv)
        assert code in (EXIT_DOMAIN_ERROR, EXIT_USAGE_ERROR)
        assert err.startswith("error:")

    def test_domain_error_code(self):
        code, _, err = run_cli("decode", "--m", "1", "--word", "YX")
        assert code == EXIT_DOMAIN_ERROR
        assert "not a generator leading monomial" in err

    def test_help(self):
        assert run_cli("--help")[0] == EXIT_OK


def test_verify_passes_on_small_weights():
    code, out, _ = run_cli("verify", "--weight-max", "4", "--seed", "7")
    assert code == EXIT_OK
    assert out.splitlines()[-1] == "overall: PASS"
    assert out.count("PASS ") == 8


def test_every_check_passes_at_full_weights():
    checks = run_checks(12, 0, DEFAULT_CAP)
    assert len(checks) == 8
    assert [c.name for c in checks if not c.passed] == []


def test_poly_json_round_trip():
    p = X * Y - 2 * T1 + 5
    assert poly_from_json(poly_to_json(p)) == p
    with pytest.raises(ValueError):
        poly_from_json([{"word": "X", "coeff": "1"}, {"word": "X", "coeff": "2"}])
