import json
import subprocess
import sys
from fractions import Fraction as F

import pytest
from hypothesis import given, settings

from fermatreal import (
    SessionState,
    dt,
    evaluate,
    fermat,
    format_decomposition,
    from_json,
    rats,
    sqrt,
    to_json,
)
from fermatreal.errors import (
    ExprSyntaxError,
    FermatRealError,
    NameLookupError,
    ParseError,
)

from conftest import fermat_reals


class TestFormatting:
    def test_examples(self):
        assert format_decomposition(2 + 3 * dt(2) - F(1, 3) * dt(1)) == "2 + 3*dt_2 - 1/3*dt"
        assert format_decomposition(dt(6) + dt(F(3, 2))) == "dt_6 + dt_3/2"
        assert format_decomposition(fermat(0)) == "0"
        assert format_decomposition(-dt(2)) == "-dt_2"
        assert format_decomposition(fermat(F(-7, 2))) == "-7/2"

    def test_unit_coefficients_are_implicit(self):
        assert format_decomposition(dt(1) - dt(F(1, 1))) == "0"
        assert format_decomposition(1 + dt(1)) == "1 + dt"
        assert format_decomposition(1 - dt(1)) == "1 - dt"

    @given(fermat_reals())
    @settings(max_examples=150, deadline=None)
    def test_round_trip(self, x):
        assert evaluate(format_decomposition(x)) == x


class TestRats:
    def test_recognizes_simple_fractions(self):
        import math

        v = F(math.sqrt(2))
        assert rats(v, F(1, 100)) == F(17, 12)
        assert abs(rats(v, F(1, 10**6)) - v) <= F(1, 10**6) * 2

    def test_exact_values_unchanged(self):
        assert rats(F(3, 7)) == F(3, 7)
        assert rats(F(0)) == 0

    def test_negative(self):
        got = rats(F(-1008, 635) + F(1, 10**12), F(1, 10**6))
        assert got == F(-1008, 635)


class TestParser:
    def test_precedence(self):
        assert evaluate("2 + 3 * 4") == fermat(14)
        assert evaluate("2 * 3 ^ 2") == fermat(18)
        assert evaluate("-2 ^ 2") == fermat(-4)
        assert evaluate("2 ^ 3 ^ 2") == fermat(512)
        assert evaluate("-2 * 3") == fermat(-6)

    def test_dt_forms(self):
        assert evaluate("dt") == dt(1)
        assert evaluate("dt_3/2") == dt(F(3, 2))
        assert evaluate("dt(3/2)") == dt(F(3, 2))
        assert evaluate("2*dt_2") == 2 * dt(2)

    def test_decimals_are_exact(self):
        assert evaluate("0.25") == fermat(F(1, 4))

    def test_functions(self):
        assert evaluate("sqrt(dt_2 + dt)") == sqrt(dt(2) + dt(1))
        assert evaluate("st(2 + dt_2)") == fermat(2)
        assert evaluate("omega(dt_3 + dt)") == fermat(3)
        assert evaluate("abs(0 - dt_2)") == dt(2)
        assert evaluate("eqUpTo(2, dt_2, dt_2 + dt)") is True
        assert evaluate("dF(1 + dt_2, 1)") == fermat(0)
        assert evaluate("dOmega(1 + dt_2, 1)") == fermat(2)

    def test_assignment(self):
        state = SessionState()
        evaluate("x = dt_2 + dt", state)
        assert evaluate("x * x", state) == (dt(2) + dt(1)) ** 2

    def test_ideal_classification(self):
        kind = evaluate("classifyIdeal(dt_2, dt_3)")
        assert repr(kind) == "I_3"

    def test_caputo_check(self):
        assert evaluate("caputoCheck(1/2, 3, dt_3/2)") is True

    def test_syntax_errors_carry_position(self):
        with pytest.raises(ExprSyntaxError) as err:
            evaluate("2 +* 3")
        assert err.value.col == 4
        with pytest.raises(ExprSyntaxError):
            evaluate("sqrt(dt")
        with pytest.raises(ExprSyntaxError):
            evaluate("2 $ 3")

    def test_name_errors(self):
        with pytest.raises(NameLookupError):
            evaluate("y + 1")
        with pytest.raises(NameLookupError):
            evaluate("frobnicate(2)")

    def test_arity_errors(self):
        with pytest.raises(FermatRealError):
            evaluate("sqrt(1, 2)")


class TestJson:
    def test_schema(self):
        doc = json.loads(to_json(2 + 3 * dt(2)))
        assert doc == {
            "std": "2",
            "exact": True,
            "terms": [{"coef": "3", "exact": True, "order": "2"}],
        }

    @given(fermat_reals())
    @settings(max_examples=150, deadline=None)
    def test_round_trip(self, x):
        assert from_json(to_json(x)) == x

    def test_inexact_flag_survives(self):
        y = sqrt(2 + dt(1))
        z = from_json(to_json(y))
        assert not z.std.exact
        assert z == y

    def test_rejects_malformed(self):
        with pytest.raises(ParseError):
            from_json("not json")
        with pytest.raises(ParseError):
            from_json('{"std": "1"}')
        with pytest.raises(ParseError):
            from_json('{"std": "1/0", "exact": true, "terms": []}')
        with pytest.raises(ParseError):
            from_json('{"std": "1", "exact": true, "terms": [{"coef": "1"}]}')
        with pytest.raises(ParseError):
            from_json('{"std": "1", "exact": true, "terms": [{"coef": "1", "exact": true, "order": "1/2"}]}')


def run_cli(*argv, stdin=""):
    return subprocess.run(
        [sys.executable, "-m", "fermatreal.cli", *argv],
        input=stdin,
        capture_output=True,
        text=True,
    )


class TestCommandLine:
    def test_eval(self):
        r = run_cli("eval", "sqrt(dt_2 + dt)")
        assert r.returncode == 0
        assert r.stdout.strip() == "dt_4 + 1/2*dt_4/3"

    def test_eval_json(self):
        r = run_cli("--json", "eval", "2 + 3*dt_2 - 1/3*dt")
        assert r.returncode == 0
        doc = json.loads(r.stdout)
        assert doc["std"] == "2"

    def test_eval_error_codes(self):
        assert run_cli("eval", "1/0").returncode == 1
        assert run_cli("eval", "2 +* 3").returncode == 2

    def test_rats_display(self):
        r = run_cli("--rats-tol", "1/1000000", "eval", "nthroot(0 - 4*dt, 3)")
        assert r.returncode == 0
        assert r.stdout.strip() == "-1008/635*dt_3"

    def test_no_rats_display(self):
        r = run_cli("--no-rats", "eval", "sqrt(2)")
        assert r.returncode == 0
        # the raw stored rational is long and exactly reproducible
        num = r.stdout.strip().split("/")[0]
        assert len(num) > 30

    def test_precision_flag(self):
        r = run_cli("--precision", "64", "--no-rats", "eval", "sqrt(2)")
        short = r.stdout.strip()
        r2 = run_cli("--precision", "256", "--no-rats", "eval", "sqrt(2)")
        assert len(r2.stdout.strip()) > len(short)

    def test_repl_session(self):
        script = "x = dt_2 + dt\nsqrt(x)\nbroken +\nx\nquit\n"
        r = run_cli("repl", stdin=script)
        assert r.returncode == 0
        lines = r.stdout.strip().splitlines()
        assert lines[0] == "dt_2 + dt"
        assert lines[1] == "dt_4 + 1/2*dt_4/3"
        assert lines[2].startswith("syntax error")
        assert lines[3] == "dt_2 + dt"

    def test_check_suite(self):
        r = run_cli("check", "ideals", "--cases", "20")
        assert r.returncode == 0
        assert "PASS ideals.classification" in r.stdout

    def test_check_unknown_suite(self):
        assert run_cli("check", "nope").returncode == 1
