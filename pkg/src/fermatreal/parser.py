"""Tokenizer, parser and evaluator for the little expression language.

Binary operators: ^ (right associative) binds tightest, then unary
minus, then * and /, then + and -.  ``dt(a)`` builds the basic
infinitesimal of order a; formatted output such as ``dt_3/2`` tokenizes
as a single literal so that printed decompositions parse back verbatim.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .core import FermatReal, dt, fermat, invert, pow_nat
from .errors import ExprSyntaxError, FermatRealError, NameLookupError
from .extension import builtin, ext
from .fractional import FracPoly, taylor_fractional_check
from .ideals import classify_generated
from .metrics import d_omega, d_std, eq_up_to
from .powers import nthroot, power, sqrt

_TOKEN_RE = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<dtlit>dt_(?P<dnum>\d+)(/(?P<dden>\d+))?)
  | (?P<num>\d+(\.\d+)?)
  | (?P<ident>[A-Za-z_][A-Za-z_0-9]*)
  | (?P<op>[-+*/^(),=])
    """,
    re.VERBOSE,
)


class Token:
    __slots__ = ("kind", "value", "col")

    def __init__(self, kind, value, col):
        self.kind = kind
        self.value = value
        self.col = col


def tokenize(text: str, line: int = 1):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ExprSyntaxError(
                f"unexpected character {text[pos]!r}", line, pos + 1
            )
        if m.lastgroup != "ws":
            col = pos + 1
            if m.group("dtlit"):
                order = Fraction(int(m.group("dnum")), int(m.group("dden") or 1))
                tokens.append(Token("dtlit", order, col))
            elif m.group("num"):
                tokens.append(Token("num", Fraction(m.group("num")), col))
            elif m.group("ident"):
                tokens.append(Token("ident", m.group("ident"), col))
            else:
                tokens.append(Token("op", m.group("op"), col))
        pos = m.end()
    tokens.append(Token("eof", None, len(text) + 1))
    return tokens


# AST nodes are plain tuples:
#   ("num", Fraction)      ("dt", Fraction)        ("var", name)
#   ("neg", node)          ("bin", op, lhs, rhs)   ("call", name, [args])
#   ("assign", name, node)


class _Parser:
    def __init__(self, tokens, line):
        self.tokens = tokens
        self.line = line
        self.i = 0

    def peek(self) -> Token:
        return self.tokens[self.i]

    def next(self) -> Token:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, value):
        tok = self.next()
        if tok.kind != "op" or tok.value != value:
            raise ExprSyntaxError(
                f"expected {value!r}, found {tok.value!r}", self.line, tok.col
            )
        return tok

    def statement(self):
        if (
            self.peek().kind == "ident"
            and self.tokens[self.i + 1].kind == "op"
            and self.tokens[self.i + 1].value == "="
        ):
            name = self.next().value
            self.next()
            node = self.expr(0)
            self.finish()
            return ("assign", name, node)
        node = self.expr(0)
        self.finish()
        return node

    def finish(self):
        tok = self.peek()
        if tok.kind != "eof":
            raise ExprSyntaxError(
                f"unexpected trailing input {tok.value!r}", self.line, tok.col
            )

    BINARY = {"+": (10, 11), "-": (10, 11), "*": (20, 21), "/": (20, 21), "^": (30, 30)}
    UNARY_BP = 25

    def expr(self, min_bp: int):
        lhs = self.prefix()
        while True:
            tok = self.peek()
            if tok.kind != "op" or tok.value not in self.BINARY:
                break
            lbp, rbp = self.BINARY[tok.value]
            if lbp < min_bp:
                break
            self.next()
            rhs = self.expr(rbp)
            lhs = ("bin", tok.value, lhs, rhs)
        return lhs

    def prefix(self):
        tok = self.next()
        if tok.kind == "op" and tok.value == "-":
            return ("neg", self.expr(self.UNARY_BP))
        if tok.kind == "op" and tok.value == "+":
            return self.expr(self.UNARY_BP)
        if tok.kind == "num":
            return ("num", tok.value)
        if tok.kind == "dtlit":
            return ("dt", tok.value)
        if tok.kind == "ident":
            if self.peek().kind == "op" and self.peek().value == "(":
                self.next()
                args = []
                if not (self.peek().kind == "op" and self.peek().value == ")"):
                    args.append(self.expr(0))
                    while self.peek().kind == "op" and self.peek().value == ",":
                        self.next()
                        args.append(self.expr(0))
                self.expect(")")
                return ("call", tok.value, args)
            if tok.value == "dt":
                return ("dt", Fraction(1))
            return ("var", tok.value)
        if tok.kind == "op" and tok.value == "(":
            node = self.expr(0)
            self.expect(")")
            return node
        raise ExprSyntaxError(
            f"unexpected token {tok.value!r}", self.line, tok.col
        )


def parse(text: str, line: int = 1):
    return _Parser(tokenize(text, line), line).statement()


class SessionState:
    """Variable bindings of a REPL session."""

    def __init__(self):
        self.vars = {}


def _want_rational(value, what: str) -> Fraction:
    value = fermat(value)
    if not value.is_real() or not value.std.exact:
        raise FermatRealError(f"{what} must be an exact rational")
    return value.std.value


def _want_natural(value, what: str) -> int:
    q = _want_rational(value, what)
    if q.denominator != 1 or q < 0:
        raise FermatRealError(f"{what} must be a natural number")
    return q.numerator


def _call(name, args):
    def arity(n):
        if len(args) != n:
            raise FermatRealError(f"{name} expects {n} argument(s), got {len(args)}")

    if name == "dt":
        arity(1)
        return dt(_want_rational(args[0], "dt order"))
    if name == "sqrt":
        arity(1)
        return sqrt(args[0])
    if name == "nthroot":
        arity(2)
        return nthroot(args[0], _want_natural(args[1], "root index"))
    if name == "abs":
        arity(1)
        return abs(fermat(args[0]))
    if name in ("exp", "log", "log1p", "sin", "cos"):
        arity(1)
        return ext(builtin(name), args[0])
    if name == "st":
        arity(1)
        return fermat(fermat(args[0]).std)
    if name == "omega":
        arity(1)
        return fermat(fermat(args[0]).order())
    if name == "decomposition":
        arity(1)
        return fermat(args[0])
    if name == "eqUpTo":
        arity(3)
        return eq_up_to(_want_rational(args[0], "order bound"), args[1], args[2])
    if name == "dF":
        arity(2)
        return fermat(d_std(args[0], args[1]))
    if name == "dOmega":
        arity(2)
        return fermat(d_omega(args[0], args[1]))
    if name == "classifyIdeal":
        if not args:
            raise FermatRealError("classifyIdeal expects at least one generator")
        return classify_generated(args)
    if name == "caputoCheck":
        return _caputo_check(args)
    raise NameLookupError(f"unknown function {name!r}")


def _caputo_check(args):
    """caputoCheck(alpha, n, h [, c0 .. cn]) -> whether the fractional
    Taylor identity holds exactly for sum_k c_k * x**(k*alpha)."""
    if len(args) < 3:
        raise FermatRealError("caputoCheck expects at least alpha, n and h")
    alpha = _want_rational(args[0], "alpha")
    n = _want_natural(args[1], "expansion order")
    h = fermat(args[2])
    coeffs = [_want_rational(a, "coefficient") for a in args[3:]]
    if not coeffs:
        coeffs = [Fraction(1)] * (n + 1)
    if len(coeffs) != n + 1:
        raise FermatRealError("caputoCheck needs exactly n + 1 coefficients")
    f = FracPoly(0, [(c, k * alpha) for k, c in enumerate(coeffs)])
    return taylor_fractional_check(f, alpha, n, h).is_exact


def eval_node(node, state: SessionState):
    kind = node[0]
    if kind == "num":
        return fermat(node[1])
    if kind == "dt":
        return dt(node[1])
    if kind == "var":
        name = node[1]
        if name not in state.vars:
            raise NameLookupError(f"name {name!r} is not defined")
        return state.vars[name]
    if kind == "neg":
        return -_as_value(eval_node(node[1], state))
    if kind == "assign":
        value = eval_node(node[2], state)
        state.vars[node[1]] = value
        return value
    if kind == "call":
        return _call(node[1], [eval_node(a, state) for a in node[2]])
    op, lhs, rhs = node[1], node[2], node[3]
    a = _as_value(eval_node(lhs, state))
    b = _as_value(eval_node(rhs, state))
    if op == "+":
        return a + b
    if op == "-":
        return a - b
    if op == "*":
        return a * b
    if op == "/":
        return a / b
    # exponent: natural powers stay in the ring, negative integers invert,
    # general rationals go through the root machinery
    e = _want_rational(b, "exponent")
    if e.denominator == 1:
        if e >= 0:
            return pow_nat(a, e.numerator)
        return pow_nat(invert(a), -e.numerator)
    return power(a, e)


def _as_value(v) -> FermatReal:
    if isinstance(v, FermatReal):
        return v
    raise FermatRealError("this value cannot be used in arithmetic")


def evaluate(text: str, state: SessionState = None, line: int = 1):
    """Parse and evaluate one statement; returns a FermatReal, a bool,
    or an ideal classification."""
    if state is None:
        state = SessionState()
    return eval_node(parse(text, line), state)
