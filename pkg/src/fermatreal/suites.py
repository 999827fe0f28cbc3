"""Randomized self-check suites runnable from the command line.

Each suite draws seeded random values and checks the algebraic laws the
library is built on.  A law either passes a case or produces a short
counterexample description.
"""

from __future__ import annotations

import random
from fractions import Fraction

from . import gen
from .core import (
    ONE,
    ZERO,
    compare,
    dt,
    fermat,
    invert,
    normalize,
    pow_nat,
    solve_linear,
    zero_divisor_witness,
)
from .errors import NoExactQuotient, UnknownSuite
from .formatting import format_decomposition
from .fractional import (
    FracPoly,
    GammaRational,
    caputo,
    eval_at_infinitesimal,
    rl_integral,
    taylor_fractional_check,
)
from .ideals import classify_generated, ideal_member, in_Da, in_nilpotents_of_degree
from .metrics import d_higher, d_omega, d_std, eq_up_to, pseudovaluation, same_monad
from .orders import hsum
from .parser import evaluate
from .powers import is_complete, k_bound, no_term_vanishes, power
from .serialize import from_json, to_json


class LawResult:
    __slots__ = ("name", "cases", "failures", "first_counterexample")

    def __init__(self, name):
        self.name = name
        self.cases = 0
        self.failures = 0
        self.first_counterexample = None

    @property
    def passed(self) -> bool:
        return self.failures == 0


class SuiteReport:
    __slots__ = ("suite", "laws")

    def __init__(self, suite, laws):
        self.suite = suite
        self.laws = laws

    @property
    def passed(self) -> bool:
        return all(law.passed for law in self.laws)

    def lines(self):
        out = []
        for law in self.laws:
            if law.passed:
                out.append(f"PASS {self.suite}.{law.name} ({law.cases} cases)")
            else:
                out.append(
                    f"FAIL {self.suite}.{law.name} "
                    f"({law.failures}/{law.cases} cases): "
                    f"{law.first_counterexample}"
                )
        return out


# -- core laws ------------------------------------------------------------


def _law_ring_axioms(rng):
    x, y, z = (gen.rand_fermat(rng) for _ in range(3))
    if not ((x + y) + z == x + (y + z) and (x * y) * z == x * (y * z)):
        return f"associativity broke for {x!r}, {y!r}, {z!r}"
    if not (x * y == y * x and x + y == y + x):
        return f"commutativity broke for {x!r}, {y!r}"
    if not (x * (y + z) == x * y + x * z):
        return f"distributivity broke for {x!r}, {y!r}, {z!r}"
    if not (x + ZERO == x and x * ONE == x):
        return f"identities broke for {x!r}"
    return None


def _law_nilpotency(rng):
    h = gen.rand_infinitesimal(rng)
    for k in range(1, 7):
        vanished = pow_nat(h, k).is_zero()
        predicted = h.order() < k
        if vanished != predicted:
            return f"{h!r}**{k}: vanished={vanished}, order test={predicted}"
    return None


def _law_product_vanishing(rng):
    hs = [gen.rand_infinitesimal(rng, max_terms=2) for _ in range(rng.randint(1, 3))]
    exps = [rng.randint(1, 3) for _ in hs]
    prod = ONE
    for h, i in zip(hs, exps):
        prod = prod * pow_nat(h, i)
    predicted = sum(Fraction(i) / h.order() for h, i in zip(hs, exps)) > 1
    if prod.is_zero() != predicted:
        return f"product of {hs!r} with exponents {exps} vanishing mismatch"
    return None


def _law_order_of_sum(rng):
    x = gen.rand_infinitesimal(rng)
    y = gen.rand_infinitesimal(rng)
    s = x + y
    if s.is_zero():
        return None
    if x.order() != y.order() or not (x.std_part_i(1) + y.std_part_i(1)).is_zero():
        if s.order() != max(x.order(), y.order()):
            return f"order({x!r} + {y!r}) != max of orders"
    return None


def _law_order_of_product(rng):
    x = gen.rand_infinitesimal(rng)
    y = gen.rand_infinitesimal(rng)
    p = x * y
    expected = hsum(x.order(), y.order())
    if expected >= 1:
        if p.is_zero() or p.order() != expected:
            return f"order({x!r} * {y!r}) is not the harmonic sum"
    elif not p.is_zero():
        return f"{x!r} * {y!r} should vanish"
    return None


def _law_invert(rng):
    x = gen.rand_fermat(rng)
    if not x.is_invertible():
        return None
    if not (x * invert(x) == ONE):
        return f"x * invert(x) != 1 for {x!r}"
    return None


def _law_cancellation(rng):
    x = gen.rand_fermat(rng)
    if x.is_zero():
        return None
    r = gen.rand_fraction(rng)
    s = gen.rand_fraction(rng)
    if r == s:
        return None
    if x * fermat(r) == x * fermat(s):
        return f"cancellation broke: {x!r} * {r} == {x!r} * {s}"
    return None


def _law_zero_divisor(rng):
    h = gen.rand_infinitesimal(rng)
    w = zero_divisor_witness(h)
    if w.is_zero() or not (h * w).is_zero():
        return f"witness for {h!r} does not annihilate"
    return None


def _law_order_compatibility(rng):
    x, y, z = (gen.rand_fermat(rng) for _ in range(3))
    c = compare(x, y)
    if c != -compare(y, x):
        return f"antisymmetry broke for {x!r}, {y!r}"
    if c < 0 and compare(x + z, y + z) >= 0:
        return f"adding {z!r} does not preserve {x!r} < {y!r}"
    t = abs(gen.rand_fraction(rng, nonzero=True))
    if c < 0 and compare(x * fermat(t), y * fermat(t)) >= 0:
        return f"scaling by {t} does not preserve {x!r} < {y!r}"
    return None


def _law_solve_linear(rng):
    a = gen.rand_fermat(rng)
    b = gen.rand_infinitesimal(rng, positive=True)
    xs = gen.rand_infinitesimal(rng, max_terms=2, allow_zero=True) + Fraction(
        rng.randint(1, 9), 10
    )
    c = a + xs * b
    if not (compare(a, c) < 0 and compare(c, a + b) < 0):
        return None
    try:
        x = solve_linear(a, b, c)
    except NoExactQuotient:
        return f"no exact solution found for a={a!r}, b={b!r}, c={c!r}"
    if not (a + x * b == c):
        return f"solution check failed for a={a!r}, b={b!r}, c={c!r}"
    return None


def _law_serialization(rng):
    x = gen.rand_fermat(rng)
    if not (from_json(to_json(x)) == x):
        return f"JSON round trip broke for {x!r}"
    if not (evaluate(format_decomposition(x)) == x):
        return f"text round trip broke for {x!r}"
    return None


CORE_LAWS = [
    ("ring_axioms", _law_ring_axioms),
    ("nilpotency_index", _law_nilpotency),
    ("product_vanishing", _law_product_vanishing),
    ("order_of_sum", _law_order_of_sum),
    ("order_of_product", _law_order_of_product),
    ("invert_round_trip", _law_invert),
    ("real_cancellation", _law_cancellation),
    ("zero_divisor_witness", _law_zero_divisor),
    ("order_compatibility", _law_order_compatibility),
    ("solve_linear", _law_solve_linear),
    ("round_trips", _law_serialization),
]


# -- metric laws ----------------------------------------------------------


def _law_metric_axioms(rng):
    x, y, z = (gen.rand_fermat(rng) for _ in range(3))
    if d_omega(x, x) != 0:
        return f"d(x, x) != 0 for {x!r}"
    if (d_omega(x, y) == 0) != (x == y):
        return f"separation broke for {x!r}, {y!r}"
    if d_omega(x, y) != d_omega(y, x):
        return f"symmetry broke for {x!r}, {y!r}"
    if d_omega(x, z) > d_omega(x, y) + d_omega(y, z):
        return f"triangle inequality broke for {x!r}, {y!r}, {z!r}"
    return None


def _law_pseudometric(rng):
    x, y, z = (gen.rand_fermat(rng) for _ in range(3))
    if d_std(x, y) > d_omega(x, y):
        return f"d_std > d_omega for {x!r}, {y!r}"
    if d_std(x, z) > d_std(x, y) + d_std(y, z):
        return f"pseudometric triangle broke for {x!r}, {y!r}, {z!r}"
    if (d_std(x, y) == 0) != same_monad(x, y):
        return f"vanishing pseudodistance is not monad membership for {x!r}, {y!r}"
    return None


def _law_ball_rigidity(rng):
    x = gen.rand_fermat(rng)
    y = gen.rand_fermat(rng)
    d = d_omega(x, y)
    if d < 1:
        z = x - y
        if not z.is_real():
            return f"small ball contains non-real gap for {x!r}, {y!r}"
        if abs(z.std.value) >= 1:
            return f"gap size exceeds the ball radius for {x!r}, {y!r}"
    return None


def _law_higher_metrics(rng):
    x = gen.rand_fermat(rng)
    y = gen.rand_fermat(rng)
    if d_omega(x, y) < 1:
        for i in range(1, 4):
            if d_higher(x, y, i) != d_omega(x, y):
                return f"metric family disagrees below 1 for {x!r}, {y!r}"
    if d_higher(x, y, 1) != d_omega(x, y):
        return f"first family member is not d_omega for {x!r}, {y!r}"
    return None


def _law_eq_up_to(rng):
    x = gen.rand_fermat(rng)
    k = gen.rand_order(rng)
    if not eq_up_to(k, x, x):
        return f"eq_up_to is not reflexive for {x!r}"
    h = gen.rand_infinitesimal(rng)
    expected = h.order() <= k
    if eq_up_to(k, x, x + h) != expected:
        return f"eq_up_to({k}) wrong on gap {h!r}"
    return None


def _law_pseudovaluation(rng):
    h1 = gen.rand_infinitesimal(rng)
    h2 = gen.rand_infinitesimal(rng)
    v1, v2 = pseudovaluation(h1), pseudovaluation(h2)
    p = h1 * h2
    vp = pseudovaluation(p)
    if not p.is_zero():
        # multiplicativity: orders add harmonically, so -log omega adds
        if vp.omega != hsum(v1.omega, v2.omega):
            return f"v({h1!r} * {h2!r}) is not v + v"
    s = h1 + h2
    vs = pseudovaluation(s)
    if not s.is_zero():
        if vs.omega > max(v1.omega, v2.omega):
            return f"ultrametric bound broke for {h1!r} + {h2!r}"
    return None


METRIC_LAWS = [
    ("metric_axioms", _law_metric_axioms),
    ("pseudometric", _law_pseudometric),
    ("ball_rigidity", _law_ball_rigidity),
    ("metric_family", _law_higher_metrics),
    ("eq_up_to", _law_eq_up_to),
    ("pseudovaluation", _law_pseudovaluation),
]


# -- power laws -----------------------------------------------------------

_ROOT_EXPONENTS = [Fraction(1, 2), Fraction(1, 3), Fraction(2, 3), Fraction(3, 4)]


def _law_pure_dt_power(rng):
    a = gen.rand_order(rng)
    p = rng.choice(_ROOT_EXPONENTS + [Fraction(2), Fraction(3)])
    expected = dt(a / p) if a / p >= 1 else ZERO
    if not (power(dt(a), p) == expected):
        return f"dt_{a} ** {p} != dt_{a / p}"
    return None


def _law_root_round_trip(rng):
    p = rng.choice(_ROOT_EXPONENTS)
    x = gen.rand_root_friendly_infinitesimal(rng, p, max_terms=3)
    y = power(power(x, p), 1 / p)
    if not (y == x):
        return f"(x**{p})**{1 / p} != x for x = {x!r}"
    return None


def _law_left_inverse_up_to(rng):
    p = rng.choice(_ROOT_EXPONENTS)
    x = gen.rand_root_friendly_infinitesimal(rng, p, max_terms=3)
    inner = power(x, 1 / p)
    if inner.is_zero():
        return None
    y = power(inner, p)
    k = max(x.order_i(2), y.order_i(2))
    if not eq_up_to(k, x, y):
        return f"(x**{1 / p})**{p} differs from x below order {k} for x = {x!r}"
    return None


def _law_exponent_addition(rng):
    p = rng.choice(_ROOT_EXPONENTS)
    q = rng.choice(_ROOT_EXPONENTS)
    x = gen.rand_root_friendly_infinitesimal(rng, p, max_terms=2)
    if not (power(x, p) * power(x, q) == power(x, p + q)):
        return f"x**{p} * x**{q} != x**{p + q} for x = {x!r}"
    return None


def _law_k_bound(rng):
    p = rng.choice(_ROOT_EXPONENTS)
    x = gen.rand_root_friendly_infinitesimal(rng, p, max_terms=3)
    # no surviving binomial summand may draw on a power beyond the bound
    k = k_bound(x, p)
    if len(x.terms) >= 2 and k < 1:
        return f"bound {k} below 1 for the multi-term value {x!r}"
    return None


def _law_product_rule(rng):
    p = rng.choice(_ROOT_EXPONENTS)
    x = gen.rand_root_friendly_infinitesimal(rng, p, max_terms=2)
    y = gen.rand_root_friendly_infinitesimal(rng, p, max_terms=2)
    if not no_term_vanishes(x, y):
        return None
    if not (power(x * y, p) == power(x, p) * power(y, p)):
        return f"(x*y)**{p} != x**{p} * y**{p} for x = {x!r}, y = {y!r}"
    return None


def _law_complete_round_trip(rng):
    inv_exp = rng.choice([Fraction(2), Fraction(3), Fraction(5, 2)])
    x = gen.rand_root_friendly_infinitesimal(rng, 1 / inv_exp, max_terms=3)
    if not is_complete(x, inv_exp):
        return None
    if not (power(power(x, inv_exp), 1 / inv_exp) == x):
        return f"complete x = {x!r} does not round trip through the {inv_exp}-th power"
    return None


def _law_invertible_factor(rng):
    h = gen.rand_infinitesimal(rng)
    y = gen.rand_fermat(rng)
    if not y.is_invertible():
        return None
    p = h * y
    if p.is_zero():
        return None
    if p.order() != h.order():
        return f"order changed when multiplying {h!r} by the unit {y!r}"
    if not p.std_part_i(1).eq(h.std_part_i(1) * y.std):
        return f"leading coefficient of {h!r} * {y!r} is wrong"
    return None


POWER_LAWS = [
    ("pure_dt_power", _law_pure_dt_power),
    ("root_right_inverse", _law_root_round_trip),
    ("root_left_inverse_up_to", _law_left_inverse_up_to),
    ("exponent_addition", _law_exponent_addition),
    ("binomial_bound", _law_k_bound),
    ("product_rule", _law_product_rule),
    ("complete_round_trip", _law_complete_round_trip),
    ("unit_factor_order", _law_invertible_factor),
]


# -- ideal laws -----------------------------------------------------------


def _law_classification(rng):
    gens = [gen.rand_fermat(rng) for _ in range(rng.randint(1, 4))]
    kind = classify_generated(gens)
    for g in gens:
        if not ideal_member(g, kind):
            return f"generator {g!r} is not a member of {kind!r}"
    if kind.kind == "Ia":
        if not any(g.order() == kind.bound for g in gens if not g.is_zero()):
            return f"bound of {kind!r} is not attained by {gens!r}"
    return None


def _law_nilpotent_degree(rng):
    x = gen.rand_fermat(rng)
    for k in (1, 2, 3):
        by_power = in_nilpotents_of_degree(x, k)
        by_order = x.is_infinitesimal() and in_Da(x, k) or x.is_zero()
        if by_power != by_order:
            return f"degree-{k} membership mismatch for {x!r}"
    return None


def _law_ideal_absorption(rng):
    h = gen.rand_infinitesimal(rng, allow_zero=True)
    x = gen.rand_fermat(rng)
    if not (h * x).is_infinitesimal():
        return f"{h!r} * {x!r} escaped the maximal ideal"
    a = h.order()
    if a >= 1:
        p = h * x
        if not p.is_zero() and p.order() > a:
            return f"absorption raised the order of {h!r}"
    return None


IDEAL_LAWS = [
    ("classification", _law_classification),
    ("nilpotent_degree", _law_nilpotent_degree),
    ("absorption", _law_ideal_absorption),
]


# -- fractional laws ------------------------------------------------------


def _rand_frac_poly(rng, alpha=None):
    n = rng.randint(1, 4)
    if alpha is None:
        exps = set()
        while len(exps) < n:
            exps.add(Fraction(rng.randint(0, 12), rng.randint(1, 4)))
    else:
        exps = {k * alpha for k in rng.sample(range(0, 6), n)}
    terms = [
        (gen.rand_fraction(rng, 9, 9, nonzero=True), mu) for mu in exps
    ]
    return FracPoly(0, terms)


def _law_integral_semigroup(rng):
    f = _rand_frac_poly(rng)
    a = Fraction(rng.randint(1, 4), rng.randint(1, 4))
    b = Fraction(rng.randint(1, 4), rng.randint(1, 4))
    if not (rl_integral(rl_integral(f, a), b) == rl_integral(f, a + b)):
        return f"J^{a} J^{b} != J^{a + b} on {f!r}"
    return None


def _law_caputo_inverts_integral(rng):
    f = _rand_frac_poly(rng)
    alpha = Fraction(rng.randint(1, 4), 4)
    if not (caputo(rl_integral(f, alpha), alpha) == f):
        return f"caputo_{alpha} of J^{alpha} is not the identity on {f!r}"
    return None


def _law_caputo_kills_constants(rng):
    c = gen.rand_fraction(rng, nonzero=True)
    alpha = Fraction(rng.randint(1, 4), 4)
    if not caputo(FracPoly(0, [(c, Fraction(0))]), alpha).is_zero():
        return f"caputo_{alpha} did not annihilate the constant {c}"
    return None


def _law_taylor_exact(rng):
    import math as _math

    alpha = Fraction(rng.randint(1, 4), 4)
    low = max(1, _math.ceil(Fraction(1) / alpha))
    n = rng.randint(low, low + 3)
    f = FracPoly(
        0,
        [
            (gen.rand_fraction(rng, 9, 9, nonzero=True), k * alpha)
            for k in range(n + 1)
        ],
    )
    bound = (n + 1) * alpha  # > 1 by the choice of n
    order = 1 + Fraction(rng.randint(0, 7), 8) * (bound - 1)
    # leading coefficient 1 keeps every fractional power of h rational
    h = dt(order)
    lower = 1 + (order - 1) * Fraction(rng.randint(0, 7), 16)
    if lower < order:
        h = h + gen.rand_fraction(rng, 5, 5) * dt(lower)
    if not h.order() < bound:
        return None
    result = taylor_fractional_check(f, alpha, n, h)
    if not result.is_exact:
        return f"Taylor check on {f!r} with h = {h!r}: {result!r}"
    return None


def _law_classical_limit(rng):
    # alpha = 1 reduces to ordinary differentiation of polynomials
    coeffs = [gen.rand_fraction(rng, 9, 9) for _ in range(3)]
    f = FracPoly(0, [(c, Fraction(k)) for k, c in enumerate(coeffs) if c != 0])
    g = caputo(f, 1)
    expected = FracPoly(
        0, [(c * k, Fraction(k - 1)) for k, c in enumerate(coeffs) if k and c != 0]
    )
    if not (g == expected):
        return f"caputo_1 is not d/dx on {f!r}"
    h = gen.rand_infinitesimal(rng, max_terms=2, positive=True, allow_zero=True)
    if not (eval_at_infinitesimal(f, h) == sum(
        (fermat(c) * pow_nat(h, k) for k, c in enumerate(coeffs)), fermat(0)
    )):
        return f"polynomial evaluation mismatch on {f!r} at {h!r}"
    return None


FRACTIONAL_LAWS = [
    ("integral_semigroup", _law_integral_semigroup),
    ("caputo_inverts_integral", _law_caputo_inverts_integral),
    ("caputo_kills_constants", _law_caputo_kills_constants),
    ("taylor_exact_on_family", _law_taylor_exact),
    ("classical_limit", _law_classical_limit),
]


SUITES = {
    "core": CORE_LAWS,
    "metrics": METRIC_LAWS,
    "powers": POWER_LAWS,
    "ideals": IDEAL_LAWS,
    "fractional": FRACTIONAL_LAWS,
}


def run_suite(name: str, cases: int = 200, seed: int = 20260823) -> list:
    """Run one named suite (or "all"); returns a list of SuiteReport."""
    if name == "all":
        names = list(SUITES)
    elif name in SUITES:
        names = [name]
    else:
        raise UnknownSuite(
            f"unknown suite {name!r}; choose from {', '.join(SUITES)} or 'all'"
        )
    reports = []
    for suite_name in names:
        laws = []
        for law_name, law in SUITES[suite_name]:
            result = LawResult(law_name)
            rng = random.Random(f"{seed}:{suite_name}:{law_name}")
            for _ in range(cases):
                result.cases += 1
                try:
                    failure = law(rng)
                except Exception as exc:  # a law crashing is a failure too
                    failure = f"raised {type(exc).__name__}: {exc}"
                if failure is not None:
                    result.failures += 1
                    if result.first_counterexample is None:
                        result.first_counterexample = failure
            laws.append(result)
        reports.append(SuiteReport(suite_name, laws))
    return reports
