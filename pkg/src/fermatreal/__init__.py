"""Exact arithmetic in the ring of reals extended by nilpotent infinitesimals."""

from .core import (
    ONE,
    ZERO,
    FermatReal,
    compare,
    divide,
    dt,
    fermat,
    fmax,
    fmin,
    invert,
    normalize,
    pow_nat,
    solve_linear,
    zero_divisor_witness,
)
from .errors import (
    ApproximationTie,
    DivisionByZero,
    DomainError,
    FermatRealError,
    NoExactQuotient,
    NotInfinitesimal,
    NotInvertible,
    NotZeroDivisor,
    PreconditionViolated,
    ZeroBase,
)
from .extension import SmoothFunction, builtin, ext
from .formatting import format_decomposition, rats
from .fractional import (
    FracPoly,
    GammaRational,
    caputo,
    caputo_iter,
    eval_at_infinitesimal,
    rl_integral,
    taylor_fractional_check,
)
from .ideals import (
    IdealKind,
    classify_generated,
    ideal_member,
    in_Da,
    in_Ia,
    std_morphism,
)
from .metrics import OmegaValue, d_omega, d_std, eq_up_to, pseudovaluation, same_monad
from .orders import INF, ExtendedOrder, ominus, oplus
from .parser import SessionState, evaluate, parse
from .powers import (
    binom,
    is_complete,
    k_bound,
    loses_information,
    loses_information_multinomial,
    no_term_vanishes,
    nthroot,
    power,
    power_from_representation,
    sqrt,
)
from .scalar import Scalar, get_precision, set_precision
from .serialize import from_json, to_json
from .suites import run_suite

__version__ = "0.1.0"

__all__ = [
    "ApproximationTie",
    "DivisionByZero",
    "DomainError",
    "ExtendedOrder",
    "FermatReal",
    "FermatRealError",
    "FracPoly",
    "GammaRational",
    "IdealKind",
    "INF",
    "NoExactQuotient",
    "NotInfinitesimal",
    "NotInvertible",
    "NotZeroDivisor",
    "OmegaValue",
    "ONE",
    "PreconditionViolated",
    "Scalar",
    "SessionState",
    "SmoothFunction",
    "ZERO",
    "ZeroBase",
    "binom",
    "builtin",
    "caputo",
    "caputo_iter",
    "classify_generated",
    "compare",
    "d_omega",
    "d_std",
    "divide",
    "dt",
    "eq_up_to",
    "eval_at_infinitesimal",
    "evaluate",
    "ext",
    "fermat",
    "fmax",
    "fmin",
    "format_decomposition",
    "from_json",
    "get_precision",
    "ideal_member",
    "in_Da",
    "in_Ia",
    "invert",
    "is_complete",
    "k_bound",
    "loses_information",
    "loses_information_multinomial",
    "no_term_vanishes",
    "normalize",
    "nthroot",
    "ominus",
    "oplus",
    "parse",
    "pow_nat",
    "power",
    "power_from_representation",
    "pseudovaluation",
    "rats",
    "rl_integral",
    "run_suite",
    "same_monad",
    "set_precision",
    "solve_linear",
    "sqrt",
    "std_morphism",
    "taylor_fractional_check",
    "to_json",
    "zero_divisor_witness",
]
