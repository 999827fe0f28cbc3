"""Smooth functions on infinitesimals and exact fractional calculus."""

from fractions import Fraction as F

from fermatreal import (
    FracPoly,
    GammaRational,
    builtin,
    caputo,
    dt,
    ext,
    rl_integral,
    sqrt,
    taylor_fractional_check,
)

# smooth functions extend to infinitesimal arguments through their
# finite Taylor expansion; nilpotency makes the series terminate
h = dt(3)
print("sin(dt_3) =", ext(builtin("sin"), h))
print("exp(dt_3) =", ext(builtin("exp"), h))
print("log(1 + dt_3) =", ext(builtin("log"), 1 + h))

# the composition from a session: sin of a root over cos of a root
x = sqrt(dt(3) + 2 * dt(2))
y = ext(builtin("sin"), x)
print("sin(sqrt(dt_3 + 2*dt_2)) =", y)

# gamma factors are kept symbolic so quotients cancel exactly
g = GammaRational.gamma(F(7, 2))
print("Gamma(7/2) =", g.rat, "* Gamma(1/2)")
print("Gamma(7/2)/Gamma(5/2) =", (g / GammaRational.gamma(F(5, 2))).rat)

# fractional integral and derivative of x^(3/2), both in closed form
f = FracPoly(0, [(1, F(3, 2))])
alpha = F(1, 2)
print("J^(1/2) x^(3/2) =", rl_integral(f, alpha))
print("D^(1/2) x^(3/2) =", caputo(f, alpha))
print("D^(1/2) J^(1/2) f == f:", caputo(rl_integral(f, alpha), alpha) == f)

# the fractional Taylor identity checked on an infinitesimal increment
poly = FracPoly(0, [(3, F(0)), (2, alpha), (-1, 2 * alpha), (5, 3 * alpha)])
result = taylor_fractional_check(poly, alpha, 3, dt(F(3, 2)))
print("fractional Taylor check:", result.status)
