"""Fractional powers, roots and the notion of a complete number."""

from fractions import Fraction as F

from fermatreal import dt, nthroot, pow_nat, sqrt
from fermatreal.powers import is_complete, power

# roots of a single dt just rescale the order
print("sqrt(dt)        =", sqrt(dt(1)))
print("sqrt(dt_2 + dt) =", sqrt(dt(2) + dt(1)))

# a multi-term example: the root squares back exactly
x = dt(3) + 2 * dt(2)
r = sqrt(x)
print("sqrt(dt_3 + 2*dt_2) =", r)
print("squared back        =", pow_nat(r, 2))

# odd roots accept negative values; the coefficient is stored at high
# precision and displayed through a short rational approximation
print("cbrt(-4*dt) =", nthroot(-4 * dt(1), 3))

# fractional exponents compose whenever nothing vanishes on the way
y = dt(4) + dt(2)
print("y**(1/2) * y**(1/2) =", power(y, F(1, 2)) * power(y, F(1, 2)))
print("y**(1/2 + 1/2)      =", power(y, 1))

# raising to a natural power can destroy information: dt_2**2 = dt_1 but
# dt**2 = 0, so squaring is only injective on "complete" numbers
print("is_complete(dt_2, 2) =", is_complete(dt(2), 2))
print("is_complete(dt, 2)   =", is_complete(dt(1), 2))
z = dt(2)
print("(dt_2**2)**(1/2)     =", power(pow_nat(z, 2), F(1, 2)))
w = dt(1)
print("(dt**2)**(1/2)       =", power(pow_nat(w, 2), F(1, 2)), "(dt was lost)")
