"""A first tour: nilpotent infinitesimals and exact ring arithmetic."""

from fractions import Fraction as F

from fermatreal import dt, fermat, invert, pow_nat, solve_linear

# dt_a is an infinitesimal of order a; higher order means "bigger"
h = dt(2)
print("h           =", h)
print("h * h       =", h * h)          # orders combine harmonically: dt_1
print("h ** 3      =", pow_nat(h, 3))  # falls below order 1 and vanishes

# general elements mix a real part with several infinitesimal terms
x = 2 + 3 * dt(2) - F(1, 3) * dt(1)
print("x           =", x)
print("x * x       =", x * x)
print("st(x)       =", x.std.value)
print("omega(x)    =", x.order())

# anything with a nonzero real part has an exact inverse
print("1/x         =", invert(x))
print("x * 1/x     =", x * invert(x))

# infinitesimals of order below k vanish at the k-th power
for k in (1, 2, 3):
    print(f"dt_2 ** {k}  =", pow_nat(dt(2), k))

# exact division works whenever the quotient exists in the ring
q = (dt(2) + dt(1)) / dt(3)
print("(dt_2 + dt)/dt_3 =", q)

# linear interpolation: find x with a + x*b = c for a < c < a + b
a = fermat(1)
b = dt(2) + dt(1)
c = a + F(1, 2) * b
print("solve_linear:", solve_linear(a, b, c))
