"""Distances, order-sensitive topology and the ideal structure."""

from fractions import Fraction as F

from fermatreal import (
    classify_generated,
    d_omega,
    d_std,
    dt,
    eq_up_to,
    fermat,
    ideal_member,
    pseudovaluation,
    same_monad,
)

x = 2 + dt(2) + dt(1)
y = 2 + dt(2)
z = fermat(3)

# the standard-part distance ignores infinitesimals entirely
print("d_std(x, y)   =", d_std(x, y))
print("d_std(x, z)   =", d_std(x, z))

# the omega distance also sees the order of the infinitesimal gap
print("d_omega(x, y) =", d_omega(x, y))
print("d_omega(x, x) =", d_omega(x, x))

# points at standard distance zero share a monad
print("same_monad(x, y) =", same_monad(x, y))

# equality up to order k: the gap between x and y has order 1
print("eq_up_to(1, x, y) =", eq_up_to(1, x, y))
print("eq_up_to(1/2, x, y) =", eq_up_to(F(1, 2), x, y))

# the pseudovaluation turns harmonic order products into sums
h1, h2 = dt(2), dt(3)
print("v(h1) =", pseudovaluation(h1))
print("v(h2) =", pseudovaluation(h2))
print("v(h1 * h2) =", pseudovaluation(h1 * h2))

# every finitely generated proper ideal is an I_a
kind = classify_generated([dt(2), dt(3) + dt(1)])
print("ideal generated by dt_2 and dt_3 + dt:", kind)
print("dt_5/2 is a member:", ideal_member(dt(F(5, 2)), kind))
print("1 + dt_2 is a member:", ideal_member(1 + dt(2), kind))
