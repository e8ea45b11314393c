#!/usr/bin/env python3
"""Iterated symbolic integrals over R_4 of (1 - sum t)^a * prod t_i^e_i."""
import sympy as sp

t = sp.symbols("t1:5", nonnegative=True)


def simplex_integral(a, e):
    f = (1 - sum(t)) ** a
    for ti, ei in zip(t, e):
        f *= ti**ei
    for i in reversed(range(4)):
        f = sp.integrate(sp.expand(f), (t[i], 0, 1 - sum(t[:i])))
    return sp.nsimplify(f)


if __name__ == "__main__":
    for a, e in [(0, (0, 0, 0, 0)), (1, (1, 0, 0, 0)), (2, (3, 1, 0, 2)), (3, (2, 2, 1, 1)), (0, (3, 3, 3, 3))]:
        print(a, e, simplex_integral(a, e))
