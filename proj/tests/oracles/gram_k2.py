#!/usr/bin/env python3
"""Brute-force Gram matrices for k=2 by direct symbolic integration."""
import sys
from itertools import product

import mpmath
import sympy as sp

t1, t2, u = sp.symbols("t1 t2 u", nonnegative=True)


def monomial(alpha):
    if not alpha:
        return sp.Integer(1)
    if len(alpha) == 1:
        return t1 ** alpha[0] + t2 ** alpha[0]
    a, b = alpha
    return t1**a * t2**b + (t1**b * t2**a if a != b else 0)


def signatures(d, even):
    out = [()]
    for a in range(2, d + 1):
        if even and a % 2:
            continue
        out.append((a,))
        for b in range(2, a + 1):
            if even and b % 2:
                continue
            if a + b <= d:
                out.append((a, b))
    return out


def basis(d, offset, even=True):
    sigs = signatures(d, even)
    out = []
    for total in range(d + 1):
        for alpha in sorted(sigs, key=lambda s: (sum(s), s)):
            if sum(alpha) <= total:
                out.append((offset - t1 - t2) ** (total - sum(alpha)) * monomial(alpha))
    return out


def gram(d, eps):
    up, down = 1 + eps, 1 - eps
    b = basis(d, up)
    n = len(b)
    m1 = sp.zeros(n, n)
    m2 = sp.zeros(n, n)
    fib = [sp.integrate(f, (t2, 0, up - t1)) for f in b]
    for i, j in product(range(n), repeat=2):
        if j < i:
            continue
        m1[i, j] = m1[j, i] = sp.integrate(sp.integrate(b[i] * b[j], (t2, 0, up - t1)), (t1, 0, up))
        m2[i, j] = m2[j, i] = 2 * sp.integrate(sp.expand(fib[i] * fib[j]), (t1, 0, down))
    return m1, m2


def top_eigenvalue(m1, m2):
    mpmath.mp.dps = 40
    a = mpmath.matrix(m1.tolist())
    b = mpmath.matrix(m2.tolist())
    if a.rows == 1:
        return b[0, 0] / a[0, 0]
    vals = mpmath.eig(mpmath.inverse(a) * b, left=False, right=False)
    return max(mpmath.re(v) for v in vals)


def independent(m1):
    keep = []
    for i in range(m1.shape[0]):
        trial = keep + [i]
        if m1.extract(trial, trial).det() != 0:
            keep = trial
    return keep


if __name__ == "__main__":
    d = int(sys.argv[1])
    eps = sp.Rational(sys.argv[2]) if len(sys.argv) > 2 else sp.Integer(0)
    m1, m2 = gram(d, eps)
    print("M1[0][0] =", m1[0, 0], " M2[0][0] =", m2[0, 0], " n =", m1.shape[0])
    keep = independent(m1)
    print("kept =", keep)
    print("lambda =", mpmath.nstr(top_eigenvalue(m1.extract(keep, keep), m2.extract(keep, keep)), 15))
