#!/usr/bin/env python3
"""Monte Carlo estimates of I(F), J(F) for the 3D cutoff, independent of piece naming.

F is evaluated by sorting a point into the chamber 0 < v < u < w (u = middle,
v = smallest, w = largest), classifying the canonical point by its pair sums, and
evaluating that canonical piece there.
"""
import sys

import numpy as np

EPS = 0.25

PIECES = {
    "A": "-66+96*x-147*x**2+125*x**3+128*y-122*x*y+104*x**2*y-275*y**2+394*y**3+99*z"
         "-58*x*z+63*x**2*z-98*y*z+51*x*y*z+41*y**2*z-112*z**2+24*x*z**2+72*y*z**2+50*z**3",
    "B": "-41+52*x-73*x**2+25*x**3+108*y-66*x*y+71*x**2*y-294*y**2+56*x*y**2+363*y**3"
         "+33*z+15*x*z+22*x**2*z-40*y*z-42*x*y*z+75*y**2*z-36*z**2-24*x*z**2+26*y*z**2+20*z**3",
    "C": "-22+45*x-35*x**2+63*y-99*x*y+82*x**2*y-140*y**2+54*x*y**2+179*y**3",
    "D": "0*x",
    "E": "-12+8*x+32*y",
    "S": "-6+8*x+16*y",
    "T": "18-30*x+12*x**2+42*y-20*x*y-66*y**2-45*z+34*x*z+22*z**2",
    "U": "94-1823*x+5760*x**2-5128*x**3+54*y-168*x**2*y+105*y**2+1422*x*z-2340*x**2*z"
         "-192*y**2*z-128*z**2-268*x*z**2+64*z**3",
    "G": "5274-19833*x+18570*x**2-5128*x**3-18024*y+44696*x*y-20664*x**2*y+16158*y**2"
         "-19056*x*y**2-4592*y**3-10704*z+26860*x*z-12588*x**2*z+24448*y*z-30352*x*y*z"
         "-10980*y**2*z+7240*z**2-9092*x*z**2-8288*y*z**2-1632*z**3",
    "H": "8*z",
}


def F(px, py, pz):
    pts = np.sort(np.stack([px, py, pz]), axis=0)
    v, u, w = pts[0], pts[1], pts[2]
    x, y, z = u, v, w  # canonical chamber 0 < y < x < z
    s1, s3 = x + y, z + x
    s2 = y + z
    lo, hi = 1 - EPS, 1 + EPS
    out = np.zeros_like(x)
    inside = px + py + pz <= 1.5
    cls = np.full(x.shape, "", dtype=object)
    cls[(s3 < lo)] = "A"
    cls[(s2 < lo) & (s3 > lo) & (s3 < hi)] = "B"
    cls[(s1 < lo) & (s2 > lo) & (s3 < hi)] = "C"
    cls[(s1 > lo) & (s3 < hi)] = "D"
    cls[(s2 < lo) & (s3 > hi)] = "E"
    f_region = (s1 < lo) & (s2 > lo) & (s2 < hi) & (s3 > hi)
    cls[f_region & (z < 0.5 + EPS)] = "S"
    cls[f_region & (z > 0.5 + EPS) & (x > 0.5 - EPS)] = "T"
    cls[f_region & (x < 0.5 - EPS)] = "U"
    cls[(s1 < lo) & (s2 > hi)] = "G"
    cls[(s1 > lo) & (s2 < hi) & (s3 > hi)] = "H"
    for name, expr in PIECES.items():
        m = (cls == name) & inside
        if m.any():
            out[m] = eval(expr, {}, {"x": x[m], "y": y[m], "z": z[m]})
    return out


def main(n=2_000_000, seed=1):
    rng = np.random.default_rng(seed)
    # I: uniform in the cube [0, 3/2]^3
    p = rng.uniform(0, 1.5, size=(3, n))
    f2 = F(*p) ** 2
    vol = 1.5**3
    I = vol * f2.mean()
    Ierr = vol * f2.std() / np.sqrt(n)
    # J: (x, y) uniform in the triangle x + y <= 1 - eps, inner integral by midpoint rule in z
    m = n // 200
    xy = rng.uniform(0, 1 - EPS, size=(2, 4 * m))
    keep = xy[0] + xy[1] <= 1 - EPS
    x, y = xy[0][keep][:m], xy[1][keep][:m]
    nz = 400
    top = 1.5 - x - y
    acc = np.zeros_like(x)
    for i in range(nz):
        z = top * (i + 0.5) / nz
        acc += F(x, y, z)
    inner = acc * top / nz
    area = (1 - EPS) ** 2 / 2
    vals = inner**2
    J = 3 * area * vals.mean()
    Jerr = 3 * area * vals.std() / np.sqrt(len(vals))
    print(f"I ~ {I:.6f} +- {Ierr:.6f}  (reference {62082439864241/507343011840:.6f})")
    print(f"J ~ {J:.6f} +- {Jerr:.6f}  (reference {9933190664926733/40587440947200:.6f})")


if __name__ == "__main__":
    main(*(int(a) for a in sys.argv[1:]))
