"""Independent reference values for the unit tests.

Each value is computed here with numpy/scipy by brute force or a generic
solver and then frozen as a literal in tests/. Run:

    python3 tools/oracles/derived_values.py
"""
import math

import numpy as np
from scipy.optimize import linprog, minimize_scalar


def quad(alpha, beta):
    return lambda p: alpha * (p - beta) ** 2


def grid_max(fn, n=10_001):
    p = np.linspace(0.0, 1.0, n)
    v = fn(p)
    i = int(np.argmax(v))
    return float(v[i]), float(p[i])


def refine_max(fn):
    _, p0 = grid_max(fn)
    lo, hi = max(0.0, p0 - 1e-3), min(1.0, p0 + 1e-3)
    r = minimize_scalar(lambda p: -fn(p), bounds=(lo, hi), method="bounded", options={"xatol": 1e-12})
    # The bounded method never evaluates the interval ends exactly.
    best = max([(float(-r.fun), float(r.x))] + [(float(fn(x)), x) for x in (lo, hi)])
    return best


def cara(a, x):
    return (1 - math.exp(-a * x)) / (1 - math.exp(-a))


def upshift_gap(c, c2, p, p2, n=200_001):
    # 1-d: q >= p2, q2 <= p, q + q2 = p + p2, q, q2 in [0, 1].
    s = p + p2
    lo, hi = max(p2, s - p, s - 1.0, 0.0), min(1.0, s)
    q = np.linspace(lo, hi, n)
    total = c(q) + c2(s - q)
    return float(total.min() - (c(p) + c2(p2)))


def income_effects_value(c, lam, f):
    # sup_p t - c(p)(1 + lam e^{-t}), t = (1-p) f1 + p f2
    def obj(p):
        t = (1 - p) * f[0] + p * f[1]
        return t - c(p) * (1 + lam * np.exp(-t))
    return refine_max(obj)


def main():
    c = quad(1.0, 0.0)
    print("mh value a=1 b=0 w=(0,1):", refine_max(lambda p: p - c(p)))
    print("mh value a=1 b=1 w=(0,1):", grid_max(lambda p: p - quad(1.0, 1.0)(p)))
    print("malevolent a=1 b=0 w=(0,1) min:", -grid_max(lambda p: -(p + c(p)))[0])
    print("mh argmax a=1 b=0 w=(1,0):", grid_max(lambda p: (1 - p) - c(p)))
    print("cara(1) u(0.5):", repr(cara(1.0, 0.5)))
    print("cara(2) u(0.5):", repr(cara(2.0, 0.5)))

    # reduce_standard example: E={e1,e2}, C=(0,.5), P=((1,0),(0,1)), p=(.5,.5)
    r = linprog([0.0, 0.5], A_eq=[[1, 0], [0, 1], [1, 1]], b_eq=[0.5, 0.5, 1.0], bounds=[(0, None)] * 2)
    print("reduce example:", r.fun)

    # Moral-hazard value for a three-effort standard model, f=(0,1):
    # max_mu sum mu_e (<f,P_e> - C_e)
    C = [0.0, 0.3, 1.0]
    P = [[0.8, 0.2], [0.4, 0.6], [0.1, 0.9]]
    f = [0.0, 1.0]
    obj = [-(f[0] * p[0] + f[1] * p[1] - ce) for ce, p in zip(C, P)]
    r = linprog(obj, A_eq=[[1, 1, 1]], b_eq=[1.0], bounds=[(0, None)] * 3)
    print("standard model value f=(0,1):", -r.fun)

    print("income effects lam=5 a=1 b=.5 f=(0,1):", income_effects_value(quad(1.0, 0.5), 5.0, (0.0, 1.0)))
    print("income effects lam=5 a=1 b=.5 f=(-1,2):", income_effects_value(quad(1.0, 0.5), 5.0, (-1.0, 2.0)))

    print("upshift gap b=.7 vs .3, p=.3 p'=.7:", upshift_gap(quad(1, .7), quad(1, .3), 0.3, 0.7))
    print("upshift gap b=.3 vs .7, p=.7 p'=.3:", upshift_gap(quad(1, .3), quad(1, .7), 0.7, 0.3))
    print("upshift gap b=.3 vs .7, p=.3 p'=.7:", upshift_gap(quad(1, .3), quad(1, .7), 0.3, 0.7))

    # level sets on the high-state mass, k=0.04
    p = np.linspace(0, 1, 101)
    for b in (0.7, 0.3):
        L = p[quad(1, b)(p) <= 0.04 + 1e-12]
        print(f"level set b={b} k=.04:", L.min(), L.max(), len(L))

    # f-grid biconjugate of quad(1,0) at p=0.5 over f = (0, t), t in -4..4 step .1
    ts = np.round(np.arange(-40, 41) * 0.1, 12)
    pp = np.linspace(0, 1, 100_001)
    conj = [float(np.max(t * pp - c(pp))) for t in ts]
    print("biconjugate quad(1,0) at .5:", max(t * 0.5 - cj for t, cj in zip(ts, conj)))


if __name__ == "__main__":
    main()
