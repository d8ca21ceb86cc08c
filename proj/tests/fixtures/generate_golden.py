#!/usr/bin/env python3
"""Golden fixture generator for the DTLZ and WFG test problems.

Standalone transcription of the problem definitions from the original
publications (Deb et al. for DTLZ, Huband et al. for the WFG toolkit).
Kept deliberately independent of the C++ code: scalar arithmetic, 1-based
indexing translated locally, no shared helpers. The C++ implementation
must reproduce these values to ~1e-9.

Usage: python3 generate_golden.py > golden_eval.json
"""

import json
import math
import sys

PI = math.pi


# ---------------------------------------------------------------------------
# DTLZ (decision variables in [0,1]; first M-1 are position, last k distance)
# ---------------------------------------------------------------------------

def dtlz_g1(zs):
    k = len(zs)
    return 100.0 * (k + sum((z - 0.5) ** 2 - math.cos(20.0 * PI * (z - 0.5))
                            for z in zs))


def dtlz_g2(zs):
    return sum((z - 0.5) ** 2 for z in zs)


def dtlz1(x, M):
    pos, dist = x[:M - 1], x[M - 1:]
    g = dtlz_g1(dist)
    f = []
    for m in range(1, M + 1):
        val = 0.5 * (1.0 + g)
        for i in range(M - m):
            val *= pos[i]
        if m >= 2:
            val *= 1.0 - pos[M - m]
        f.append(val)
    return f


def dtlz2_shape(theta, g, M):
    f = []
    for m in range(1, M + 1):
        val = 1.0 + g
        for i in range(M - m):
            val *= math.cos(theta[i])
        if m >= 2:
            val *= math.sin(theta[M - m])
        f.append(val)
    return f


def dtlz2(x, M):
    pos, dist = x[:M - 1], x[M - 1:]
    g = dtlz_g2(dist)
    theta = [p * PI / 2.0 for p in pos]
    return dtlz2_shape(theta, g, M)


def dtlz3(x, M):
    pos, dist = x[:M - 1], x[M - 1:]
    g = dtlz_g1(dist)
    theta = [p * PI / 2.0 for p in pos]
    return dtlz2_shape(theta, g, M)


def dtlz4(x, M, alpha=100.0):
    pos, dist = x[:M - 1], x[M - 1:]
    g = dtlz_g2(dist)
    theta = [(p ** alpha) * PI / 2.0 for p in pos]
    return dtlz2_shape(theta, g, M)


def dtlz5_6(x, M, gfun):
    pos, dist = x[:M - 1], x[M - 1:]
    g = gfun(dist)
    theta = [pos[0] * PI / 2.0]
    for i in range(1, M - 1):
        theta.append(PI / (4.0 * (1.0 + g)) * (1.0 + 2.0 * g * pos[i]))
    return dtlz2_shape(theta, g, M)


def dtlz5(x, M):
    return dtlz5_6(x, M, dtlz_g2)


def dtlz6(x, M):
    return dtlz5_6(x, M, lambda zs: sum(z ** 0.1 for z in zs))


def dtlz7(x, M):
    pos, dist = x[:M - 1], x[M - 1:]
    k = len(dist)
    g = 1.0 + 9.0 / k * sum(dist)
    f = list(pos)
    h = float(M) - sum(fi / (1.0 + g) * (1.0 + math.sin(3.0 * PI * fi))
                       for fi in f)
    f.append((1.0 + g) * h)
    return f


DTLZ_K = {1: 5, 7: 20}  # default 10 for the rest


def dtlz_dim(prob, M):
    return M + DTLZ_K.get(prob, 10) - 1


# ---------------------------------------------------------------------------
# WFG toolkit: transformation functions (literal from the toolkit paper)
# ---------------------------------------------------------------------------

def b_poly(y, a):
    return y ** a


def b_flat(y, A, B, C):
    v = A + min(0.0, math.floor(y - B)) * A * (B - y) / B \
        - min(0.0, math.floor(C - y)) * (1.0 - A) * (y - C) / (1.0 - C)
    return min(1.0, max(0.0, v))  # guard tiny fp excursions


def b_param(y, u, A, B, C):
    v = A - (1.0 - 2.0 * u) * abs(math.floor(0.5 - u) + A)
    return y ** (B + (C - B) * v)


def s_linear(y, A):
    return abs(y - A) / abs(math.floor(A - y) + A)


def s_decept(y, A, B, C):
    tmp1 = math.floor(y - A + B) * (1.0 - C + (A - B) / B) / (A - B)
    tmp2 = math.floor(A + B - y) * (1.0 - C + (1.0 - A - B) / B) / (1.0 - A - B)
    return 1.0 + (abs(y - A) - B) * (tmp1 + tmp2 + 1.0 / B)


def s_multi(y, A, B, C):
    tmp1 = abs(y - C) / (2.0 * (math.floor(C - y) + C))
    tmp2 = (4.0 * A + 2.0) * PI * (0.5 - tmp1)
    return (1.0 + math.cos(tmp2) + 4.0 * B * tmp1 ** 2) / (B + 2.0)


def r_sum(ys, ws):
    return sum(w * y for w, y in zip(ws, ys)) / sum(ws)


def r_nonsep(ys, A):
    n = len(ys)
    num = 0.0
    for j in range(n):
        num += ys[j]
        for kk in range(A - 1):
            num += abs(ys[j] - ys[(j + kk + 1) % n])
    den = (n / A) * math.ceil(A / 2.0) * (1.0 + 2.0 * A - 2.0 * math.ceil(A / 2.0))
    return num / den


# Shape functions; x has length M, position part x[0..M-2], distance x[M-1].

def shape_linear(x, M):
    h = []
    for m in range(1, M + 1):
        val = 1.0
        for i in range(M - m):
            val *= x[i]
        if m >= 2:
            val *= 1.0 - x[M - m]
        h.append(val)
    return h


def shape_convex(x, M):
    h = []
    for m in range(1, M + 1):
        val = 1.0
        for i in range(M - m):
            val *= 1.0 - math.cos(x[i] * PI / 2.0)
        if m >= 2:
            val *= 1.0 - math.sin(x[M - m] * PI / 2.0)
        h.append(val)
    return h


def shape_concave(x, M):
    h = []
    for m in range(1, M + 1):
        val = 1.0
        for i in range(M - m):
            val *= math.sin(x[i] * PI / 2.0)
        if m >= 2:
            val *= math.cos(x[M - m] * PI / 2.0)
        h.append(val)
    return h


def shape_mixed(x1, A, alpha):
    return (1.0 - x1 - math.cos(2.0 * A * PI * x1 + PI / 2.0)
            / (2.0 * A * PI)) ** alpha


def shape_disc(x1, A, alpha, beta):
    return 1.0 - (x1 ** alpha) * math.cos(A * (x1 ** beta) * PI) ** 2


# ---------------------------------------------------------------------------
# WFG problems (k position vars, l distance vars, z_j in [0, 2j], 1-based j)
# ---------------------------------------------------------------------------

def wfg_normalize(z):
    return [zj / (2.0 * (j + 1)) for j, zj in enumerate(z)]


def wfg_final(t, M, Avec, shape):
    x = [max(t[M - 1], Avec[i]) * (t[i] - 0.5) + 0.5 for i in range(M - 1)]
    x.append(t[M - 1])
    h = shape(x, M)
    return [x[M - 1] + 2.0 * (m + 1) * h[m] for m in range(M)]


def groups_rsum(y, k, M, weighted):
    """Position groups of size k/(M-1) (plus one distance group) via r_sum."""
    t = []
    gs = k // (M - 1)
    for i in range(1, M):
        lo, hi = (i - 1) * gs, i * gs  # 0-based [lo, hi)
        ws = [2.0 * (j + 1) for j in range(lo, hi)] if weighted else [1.0] * gs
        t.append(r_sum(y[lo:hi], ws))
    rest = y[k:]
    ws = [2.0 * (j + 1) for j in range(k, k + len(rest))] if weighted \
        else [1.0] * len(rest)
    t.append(r_sum(rest, ws))
    return t


def wfg1(z, M, k):
    y = wfg_normalize(z)
    y = y[:k] + [s_linear(yi, 0.35) for yi in y[k:]]
    y = y[:k] + [b_flat(yi, 0.8, 0.75, 0.85) for yi in y[k:]]
    y = [b_poly(yi, 0.02) for yi in y]
    t = groups_rsum(y, k, M, weighted=True)

    def shape(x, MM):
        h = shape_convex(x, MM)
        h[MM - 1] = shape_mixed(x[0], 5.0, 1.0)
        return h

    return wfg_final(t, M, [1.0] * (M - 1), shape)


def wfg2_3_t(z, M, k):
    y = wfg_normalize(z)
    n = len(y)
    l = n - k
    y = y[:k] + [s_linear(yi, 0.35) for yi in y[k:]]
    y2 = y[:k]
    for i in range(k, k + l // 2):
        head = k + 2 * (i - k)       # 0-based index of y_{k+2(i-k)-1}
        y2.append(r_nonsep([y[head], y[head + 1]], 2))
    return groups_rsum(y2, k, M, weighted=False)


def wfg2(z, M, k):
    t = wfg2_3_t(z, M, k)

    def shape(x, MM):
        h = shape_convex(x, MM)
        h[MM - 1] = shape_disc(x[0], 5.0, 1.0, 1.0)
        return h

    return wfg_final(t, M, [1.0] * (M - 1), shape)


def wfg3(z, M, k):
    t = wfg2_3_t(z, M, k)
    Avec = [1.0] + [0.0] * (M - 2)
    return wfg_final(t, M, Avec, shape_linear)


def wfg4(z, M, k):
    y = wfg_normalize(z)
    y = [s_multi(yi, 30.0, 10.0, 0.35) for yi in y]
    t = groups_rsum(y, k, M, weighted=False)
    return wfg_final(t, M, [1.0] * (M - 1), shape_concave)


def wfg5(z, M, k):
    y = wfg_normalize(z)
    y = [s_decept(yi, 0.35, 0.001, 0.05) for yi in y]
    t = groups_rsum(y, k, M, weighted=False)
    return wfg_final(t, M, [1.0] * (M - 1), shape_concave)


def wfg6(z, M, k):
    y = wfg_normalize(z)
    n = len(y)
    l = n - k
    y = y[:k] + [s_linear(yi, 0.35) for yi in y[k:]]
    gs = k // (M - 1)
    t = [r_nonsep(y[(i - 1) * gs:i * gs], gs) for i in range(1, M)]
    t.append(r_nonsep(y[k:], l))
    return wfg_final(t, M, [1.0] * (M - 1), shape_concave)


def wfg7(z, M, k):
    y = wfg_normalize(z)
    n = len(y)
    y2 = []
    for i in range(k):
        u = r_sum(y[i + 1:], [1.0] * (n - i - 1))
        y2.append(b_param(y[i], u, 0.98 / 49.98, 0.02, 50.0))
    y2 += y[k:]
    y2 = y2[:k] + [s_linear(yi, 0.35) for yi in y2[k:]]
    t = groups_rsum(y2, k, M, weighted=False)
    return wfg_final(t, M, [1.0] * (M - 1), shape_concave)


def wfg8(z, M, k):
    y = wfg_normalize(z)
    y2 = y[:k]
    for i in range(k, len(y)):
        u = r_sum(y[:i], [1.0] * i)
        y2.append(b_param(y[i], u, 0.98 / 49.98, 0.02, 50.0))
    y2 = y2[:k] + [s_linear(yi, 0.35) for yi in y2[k:]]
    t = groups_rsum(y2, k, M, weighted=False)
    return wfg_final(t, M, [1.0] * (M - 1), shape_concave)


def wfg9(z, M, k):
    y = wfg_normalize(z)
    n = len(y)
    l = n - k
    y2 = []
    for i in range(n - 1):
        u = r_sum(y[i + 1:], [1.0] * (n - i - 1))
        y2.append(b_param(y[i], u, 0.98 / 49.98, 0.02, 50.0))
    y2.append(y[n - 1])
    y3 = [s_decept(y2[i], 0.35, 0.001, 0.05) for i in range(k)]
    y3 += [s_multi(y2[i], 30.0, 95.0, 0.35) for i in range(k, n)]
    gs = k // (M - 1)
    t = [r_nonsep(y3[(i - 1) * gs:i * gs], gs) for i in range(1, M)]
    t.append(r_nonsep(y3[k:], l))
    return wfg_final(t, M, [1.0] * (M - 1), shape_concave)


WFG = {1: wfg1, 2: wfg2, 3: wfg3, 4: wfg4, 5: wfg5, 6: wfg6, 7: wfg7,
       8: wfg8, 9: wfg9}
DTLZ = {1: dtlz1, 2: dtlz2, 3: dtlz3, 4: dtlz4, 5: dtlz5, 6: dtlz6, 7: dtlz7}


# ---------------------------------------------------------------------------
# Self checks against closed-form front knowledge
# ---------------------------------------------------------------------------

def self_check():
    eps = 1e-10
    # DTLZ2: distance vars at 0.5 -> point on the unit sphere.
    for M in (2, 3, 5):
        D = dtlz_dim(2, M)
        x = [0.3] * (M - 1) + [0.5] * (D - M + 1)
        f = dtlz2(x, M)
        assert abs(sum(v * v for v in f) - 1.0) < eps
    # DTLZ1: distance vars at 0.5 -> sum f = 0.5.
    for M in (2, 3, 5):
        D = dtlz_dim(1, M)
        x = [0.7] * (M - 1) + [0.5] * (D - M + 1)
        f = dtlz1(x, M)
        assert abs(sum(f) - 0.5) < eps
    # WFG4..WFG7 with all distance vars at their 0.35 optimum -> on the
    # scaled ellipsoid sum (f_m / 2m)^2 = 1.
    for prob in (4, 5, 6, 7):
        for M in (2, 3, 5):
            k, l = 2 * (M - 1), 20
            z = [0.29 * 2.0 * (j + 1) for j in range(k)] \
                + [0.35 * 2.0 * (j + 1) for j in range(k, k + l)]
            f = WFG[prob](z, M, k)
            s = sum((f[m] / (2.0 * (m + 1))) ** 2 for m in range(M))
            assert abs(s - 1.0) < 1e-9, (prob, M, s)
    # WFG8: distance optimum solved forwards through the prefix-coupled bias,
    # then the point must sit on the ellipsoid.
    for M in (2, 3, 5):
        k, l = 2 * (M - 1), 20
        n = k + l
        y = [0.43 * ((j % 3) + 1) / 3.0 for j in range(k)]
        for i in range(k, n):
            u = r_sum(y[:i], [1.0] * i)
            v = 0.98 / 49.98 - (1.0 - 2.0 * u) * abs(math.floor(0.5 - u) + 0.98 / 49.98)
            e = 0.02 + (50.0 - 0.02) * v
            y.append(0.35 ** (1.0 / e))
        z = [y[j] * 2.0 * (j + 1) for j in range(n)]
        f = wfg8(z, M, k)
        s = sum((f[m] / (2.0 * (m + 1))) ** 2 for m in range(M))
        assert abs(s - 1.0) < 1e-9, ("wfg8", M, s)
    # WFG9: distance optimum solved backwards through the suffix-coupled bias.
    for M in (2, 3, 5):
        k, l = 2 * (M - 1), 20
        n = k + l
        y = [0.37 * ((j % 4) + 1) / 4.0 for j in range(k)] + [0.0] * l
        y[n - 1] = 0.35
        for i in range(n - 2, k - 1, -1):
            u = r_sum(y[i + 1:], [1.0] * (n - i - 1))
            v = 0.98 / 49.98 - (1.0 - 2.0 * u) * abs(math.floor(0.5 - u) + 0.98 / 49.98)
            e = 0.02 + (50.0 - 0.02) * v
            y[i] = 0.35 ** (1.0 / e)
        z = [y[j] * 2.0 * (j + 1) for j in range(n)]
        f = wfg9(z, M, k)
        s = sum((f[m] / (2.0 * (m + 1))) ** 2 for m in range(M))
        assert abs(s - 1.0) < 1e-9, ("wfg9", M, s)
    # WFG2/WFG3 corner identity: all-zero position + optimal distance
    # collapses every objective except the last, which hits 2M exactly.
    # (Not applicable to WFG1: b_poly with exponent 0.02 blows up the
    # ~1e-16 residue of 0.35*2j/(2j), so the exact optimum is not
    # representable in doubles.)
    for prob in (2, 3):
        for M in (2, 3, 5):
            k, l = 2 * (M - 1), 20
            z = [0.0] * k + [0.35 * 2.0 * (j + 1) for j in range(k, k + l)]
            f = WFG[prob](z, M, k)
            assert all(abs(v) < 1e-9 for v in f[:M - 1]), (prob, M, f)
            assert abs(f[M - 1] - 2.0 * M) < 1e-9, (prob, M, f)
    # WFG1 anti-corner: the all-zero decision vector passes through every
    # transformation exactly (s_linear(0)=1, b_flat(1)=1, b_poly(1)=1),
    # giving f = (1, ..., 1, 2M+1).
    for M in (2, 3, 5):
        k = 2 * (M - 1)
        f = wfg1([0.0] * (k + 20), M, k)
        assert all(abs(v - 1.0) < 1e-12 for v in f[:M - 1]), (M, f)
        assert abs(f[M - 1] - (2.0 * M + 1.0)) < 1e-12, (M, f)
    print("self-check ok", file=sys.stderr)


# ---------------------------------------------------------------------------
# Fixture emission
# ---------------------------------------------------------------------------

def pattern(D, kind, ub):
    if kind == "zeros":
        return [0.0] * D
    if kind == "upper":
        return list(ub)
    if kind == "mid":
        return [0.5 * u for u in ub]
    if kind == "pat1":
        return [(0.1 + 0.8 * ((7 * j + 3) % 11) / 11.0) * ub[j] for j in range(D)]
    if kind == "pat2":
        return [(0.05 + 0.9 * ((5 * j + 1) % 13) / 13.0) * ub[j] for j in range(D)]
    raise ValueError(kind)


def main():
    self_check()
    entries = []
    for M in (2, 3, 4, 5):
        for prob in range(1, 8):
            D = dtlz_dim(prob, M)
            ub = [1.0] * D
            for kind in ("zeros", "upper", "mid", "pat1", "pat2"):
                x = pattern(D, kind, ub)
                f = DTLZ[prob](x, M)
                entries.append({"problem": f"DTLZ{prob}", "M": M, "x": x, "f": f})
        for prob in range(1, 10):
            k, l = 2 * (M - 1), 20
            D = k + l
            ub = [2.0 * (j + 1) for j in range(D)]
            for kind in ("zeros", "upper", "mid", "pat1", "pat2"):
                x = pattern(D, kind, ub)
                f = WFG[prob](x, M, k)
                entries.append({"problem": f"WFG{prob}", "M": M, "x": x, "f": f})
    json.dump(entries, sys.stdout, indent=1)
    sys.stdout.write("\n")


if __name__ == "__main__":
    main()
