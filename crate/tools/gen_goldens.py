#!/usr/bin/env python3
"""Regenerate the frozen reference values in crates/core/goldens.

Everything here is computed without the Rust crate: lattice counts by
direct enumeration with numpy, series by summation in mpmath or numpy
extended precision, special functions from mpmath.

    python3 tools/gen_goldens.py [--out crates/core/goldens]
"""

import argparse
import json
import math
from pathlib import Path

import mpmath as mp
import numpy as np

mp.mp.dps = 30
LD = np.longdouble
GENERATOR = "tools/gen_goldens.py"


def fmt(v):
    return "{:.16e}".format(float(v))


def write(out, name, values):
    doc = {"name": name, "generator": GENERATOR, "values": {k: fmt(v) for k, v in sorted(values.items())}}
    (out / f"{name}.json").write_text(json.dumps(doc, indent=2) + "\n")
    print(f"{name}: {len(values)} values")


# lattice counts ------------------------------------------------------------

def r2_table(limit):
    """r2(n) for 0 <= n <= limit by enumerating (a, b) with a^2 + b^2 <= limit."""
    root = math.isqrt(limit)
    a = np.arange(-root, root + 1, dtype=np.int64)
    out = np.zeros(limit + 1, dtype=np.int64)
    for ai in a:
        rest = limit - ai * ai
        b = np.arange(-math.isqrt(rest), math.isqrt(rest) + 1, dtype=np.int64)
        np.add.at(out, ai * ai + b * b, 1)
    return out


def sweep_values(limit):
    counts = np.cumsum(r2_table(limit))
    n = np.arange(1, limit + 1, dtype=np.float64)
    c = counts[1:].astype(np.float64)
    norm = np.abs((c - math.pi * n) / n ** 0.25)
    pre = np.abs((counts[:-1].astype(np.float64) - math.pi * n) / n ** 0.25)
    values = {}
    running = 0.0
    k = 0
    while 2 ** k <= limit:
        lo, hi = 2 ** k, min(2 ** (k + 1) - 1, limit)
        block = norm[lo - 1:hi]
        running = max(running, block.max())
        values[f"block_{k:02d}_max"] = block.max()
        values[f"block_{k:02d}_argmax_x"] = lo + int(block.argmax())
        values[f"block_{k:02d}_running_max"] = running
        values[f"block_{k:02d}_prejump_max"] = pre[lo - 1:hi].max()
        k += 1
    for top, tag in [(1000, "1e3"), (limit, "1e6")]:
        values[f"max_{tag}"] = norm[:top].max()
        values[f"argmax_{tag}"] = 1 + int(norm[:top].argmax())
        values[f"mean_count_over_x_{tag}"] = math.fsum(c[:top] / n[:top]) / top
    values["count_100"] = counts[100]
    values["delta_100"] = counts[100] - 100 * math.pi
    values["count_1e6"] = counts[limit]
    values["delta_normalized_1e6"] = (counts[limit] - math.pi * limit) / limit ** 0.25
    return values, counts


# cosine sums ---------------------------------------------------------------

def cos_terms_ld(x, m, exponent):
    n = np.arange(1, m + 1, dtype=LD)
    two_pi = LD(2) * LD(mp.pi)
    quarter_pi = LD(mp.pi) / LD(4)
    return np.cos(two_pi * np.sqrt(n * LD(x)) + quarter_pi) * n ** LD(-exponent)


def cos_sum(x, m, exponent):
    if m <= 20000:
        x, e = mp.mpf(x), mp.mpf(exponent)
        return mp.fsum(mp.cos(2 * mp.pi * mp.sqrt(n * x) + mp.pi / 4) * mp.mpf(n) ** (-e) for n in range(1, m + 1))
    return mp.mpf(str(np.sum(cos_terms_ld(x, m, exponent))))


def fresnel_rhs(a, m):
    a = mp.mpf(a)
    a4 = a ** mp.mpf(0.25)
    hi = 2 * (a * m) ** mp.mpf(0.25)
    root = 2 * mp.pi * mp.sqrt(a)
    return (-2 * mp.fresnelc(2 * a4) + 2 * mp.fresnelc(hi) + 2 * mp.fresnels(2 * a4) - 2 * mp.fresnels(hi)) / (
        mp.sqrt(2) * a4
    ) + (mp.cos(root) - mp.sin(root)) / mp.sqrt(2)


def expint_rhs(eps, x, y):
    eps, x, y = mp.mpf(eps), mp.mpf(x), mp.mpf(y)
    w = 2 * mp.pi * mp.sqrt(x)
    yp = y ** (1 - eps)
    up, down = (1 + 1j) / mp.sqrt(2), (1 - 1j) / mp.sqrt(2)
    e = lambda im: mp.expint(eps, mp.mpc(0, im))
    wy = w * y
    v = (
        -up * yp * e(-wy) - down * yp * e(wy) + up * e(-w) + down * e(w)
        + yp * mp.sin(wy) / mp.sqrt(2) + yp * mp.cos(wy + mp.pi / 4) - yp * mp.cos(wy) / mp.sqrt(2)
        - mp.sin(w) / mp.sqrt(2) + mp.cos(w) / mp.sqrt(2)
    )
    return v


def e_eps_quad(eps, im):
    """E_eps(i*im) = int_1^inf e^{-i im t} t^{-eps} dt by oscillatory quadrature."""
    eps = mp.mpf(eps)
    re = mp.quadosc(lambda t: mp.cos(im * t) * t ** (-eps), [1, mp.inf], omega=abs(im))
    ii = mp.quadosc(lambda t: -mp.sin(im * t) * t ** (-eps), [1, mp.inf], omega=abs(im))
    return mp.mpc(re, ii)


def f_eps_limit_quad(eps, x):
    w = 2 * mp.pi * mp.sqrt(x)
    v = ((1 + 1j) * e_eps_quad(eps, -w) + (1 - 1j) * e_eps_quad(eps, w) - mp.sin(w) + mp.cos(w)) / mp.sqrt(2)
    return v.real


def sqrt_rhs(x, m):
    x = mp.mpf(x)
    sx = mp.sqrt(x)
    return (mp.sin(2 * mp.pi * mp.sqrt(x * m) + mp.pi / 4) - mp.sin(2 * mp.pi * sx + mp.pi / 4)) / (mp.pi * sx) + mp.cos(
        2 * mp.pi * sx + mp.pi / 4
    )


def closed_form_values():
    v = {}
    for a in [1.0, 2.0, 7.3]:
        for m in [1, 100, 10_000, 1_000_000]:
            lhs = cos_sum(a, m, 0.75)
            rhs = fresnel_rhs(a, m)
            v[f"fresnel_a={a:g}_m={m}_residual"] = mp.mpf(lhs) - rhs
            v[f"fresnel_a={a:g}_m={m}_rhs"] = rhs
    for eps, x, y in [(1.0, 1.0, 10.0), (1.0, 1.0, 1.0), (0.5, 2.0, 30.0), (1.0, 4.0, 100.0)]:
        m = int(math.floor(y * y))
        lhs = cos_sum(x, m, 0.5 + 0.5 * eps)
        rhs = expint_rhs(eps, x, y)
        tag = f"expint_eps={eps:g}_x={x:g}_y={y:g}"
        v[f"{tag}_residual"] = mp.mpf(lhs) - rhs.real
        v[f"{tag}_rhs"] = rhs.real
    for x, m in [(2.0, 1), (2.0, 10_000), (3.0, 100), (2.0, 1_000_000)]:
        lhs = cos_sum(x, m, 0.5)
        rhs = sqrt_rhs(x, m)
        v[f"sqrt_x={x:g}_m={m}_residual"] = mp.mpf(lhs) - rhs
        v[f"sqrt_x={x:g}_m={m}_rhs"] = rhs
    quad = f_eps_limit_quad(1, 4)
    v["f_eps_limit_eps=1_x=4"] = quad
    return v


def series_values(counts):
    v = {}
    a, b = mp.pi / 4, 2 * mp.pi * mp.sqrt(mp.mpf("10.5"))

    def m_n(a, b, s, k_terms):
        m = n = mp.mpf(0)
        for j in range(1, k_terms + 1):
            k = 2 * j - 1
            w = (-1) ** j * mp.mpf(k) ** (-s)
            m += w * mp.cos(a + b * mp.sqrt(k))
            n += w * mp.sin(a + b * mp.sqrt(k))
        return m, n

    m, n = m_n(a, b, mp.mpf(0.75), 10_000)
    v["m_s_0.75_k=10000"], v["n_s_0.75_k=10000"] = m, n
    p = q = mp.mpf(0)
    s = mp.mpf(0.75)
    for nn in range(1, 201):
        mm, qq = m_n(a, b * mp.sqrt(nn), s, 200)
        p += mm * mp.mpf(nn) ** (-s)
        q += qq * mp.mpf(nn) ** (-s)
    v["p_s_0.75_n=200_k=200"], v["q_s_0.75_n=200_k=200"] = p, q

    r2 = np.diff(counts)  # r2(n) for n >= 1
    m_terms = 1_000_000
    nz = np.nonzero(r2[:m_terms])[0] + 1
    x = mp.mpf("10.5")
    v["s_partial_x=10.5_m=1e6"] = mp.fsum(
        int(r2[k - 1]) * mp.cos(2 * mp.pi * mp.sqrt(k * x) + mp.pi / 4) * mp.mpf(k) ** mp.mpf(-0.75) for k in nz.tolist()
    )
    v["d_partial_x=2_delta=0.125_m=1e6"] = np.sum(cos_terms_ld(2.0, m_terms, 0.75 - 0.125))

    e = mp.expint(0.5, 2j * mp.pi)
    v["expint_0.5_2pi_i_re"], v["expint_0.5_2pi_i_im"] = e.real, e.imag
    e = mp.expint(1, 1)
    v["expint_1_1"] = e
    return v


def d_partial_values():
    sup = {}
    conv = {}
    m_max = 1_000_000
    for x in [1.0, 2.0, 10.5]:
        for delta in [0.125, 0.2]:
            partial = np.cumsum(cos_terms_ld(x, m_max, 0.75 - delta))
            sup[f"x={x:g},delta={delta:g}"] = np.abs(partial).max()
            if x == 2.0 and delta == 0.125:
                for e in range(2, 7):
                    top = 10 ** e
                    conv[f"window_mean_m=1e{e}"] = np.mean(partial[top - 100:top])
                    conv[f"value_m=1e{e}"] = partial[top - 1]
    return sup, conv


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", type=Path, default=Path(__file__).resolve().parent.parent / "crates/core/goldens")
    args = ap.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)

    sweep, counts = sweep_values(1_000_000)
    write(args.out, "sweep", sweep)
    sup, conv = d_partial_values()
    write(args.out, "d_partial_sup", sup)
    write(args.out, "convergence", conv)
    write(args.out, "closed_form", closed_form_values())
    write(args.out, "series", series_values(counts))


if __name__ == "__main__":
    main()
