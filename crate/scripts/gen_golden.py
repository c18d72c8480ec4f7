#!/usr/bin/env python3
"""Regenerate the known-values golden file from first principles.

Every table here is computed with plain Fraction arithmetic and closed-form
coefficient formulas: (1+t)^a comes from generalized binomial coefficients,
e^{at} from powers over factorials, ln(1+t) from the alternating harmonic
form, and quotients from naive coefficient matching. None of the library's
code paths (formal exp/log, Newton steps, Sheffer machinery) are involved,
so the output is an independent oracle.

Usage: python3 scripts/gen_golden.py
Writes: crates/shefferlab/tests/golden/known_values.json
"""

import json
from fractions import Fraction
from math import factorial
from pathlib import Path

ORDER = 12  # enough spare terms for every table below
N_MAX = 8


def series_mul(a, b):
    out = [Fraction(0)] * (min(len(a), len(b)))
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            if i + j >= len(out):
                break
            out[i + j] += ai * bj
    return out


def series_div(num, den):
    """Coefficients of num/den by matching num_k = sum res_i * den_{k-i}."""
    assert den[0] != 0
    n = min(len(num), len(den))
    res = [Fraction(0)] * n
    for k in range(n):
        acc = num[k]
        for i in range(k):
            acc -= res[i] * den[k - i]
        res[k] = acc / den[0]
    return res


def log1p(order=ORDER):
    return [Fraction(0)] + [Fraction((-1) ** (k - 1), k) for k in range(1, order + 1)]


def one_plus_t_pow(a, order=ORDER):
    """(1+t)^a via generalized binomial coefficients C(a, k)."""
    out = []
    c = Fraction(1)
    for k in range(order + 1):
        out.append(c)
        c = c * (a - k) / (k + 1)
    return out


def exp_at(a, order=ORDER):
    return [Fraction(a) ** k / factorial(k) for k in range(order + 1)]


def drop_t(series):
    """Divide a valuation->=1 series by t."""
    assert series[0] == 0
    return series[1:]


def daehee_first(a_list):
    acc = one_plus_t_pow(Fraction(0))  # constant 1
    for a in a_list:
        num = drop_t(log1p())
        den = drop_t([c - (1 if k == 0 else 0) for k, c in enumerate(one_plus_t_pow(a))])
        acc = series_mul(acc, series_div(num, den))
    return acc


def daehee_second(a_list):
    acc = daehee_first(a_list)
    for a in a_list:
        acc = series_mul(acc, one_plus_t_pow(a))
    return acc


def barnes_bernoulli(a_list):
    acc = one_plus_t_pow(Fraction(0))
    for a in a_list:
        den = drop_t([c - (1 if k == 0 else 0) for k, c in enumerate(exp_at(a))])
        num = [Fraction(1)] + [Fraction(0)] * (len(den) - 1)
        acc = series_mul(acc, series_div(num, den))
    return acc


def cauchy():
    num = drop_t([Fraction(0), Fraction(1)] + [Fraction(0)] * (ORDER - 1))
    den = drop_t(log1p())
    return series_div(num, den)


def stirling_triangle(n_max):
    """Rows of S_1(n, m) by expanding x(x-1)...(x-n+1) as a polynomial."""
    rows = [[Fraction(1)]]
    poly = [Fraction(1)]
    for n in range(1, n_max + 1):
        # multiply by (x - (n-1))
        nxt = [Fraction(0)] * (len(poly) + 1)
        for k, c in enumerate(poly):
            nxt[k + 1] += c
            nxt[k] -= c * (n - 1)
        poly = nxt
        rows.append(list(poly))
    return rows


def numbers(series, n_max=N_MAX):
    return [str(series[n] * factorial(n)) for n in range(n_max + 1)]


def main():
    golden = {
        "schema_version": "1",
        "n_max": N_MAX,
        "daehee_first_a_1": numbers(daehee_first([Fraction(1)])),
        "daehee_first_a_2": numbers(daehee_first([Fraction(2)])),
        "daehee_first_a_1_2": numbers(daehee_first([Fraction(1), Fraction(2)])),
        "daehee_first_a_half_3": numbers(daehee_first([Fraction(1, 2), Fraction(3)])),
        "daehee_second_a_2": numbers(daehee_second([Fraction(2)])),
        "daehee_second_a_1_2": numbers(daehee_second([Fraction(1), Fraction(2)])),
        "barnes_bernoulli_a_1_2": numbers(barnes_bernoulli([Fraction(1), Fraction(2)])),
        "bernoulli": numbers(barnes_bernoulli([Fraction(1)])),
        "cauchy": numbers(cauchy()),
        "stirling1": [[str(v) for v in row] for row in stirling_triangle(N_MAX)],
    }

    # spot values that must hold: the closed form (-1)^n n!/(n+1) for a = (1),
    # and the classical constants
    for n in range(N_MAX + 1):
        expect = Fraction((-1) ** n * factorial(n), n + 1)
        assert golden["daehee_first_a_1"][n] == str(expect), n
    assert golden["bernoulli"][4] == "-1/30"
    assert golden["cauchy"][2] == "-1/6"
    assert golden["cauchy"][3] == "1/4"
    assert golden["stirling1"][4][2] == "11"
    assert golden["stirling1"][3][1] == "2"

    out = Path(__file__).resolve().parent.parent / "crates/shefferlab/tests/golden/known_values.json"
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(json.dumps(golden, indent=2) + "\n")
    print(f"wrote {out}")


if __name__ == "__main__":
    main()
