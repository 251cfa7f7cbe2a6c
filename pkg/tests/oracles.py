"""Independent reference computations used by several test modules."""

from fractions import Fraction
from math import gcd

from wpcount import counting
from wpcount.counting import PrimePower


def naive_burnside(w, Q):
    # sum over every lambda = g^l with N(lambda) = #{i : (Q-1) | l*w_i}
    total = sum(Q ** sum(1 for x in w if (l * x) % (Q - 1) == 0) - 1 for l in range(Q - 1))
    assert total % (Q - 1) == 0
    return total // (Q - 1)


def naive_error_term(w, Q):
    """N_w - d'*N_w' from the ungrouped sum over mu outside H = {g^l : d' | l}."""
    d = 0
    for x in w:
        d = gcd(d, x)
    wn = [x // d for x in w]
    dp = gcd(d, Q - 1)
    s = sum(Q ** sum(1 for x in wn if (l * x) % (Q - 1) == 0) for l in range(Q - 1) if l % dp)
    corr = Fraction(dp * s, Q - 1)
    assert corr.denominator == 1
    return (dp - 1) - int(corr)


def counts_series(w, q, stratum, R):
    """Z(t) coefficients from direct counts via r*c_r = sum N_m c_{r-m}."""
    base = PrimePower.from_q(q)
    N = [None] + [getattr(counting.count_strata(w, base.extension(r)), stratum) for r in range(1, R + 1)]
    c = [Fraction(1)]
    for r in range(1, R + 1):
        c.append(sum(N[m] * c[r - m] for m in range(1, r + 1)) / r)
    assert all(x.denominator == 1 for x in c)
    return c


def berlekamp_massey(s):
    """Shortest connection polynomial C (C[0] = 1) over Q for the sequence s."""
    C, B = [Fraction(1)], [Fraction(1)]
    L, m, b = 0, 1, Fraction(1)
    for n in range(len(s)):
        delta = s[n] + sum(C[i] * s[n - i] for i in range(1, L + 1))
        if delta == 0:
            m += 1
            continue
        T = list(C)
        coef = delta / b
        C = C + [Fraction(0)] * max(0, len(B) + m - len(C))
        for i, x in enumerate(B):
            C[i + m] -= coef * x
        if 2 * L <= n:
            L, B, b, m = n + 1 - L, T, delta, 1
        else:
            m += 1
    return C[: L + 1], L


def oracle_degree(w, q, stratum="total"):
    """deg(numerator) - deg(denominator) of Z, rebuilt from point counts alone."""
    for R in (40, 80, 160):
        s = counts_series(w, q, stratum, R)
        C, L = berlekamp_massey(s)
        if 2 * L + 2 < R:
            break
    else:
        raise AssertionError("recurrence did not stabilize")
    # numerator P = C * S mod t^L; Z = P / C
    P = [sum(C[i] * s[k - i] for i in range(min(k, len(C) - 1) + 1)) for k in range(L)]
    while P and P[-1] == 0:
        P.pop()
    while C and C[-1] == 0:
        C.pop()
    return (len(P) - 1) - (len(C) - 1)
