"""Zeta functions of weighted projective spaces as exact finite products.

A factorization is a canonical map ``(j, o) -> E`` standing for
``prod (1 - (q^j t)^o)^E``.  Exponents from all ``(S, j, d')`` triples are
merged on their ``(j, o)`` key, so two factorizations are equal exactly when
their maps are.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from . import arith
from .counting import (
    PrimePower,
    _as_weights,
    as_prime_power,
    exact_div,
    normalization_correction,
    subset_profile,
)
from .errors import ConsistencyError, InputError
from .weighted_space import normalize

STRATA = ("total", "smooth", "singular")
MAX_SERIES_ORDER = 64


@dataclass(frozen=True)
class ZetaFactorization:
    q: PrimePower
    base_dim: int
    factors: tuple[tuple[tuple[int, int], int], ...]
    stratum: str = "total"

    @classmethod
    def from_map(cls, q, base_dim, exponents: dict, stratum="total") -> "ZetaFactorization":
        items = tuple(sorted((key, e) for key, e in exponents.items() if e))
        return cls(as_prime_power(q), base_dim, items, stratum)

    def as_dict(self) -> dict[tuple[int, int], int]:
        return dict(self.factors)

    def to_json(self) -> dict:
        return {
            "q": self.q.q,
            "n": self.base_dim,
            "stratum": self.stratum,
            "factors": [{"j": j, "o": o, "E": e} for (j, o), e in self.factors],
        }

    @classmethod
    def from_json(cls, data: dict) -> "ZetaFactorization":
        exps = {(f["j"], f["o"]): f["E"] for f in data["factors"]}
        return cls.from_map(data["q"], data["n"], exps, data["stratum"])

    def __str__(self):
        return format_factorization(self)


def build_zeta(w, q, stratum: str = "total") -> ZetaFactorization:
    w, q = _as_weights(w), as_prime_power(q)
    if stratum not in STRATA:
        raise InputError(f"unknown stratum {stratum!r}")
    d = w.d
    keep = {
        "total": lambda k: True,
        "singular": lambda k: k > d,
        "smooth": lambda k: k == d,
    }[stratum]
    exps: dict[tuple[int, int], int] = {}
    for (size, k), mult in subset_profile(w).items():
        if not keep(k):
            continue
        m = size - 1
        for dd in arith.divisors(k):
            if gcd(dd, q.p) != 1:
                continue  # dd never divides q^r - 1
            o = arith.multiplicative_order(q.q, dd)
            phi = arith.euler_phi(dd)
            for j in range(m + 1):
                C = arith.binomial(m, j) * (-1) ** (m - j) * phi
                exps[(j, o)] = exps.get((j, o), 0) - mult * exact_div(C, o, "zeta exponent")
    return ZetaFactorization.from_map(q, w.n, exps, stratum)


def zeta_degree(Z: ZetaFactorization) -> int:
    return sum(e * o for (_j, o), e in Z.factors)


def recover_counts(Z: ZetaFactorization, r: int) -> int:
    """``N_r = r * [t^r] log Z``."""
    if r < 1:
        raise InputError("r must be >= 1")
    q = Z.q.q
    return -sum(e * o * q ** (j * r) for (j, o), e in Z.factors if r % o == 0)


def _factor_series(c: int, o: int, e: int, R: int) -> list[int]:
    # (1 - c t^o)^e truncated at t^R
    out = [0] * (R + 1)
    for k in range(R // o + 1):
        if e > 0:
            coef = arith.binomial(e, k) * (-c) ** k
        else:
            coef = arith.binomial(-e + k - 1, k) * c**k
        out[k * o] = coef
    return out


def _mul_trunc(a, b, R):
    out = [0] * (R + 1)
    for i, x in enumerate(a):
        if x:
            for j in range(R + 1 - i):
                if b[j]:
                    out[i + j] += x * b[j]
    return out


def expand_series(Z: ZetaFactorization, R: int, max_order: int = MAX_SERIES_ORDER) -> list[int]:
    """Coefficients ``c_0..c_R`` of Z as a power series in t."""
    if not 0 <= R <= max_order:
        raise InputError(f"series order must be in [0, {max_order}]")
    q = Z.q.q
    series = [1] + [0] * R
    for (j, o), e in Z.factors:
        series = _mul_trunc(series, _factor_series(q ** (j * o), o, e, R), R)
    return series


def _poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def rational_form(Z: ZetaFactorization) -> tuple[list[int], list[int]]:
    """Numerator and denominator polynomials (low degree first), unreduced."""
    q = Z.q.q
    num, den = [1], [1]
    for (j, o), e in Z.factors:
        base = [1] + [0] * (o - 1) + [-(q ** (j * o))]
        for _ in range(abs(e)):
            if e > 0:
                num = _poly_mul(num, base)
            else:
                den = _poly_mul(den, base)
    return num, den


@dataclass(frozen=True)
class PoleZero:
    j: int
    o: int
    multiplicity: int
    magnitude_of_reciprocal: int

    @property
    def kind(self) -> str:
        return "pole" if self.multiplicity < 0 else "zero"

    def to_json(self) -> dict:
        return {
            "j": self.j,
            "o": self.o,
            "E": self.multiplicity,
            "kind": self.kind,
            "magnitude_of_reciprocal": self.magnitude_of_reciprocal,
        }


def poles_zeros(Z: ZetaFactorization) -> list[PoleZero]:
    """One entry per factor: roots at t = zeta * q^-j for every o-th root of unity."""
    return [PoleZero(j, o, e, Z.q.q**j) for (j, o), e in Z.factors]


def decomposition_check(w, q) -> bool:
    total = build_zeta(w, q, "total").as_dict()
    merged = dict(build_zeta(w, q, "smooth").as_dict())
    for key, e in build_zeta(w, q, "singular").as_dict().items():
        merged[key] = merged.get(key, 0) + e
    return total == {k: v for k, v in merged.items() if v}


@dataclass(frozen=True)
class NormalizationZetaReport:
    d: int
    counts: list[int]
    counts_norm: list[int]
    d_primes: list[int]
    errors: list[int]
    zerr_series: list[Fraction]
    zerr_integral: bool
    equal: bool = field(default=False)

    def to_json(self) -> dict:
        def num(x):
            return int(x) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"

        return {
            "d": self.d,
            "N": self.counts,
            "N_norm": self.counts_norm,
            "d_prime": self.d_primes,
            "E": self.errors,
            "zerr": {"coeffs": [num(c) for c in self.zerr_series], "integral": self.zerr_integral},
            "equal": self.equal,
        }


def exp_series(log_terms: list[int], R: int) -> list[Fraction]:
    """Coefficients of ``exp(sum a_r t^r / r)`` given ``a_1..a_R``, exactly."""
    z = [Fraction(1)] + [Fraction(0)] * R
    for k in range(1, R + 1):
        z[k] = sum(log_terms[r - 1] * z[k - r] for r in range(1, k + 1)) / k
    return z


def normalization_zeta_compare(w, q, R: int, max_order: int = 32) -> NormalizationZetaReport:
    w, q = _as_weights(w), as_prime_power(q)
    if not 1 <= R <= max_order:
        raise InputError(f"R must be in [1, {max_order}]")
    w_norm, d = normalize(w)
    Zw = build_zeta(w, q)
    Zn = build_zeta(w_norm, q)
    counts, counts_norm, d_primes, errors = [], [], [], []
    for r in range(1, R + 1):
        Q = q.q**r
        n_r, n_norm = recover_counts(Zw, r), recover_counts(Zn, r)
        dr = gcd(d, Q - 1)
        e_r = n_r - dr * n_norm
        independent = (dr - 1) - normalization_correction(w_norm.weights, d, Q)
        if e_r != independent:
            raise ConsistencyError(f"E_{r}: zeta route gives {e_r}, order-grouped sum gives {independent}")
        counts.append(n_r)
        counts_norm.append(n_norm)
        d_primes.append(dr)
        errors.append(e_r)
    zerr = exp_series(errors, R)
    integral = all(c.denominator == 1 for c in zerr)
    equal = all(e == 0 for e in errors) and all(x == 1 for x in d_primes)
    return NormalizationZetaReport(d, counts, counts_norm, d_primes, errors, zerr, integral, equal)


def _factor_str(j, o, q) -> str:
    c = q ** (j * o)
    t = "t" if o == 1 else f"t^{o}"
    return f"(1 - {t})" if c == 1 else f"(1 - {c}{t})"


def format_factorization(Z: ZetaFactorization) -> str:
    q = Z.q.q
    num, den = [], []
    for (j, o), e in Z.factors:
        s = _factor_str(j, o, q) + (f"^{abs(e)}" if abs(e) != 1 else "")
        (num if e > 0 else den).append(s)
    top = "".join(num) or "1"
    if not den:
        return top
    bottom = den[0] if len(den) == 1 else "(" + "".join(den) + ")"
    return f"{top} / {bottom}"
