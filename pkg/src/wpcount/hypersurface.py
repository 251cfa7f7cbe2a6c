"""Weighted homogeneous polynomials and point counts of weighted hypersurfaces.

Coefficients live in the prime subfield: integer literals are reduced mod p.
Counting enumerates the affine cone over F_q, so every operation here is
bounded by the enumeration limit.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from math import gcd

import numpy as np

from . import _kernels
from .counting import PrimePower, _as_weights, as_prime_power, exact_div
from .errors import (
    ConsistencyError,
    InputError,
    NotHomogeneous,
    PolynomialError,
    PolynomialSyntaxError,
    ZeroPolynomial,
)
from .finite_field import FieldDescriptor
from .oracle import check_limit, field_for
from .weighted_space import WeightVector, normalize, subset_gcd_table

ALIASES = {"x": 0, "y": 1, "z": 2, "w": 3}

_TOKEN = re.compile(r"(?:(?P<num>\d+)|(?P<var>x\d+|[xyzw])(?![\w])|(?P<op>[-+*^]))")


@dataclass(frozen=True)
class Monomial:
    exponents: tuple[int, ...]
    coefficient: int

    def degree(self, w) -> int:
        return sum(a * b for a, b in zip(self.exponents, w))


@dataclass(frozen=True)
class WeightedPolynomial:
    monomials: tuple[Monomial, ...]
    weights: WeightVector
    degree: int
    p: int

    def scaled(self, c: int) -> "WeightedPolynomial":
        if c % self.p == 0:
            raise ZeroPolynomial("scaling by zero")
        monos = tuple(Monomial(m.exponents, m.coefficient * c % self.p) for m in self.monomials)
        return WeightedPolynomial(monos, self.weights, self.degree, self.p)

    def with_weights(self, w: WeightVector) -> "WeightedPolynomial":
        return from_monomials(self.monomials, w, self.p)

    def evaluate(self, F: FieldDescriptor, point) -> object:
        """Value at a tuple of FieldElements (slow; for tests and spot checks)."""
        acc = F.zero
        for m in self.monomials:
            term = F.from_int(m.coefficient)
            for x, e in zip(point, m.exponents):
                term = F.mul(term, F.pow(x, e))
            acc = F.add(acc, term)
        return acc

    def __str__(self):
        names = [f"x{i}" for i in range(len(self.weights))]
        parts = []
        for m in self.monomials:
            factors = [n if e == 1 else f"{n}^{e}" for n, e in zip(names, m.exponents) if e]
            parts.append("*".join(([str(m.coefficient)] if m.coefficient != 1 else []) + factors))
        return " + ".join(parts)


def from_monomials(monomials, w, p: int) -> WeightedPolynomial:
    w = _as_weights(w)
    merged: dict[tuple[int, ...], int] = {}
    for m in monomials:
        if len(m.exponents) != len(w):
            raise PolynomialError("monomial length does not match the number of weights")
        merged[m.exponents] = (merged.get(m.exponents, 0) + m.coefficient) % p
    monos = tuple(Monomial(e, c) for e, c in sorted(merged.items(), reverse=True) if c)
    if not monos:
        raise ZeroPolynomial("polynomial vanishes identically mod %d" % p)
    degree = monos[0].degree(w)
    for m in monos[1:]:
        if m.degree(w) != degree:
            raise NotHomogeneous(degree, m.degree(w))
    if degree < 1:
        raise PolynomialError("weighted degree must be at least 1")
    return WeightedPolynomial(monos, w, degree, p)


def parse_polynomial(text: str, w, p: int) -> WeightedPolynomial:
    """Parse sums of terms like ``3*x0^2*x1`` or ``y - x^2``.

    Variables are ``x0..xn``; for n <= 3 the aliases x, y, z, w name x0..x3.
    Integer coefficients are reduced mod p.
    """
    w = _as_weights(w)
    m = len(w)
    tokens = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        match = _TOKEN.match(text, pos)
        if not match or match.end() == pos:
            raise PolynomialSyntaxError(f"unexpected character {text[pos]!r}", pos)
        kind = match.lastgroup
        tokens.append((kind, match.group(kind), pos))
        pos = match.end()
    tokens.append(("end", "", len(text)))

    def var_index(name, at):
        if name in ALIASES:
            if w.n > 3:
                raise PolynomialSyntaxError(f"alias {name!r} needs n <= 3", at)
            idx = ALIASES[name]
        else:
            idx = int(name[1:])
        if idx >= m:
            raise PolynomialSyntaxError(f"variable {name!r} out of range for n = {w.n}", at)
        return idx

    monomials = []
    i = 0
    sign = 1
    if tokens[0][0] == "op" and tokens[0][1] in "+-":
        sign = -1 if tokens[0][1] == "-" else 1
        i = 1
    while True:
        coeff, exps = sign, [0] * m
        seen_factor = False
        while True:
            kind, val, at = tokens[i]
            if kind == "num":
                coeff *= int(val)
                i += 1
            elif kind == "var":
                idx = var_index(val, at)
                i += 1
                e = 1
                if tokens[i][0] == "op" and tokens[i][1] == "^":
                    if tokens[i + 1][0] != "num":
                        raise PolynomialSyntaxError("expected exponent", tokens[i + 1][2])
                    e = int(tokens[i + 1][1])
                    i += 2
                exps[idx] += e
            else:
                raise PolynomialSyntaxError("expected a coefficient or variable", at)
            seen_factor = True
            kind, val, at = tokens[i]
            if kind == "op" and val == "*":
                i += 1
                continue
            if kind in ("num", "var"):
                continue  # implicit product, e.g. 3x^2
            break
        assert seen_factor
        monomials.append(Monomial(tuple(exps), coeff % p))
        kind, val, at = tokens[i]
        if kind == "end":
            break
        if kind == "op" and val in "+-":
            sign = -1 if val == "-" else 1
            i += 1
            continue
        raise PolynomialSyntaxError(f"unexpected {val!r}", at)
    return from_monomials(monomials, w, p)


# -- counting ------------------------------------------------------------------

def _check_char(f: WeightedPolynomial, q: PrimePower):
    if q.p != f.p:
        raise InputError(f"polynomial was reduced mod {f.p} but the field has characteristic {q.p}")


def cone_mask(f, F: FieldDescriptor, kernels=None) -> np.ndarray:
    """uint8 flags over encoded tuples: 1 where every given polynomial vanishes."""
    kernels = kernels or _kernels.impl
    polys = f if isinstance(f, (list, tuple)) else [f]
    exp, log = F.log_tables
    mask = None
    for g in polys:
        exps = np.array([mo.exponents for mo in g.monomials], dtype=np.int64)
        coef_logs = np.array([log[F.index(F.from_int(mo.coefficient))] for mo in g.monomials], dtype=np.int64)
        cur = kernels.zero_mask(F.q, F.p, len(g.weights), exp, log, exps, coef_logs)
        mask = cur if mask is None else mask & cur
    return mask


def _fixed_by_log(w, F, allowed, kernels=None):
    kernels = kernels or _kernels.impl
    exp, log = F.log_tables
    return kernels.fixed_counts(F.q, list(w), exp, log, allowed)


def _prepare(f, q):
    q = as_prime_power(q)
    _check_char(f, q)
    check_limit(q.q, len(f.weights))
    return q, field_for(q)


def count_hypersurface_burnside(f: WeightedPolynomial, q, kernels=None) -> int:
    q, F = _prepare(f, q)
    allowed = cone_mask(f, F, kernels)
    fixed = _fixed_by_log(f.weights, F, allowed, kernels)
    return exact_div(int(fixed.sum()), q.q - 1, "hypersurface Burnside average")


def count_hypersurface_stratified(f: WeightedPolynomial, q, kernels=None) -> int:
    q, F = _prepare(f, q)
    kernels = kernels or _kernels.impl
    allowed = cone_mask(f, F, kernels)
    per_support = kernels.support_counts(q.q, len(f.weights), allowed)
    table = subset_gcd_table(f.weights)
    total = 0
    for mask in range(1, len(table)):
        n_s = int(per_support[mask])
        if not n_s:
            continue
        num = n_s * gcd(table[mask], q.q - 1)
        if num % (q.q - 1):
            raise ConsistencyError(
                f"support {mask:b}: N(S,F)*gcd(k_S,q-1) = {num} not divisible by q-1 = {q.q - 1}"
            )
        total += num // (q.q - 1)
    return total


@dataclass(frozen=True)
class PCH1Report:
    d: int
    d_prime: int
    count: int
    count_norm: int
    deficiency: int
    holds: bool

    def to_json(self) -> dict:
        return {
            "d": self.d,
            "d_prime": self.d_prime,
            "count": self.count,
            "count_norm": self.count_norm,
            "deficiency": self.deficiency,
            "holds": self.holds,
        }


def pch1_check(f: WeightedPolynomial, q, kernels=None) -> PCH1Report:
    """Compare |X(F_q)| with its normalization X' (weights w/d), all by enumeration."""
    q, F = _prepare(f, q)
    w_norm, d = normalize(f.weights)
    d_prime = gcd(d, q.q - 1)
    allowed = cone_mask(f, F, kernels)
    count = exact_div(int(_fixed_by_log(f.weights, F, allowed, kernels).sum()), q.q - 1)
    fixed_norm = _fixed_by_log(w_norm, F, allowed, kernels)
    count_norm = exact_div(int(fixed_norm.sum()), q.q - 1)
    # g**l is a d-th power iff d' divides l
    outside = sum(int(fixed_norm[l]) for l in range(q.q - 1) if l % d_prime)
    deficiency = exact_div(d_prime * outside, q.q - 1, "hypersurface deficiency")
    holds = count == d_prime * count_norm - deficiency
    if not holds:
        raise ConsistencyError(
            f"normalization relation fails: {count} != {d_prime}*{count_norm} - {deficiency}"
        )
    return PCH1Report(d, d_prime, count, count_norm, deficiency, holds)
