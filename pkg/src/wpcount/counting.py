"""Closed-form point counts for weighted projective spaces over finite fields.

Two independent formulas are provided for the total count: the subset-gcd sum
(``count_subset``) and Burnside's average over F_q^* with the group elements
grouped by multiplicative order (``count_burnside``).  The singular/smooth
split and the normalization and scaling relations are built on top.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from math import gcd

from . import arith
from .errors import (
    ConsistencyError,
    CoprimalityViolated,
    HypothesisViolated,
    InputError,
    NotPrimePower,
)
from .weighted_space import WeightVector, normalize, subset_gcd_table


@dataclass(frozen=True)
class PrimePower:
    p: int
    alpha: int

    def __post_init__(self):
        if not arith.is_prime(self.p):
            raise NotPrimePower(f"{self.p} is not prime")
        if self.alpha < 1:
            raise NotPrimePower("exponent must be >= 1")

    @property
    def q(self) -> int:
        return self.p**self.alpha

    @classmethod
    def from_q(cls, q: int) -> "PrimePower":
        try:
            p, alpha = arith.prime_power_decompose(int(q))
        except InputError:
            raise NotPrimePower(f"{q} is not a prime power") from None
        return cls(p, alpha)

    def extension(self, r: int) -> "PrimePower":
        if r < 1:
            raise InputError("extension degree must be >= 1")
        return PrimePower(self.p, self.alpha * r)

    def __int__(self):
        return self.q

    def __str__(self):
        return str(self.q)


def as_prime_power(q) -> PrimePower:
    return q if isinstance(q, PrimePower) else PrimePower.from_q(q)


def _as_weights(w) -> WeightVector:
    return w if isinstance(w, WeightVector) else WeightVector(tuple(w))


@dataclass(frozen=True)
class CountReport:
    total: int
    singular: int
    smooth: int
    method: str
    q: PrimePower
    weights: WeightVector

    def __post_init__(self):
        if self.total != self.singular + self.smooth or min(self.total, self.singular, self.smooth) < 0:
            raise ConsistencyError(f"inconsistent strata {self.singular} + {self.smooth} != {self.total}")

    def to_json(self) -> dict:
        return {
            "weights": list(self.weights),
            "q": self.q.q,
            "method": self.method,
            "total": self.total,
            "singular": self.singular,
            "smooth": self.smooth,
        }


@dataclass(frozen=True)
class NormalizationReport:
    d: int
    d_prime: int
    count_w: int
    count_w_norm: int
    error_term: int
    relation_holds: bool
    correction: int = 0

    def to_json(self) -> dict:
        return {
            "d": self.d,
            "d_prime": self.d_prime,
            "count_w": self.count_w,
            "count_w_norm": self.count_w_norm,
            "error_term": self.error_term,
            "correction": self.correction,
            "relation_holds": self.relation_holds,
        }


def exact_div(num: int, den: int, what: str = "division") -> int:
    quo, rem = divmod(num, den)
    if rem:
        raise ConsistencyError(f"{what}: {num} is not divisible by {den}")
    return quo


def subset_profile(w: WeightVector) -> Counter:
    """Multiplicity of each ``(|S|, k_S)`` over nonempty subsets."""
    table = subset_gcd_table(w)
    return Counter((mask.bit_count(), table[mask]) for mask in range(1, len(table)))


def _subset_sum(profile, Q: int, keep=lambda k: True) -> int:
    return sum(
        mult * (Q - 1) ** (size - 1) * gcd(k, Q - 1)
        for (size, k), mult in profile.items()
        if keep(k)
    )


def count_subset(w, q) -> int:
    w, q = _as_weights(w), as_prime_power(q)
    return _subset_sum(subset_profile(w), q.q)


def relevant_orders(D: int, modulus: int) -> list[int]:
    """Divisors of ``D`` built only from primes dividing ``modulus``.

    Group elements whose order has any other prime factor fix no coordinate
    with a weight dividing ``modulus``, so order-grouped sums can skip them.
    """
    return arith.divisors(D // arith.coprime_part(D, modulus))


def _burnside(weights, Q: int) -> int:
    D = Q - 1
    acc = 0
    for e in relevant_orders(D, arith.lcm_all(weights)):
        fixed = sum(1 for x in weights if x % e == 0)
        acc += arith.euler_phi(e) * (Q**fixed - 1)
    return exact_div(acc, D, "Burnside average")


def count_burnside(w, q) -> int:
    w, q = _as_weights(w), as_prime_power(q)
    return _burnside(w.weights, q.q)


def count_extension(w, q, r: int) -> int:
    """Count over F_{q^r}."""
    return count_burnside(w, as_prime_power(q).extension(r))


def count_strata(w, q) -> CountReport:
    w, q = _as_weights(w), as_prime_power(q)
    d = w.d
    profile = subset_profile(w)
    singular = _subset_sum(profile, q.q, lambda k: k > d)
    smooth = _subset_sum(profile, q.q, lambda k: k == d)
    return CountReport(singular + smooth, singular, smooth, "subset", q, w)


def count_special_case(w, q) -> int:
    """``(q^{n+1}-1)/(q-1)``, valid when every weight is coprime to q-1."""
    w, q = _as_weights(w), as_prime_power(q)
    for i, x in enumerate(w):
        if gcd(x, q.q - 1) != 1:
            raise HypothesisViolated(
                f"gcd(w_{i}, q-1) = gcd({x}, {q.q - 1}) = {gcd(x, q.q - 1)} != 1", index=i
            )
    return exact_div(q.q ** (w.n + 1) - 1, q.q - 1)


def nonresidue_power_sum(w_norm, d: int, Q: int) -> int:
    """Sum of ``Q**N'(mu)`` over mu in F_Q^* that are not d-th powers.

    ``N'(mu)`` counts normalized weights with ``mu**w' == 1``.  Elements are
    grouped by order: mu is a d-th power iff its order divides
    ``(Q-1)/gcd(d, Q-1)``.  Orders with a prime factor outside the normalized
    weights and ``d'`` contribute ``Q**0`` each and are counted in bulk.
    """
    D = Q - 1
    d_prime = gcd(d, D)
    M = D // d_prime
    modulus = arith.lcm_all(w_norm) * d_prime
    smooth_part = D // arith.coprime_part(D, modulus)
    rest = D // smooth_part - 1
    total = 0
    for e in arith.divisors(smooth_part):
        if M % e == 0:
            continue
        fixed = sum(1 for x in w_norm if x % e == 0)
        total += arith.euler_phi(e) * (Q**fixed + rest)
    return total


def normalization_correction(w_norm, d: int, Q: int) -> int:
    """``d'/(Q-1) * nonresidue_power_sum``, checked exact."""
    d_prime = gcd(d, Q - 1)
    return exact_div(d_prime * nonresidue_power_sum(w_norm, d, Q), Q - 1, "normalization correction")


def normalization_relation(w, q) -> NormalizationReport:
    w, q = _as_weights(w), as_prime_power(q)
    w_norm, d = normalize(w)
    Q = q.q
    d_prime = gcd(d, Q - 1)
    count_w = count_subset(w, q)
    count_norm = count_subset(w_norm, q)
    correction = normalization_correction(w_norm.weights, d, Q)
    predicted = d_prime * count_norm + (d_prime - 1) - correction
    error = count_w - d_prime * count_norm
    holds = predicted == count_w and error == (d_prime - 1) - correction
    if not holds:
        raise ConsistencyError(
            f"normalization relation fails for w={w}, q={Q}: {count_w} != {predicted}"
        )
    return NormalizationReport(d, d_prime, count_w, count_norm, error, holds, correction)


def scaled_weights(w, gamma: int) -> WeightVector:
    w = _as_weights(w)
    return WeightVector((w[0],) + tuple(gamma * x for x in w.weights[1:]))


def scaling_difference(w, gamma: int, q) -> int:
    """``count(w0, g*w1, ..., g*wn) - count(w)``, oriented scaled minus original."""
    w, q = _as_weights(w), as_prime_power(q)
    if gamma < 1:
        raise InputError("gamma must be a positive integer")
    if gcd(w[0], gamma) != 1:
        raise CoprimalityViolated(f"gcd(w_0, gamma) = gcd({w[0]}, {gamma}) != 1")
    Q = q.q
    tail = WeightVector((1,) + w.weights[1:])
    table = subset_gcd_table(tail)
    formula = 0
    # subsets of {1..n}: even masks of the padded vector, excluding the empty one
    for mask in range(2, len(table), 2):
        k = table[mask]
        formula += (Q - 1) ** (mask.bit_count() - 1) * (gcd(gamma * k, Q - 1) - gcd(k, Q - 1))
    direct = count_subset(scaled_weights(w, gamma), q) - count_subset(w, q)
    if direct != formula:
        raise ConsistencyError(f"scaling difference mismatch: direct {direct}, formula {formula}")
    return formula
