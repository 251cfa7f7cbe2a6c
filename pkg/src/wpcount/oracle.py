"""Brute-force ground truth by enumerating the weighted F_q^* action.

Every nonzero tuple in F_q^{n+1} is visited; a tuple is an orbit's canonical
representative when no group element maps it to a lexicographically smaller
tuple (element order = field enumeration index).  Counting representatives
counts orbits without storing them.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import _kernels
from .counting import PrimePower, as_prime_power, _as_weights
from .errors import FieldTooLarge
from .finite_field import FieldDescriptor, make_field
from .weighted_space import WeightVector, support_gcd


@dataclass(frozen=True)
class OrbitSummary:
    total_orbits: int
    singular_orbits: int
    smooth_orbits: int
    tuples_enumerated: int
    q: PrimePower

    def to_json(self) -> dict:
        return {
            "q": self.q.q,
            "total": self.total_orbits,
            "singular": self.singular_orbits,
            "smooth": self.smooth_orbits,
            "tuples_enumerated": self.tuples_enumerated,
        }


def field_for(q) -> FieldDescriptor:
    q = as_prime_power(q)
    return make_field(q.p, q.alpha)


def check_limit(q: int, m: int, limit: int | None = None) -> None:
    limit = _kernels.enumeration_limit() if limit is None else limit
    if q**m > limit:
        raise FieldTooLarge(f"enumerating {q}^{m} = {q**m} tuples exceeds the limit {limit}")


def support_rep_counts(w: WeightVector, F: FieldDescriptor, allowed=None, kernels=None):
    kernels = kernels or _kernels.impl
    exp, log = F.log_tables
    return kernels.orbit_rep_support_counts(F.q, list(w), exp, log, allowed)


def orbit_count(w, q, *, limit=None, kernels=None) -> OrbitSummary:
    w, q = _as_weights(w), as_prime_power(q)
    check_limit(q.q, len(w), limit)
    F = field_for(q)
    by_mask = support_rep_counts(w, F, kernels=kernels)
    d = w.d
    singular = smooth = 0
    for mask in range(1, len(by_mask)):
        if support_gcd(w, mask) > d:
            singular += int(by_mask[mask])
        else:
            smooth += int(by_mask[mask])
    return OrbitSummary(singular + smooth, singular, smooth, q.q ** len(w) - 1, q)


def fixed_point_audit(w, q, *, allowed=None, limit=None, kernels=None) -> dict[int, int]:
    """Literal count of fixed nonzero tuples for each lambda, keyed by element index."""
    w, q = _as_weights(w), as_prime_power(q)
    check_limit(q.q, len(w), limit)
    F = field_for(q)
    kernels = kernels or _kernels.impl
    exp, log = F.log_tables
    by_log = kernels.fixed_counts(F.q, list(w), exp, log, allowed)
    return {int(exp[l]): int(by_log[l]) for l in range(F.q - 1)}


def hypersurface_orbit_count(f, q, *, limit=None, kernels=None) -> int:
    from .hypersurface import cone_mask

    q = as_prime_power(q)
    check_limit(q.q, len(f.weights), limit)
    F = field_for(q)
    allowed = cone_mask(f, F, kernels=kernels)
    return int(support_rep_counts(f.weights, F, allowed, kernels=kernels).sum())
