import itertools

import pytest

from wpcount import counting, oracle
from wpcount.errors import FieldTooLarge
from wpcount.finite_field import make_field
from wpcount.weighted_space import WeightVector, support_gcd


def naive_orbits(w, q):
    """Explicit orbits as frozensets, built with field multiplication only."""
    p, a = counting.PrimePower.from_q(q).p, counting.PrimePower.from_q(q).alpha
    F = make_field(p, a)
    els = [F.element(i) for i in range(q)]
    units = els[1:]
    seen, orbits = set(), []
    for x in itertools.product(range(q), repeat=len(w)):
        if not any(x) or x in seen:
            continue
        orbit = set()
        for lam in units:
            y = tuple(F.index(F.mul(F.pow(lam, wi), els[xi])) for wi, xi in zip(w, x))
            orbit.add(y)
        seen |= orbit
        orbits.append(frozenset(orbit))
    return orbits


@pytest.mark.parametrize("w,q", [((1, 2), 3), ((1, 2, 3), 4), ((2, 4), 5), ((1, 2, 3, 5), 3), ((1, 3), 9)])
def test_orbits_match_naive(w, q):
    orbits = naive_orbits(w, q)
    s = oracle.orbit_count(w, q)
    assert s.total_orbits == len(orbits)
    wv = WeightVector(w)
    sing = sum(1 for o in orbits
               if support_gcd(wv, sum(1 << i for i, c in enumerate(next(iter(o))) if c)) > wv.d)
    assert s.singular_orbits == sing
    for o in orbits:
        # |orbit| * |stabilizer| = q - 1
        assert (q - 1) % len(o) == 0


@pytest.mark.parametrize("w,q,expected", [((1, 2), 3, (5, 2, 3)), ((1, 2, 3, 5), 3, (41, 4, 37)), ((1, 1), 4, (5, 0, 5))])
def test_orbit_count_examples(w, q, expected):
    s = oracle.orbit_count(w, q)
    assert (s.total_orbits, s.singular_orbits, s.smooth_orbits) == expected
    assert s.tuples_enumerated == q ** len(w) - 1


def test_fixed_point_audit_examples():
    audit = oracle.fixed_point_audit((1, 2), 3)
    assert audit == {1: 8, 2: 2}
    F = make_field(5)
    audit = oracle.fixed_point_audit((1, 1), 5)
    assert audit[1] == 24 and all(v == 0 for k, v in audit.items() if k != 1)
    assert sum(audit.values()) // 4 == oracle.orbit_count((1, 1), 5).total_orbits
    assert F.q == 5


def test_limit():
    with pytest.raises(FieldTooLarge):
        oracle.orbit_count((1, 2, 3), 5, limit=100)


def test_env_limit(monkeypatch):
    monkeypatch.setenv("WPS_ENUM_LIMIT", "10")
    with pytest.raises(FieldTooLarge):
        oracle.orbit_count((1, 2), 4)


def test_sweep_sample_against_formulas():
    for w in [(1, 1, 2), (2, 3, 4), (6, 4, 2, 3), (5, 5)]:
        for q in (2, 3, 4, 5, 7, 8, 9):
            s = oracle.orbit_count(w, q)
            r = counting.count_strata(w, q)
            assert (s.total_orbits, s.singular_orbits, s.smooth_orbits) == (r.total, r.singular, r.smooth)
