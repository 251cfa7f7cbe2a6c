"""Exact elementary number theory on Python integers."""

from __future__ import annotations

from functools import lru_cache, reduce
from math import comb, gcd as _gcd

from .errors import InputError, NotPrimePower, OrderUndefined


def gcd(a: int, b: int) -> int:
    """Greatest common divisor of two naturals, with ``gcd(0, 0) == 0``."""
    if a < 0 or b < 0:
        raise InputError("gcd expects nonnegative integers")
    return _gcd(a, b)


def gcd_all(values) -> int:
    return reduce(_gcd, values, 0)


def lcm_all(values) -> int:
    out = 1
    for v in values:
        out = out * v // _gcd(out, v)
    return out


@lru_cache(maxsize=4096)
def factorize(n: int) -> tuple[tuple[int, int], ...]:
    """Prime factorization by trial division as ``((prime, exponent), ...)``."""
    if n < 1:
        raise InputError(f"cannot factor {n}")
    out = []
    for p in (2, 3):
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
    f = 5
    while f * f <= n:
        for p in (f, f + 2):
            if n % p == 0:
                e = 0
                while n % p == 0:
                    n //= p
                    e += 1
                out.append((p, e))
        f += 6
    if n > 1:
        out.append((n, 1))
    return tuple(out)


def is_prime(n: int) -> bool:
    return n >= 2 and factorize(n) == ((n, 1),)


def euler_phi(n: int) -> int:
    if n < 1:
        raise InputError("euler_phi needs n >= 1")
    out = n
    for p, _ in factorize(n):
        out = out // p * (p - 1)
    return out


def divisors(n: int) -> list[int]:
    """All positive divisors of ``n`` in increasing order."""
    if n < 1:
        raise InputError("divisors needs n >= 1")
    divs = [1]
    for p, e in factorize(n):
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def multiplicative_order(q: int, d: int) -> int:
    """Least ``r >= 1`` with ``q**r == 1 (mod d)``.

    Raises OrderUndefined when ``gcd(q, d) > 1``: such a ``d`` never divides
    ``q**r - 1`` and callers are expected to skip it.
    """
    if d < 1:
        raise InputError("modulus must be >= 1")
    if d == 1:
        return 1
    if _gcd(q, d) != 1:
        raise OrderUndefined(f"ord_{d}({q}) is undefined: gcd({q}, {d}) > 1")
    order = euler_phi(d)
    for p, _ in factorize(order):
        while order % p == 0 and pow(q, order // p, d) == 1:
            order //= p
    return order


def coprime_part(n: int, q: int) -> int:
    """Largest divisor of ``n`` that is coprime to ``q``."""
    if n < 1:
        raise InputError("coprime_part needs n >= 1")
    g = _gcd(n, q)
    while g > 1:
        n //= g
        g = _gcd(n, g)
    return n


def binomial(n: int, k: int) -> int:
    if k < 0 or n < 0:
        return 0
    return comb(n, k)


def prime_power_decompose(q: int) -> tuple[int, int]:
    """Return ``(p, alpha)`` with ``q == p**alpha``, or raise NotPrimePower."""
    if q < 2:
        raise NotPrimePower(f"{q} is not a prime power")
    fac = factorize(q)
    if len(fac) != 1:
        raise NotPrimePower(f"{q} is not a prime power")
    return fac[0]
