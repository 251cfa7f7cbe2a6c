"""Explicit models of F_{p^a} in a polynomial basis.

Elements are coefficient vectors ``(c_0, ..., c_{a-1})`` modulo a monic
irreducible of degree ``a``.  Each element also has an integer index
``sum(c_i * p**i)``, which is the deterministic enumeration order used for I/O
and by the enumeration kernels: index 0 is zero and index 1 is one.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import product

import numpy as np

from . import arith
from .errors import FieldTooLarge, InputError, NotPrime, ZeroElement

DEFAULT_FIELD_LIMIT = 2**20


# -- polynomials over F_p, coefficient lists low degree first ----------------

def _trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def _polymod(a, f, p):
    a = _trim(a)
    df = len(f) - 1
    inv = pow(f[-1], -1, p)
    while len(a) - 1 >= df:
        c = a[-1] * inv % p
        shift = len(a) - 1 - df
        for i, fc in enumerate(f):
            a[shift + i] = (a[shift + i] - c * fc) % p
        a = _trim(a)
    return a


def _polymul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return out


def _polymulmod(a, b, f, p):
    return _polymod(_polymul(a, b, p), f, p)


def _polypowmod(a, k, f, p):
    result = [1]
    base = _polymod(a, f, p)
    while k:
        if k & 1:
            result = _polymulmod(result, base, f, p)
        base = _polymulmod(base, base, f, p)
        k >>= 1
    return result


def _polysub(a, b, p):
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    b = list(b) + [0] * (n - len(b))
    return _trim((x - y) % p for x, y in zip(a, b))


def _polygcd(a, b, p):
    a, b = _trim(a), _trim(b)
    while b:
        a, b = b, _polymod(a, b, p)
    return a


def is_irreducible(f, p: int) -> bool:
    """Rabin's test for a monic polynomial ``f`` over F_p."""
    f = _trim(f)
    a = len(f) - 1
    if a < 1:
        return False
    x = [0, 1]

    def frob_power(k):
        # x^(p^k) mod f
        y = _polymod(x, f, p)
        for _ in range(k):
            y = _polypowmod(y, p, f, p)
        return y

    if _polymod(_polysub(frob_power(a), x, p), f, p):
        return False
    for ell, _ in arith.factorize(a) if a > 1 else ():
        g = _polygcd(f, _polymod(_polysub(frob_power(a // ell), x, p), f, p), p)
        if len(g) > 1:
            return False
    return True


# -- field descriptor --------------------------------------------------------

@dataclass(frozen=True)
class FieldElement:
    coeffs: tuple[int, ...]

    def is_zero(self) -> bool:
        return not any(self.coeffs)


@dataclass(frozen=True)
class FieldDescriptor:
    p: int
    a: int
    modulus: tuple[int, ...]
    generator_index: int

    @property
    def q(self) -> int:
        return self.p**self.a

    # index <-> element
    def element(self, index: int) -> FieldElement:
        if not 0 <= index < self.q:
            raise InputError(f"element index {index} outside F_{self.q}")
        coeffs = []
        for _ in range(self.a):
            index, c = divmod(index, self.p)
            coeffs.append(c)
        return FieldElement(tuple(coeffs))

    def index(self, x: FieldElement) -> int:
        out = 0
        for c in reversed(x.coeffs):
            out = out * self.p + c
        return out

    def from_int(self, n: int) -> FieldElement:
        """Image of an integer in the prime subfield."""
        return FieldElement((n % self.p,) + (0,) * (self.a - 1))

    @property
    def zero(self) -> FieldElement:
        return FieldElement((0,) * self.a)

    @property
    def one(self) -> FieldElement:
        return self.from_int(1)

    @property
    def generator(self) -> FieldElement:
        return self.element(self.generator_index)

    def _wrap(self, poly) -> FieldElement:
        poly = list(poly) + [0] * (self.a - len(poly))
        return FieldElement(tuple(poly[: self.a]))

    def add(self, x: FieldElement, y: FieldElement) -> FieldElement:
        return FieldElement(tuple((u + v) % self.p for u, v in zip(x.coeffs, y.coeffs)))

    def neg(self, x: FieldElement) -> FieldElement:
        return FieldElement(tuple(-u % self.p for u in x.coeffs))

    def mul(self, x: FieldElement, y: FieldElement) -> FieldElement:
        return self._wrap(_polymulmod(_trim(x.coeffs), _trim(y.coeffs), self.modulus, self.p))

    def pow(self, x: FieldElement, k: int) -> FieldElement:
        return element_pow(self, x, k)

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "a": self.a,
            "modulus": list(self.modulus),
            "generator_index": self.generator_index,
        }

    @cached_property
    def log_tables(self) -> tuple[np.ndarray, np.ndarray]:
        """``(exp, log)`` index tables for the chosen generator.

        ``exp[k]`` is the index of g**k for 0 <= k < q-1; ``log[i]`` is the
        discrete log of the element with index ``i`` and ``log[0] == -1``.
        """
        q = self.q
        exp = np.empty(q - 1, dtype=np.int64)
        log = np.full(q, -1, dtype=np.int64)
        g = self.generator
        x = self.one
        for k in range(q - 1):
            i = self.index(x)
            exp[k] = i
            log[i] = k
            x = self.mul(x, g)
        if (log[1:] < 0).any():
            raise ArithmeticError("generator does not have full order")
        return exp, log


def element_pow(F: FieldDescriptor, x: FieldElement, k: int) -> FieldElement:
    """``x**k`` by square-and-multiply; ``x**0`` is one even for ``x == 0``."""
    if k < 0:
        raise InputError("negative exponents are not supported")
    return F._wrap(_polypowmod(_trim(x.coeffs), k, F.modulus, F.p))


def element_order(F: FieldDescriptor, x: FieldElement) -> int:
    if x.is_zero():
        raise ZeroElement("zero has no multiplicative order")
    order = F.q - 1
    for ell, _ in arith.factorize(order) if order > 1 else ():
        while order % ell == 0 and element_pow(F, x, order // ell) == F.one:
            order //= ell
    return order


def field_elements(F: FieldDescriptor):
    """All q elements in index order."""
    for i in range(F.q):
        yield F.element(i)


@lru_cache(maxsize=64)
def make_field(p: int, a: int = 1, limit: int = DEFAULT_FIELD_LIMIT) -> FieldDescriptor:
    if not arith.is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if a < 1:
        raise InputError("extension degree must be >= 1")
    if p**a > limit:
        raise FieldTooLarge(f"F_{p}^{a} has {p**a} elements, limit is {limit}")

    # candidates (c_0, ..., c_{a-1}) in lexicographic order, c_0 compared first
    for low in product(range(p), repeat=a):
        f = list(low) + [1]
        if is_irreducible(f, p):
            modulus = tuple(f)
            break
    else:  # pragma: no cover - an irreducible of every degree exists
        raise ArithmeticError("no irreducible polynomial found")

    F = FieldDescriptor(p, a, modulus, 0)
    for i in range(1, F.q):
        if element_order(F, F.element(i)) == F.q - 1:
            return FieldDescriptor(p, a, modulus, i)
    raise ArithmeticError("no generator found")  # pragma: no cover
