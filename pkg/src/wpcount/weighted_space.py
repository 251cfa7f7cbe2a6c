"""Weight vectors, subset gcds and support classification."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterator, NamedTuple

from .arith import gcd_all
from .errors import DimensionTooLarge, EmptySupport, InputError

MAX_SUBSET_DIM = 24


@dataclass(frozen=True)
class WeightVector:
    weights: tuple[int, ...]

    def __post_init__(self):
        w = tuple(int(x) for x in self.weights)
        if len(w) < 2:
            raise InputError("a weight vector needs at least two entries")
        if any(x < 1 for x in w):
            raise InputError("weights must be positive integers")
        object.__setattr__(self, "weights", w)

    @classmethod
    def parse(cls, text: str) -> "WeightVector":
        """Parse ``"1,2,3,5"``."""
        try:
            return cls(tuple(int(tok) for tok in text.replace(" ", "").split(",")))
        except ValueError as exc:
            if isinstance(exc, InputError):
                raise
            raise InputError(f"cannot parse weights {text!r}") from None

    @classmethod
    def ones(cls, n: int) -> "WeightVector":
        return cls((1,) * (n + 1))

    @property
    def n(self) -> int:
        return len(self.weights) - 1

    @property
    def d(self) -> int:
        return gcd_all(self.weights)

    def __len__(self):
        return len(self.weights)

    def __iter__(self):
        return iter(self.weights)

    def __getitem__(self, i):
        return self.weights[i]

    def __str__(self):
        return ",".join(map(str, self.weights))


class SubsetGcd(NamedTuple):
    mask: int
    k: int
    size: int


def normalize(w: WeightVector) -> tuple[WeightVector, int]:
    d = w.d
    return WeightVector(tuple(x // d for x in w)), d


def subset_gcd_table(w: WeightVector) -> list[int]:
    """``k_S`` indexed by bitmask; entry 0 (the empty set) is 0."""
    if w.n > MAX_SUBSET_DIM:
        raise DimensionTooLarge(f"subset enumeration needs n <= {MAX_SUBSET_DIM}, got {w.n}")
    size = 1 << len(w)
    table = [0] * size
    for mask in range(1, size):
        low = (mask & -mask).bit_length() - 1
        table[mask] = gcd(table[mask & (mask - 1)], w[low])
    return table


def subset_gcds(w: WeightVector) -> Iterator[SubsetGcd]:
    table = subset_gcd_table(w)
    for mask in range(1, len(table)):
        yield SubsetGcd(mask, table[mask], mask.bit_count())


def support_gcd(w: WeightVector, nonzero_mask: int) -> int:
    if nonzero_mask <= 0:
        raise EmptySupport("support must be nonempty")
    if nonzero_mask >> len(w):
        raise InputError("support mask has bits beyond the last coordinate")
    return gcd_all(w[i] for i in range(len(w)) if nonzero_mask >> i & 1)


def is_singular_support(w: WeightVector, nonzero_mask: int) -> bool:
    return support_gcd(w, nonzero_mask) > w.d
