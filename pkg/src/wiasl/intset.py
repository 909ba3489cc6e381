"""Finite sets of small non-negative integers with sumset arithmetic.

Sets are immutable bit masks (bit i set iff i is an element), so the
exact-search inner loops can shift and OR plain ints.  Every element must
stay below a configurable universe bound; a sumset that would escape the
bound raises UniverseOverflowError instead of silently growing.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Iterator

DEFAULT_UNIVERSE_BOUND = 4096


class UniverseOverflowError(ValueError):
    """An element would reach or exceed the universe bound."""


class IntSet:
    """Immutable ascending set of non-negative integers backed by an int mask.

    Treat instances as values: equality and hashing go through the mask,
    iteration is always in ascending element order.
    """

    __slots__ = ("bits",)

    def __init__(
        self,
        values: Iterable[int] = (),
        *,
        universe_bound: int = DEFAULT_UNIVERSE_BOUND,
    ) -> None:
        bits = 0
        for v in values:
            if v < 0:
                raise ValueError(f"elements must be non-negative, got {v}")
            if v >= universe_bound:
                raise UniverseOverflowError(
                    f"element {v} outside universe [0, {universe_bound})"
                )
            bits |= 1 << v
        self.bits = bits

    @classmethod
    def from_bits(cls, bits: int) -> "IntSet":
        """Wrap a raw mask produced by solver internals (no validation)."""
        if bits < 0:
            raise ValueError("mask must be non-negative")
        s = cls.__new__(cls)
        s.bits = bits
        return s

    def __iter__(self) -> Iterator[int]:
        bits = self.bits
        while bits:
            low = bits & -bits
            yield low.bit_length() - 1
            bits ^= low

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __bool__(self) -> bool:
        return self.bits != 0

    def __contains__(self, v: int) -> bool:
        return v >= 0 and (self.bits >> v) & 1 == 1

    def __eq__(self, other: object) -> bool:
        return isinstance(other, IntSet) and self.bits == other.bits

    def __hash__(self) -> int:
        return hash(self.bits)

    def __repr__(self) -> str:
        return f"IntSet({self.to_list()})"

    @property
    def min(self) -> int:
        if not self.bits:
            raise ValueError("empty set has no minimum")
        return (self.bits & -self.bits).bit_length() - 1

    @property
    def max(self) -> int:
        if not self.bits:
            raise ValueError("empty set has no maximum")
        return self.bits.bit_length() - 1

    def to_list(self) -> list[int]:
        return list(self)

    def union(self, *others: "IntSet") -> "IntSet":
        bits = self.bits
        for o in others:
            bits |= o.bits
        return IntSet.from_bits(bits)

    def __or__(self, other: "IntSet") -> "IntSet":
        return IntSet.from_bits(self.bits | other.bits)

    def __and__(self, other: "IntSet") -> "IntSet":
        return IntSet.from_bits(self.bits & other.bits)

    def issubset(self, other: "IntSet") -> bool:
        return self.bits & ~other.bits == 0


def sumset(
    a: IntSet, b: IntSet, *, universe_bound: int = DEFAULT_UNIVERSE_BOUND
) -> IntSet:
    """Pairwise-sum set {x + y : x in a, y in b}.

    Both operands must be non-empty and the largest possible sum must stay
    below the universe bound.  Computed by shifting the larger operand's
    mask once per element of the smaller one.
    """
    if not a or not b:
        raise ValueError("sumset requires non-empty operands")
    if a.max + b.max >= universe_bound:
        raise UniverseOverflowError(
            f"sumset would reach {a.max + b.max}, universe bound is {universe_bound}"
        )
    small, big = (a, b) if len(a) <= len(b) else (b, a)
    bits = 0
    for v in small:
        bits |= big.bits << v
    return IntSet.from_bits(bits)


def subsets_of(ground: IntSet, size_min: int, size_max: int) -> Iterator[IntSet]:
    """Yield every subset of `ground` with cardinality in [size_min, size_max].

    Deterministic order: ascending cardinality, lexicographic by ascending
    element list within each cardinality.
    """
    if not 1 <= size_min <= size_max <= len(ground):
        raise ValueError(
            f"need 1 <= size_min <= size_max <= |ground|, "
            f"got {size_min}, {size_max}, |ground|={len(ground)}"
        )
    elements = ground.to_list()
    for size in range(size_min, size_max + 1):
        for combo in combinations(elements, size):
            yield IntSet(combo)
