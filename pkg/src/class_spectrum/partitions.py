"""Integer partitions represented as cycle types, with permutation parity."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping

from .errors import DomainError

EVEN = "even"
ODD = "odd"


@dataclass(frozen=True)
class CycleType:
    """A multiset of cycle lengths, stored as (length, multiplicity) pairs.

    The canonical form keeps pairs sorted by decreasing length with positive
    multiplicities, so two cycle types are equal exactly when they are equal
    as multisets. Lengths of 1 are legal and denote explicit fixed points.
    """

    parts: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        prev = None
        for length, mult in self.parts:
            if length < 1 or mult < 1:
                raise DomainError(f"invalid cycle type entry ({length}, {mult})")
            if prev is not None and length >= prev:
                raise DomainError("cycle type parts must be strictly decreasing by length")
            prev = length

    @classmethod
    def from_parts(cls, lengths: Iterable[int]) -> "CycleType":
        counts: dict[int, int] = {}
        for k in lengths:
            counts[k] = counts.get(k, 0) + 1
        return cls.from_multiplicities(counts)

    @classmethod
    def from_multiplicities(cls, mults: Mapping[int, int]) -> "CycleType":
        return cls(tuple(sorted(((k, m) for k, m in mults.items() if m), reverse=True)))

    @property
    def support(self) -> int:
        """Number of points covered, counting fixed points listed explicitly."""
        return sum(k * m for k, m in self.parts)

    @property
    def cycle_count(self) -> int:
        return sum(m for _, m in self.parts)

    def multiplicity(self, length: int) -> int:
        for k, m in self.parts:
            if k == length:
                return m
        return 0

    def part_list(self) -> tuple[int, ...]:
        """Cycle lengths in decreasing order, repeated per multiplicity."""
        out: list[int] = []
        for k, m in self.parts:
            out.extend([k] * m)
        return tuple(out)

    def combine(self, other: "CycleType") -> "CycleType":
        """Cycle type of a disjoint union of supports."""
        counts = {k: m for k, m in self.parts}
        for k, m in other.parts:
            counts[k] = counts.get(k, 0) + m
        return CycleType.from_multiplicities(counts)

    def __str__(self) -> str:
        return "+".join(str(k) for k in self.part_list()) or "e"


EMPTY = CycleType()


def partitions(m: int) -> Iterator[CycleType]:
    """Yield every partition of m exactly once, largest part first.

    Order is reverse lexicographic on the decreasing part lists, starting
    at (m) and ending at (1, 1, ..., 1).
    """
    if m < 0:
        raise DomainError("partitions() needs m >= 0")
    return _partitions(m)


def _partitions(m: int) -> Iterator[CycleType]:
    if m == 0:
        yield EMPTY
        return
    r = (m,)
    yield _from_desc(r)
    while True:
        i = len(r) - 1
        while i > -1 and r[i] == 1:
            i -= 1
        if i == -1:
            return
        s = len(r) - i
        r = r[:i] + (r[i] - 1,)
        while s > 0:
            r += (min(r[-1], s),)
            s -= r[-1]
        yield _from_desc(r)


def fixed_point_free_partitions(m: int) -> Iterator[CycleType]:
    """Partitions of m with every part >= 2, largest part first.

    These are the cycle types of permutations moving all m points of their
    support; there are none for m = 1.
    """
    if m < 0:
        raise DomainError("fixed_point_free_partitions() needs m >= 0")
    return _fixed_point_free(m)


def _fixed_point_free(m: int) -> Iterator[CycleType]:
    if m == 0:
        yield EMPTY
        return
    yield from (_from_desc(t) for t in _parts_min2(m, m))


def _parts_min2(m: int, max_part: int) -> Iterator[tuple[int, ...]]:
    for k in range(min(m, max_part), 1, -1):
        rem = m - k
        if rem == 0:
            yield (k,)
        elif rem >= 2:
            for rest in _parts_min2(rem, k):
                yield (k,) + rest


def _from_desc(desc: tuple[int, ...]) -> CycleType:
    # desc is decreasing, so equal parts are adjacent
    pairs: list[tuple[int, int]] = []
    for k in desc:
        if pairs and pairs[-1][0] == k:
            pairs[-1] = (k, pairs[-1][1] + 1)
        else:
            pairs.append((k, 1))
    return CycleType(tuple(pairs))


def parity(ct: CycleType) -> str:
    """Sign of a permutation with this cycle type: EVEN or ODD.

    A k-cycle is a product of k - 1 transpositions, so only even-length
    cycles contribute.
    """
    return EVEN if is_even(ct) else ODD


def is_even(ct: CycleType) -> bool:
    return sum(m for k, m in ct.parts if k % 2 == 0) % 2 == 0
