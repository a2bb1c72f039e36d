"""Exact conjugacy-class-size arithmetic for Sym_n and Alt_n.

Everything here is integer-exact: class sizes are computed from the
centralizer-order formula on cycle types, alternating-group splitting is
decided combinatorially, and the class-size families (full spectrum,
fixed-point-free classes, one-long-cycle classes, small-support classes)
are produced as deduplicated ``Spectrum`` values.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Iterable, Iterator

from .errors import DomainError, EnumerationCapError
from .partitions import CycleType, fixed_point_free_partitions, is_even, partitions

DEFAULT_SPECTRUM_CAP = 45


class GroupKind(Enum):
    """Symmetric or alternating group of a given degree."""

    SYM = "sym"
    ALT = "alt"

    @classmethod
    def parse(cls, text: str) -> "GroupKind":
        try:
            return cls(text.strip().lower())
        except ValueError:
            raise DomainError(f"unknown group kind {text!r} (expected 'sym' or 'alt')") from None

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class Spectrum:
    """A deduplicated, strictly increasing set of class sizes of V_n."""

    values: tuple[int, ...]
    kind: GroupKind
    n: int
    label: str

    @classmethod
    def build(cls, values: Iterable[int], kind: GroupKind, n: int, label: str) -> "Spectrum":
        vals = tuple(sorted(set(values)))
        order = group_order(kind, n)
        for v in vals:
            # Lagrange: every class size divides the group order
            assert v >= 1 and order % v == 0, f"{v} is not a class size of {kind}_{n}"
        return cls(vals, kind, n, label)

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self) -> Iterator[int]:
        return iter(self.values)


def group_order(kind: GroupKind, n: int) -> int:
    """n! for Sym_n; n!/2 for Alt_n with n >= 2; Alt_0 and Alt_1 are trivial."""
    if n < 0:
        raise DomainError("group degree must be >= 0")
    if kind is GroupKind.SYM:
        return math.factorial(n)
    return math.factorial(n) // 2 if n >= 2 else 1


def _core(ct: CycleType) -> tuple[int, int]:
    """(moved points, centralizer factor) over the parts of length >= 2.

    The factor is prod(k^m * m!) restricted to k >= 2; length-1 parts are
    fixed points and belong with the padding.
    """
    c = 0
    z = 1
    for k, m in ct.parts:
        if k >= 2:
            c += k * m
            z *= k**m * math.factorial(m)
    return c, z


def centralizer_order_sym(ct: CycleType, n: int) -> int:
    """Order of the Sym_n centralizer of a permutation with cycle type ct.

    ct is padded with fixed points up to degree n; explicit length-1 parts
    in ct are merged with that padding, so the fixed-point factor is
    (n - moved)! where moved counts only parts of length >= 2.
    """
    if ct.support > n:
        raise DomainError(f"cycle type covers {ct.support} points, exceeding degree {n}")
    c, z = _core(ct)
    return math.factorial(n - c) * z


def _sym_class_size(ct: CycleType, n: int) -> int:
    # n! / ((n-c)! * z) computed as C(n, c) * (c!/z) to keep intermediates small
    c, z = _core(ct)
    return math.comb(n, c) * (math.factorial(c) // z)


def _splits_in_alt(ct: CycleType, n: int) -> bool:
    """True when the Sym_n class of ct falls apart into two Alt_n classes.

    Criterion: the padded cycle type has all parts odd and pairwise
    distinct, i.e. at most one fixed point and a squarefree odd core.
    """
    if n < 2:
        return False
    c = 0
    for k, m in ct.parts:
        if k >= 2:
            if k % 2 == 0 or m > 1:
                return False
            c += k * m
    return n - c <= 1


def class_size(kind: GroupKind, n: int, ct: CycleType) -> list[int]:
    """Class size(s) in V_n of elements with cycle type ct padded by fixed points.

    For Sym_n this is a single value n!/z. For Alt_n the type must be even;
    the Sym class splits into two equal Alt classes exactly when the padded
    type has all parts odd and pairwise distinct, giving two entries.
    """
    if ct.support > n:
        raise DomainError(f"cycle type covers {ct.support} points, exceeding degree {n}")
    s = _sym_class_size(ct, n)
    if kind is GroupKind.SYM or n < 2:
        return [s]
    if not is_even(ct):
        raise DomainError(f"cycle type {ct} is odd, not in Alt_{n}")
    if _splits_in_alt(ct, n):
        return [s // 2, s // 2]
    return [s]


def spectrum(kind: GroupKind, n: int, cap: int | None = DEFAULT_SPECTRUM_CAP) -> Spectrum:
    """The full class-size set N(V_n).

    Enumerates one cycle type per partition of n, so the cost grows with
    the partition number; degrees above ``cap`` are refused unless the
    caller raises or disables the cap explicitly.
    """
    if n < 1:
        raise DomainError("spectrum() needs n >= 1")
    if cap is not None and n > cap:
        raise EnumerationCapError(
            f"full spectrum at n={n} enumerates p({n}) cycle types; "
            f"pass cap={n} (or cap=None) to override the default cap of {cap}"
        )
    values: list[int] = []
    for ct in partitions(n):
        if kind is GroupKind.ALT and n >= 2 and not is_even(ct):
            continue
        values.extend(class_size(kind, n, ct))
    return Spectrum.build(values, kind, n, "full")


@lru_cache(maxsize=None)
def _fpf_profile(m: int) -> tuple[tuple[CycleType, int, bool, bool], ...]:
    """Per fixed-point-free type of support m: (type, z factor, even, odd-distinct)."""
    out = []
    for ct in fixed_point_free_partitions(m):
        _, z = _core(ct)
        aod = all(k % 2 == 1 and mult == 1 for k, mult in ct.parts)
        out.append((ct, z, is_even(ct), aod))
    return tuple(out)


def moved_class_sizes(kind: GroupKind, i: int) -> Spectrum:
    """Class sizes in V_i of elements that move all i points.

    Empty for i = 1; for Alt only even types are admissible and splitting
    applies (a fixed-point-free type has at most zero fixed points, so the
    odd-distinct criterion can fire).
    """
    if i < 0:
        raise DomainError("moved_class_sizes() needs i >= 0")
    fact = math.factorial(i)
    values: list[int] = []
    for ct, z, even, aod in _fpf_profile(i):
        if kind is GroupKind.ALT and i >= 2:
            if not even:
                continue
            s = fact // z
            values.append(s // 2 if aod else s)
        else:
            values.append(fact // z)
    return Spectrum.build(values, kind, i, "moved")


def phi_set(kind: GroupKind, n: int, t: int) -> Spectrum:
    """Class sizes of elements made of one t-cycle plus anything on the rest.

    Requires n/2 < t <= n, so the t-cycle is unique in the type. For Alt
    the parity and splitting rules are applied to the combined type.
    """
    if not (2 * t > n and t <= n):
        raise DomainError(f"phi_set needs n/2 < t <= n, got n={n}, t={t}")
    t_cycle = CycleType(((t, 1),))
    values: list[int] = []
    for rest in partitions(n - t):
        full = rest.combine(t_cycle)
        if kind is GroupKind.ALT and n >= 2 and not is_even(full):
            continue
        values.extend(class_size(kind, n, full))
    return Spectrum.build(values, kind, n, f"phi(t={t})")


def psi_members(
    kind: GroupKind, n: int, t: int, support_cap: int | None = None
) -> Iterator[tuple[int, CycleType]]:
    """(class size, fixed-point-free cycle type) pairs behind psi_set.

    Supports m run over 2 <= m <= n - t (optionally truncated by
    support_cap). Split Alt classes yield their common half size once per
    class, with the same type annotation.
    """
    if t < 0 or t > n:
        raise DomainError(f"psi needs 0 <= t <= n, got n={n}, t={t}")
    hi = n - t
    if support_cap is not None:
        hi = min(hi, support_cap)
    for m in range(2, hi + 1):
        choose = math.comb(n, m)
        fact = math.factorial(m)
        for ct, z, even, aod in _fpf_profile(m):
            if kind is GroupKind.ALT and not even:
                continue
            s = choose * (fact // z)
            if kind is GroupKind.ALT and n >= 2 and n - m <= 1 and aod:
                half = s // 2
                yield half, ct
                yield half, ct
            else:
                yield s, ct


def psi_set(kind: GroupKind, n: int, t: int, support_cap: int | None = None) -> Spectrum:
    """Class sizes in V_n of elements moving between 2 and n - t points.

    Empty when n - t < 2. Computed through the closed form
    C(n, m) * |class in Sym_m| rather than by dividing group orders.
    """
    values = (v for v, _ in psi_members(kind, n, t, support_cap))
    return Spectrum.build(values, kind, n, f"psi(t={t})")
