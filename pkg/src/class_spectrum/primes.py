"""Prime sieving and counting, the half-interval prime set, and bound diagnostics.

The sieve is segmented (fixed 2^20-entry windows) and bit-packed, so
limits up to 10^8 stay within ordinary memory. Every verification-relevant
comparison elsewhere in the package uses exact integers; the Chebyshev-type
constants handled here are floating-point diagnostics only.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError

SEGMENT_SIZE = 1 << 20

# diagnostic constants: claimed pi(x) envelope 0.921 x/ln x < pi(x) < 1.106 x/ln x
CHEBYSHEV_LOWER = 0.921
CHEBYSHEV_UPPER = 1.106
# prime gap exponent 0.525 = 21/40, which makes the gap test exact in integers
GAP_EXPONENT_NUM = 21
GAP_EXPONENT_DEN = 40
REL_MARGIN = 1e-9


class PrimalityTable:
    """Bit-packed exact primality for every integer in [0, limit]."""

    __slots__ = ("limit", "_bits")

    def __init__(self, limit: int, bits: bytearray):
        self.limit = limit
        self._bits = bits

    def is_prime(self, k: int) -> bool:
        if k < 0 or k > self.limit:
            raise DomainError(f"{k} outside sieve range [0, {self.limit}]")
        return bool(self._bits[k >> 3] & (1 << (k & 7)))

    def count(self, x: int) -> int:
        """pi(x): number of primes <= x."""
        if x < 0:
            return 0
        if x > self.limit:
            raise DomainError(f"{x} outside sieve range [0, {self.limit}]")
        full, rem = divmod(x + 1, 8)
        total = int.from_bytes(bytes(self._bits[:full]), "little").bit_count()
        if rem:
            total += (self._bits[full] & ((1 << rem) - 1)).bit_count()
        return total

    def primes_in(self, lo: int, hi: int) -> list[int]:
        """All primes in [lo, hi], ascending."""
        lo = max(lo, 2)
        if hi > self.limit:
            raise DomainError(f"{hi} outside sieve range [0, {self.limit}]")
        return [k for k in range(lo, hi + 1) if self._bits[k >> 3] & (1 << (k & 7))]

    def prev_prime(self, x: int) -> int | None:
        """Largest prime <= x, or None when x < 2."""
        if x > self.limit:
            raise DomainError(f"{x} outside sieve range [0, {self.limit}]")
        k = x
        while k >= 2:
            if self._bits[k >> 3] & (1 << (k & 7)):
                return k
            k -= 1
        return None


def _small_primes(limit: int) -> list[int]:
    if limit < 2:
        return []
    flags = bytearray([1]) * (limit + 1)
    flags[0:2] = b"\x00\x00"
    for p in range(2, math.isqrt(limit) + 1):
        if flags[p]:
            start = p * p
            flags[start :: p] = b"\x00" * ((limit - start) // p + 1)
    return [k for k, f in enumerate(flags) if f]


def sieve(limit: int) -> PrimalityTable:
    """Exact primality table for [0, limit], built in 2^20-entry segments."""
    if limit < 0:
        raise DomainError("sieve() needs limit >= 0")
    bits = bytearray(limit // 8 + 1)
    base = _small_primes(math.isqrt(limit))
    for seg_lo in range(0, limit + 1, SEGMENT_SIZE):
        seg_hi = min(seg_lo + SEGMENT_SIZE - 1, limit)
        window = bytearray([1]) * (seg_hi - seg_lo + 1)
        if seg_lo == 0:
            window[0 : min(2, len(window))] = b"\x00\x00"[: min(2, len(window))]
        for p in base:
            start = max(p * p, ((seg_lo + p - 1) // p) * p)
            if start > seg_hi:
                continue
            window[start - seg_lo :: p] = b"\x00" * ((seg_hi - start) // p + 1)
        j = window.find(1)
        while j != -1:
            k = seg_lo + j
            bits[k >> 3] |= 1 << (k & 7)
            j = window.find(1, j + 1)
    return PrimalityTable(limit, bits)


_shared: PrimalityTable | None = None


def shared_table(limit: int) -> PrimalityTable:
    """Module-wide table covering at least [0, limit]; grown on demand.

    Built once and reused (also inherited read-only by forked workers).
    """
    global _shared
    if _shared is None or _shared.limit < limit:
        _shared = sieve(max(limit, 1 << 16))
    return _shared


@dataclass(frozen=True)
class OmegaData:
    """Primes t with n/2 < t <= n, and p = max of that set."""

    n: int
    omega: tuple[int, ...]
    p: int
    count: int


def omega_set(n: int, table: PrimalityTable | None = None) -> OmegaData:
    """The half-interval prime set for degree n (n >= 3).

    The lower bound is strict: for even n the prime n/2 is excluded; t = n
    is included whenever n is prime.
    """
    if n < 3:
        raise DomainError("omega_set() needs n >= 3")
    if table is None or table.limit < n:
        table = shared_table(n)
    primes = tuple(table.primes_in(n // 2 + 1, n))
    if not primes:
        raise DomainError(f"no prime in ({n}/2, {n}]; sieve inconsistent")
    return OmegaData(n=n, omega=primes, p=primes[-1], count=len(primes))


def factorial_ratio(n: int, p: int) -> int:
    """n!/p! as the exact product (p+1) * (p+2) * ... * n; 1 when p = n."""
    if p > n:
        raise DomainError(f"factorial_ratio needs p <= n, got p={p}, n={n}")
    if p < 0 or n < 0:
        raise DomainError("factorial_ratio needs naturals")
    return math.prod(range(p + 1, n + 1))


@dataclass(frozen=True)
class BoundReport:
    """Diagnostic comparison of exact pi(x) against the claimed envelope.

    The envelope sides are floats (1 ulp caveat); the hold flags use a
    relative safety margin of 1e-9, so a violation is only reported when
    it clearly exceeds rounding noise. The gap flag tests
    x - prev_prime(x) < x^0.525 exactly, via 40th and 21st powers.
    """

    x: int
    pi_exact: int
    lower: float
    upper: float
    lower_holds: bool
    upper_holds: bool
    p: int
    gap: int
    gap_bound_holds: bool


def bound_report(x: int, table: PrimalityTable | None = None) -> BoundReport:
    """Evaluate the pi(x) envelope and the prime-gap bound at x (x > 10)."""
    if x <= 10:
        raise DomainError("bound_report() needs x > 10")
    if table is None or table.limit < x:
        table = shared_table(x)
    pi_exact = table.count(x)
    lower = CHEBYSHEV_LOWER * x / math.log(x)
    upper = CHEBYSHEV_UPPER * x / math.log(x)
    p = table.prev_prime(x)
    assert p is not None
    gap = x - p
    return BoundReport(
        x=x,
        pi_exact=pi_exact,
        lower=lower,
        upper=upper,
        lower_holds=pi_exact > lower - REL_MARGIN * lower,
        upper_holds=pi_exact < upper + REL_MARGIN * upper,
        p=p,
        gap=gap,
        gap_bound_holds=gap**GAP_EXPONENT_DEN < x**GAP_EXPONENT_NUM,
    )


@dataclass(frozen=True)
class SweepResult:
    """Outcome of evaluating the envelope on every x in (lo, hi]."""

    lo: int
    hi: int
    checked: int
    lower_violations: tuple[int, ...]
    upper_violations: tuple[int, ...]
    gap_violations: tuple[int, ...]


def chebyshev_sweep(lo: int = 10, hi: int = 100_000, table: PrimalityTable | None = None) -> SweepResult:
    """Evaluate the envelope and gap bound for every integer x in (lo, hi]."""
    if lo < 10:
        raise DomainError("sweep domain starts above 10")
    if table is None or table.limit < hi:
        table = shared_table(hi)
    lower_bad: list[int] = []
    upper_bad: list[int] = []
    gap_bad: list[int] = []
    pi = table.count(lo)
    p = table.prev_prime(lo) or 0
    for x in range(lo + 1, hi + 1):
        if table.is_prime(x):
            pi += 1
            p = x
        ratio = x / math.log(x)
        lower = CHEBYSHEV_LOWER * ratio
        upper = CHEBYSHEV_UPPER * ratio
        if not pi > lower - REL_MARGIN * lower:
            lower_bad.append(x)
        if not pi < upper + REL_MARGIN * upper:
            upper_bad.append(x)
        if not (x - p) ** GAP_EXPONENT_DEN < x**GAP_EXPONENT_NUM:
            gap_bad.append(x)
    return SweepResult(
        lo=lo,
        hi=hi,
        checked=hi - lo,
        lower_violations=tuple(lower_bad),
        upper_violations=tuple(upper_bad),
        gap_violations=tuple(gap_bad),
    )
