"""Verification pipeline: prime-count versus chain-height certificates.

Three exact computations are orchestrated here:

* the threshold inequality 2^|Omega| > n!/p! checked in big integers,
* the table of summed chain heights of fixed-point-free class-size sets,
* a per-degree case check that builds the small-support class-size family
  for the best available strategy and certifies |Omega| > h.

Every verdict comes from integer arithmetic; nothing depends on the
floating-point diagnostics in :mod:`class_spectrum.primes`.
"""

from __future__ import annotations

import multiprocessing
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

from .classes import GroupKind, moved_class_sizes, psi_members
from .divgraph import EDGES, VERTICES, longest_chain
from .errors import DomainError
from .partitions import CycleType
from .primes import PrimalityTable, factorial_ratio, shared_table

PASS = "PASS"
FAIL = "FAIL"
INDETERMINATE = "INDETERMINATE"

STRATEGY_DIRECT = "direct-psi-p"
STRATEGY_R_TRICK = "r-trick"

DEFAULT_SUPPORT_CAP = 60

# Reference upper bounds on the summed chain heights, by residual support
# m = n - t. Kept for cross-checking the computed table; no verdict uses them.
REFERENCE_CHAIN_BOUNDS = {
    2: 1,
    3: 2,
    4: 3,
    5: 5,
    6: 6,
    7: 8,
    8: 11,
    9: 14,
    10: 18,
    11: 21,
    12: 26,
    13: 30,
    18: 69,
}


class ChainBoundViolation(RuntimeError):
    """The directly computed chain height exceeded the summed per-support bound.

    That inequality is a theorem about the construction, so tripping it
    means the implementation is wrong; the run must stop rather than emit
    certificates.
    """


@dataclass(frozen=True)
class OmegaCheck:
    """Exact comparison 2^|Omega(n)| vs n!/p!, reported through bit lengths."""

    n: int
    p: int
    omega_count: int
    ratio_bits: int
    pow2_bits: int
    holds: bool


def check_omega_lemma(n: int, table: PrimalityTable | None = None) -> OmegaCheck:
    """Check 2^|Omega| > n!/p! for degree n, in exact integers.

    For prime n the ratio is the empty product 1 and the check holds
    trivially.
    """
    if n < 3:
        raise DomainError("check_omega_lemma() needs n >= 3")
    if table is None or table.limit < n:
        table = shared_table(n)
    p = table.prev_prime(n)
    assert p is not None
    count = table.count(n) - table.count(n // 2)
    ratio = factorial_ratio(n, p)
    return OmegaCheck(
        n=n,
        p=p,
        omega_count=count,
        ratio_bits=ratio.bit_length(),
        pow2_bits=count + 1,
        holds=(1 << count) > ratio,
    )


@dataclass(frozen=True)
class OmegaSweep:
    start: int
    stop: int
    checked: int
    failures: tuple[OmegaCheck, ...]


def omega_sweep(start: int, stop: int, table: PrimalityTable | None = None) -> OmegaSweep:
    """Run check_omega_lemma for every n in [start, stop]; collect failures.

    Prime counts and the running n!/p! product are maintained
    incrementally, so a sweep to 10^6 stays in linear time.
    """
    if start < 3 or stop < start:
        raise DomainError("omega_sweep() needs 3 <= start <= stop")
    if table is None or table.limit < stop:
        table = shared_table(stop)
    failures: list[OmegaCheck] = []
    pi_n = table.count(start - 1)
    half = (start - 1) // 2
    pi_half = table.count(half)
    p = table.prev_prime(start - 1) or 0
    ratio = factorial_ratio(start - 1, p) if p else 0
    for n in range(start, stop + 1):
        if table.is_prime(n):
            pi_n += 1
            p = n
            ratio = 1
        else:
            ratio = ratio * n if p else 0
        if n // 2 != half:
            half = n // 2
            if table.is_prime(half):
                pi_half += 1
        count = pi_n - pi_half
        if not (1 << count) > ratio:
            failures.append(
                OmegaCheck(
                    n=n,
                    p=p,
                    omega_count=count,
                    ratio_bits=ratio.bit_length(),
                    pow2_bits=count + 1,
                    holds=False,
                )
            )
    return OmegaSweep(start=start, stop=stop, checked=stop - start + 1, failures=tuple(failures))


@lru_cache(maxsize=None)
def _moved_heights(kind: GroupKind, i: int) -> tuple[int, int]:
    """(vertex height, edge height) of the fixed-point-free class sizes of V_i."""
    values = moved_class_sizes(kind, i).values
    h, _ = longest_chain(values)
    return h, max(h - 1, 0)


@dataclass(frozen=True)
class HzTableRow:
    """Summed chain heights for residual support m, all kind/convention combos."""

    m: int
    reference_bound: int | None
    computed: dict[tuple[GroupKind, str], int]


def hz_table(max_m: int, kinds: Sequence[GroupKind] = (GroupKind.SYM, GroupKind.ALT)) -> list[HzTableRow]:
    """Rows m = 2..max_m of sum_{i<=m} h(moved class sizes of V_i).

    Both counting conventions are reported; reference bounds are attached
    where known so mismatching combinations can be listed.
    """
    if max_m < 2:
        raise DomainError("hz_table() needs max_m >= 2")
    rows = []
    for m in range(2, max_m + 1):
        computed: dict[tuple[GroupKind, str], int] = {}
        for kind in kinds:
            hv = he = 0
            for i in range(1, m + 1):
                v, e = _moved_heights(kind, i)
                hv += v
                he += e
            computed[(kind, VERTICES)] = hv
            computed[(kind, EDGES)] = he
        rows.append(HzTableRow(m=m, reference_bound=REFERENCE_CHAIN_BOUNDS.get(m), computed=computed))
    return rows


def select_r(n: int, table: PrimalityTable | None = None) -> int | None:
    """The prime r maximizing 2r under p + 1 < 2r <= n, if any.

    Maximizing 2r minimizes the residual support n - 2r. For prime n the
    window (p+1, n] for 2r is empty, so there is no r.
    """
    if n < 3:
        raise DomainError("select_r() needs n >= 3")
    if table is None or table.limit < n:
        table = shared_table(n)
    p = table.prev_prime(n)
    assert p is not None
    lo = (p + 1) // 2 + 1  # smallest r with 2r >= p + 2
    hi = n // 2
    if lo > hi:
        return None
    r = table.prev_prime(hi)
    if r is None or r < lo:
        return None
    return r


@dataclass(frozen=True)
class Certificate:
    """Machine-checkable record of one degree's verification outcome."""

    n: int
    kind: GroupKind
    strategy: str
    r: int | None
    t_star: int
    support_m: int
    omega_count: int
    h_value: int
    h_value_edges: int
    h_sum_bound: int
    verdict: str
    witness_chain: tuple[int, ...]
    witness_cycle_types: tuple[CycleType, ...]
    elapsed: float
    reason: str | None = None

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "kind": self.kind.value,
            "strategy": self.strategy,
            "r": self.r,
            "t_star": self.t_star,
            "support_m": self.support_m,
            "omega_count": self.omega_count,
            "h_value": self.h_value,
            "h_value_edges": self.h_value_edges,
            "h_sum_bound": self.h_sum_bound,
            "verdict": self.verdict,
            "witness_chain": [str(v) for v in self.witness_chain],
            "witness_cycle_types": [list(ct.part_list()) for ct in self.witness_cycle_types],
            "elapsed": self.elapsed,
            "reason": self.reason,
        }


def check_case(
    n: int,
    kind: GroupKind,
    support_cap: int = DEFAULT_SUPPORT_CAP,
    table: PrimalityTable | None = None,
) -> Certificate:
    """Certify |Omega(n)| > h for the best strategy available at degree n.

    The direct strategy takes t* = p; when select_r finds an r, t* = 2r is
    also tried. Each candidate builds the small-support class-size family,
    measures its chain height under both conventions, and records the
    summed per-support bound. The strategy with the smallest vertex height
    wins (ties prefer the direct one, which always exists).
    """
    if n < 23:
        raise DomainError("check_case() covers degrees n >= 23")
    started = time.perf_counter()
    if table is None or table.limit < n:
        table = shared_table(n)
    p = table.prev_prime(n)
    assert p is not None
    omega_count = table.count(n) - table.count(n // 2)

    candidates: list[tuple[str, int | None, int]] = [(STRATEGY_DIRECT, None, p)]
    r = select_r(n, table)
    if r is not None:
        candidates.append((STRATEGY_R_TRICK, r, 2 * r))

    evaluated = []
    skipped = []
    for strategy, r_value, t_star in candidates:
        m = n - t_star
        if m > support_cap:
            skipped.append(f"{strategy}: residual support {m} exceeds cap {support_cap}")
            continue
        members: dict[int, CycleType] = {}
        for value, ct in psi_members(kind, n, t_star, support_cap):
            members.setdefault(value, ct)
        h_value, witness = longest_chain(members.keys())
        h_sum = sum(_moved_heights(kind, i)[0] for i in range(1, m + 1))
        if h_value > h_sum:
            raise ChainBoundViolation(
                f"n={n} kind={kind} {strategy}: direct height {h_value} exceeds "
                f"summed bound {h_sum}; the chain decomposition argument is violated"
            )
        evaluated.append((h_value, strategy, r_value, t_star, m, h_sum, witness, members))

    if not evaluated:
        return Certificate(
            n=n,
            kind=kind,
            strategy=STRATEGY_DIRECT,
            r=None,
            t_star=p,
            support_m=n - p,
            omega_count=omega_count,
            h_value=0,
            h_value_edges=0,
            h_sum_bound=0,
            verdict=INDETERMINATE,
            witness_chain=(),
            witness_cycle_types=(),
            elapsed=time.perf_counter() - started,
            reason="; ".join(skipped),
        )

    evaluated.sort(key=lambda e: (e[0], 0 if e[1] == STRATEGY_DIRECT else 1))
    h_value, strategy, r_value, t_star, m, h_sum, witness, members = evaluated[0]
    verdict = PASS if omega_count > min(h_value, h_sum) else FAIL
    return Certificate(
        n=n,
        kind=kind,
        strategy=strategy,
        r=r_value,
        t_star=t_star,
        support_m=m,
        omega_count=omega_count,
        h_value=h_value,
        h_value_edges=max(h_value - 1, 0),
        h_sum_bound=h_sum,
        verdict=verdict,
        witness_chain=witness,
        witness_cycle_types=tuple(members[v] for v in witness),
        elapsed=time.perf_counter() - started,
    )


@dataclass
class ScanReport:
    """All certificates for a degree range, plus order-insensitive counts."""

    start: int
    stop: int
    kinds: tuple[GroupKind, ...]
    support_cap: int
    certificates: list[Certificate] = field(default_factory=list)

    @property
    def counts(self) -> dict[str, int]:
        counter = Counter(cert.verdict for cert in self.certificates)
        return {verdict: counter.get(verdict, 0) for verdict in (PASS, FAIL, INDETERMINATE)}

    @property
    def all_passed(self) -> bool:
        return all(cert.verdict == PASS for cert in self.certificates)

    def summary_dict(self) -> dict:
        """Scheduling-independent summary: no elapsed fields anywhere."""
        problems = [
            {
                "n": cert.n,
                "kind": cert.kind.value,
                "verdict": cert.verdict,
                "strategy": cert.strategy,
                "h_value": cert.h_value,
                "omega_count": cert.omega_count,
                "witness_chain": [str(v) for v in cert.witness_chain],
                "reason": cert.reason,
            }
            for cert in self.certificates
            if cert.verdict != PASS
        ]
        return {
            "from": self.start,
            "to": self.stop,
            "kinds": [k.value for k in self.kinds],
            "support_cap": self.support_cap,
            "total": len(self.certificates),
            "verdicts": self.counts,
            "problems": problems,
        }


CSV_FIELDS = (
    "n",
    "kind",
    "strategy",
    "r",
    "t_star",
    "support_m",
    "omega_count",
    "h_value",
    "h_value_edges",
    "h_sum_bound",
    "verdict",
    "witness_chain",
    "reason",
    "elapsed",
)


def certificate_csv_row(cert: Certificate) -> list[str]:
    d = cert.to_json_dict()
    d["witness_chain"] = "|".join(d["witness_chain"])
    return ["" if d[k] is None else str(d[k]) for k in CSV_FIELDS]


def _scan_task(args: tuple[int, str, int]) -> Certificate:
    n, kind_value, support_cap = args
    return check_case(n, GroupKind(kind_value), support_cap=support_cap)


def scan_range(
    start: int,
    stop: int,
    kinds: Sequence[GroupKind] = (GroupKind.SYM, GroupKind.ALT),
    jobs: int = 1,
    support_cap: int = DEFAULT_SUPPORT_CAP,
) -> ScanReport:
    """Run check_case over [start, stop] x kinds, optionally in parallel.

    The primality table and the per-support chain heights are built before
    any fan-out so forked workers inherit them read-only. Certificates are
    sorted by (n, kind); the aggregate does not depend on scheduling.
    """
    if not 23 <= start <= stop:
        raise DomainError("scan_range() needs 23 <= start <= stop")
    kinds = tuple(kinds)
    table = shared_table(stop)
    max_m = 0
    for n in range(start, stop + 1):
        p = table.prev_prime(n)
        assert p is not None
        max_m = max(max_m, n - p)
    max_m = min(max_m, support_cap)
    for kind in kinds:
        for i in range(1, max_m + 1):
            _moved_heights(kind, i)

    tasks = [(n, kind.value, support_cap) for n in range(start, stop + 1) for kind in kinds]
    if jobs <= 1:
        certificates = [_scan_task(task) for task in tasks]
    else:
        try:
            context = multiprocessing.get_context("fork")
        except ValueError:  # pragma: no cover - non-forking platforms
            context = multiprocessing.get_context()
        with ProcessPoolExecutor(max_workers=jobs, mp_context=context) as pool:
            certificates = list(pool.map(_scan_task, tasks, chunksize=4))
    certificates.sort(key=lambda cert: (cert.n, cert.kind.value))
    return ScanReport(
        start=start,
        stop=stop,
        kinds=kinds,
        support_cap=support_cap,
        certificates=certificates,
    )
