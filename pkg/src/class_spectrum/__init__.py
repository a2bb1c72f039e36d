"""Exact conjugacy-class-size spectra of symmetric and alternating groups,
divisibility-chain heights over them, prime-interval data, and a
certificate-emitting verification pipeline tying the three together."""

__version__ = "0.1.0"

from .classes import (
    DEFAULT_SPECTRUM_CAP,
    GroupKind,
    Spectrum,
    centralizer_order_sym,
    class_size,
    group_order,
    moved_class_sizes,
    phi_set,
    psi_members,
    psi_set,
    spectrum,
)
from .divgraph import EDGES, VERTICES, ChainResult, height, longest_chain
from .errors import DomainError, EnumerationCapError
from .partitions import (
    EVEN,
    ODD,
    CycleType,
    fixed_point_free_partitions,
    is_even,
    parity,
    partitions,
)
from .primes import (
    BoundReport,
    OmegaData,
    PrimalityTable,
    SweepResult,
    bound_report,
    chebyshev_sweep,
    factorial_ratio,
    omega_set,
    shared_table,
    sieve,
)
from .verify import (
    DEFAULT_SUPPORT_CAP,
    FAIL,
    INDETERMINATE,
    PASS,
    REFERENCE_CHAIN_BOUNDS,
    Certificate,
    ChainBoundViolation,
    HzTableRow,
    OmegaCheck,
    OmegaSweep,
    ScanReport,
    check_case,
    check_omega_lemma,
    hz_table,
    omega_sweep,
    scan_range,
    select_r,
)

__all__ = [
    "BoundReport",
    "Certificate",
    "ChainBoundViolation",
    "ChainResult",
    "CycleType",
    "DEFAULT_SPECTRUM_CAP",
    "DEFAULT_SUPPORT_CAP",
    "DomainError",
    "EDGES",
    "EnumerationCapError",
    "EVEN",
    "FAIL",
    "GroupKind",
    "HzTableRow",
    "INDETERMINATE",
    "ODD",
    "OmegaCheck",
    "OmegaData",
    "OmegaSweep",
    "PASS",
    "PrimalityTable",
    "REFERENCE_CHAIN_BOUNDS",
    "ScanReport",
    "Spectrum",
    "SweepResult",
    "VERTICES",
    "bound_report",
    "centralizer_order_sym",
    "chebyshev_sweep",
    "check_case",
    "check_omega_lemma",
    "class_size",
    "factorial_ratio",
    "fixed_point_free_partitions",
    "group_order",
    "height",
    "hz_table",
    "is_even",
    "longest_chain",
    "moved_class_sizes",
    "omega_set",
    "omega_sweep",
    "parity",
    "partitions",
    "phi_set",
    "psi_members",
    "psi_set",
    "scan_range",
    "select_r",
    "shared_table",
    "sieve",
    "spectrum",
]
