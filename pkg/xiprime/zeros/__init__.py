"""Zeros of Ξ, Ξ′ and Z′: scanning, persistence and cross-checks."""

from .audit import compare_zprime, count_audit, interlacing_report, multiplicity_report, smooth_count
from .models import (
    CountAudit,
    InterlacingPair,
    InterlacingReport,
    MultiplicityReport,
    ZeroKind,
    ZeroSet,
    ZPrimeComparison,
)
from .scan import (
    GridPolicy,
    bisect_brackets,
    find_zeros,
    scan_grid,
    segment_bounds,
    target_values,
    verify_zero_set,
)
from .zero_db import ZeroDB
from .zero_file import export_zeros, import_zeros

__all__ = [
    "CountAudit",
    "GridPolicy",
    "InterlacingPair",
    "InterlacingReport",
    "MultiplicityReport",
    "ZPrimeComparison",
    "ZeroDB",
    "ZeroKind",
    "ZeroSet",
    "bisect_brackets",
    "compare_zprime",
    "count_audit",
    "export_zeros",
    "find_zeros",
    "import_zeros",
    "interlacing_report",
    "multiplicity_report",
    "scan_grid",
    "segment_bounds",
    "smooth_count",
    "target_values",
    "verify_zero_set",
]
