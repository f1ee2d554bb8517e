"""Exact integer arithmetic for the reduction of flag-transitive symmetric designs.

Everything here is integer or Fraction arithmetic; no floats are consulted
for any decision.  The public surface re-exports the pieces most callers
want: design parameter checks, the simple-group catalog, the three
elimination scans, and the combined report.
"""

from .atlas import (
    Family,
    GroupFacts,
    SimpleGroupId,
    display_name,
    enumerate_catalog,
    facts,
    order,
    out4_candidates,
    out4_scan,
    out_order,
    parse_group,
)
from .design import (
    DesignParams,
    SymmetricParams,
    derive_replication,
    is_symmetric_admissible,
    k_lambda_ratio_exceeds_sqrt,
    max_fixed_points,
    satisfies_focus_condition,
    suborbit_divisibility,
    symmetric_lambda,
)
from .diagonal import (
    DiagonalScanResult,
    diag_divisibility_gate,
    diag_m_admissible,
    diag_oddpart_test,
    diagonal_scan,
    implication_check,
)
from .errors import DomainError, NonIntegralError, TailCheckFailed
from .imprimitive import ImprimitiveFamily, imprimitive_family
from .product import (
    ProductCase,
    ProductTriple,
    a_upper_bound,
    enumerate_product_cases,
    fixed_point_bound_holds,
    k_from,
    lambda_from,
    m4_case,
    multiplier_bound_holds,
    power_gap_feasible,
    v0_candidates,
)
from .report import VERSION, OnanScottType, ReduceConfig, Verdict, emit, report_payload, run_reduce

__version__ = VERSION

__all__ = [
    "DesignParams",
    "DiagonalScanResult",
    "DomainError",
    "Family",
    "GroupFacts",
    "ImprimitiveFamily",
    "NonIntegralError",
    "OnanScottType",
    "ProductCase",
    "ProductTriple",
    "ReduceConfig",
    "SimpleGroupId",
    "SymmetricParams",
    "TailCheckFailed",
    "VERSION",
    "Verdict",
    "a_upper_bound",
    "derive_replication",
    "diag_divisibility_gate",
    "diag_m_admissible",
    "diag_oddpart_test",
    "diagonal_scan",
    "display_name",
    "emit",
    "enumerate_catalog",
    "enumerate_product_cases",
    "facts",
    "fixed_point_bound_holds",
    "implication_check",
    "imprimitive_family",
    "is_symmetric_admissible",
    "k_from",
    "k_lambda_ratio_exceeds_sqrt",
    "lambda_from",
    "m4_case",
    "max_fixed_points",
    "multiplier_bound_holds",
    "order",
    "out4_candidates",
    "out4_scan",
    "out_order",
    "parse_group",
    "power_gap_feasible",
    "report_payload",
    "run_reduce",
    "satisfies_focus_condition",
    "suborbit_divisibility",
    "symmetric_lambda",
    "v0_candidates",
]
