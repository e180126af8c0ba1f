"""Exact combinatorics of Fano complete intersections.

The package computes the Hodge number h^{1,N-1} of a smooth Fano complete
intersection from its degrees, counts the irreducible components of the
central fiber of the compactified mirror Landau-Ginzburg model by stratum
enumeration and resolution counting, verifies that the two numbers agree, and
checks the period condition of the mirror Laurent polynomial by exact series
expansion.  All arithmetic is exact integer arithmetic.
"""

from .exactmath import binomial, convolution_identity_sides, multinomial
from .givental import (
    LaurentPolynomial,
    PeriodReport,
    PowerSeries,
    build_fx,
    constant_term,
    i_series,
    phi_series,
    verify_period,
)
from .jacobian_ring import (
    HodgeReport,
    alt_dim_formula,
    count_monomials_oracle,
    delta_j,
    dim_R_1,
    dim_R_prime_1,
    hodge_h1,
    hypersurface_corollary,
    poly_space_dim,
)
from .lg_count import (
    KlgReport,
    StratumContribution,
    StratumLabel,
    TheoremReport,
    enumerate_strata,
    k_lg,
    k_lg_closed,
    verify_main_theorem,
)
from .resolution import (
    ChartEdge,
    ChartType,
    NodeLimitExceeded,
    ResolutionTrace,
    TraceEdge,
    TraceNode,
    chart_children,
    f_closed,
    f_multi,
    f_rec,
    g_closed,
    g_rec,
    resolution_trace,
)
from .varieties import CompleteIntersection, fano_sweep

__version__ = "0.1.0"

__all__ = [
    "CompleteIntersection",
    "fano_sweep",
    "binomial",
    "multinomial",
    "convolution_identity_sides",
    "poly_space_dim",
    "delta_j",
    "dim_R_prime_1",
    "count_monomials_oracle",
    "dim_R_1",
    "alt_dim_formula",
    "hodge_h1",
    "hypersurface_corollary",
    "HodgeReport",
    "LaurentPolynomial",
    "PowerSeries",
    "PeriodReport",
    "build_fx",
    "constant_term",
    "phi_series",
    "i_series",
    "verify_period",
    "ChartType",
    "ChartEdge",
    "TraceNode",
    "TraceEdge",
    "ResolutionTrace",
    "NodeLimitExceeded",
    "f_rec",
    "g_rec",
    "f_closed",
    "g_closed",
    "f_multi",
    "chart_children",
    "resolution_trace",
    "StratumLabel",
    "StratumContribution",
    "KlgReport",
    "TheoremReport",
    "enumerate_strata",
    "k_lg",
    "k_lg_closed",
    "verify_main_theorem",
    "__version__",
]
