"""Exact polynomial factors of Chebyshev/Gegenbauer weighted transforms on
[0, 1], coefficient-level functional-equation proofs, critical-line zero
certification, and a quadrature oracle for every closed form."""

from .exact import (
    FormalSeries,
    Rat,
    RatPoly,
    pochhammer,
    poly_reflect,
    poly_shift,
    rat_from_str,
    rat_to_str,
    series_compose_rational,
)
from .hyper import (
    AppendixTransform,
    DivergentSeriesError,
    HyperSeries,
    PoleBeforeTerminationError,
    TransformResult,
    appendix_transforms,
    chu_vandermonde,
    lemma5_coefficient,
    pfq_numeric,
    pfq_terminating_exact,
    thomae_transform,
)
from .closedform import ConstClass, GammaPoleError, MellinClosedForm
from .cheb_mellin import (
    chebyshev_poly,
    mellin_T_closed,
    mellin_U_closed,
    mellin_ratio_prop4,
    p_poly_U,
    pell_morgan_voyce,
)
from .gegen_mellin import (
    GegenParams,
    gegenbauer_poly,
    hahn_proportionality,
    mellin_G_closed,
    p_poly_beta,
    p_poly_gegen,
)
from .numerics import (
    ZeroReport,
    critical_line_report,
    find_roots,
    log_gamma,
    mellin_quadrature,
)

__version__ = "0.1.0"
