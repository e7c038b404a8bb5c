"""Exact combinatorial resolution of surface singularities.

Equations Z^n + sum a_k(X, Y) Z^k over the rationals, their projected
polygons, blow-up transforms, the resolution driver and closed-form bounds
on the number of blow-ups before the multiplicity drops.
"""

__version__ = "0.1.0"

from .algebra import (  # noqa: E402
    INFINITE,
    Surface,
    TriPoly,
    X,
    Y,
    Z,
    as_surface,
    divide_monomial_exact,
    format_poly,
    initial_form,
    order,
    parse_poly,
    substitute,
)
from .bounds import (  # noqa: E402
    BoundReport,
    bound_gwt_quadrant,
    bound_nonplane,
    bound_prepared,
    bound_quadrant,
    bound_report,
)
from .newton import (  # noqa: E402
    Facet,
    Point2,
    PolygonMetrics,
    Staircase,
    cloud,
    hironaka_polygon,
    level_polygon,
    polygon_metrics,
    rho,
    staircase_hull,
)
from .prepare import (  # noqa: E402
    GQWitness,
    PreparationReport,
    detect_generalized_quadrant,
    preparation_report,
    tchirnhausen,
    to_gwt,
)
from .resolve import (  # noqa: E402
    Strategy,
    Trace,
    TraceStep,
    critical_directions,
    resolve_trace,
    step,
    worst_case_depth,
)
from .transform import (  # noqa: E402
    Direction,
    StepKind,
    Transvection,
    apply_transvection,
    factor_direction_through_transvection,
    monoidal,
    permissible,
    quadratic,
)

__all__ = [
    "__version__",
    "INFINITE",
    "Surface",
    "TriPoly",
    "X",
    "Y",
    "Z",
    "as_surface",
    "divide_monomial_exact",
    "format_poly",
    "initial_form",
    "order",
    "parse_poly",
    "substitute",
    "BoundReport",
    "bound_gwt_quadrant",
    "bound_nonplane",
    "bound_prepared",
    "bound_quadrant",
    "bound_report",
    "Facet",
    "Point2",
    "PolygonMetrics",
    "Staircase",
    "cloud",
    "hironaka_polygon",
    "level_polygon",
    "polygon_metrics",
    "rho",
    "staircase_hull",
    "GQWitness",
    "PreparationReport",
    "detect_generalized_quadrant",
    "preparation_report",
    "tchirnhausen",
    "to_gwt",
    "Strategy",
    "Trace",
    "TraceStep",
    "critical_directions",
    "resolve_trace",
    "step",
    "worst_case_depth",
    "Direction",
    "StepKind",
    "Transvection",
    "apply_transvection",
    "factor_direction_through_transvection",
    "monoidal",
    "permissible",
    "quadratic",
]
