"""minsurf: a numerical laboratory for minimal surface theory.

Surface generation from holomorphic data, curvature and variational
diagnostics on sampled patches, minimal-surface and mean-curvature-flow
solvers for graphs, density/monotonicity analyzers, multi-valued graph
decomposition into plane/catenoid/helicoid coefficients, and closed-form
width/extinction formulas.
"""

__version__ = "0.1.0"

from .patch import (  # noqa: F401
    ParamPatch,
    FormField,
    CurvatureField,
    fundamental_forms,
    curvature_scalars,
    surface_laplacian,
    patch_area,
    first_variation,
    convex_hull_check,
    simons_residual,
)
