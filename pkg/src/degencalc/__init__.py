"""Exact intersection numbers and cohomology tables for cone degenerations of P^3."""

__version__ = "0.1.0"

from .chow import (  # noqa: E402
    BundleThreefold,
    HirzebruchBase,
    SurfaceClass,
    ThreefoldClass,
    anticanonical_cube_cone,
    canonical_surface,
    canonical_threefold,
    classify_degenerations,
    cone_discrepancy,
    surface_pair,
    triple,
)
from .cohomology import CohVector, h_p1, h_surface, h_threefold, lattice_oracle_h0  # noqa: E402
from .lesolve import SESProblem, partial, solve_ses  # noqa: E402
from .models import branch_class, invariants, model_data, moduli_dimension  # noqa: E402
