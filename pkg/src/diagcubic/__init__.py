"""Diagonal cubic curves and surfaces: Eisenstein arithmetic, local solvability,
sqrt(-3)-descent and surface criteria."""

__version__ = "0.1.0"

from .eisenstein import EisensteinInt, factor, format_eisenstein, parse_eisenstein  # noqa: E402
from .localsolve import CurveSpec, LocalVerdict, everywhere_locally_solvable, solvable_Q3, solvable_Qp  # noqa: E402
from .residues import cubic_symbol, is_cube_in_Qp  # noqa: E402
from .selmer import CubeClass, CurvePoint, SelmerResult, compute_selmer  # noqa: E402
from .surface import (  # noqa: E402
    SurfaceSpec,
    everywhere_local_surface,
    normalize,
    selmer_ratio_criterion,
    surface_point_search,
    theorem28_pipeline,
    theorem33_witness_search,
    theorem35_criteria,
)

__all__ = [
    "CubeClass",
    "CurvePoint",
    "CurveSpec",
    "EisensteinInt",
    "LocalVerdict",
    "SelmerResult",
    "SurfaceSpec",
    "compute_selmer",
    "cubic_symbol",
    "everywhere_local_surface",
    "everywhere_locally_solvable",
    "factor",
    "format_eisenstein",
    "is_cube_in_Qp",
    "normalize",
    "parse_eisenstein",
    "selmer_ratio_criterion",
    "solvable_Q3",
    "solvable_Qp",
    "surface_point_search",
    "theorem28_pipeline",
    "theorem33_witness_search",
    "theorem35_criteria",
]
