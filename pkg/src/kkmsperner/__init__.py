"""Exact simplicial subdivisions, Sperner labelings and the KKM cover sets built from them."""

from .geometry import (
    affinely_independent,
    bpoint,
    normalized_volume,
    solve_barycentric,
    support,
)
from .kkm import (
    KKMCover,
    NotInIntersection,
    Witness,
    build_cover,
    extract_cl_simplex,
    intersection_point,
    member,
    naive_cover_check,
    verify_covering_certificate,
    verify_covering_sampled,
)
from .labeling import labeling_from_map, random_sperner_labeling, validate_labeling
from .sperner import CLReport, find_completely_labeled
from .subdivision import (
    Subdivision,
    ValidationReport,
    barycentric_refine,
    edgewise_subdivision,
    locate,
    trivial_subdivision,
    validate,
)

__version__ = "0.1.0"
