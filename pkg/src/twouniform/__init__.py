"""Exact 2-uniform plane tilings, their torus quotients, and vertex-orbit counts."""
from .catalog import BOUNDS, EQUALITY_CASES, build_Km, catalog, g_orbit_count, h_orbit_count, validate_tiling
from .exact_geometry import Isometry, QuadExt, Vec2
from .lattice import SublatticeMatrix, enumerate_sublattices
from .symmetry import automorphism_group, quotient_group_orbits, verify_claim1, vertex_orbit_count
from .tiling import PeriodicTiling, VertexType
from .torus_map import FiniteMap, OrbitReport, is_polyhedral, quotient

__all__ = [
    "BOUNDS",
    "EQUALITY_CASES",
    "FiniteMap",
    "Isometry",
    "OrbitReport",
    "PeriodicTiling",
    "QuadExt",
    "SublatticeMatrix",
    "Vec2",
    "VertexType",
    "automorphism_group",
    "build_Km",
    "catalog",
    "enumerate_sublattices",
    "g_orbit_count",
    "h_orbit_count",
    "is_polyhedral",
    "quotient",
    "quotient_group_orbits",
    "validate_tiling",
    "verify_claim1",
    "vertex_orbit_count",
]
