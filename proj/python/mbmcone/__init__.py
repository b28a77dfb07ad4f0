"""Exact enumeration and classification of MBM classes for K3^[n]- and
Kummer-type holomorphic symplectic manifolds.

The heavy lifting lives in the compiled extension; this package re-exports
its public surface. Rationals are fractions.Fraction, big integers are plain
Python ints.
"""

from ._core import (
    ChamberReport,
    Classification,
    CurveRealization,
    DualClass,
    Family,
    NormalizedClass,
    OrbitDescriptor,
    PicClass,
    WallRay,
    bb_pairing,
    bb_square,
    canonical_representative,
    chamber_of,
    classify,
    delta,
    delta_rep,
    divisibility,
    dual_class,
    enumerate_json,
    enumerate_mbm_orbits,
    extremal_qhat,
    genus_bound,
    is_primitive,
    normalize,
    orbit_params_valid,
    orbit_to_wall,
    realize_orbit,
    same_orbit,
    scan_wall_orbits,
    scan_walls,
    wall_predicate,
    wall_to_orbit,
)

__all__ = [
    "ChamberReport",
    "Classification",
    "CurveRealization",
    "DualClass",
    "Family",
    "NormalizedClass",
    "OrbitDescriptor",
    "PicClass",
    "WallRay",
    "bb_pairing",
    "bb_square",
    "canonical_representative",
    "chamber_of",
    "classify",
    "delta",
    "delta_rep",
    "divisibility",
    "dual_class",
    "enumerate_json",
    "enumerate_mbm_orbits",
    "extremal_qhat",
    "genus_bound",
    "is_primitive",
    "normalize",
    "orbit_params_valid",
    "orbit_to_wall",
    "realize_orbit",
    "same_orbit",
    "scan_wall_orbits",
    "scan_walls",
    "wall_predicate",
    "wall_to_orbit",
]
