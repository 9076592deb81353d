"""Exact-arithmetic toolkit for smooth complete toric surfaces: fans,
blow-ups, stabilization to the square-symmetric reference surfaces, and
the lattice-point obstruction coefficients of polarized surfaces."""

from .classify import (
    ClassificationReport,
    ModelTag,
    iteration_invariants,
    minimal_models,
    minimal_n,
)
from .errors import ToricError
from .fan import (
    BlowupSequence,
    BlowupStep,
    Fan2D,
    apply_map,
    blow_down,
    blow_up,
    hirzebruch,
    is_isomorphic,
    isomorphisms,
    p2,
    parse_fan,
    replay,
    self_intersections,
    serialize_fan,
    symmetry_group,
    validate,
)
from .lattice import UnimodularMap, det2, primitive, sb_depth, sb_parents
from .polytope import (
    LatticePolytope,
    ObstructionReport,
    delta_j,
    format_report,
    geometry,
    lattice_count,
    normal_fan,
    obstruction,
    parse_polytope,
    polytope_from_heights,
    serialize_polytope,
    validate_polytope,
)
from .stabilize import bound, reduce_to_f0, stabilize, symmetrize, xj_fan

__all__ = [
    "BlowupSequence",
    "BlowupStep",
    "ClassificationReport",
    "Fan2D",
    "LatticePolytope",
    "ModelTag",
    "ObstructionReport",
    "ToricError",
    "UnimodularMap",
    "apply_map",
    "blow_down",
    "blow_up",
    "bound",
    "delta_j",
    "det2",
    "format_report",
    "geometry",
    "hirzebruch",
    "is_isomorphic",
    "isomorphisms",
    "iteration_invariants",
    "lattice_count",
    "minimal_models",
    "minimal_n",
    "normal_fan",
    "obstruction",
    "p2",
    "parse_fan",
    "parse_polytope",
    "polytope_from_heights",
    "primitive",
    "reduce_to_f0",
    "replay",
    "sb_depth",
    "sb_parents",
    "self_intersections",
    "serialize_fan",
    "serialize_polytope",
    "stabilize",
    "symmetrize",
    "symmetry_group",
    "validate",
    "validate_polytope",
    "xj_fan",
]
