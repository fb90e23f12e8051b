"""TDRL and mirror-TDRL rearrangements on permutations: balls, counts,
reconstruction and single-error-correcting codes."""

from tdrl._backend import BACKEND
from tdrl.codes import Code, greedy_code, verify_code
from tdrl.formulas import Quantity, closed_form, reversible_fraction, sphere_packing_bound
from tdrl.neighborhood import (
    Direction,
    Family,
    GuardExceeded,
    NeighborSet,
    ball_in,
    ball_out,
    intersect_out,
    max_intersection,
    reversible_set,
    witness_pair,
)
from tdrl.perm import (
    OpKind,
    ParseError,
    Pattern,
    Permutation,
    TDRLError,
    WindowedOp,
    apply_mtdrl,
    apply_tdrl,
    apply_windowed,
    canonical_pattern,
    inverse_reversible_pattern,
    is_reversible_pattern,
    relabel,
)
from tdrl.recon import ObservationSet, ReconstructionResult, candidates, reconstruct

__all__ = [
    "BACKEND", "Code", "Direction", "Family", "GuardExceeded", "NeighborSet", "ObservationSet",
    "OpKind", "ParseError", "Pattern", "Permutation", "Quantity", "ReconstructionResult",
    "TDRLError", "WindowedOp", "apply_mtdrl", "apply_tdrl", "apply_windowed", "ball_in",
    "ball_out", "candidates", "canonical_pattern", "closed_form", "greedy_code", "intersect_out",
    "inverse_reversible_pattern", "is_reversible_pattern", "max_intersection", "reconstruct",
    "relabel", "reversible_fraction", "reversible_set", "sphere_packing_bound", "verify_code",
    "witness_pair",
]
