"""Compound Node-Kayles on disjoint unions of paths.

Solvers for all twelve of Conway's compound conventions (three move rules x
two ending rules x normal/misere play), an exhaustive oracle, audit tooling,
a CLI and an HTTP play service.
"""

from .core import (
    EMPTY,
    CompoundMove,
    Ending,
    MoveRule,
    Play,
    Position,
    Transition,
    VARIANTS,
    Variant,
    apply_move,
    canonicalize,
    compound_moves,
    format_position,
    parse_position,
    path_options,
    variant_by_name,
    vertex_result,
)
from .errors import (
    BoundExceeded,
    InsufficientData,
    InvalidLength,
    InvalidVertex,
    KaylesError,
    NoMoves,
    NotWinnable,
    Unsupported,
)
from .octal import (
    DAWSON,
    STAR,
    OctalCode,
    PeriodDescriptor,
    ValueSequence,
    detect_period,
    guy_smith_check,
    mex,
    nim_sum,
    octal_grundy,
)
from .disjunctive import disj_misere_outcome, disj_normal_best_move, disj_normal_outcome, rho, rho_xor
from .foreclosed import ddc_best_move, ddc_outcome, fminus, fminus_stats, fplus
from .conjunctive import compound_remoteness, conj_best_move, conj_outcome, remoteness
from .suspense import ccc_best_move, ccc_outcome, compound_suspense, suspense
from .selective import sel_best_move, sel_outcome, sigma_path
from .oracle import Oracle
from .audit import audit_variant, enumerate_positions, losing_paths

__all__ = [name for name in dir() if not name.startswith("_")]
