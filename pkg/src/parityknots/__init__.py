"""Parity invariants of free and virtual knots.

Diagrams are Gauss codes: :class:`GaussPhrase` for free knots and links,
:class:`VirtualGaussDiagram` for signed, arrowed one-circle diagrams.
"""

from .algebra import DELTA, FModuleElement, LaurentPoly, Z2GElement, class_of, fmodule_normalize, z2_add
from .classical import braid_closure, classical_corpus
from .diagram import (
    CanonicalKey,
    GaussPhrase,
    LongGaussDiagram,
    Smoothing,
    VirtualGaussDiagram,
    canonical_key,
    delete_chords,
    interlacement_counts,
    is_split,
    linked,
    parse_corpus,
    parse_free,
    parse_virtual,
    resolve,
    smooth,
)
from .errors import (
    ArityMismatch,
    BudgetExceeded,
    InvalidInstance,
    InvariantViolation,
    KnotError,
    MalformedCode,
    Mismatch,
    NotInFiltrationLevel,
    SignMismatch,
    UnknownChord,
    WrongComponentCount,
)
from .invariants import (
    GammaWord,
    GroupElement,
    L_invariant,
    bracket,
    bracket_links,
    chord_type,
    eval_group,
    even_kauffman,
    gamma_word,
    is_irreducibly_odd,
    jones_x,
    kauffman_bracket,
    l_invariant,
    source_sink,
    turaev_delta,
    writhe,
    x_even,
)
from .moves import (
    MoveInstance,
    MoveKind,
    apply_move,
    bfs_reachable,
    find_all_moves,
    find_moves,
    inverse,
    random_walk,
    reduce_r2,
    virtualise,
)
from .parity import check_parity_axioms, component_parity, gaussian_parity, hierarchy, hierarchy_parity, index
from .projections import f_fixpoint, f_map, filtration_level, in_filtration, project_level

__version__ = "0.1.0"

__all__ = [
    "DELTA",
    "FModuleElement",
    "LaurentPoly",
    "Z2GElement",
    "class_of",
    "fmodule_normalize",
    "z2_add",
    "braid_closure",
    "classical_corpus",
    "CanonicalKey",
    "GaussPhrase",
    "LongGaussDiagram",
    "Smoothing",
    "VirtualGaussDiagram",
    "canonical_key",
    "delete_chords",
    "interlacement_counts",
    "is_split",
    "linked",
    "parse_corpus",
    "parse_free",
    "parse_virtual",
    "resolve",
    "smooth",
    "ArityMismatch",
    "BudgetExceeded",
    "InvalidInstance",
    "InvariantViolation",
    "KnotError",
    "MalformedCode",
    "Mismatch",
    "NotInFiltrationLevel",
    "SignMismatch",
    "UnknownChord",
    "WrongComponentCount",
    "GammaWord",
    "GroupElement",
    "L_invariant",
    "bracket",
    "bracket_links",
    "chord_type",
    "eval_group",
    "even_kauffman",
    "gamma_word",
    "is_irreducibly_odd",
    "jones_x",
    "kauffman_bracket",
    "l_invariant",
    "source_sink",
    "turaev_delta",
    "writhe",
    "x_even",
    "MoveInstance",
    "MoveKind",
    "apply_move",
    "bfs_reachable",
    "find_all_moves",
    "find_moves",
    "inverse",
    "random_walk",
    "reduce_r2",
    "virtualise",
    "check_parity_axioms",
    "component_parity",
    "gaussian_parity",
    "hierarchy",
    "hierarchy_parity",
    "index",
    "f_fixpoint",
    "f_map",
    "filtration_level",
    "in_filtration",
    "project_level",
]
