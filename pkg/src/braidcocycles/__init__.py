"""One-cocycle polynomials and character invariants of closed braids.

The rotation loop of a closed braid is generated as a log of Reidemeister
moves; cocycles are evaluated on its triple crossings and the trace graph of
the loop is resolved into named circles for the character invariants.
"""

from .braid import BraidWord, Permutation, cable, closure_permutation, conjugate, is_knot, parse_braid, reverse
from .cocycle import (
    ConfigurationFamily,
    FamilyError,
    InvariantResult,
    eval_gamma0,
    eval_gamma1_nm2,
    eval_gamma_d,
    evaluate,
    parse_family,
    v_a,
    vanishing_bound,
    w_a,
)
from .gauss import TripleEvent, classify_all, classify_triple, gauss_diagram, iter_triples
from .laurent import LaurentPoly
from .loop import EventLog, MarkedDiagram, ReplayError, generate_rot, replay, snapshot_at
from .trace import (
    CharacterTable,
    TraceCircle,
    TraceGraph,
    all_characters0,
    build_trace,
    characters0,
    characters_d,
    compare_invariants,
    detect_generalized_trihedrons,
    monodromy,
    pos_neg_characters,
    trace_circles,
)

__version__ = "0.1.0"

__all__ = [
    "BraidWord",
    "Permutation",
    "cable",
    "closure_permutation",
    "conjugate",
    "is_knot",
    "parse_braid",
    "reverse",
    "ConfigurationFamily",
    "FamilyError",
    "InvariantResult",
    "eval_gamma0",
    "eval_gamma1_nm2",
    "eval_gamma_d",
    "evaluate",
    "parse_family",
    "v_a",
    "vanishing_bound",
    "w_a",
    "TripleEvent",
    "classify_all",
    "classify_triple",
    "gauss_diagram",
    "iter_triples",
    "LaurentPoly",
    "EventLog",
    "MarkedDiagram",
    "ReplayError",
    "generate_rot",
    "replay",
    "snapshot_at",
    "CharacterTable",
    "TraceCircle",
    "TraceGraph",
    "all_characters0",
    "build_trace",
    "characters0",
    "characters_d",
    "compare_invariants",
    "detect_generalized_trihedrons",
    "monodromy",
    "pos_neg_characters",
    "trace_circles",
    "__version__",
]
