"""Game values of strong placement games computed from their legal complexes."""
from ._kernels import BACKEND
from .complex import (
    ComplexError,
    ComplexFormatError,
    ImpartialComplex,
    LegalComplex,
    Player,
    SimplicialComplex,
    join,
    link,
    negate_labels,
    parse_complex,
    serialize,
)
from .engine import (
    GameNode,
    Outcome,
    add,
    birthday,
    canonical_form,
    equal,
    evaluate,
    formal_birthday,
    game_from_complex,
    leq,
    make_game,
    negate,
    outcome,
    sp_tree_check,
)
from .impartial import grundy, mex, predict_structural
from .values import Dyadic, describe, make_nimber, make_number, make_switch, make_tiny, parse_game, recognize

__version__ = "0.1.0"
