from .tangles import (
    Cap,
    Cup,
    DiagramKind,
    ElementaryDiagram,
    Morphism,
    NegCross,
    PosCross,
    TangleWord,
    braid_closure,
    conjugate,
    crossing_signs,
    eval_elementary,
    eval_word,
    kauffman_bracket,
    kauffman_jones,
    markov_stabilize,
    mirror,
    orient,
    parse_braid,
    rt_invariant,
    skein_check,
    writhe,
)
from .temperley_lieb import PlanarMatching, compose_all, tl_compose
from .uqsl2 import (
    UqModule,
    character,
    decompose_by_character,
    signed_character,
    simple_module,
    tensor,
    tensor_power,
    verify_casimir_scalar,
    verify_relations,
)

__all__ = [
    "Cap",
    "Cup",
    "DiagramKind",
    "ElementaryDiagram",
    "Morphism",
    "NegCross",
    "PosCross",
    "TangleWord",
    "braid_closure",
    "conjugate",
    "crossing_signs",
    "eval_elementary",
    "eval_word",
    "kauffman_bracket",
    "kauffman_jones",
    "markov_stabilize",
    "mirror",
    "orient",
    "parse_braid",
    "rt_invariant",
    "skein_check",
    "writhe",
    "PlanarMatching",
    "compose_all",
    "tl_compose",
    "UqModule",
    "character",
    "decompose_by_character",
    "signed_character",
    "simple_module",
    "tensor",
    "tensor_power",
    "verify_casimir_scalar",
    "verify_relations",
]
