"""Exact block combinatorics for category O over the queer Lie superalgebra q(n)."""

from qblocks.blockone import (
    BlockChart,
    GlWeight,
    block_chart,
    from_gl,
    gl_atypicality,
    gl_linked,
    gl_rho,
    gl_wt,
    lambda_minus,
    lambda_plus,
    pi_split,
    tau_parity,
    to_gl,
)
from qblocks.characters import (
    FormalCharacter,
    arrow_a,
    levi_typical_character,
    parabolic_verma_character,
    tensor_project_verify,
    translate_char,
    verma_character,
)
from qblocks.linkage import (
    LinkageWitness,
    WtVector,
    atypicality,
    linked_approx,
    linked_sim,
    same_central_char,
    wt,
)
from qblocks.reduction import (
    LeviBlock,
    Move,
    ReductionResult,
    normalize_block,
    replay_moves,
)
from qblocks.scalars import (
    HALF,
    INT,
    IRR,
    CosetClass,
    Scalar,
    coordinate_sign,
    coset_class,
)
from qblocks.schur import PartitionIndex, pieri_expand, schur_jt, schur_tableaux
from qblocks.selfcheck import SelfcheckReport, run_selfcheck
from qblocks.weights import (
    Root,
    Weight,
    bar_pairing,
    class_signature,
    is_dominant,
    is_in_lambda,
    pairing,
    positive_roots,
    simple_root,
    star_action,
    weight_from_json,
    weight_to_json,
    weyl_apply,
)
from qblocks.zigzag import (
    BasisId,
    ChartComparison,
    ZigzagAlgebra,
    ZigzagElement,
    build,
    compare_with_chart,
)

__all__ = [
    "Scalar",
    "CosetClass",
    "INT",
    "HALF",
    "IRR",
    "coset_class",
    "coordinate_sign",
    "Weight",
    "Root",
    "pairing",
    "bar_pairing",
    "simple_root",
    "positive_roots",
    "weyl_apply",
    "star_action",
    "class_signature",
    "is_in_lambda",
    "is_dominant",
    "weight_from_json",
    "weight_to_json",
    "LinkageWitness",
    "WtVector",
    "atypicality",
    "same_central_char",
    "linked_sim",
    "linked_approx",
    "wt",
    "Move",
    "LeviBlock",
    "ReductionResult",
    "normalize_block",
    "replay_moves",
    "FormalCharacter",
    "verma_character",
    "levi_typical_character",
    "parabolic_verma_character",
    "arrow_a",
    "translate_char",
    "tensor_project_verify",
    "PartitionIndex",
    "schur_jt",
    "schur_tableaux",
    "pieri_expand",
    "BlockChart",
    "GlWeight",
    "block_chart",
    "lambda_minus",
    "lambda_plus",
    "pi_split",
    "tau_parity",
    "gl_rho",
    "to_gl",
    "from_gl",
    "gl_wt",
    "gl_linked",
    "gl_atypicality",
    "BasisId",
    "ZigzagElement",
    "ZigzagAlgebra",
    "ChartComparison",
    "build",
    "compare_with_chart",
    "SelfcheckReport",
    "run_selfcheck",
]
