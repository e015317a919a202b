from fibalg.engine.errors import (
    AlgebraError,
    FormatError,
    IndexOutsideWindow,
    InvalidWindow,
    NotDirichletInteger,
    NotInChain,
    ParseError,
    PreconditionError,
    UnexpectedGap,
    UnknownSuite,
)
from fibalg.engine.golden import (
    ONE,
    SQRT5,
    TAU,
    TAU_SQUARED,
    ZERO,
    GoldenRational,
    add,
    compare,
    floor,
    format_golden,
    format_rational,
    mul,
    parse_golden,
    parse_rational,
    star,
)
from fibalg.engine.chain import (
    ChainPoint,
    ChainSpec,
    chain_range,
    check_chain_equivalence,
    check_closure,
    check_gap_word,
    check_palindrome,
    check_qadd_index,
    check_quasiaddition,
    gap_word,
    gaps,
    index_of,
    lift,
    membership,
    model_set,
    point,
    qadd,
    qadd_index,
    substitution_word,
    word_from_values,
)
from fibalg.engine.algebra import (
    CENTRAL,
    ZERO_ELEMENT,
    AlgebraElement,
    BasisKey,
    Central,
    ChainIndex,
    L,
    LP,
    Point,
    SpanResult,
    bilinear_extend,
    combine,
    elem_add,
    elem_scale,
    in_span,
    key_order,
    parse_element,
    render_element,
    solve_linear,
)
from fibalg.engine.lie import (
    UNIT_WINDOW,
    ClosedWindow,
    LieAlgebraSpec,
    bracket,
    bracket_keys,
    central_charge,
    abelian_witnesses,
    check_abelian_subwindow,
    check_antisymmetry,
    check_chi_factorization,
    check_ideal,
    check_jacobi,
    check_reflection_symmetry,
    closed_window_points,
    defect_chain_points,
    generator_keys,
    ideal_leaks,
    qclie_bracket,
    qclie_bracket_window,
    virasoro_bracket,
    window_points,
    witt_bracket,
)
from fibalg.engine.jordan import (
    JordanSpec,
    StructureConstantTable,
    TruncationReport,
    TruncationSpec,
    check_commutativity,
    check_idempotence,
    check_jordan_identity,
    check_monotone_zero_maps,
    check_no_identity,
    check_point_agreement,
    check_proper_ideal,
    check_round_trip,
    check_sum_rule,
    check_truncated_axioms,
    export_structure_constants,
    ideal_generators,
    jordan,
    jordan_product,
    jordan_product_points,
    rebuild_product,
    truncated,
    truncated_product,
    zero_map_directions,
)
from fibalg.engine.serialize import (
    dumps,
    element_from_list,
    element_to_list,
    golden_from_dict,
    golden_to_dict,
    table_from_csv_rows,
    table_from_dict,
    table_to_csv_rows,
    table_to_dict,
)

__all__ = [
    "AlgebraError",
    "FormatError",
    "IndexOutsideWindow",
    "InvalidWindow",
    "NotDirichletInteger",
    "NotInChain",
    "ParseError",
    "PreconditionError",
    "UnexpectedGap",
    "UnknownSuite",
    "ONE",
    "SQRT5",
    "TAU",
    "TAU_SQUARED",
    "ZERO",
    "GoldenRational",
    "add",
    "compare",
    "floor",
    "format_golden",
    "format_rational",
    "mul",
    "parse_golden",
    "parse_rational",
    "star",
    "ChainPoint",
    "ChainSpec",
    "chain_range",
    "check_chain_equivalence",
    "check_closure",
    "check_gap_word",
    "check_palindrome",
    "check_qadd_index",
    "check_quasiaddition",
    "gap_word",
    "gaps",
    "index_of",
    "lift",
    "membership",
    "model_set",
    "point",
    "qadd",
    "qadd_index",
    "substitution_word",
    "word_from_values",
    "CENTRAL",
    "ZERO_ELEMENT",
    "AlgebraElement",
    "BasisKey",
    "Central",
    "ChainIndex",
    "L",
    "LP",
    "Point",
    "SpanResult",
    "bilinear_extend",
    "combine",
    "elem_add",
    "elem_scale",
    "in_span",
    "key_order",
    "parse_element",
    "render_element",
    "solve_linear",
    "UNIT_WINDOW",
    "ClosedWindow",
    "LieAlgebraSpec",
    "bracket",
    "bracket_keys",
    "central_charge",
    "abelian_witnesses",
    "check_abelian_subwindow",
    "check_antisymmetry",
    "check_chi_factorization",
    "check_ideal",
    "check_jacobi",
    "check_reflection_symmetry",
    "closed_window_points",
    "defect_chain_points",
    "generator_keys",
    "ideal_leaks",
    "qclie_bracket",
    "qclie_bracket_window",
    "virasoro_bracket",
    "window_points",
    "witt_bracket",
    "JordanSpec",
    "StructureConstantTable",
    "TruncationReport",
    "TruncationSpec",
    "check_commutativity",
    "check_idempotence",
    "check_jordan_identity",
    "check_monotone_zero_maps",
    "check_no_identity",
    "check_point_agreement",
    "check_proper_ideal",
    "check_round_trip",
    "check_sum_rule",
    "check_truncated_axioms",
    "export_structure_constants",
    "ideal_generators",
    "jordan",
    "jordan_product",
    "jordan_product_points",
    "rebuild_product",
    "truncated",
    "truncated_product",
    "zero_map_directions",
    "dumps",
    "element_from_list",
    "element_to_list",
    "golden_from_dict",
    "golden_to_dict",
    "table_from_csv_rows",
    "table_from_dict",
    "table_to_csv_rows",
    "table_to_dict",
]
