"""Quadratic embedding constants of finite graphs.

Numeric QEC computation from distance matrices (with an in-repo eigensolver),
graph families and operations, closed-form values for the families where the
constant is known, and an expression-based CLI.
"""

from .engine import (
    MethodDisagreementError,
    QecResult,
    StationaryPoint,
    ones_complement_basis,
    qec,
    qec_compression,
    qec_diam2,
    qec_regular_diam2,
    qec_stationary,
    stationary_points,
)
from .expr import (
    Atom,
    Cartesian,
    Complement,
    Copies,
    Double,
    ExprEvalError,
    ExprSyntaxError,
    FromFile,
    GraphExpr,
    Join,
    Lex2,
    Line,
    Union,
    eval_expr,
    match_formula,
    parse,
    render,
)
from .formulas import (
    FormulaValue,
    lambda_min_complete,
    lambda_min_cycle,
    lambda_min_empty,
    qec_complete,
    qec_complete_bipartite,
    qec_complete_split,
    qec_cycle,
    qec_cycle_join_complete,
    qec_cycle_join_empty,
    qec_double_formula,
    qec_friendship,
    qec_join_regular,
    qec_lex2_formula,
    qec_srg,
    qec_srg_join_tables,
    qec_wheel,
    srg_lambda_min,
)
from .graphs import (
    MAX_VERTICES,
    EdgeListError,
    Graph,
    OversizeGraphError,
    SrgParams,
    cartesian,
    chang,
    clebsch,
    complement,
    complete,
    copies,
    cycle,
    disjoint_union,
    double,
    empty,
    from_edge_list,
    grid,
    hoffman_singleton,
    is_connected,
    join,
    lex_k2,
    line_graph,
    path,
    petersen,
    random_connected,
    regularity,
    schlafli,
    seidel_switch,
    shrikhande,
    srg_parameters,
    triangular,
)
from .metric import (
    DisconnectedGraphError,
    diameter,
    distance_from_adjacency_diam2,
    distance_matrix,
    has_diameter_at_most_2,
)
from .spectral import (
    EigensolverError,
    Spectrum,
    adjacency_spectrum,
    distance_spectrum,
    group_values,
    lambda_min,
    sym_eigenvalues,
    sym_eigh,
)

__version__ = "0.1.0"

__all__ = [
    "MethodDisagreementError",
    "QecResult",
    "StationaryPoint",
    "ones_complement_basis",
    "qec",
    "qec_compression",
    "qec_diam2",
    "qec_regular_diam2",
    "qec_stationary",
    "stationary_points",
    "Atom",
    "Cartesian",
    "Complement",
    "Copies",
    "Double",
    "ExprEvalError",
    "ExprSyntaxError",
    "FromFile",
    "GraphExpr",
    "Join",
    "Lex2",
    "Line",
    "Union",
    "eval_expr",
    "match_formula",
    "parse",
    "render",
    "FormulaValue",
    "lambda_min_complete",
    "lambda_min_cycle",
    "lambda_min_empty",
    "qec_complete",
    "qec_complete_bipartite",
    "qec_complete_split",
    "qec_cycle",
    "qec_cycle_join_complete",
    "qec_cycle_join_empty",
    "qec_double_formula",
    "qec_friendship",
    "qec_join_regular",
    "qec_lex2_formula",
    "qec_srg",
    "qec_srg_join_tables",
    "qec_wheel",
    "srg_lambda_min",
    "MAX_VERTICES",
    "EdgeListError",
    "Graph",
    "OversizeGraphError",
    "SrgParams",
    "cartesian",
    "chang",
    "clebsch",
    "complement",
    "complete",
    "copies",
    "cycle",
    "disjoint_union",
    "double",
    "empty",
    "from_edge_list",
    "grid",
    "hoffman_singleton",
    "is_connected",
    "join",
    "lex_k2",
    "line_graph",
    "path",
    "petersen",
    "random_connected",
    "regularity",
    "schlafli",
    "seidel_switch",
    "shrikhande",
    "srg_parameters",
    "triangular",
    "DisconnectedGraphError",
    "diameter",
    "distance_from_adjacency_diam2",
    "distance_matrix",
    "has_diameter_at_most_2",
    "EigensolverError",
    "Spectrum",
    "adjacency_spectrum",
    "distance_spectrum",
    "group_values",
    "lambda_min",
    "sym_eigenvalues",
    "sym_eigh",
    "__version__",
]
