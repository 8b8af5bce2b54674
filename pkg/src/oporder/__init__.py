"""Partial orders of complex matrices: decisions, certificates, constructions.

The package decides the loewner, space, left-star, right-star, star, minus,
diamond and plus relations between dense complex matrices, cross-checks
every characterization route, constructs matrices above a given one in each
order, computes bilateral shorted operators and geometric means, analyzes
polar factors, and renders Hasse diagrams. The `oporder` console script
exposes all of it on files in a small JSON matrix format.
"""

from .core import (
    BlockDecomposition,
    DEFAULT_TOL,
    MatrixClass,
    NotPSDError,
    PolarParts,
    ShapeError,
    Tolerance,
    block_decompose,
    classify,
    matrix_rank,
    oblique_projection,
    pinv,
    polar,
    proj_range,
    psd_sqrt,
    range_included,
    spectral_norm,
)
from .orders import (
    ChainViolation,
    DEFAULT_PLUS_CFG,
    OrderKind,
    OrderReport,
    PlusSearchConfig,
    Route,
    SandwichWitness,
    WitnessError,
    Witnesses,
    check,
    diamond_routes,
    equation_routes,
    find_sandwich_witness,
    implication_chain,
    minus_routes,
    star_routes,
    witness_to_inner_inverse,
)
from .shorted import (
    NotComplementableError,
    NotWeaklyComplementableError,
    ShortedResult,
    SubspacePair,
    complementability,
    diamond_via_shorted,
    schur_complement_corner,
    shorted_operator,
)
from .means import (
    BSingularError,
    BTNotHermitianError,
    SingularMeanWarning,
    geometric_mean,
    riccati_residual,
    riccati_solve,
)
from .generators import (
    DiamondPsdParams,
    GenSpec,
    extract_diamond_psd_params,
    extract_minus_params,
    gen_diamond_psd,
    gen_diamond_psd_ambient,
    gen_left_star,
    gen_minus,
    gen_plus,
    gen_star,
    generate,
    random_oblique_projection,
    random_orth_projection,
    random_partial_isometry,
)
from .factors import (
    InvariantViolation,
    NotPPError,
    NotPartialIsometryError,
    PolarTransferReport,
    QQFactorization,
    ReweightReport,
    isometry_order_coincidence,
    partial_converse_modulus,
    polar_order_transfer,
    pp_diamond,
    pp_membership,
    qq_minus_to_plus,
    qq_plus_to_minus,
    random_qq_factorization,
    reweight_to_diamond,
)
from .hasse import (
    AntisymmetryError,
    Edge,
    HasseGraph,
    build_hasse,
    to_dot,
    transitive_closure,
    transitive_reduction,
)
from .io import MatrixFileError, dumps_matrix, loads_matrix, read_matrix, write_matrix
from .verify import SUITES, SuiteResult, run_all, run_suite

__version__ = "0.1.0"

__all__ = [
    "AntisymmetryError",
    "BlockDecomposition",
    "BSingularError",
    "BTNotHermitianError",
    "ChainViolation",
    "DEFAULT_PLUS_CFG",
    "DEFAULT_TOL",
    "DiamondPsdParams",
    "Edge",
    "GenSpec",
    "HasseGraph",
    "InvariantViolation",
    "MatrixClass",
    "MatrixFileError",
    "NotComplementableError",
    "NotPPError",
    "NotPSDError",
    "NotPartialIsometryError",
    "NotWeaklyComplementableError",
    "OrderKind",
    "OrderReport",
    "PlusSearchConfig",
    "PolarParts",
    "PolarTransferReport",
    "QQFactorization",
    "ReweightReport",
    "Route",
    "SUITES",
    "SandwichWitness",
    "ShapeError",
    "ShortedResult",
    "SingularMeanWarning",
    "SubspacePair",
    "SuiteResult",
    "Tolerance",
    "WitnessError",
    "Witnesses",
    "block_decompose",
    "build_hasse",
    "check",
    "classify",
    "complementability",
    "diamond_routes",
    "diamond_via_shorted",
    "dumps_matrix",
    "equation_routes",
    "extract_diamond_psd_params",
    "extract_minus_params",
    "find_sandwich_witness",
    "gen_diamond_psd",
    "gen_diamond_psd_ambient",
    "gen_left_star",
    "gen_minus",
    "gen_plus",
    "gen_star",
    "generate",
    "geometric_mean",
    "implication_chain",
    "isometry_order_coincidence",
    "loads_matrix",
    "matrix_rank",
    "minus_routes",
    "oblique_projection",
    "partial_converse_modulus",
    "pinv",
    "polar",
    "polar_order_transfer",
    "pp_diamond",
    "pp_membership",
    "proj_range",
    "psd_sqrt",
    "qq_minus_to_plus",
    "qq_plus_to_minus",
    "random_oblique_projection",
    "random_orth_projection",
    "random_partial_isometry",
    "random_qq_factorization",
    "range_included",
    "read_matrix",
    "reweight_to_diamond",
    "riccati_residual",
    "riccati_solve",
    "run_all",
    "run_suite",
    "schur_complement_corner",
    "shorted_operator",
    "spectral_norm",
    "star_routes",
    "to_dot",
    "transitive_closure",
    "transitive_reduction",
    "witness_to_inner_inverse",
    "write_matrix",
]
