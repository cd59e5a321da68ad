"""Exact arithmetic for lattice basis quality and index theory.

A lattice is given by the Gram matrix of a basis, with entries in Q.
The package computes the minimal basis norm product H_b, the Minkowski
product M, their ratio Q_b = H_b / M, the maximal index of a family of
minimal vectors together with the quotient group it generates, and the
closed form bounds that control these quantities in low rank.  All of
it is exact: no floats, every certificate is a rational identity.
"""

from .bounds import (
    BoundContext,
    context_from,
    conjectured_bound,
    crude_bound,
    hermite_Hb_bound,
    index3_psi_bound,
    index3_sum_identity,
    index4_m5_bound,
    norm_e_index2_bound,
    step_bound,
    tuvw_bounds,
    vdw_bound,
)
from .codes import (
    Code,
    WeightDistribution,
    canonical_form,
    classify_binary,
    code_qb_bound,
    dump_code_text,
    equivalent,
    min_weight_support,
    parse_code_text,
    weight_distribution,
)
from .construct import (
    NamedLattice,
    centred_cubic,
    code_lift,
    fixture_inventory,
    fixture_path,
    named,
    search_corpus,
    zd_lift,
    zn,
)
from .core import (
    HERMITE_POWER,
    GramLattice,
    InvariantReport,
    Surd,
    determinant,
    dump_lattice_json,
    dump_lattice_text,
    inner,
    load_lattice,
    norm,
    parse_lattice_json,
    parse_lattice_text,
    qform,
)
from .enumeration import (
    Frame,
    ShellListing,
    invariant_report,
    is_well_rounded,
    minimum,
    minkowski_M,
    node_budget,
    successive_minima,
    vectors_up_to,
)
from .errors import (
    CodeTooLight,
    DimensionMismatch,
    LatquotError,
    MinimumDrops,
    NotGenerating,
    NotPositiveDefinite,
    NotSymmetric,
    ParseError,
    ResourceExceeded,
    UnknownLattice,
)
from .quality import QualityReport, hermite_Hb, qb, qg_upper_bound
from .reduction import ReducedBasis, lll
from .verify import VerificationCase, run_suite
from .watson import (
    CosetVector,
    IndexReport,
    QuotientStructure,
    extract_code,
    maximal_index,
    quotient_generators,
    quotient_structure,
    watson_condition,
    watson_identity,
    watson_index_bound,
)

__version__ = "0.1.0"

__all__ = [
    "BoundContext",
    "Code",
    "CodeTooLight",
    "CosetVector",
    "DimensionMismatch",
    "Frame",
    "GramLattice",
    "HERMITE_POWER",
    "IndexReport",
    "InvariantReport",
    "LatquotError",
    "MinimumDrops",
    "NamedLattice",
    "NotGenerating",
    "NotPositiveDefinite",
    "NotSymmetric",
    "ParseError",
    "QualityReport",
    "QuotientStructure",
    "ReducedBasis",
    "ResourceExceeded",
    "ShellListing",
    "Surd",
    "UnknownLattice",
    "VerificationCase",
    "WeightDistribution",
    "canonical_form",
    "centred_cubic",
    "classify_binary",
    "code_lift",
    "code_qb_bound",
    "conjectured_bound",
    "context_from",
    "crude_bound",
    "determinant",
    "dump_code_text",
    "dump_lattice_json",
    "dump_lattice_text",
    "equivalent",
    "extract_code",
    "fixture_inventory",
    "fixture_path",
    "hermite_Hb",
    "hermite_Hb_bound",
    "index3_psi_bound",
    "index3_sum_identity",
    "index4_m5_bound",
    "inner",
    "invariant_report",
    "is_well_rounded",
    "lll",
    "load_lattice",
    "maximal_index",
    "min_weight_support",
    "minimum",
    "minkowski_M",
    "named",
    "node_budget",
    "norm",
    "norm_e_index2_bound",
    "parse_code_text",
    "parse_lattice_json",
    "parse_lattice_text",
    "qb",
    "qform",
    "qg_upper_bound",
    "quotient_generators",
    "quotient_structure",
    "run_suite",
    "search_corpus",
    "step_bound",
    "successive_minima",
    "tuvw_bounds",
    "vdw_bound",
    "vectors_up_to",
    "watson_condition",
    "watson_identity",
    "watson_index_bound",
    "weight_distribution",
    "zd_lift",
    "zn",
]
