"""Exact arithmetic over small finite fields: combinatorial degree of maps,
binary codes of prescribed divisibility level, and the code loops they
carry.  See the individual modules for the representation conventions."""

from .field import Field, FieldElement, is_prime
from .poly import (
    INTERPOLATION_CAP,
    PolyParseError,
    ReducedPoly,
    SubsetFamily,
    enumerate_points,
    fold_exponent,
    format_poly,
    from_complemented_anf,
    interpolate,
    parse_poly,
    reduce_poly,
    to_complemented_anf,
    value_table_from_json,
    value_table_to_json,
)
from .polarization import (
    INFINITY,
    RegularChain,
    comb_degree_formula,
    comb_degree_oracle,
    derived_form_eval,
    derived_form_recursive,
    longest_regular_chain,
    lucas_binomial,
    monomial_coeff,
    monomial_p_weight,
    multiexp_lt,
    p_weight,
)
from .codes import (
    SIMPLEX_PRESETS,
    BinaryCode,
    CodeBuild,
    build_code,
    codeword_from_str,
    codeword_to_str,
    gf2_basis,
    gf2_rank,
    intersection,
    level_of_rows,
    prescribe_cg,
    simplex_code,
    verify_build,
    weight,
    weight_congruence,
    weight_distribution,
)
from .loops import (
    CodeLoop,
    EtaTable,
    is_moufang,
    latin_square_report,
    loop_mul,
    loop_to_json,
    p_from_loop,
    solve_eta,
    verify_loop_identities,
)

__version__ = "0.1.0"

__all__ = [
    "Field",
    "FieldElement",
    "is_prime",
    "INTERPOLATION_CAP",
    "PolyParseError",
    "ReducedPoly",
    "SubsetFamily",
    "enumerate_points",
    "fold_exponent",
    "format_poly",
    "from_complemented_anf",
    "interpolate",
    "parse_poly",
    "reduce_poly",
    "to_complemented_anf",
    "value_table_from_json",
    "value_table_to_json",
    "INFINITY",
    "RegularChain",
    "comb_degree_formula",
    "comb_degree_oracle",
    "derived_form_eval",
    "derived_form_recursive",
    "longest_regular_chain",
    "lucas_binomial",
    "monomial_coeff",
    "monomial_p_weight",
    "multiexp_lt",
    "p_weight",
    "SIMPLEX_PRESETS",
    "BinaryCode",
    "CodeBuild",
    "build_code",
    "codeword_from_str",
    "codeword_to_str",
    "gf2_basis",
    "gf2_rank",
    "intersection",
    "level_of_rows",
    "prescribe_cg",
    "simplex_code",
    "verify_build",
    "weight",
    "weight_congruence",
    "weight_distribution",
    "CodeLoop",
    "EtaTable",
    "is_moufang",
    "latin_square_report",
    "loop_mul",
    "loop_to_json",
    "p_from_loop",
    "solve_eta",
    "verify_loop_identities",
]
