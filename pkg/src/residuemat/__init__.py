"""residuemat: power residue symbols over F_q[t] and the matrices they realize.

The library computes d-th power residue symbols of polynomials over finite
fields, assembles residue matrices for tuples of monic irreducibles,
decides which cyclotomic sign matrices are realizable as residue matrices,
and constructs realizing tuples.  See the module docstrings for the
mathematics; the `residuemat` console script exposes everything for batch
use.
"""

from .field_core import (
    DEFAULT_MAX_Q,
    Field,
    RootIndex,
    field_build,
    index_to_element,
    is_prime,
    root_index_of,
    unit_scalings,
)
from .matrix_class import (
    ODD_LAW,
    SYMMETRIC_LAW,
    Classification,
    CycMatrix,
    EquivReport,
    check_block_form,
    classify,
    conjugate_by_permutation,
    criteria_equiv_bruteforce,
    epsilon,
    format_matrix,
    iter_all_matrices,
    mmbar_diagonal,
    parse_matrix,
    scale_indices,
)
from .poly_ring import (
    NEG_INF,
    Poly,
    constant,
    count_monic_irreducibles,
    divrem,
    enumerate_monic,
    format_poly,
    from_code,
    gcd,
    is_irreducible,
    mod_pow,
    monic_from_code,
    monic_irreducibles,
    norm,
    one,
    parse_poly,
    to_code,
    variable,
    zero,
)
from .realize import (
    NoneFoundAtDegreeError,
    NotCoprimeError,
    NotRealizableError,
    Realization,
    RealizeError,
    RealizeOptions,
    ResourceExhaustedError,
    choose_residue_with_symbol,
    crt_combine,
    find_irreducible_in_class,
    realize,
)
from .residue_symbol import (
    ReciprocityReport,
    SymbolContext,
    SymbolStructureReport,
    reciprocity_index,
    residue_matrix,
    symbol,
    verify_reciprocity,
    verify_symbol_structure,
)

__version__ = "1.0.0"

__all__ = [
    "DEFAULT_MAX_Q",
    "Field",
    "RootIndex",
    "field_build",
    "index_to_element",
    "is_prime",
    "root_index_of",
    "unit_scalings",
    "ODD_LAW",
    "SYMMETRIC_LAW",
    "Classification",
    "CycMatrix",
    "EquivReport",
    "check_block_form",
    "classify",
    "conjugate_by_permutation",
    "criteria_equiv_bruteforce",
    "epsilon",
    "format_matrix",
    "iter_all_matrices",
    "mmbar_diagonal",
    "parse_matrix",
    "scale_indices",
    "NEG_INF",
    "Poly",
    "constant",
    "count_monic_irreducibles",
    "divrem",
    "enumerate_monic",
    "format_poly",
    "from_code",
    "gcd",
    "is_irreducible",
    "mod_pow",
    "monic_from_code",
    "monic_irreducibles",
    "norm",
    "one",
    "parse_poly",
    "to_code",
    "variable",
    "zero",
    "NoneFoundAtDegreeError",
    "NotCoprimeError",
    "NotRealizableError",
    "Realization",
    "RealizeError",
    "RealizeOptions",
    "ResourceExhaustedError",
    "choose_residue_with_symbol",
    "crt_combine",
    "find_irreducible_in_class",
    "realize",
    "ReciprocityReport",
    "SymbolContext",
    "SymbolStructureReport",
    "reciprocity_index",
    "residue_matrix",
    "symbol",
    "verify_reciprocity",
    "verify_symbol_structure",
]
