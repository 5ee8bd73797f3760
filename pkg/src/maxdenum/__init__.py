"""Maximal denumerants of numerical semigroups.

``maxdenum.semigroup`` holds the semigroup type, factorization enumeration and
the general maximal-denumerant scan that works for any number of generators.
``maxdenum.embdim3`` holds the closed forms for three generators, the
classification of basic semigroups and multiplicity tables.  ``maxdenum.cli``
is the command line front end (``maxdenum`` or ``python -m maxdenum``).
"""

from .errors import (
    EmptyGenerators,
    GcdNotOne,
    IsAllOfN,
    NonPositiveGenerator,
    NotAMember,
    NotBasic,
    NotSorted,
    Overflow,
    SemigroupError,
    WrongEmbeddingDimension,
)
from .semigroup import (
    DmaxResult,
    Factorization,
    NumericalSemigroup,
    ReducedElementReport,
    apery_set,
    contains,
    denumerant,
    dmax_element,
    dmax_semigroup_general,
    factorizations,
    frobenius_number,
    is_maximally_reduced,
    max_length,
    maximal_factorizations,
    maximally_reduced_elements,
    new_semigroup,
    reduce_to_maximally_reduced,
)
from .embdim3 import (
    BasicClassification,
    BezoutPair,
    GmnForm,
    ReducedStructure,
    TableRow,
    all_methods,
    bezout,
    ceil_div,
    classify_basic,
    dmax_bezout,
    dmax_ceiling,
    dmax_min_h,
    dmax_triple,
    gmn_decompose,
    is_basic,
    multiplicity_table,
    reduced_structure,
    two_gen_contains,
)

__version__ = "0.1.0"
