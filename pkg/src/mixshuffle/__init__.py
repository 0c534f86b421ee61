"""Exact computations in shuffle, quasi-shuffle and mixable shuffle algebras.

Words are tuples of :class:`Letter`; linear combinations are :class:`Element`
with exact rational coefficients.
"""
from .errors import AlgebraError
from .kernel import (
    EMPTY, UNIT, ZERO, Alphabet, Element, Letter, bracket, canonical_serialize,
    check_hoffman_axioms, element_add, element_scale, element_sub, load_alphabet,
    make_alphabet, parse_alphabet, parse_element,
)
from .products import (
    augmented_product, enumerate_mixable_shuffles, enumerate_shuffles, mixable_product,
    mixable_shuffle_explicit, mixable_shuffle_recursive, quasi_shuffle, quasi_shuffle_product,
    shuffle_explicit, shuffle_product, shuffle_recursive,
)
from .rota_baxter import P_A, P_v, check_rota_baxter, embed_alpha, embed_beta, gamma, gamma_plus
from .hopf import antipode, check_bialgebra, convolve, coproduct, counit, graded_dimension
from .structure import (
    check_linear_disjointness, check_linear_independence, check_one_shuffled_span, equivalent,
    f_tilde, g_rescale, one_shuffled, ssupp, unit_power_product,
)

__version__ = "0.1.0"

__all__ = [
    "AlgebraError", "EMPTY", "UNIT", "ZERO", "Alphabet", "Element", "Letter", "bracket",
    "canonical_serialize", "check_hoffman_axioms", "element_add", "element_scale", "element_sub",
    "load_alphabet", "make_alphabet", "parse_alphabet", "parse_element",
    "augmented_product", "enumerate_mixable_shuffles", "enumerate_shuffles", "mixable_product",
    "mixable_shuffle_explicit", "mixable_shuffle_recursive", "quasi_shuffle", "quasi_shuffle_product",
    "shuffle_explicit", "shuffle_product", "shuffle_recursive",
    "P_A", "P_v", "check_rota_baxter", "embed_alpha", "embed_beta", "gamma", "gamma_plus",
    "antipode", "check_bialgebra", "convolve", "coproduct", "counit", "graded_dimension",
    "check_linear_disjointness", "check_linear_independence", "check_one_shuffled_span", "equivalent",
    "f_tilde", "g_rescale", "one_shuffled", "ssupp", "unit_power_product",
]
