"""sgreflect: reflections of finite semigroups into idempotent subvarieties.

Computes variety reflections and their units, connected components, finite
limits, and decides the simple / semi-left-exact / stable-units /
localization properties of a reflection by theorem-based component checks
cross-validated against brute-force definitional oracles on exhaustively
enumerated corpora.
"""

__version__ = "0.1.0"

from .core import (
    FiniteSemigroup,
    Homomorphism,
    canonical_form,
    are_isomorphic,
    enumerate_homomorphisms,
    idempotents,
    is_homomorphism,
    validate_table,
)
from .congruence import Partition, congruence_closure, is_congruence, kernel, quotient
from .limits import ConeResult, is_terminal, point_map, product, pullback, terminal
from .reflection import (
    BAND_TO_SLAT,
    BUILTIN_VARIETIES,
    SGR_TO_BAND,
    SGR_TO_SLAT,
    ReflectionResult,
    VarietyConfig,
    check_condition_e,
    check_ground_conditions,
    factor_through_unit,
    parse_identity,
    reflect,
    reflect_morphism,
    satisfies_identities,
    variety_congruence,
)
from .galois import (
    ConnectedComponent,
    PropertyReport,
    check_localization_condition,
    check_products_preserved,
    check_semi_left_exact,
    check_simple,
    check_stable_units_pair,
    connected_component,
    connected_components,
    fiber_injectivity_lemma,
    is_connected,
    oracle_pullback_preserved,
    oracle_semi_left_exact,
    oracle_stable_units,
)
from .enumeration import Corpus, SurveyResult, enumerate_semigroups, survey

__all__ = [
    "__version__",
    "FiniteSemigroup", "Homomorphism", "canonical_form", "are_isomorphic",
    "enumerate_homomorphisms", "idempotents", "is_homomorphism", "validate_table",
    "Partition", "congruence_closure", "is_congruence", "kernel", "quotient",
    "ConeResult", "is_terminal", "point_map", "product", "pullback", "terminal",
    "BAND_TO_SLAT", "BUILTIN_VARIETIES", "SGR_TO_BAND", "SGR_TO_SLAT",
    "ReflectionResult", "VarietyConfig", "check_condition_e",
    "check_ground_conditions", "factor_through_unit", "parse_identity",
    "reflect", "reflect_morphism", "satisfies_identities", "variety_congruence",
    "ConnectedComponent", "PropertyReport", "check_localization_condition",
    "check_products_preserved", "check_semi_left_exact", "check_simple",
    "check_stable_units_pair", "connected_component", "connected_components",
    "fiber_injectivity_lemma", "is_connected", "oracle_pullback_preserved",
    "oracle_semi_left_exact", "oracle_stable_units",
    "Corpus", "SurveyResult", "enumerate_semigroups", "survey",
]
