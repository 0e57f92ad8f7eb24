"""Computational tools for finite skew braces.

Core objects are Cayley tables over elements 0..n-1: GroupTable for a single
operation, SkewBrace for a compatible pair (dot, circ).  On top of those the
package provides word evaluation, verbal and marginal constructions, the
standard descending and annihilator series, isoclinism searches, a catalog of
example braces, and bounded enumeration of all braces on a small group.
"""

from .brace import (
    BraceMorphism,
    BraceSubset,
    QuotientBrace,
    SkewBrace,
    brace_commutator_LV,
    brace_isomorphisms,
    classify_subset,
    ideal_closure,
    is_two_sided,
    lambda_image_normalized_by_inn,
    quotient_brace,
    star,
    star_closure,
    validate_brace,
)
from .catalog import (
    CatalogEntry,
    brace_2_4,
    brace_p_cubed,
    brace_p_p2,
    c2,
    catalog_brace,
    catalog_names,
    enumerate_braces_on,
    opposite_trivial_brace,
    search_strict_verbal_inclusion,
    trivial_brace,
)
from .errors import SkewBraceError
from .fileio import LoadedStructure, load_structure, save_structure
from .groups import (
    GroupTable,
    Morphism,
    are_isomorphic,
    group_automorphisms,
    group_isomorphisms,
    group_n_isoclinism,
    lower_central_series,
    quotient_group,
    upper_central_series,
    validate_group,
)
from .groups_catalog import named_group, small_groups
from .isoclinism import (
    IsoclinismWitness,
    coincidence_check_W1,
    lv_isoclinic,
    verify_w_isoclinism,
    w_isoclinism_search,
)
from .series import (
    SeriesReport,
    annihilator,
    annihilator_series,
    condition_4_2_check,
    left_series,
    right_series,
    verbal_left_series,
    verbal_right_series,
)
from .words import (
    WordCollection,
    core_of,
    eval_word,
    family,
    iterate_word_family,
    marginal_left_ideal,
    marginal_subgroup,
    parse_word,
    verbal_sub_skew_brace,
    verbal_subgroup,
    word_values,
)

__version__ = "0.1.0"
