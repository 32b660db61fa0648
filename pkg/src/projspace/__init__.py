"""Exact subspace codes over finite fields: linear codes in projective space."""

from .enumeration import enumerate_grassmannian, enumerate_projective_space, gaussian_binomial
from .field import FieldElement, FieldSpec, field_from_order, field_make
from .linear_code import (
    AxiomReport,
    LinearCode,
    boolean_lattice_isomorphism,
    derive_from_basis,
    dimension_profile,
    is_derived_from_fixed_basis,
    one_dimensional_codewords,
    phi_map,
    verify_linear,
)
from .search import (
    CrossFamilyInstance,
    SearchConfig,
    enumerate_linear_codes,
    extract_cross_family,
    max_linear_code_with_full_space,
    verify_lovasz,
    verify_nonlinearity_of_full_projective_space,
)
from .subspace import AmbientSpace, Subspace, span, subspace_distance, subspace_intersect, subspace_sum

__all__ = [
    "AmbientSpace",
    "AxiomReport",
    "CrossFamilyInstance",
    "FieldElement",
    "FieldSpec",
    "LinearCode",
    "SearchConfig",
    "Subspace",
    "boolean_lattice_isomorphism",
    "derive_from_basis",
    "dimension_profile",
    "enumerate_grassmannian",
    "enumerate_linear_codes",
    "enumerate_projective_space",
    "extract_cross_family",
    "field_from_order",
    "field_make",
    "gaussian_binomial",
    "is_derived_from_fixed_basis",
    "max_linear_code_with_full_space",
    "one_dimensional_codewords",
    "phi_map",
    "span",
    "subspace_distance",
    "subspace_intersect",
    "subspace_sum",
    "verify_linear",
    "verify_lovasz",
    "verify_nonlinearity_of_full_projective_space",
]
