"""Weighted Morse homotopy on the dual polytope of CP^n and its products,
with the monomial line-bundle model as an exact cross-check."""

from .exact import LogValue, PosExact, factorize
from .polytope import (FaceDescriptor, FactorFace, Location, ProductPolytope,
                       SimplexFactor, as_point, segment_contains)
from .lagrangian import hom_indices, magnitude_at, minus_grad, potential_value
from .category import (GradientTree2, HomGenerator, HomSpace,
                       NonComposableError, ScaledGenerator,
                       UnsupportedRegimeError, ZeroProduct,
                       associativity_check, boundary_report,
                       classify_product_case, compose, gradient_tree,
                       hom_space, identity_generator)
from .dg import (MonomialClass, NormalizedBasis, basis, exceptional_check,
                 hom_dimension, iota, multiply_bases, normalization_constant,
                 serre_rank, v_point)

__version__ = "0.1.0"

__all__ = [
    "LogValue", "PosExact", "factorize",
    "FaceDescriptor", "FactorFace", "Location", "ProductPolytope",
    "SimplexFactor", "as_point", "segment_contains",
    "hom_indices", "magnitude_at", "minus_grad", "potential_value",
    "GradientTree2", "HomGenerator", "HomSpace", "NonComposableError",
    "ScaledGenerator", "UnsupportedRegimeError", "ZeroProduct",
    "associativity_check", "boundary_report", "classify_product_case",
    "compose", "gradient_tree", "hom_space", "identity_generator",
    "MonomialClass", "NormalizedBasis", "basis", "exceptional_check",
    "hom_dimension", "iota", "multiply_bases", "normalization_constant",
    "serre_rank", "v_point",
]
