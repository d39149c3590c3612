"""Inner products, orthogonal projection and the decomposition engine."""

from src.inner_products.decompose import Decomposition, decompose, decomposition_to_dict, verify_orthogonality
from src.inner_products.inner import (
    PRESETS,
    InnerProduct,
    candogan_ip,
    inner,
    project,
    projector,
    squared_norm,
    standard_ip,
    weight_from_descriptor,
)
from src.inner_products.schemes import Scheme, SchemeName, build_scheme, parse_scheme

__all__ = [
    "PRESETS",
    "Decomposition",
    "InnerProduct",
    "Scheme",
    "SchemeName",
    "build_scheme",
    "candogan_ip",
    "decompose",
    "decomposition_to_dict",
    "inner",
    "parse_scheme",
    "project",
    "projector",
    "squared_norm",
    "standard_ip",
    "verify_orthogonality",
    "weight_from_descriptor",
]
