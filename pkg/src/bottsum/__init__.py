"""Topological invariants of circle actions from their fixed-point data."""

from .actiondata import (
    CircleActionData,
    IsolatedFixedPoint,
    ManifoldInvariants,
    SurfaceComponent,
    cp_action,
    parse,
    serialize,
    sphere_action,
    validate,
)
from .exactalg import Partition, PontryaginPolynomial, elementary_symmetric, evaluate, l_genus, partitions_of
from .localize import (
    euler_number,
    invariants,
    pontryagin_number,
    signature,
    vanishing_sum,
    verify_fixed_surface_signature,
    verify_isolated_singularities,
)
from .obstruct import catalog, check_domain, combine_connected_sum, combine_product
from .surgery import blow_up, bookkeeping, connected_sum

__version__ = "0.1.0"

__all__ = [
    "CircleActionData", "IsolatedFixedPoint", "ManifoldInvariants", "SurfaceComponent",
    "cp_action", "parse", "serialize", "sphere_action", "validate",
    "Partition", "PontryaginPolynomial", "elementary_symmetric", "evaluate", "l_genus", "partitions_of",
    "euler_number", "invariants", "pontryagin_number", "signature", "vanishing_sum",
    "verify_fixed_surface_signature", "verify_isolated_singularities",
    "catalog", "check_domain", "combine_connected_sum", "combine_product",
    "blow_up", "bookkeeping", "connected_sum",
]
