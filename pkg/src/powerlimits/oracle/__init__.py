"""Brute-force ground truth over explicit finite fields and matrix groups."""

from .census import CensusCounts, abelian_census, census
from .field import FiniteField, make_field
from .groups import GroupElement, encode_matrix, enumerate_group, predicted_order
from .linalg import char_poly, classify_matrix, min_poly


def classify(g: GroupElement) -> dict[str, bool]:
    rs, ss, rg = classify_matrix(g.field, g.matrix, g.n)
    return {"is_rs": rs, "is_ss": ss, "is_rg": rg}


__all__ = [
    "CensusCounts",
    "FiniteField",
    "GroupElement",
    "abelian_census",
    "census",
    "char_poly",
    "classify",
    "classify_matrix",
    "encode_matrix",
    "enumerate_group",
    "make_field",
    "min_poly",
    "predicted_order",
]
