"""Exact limiting proportions of M-th powers in finite reductive groups."""

from .asymptotics import (
    abelian_power_ratio,
    is_surjective,
    limit_proportion,
    limit_proportion_residue,
    subsequential_limits,
)
from .partitions import Partition, centralizer_order, enumerate_partitions, pi_a, pi_prime_a
from .qpoly import QPoly, gcd_with_M_at, gcd_with_M_residue
from .tori import GroupFamily, TorusClass, load_custom_tori, torus_classes

__version__ = "0.1.0"

__all__ = [
    "GroupFamily",
    "Partition",
    "QPoly",
    "TorusClass",
    "abelian_power_ratio",
    "centralizer_order",
    "enumerate_partitions",
    "gcd_with_M_at",
    "gcd_with_M_residue",
    "is_surjective",
    "limit_proportion",
    "limit_proportion_residue",
    "load_custom_tori",
    "pi_a",
    "pi_prime_a",
    "subsequential_limits",
    "torus_classes",
]
