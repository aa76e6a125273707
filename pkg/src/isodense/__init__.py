"""Finite generalized topologies, specialization quasiorders and density predicates."""

from .errors import (
    CapExceeded,
    DocumentError,
    IsodenseError,
    NotAGeneralizedTopology,
    UndefinedIntersection,
    UnknownStatement,
)
from .ground import GroundSet, SetFamily, intersection_closure, union_closure
from .order import Quasiorder, quasiorder_from_family, specialization_topology
from .props import SpaceProfile, profile
from .topo import GenTopology, mu_of_family, mu_tilde_of_family

__version__ = "0.1.0"

__all__ = [
    "CapExceeded", "DocumentError", "IsodenseError", "NotAGeneralizedTopology",
    "UndefinedIntersection", "UnknownStatement",
    "GroundSet", "SetFamily", "intersection_closure", "union_closure",
    "Quasiorder", "quasiorder_from_family", "specialization_topology",
    "SpaceProfile", "profile",
    "GenTopology", "mu_of_family", "mu_tilde_of_family",
]
