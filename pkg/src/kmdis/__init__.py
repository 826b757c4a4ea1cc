"""Counting and enumerating maximal distance-k independent sets in trees."""

from .families import FamilyDescriptor, add_closure, f, make, parse_descriptor
from .mdis import enumerate_mdis, mdi, mdi_star
from .tree_core import Graph, Tree
from .treegen import TreeStream, all_free_trees
from .verify import VerificationReport, check_lemma, sweep

__all__ = [
    "FamilyDescriptor",
    "Graph",
    "Tree",
    "TreeStream",
    "VerificationReport",
    "add_closure",
    "all_free_trees",
    "check_lemma",
    "enumerate_mdis",
    "f",
    "make",
    "mdi",
    "mdi_star",
    "parse_descriptor",
    "sweep",
]
