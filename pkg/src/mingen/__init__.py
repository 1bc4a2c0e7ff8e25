"""Cayley graphs of arbitrary subsets of finite groups, their components and
cosets, and grow-then-prune minimal generating sets."""

from .cayley import CayleyDigraph, CayleyGraph, build_digraph, build_graph, degree_stats, to_dot
from .components import (
    ComponentDecomposition,
    IsomorphismWitness,
    PathWord,
    component_count,
    decompose,
    identity_component,
    is_connected,
    path_witness,
    subgroup_graph_stats,
    translation_isomorphism,
    verify_coset_structure,
)
from .errors import (
    ContractError,
    DefectError,
    DomainError,
    MingenError,
    ParseError,
    ResourceError,
    UsageError,
    ValidationError,
)
from .genset import (
    GrowPruneTrace,
    MinGenResult,
    SelectionPolicy,
    connectors,
    explain_minimality,
    minimal_generating_set,
    rank_upper_bound,
)
from .group import FiniteGroup, Subgroup, closure, index, inverse, left_cosets, multiply
from .groupio import build_standard, builtin, parse_cayley_table, parse_permutation_generators
from .oracle import RankCertificate, is_generating, min_generating_set_bruteforce
from .validation import ValidationReport, validate

__version__ = "0.1.0"
