"""Exact congruence testing for finite-index subgroups of SL2(Z).

Subgroups are given by the permutation action of L = [[1,0],[1,1]] and
R = [[1,1],[0,1]] on their cosets.
"""
from ._kernels import BACKEND
from .congruence import RelationSet, Verdict, exact_level, is_congruence, relation_set
from .errors import (
    BadAmalgam,
    BadBraid,
    BadOrder4,
    InvalidSubgroup,
    NotInvertible,
    NotTransitive,
    OracleTooLarge,
    PredicateNotSubgroup,
    RetryBudgetExhausted,
)
from .gen import enumerate_subgroups, random_subgroup
from .modgroup import (
    MatZ,
    SubgroupRep,
    canonicalize,
    contains_matrix,
    contains_word,
    cusp_data,
    decompose_matrix,
    intersect,
    is_even,
    validate,
)
from .permutation import Permutation, Word, evaluate_word
from .sl2zmod import gamma0, gamma1, gamma_full, oracle_factors_through

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "BadAmalgam",
    "BadBraid",
    "BadOrder4",
    "InvalidSubgroup",
    "MatZ",
    "NotInvertible",
    "NotTransitive",
    "OracleTooLarge",
    "Permutation",
    "PredicateNotSubgroup",
    "RelationSet",
    "RetryBudgetExhausted",
    "SubgroupRep",
    "Verdict",
    "Word",
    "canonicalize",
    "contains_matrix",
    "contains_word",
    "cusp_data",
    "decompose_matrix",
    "enumerate_subgroups",
    "evaluate_word",
    "exact_level",
    "gamma0",
    "gamma1",
    "gamma_full",
    "intersect",
    "is_congruence",
    "is_even",
    "oracle_factors_through",
    "random_subgroup",
    "relation_set",
    "validate",
]
