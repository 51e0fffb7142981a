"""Exceptional sequences and c-matrices of the linearly ordered A_n quiver.

Mutation indices are 1-based; interval modules are pairs (i, j) with 0 <= i < j <= n.
"""

from ._core import (
    BoundExceededError,
    MatrixOverflowError,
    PreconditionError,
    cmatrices,
    count_ces,
    count_maximal_nc_chains,
    ext_dim,
    framed_matrix,
    hom_dim,
    is_cmatrix,
    is_exceptional_sequence,
    mutate,
    mutate_path,
    permutations,
    tree_leaf_distribution,
    verify,
)

__all__ = [
    "BoundExceededError",
    "MatrixOverflowError",
    "PreconditionError",
    "cmatrices",
    "count_ces",
    "count_maximal_nc_chains",
    "ext_dim",
    "framed_matrix",
    "hom_dim",
    "is_cmatrix",
    "is_exceptional_sequence",
    "mutate",
    "mutate_path",
    "permutations",
    "tree_leaf_distribution",
    "verify",
]
