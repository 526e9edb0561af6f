"""Exact rational engine for factorization homology of 1-manifolds and model manifolds."""
from .algebra import (
    GradedSpacePresentation,
    WgAlgebra,
    algebra_tensor,
    enveloping,
    enveloping_n,
    opposite,
    sym_algebra,
    tensor_algebra,
    truncated_polynomial,
)
from .bar import WgModule, bar, cyclic_bar, hochschild_via_bimodule, relative_tensor, two_sided_bar
from .complexes import BettiTable, BigradedSpace, ChainComplex, DimTable, dual, homology, shift, tensor
from .excision import check_independence, evaluate, parse_gluing
from .freeconf import check_bar_free, check_splits, conf_labeled_homology, free_en_dims
from .higher_hh import FiniteSimplicialSet, builtin_model, space_tensor
from .lie import WgLieAlgebra, ce_chains, ce_cochains, free_lie, mapping_lie
from .linalg import SparseMatrix, kernel_basis, quotient_dim, rank

__version__ = "0.1.0"
