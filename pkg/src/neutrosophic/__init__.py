"""Neutrosophic entropy and the hepta-valued partition of neutrosophic information."""
from .core import (
    DEFAULT_TOL,
    DerivedIndices,
    DomainError,
    InformationKind,
    KindMismatch,
    NeutrosophicTriple,
    UnsupportedKind,
    classify,
    derive_indices,
    from_fuzzy,
    from_intuitionistic,
    make_triple,
)
from .decomposition import (
    COMPONENTS,
    HeptaDecomposition,
    decompose,
    decompose_by_cases,
    reduced_partition,
)
from .entropy import EntropyBreakdown, EntropyVariant, distances, entropy, entropy_reduced

__version__ = "0.1.0"
