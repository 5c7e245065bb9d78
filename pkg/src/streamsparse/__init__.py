"""One-pass cut sparsification of edge streams by strength-based sampling."""

from .graph import (
    Cut,
    DomainError,
    Edge,
    Graph,
    RefusalError,
    connected_components,
    cut_value,
    enumerate_cuts,
    min_cut,
    total_weight,
)
from .kernels import backend
from .offline import SampleDecision, sparsify_offline
from .stream import SparsifierState, SparsifyConfig, ingest, resolve_rho, run_stream, space_report
from .strength import (
    StrengthMap,
    k_strong_components,
    strength_brute,
    strength_certificate,
    strength_exact,
)

__version__ = "0.1.0"
