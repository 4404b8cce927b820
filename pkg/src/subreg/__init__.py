"""Large 2-regular subgraphs of subcubic multigraphs, with certified bounds."""

from .extract import (
    BoundCertificate,
    TwoRegularSubgraph,
    bound_omitted,
    classify_equality,
    extract,
)
from .multigraph import Multigraph, parse_multigraph, serialize_multigraph

__all__ = [
    "BoundCertificate",
    "Multigraph",
    "TwoRegularSubgraph",
    "bound_omitted",
    "classify_equality",
    "extract",
    "parse_multigraph",
    "serialize_multigraph",
]

__version__ = "0.1.0"
