"""reduction-atlas: a compendium engine for problems and reductions.

Ingests a structured-Markdown corpus, validates it, and serves
searchable, filterable network graphs over a JSON HTTP API.
"""

from .model import FilterSpec, NetworkManifest, Problem, Reduction
from .store import Snapshot, SnapshotStore, ingest, network_graph, problem_detail, reduction_detail, search
from .validator import ValidationReport, validate_corpus, validate_file

__version__ = "0.1.0"

__all__ = [
    "FilterSpec",
    "NetworkManifest",
    "Problem",
    "Reduction",
    "Snapshot",
    "SnapshotStore",
    "ValidationReport",
    "ingest",
    "network_graph",
    "problem_detail",
    "reduction_detail",
    "search",
    "validate_corpus",
    "validate_file",
    "__version__",
]
