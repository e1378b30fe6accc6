"""Immutable corpus snapshots and the queries served from them.

``ingest`` builds a fully validated, indexed ``Snapshot``; queries
(graph/filter, search, detail lookups) are pure functions over one
snapshot. ``SnapshotStore`` holds the currently published snapshot and
swaps it atomically, so readers never see a mixture of corpus versions.
"""

from __future__ import annotations

import hashlib
import logging
import threading
from dataclasses import dataclass, field
from datetime import datetime, timezone
from pathlib import Path

from .model import FilterSpec, NetworkManifest, Problem, Reduction
from .model import RANK_EXACT_ALTERNATIVE, RANK_EXACT_NAME, RANK_PREFIX, RANK_SUBSTRING
from .validator import ValidationReport, _sorted_report, scan_corpus

log = logging.getLogger(__name__)


class StoreError(Exception):
    pass


class UnknownNetwork(StoreError):
    def __init__(self, network: str):
        super().__init__(f"unknown network: {network!r}")
        self.network = network


class UnknownProblem(StoreError):
    def __init__(self, slug: str):
        super().__init__(f"unknown problem: {slug!r}")
        self.slug = slug


class UnknownReduction(StoreError):
    def __init__(self, slug: str):
        super().__init__(f"unknown reduction: {slug!r}")
        self.slug = slug


class UnknownTag(StoreError):
    def __init__(self, tag: str, kind: str):
        super().__init__(f"unknown {kind} tag: {tag!r}")
        self.tag = tag
        self.kind = kind


class EmptyQuery(StoreError):
    def __init__(self):
        super().__init__("search query is empty")


class ValidationFailed(StoreError):
    def __init__(self, report: ValidationReport):
        super().__init__(f"corpus has {report.errors} validation error(s)")
        self.report = report


@dataclass(frozen=True)
class NetworkData:
    manifest: NetworkManifest
    problems: dict[str, Problem]
    reductions: dict[str, Reduction]
    outgoing: dict[str, tuple[str, ...]]  # problem slug -> reduction slugs, sorted
    incoming: dict[str, tuple[str, ...]]
    # (lowercased name, display name, problem slug, is_primary_name)
    name_index: tuple[tuple[str, str, str, bool], ...]


@dataclass(frozen=True)
class Snapshot:
    networks: dict[str, NetworkData]
    ingested_at: datetime
    corpus_digest: str

    def network(self, network_id: str) -> NetworkData:
        try:
            return self.networks[network_id]
        except KeyError:
            raise UnknownNetwork(network_id) from None


@dataclass(frozen=True)
class GraphNode:
    slug: str
    label: str
    tags: tuple[str, ...]


@dataclass(frozen=True)
class GraphEdge:
    slug: str
    from_slug: str
    to_slug: str
    tags: tuple[str, ...]


@dataclass(frozen=True)
class NetworkGraph:
    nodes: tuple[GraphNode, ...]
    edges: tuple[GraphEdge, ...]


@dataclass(frozen=True)
class SearchResult:
    slug: str
    matched_name: str
    rank_class: str


def compute_corpus_digest(root: Path | str) -> str:
    """Content hash over sorted (relative path, file hash) pairs."""
    root = Path(root)
    digest = hashlib.sha256()
    entries = []
    for path in root.rglob("*"):
        if path.is_file() and not path.name.startswith("."):
            rel = path.relative_to(root).as_posix()
            entries.append((rel, hashlib.sha256(path.read_bytes()).hexdigest()))
    for rel, file_hash in sorted(entries):
        digest.update(rel.encode("utf-8"))
        digest.update(b"\0")
        digest.update(file_hash.encode("ascii"))
        digest.update(b"\n")
    return digest.hexdigest()


def _build_network(manifest: NetworkManifest, problems: dict[str, Problem], reductions: dict[str, Reduction]) -> NetworkData:
    outgoing: dict[str, list[str]] = {slug: [] for slug in problems}
    incoming: dict[str, list[str]] = {slug: [] for slug in problems}
    for reduction in reductions.values():
        outgoing[reduction.from_problem].append(reduction.slug)
        incoming[reduction.to_problem].append(reduction.slug)

    name_index = []
    for problem in problems.values():
        name_index.append((problem.name.lower(), problem.name, problem.slug, True))
        for alt in problem.alternative_names:
            name_index.append((alt.lower(), alt, problem.slug, False))

    return NetworkData(
        manifest=manifest,
        problems=dict(sorted(problems.items())),
        reductions=dict(sorted(reductions.items())),
        outgoing={slug: tuple(sorted(slugs)) for slug, slugs in outgoing.items()},
        incoming={slug: tuple(sorted(slugs)) for slug, slugs in incoming.items()},
        name_index=tuple(name_index),
    )


def ingest(root: Path | str) -> Snapshot:
    """Validate and index the whole corpus; fails on any validation error."""
    root = Path(root)
    digest = compute_corpus_digest(root)
    scanned, findings = scan_corpus(root)
    report = _sorted_report(findings)
    if report.errors:
        raise ValidationFailed(report)
    networks = {
        network_id: _build_network(scan.manifest, scan.problems, scan.reductions)
        for network_id, scan in sorted(scanned.items())
    }
    return Snapshot(networks=networks, ingested_at=datetime.now(timezone.utc), corpus_digest=digest)


def _check_filter_tags(data: NetworkData, spec: FilterSpec):
    for tag in sorted(spec.problem_tags):
        if tag not in data.manifest.problem_tags:
            raise UnknownTag(tag, "problem")
    for tag in sorted(spec.reduction_tags):
        if tag not in data.manifest.reduction_tags:
            raise UnknownTag(tag, "reduction")


def network_graph(snapshot: Snapshot, network_id: str, spec: FilterSpec | None = None) -> NetworkGraph:
    """Filtered view of one network.

    Selected reduction tags combine conjunctively (an edge must carry all
    of them); a problem matches if its completeness intersects the
    selected problem tags. Kept nodes are the tag-matching problems plus
    the endpoints of every kept edge. With no reduction tags selected but
    problem tags active, only edges between tag-matching problems remain.
    """
    spec = spec or FilterSpec()
    data = snapshot.network(network_id)
    _check_filter_tags(data, spec)

    if spec.problem_tags:
        tagged = {slug for slug, problem in data.problems.items() if problem.completeness & spec.problem_tags}
    else:
        tagged = set(data.problems)

    if spec.reduction_tags:
        kept_edges = [r for r in data.reductions.values() if r.properties >= spec.reduction_tags]
    elif spec.problem_tags:
        kept_edges = [
            r for r in data.reductions.values()
            if r.from_problem in tagged and r.to_problem in tagged
        ]
    else:
        kept_edges = list(data.reductions.values())

    kept_nodes = tagged | {r.from_problem for r in kept_edges} | {r.to_problem for r in kept_edges}

    nodes = tuple(
        GraphNode(slug, data.problems[slug].abbreviation, tuple(sorted(data.problems[slug].completeness)))
        for slug in sorted(kept_nodes)
    )
    edges = tuple(
        GraphEdge(r.slug, r.from_problem, r.to_problem, tuple(sorted(r.properties)))
        for r in sorted(kept_edges, key=lambda r: r.slug)
    )
    return NetworkGraph(nodes=nodes, edges=edges)


def search(snapshot: Snapshot, network_id: str, query: str) -> list[SearchResult]:
    """Case-insensitive name/alternative-name lookup with rank classes."""
    data = snapshot.network(network_id)
    needle = query.strip().lower()
    if not needle:
        raise EmptyQuery()

    rank_order = {rank: i for i, rank in enumerate((RANK_EXACT_NAME, RANK_EXACT_ALTERNATIVE, RANK_PREFIX, RANK_SUBSTRING))}
    best: dict[str, tuple[int, str]] = {}
    for lowered, display, slug, is_primary in data.name_index:
        if lowered == needle:
            rank = RANK_EXACT_NAME if is_primary else RANK_EXACT_ALTERNATIVE
        elif lowered.startswith(needle):
            rank = RANK_PREFIX
        elif needle in lowered:
            rank = RANK_SUBSTRING
        else:
            continue
        candidate = (rank_order[rank], display)
        if slug not in best or candidate[0] < best[slug][0]:
            best[slug] = candidate

    ranks = (RANK_EXACT_NAME, RANK_EXACT_ALTERNATIVE, RANK_PREFIX, RANK_SUBSTRING)
    results = [
        SearchResult(slug, display, ranks[rank_idx])
        for slug, (rank_idx, display) in sorted(best.items(), key=lambda item: (item[1][0], item[0]))
    ]
    return results


def problem_detail(snapshot: Snapshot, network_id: str, slug: str) -> tuple[Problem, list[Reduction]]:
    """The problem plus incident reductions, outgoing first, each slug-sorted."""
    data = snapshot.network(network_id)
    if slug not in data.problems:
        raise UnknownProblem(slug)
    incident = [data.reductions[s] for s in data.outgoing.get(slug, ())]
    incident += [data.reductions[s] for s in data.incoming.get(slug, ())]
    return data.problems[slug], incident


def reduction_detail(snapshot: Snapshot, network_id: str, slug: str) -> tuple[Reduction, Problem, Problem]:
    data = snapshot.network(network_id)
    if slug not in data.reductions:
        raise UnknownReduction(slug)
    reduction = data.reductions[slug]
    return reduction, data.problems[reduction.from_problem], data.problems[reduction.to_problem]


class SnapshotStore:
    """Publication slot for the current snapshot; one writer, many readers."""

    def __init__(self):
        self._lock = threading.Lock()
        self._snapshot: Snapshot | None = None
        self._sync_failures = 0

    def get(self) -> Snapshot | None:
        return self._snapshot

    def publish(self, snapshot: Snapshot):
        with self._lock:
            self._snapshot = snapshot

    def record_failure(self):
        with self._lock:
            self._sync_failures += 1

    @property
    def sync_failures(self) -> int:
        return self._sync_failures


def sync_once(root: Path | str, store: SnapshotStore) -> bool:
    """One sync tick: re-ingest when the corpus content changed.

    Returns True when a new snapshot was published. A corpus that fails
    validation never replaces the published snapshot.
    """
    current = store.get()
    digest = compute_corpus_digest(root)
    if current is not None and current.corpus_digest == digest:
        return False
    try:
        snapshot = ingest(root)
    except ValidationFailed as exc:
        store.record_failure()
        log.warning("sync skipped, corpus failed validation:\n%s", "\n".join(
            f"{f.location}: {f.code}: {f.message}" for f in exc.report.findings
        ))
        return False
    store.publish(snapshot)
    return True


@dataclass
class SyncLoop:
    """Background thread re-running sync_once every ``interval`` seconds."""

    root: Path
    store: SnapshotStore
    interval: float
    _stop: threading.Event = field(default_factory=threading.Event)
    _thread: threading.Thread | None = None

    def __post_init__(self):
        if self.interval < 1:
            raise ValueError("sync interval must be at least 1 second")

    def start(self):
        self._thread = threading.Thread(target=self._run, name="corpus-sync", daemon=True)
        self._thread.start()

    def _run(self):
        while not self._stop.wait(self.interval):
            try:
                sync_once(self.root, self.store)
            except Exception:
                store_failures_before = self.store.sync_failures
                log.exception("sync tick failed")
                if self.store.sync_failures == store_failures_before:
                    self.store.record_failure()

    def stop(self):
        self._stop.set()
        if self._thread is not None:
            self._thread.join(timeout=5)
