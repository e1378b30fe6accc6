"""Read-only JSON API over the snapshot store, with flood protection.

Every response is JSON; error bodies are ``{"error": {"code", "message"}}``.
Requests under ``/api/`` are rate limited per client address with a
sliding 60-second window. When a static directory is configured, the
browser UI is served from ``/`` without touching the API routes.
"""

from __future__ import annotations

import threading
import time
from collections import deque
from dataclasses import dataclass
from pathlib import Path
from typing import Callable

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles

from .model import FilterSpec, ModelError, Problem, Reduction
from . import store as store_mod
from .store import SnapshotStore, Snapshot

JSON_MEDIA_TYPE = "application/json; charset=utf-8"

DEFAULT_SYNC_INTERVAL = 300
DEFAULT_RATE_LIMIT = 120


@dataclass
class ApiConfig:
    listen_address: str = "127.0.0.1:8080"
    corpus_root: Path = Path(".")
    sync_interval: int = DEFAULT_SYNC_INTERVAL
    rate_limit: int = DEFAULT_RATE_LIMIT
    static_dir: Path | None = None

    def __post_init__(self):
        if self.sync_interval < 1:
            raise ValueError("sync_interval must be >= 1")
        if self.rate_limit < 1:
            raise ValueError("rate_limit must be >= 1")

    @property
    def host(self) -> str:
        return self.listen_address.rsplit(":", 1)[0]

    @property
    def port(self) -> int:
        return int(self.listen_address.rsplit(":", 1)[1])


class ApiError(Exception):
    def __init__(self, status: int, code: str, message: str):
        super().__init__(message)
        self.status = status
        self.code = code
        self.message = message


class UTF8JSONResponse(JSONResponse):
    media_type = JSON_MEDIA_TYPE


class SlidingWindowLimiter:
    """Per-key sliding window counter; thread-safe."""

    def __init__(self, limit: int, window: float = 60.0, clock: Callable[[], float] = time.monotonic):
        self.limit = limit
        self.window = window
        self._clock = clock
        self._lock = threading.Lock()
        self._hits: dict[str, deque[float]] = {}

    def allow(self, key: str) -> bool:
        now = self._clock()
        with self._lock:
            hits = self._hits.setdefault(key, deque())
            while hits and now - hits[0] >= self.window:
                hits.popleft()
            if len(hits) >= self.limit:
                return False
            hits.append(now)
            return True


def _error_response(status: int, code: str, message: str) -> UTF8JSONResponse:
    return UTF8JSONResponse({"error": {"code": code, "message": message}}, status_code=status)


def _problem_json(problem: Problem) -> dict:
    return {
        "slug": problem.slug,
        "network": problem.network,
        "name": problem.name,
        "abbreviation": problem.abbreviation,
        "alternative_names": list(problem.alternative_names),
        "description": problem.description,
        "completeness": sorted(problem.completeness),
        "references": problem.references,
    }


def _reduction_json(reduction: Reduction) -> dict:
    return {
        "slug": reduction.slug,
        "network": reduction.network,
        "from": reduction.from_problem,
        "to": reduction.to_problem,
        "description": reduction.description,
        "properties": sorted(reduction.properties),
        "references": reduction.references,
    }


def _parse_tag_param(raw: str | None, field_name: str) -> frozenset[str]:
    if not raw:
        return frozenset()
    return frozenset(token.strip() for token in raw.split(",") if token.strip())


def create_app(
    store: SnapshotStore,
    rate_limit: int = DEFAULT_RATE_LIMIT,
    static_dir: Path | None = None,
    limiter: SlidingWindowLimiter | None = None,
) -> FastAPI:
    app = FastAPI(title="reduction-atlas", docs_url=None, redoc_url=None, openapi_url=None)
    limiter = limiter or SlidingWindowLimiter(rate_limit)

    def current_snapshot() -> Snapshot:
        snapshot = store.get()
        if snapshot is None:
            raise ApiError(503, "snapshot-unavailable", "no corpus snapshot has been ingested yet")
        return snapshot

    @app.exception_handler(ApiError)
    async def handle_api_error(request: Request, exc: ApiError):
        return _error_response(exc.status, exc.code, exc.message)

    @app.middleware("http")
    async def rate_limit_middleware(request: Request, call_next):
        if request.url.path.startswith("/api/"):
            client = request.client.host if request.client else "unknown"
            if not limiter.allow(client):
                return _error_response(429, "rate-limited", "request rate limit exceeded; retry later")
        return await call_next(request)

    @app.get("/api/networks", response_class=UTF8JSONResponse)
    async def list_networks():
        snapshot = current_snapshot()
        return [
            {
                "id": network_id,
                "display_name": data.manifest.display_name,
                "problem_count": len(data.problems),
                "reduction_count": len(data.reductions),
                "problem_tags": sorted(data.manifest.problem_tags),
                "reduction_tags": sorted(data.manifest.reduction_tags),
            }
            for network_id, data in sorted(snapshot.networks.items())
        ]

    @app.get("/api/networks/{net}/graph", response_class=UTF8JSONResponse)
    async def get_graph(net: str, problem_tags: str | None = None, reduction_tags: str | None = None):
        snapshot = current_snapshot()
        try:
            spec = FilterSpec(
                problem_tags=_parse_tag_param(problem_tags, "problem_tags"),
                reduction_tags=_parse_tag_param(reduction_tags, "reduction_tags"),
            )
        except ModelError as exc:
            raise ApiError(400, "unknown-tag", str(exc))
        try:
            graph = store_mod.network_graph(snapshot, net, spec)
        except store_mod.UnknownNetwork as exc:
            raise ApiError(404, "unknown-network", str(exc))
        except store_mod.UnknownTag as exc:
            raise ApiError(400, "unknown-tag", str(exc))
        return {
            "nodes": [{"slug": n.slug, "label": n.label, "tags": list(n.tags)} for n in graph.nodes],
            "edges": [{"slug": e.slug, "from": e.from_slug, "to": e.to_slug, "tags": list(e.tags)} for e in graph.edges],
        }

    @app.get("/api/networks/{net}/problems/{slug}", response_class=UTF8JSONResponse)
    async def get_problem(net: str, slug: str):
        snapshot = current_snapshot()
        try:
            problem, incident = store_mod.problem_detail(snapshot, net, slug)
        except store_mod.UnknownNetwork as exc:
            raise ApiError(404, "unknown-network", str(exc))
        except store_mod.UnknownProblem as exc:
            raise ApiError(404, "unknown-problem", str(exc))
        return {
            "problem": _problem_json(problem),
            "incident_reductions": [_reduction_json(r) for r in incident],
        }

    @app.get("/api/networks/{net}/reductions/{slug}", response_class=UTF8JSONResponse)
    async def get_reduction(net: str, slug: str):
        snapshot = current_snapshot()
        try:
            reduction, from_problem, to_problem = store_mod.reduction_detail(snapshot, net, slug)
        except store_mod.UnknownNetwork as exc:
            raise ApiError(404, "unknown-network", str(exc))
        except store_mod.UnknownReduction as exc:
            raise ApiError(404, "unknown-reduction", str(exc))
        return {
            "reduction": _reduction_json(reduction),
            "from_problem": _problem_json(from_problem),
            "to_problem": _problem_json(to_problem),
        }

    @app.get("/api/networks/{net}/search", response_class=UTF8JSONResponse)
    async def search_network(net: str, q: str = ""):
        snapshot = current_snapshot()
        if not q.strip():
            raise ApiError(400, "empty-query", "search query must be non-empty")
        try:
            results = store_mod.search(snapshot, net, q)
        except store_mod.UnknownNetwork as exc:
            raise ApiError(404, "unknown-network", str(exc))
        return [
            {"slug": r.slug, "matched_name": r.matched_name, "rank_class": r.rank_class}
            for r in results
        ]

    @app.get("/api/health", response_class=UTF8JSONResponse)
    async def health():
        snapshot = store.get()
        if snapshot is None:
            raise ApiError(503, "snapshot-unavailable", "no corpus snapshot has been ingested yet")
        return {
            "status": "ok",
            "snapshot_digest": snapshot.corpus_digest,
            "ingested_at": snapshot.ingested_at.isoformat(),
            "sync_failures": store.sync_failures,
        }

    if static_dir is not None:
        app.mount("/", StaticFiles(directory=static_dir, html=True), name="static")

    return app
