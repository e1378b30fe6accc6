"""Command-line entry points: the API server and the corpus linter."""

from __future__ import annotations

import argparse
import logging
import os
import sys
from pathlib import Path

from . import validator
from .service import DEFAULT_RATE_LIMIT, DEFAULT_SYNC_INTERVAL, ApiConfig, create_app
from .store import SnapshotStore, SyncLoop, sync_once

log = logging.getLogger(__name__)


def _env(name: str, default):
    value = os.environ.get(name)
    return value if value is not None else default


def build_config(argv: list[str] | None = None) -> ApiConfig:
    """Config precedence: CLI flags > environment variables > defaults."""
    parser = argparse.ArgumentParser(prog="reduction-atlas")
    sub = parser.add_subparsers(dest="command", required=True)
    serve = sub.add_parser("serve", help="run the HTTP API")
    serve.add_argument("--root", default=_env("ATLAS_ROOT", None), help="corpus root directory")
    serve.add_argument("--listen", default=_env("ATLAS_LISTEN", "127.0.0.1:8080"), help="host:port")
    serve.add_argument("--sync-interval", type=int, default=int(_env("ATLAS_SYNC_INTERVAL", DEFAULT_SYNC_INTERVAL)))
    serve.add_argument("--rate-limit", type=int, default=int(_env("ATLAS_RATE_LIMIT", DEFAULT_RATE_LIMIT)))
    serve.add_argument("--static", default=_env("ATLAS_STATIC_DIR", None), help="directory of UI assets")
    args = parser.parse_args(argv)
    if args.root is None:
        parser.error("--root (or ATLAS_ROOT) is required")
    return ApiConfig(
        listen_address=args.listen,
        corpus_root=Path(args.root),
        sync_interval=args.sync_interval,
        rate_limit=args.rate_limit,
        static_dir=Path(args.static) if args.static else None,
    )


def main(argv: list[str] | None = None) -> int:
    import uvicorn

    logging.basicConfig(level=logging.INFO, format="%(asctime)s %(name)s %(levelname)s %(message)s")
    config = build_config(argv)
    store = SnapshotStore()
    if not sync_once(config.corpus_root, store):
        log.warning("initial ingest failed; serving 503 until the corpus validates")
    sync = SyncLoop(root=config.corpus_root, store=store, interval=config.sync_interval)
    sync.start()
    app = create_app(store, rate_limit=config.rate_limit, static_dir=config.static_dir)
    try:
        uvicorn.run(app, host=config.host, port=config.port, log_level="info")
    finally:
        sync.stop()
    return 0


def redlint_main(argv: list[str] | None = None) -> int:
    """Lint a corpus directory or one file; exit 0/1/2/3 per severity."""
    parser = argparse.ArgumentParser(prog="redlint", description="lint a reduction corpus")
    parser.add_argument("path", help="corpus root, or a single file with --kind")
    parser.add_argument("--format", choices=("human", "json"), default="human")
    parser.add_argument("--kind", choices=(validator.KIND_PROBLEM, validator.KIND_REDUCTION, validator.KIND_MANIFEST))
    args = parser.parse_args(argv)

    try:
        if args.kind:
            report = validator.validate_file(args.path, args.kind)
        else:
            report = validator.validate_corpus(args.path)
    except validator.CorpusIoError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return 3
    print(validator.format_report(report, args.format))
    return validator.exit_code(report)


if __name__ == "__main__":
    sys.exit(main())
