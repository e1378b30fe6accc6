"""Corpus lint: format compliance and referential integrity.

Checks a corpus directory tree (``<root>/<network>/network.md`` plus
``problems/`` and ``reductions/`` subdirectories) and reports every
finding it can see in one pass; it never stops at the first error.

Finding codes (closed set):
  errors   — missing-field, empty-field, duplicate-field, preamble-content,
             malformed-key, malformed-tag, bad-slug, self-loop, invalid-value,
             invalid-encoding, duplicate-slug, dangling-endpoint, unknown-tag,
             bad-directory (layout violations that block publication)
  warnings — unknown-field, bad-directory (stray files), empty-network
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from . import codec
from .codec import Issue, SourceLocation
from .model import SLUG_RE, NetworkManifest, Problem, Reduction

Finding = Issue  # one diagnostic; validator findings share the codec's shape

KIND_PROBLEM = "problem"
KIND_REDUCTION = "reduction"
KIND_MANIFEST = "manifest"

MANIFEST_FILENAME = "network.md"


class CorpusIoError(Exception):
    """A file or directory could not be read (distinct from findings)."""

    def __init__(self, path: Path, reason: str):
        super().__init__(f"{path}: {reason}")
        self.path = path


@dataclass(frozen=True)
class ValidationReport:
    findings: tuple[Finding, ...]

    @property
    def errors(self) -> int:
        return sum(1 for finding in self.findings if finding.severity == "error")

    @property
    def warnings(self) -> int:
        return sum(1 for finding in self.findings if finding.severity == "warning")

    @property
    def is_clean(self) -> bool:
        return not self.findings

    def to_json(self) -> dict:
        return {
            "findings": [
                {
                    "severity": finding.severity,
                    "code": finding.code,
                    "message": finding.message,
                    "path": finding.location.path,
                    "line": finding.location.line,
                }
                for finding in self.findings
            ],
            "errors": self.errors,
            "warnings": self.warnings,
        }


def _finding(severity: str, code: str, message: str, path: str, line: int = 1) -> Finding:
    return Finding(severity, code, message, SourceLocation(path, line))


def _sorted_report(findings: list[Finding]) -> ValidationReport:
    ordered = sorted(findings, key=lambda f: (f.location.path, f.location.line, f.code, f.message))
    return ValidationReport(tuple(ordered))


def _read_text(path: Path, rel: str, findings: list[Finding]) -> str | None:
    try:
        data = path.read_bytes()
    except OSError as exc:
        raise CorpusIoError(path, str(exc)) from exc
    try:
        return data.decode("utf-8")
    except UnicodeDecodeError as exc:
        findings.append(_finding("error", "invalid-encoding", f"not valid UTF-8: {exc}", rel))
        return None


def _md_files(directory: Path, rel_base: str, findings: list[Finding]) -> list[tuple[Path, str]]:
    """All .md files under a kind directory, recursively; stray files warned."""
    out = []
    for path in sorted(directory.rglob("*")):
        if path.name.startswith(".") or path.is_dir():
            continue
        rel = f"{rel_base}/{path.relative_to(directory).as_posix()}"
        if path.suffix != ".md":
            findings.append(_finding("warning", "bad-directory", f"unexpected non-Markdown file {path.name!r}", rel))
        else:
            out.append((path, rel))
    return out


@dataclass
class _NetworkScan:
    manifest: NetworkManifest
    problems: dict[str, Problem]
    reductions: dict[str, Reduction]


def _scan_entity_file(
    path: Path, rel: str, network: str, kind: str, findings: list[Finding]
) -> Problem | Reduction | None:
    stem = path.name[:-3]
    if not SLUG_RE.match(stem):
        findings.append(_finding("error", "bad-slug", f"filename {path.name!r} is not a kebab-case identifier", rel))
        return None
    text = _read_text(path, rel, findings)
    if text is None:
        return None
    fields, issues = codec.scan_document(text, rel)
    if kind == KIND_PROBLEM:
        value, entity_issues = codec.scan_problem(fields, stem, network, rel)
    else:
        value, entity_issues = codec.scan_reduction(fields, stem, network, rel)
    findings.extend(issues)
    findings.extend(entity_issues)
    return value


def scan_corpus(root: Path | str) -> tuple[dict[str, _NetworkScan], list[Finding]]:
    """Walk the whole corpus once; shared by validate_corpus and ingest."""
    root = Path(root)
    if not root.is_dir():
        raise CorpusIoError(root, "not a readable directory")

    findings: list[Finding] = []
    networks: dict[str, _NetworkScan] = {}

    for entry in sorted(root.iterdir()):
        if entry.name.startswith("."):
            continue
        if not entry.is_dir():
            findings.append(_finding("warning", "bad-directory", f"stray top-level file {entry.name!r}", entry.name))
            continue
        if not SLUG_RE.match(entry.name):
            findings.append(_finding("error", "bad-directory", f"network directory {entry.name!r} is not a kebab-case identifier", entry.name))
            continue
        network = entry.name

        manifest_path = entry / MANIFEST_FILENAME
        manifest_rel = f"{network}/{MANIFEST_FILENAME}"
        if not manifest_path.is_file():
            findings.append(_finding("error", "bad-directory", f"network {network!r} has no {MANIFEST_FILENAME}", network))
            continue
        manifest_text = _read_text(manifest_path, manifest_rel, findings)
        manifest = None
        if manifest_text is not None:
            fields, issues = codec.scan_document(manifest_text, manifest_rel)
            manifest, manifest_issues = codec.scan_manifest(fields, network, manifest_rel)
            findings.extend(issues)
            findings.extend(manifest_issues)

        problems: dict[str, Problem] = {}
        reductions: dict[str, Reduction] = {}
        for child in sorted(entry.iterdir()):
            if child.name.startswith(".") or child == manifest_path:
                continue
            rel = f"{network}/{child.name}"
            if not child.is_dir():
                findings.append(_finding("warning", "bad-directory", f"unexpected file {child.name!r} in network {network!r}", rel))
            elif child.name not in ("problems", "reductions"):
                findings.append(_finding("warning", "bad-directory", f"unexpected directory {child.name!r} in network {network!r}", rel))

        for kind, store in ((KIND_PROBLEM, problems), (KIND_REDUCTION, reductions)):
            kind_dir = entry / f"{kind}s"
            if not kind_dir.is_dir():
                continue
            for path, rel in _md_files(kind_dir, f"{network}/{kind}s", findings):
                value = _scan_entity_file(path, rel, network, kind, findings)
                if value is None:
                    continue
                if value.slug in store:
                    findings.append(_finding("error", "duplicate-slug", f"{kind} slug {value.slug!r} defined more than once in network {network!r}", rel))
                else:
                    store[value.slug] = value

        # cross-file checks need the vocabulary and the slug tables
        for reduction in reductions.values():
            rel = f"{network}/reductions/{reduction.slug}.md"
            for endpoint in (reduction.from_problem, reduction.to_problem):
                if endpoint not in problems:
                    findings.append(_finding("error", "dangling-endpoint", f"reduction {reduction.slug!r} references unknown problem {endpoint!r}", rel))
        if manifest is not None:
            for problem in problems.values():
                rel = f"{network}/problems/{problem.slug}.md"
                for tag in sorted(problem.completeness - manifest.problem_tags):
                    findings.append(_finding("error", "unknown-tag", f"problem tag {tag!r} is not in the {network!r} vocabulary", rel))
            for reduction in reductions.values():
                rel = f"{network}/reductions/{reduction.slug}.md"
                for tag in sorted(reduction.properties - manifest.reduction_tags):
                    findings.append(_finding("error", "unknown-tag", f"reduction tag {tag!r} is not in the {network!r} vocabulary", rel))
            if not problems:
                findings.append(_finding("warning", "empty-network", f"network {network!r} declares no problems", manifest_rel))
            networks[network] = _NetworkScan(manifest, problems, reductions)

    return networks, findings


def validate_corpus(root: Path | str) -> ValidationReport:
    _, findings = scan_corpus(root)
    return _sorted_report(findings)


def validate_file(path: Path | str, kind: str) -> ValidationReport:
    """Single-file fast path: format and lexical checks only."""
    if kind not in (KIND_PROBLEM, KIND_REDUCTION, KIND_MANIFEST):
        raise ValueError(f"unknown kind {kind!r}")
    path = Path(path)
    if not path.is_file():
        raise CorpusIoError(path, "not a readable file")

    findings: list[Finding] = []
    rel = path.name
    text = _read_text(path, rel, findings)
    if text is None:
        return _sorted_report(findings)

    stem = path.name[:-3] if path.name.endswith(".md") else path.name
    if not SLUG_RE.match(stem):
        findings.append(_finding("error", "bad-slug", f"filename {path.name!r} is not a kebab-case identifier", rel))
        return _sorted_report(findings)

    network = path.parent.parent.name if SLUG_RE.match(path.parent.parent.name or "") else "adhoc"
    fields, issues = codec.scan_document(text, rel)
    findings.extend(issues)
    if kind == KIND_PROBLEM:
        _, entity_issues = codec.scan_problem(fields, stem, network, rel)
    elif kind == KIND_REDUCTION:
        _, entity_issues = codec.scan_reduction(fields, stem, network, rel)
    else:
        _, entity_issues = codec.scan_manifest(fields, network, rel)
    findings.extend(entity_issues)
    return _sorted_report(findings)


def format_report(report: ValidationReport, fmt: str = "human") -> str:
    if fmt == "json":
        return json.dumps(report.to_json(), indent=2)
    if not report.findings:
        return "clean: no findings"
    lines = [
        f"{finding.location.path}:{finding.location.line}: {finding.severity}: {finding.code}: {finding.message}"
        for finding in report.findings
    ]
    lines.append(f"{report.errors} error(s), {report.warnings} warning(s)")
    return "\n".join(lines)


def exit_code(report: ValidationReport) -> int:
    """CI contract: 0 clean, 1 warnings only, 2 errors (3 = I/O, raised upstream)."""
    if report.errors:
        return 2
    if report.warnings:
        return 1
    return 0
