"""Field-heading Markdown codec for problem, reduction, and manifest files.

A document is a flat sequence of fields. A line starting with ``# `` at
column 0 opens a field; everything up to the next such line is the field
value (leading/trailing blank lines stripped, interior structure kept).
``##`` and deeper headings belong to the value.

Two layers are exposed: ``scan_*`` functions collect every issue they
find and return ``(value_or_None, issues)`` for lint-style callers, and
``parse_*`` wrappers raise ``CodecError`` on the first error for callers
that want a value or nothing.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .model import (
    SLUG_RE,
    ModelError,
    NetworkManifest,
    Problem,
    Reduction,
)

HEADING_RE = re.compile(r"^# (.*)$")

PROBLEM_FIELD_ORDER = ("name", "abbreviation", "alternative-names", "description", "complexity", "references")
REDUCTION_FIELD_ORDER = ("from", "to", "description", "properties", "references")
MANIFEST_FIELD_ORDER = ("display-name", "problem-tags", "reduction-tags")


@dataclass(frozen=True)
class SourceLocation:
    path: str
    line: int  # 1-based

    def __post_init__(self):
        if self.line < 1:
            raise ValueError("line numbers are 1-based")

    def __str__(self) -> str:
        return f"{self.path}:{self.line}"


@dataclass(frozen=True)
class Issue:
    """One diagnostic produced while scanning a document."""

    severity: str  # "error" | "warning"
    code: str
    message: str
    location: SourceLocation


@dataclass(frozen=True)
class Field:
    key: str
    value: str
    line: int  # line of the heading
    value_line: int  # line of the first kept value line


@dataclass(frozen=True)
class FieldMap:
    """Ordered key → raw-text-block mapping; keys unique."""

    entries: tuple[Field, ...]

    def get(self, key: str) -> Field | None:
        for entry in self.entries:
            if entry.key == key:
                return entry
        return None

    def keys(self) -> tuple[str, ...]:
        return tuple(entry.key for entry in self.entries)


class CodecError(Exception):
    """A document or field failed to parse; carries the first Issue."""

    def __init__(self, issue: Issue):
        super().__init__(f"{issue.code} at {issue.location}: {issue.message}")
        self.issue = issue


def _error(code: str, message: str, path: str, line: int) -> Issue:
    return Issue("error", code, message, SourceLocation(path, line))


def _warning(code: str, message: str, path: str, line: int) -> Issue:
    return Issue("warning", code, message, SourceLocation(path, line))


def _strip_block(lines: list[str], first_line: int) -> tuple[str, int]:
    """Drop leading/trailing blank lines; return (value, line of first kept line)."""
    start, end = 0, len(lines)
    while start < end and not lines[start].strip():
        start += 1
    while end > start and not lines[end - 1].strip():
        end -= 1
    return "\n".join(lines[start:end]), first_line + start


def scan_document(text: str, path: str = "<string>") -> tuple[FieldMap, list[Issue]]:
    """Split a document into fields, collecting every issue found."""
    issues: list[Issue] = []
    text = text.replace("\r\n", "\n")
    lines = text.split("\n")

    entries: list[Field] = []
    seen: set[str] = set()
    key: str | None = None
    key_line = 0
    block: list[str] = []
    block_start = 1
    preamble_reported = False

    def flush():
        if key is None:
            return
        value, value_line = _strip_block(block, block_start)
        if key in seen:
            issues.append(_error("duplicate-field", f"field {key!r} opened twice", path, key_line))
            return
        seen.add(key)
        entries.append(Field(key, value, key_line, max(value_line, 1)))

    for lineno, line in enumerate(lines, start=1):
        match = HEADING_RE.match(line)
        if match:
            flush()
            raw_key = match.group(1).strip().lower()
            if not SLUG_RE.match(raw_key):
                issues.append(_error("malformed-key", f"not a valid field key: {raw_key!r}", path, lineno))
                key = None
            else:
                key = raw_key
                key_line = lineno
            block = []
            block_start = lineno + 1
        elif key is None:
            if line.strip() and not preamble_reported:
                issues.append(_error("preamble-content", "content before the first field heading", path, lineno))
                preamble_reported = True
        else:
            block.append(line)
    flush()

    return FieldMap(tuple(entries)), issues


def parse_document(text: str, path: str = "<string>") -> FieldMap:
    fields, issues = scan_document(text, path)
    _raise_first_error(issues)
    return fields


def _raise_first_error(issues: list[Issue]):
    for issue in issues:
        if issue.severity == "error":
            raise CodecError(issue)


def _lines_of(entry: Field) -> list[tuple[str, int]]:
    """Non-blank, stripped lines of a field value with their line numbers."""
    out = []
    for offset, line in enumerate(entry.value.split("\n")):
        token = line.strip()
        if token:
            out.append((token, entry.value_line + offset))
    return out


def _tag_list(entry: Field | None, issues: list[Issue], path: str) -> frozenset[str]:
    if entry is None:
        return frozenset()
    tags = set()
    for token, lineno in _lines_of(entry):
        if not SLUG_RE.match(token):
            issues.append(_error("malformed-tag", f"not a lowercase tag token: {token!r}", path, lineno))
        else:
            tags.add(token)
    return frozenset(tags)


def _required(fields: FieldMap, key: str, issues: list[Issue], path: str) -> Field | None:
    entry = fields.get(key)
    if entry is None:
        issues.append(_error("missing-field", f"required field {key!r} is missing", path, 1))
        return None
    if not entry.value.strip():
        issues.append(_error("empty-field", f"required field {key!r} is blank", path, entry.line))
        return None
    return entry


def _unknown_field_warnings(fields: FieldMap, known: tuple[str, ...], issues: list[Issue], path: str):
    for entry in fields.entries:
        if entry.key not in known:
            issues.append(_warning("unknown-field", f"unknown field {entry.key!r}", path, entry.line))


def scan_problem(
    fields: FieldMap, slug: str, network: str, path: str = "<string>"
) -> tuple[Problem | None, list[Issue]]:
    issues: list[Issue] = []
    name = _required(fields, "name", issues, path)
    abbreviation = _required(fields, "abbreviation", issues, path)
    _unknown_field_warnings(fields, PROBLEM_FIELD_ORDER, issues, path)

    alt_entry = fields.get("alternative-names")
    alternative_names = tuple(token for token, _ in _lines_of(alt_entry)) if alt_entry else ()
    description_entry = fields.get("description")
    references_entry = fields.get("references")
    completeness = _tag_list(fields.get("complexity"), issues, path)

    if any(issue.severity == "error" for issue in issues):
        return None, issues
    assert name is not None and abbreviation is not None
    try:
        problem = Problem(
            slug=slug,
            network=network,
            name=name.value.strip(),
            abbreviation=abbreviation.value.strip(),
            alternative_names=alternative_names,
            description=description_entry.value if description_entry else "",
            completeness=completeness,
            references=references_entry.value if references_entry else "",
        )
    except ModelError as exc:
        issues.append(_error("invalid-value", str(exc), path, 1))
        return None, issues
    return problem, issues


def scan_reduction(
    fields: FieldMap, slug: str, network: str, path: str = "<string>"
) -> tuple[Reduction | None, list[Issue]]:
    issues: list[Issue] = []
    endpoints = {}
    for key in ("from", "to"):
        entry = _required(fields, key, issues, path)
        if entry is not None:
            token = entry.value.strip()
            if not SLUG_RE.match(token):
                issues.append(_error("bad-slug", f"field {key!r} is not a problem identifier: {token!r}", path, entry.line))
            else:
                endpoints[key] = token
    _unknown_field_warnings(fields, REDUCTION_FIELD_ORDER, issues, path)

    properties = _tag_list(fields.get("properties"), issues, path)
    if "from" in endpoints and endpoints.get("from") == endpoints.get("to"):
        issues.append(_error("self-loop", f"reduction {slug!r} points from a problem to itself", path, 1))

    if any(issue.severity == "error" for issue in issues):
        return None, issues
    description_entry = fields.get("description")
    references_entry = fields.get("references")
    try:
        reduction = Reduction(
            slug=slug,
            network=network,
            from_problem=endpoints["from"],
            to_problem=endpoints["to"],
            description=description_entry.value if description_entry else "",
            properties=properties,
            references=references_entry.value if references_entry else "",
        )
    except ModelError as exc:
        issues.append(_error("invalid-value", str(exc), path, 1))
        return None, issues
    return reduction, issues


def scan_manifest(
    fields: FieldMap, network: str, path: str = "<string>"
) -> tuple[NetworkManifest | None, list[Issue]]:
    issues: list[Issue] = []
    display_name = _required(fields, "display-name", issues, path)
    _unknown_field_warnings(fields, MANIFEST_FIELD_ORDER, issues, path)
    problem_tags = _tag_list(fields.get("problem-tags"), issues, path)
    reduction_tags = _tag_list(fields.get("reduction-tags"), issues, path)

    if any(issue.severity == "error" for issue in issues):
        return None, issues
    assert display_name is not None
    manifest = NetworkManifest(
        network=network,
        display_name=display_name.value.strip(),
        problem_tags=problem_tags,
        reduction_tags=reduction_tags,
    )
    return manifest, issues


def parse_problem(fields: FieldMap, slug: str, network: str) -> tuple[Problem, list[Issue]]:
    """Strict variant of scan_problem: raises on the first error, returns warnings."""
    problem, issues = scan_problem(fields, slug, network)
    _raise_first_error(issues)
    assert problem is not None
    return problem, issues


def parse_reduction(fields: FieldMap, slug: str, network: str) -> tuple[Reduction, list[Issue]]:
    reduction, issues = scan_reduction(fields, slug, network)
    _raise_first_error(issues)
    assert reduction is not None
    return reduction, issues


def parse_manifest(fields: FieldMap, network: str) -> tuple[NetworkManifest, list[Issue]]:
    manifest, issues = scan_manifest(fields, network)
    _raise_first_error(issues)
    assert manifest is not None
    return manifest, issues


def _emit(pairs: list[tuple[str, str]]) -> str:
    blocks = [f"# {key}\n{value}" for key, value in pairs]
    return "\n\n".join(blocks) + "\n"


def serialize_problem(problem: Problem) -> str:
    """Canonical text form; empty optional fields are omitted.

    Values containing a column-0 ``# `` line are not serializable (they
    would re-parse as field boundaries); this is a corpus-authoring
    restriction, not a checked error.
    """
    pairs = [("name", problem.name), ("abbreviation", problem.abbreviation)]
    if problem.alternative_names:
        pairs.append(("alternative-names", "\n".join(problem.alternative_names)))
    if problem.description:
        pairs.append(("description", problem.description))
    if problem.completeness:
        pairs.append(("complexity", "\n".join(sorted(problem.completeness))))
    if problem.references:
        pairs.append(("references", problem.references))
    return _emit(pairs)


def serialize_reduction(reduction: Reduction) -> str:
    pairs = [("from", reduction.from_problem), ("to", reduction.to_problem)]
    if reduction.description:
        pairs.append(("description", reduction.description))
    if reduction.properties:
        pairs.append(("properties", "\n".join(sorted(reduction.properties))))
    if reduction.references:
        pairs.append(("references", reduction.references))
    return _emit(pairs)


def serialize_manifest(manifest: NetworkManifest) -> str:
    pairs = [("display-name", manifest.display_name)]
    if manifest.problem_tags:
        pairs.append(("problem-tags", "\n".join(sorted(manifest.problem_tags))))
    if manifest.reduction_tags:
        pairs.append(("reduction-tags", "\n".join(sorted(manifest.reduction_tags))))
    return _emit(pairs)
