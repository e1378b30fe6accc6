"""Domain types: problems, reductions, manifests, tags, and filters.

All values are immutable after construction and validated in
``__post_init__``, so a constructed value is always internally
consistent. Cross-file rules (tag vocabulary membership, endpoint
existence) are enforced at the corpus level, not here.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

SLUG_RE = re.compile(r"^[a-z0-9]+(-[a-z0-9]+)*$")

RANK_EXACT_NAME = "exact-name"
RANK_EXACT_ALTERNATIVE = "exact-alternative"
RANK_PREFIX = "prefix"
RANK_SUBSTRING = "substring"
RANK_CLASSES = (RANK_EXACT_NAME, RANK_EXACT_ALTERNATIVE, RANK_PREFIX, RANK_SUBSTRING)


class ModelError(ValueError):
    """Raised when a domain value violates an invariant.

    ``field`` names the offending field.
    """

    def __init__(self, field_name: str, message: str):
        super().__init__(f"{field_name}: {message}")
        self.field = field_name


def check_slug(value: str, field_name: str = "slug") -> str:
    if not isinstance(value, str) or not SLUG_RE.match(value):
        raise ModelError(field_name, f"not a kebab-case identifier: {value!r}")
    return value


def check_tag(value: str, field_name: str) -> str:
    if not isinstance(value, str) or not SLUG_RE.match(value):
        raise ModelError(field_name, f"not a lowercase tag token: {value!r}")
    return value


def slug_from_filename(filename: str) -> str:
    """Derive the identifier from a source filename (stem of ``x.md``)."""
    stem = filename[:-3] if filename.endswith(".md") else filename
    return check_slug(stem, "filename")


@dataclass(frozen=True)
class Problem:
    """One computational problem inside one network."""

    slug: str
    network: str
    name: str
    abbreviation: str
    alternative_names: tuple[str, ...] = ()
    description: str = ""
    completeness: frozenset[str] = field(default_factory=frozenset)
    references: str = ""

    def __post_init__(self):
        check_slug(self.slug, "slug")
        check_slug(self.network, "network")
        if not self.name.strip():
            raise ModelError("name", "must be non-empty")
        if not self.abbreviation.strip():
            raise ModelError("abbreviation", "must be non-empty")
        if len(set(self.alternative_names)) != len(self.alternative_names):
            raise ModelError("alternative_names", "contains duplicates")
        if self.name in self.alternative_names:
            raise ModelError("alternative_names", "must not repeat the main name")
        for tag in self.completeness:
            check_tag(tag, "completeness")


@dataclass(frozen=True)
class Reduction:
    """A directed edge between two problems in the same network."""

    slug: str
    network: str
    from_problem: str
    to_problem: str
    description: str = ""
    properties: frozenset[str] = field(default_factory=frozenset)
    references: str = ""

    def __post_init__(self):
        check_slug(self.slug, "slug")
        check_slug(self.network, "network")
        check_slug(self.from_problem, "from_problem")
        check_slug(self.to_problem, "to_problem")
        if self.from_problem == self.to_problem:
            raise ModelError("to_problem", "self-loop reductions are rejected")
        for tag in self.properties:
            check_tag(tag, "properties")


@dataclass(frozen=True)
class NetworkManifest:
    """Per-network display name and tag vocabularies."""

    network: str
    display_name: str
    problem_tags: frozenset[str] = field(default_factory=frozenset)
    reduction_tags: frozenset[str] = field(default_factory=frozenset)

    def __post_init__(self):
        check_slug(self.network, "network")
        if not self.display_name.strip():
            raise ModelError("display_name", "must be non-empty")
        for tag in self.problem_tags:
            check_tag(tag, "problem_tags")
        for tag in self.reduction_tags:
            check_tag(tag, "reduction_tags")


@dataclass(frozen=True)
class FilterSpec:
    """Tags to narrow a network view; empty on both sides means no filtering."""

    problem_tags: frozenset[str] = field(default_factory=frozenset)
    reduction_tags: frozenset[str] = field(default_factory=frozenset)

    def __post_init__(self):
        for tag in self.problem_tags:
            check_tag(tag, "problem_tags")
        for tag in self.reduction_tags:
            check_tag(tag, "reduction_tags")

    @property
    def is_empty(self) -> bool:
        return not self.problem_tags and not self.reduction_tags
