"""Independent brute-force oracle over the raw corpus files.

Deliberately reimplements document splitting and graph filtering with
the simplest possible code (regex split + set comprehensions) so the
main implementation can be checked against it.
"""

import re
from pathlib import Path


def split_fields(text: str) -> dict[str, str]:
    """Naive field split: cut the line list on the ``^# `` regex."""
    fields = {}
    key = None
    buf: list[str] = []
    for line in text.replace("\r\n", "\n").split("\n"):
        match = re.match(r"^# (.*)$", line)
        if match:
            if key is not None:
                fields[key] = "\n".join(buf).strip("\n").strip()
            key = match.group(1).strip().lower()
            buf = []
        elif key is not None:
            buf.append(line)
    if key is not None:
        fields[key] = "\n".join(buf).strip("\n").strip()
    return fields


def load_network(root: Path, network: str):
    """Raw (problems, reductions) maps straight from the files."""
    problems = {}
    for path in sorted((root / network / "problems").rglob("*.md")):
        fields = split_fields(path.read_text())
        problems[path.stem] = {
            "name": fields.get("name", ""),
            "abbreviation": fields.get("abbreviation", ""),
            "alternative_names": [x for x in fields.get("alternative-names", "").split("\n") if x.strip()],
            "tags": {x for x in fields.get("complexity", "").split("\n") if x.strip()},
        }
    reductions = {}
    for path in sorted((root / network / "reductions").rglob("*.md")):
        fields = split_fields(path.read_text())
        reductions[path.stem] = {
            "from": fields.get("from", "").strip(),
            "to": fields.get("to", "").strip(),
            "tags": {x for x in fields.get("properties", "").split("\n") if x.strip()},
        }
    return problems, reductions


def filter_graph(problems, reductions, problem_tags: set[str], reduction_tags: set[str]):
    """Set-comprehension rendering of the documented filter semantics."""
    if problem_tags:
        tagged = {slug for slug, p in problems.items() if p["tags"] & problem_tags}
    else:
        tagged = set(problems)

    if reduction_tags:
        kept_edges = {slug for slug, r in reductions.items() if r["tags"] >= reduction_tags}
    elif problem_tags:
        kept_edges = {slug for slug, r in reductions.items() if r["from"] in tagged and r["to"] in tagged}
    else:
        kept_edges = set(reductions)

    endpoints = {reductions[slug]["from"] for slug in kept_edges} | {reductions[slug]["to"] for slug in kept_edges}
    return tagged | endpoints, kept_edges


def degree(reductions, problem_slug: str) -> int:
    return sum(
        (r["from"] == problem_slug) + (r["to"] == problem_slug)
        for r in reductions.values()
    )
