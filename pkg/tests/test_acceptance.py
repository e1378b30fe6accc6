"""Acceptance suite: one test per criterion, each prints a PASS line.

Run with ``pytest tests/test_acceptance.py -s`` to see the per-criterion
lines. Expected values are either fixed by the file format contract or
derived from the fixture corpus via the independent helpers in
``corpus_oracle``.
"""

import random
import shutil
import string
import sys
import time

import pytest
from starlette.testclient import TestClient

import corpus_oracle
from conftest import DEFECT_SEEDS, FIXTURE_CORPUS
from reduction_atlas import codec
from reduction_atlas.model import FilterSpec, Problem, Reduction
from reduction_atlas.service import create_app
from reduction_atlas.store import SnapshotStore, ValidationFailed, ingest, network_graph, sync_once
from reduction_atlas.validator import validate_corpus

from test_store import all_classic_filters


def report(criterion: int, detail: str):
    # bypass pytest's capture so the line shows up even without -s
    print(f"\nACCEPTANCE {criterion}: PASS — {detail}", file=sys.__stdout__)


def _random_line(rng: random.Random) -> str:
    alphabet = string.ascii_letters + string.digits + " $\\^{}()=,."
    text = "".join(rng.choice(alphabet) for _ in range(rng.randint(1, 30))).strip()
    return text if text and not text.startswith("#") else "x" + text


def _random_slug(rng: random.Random) -> str:
    return "-".join(
        "".join(rng.choice(string.ascii_lowercase) for _ in range(rng.randint(1, 6)))
        for _ in range(rng.randint(1, 3))
    )


def _random_block(rng: random.Random) -> str:
    lines = [_random_line(rng) for _ in range(rng.randint(0, 4))]
    return "\n".join(lines)


def _random_problem(rng: random.Random) -> Problem:
    name = _random_line(rng)
    alternatives = []
    for _ in range(rng.randint(0, 3)):
        alt = _random_line(rng)
        if alt != name and alt not in alternatives:
            alternatives.append(alt)
    return Problem(
        slug=_random_slug(rng),
        network=_random_slug(rng),
        name=name,
        abbreviation=_random_line(rng),
        alternative_names=tuple(alternatives),
        description=_random_block(rng),
        completeness=frozenset(_random_slug(rng) for _ in range(rng.randint(0, 3))),
        references=_random_block(rng),
    )


def _random_reduction(rng: random.Random) -> Reduction:
    from_problem = _random_slug(rng)
    to_problem = _random_slug(rng)
    while to_problem == from_problem:
        to_problem = _random_slug(rng)
    return Reduction(
        slug=_random_slug(rng),
        network=_random_slug(rng),
        from_problem=from_problem,
        to_problem=to_problem,
        description=_random_block(rng),
        properties=frozenset(_random_slug(rng) for _ in range(rng.randint(0, 3))),
        references=_random_block(rng),
    )


def test_criterion_1_codec_round_trip():
    rng = random.Random(20240817)
    started = time.monotonic()
    for index in range(250):
        problem = _random_problem(rng)
        parsed, _ = codec.parse_problem(
            codec.parse_document(codec.serialize_problem(problem)), problem.slug, problem.network)
        assert parsed == problem, f"problem round-trip {index} diverged"
    for index in range(250):
        reduction = _random_reduction(rng)
        parsed, _ = codec.parse_reduction(
            codec.parse_document(codec.serialize_reduction(reduction)), reduction.slug, reduction.network)
        assert parsed == reduction, f"reduction round-trip {index} diverged"
    elapsed = time.monotonic() - started
    assert elapsed < 5.0, f"round-trips took {elapsed:.2f}s"
    report(1, f"500 generated values round-tripped exactly in {elapsed:.2f}s")


def test_criterion_2_format_compliance():
    fields = codec.parse_document("# name\nVertex Cover\n")
    assert len(fields.entries) == 1
    entry = fields.entries[0]
    assert entry.key == "name"
    assert entry.value == "Vertex Cover"
    report(2, 'worked-example document parses to exactly ("name", "Vertex Cover")')


def test_criterion_3_validator_completeness(tmp_path):
    clean = validate_corpus(FIXTURE_CORPUS)
    assert clean.findings == (), "clean fixture must produce zero findings"
    for code, seed in sorted(DEFECT_SEEDS.items()):
        root = tmp_path / code
        shutil.copytree(FIXTURE_CORPUS, root)
        seed(root)
        errors = [f for f in validate_corpus(root).findings if f.severity == "error"]
        assert len(errors) == 1, f"{code}: expected exactly one error, got {[(f.code, f.message) for f in errors]}"
        assert errors[0].code == code
    report(3, f"each of the {len(DEFECT_SEEDS)} defect classes yields exactly one matching error; clean fixture is clean")


def test_criterion_4_validator_ingest_agreement(tmp_path):
    rng = random.Random(4242)
    seeds = sorted(DEFECT_SEEDS.items())
    for trial in range(50):
        root = tmp_path / f"trial-{trial}"
        shutil.copytree(FIXTURE_CORPUS, root)
        for _, seed in rng.sample(seeds, k=rng.randint(0, 2)):
            seed(root)
        report_errors = validate_corpus(root).errors
        try:
            ingest(root)
            ingested = True
        except ValidationFailed:
            ingested = False
        assert (report_errors == 0) == ingested, f"trial {trial}: errors={report_errors}, ingest={ingested}"
    report(4, "validate errors == 0 ⇔ ingest succeeds over 50 defect-seeded corpora")


def test_criterion_5_filter_oracle_equivalence(snapshot):
    problems, reductions = corpus_oracle.load_network(FIXTURE_CORPUS, "classic")
    specs = list(all_classic_filters())
    for spec in specs:
        expected_nodes, expected_edges = corpus_oracle.filter_graph(
            problems, reductions, set(spec.problem_tags), set(spec.reduction_tags))
        graph = network_graph(snapshot, "classic", spec)
        assert {n.slug for n in graph.nodes} == expected_nodes, spec
        assert {e.slug for e in graph.edges} == expected_edges, spec

    # worked case: parsimonious reductions shown alongside the problems
    # whose counting version is #P-complete
    spec = FilterSpec(problem_tags=frozenset({"sharp-p-complete"}), reduction_tags=frozenset({"parsimonious"}))
    graph = network_graph(snapshot, "classic", spec)
    parsimonious_edges = {slug for slug, r in reductions.items() if "parsimonious" in r["tags"]}
    assert {e.slug for e in graph.edges} == parsimonious_edges
    sharp_p = {slug for slug, p in problems.items() if "sharp-p-complete" in p["tags"]}
    endpoints = {reductions[s]["from"] for s in parsimonious_edges} | {reductions[s]["to"] for s in parsimonious_edges}
    assert {n.slug for n in graph.nodes} == sharp_p | endpoints
    report(5, f"network_graph matches the brute-force oracle on all {len(specs)} filter specs incl. the parsimonious case")


def test_criterion_6_filter_identity_and_monotonicity(snapshot):
    full = network_graph(snapshot, "classic", FilterSpec())
    data = snapshot.networks["classic"]
    assert {n.slug for n in full.nodes} == set(data.problems)
    assert {e.slug for e in full.edges} == set(data.reductions)

    specs = list(all_classic_filters())
    edge_sets = {spec: {e.slug for e in network_graph(snapshot, "classic", spec).edges} for spec in specs}
    pairs = 0
    for small in specs:
        for large in specs:
            if small != large and small.problem_tags <= large.problem_tags and small.reduction_tags <= large.reduction_tags:
                assert edge_sets[large] <= edge_sets[small], (small, large)
                pairs += 1
    report(6, f"empty filter is the identity; edge sets never grow across {pairs} subset pairs")


def test_criterion_7_search_contract(snapshot):
    from reduction_atlas.store import search

    results = search(snapshot, "classic", "Vertex Cover")
    assert results[0].slug == "vertex-cover" and results[0].rank_class == "exact-name"

    alt = search(snapshot, "classic", "Node Cover")
    assert alt[0].slug == "vertex-cover" and alt[0].rank_class == "exact-alternative"

    assert search(snapshot, "classic", "zzz-no-such") == []

    # brute-force rank oracle over the fixture's name lists
    problems, _ = corpus_oracle.load_network(FIXTURE_CORPUS, "classic")
    for query in ("sat", "clique", "cover", "s", "SAT", "maximum"):
        needle = query.lower()
        expected = {}
        for slug, info in problems.items():
            names = [(info["name"], True)] + [(alt_name, False) for alt_name in info["alternative_names"]]
            ranks = []
            for name, is_primary in names:
                lowered = name.lower()
                if lowered == needle:
                    ranks.append(0 if is_primary else 1)
                elif lowered.startswith(needle):
                    ranks.append(2)
                elif needle in lowered:
                    ranks.append(3)
            if ranks:
                expected[slug] = min(ranks)
        got = {r.slug: ("exact-name", "exact-alternative", "prefix", "substring").index(r.rank_class)
               for r in search(snapshot, "classic", query)}
        assert got == expected, query
    report(7, "search ranks match the brute-force scan; exact/alternative/no-match cases hold")


def test_criterion_8_api_contract(tmp_path):
    store = SnapshotStore()
    store.publish(ingest(FIXTURE_CORPUS))
    app = create_app(store, rate_limit=10_000)
    with TestClient(app) as client:
        networks = client.get("/api/networks")
        assert networks.status_code == 200
        assert [n["id"] for n in networks.json()] == ["approximation", "classic", "parameterized"]

        graph = client.get("/api/networks/classic/graph?reduction_tags=parsimonious")
        assert graph.status_code == 200
        assert [e["slug"] for e in graph.json()["edges"]] == ["3-satisfiability-to-vertex-cover"]

        problem = client.get("/api/networks/classic/problems/vertex-cover")
        assert problem.status_code == 200
        assert problem.json()["problem"]["name"] == "Vertex Cover"

        reduction = client.get("/api/networks/classic/reductions/3-satisfiability-to-vertex-cover")
        assert reduction.status_code == 200
        assert reduction.json()["to_problem"]["name"] == "Vertex Cover"

        found = client.get("/api/networks/classic/search?q=Vertex%20Cover")
        assert found.status_code == 200
        assert found.json()[0]["slug"] == "vertex-cover"

        assert client.get("/api/health").json()["status"] == "ok"

        # forced error cases
        assert client.get("/api/networks/classic/graph?reduction_tags=bogus").status_code == 400
        assert client.get("/api/networks/classic/search?q=").status_code == 400
        assert client.get("/api/networks/quantum/graph").status_code == 404
        assert client.get("/api/networks/classic/problems/nope").status_code == 404
        assert client.get("/api/networks/classic/reductions/nope").status_code == 404

    with TestClient(create_app(SnapshotStore())) as cold:
        assert cold.get("/api/networks").status_code == 503

    limited_app = create_app(store, rate_limit=5)
    with TestClient(limited_app) as client:
        codes = [client.get("/api/health").status_code for _ in range(6)]
        assert codes == [200] * 5 + [429]
    report(8, "golden bodies, forced 400/404/503 cases, and 429 after 5 requests all hold")


def test_criterion_9_snapshot_isolation_under_sync(corpus_copy):
    store = SnapshotStore()
    assert sync_once(corpus_copy, store)
    old = store.get()
    old_problems = dict(old.networks["classic"].problems)

    # corpus swap mid-iteration: the held reference only ever shows old data
    path = corpus_copy / "classic" / "problems" / "clique.md"
    path.write_text(path.read_text().replace("# name\nClique\n", "# name\nClique Renamed\n"))
    seen = []
    for slug in old.networks["classic"].problems:
        sync_once(corpus_copy, store)  # swap happens while the reader iterates
        seen.append(old.networks["classic"].problems[slug])
    assert {p.slug: p for p in seen} == old_problems
    assert store.get().networks["classic"].problems["clique"].name == "Clique Renamed"

    # corrupted corpus: served snapshot unchanged, failure counted, health reflects it
    current = store.get()
    DEFECT_SEEDS["dangling-endpoint"](corpus_copy)
    assert sync_once(corpus_copy, store) is False
    assert store.get() is current
    app = create_app(store, rate_limit=10_000)
    with TestClient(app) as client:
        health = client.get("/api/health").json()
        assert health["sync_failures"] == 1
        assert health["snapshot_digest"] == current.corpus_digest
    report(9, "readers see only one corpus version; a broken sync tick leaves the snapshot and bumps sync_failures")
