import shutil
from pathlib import Path

import pytest

FIXTURE_CORPUS = Path(__file__).resolve().parents[1] / "fixtures" / "corpus"


@pytest.fixture(scope="session")
def fixture_corpus() -> Path:
    return FIXTURE_CORPUS


@pytest.fixture(scope="session")
def snapshot():
    from reduction_atlas.store import ingest

    return ingest(FIXTURE_CORPUS)


@pytest.fixture
def corpus_copy(tmp_path) -> Path:
    dest = tmp_path / "corpus"
    shutil.copytree(FIXTURE_CORPUS, dest)
    return dest


def seed_missing_field(root: Path):
    # an isolated problem, so dropping it cannot cascade into dangling endpoints
    path = root / "classic" / "problems" / "hamiltonian-cycle.md"
    text = path.read_text()
    path.write_text(text.replace("# abbreviation\nHC\n\n", ""))


def seed_duplicate_field(root: Path):
    path = root / "classic" / "problems" / "clique.md"
    path.write_text(path.read_text() + "\n# name\nClique Again\n")


def seed_duplicate_slug(root: Path):
    src = root / "classic" / "problems" / "clique.md"
    extra = root / "classic" / "problems" / "extra"
    extra.mkdir()
    (extra / "clique.md").write_text(src.read_text())


def seed_dangling_endpoint(root: Path):
    path = root / "classic" / "reductions" / "clique-to-nowhere.md"
    path.write_text("# from\nclique\n\n# to\nnowhere\n")


def seed_unknown_tag(root: Path):
    path = root / "classic" / "problems" / "clique.md"
    text = path.read_text()
    path.write_text(text.replace("# complexity\n", "# complexity\nmystery-tag\n"))


def seed_bad_directory(root: Path):
    (root / "broken").mkdir()


DEFECT_SEEDS = {
    "missing-field": seed_missing_field,
    "duplicate-field": seed_duplicate_field,
    "duplicate-slug": seed_duplicate_slug,
    "dangling-endpoint": seed_dangling_endpoint,
    "unknown-tag": seed_unknown_tag,
    "bad-directory": seed_bad_directory,
}
