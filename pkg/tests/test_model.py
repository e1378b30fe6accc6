import pytest

from reduction_atlas.model import (
    FilterSpec,
    ModelError,
    NetworkManifest,
    Problem,
    Reduction,
    check_slug,
    slug_from_filename,
)


def make_problem(**overrides):
    kwargs = dict(slug="vertex-cover", network="classic", name="Vertex Cover", abbreviation="VC")
    kwargs.update(overrides)
    return Problem(**kwargs)


class TestSlug:
    @pytest.mark.parametrize("value", ["a", "vertex-cover", "3-satisfiability", "a1-b2"])
    def test_valid(self, value):
        assert check_slug(value) == value

    @pytest.mark.parametrize("value", ["", "-a", "a-", "A", "a--b", "a_b", "a b", "café"])
    def test_invalid(self, value):
        with pytest.raises(ModelError) as exc:
            check_slug(value)
        assert exc.value.field == "slug"

    def test_from_filename_strips_extension(self):
        assert slug_from_filename("vertex-cover.md") == "vertex-cover"

    def test_from_filename_rejects_bad_stem(self):
        with pytest.raises(ModelError):
            slug_from_filename("Vertex Cover.md")


class TestProblem:
    def test_valid_construction(self):
        p = make_problem(alternative_names=("Node Cover",), completeness=frozenset({"np-complete"}))
        assert p.name == "Vertex Cover"
        assert p.completeness == {"np-complete"}

    def test_empty_name_rejected(self):
        with pytest.raises(ModelError) as exc:
            make_problem(name="   ")
        assert exc.value.field == "name"

    def test_empty_abbreviation_rejected(self):
        with pytest.raises(ModelError) as exc:
            make_problem(abbreviation="")
        assert exc.value.field == "abbreviation"

    def test_duplicate_alternative_names_rejected(self):
        with pytest.raises(ModelError) as exc:
            make_problem(alternative_names=("VC", "VC"))
        assert exc.value.field == "alternative_names"

    def test_alternative_name_equal_to_name_rejected(self):
        with pytest.raises(ModelError):
            make_problem(alternative_names=("Vertex Cover",))

    def test_bad_completeness_tag_rejected(self):
        with pytest.raises(ModelError) as exc:
            make_problem(completeness=frozenset({"NP-Complete"}))
        assert exc.value.field == "completeness"

    def test_equality_is_fieldwise(self):
        assert make_problem() == make_problem()
        assert make_problem() != make_problem(description="x")


class TestReduction:
    def test_valid_construction(self):
        r = Reduction(slug="a-to-b", network="classic", from_problem="a", to_problem="b",
                      properties=frozenset({"parsimonious"}))
        assert r.from_problem == "a"

    def test_self_loop_rejected(self):
        with pytest.raises(ModelError):
            Reduction(slug="a-to-a", network="classic", from_problem="a", to_problem="a")

    def test_bad_property_tag_rejected(self):
        with pytest.raises(ModelError) as exc:
            Reduction(slug="a-to-b", network="classic", from_problem="a", to_problem="b",
                      properties=frozenset({"Bad Tag"}))
        assert exc.value.field == "properties"


class TestManifest:
    def test_valid(self):
        m = NetworkManifest(network="classic", display_name="Classical",
                            problem_tags=frozenset({"np-complete"}))
        assert m.display_name == "Classical"

    def test_blank_display_name_rejected(self):
        with pytest.raises(ModelError):
            NetworkManifest(network="classic", display_name=" ")


class TestFilterSpec:
    def test_empty_means_no_filtering(self):
        assert FilterSpec().is_empty

    def test_nonempty(self):
        assert not FilterSpec(problem_tags=frozenset({"np-complete"})).is_empty

    def test_bad_tag_rejected(self):
        with pytest.raises(ModelError):
            FilterSpec(reduction_tags=frozenset({"no good"}))
