import re

import pytest
from hypothesis import given, settings, strategies as st

from reduction_atlas import codec
from reduction_atlas.codec import CodecError, parse_document, scan_document
from reduction_atlas.model import Problem, Reduction


def field_pairs(text):
    fields = parse_document(text)
    return [(entry.key, entry.value) for entry in fields.entries]


def oracle_split(text):
    """Independent splitter: cut the line list on ^# , trim blank lines."""
    pairs = []
    key, buf = None, []
    for line in text.replace("\r\n", "\n").split("\n"):
        m = re.match(r"^# (.*)$", line)
        if m:
            if key is not None:
                pairs.append((key, "\n".join(buf).strip("\n")))
            key, buf = m.group(1).strip().lower(), []
        elif key is not None:
            buf.append(line)
    if key is not None:
        pairs.append((key, "\n".join(buf).strip("\n")))
    return [(k, _trim_blank(v)) for k, v in pairs]


def _trim_blank(value):
    lines = value.split("\n")
    while lines and not lines[0].strip():
        lines.pop(0)
    while lines and not lines[-1].strip():
        lines.pop()
    return "\n".join(lines)


class TestParseDocument:
    def test_single_field(self):
        assert field_pairs("# name\nVertex Cover\n") == [("name", "Vertex Cover")]

    def test_empty_document(self):
        assert field_pairs("") == []

    def test_subheadings_belong_to_value(self):
        text = "# name\nA\n\n# abbreviation\nVC\n## note\nx\n"
        expected = [("name", "A"), ("abbreviation", "VC\n## note\nx")]
        assert field_pairs(text) == expected
        assert oracle_split(text) == expected

    @pytest.mark.parametrize("text", [
        "# name\nA\n# x\n\nfoo\nbar\n\n# y\n  \nbaz\n",
        "# a\n1\n2\n\n# b\n\n# c\n###deep\n",
    ])
    def test_matches_independent_oracle(self, text):
        assert field_pairs(text) == oracle_split(text)

    def test_duplicate_field_rejected(self):
        with pytest.raises(CodecError) as exc:
            parse_document("# name\nA\n\n# name\nB\n")
        assert exc.value.issue.code == "duplicate-field"
        assert exc.value.issue.location.line == 4

    def test_preamble_content_rejected(self):
        with pytest.raises(CodecError) as exc:
            parse_document("stray text\n# name\nA\n")
        assert exc.value.issue.code == "preamble-content"
        assert exc.value.issue.location.line == 1

    def test_leading_blank_lines_before_first_heading_are_fine(self):
        assert field_pairs("\n\n# name\nA\n") == [("name", "A")]

    def test_crlf_and_lf_parse_identically(self):
        lf = "# name\nVertex Cover\n\n# abbreviation\nVC\n"
        crlf = lf.replace("\n", "\r\n")
        assert parse_document(lf) == parse_document(crlf)

    def test_heading_without_space_is_value_content(self):
        assert field_pairs("# name\n#not-a-heading\n") == [("name", "#not-a-heading")]

    def test_scan_collects_multiple_issues(self):
        _, issues = scan_document("junk\n# name\nA\n# name\nB\n")
        assert [issue.code for issue in issues] == ["preamble-content", "duplicate-field"]


class TestParseProblem:
    def parse(self, text, slug="vertex-cover", network="classic"):
        return codec.parse_problem(parse_document(text), slug, network)

    def test_basic_fields(self):
        problem, warnings = self.parse("# name\nVertex Cover\n\n# abbreviation\nVC\n\n# complexity\nnp-complete\n")
        assert problem.name == "Vertex Cover"
        assert problem.abbreviation == "VC"
        assert problem.completeness == {"np-complete"}
        assert warnings == []

    def test_missing_name(self):
        with pytest.raises(CodecError) as exc:
            self.parse("# abbreviation\nVC\n")
        assert exc.value.issue.code == "missing-field"
        assert "name" in exc.value.issue.message

    def test_empty_required_field(self):
        with pytest.raises(CodecError) as exc:
            self.parse("# name\n\n# abbreviation\nVC\n")
        assert exc.value.issue.code == "empty-field"

    def test_alternative_names_one_per_line(self):
        text = "# name\nSatisfiability\n\n# abbreviation\nS\n\n# alternative-names\nSAT\nBoolean Satisfiability\n"
        problem, _ = self.parse(text, slug="satisfiability")
        assert problem.alternative_names == ("SAT", "Boolean Satisfiability")

    def test_malformed_tag(self):
        with pytest.raises(CodecError) as exc:
            self.parse("# name\nA\n\n# abbreviation\nB\n\n# complexity\nNot A Tag\n")
        assert exc.value.issue.code == "malformed-tag"

    def test_unknown_field_is_warning_not_error(self):
        problem, warnings = self.parse("# name\nA\n\n# abbreviation\nB\n\n# video\nhttp://x\n")
        assert problem.name == "A"
        assert [w.code for w in warnings] == ["unknown-field"]
        assert all(w.severity == "warning" for w in warnings)

    def test_description_preserves_tex(self):
        text = "# name\nA\n\n# abbreviation\nB\n\n# description\nLet $G=(V,E)$ be a graph.\n\n$$x^2$$\n"
        problem, _ = self.parse(text)
        assert problem.description == "Let $G=(V,E)$ be a graph.\n\n$$x^2$$"


class TestParseReduction:
    def parse(self, text, slug="some-reduction", network="classic"):
        return codec.parse_reduction(parse_document(text), slug, network)

    def test_basic(self):
        text = "# from\n3-satisfiability\n\n# to\nvertex-cover\n\n# properties\nparsimonious\n"
        reduction, _ = self.parse(text)
        assert reduction.from_problem == "3-satisfiability"
        assert reduction.to_problem == "vertex-cover"
        assert reduction.properties == {"parsimonious"}

    def test_missing_to(self):
        with pytest.raises(CodecError) as exc:
            self.parse("# from\na\n")
        assert exc.value.issue.code == "missing-field"
        assert "to" in exc.value.issue.message

    def test_self_loop(self):
        with pytest.raises(CodecError) as exc:
            self.parse("# from\na\n\n# to\na\n")
        assert exc.value.issue.code == "self-loop"

    def test_endpoint_must_be_identifier(self):
        with pytest.raises(CodecError) as exc:
            self.parse("# from\nNot A Slug\n\n# to\nb\n")
        assert exc.value.issue.code == "bad-slug"


class TestParseManifest:
    def parse(self, text, network="classic"):
        return codec.parse_manifest(parse_document(text), network)

    def test_basic(self):
        manifest, _ = self.parse("# display-name\nClassical\n\n# problem-tags\nnp-complete\nsharp-p-complete\n")
        assert manifest.display_name == "Classical"
        assert manifest.problem_tags == {"np-complete", "sharp-p-complete"}

    def test_missing_display_name(self):
        with pytest.raises(CodecError) as exc:
            self.parse("# problem-tags\nnp-complete\n")
        assert exc.value.issue.code == "missing-field"

    def test_empty_tag_list_is_valid(self):
        manifest, _ = self.parse("# display-name\nParameterized\n\n# reduction-tags\n")
        assert manifest.reduction_tags == frozenset()


# -- generation strategies for round-trip properties --

slugs = st.lists(
    st.text(alphabet="abcdefghijklmnopqrstuvwxyz0123456789", min_size=1, max_size=6),
    min_size=1, max_size=3,
).map("-".join)

tags = st.frozensets(slugs, max_size=4)

display_line = (
    st.text(
        alphabet=st.characters(codec="utf-8", exclude_characters="\r\n", exclude_categories=("Cc", "Cs")),
        min_size=1, max_size=40,
    )
    .map(str.strip)
    .filter(lambda s: s and not s.startswith("#"))
)

text_block = st.lists(
    st.one_of(st.just(""), display_line),
    min_size=1, max_size=6,
).map(lambda lines: "\n".join(lines).strip("\n")).filter(
    lambda s: not s or (s.split("\n")[0].strip() and s.split("\n")[-1].strip())
)


@st.composite
def problems(draw):
    name = draw(display_line)
    alternatives = draw(st.lists(display_line, max_size=3, unique=True).filter(lambda xs: name not in xs))
    return Problem(
        slug=draw(slugs),
        network=draw(slugs),
        name=name,
        abbreviation=draw(display_line),
        alternative_names=tuple(alternatives),
        description=draw(text_block),
        completeness=draw(tags),
        references=draw(text_block),
    )


@st.composite
def reductions(draw):
    from_problem = draw(slugs)
    to_problem = draw(slugs.filter(lambda s: s != from_problem))
    return Reduction(
        slug=draw(slugs),
        network=draw(slugs),
        from_problem=from_problem,
        to_problem=to_problem,
        description=draw(text_block),
        properties=draw(tags),
        references=draw(text_block),
    )


class TestSerialization:
    def test_canonical_problem_output(self):
        problem = Problem(slug="vertex-cover", network="classic", name="Vertex Cover", abbreviation="VC")
        assert codec.serialize_problem(problem) == "# name\nVertex Cover\n\n# abbreviation\nVC\n"

    def test_tags_serialize_sorted(self):
        reduction = Reduction(slug="a-to-b", network="classic", from_problem="a", to_problem="b",
                              properties=frozenset({"ssp", "parsimonious"}))
        assert "# properties\nparsimonious\nssp\n" in codec.serialize_reduction(reduction)

    def test_empty_optionals_omitted(self):
        reduction = Reduction(slug="a-to-b", network="classic", from_problem="a", to_problem="b")
        assert codec.serialize_reduction(reduction) == "# from\na\n\n# to\nb\n"

    @settings(max_examples=150, deadline=None)
    @given(problems())
    def test_problem_round_trip(self, problem):
        text = codec.serialize_problem(problem)
        parsed, warnings = codec.parse_problem(parse_document(text), problem.slug, problem.network)
        assert parsed == problem
        assert warnings == []

    @settings(max_examples=150, deadline=None)
    @given(reductions())
    def test_reduction_round_trip(self, reduction):
        text = codec.serialize_reduction(reduction)
        parsed, _ = codec.parse_reduction(parse_document(text), reduction.slug, reduction.network)
        assert parsed == reduction

    @settings(max_examples=80, deadline=None)
    @given(problems())
    def test_serialization_idempotent(self, problem):
        text = codec.serialize_problem(problem)
        parsed, _ = codec.parse_problem(parse_document(text), problem.slug, problem.network)
        assert codec.serialize_problem(parsed) == text

    def test_manifest_round_trip(self):
        from reduction_atlas.model import NetworkManifest
        manifest = NetworkManifest(network="classic", display_name="Classical",
                                   problem_tags=frozenset({"np-complete"}),
                                   reduction_tags=frozenset({"ssp", "parsimonious"}))
        text = codec.serialize_manifest(manifest)
        parsed, _ = codec.parse_manifest(parse_document(text), "classic")
        assert parsed == manifest
