import pytest

from models.errors import DuplicateGeneratorError, PresentationSyntaxError, UnknownSymbolError
from models.presentation import Graph, GroupHom, Presentation
from models.results import Verdict
from models.word import Letter, Word
from presentation import (
    WordOp,
    apply_hom,
    complete_graph,
    concat,
    compose_hom,
    cyclic_reduce,
    exponent_sums,
    format_word,
    free_reduce,
    graph_join,
    identity_hom,
    is_hom_certified,
    parse_graph,
    parse_presentation,
    parse_word,
    serialize_graph,
    serialize_presentation,
    word_algebra,
)
from reductions.oracles import free_group_oracle
from tests.helpers import all_codes
from utilities.corpus import get_presentation, list_entry_ids

AB = ("a", "b")


# -----------------------------------------------------------------------------
# Words
# -----------------------------------------------------------------------------
def test_free_reduce_cancels_adjacent_inverses():
    raw = [Letter(generator=0), Letter(generator=0, sign=-1), Letter(generator=1)]
    assert free_reduce(raw).codes == (2,)


def test_word_rejects_unreduced_letters():
    with pytest.raises(ValueError):
        Word(letters=(Letter(generator=0), Letter(generator=0, sign=-1)))


def test_free_reduce_is_idempotent():
    for codes in all_codes(2, 5, reduced=False):
        once = free_reduce(Letter.from_code(c) for c in codes)
        assert free_reduce(once.letters) == once


def test_cyclic_reduce_splits_off_conjugator():
    w = parse_word("b a c a^-1 b^-1", ("a", "b", "c"))
    core, conjugator = cyclic_reduce(w)
    assert core.codes == (3,)
    assert conjugator.codes == (2, 1)


def test_word_algebra_operations():
    a, b = Word.generator(0), Word.generator(1)
    assert word_algebra(WordOp.COMMUTATOR, a, b).codes == (1, 2, -1, -2)
    assert word_algebra("power", word_algebra("concat", a, b), -2).codes == (-2, -1, -2, -1)
    assert word_algebra("invert", a).codes == (-1,)


def test_exponent_sums():
    assert exponent_sums(parse_word("a^3 b^-1 a^-1", AB), 2) == [2, -1]


@pytest.mark.parametrize(
    "text, codes",
    [
        ("a", (1,)),
        ("a^3", (1, 1, 1)),
        ("a^-1 b", (-1, 2)),
        ("(a b)^2", (1, 2, 1, 2)),
        ("a * b", (1, 2)),
        ("[a, b]", (1, 2, -1, -2)),
        ("[a^2, b]^-1", (2, 1, 1, -2, -1, -1)),
        ("1", ()),
        ("a a^-1", ()),
    ],
)
def test_parse_word(text, codes):
    assert parse_word(text, AB).codes == codes


def test_format_word_uses_powers():
    assert format_word(parse_word("a a a b^-1", AB), AB) == "a^3 b^-1"
    assert format_word(Word(), AB) == "1"
    assert parse_word(format_word(parse_word("[a^2,b^2]", AB), AB), AB) == parse_word("[a^2,b^2]", AB)


# -----------------------------------------------------------------------------
# Presentations
# -----------------------------------------------------------------------------
def test_parse_presentation_reads_directives():
    p = parse_presentation("# torus knot\nname: T3\ngens: a b\n\nrel: [a,b]^3   # one relator\n")
    assert p.name == "T3"
    assert p.alphabet == AB
    assert len(p.relators) == 1
    assert len(p.relators[0]) == 12


def test_parse_presentation_cyclically_reduces_and_drops_trivial_relators():
    p = parse_presentation("gens: a b\nrel: b a b^-1\nrel: a a^-1\n")
    assert [r.codes for r in p.relators] == [(1,)]


def test_serialize_then_parse_is_identity():
    p = parse_presentation("name: S3\ngens: a b\nrel: a^2\nrel: b^3\nrel: (a b)^2\n")
    assert parse_presentation(serialize_presentation(p)) == p


@pytest.mark.parametrize("entry", list_entry_ids())
def test_corpus_presentations_survive_serialization(entry):
    p = get_presentation(entry)
    assert parse_presentation(serialize_presentation(p)) == p


def test_unknown_symbol():
    with pytest.raises(UnknownSymbolError):
        parse_presentation("gens: a b\nrel: a c\n")


def test_duplicate_generator():
    with pytest.raises(DuplicateGeneratorError):
        parse_presentation("gens: a a\n")


@pytest.mark.parametrize(
    "text, line",
    [
        ("rel: a\n", 1),
        ("gens: a\nfoo: a\n", 2),
        ("gens: a b\nrel: a ^\n", 2),
        ("gens: a b\n\nrel: (a b\n", 3),
        ("gens: a\ngens: b\n", 2),
    ],
)
def test_syntax_errors_carry_the_line(text, line):
    with pytest.raises(PresentationSyntaxError) as info:
        parse_presentation(text)
    assert info.value.line == line


def test_presentation_rejects_out_of_range_relator():
    with pytest.raises(ValueError):
        Presentation(alphabet=("a",), relators=(Word.generator(1),))


# -----------------------------------------------------------------------------
# Homomorphisms
# -----------------------------------------------------------------------------
def test_apply_and_compose_hom(z2):
    z = Presentation(name="Z", alphabet=("t",))
    to_z = GroupHom(source=z2, target=z, images=(Word.generator(0), Word()))
    w = parse_word("a b a b^-1 a^-1", AB)
    assert apply_hom(to_z, w).codes == (1,)
    assert compose_hom(to_z, identity_hom(z2)) == to_z
    assert is_hom_certified(to_z, free_group_oracle) is Verdict.TRIVIAL


def test_apply_hom_respects_concatenation(z2):
    f2 = Presentation(name="F2", alphabet=AB)
    h = GroupHom(source=f2, target=z2, images=(parse_word("a b^-1", AB), parse_word("b^2 a", AB)))
    words = [Word.from_codes(codes) for codes in all_codes(2, 3)]
    for u in words:
        for v in words:
            assert apply_hom(h, concat(u, v)) == concat(apply_hom(h, u), apply_hom(h, v))


def test_uncertified_hom(z2):
    f2 = Presentation(name="F2", alphabet=AB)
    inclusion = GroupHom(source=z2, target=f2, images=(Word.generator(0), Word.generator(1)))
    assert is_hom_certified(inclusion, free_group_oracle) is Verdict.NONTRIVIAL


def test_hom_needs_one_image_per_generator(z2):
    with pytest.raises(ValueError):
        GroupHom(source=z2, target=z2, images=(Word(),))


# -----------------------------------------------------------------------------
# Graphs
# -----------------------------------------------------------------------------
def test_graph_file_format():
    g = parse_graph("n=3\n# a path\n1 0\n1 2\n")
    assert g == Graph(n=3, edges=[(0, 1), (1, 2)])
    assert parse_graph(serialize_graph(g)) == g


@pytest.mark.parametrize("text", ["3\n", "n=2\n0 0\n", "n=2\n0 5\n", "n=2\n0\n"])
def test_bad_graph_files(text):
    with pytest.raises(PresentationSyntaxError):
        parse_graph(text)


def test_graph_join_adds_all_cross_edges():
    joined = graph_join(Graph(n=2), Graph(n=1))
    assert joined.edges == ((0, 2), (1, 2))


def test_complete_graph_is_a_join_of_single_vertices():
    assert complete_graph(1) == Graph(n=1)
    assert graph_join(Graph(n=1), Graph(n=1)) == complete_graph(2)
    assert graph_join(complete_graph(2), Graph(n=1)) == complete_graph(3)
