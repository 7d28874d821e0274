from fractions import Fraction

import pytest

from constructions import (
    brute_force_coset_count,
    build_raag,
    direct_product,
    fibre_data_from_rips,
    fibre_product_generators,
    reidemeister_schreier,
    rips,
    schreier_rewrite,
    todd_coxeter,
    transversal_words,
    wreath_embed,
    wreath_inverse,
    wreath_multiply,
)
from constructions.fibre import decompose_pair, pair_product
from constructions.rips import padding_offsets
from constructions.todd_coxeter import finite_group_oracle, is_valid_table
from constructions.wreath import wreath_identity
from models.errors import PreconditionError, TransversalError
from models.presentation import Graph
from models.reductions import PairWord
from models.results import Verdict
from models.word import Word
from presentation import apply_hom, complete_graph, is_hom_certified, parse_word
from reductions.oracles import choose_oracle, free_group_oracle, raag_graph_of
from tests.helpers import all_codes
from utilities.corpus import entries_with_tag, get_entries

FINITE = [e["id"] for e in get_entries() if e.get("order")]
RIPS = [e["id"] for e in entries_with_tag("rips")]


# -----------------------------------------------------------------------------
# RAAGs and products
# -----------------------------------------------------------------------------
def test_build_raag_matches_corpus(corpus):
    built = build_raag(Graph(n=3, edges=[(0, 1), (1, 2)]))
    path3 = corpus("path3")
    assert built.alphabet == path3.alphabet == ("v1", "v2", "v3")
    assert built.relators == path3.relators


def test_direct_product_renames_clashes(corpus):
    product, left, right = direct_product(corpus("c2"), corpus("c3"))
    assert product.alphabet == ("x", "x_2")
    assert len(product.relators) == 3
    assert todd_coxeter(product).index == 6
    oracle = finite_group_oracle(product)
    assert is_hom_certified(left, oracle) is Verdict.TRIVIAL
    assert is_hom_certified(right, oracle) is Verdict.TRIVIAL


def test_direct_product_of_free_groups_is_a_raag(corpus):
    product, _, _ = direct_product(corpus("z"), corpus("z"))
    kind, _ = choose_oracle(product)
    assert kind == "raag"
    assert raag_graph_of(product) == complete_graph(2)
    assert build_raag(complete_graph(2)).relators == product.relators


# -----------------------------------------------------------------------------
# Rips construction
# -----------------------------------------------------------------------------
def test_padding_offsets_grow_past_twelve_blocks():
    assert padding_offsets(8, 4) == (9, 17, 25, 33)
    assert padding_offsets(16, 4)[0] == 193


@pytest.mark.parametrize("entry", RIPS)
def test_rips_is_certified(corpus, entry):
    q = corpus(entry)
    out = rips(q)
    assert out.certification.ratio_value < Fraction(1, 6)
    assert out.gamma.rank == q.rank + 2
    assert len(out.gamma.relators) == len(q.relators) + 4 * q.rank
    assert out.padding_params.block_count >= 16
    assert out.p.target == q


def test_rips_on_z_doubles_blocks_once(corpus):
    out = rips(corpus("z"))
    assert out.padding_params.block_count == 16
    assert out.gamma.alphabet == ("x", "a1", "a2")


def test_rips_quotient_map_is_a_homomorphism(corpus):
    q = corpus("c3")
    out = rips(q)
    _, oracle = choose_oracle(q)
    assert is_hom_certified(out.p, oracle) is Verdict.TRIVIAL


def test_rips_output_is_deterministic(corpus):
    assert rips(corpus("klein")).model_dump_json() == rips(corpus("klein")).model_dump_json()


def test_rips_rejects_few_blocks(corpus):
    with pytest.raises(PreconditionError):
        rips(corpus("z"), blocks=4)
    with pytest.raises(PreconditionError):
        rips(corpus("trivial").model_copy(update={"alphabet": (), "relators": ()}))


# -----------------------------------------------------------------------------
# Fibre products
# -----------------------------------------------------------------------------
def test_fibre_product_generators(corpus):
    f = fibre_data_from_rips(rips(corpus("z")))
    gens = fibre_product_generators(f, free_group_oracle)
    assert len(gens) == 5
    assert gens[0] == PairWord(left=Word.generator(1))
    assert gens[2] == PairWord.diagonal(Word.generator(0))
    assert f.pair_alphabet == ("(x,1)", "(a1,1)", "(a2,1)", "(1,x)", "(1,a1)", "(1,a2)")


def test_fibre_product_rejects_uncertified_kernel(corpus):
    f = fibre_data_from_rips(rips(corpus("z")))
    bad = f.model_copy(update={"kernel_gens": (Word.generator(0),)})
    with pytest.raises(PreconditionError):
        fibre_product_generators(bad, free_group_oracle)


def test_decompose_pair():
    u, v = Word.from_codes((1, 2, -3)), Word.from_codes((3, 3, -1))
    kernel_part, diagonal = decompose_pair(u, v)
    assert pair_product([kernel_part] + diagonal) == PairWord(left=u, right=v)


# -----------------------------------------------------------------------------
# Todd-Coxeter
# -----------------------------------------------------------------------------
@pytest.mark.parametrize("entry", FINITE)
def test_todd_coxeter_finds_the_order(corpus, entry):
    p = corpus(entry)
    order = next(e["order"] for e in get_entries() if e["id"] == entry)
    enumeration = todd_coxeter(p)
    assert enumeration.completed
    assert enumeration.index == order
    assert is_valid_table(enumeration.table, p)


def test_todd_coxeter_gives_up_on_infinite_groups(z2):
    enumeration = todd_coxeter(z2, max_cosets=200)
    assert not enumeration.completed
    assert enumeration.table is None
    assert enumeration.index is None


@pytest.mark.parametrize(
    "entry, subgroup, index",
    [("s3", ["a"], 3), ("s3", ["b"], 2), ("d4", ["a"], 2), ("a4", ["a", "b a b^-1"], 3), ("q8", ["i"], 2)],
)
def test_subgroup_index_agrees_with_counting(corpus, word, entry, subgroup, index):
    p = corpus(entry)
    gens = [word(p, s) for s in subgroup]
    assert todd_coxeter(p, gens).index == index
    assert brute_force_coset_count(p, gens) == index


def test_subgroup_of_infinite_group(corpus, word):
    f2 = corpus("f2")
    enumeration = todd_coxeter(f2, [word(f2, "a^2"), word(f2, "b"), word(f2, "a b a^-1")])
    assert enumeration.index == 2
    assert is_valid_table(enumeration.table, f2)


def test_subgroup_generator_out_of_range(corpus):
    with pytest.raises(PreconditionError):
        todd_coxeter(corpus("c2"), [Word.generator(1)])


def test_finite_group_oracle(corpus, word):
    s3 = corpus("s3")
    oracle = finite_group_oracle(s3)
    assert oracle(word(s3, "(a b)^2")) is Verdict.TRIVIAL
    assert oracle(word(s3, "a b")) is Verdict.NONTRIVIAL


# -----------------------------------------------------------------------------
# Reidemeister-Schreier
# -----------------------------------------------------------------------------
def test_index_two_subgroup_of_f2(corpus, word):
    f2 = corpus("f2")
    table = todd_coxeter(f2, [word(f2, "a^2"), word(f2, "b"), word(f2, "a b a^-1")]).table
    subgroup, inclusion = reidemeister_schreier(f2, table)
    assert subgroup.rank == 3
    assert subgroup.relators == ()
    assert set(subgroup.alphabet) <= {f"{x}_{c}" for x in "ab" for c in range(2)}
    assert transversal_words(table) == [Word(), Word.generator(0)]


def test_trivial_subgroup_of_s3(corpus):
    s3 = corpus("s3")
    subgroup, inclusion = reidemeister_schreier(s3, todd_coxeter(s3).table)
    assert subgroup.rank == 7
    assert is_hom_certified(inclusion, finite_group_oracle(s3)) is Verdict.TRIVIAL


def test_schreier_rewrite_inverts_the_inclusion(corpus):
    s3 = corpus("s3")
    table = todd_coxeter(s3, [parse_word("a", s3.alphabet)]).table
    _, inclusion = reidemeister_schreier(s3, table)
    checked = 0
    for codes in all_codes(s3.rank, 5):
        w = Word.from_codes(codes)
        if table.act_word(0, w) != 0:
            continue
        assert apply_hom(inclusion, schreier_rewrite(w, table)) == w
        checked += 1
    assert checked > 10


def test_schreier_rewrite_rejects_non_members(corpus):
    s3 = corpus("s3")
    table = todd_coxeter(s3, [parse_word("a", s3.alphabet)]).table
    with pytest.raises(PreconditionError):
        schreier_rewrite(Word.generator(1), table)


def test_reidemeister_schreier_needs_matching_table(corpus):
    with pytest.raises(PreconditionError):
        reidemeister_schreier(corpus("f2"), todd_coxeter(corpus("c2")).table)


# -----------------------------------------------------------------------------
# Wreath products
# -----------------------------------------------------------------------------
@pytest.fixture
def s3_mod_a(corpus):
    s3 = corpus("s3")
    table = todd_coxeter(s3, [parse_word("a", s3.alphabet)]).table
    return s3, table, transversal_words(table)


def test_wreath_embed_is_a_homomorphism(s3_mod_a):
    s3, table, transversal = s3_mod_a
    words = [Word.from_codes(c) for c in all_codes(s3.rank, 3)]
    for u in words:
        for v in words:
            product = Word.from_codes(u.codes + v.codes)
            expected = wreath_embed(product, table, transversal)
            got = wreath_multiply(wreath_embed(u, table, transversal), wreath_embed(v, table, transversal))
            assert got == expected


def test_wreath_bottoms_lie_in_the_subgroup(s3_mod_a):
    s3, table, transversal = s3_mod_a
    element = wreath_embed(parse_word("b a b", s3.alphabet), table, transversal)
    assert len(element.top) == 3
    assert all(table.act_word(0, w) == 0 for w in element.bottom)


def test_wreath_inverse(s3_mod_a):
    s3, table, transversal = s3_mod_a
    element = wreath_embed(parse_word("a b^-1 a b", s3.alphabet), table, transversal)
    assert wreath_multiply(element, wreath_inverse(element)) == wreath_identity(3)
    assert wreath_multiply(wreath_inverse(element), element) == wreath_identity(3)


def test_wreath_embed_checks_the_transversal(s3_mod_a):
    s3, table, transversal = s3_mod_a
    with pytest.raises(TransversalError):
        wreath_embed(Word.generator(0), table, transversal[:2])
    with pytest.raises(TransversalError):
        wreath_embed(Word.generator(0), table, [Word.generator(0)] + transversal[1:])
    with pytest.raises(TransversalError):
        wreath_embed(Word.generator(0), table, [transversal[0], transversal[2], transversal[1]])
