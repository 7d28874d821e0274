"""
End-to-end properties on small decidable instances. The exhaustive variants
are marked slow; `pytest -m "not slow"` runs the reduced grids only.
"""
import random
from fractions import Fraction

import pytest

from constructions import (
    brute_force_coset_count,
    fibre_data_from_rips,
    reidemeister_schreier,
    rips,
    todd_coxeter,
    wreath_multiply,
)
from constructions.fibre import pair_product
from mcg import (
    block_wreath_embed,
    check_relations,
    direct_sum_form,
    is_symplectic,
    raag_symplectic_rep,
    wreath_genus,
    wreath_genus_stepwise,
)
from models.matrix import IntMatrix
from models.reductions import ConjugacyVerdict, Membership, PairWord
from models.results import Verdict, WreathElement
from models.word import Word, reduce_codes
from presentation import invert, is_hom_certified, parse_word
from presentation.graphs import isomorphism_classes
from reductions.conjugacy import conjugacy_reduction_query, product_table, split_pair_word
from reductions.demo import mapping_torus_demo
from reductions.membership import membership_query
from reductions.modular import (
    S,
    T,
    build_phi,
    gamma0_generators,
    gamma0_membership,
    order_four_element,
    phi_of_matrix,
    projective_line_index,
    torsion_order,
)
from reductions.oracles import free_group_oracle
from solvers import brute_force_trivial, check_small_cancellation, dehn_oracle
from solvers.raag import RaagNormalizer
from tests.helpers import all_codes, su_matrix
from utilities.corpus import entries_with_tag, get_entries, get_presentation


# -----------------------------------------------------------------------------
# Rips certification
# -----------------------------------------------------------------------------
def test_rips_outputs_recertify():
    ids = [e["id"] for e in entries_with_tag("rips")]
    assert len(ids) >= 10
    assert {"t2", "t3", "f2", "c2"} <= set(ids)
    for entry in ids:
        out = rips(get_presentation(entry))
        report = check_small_cancellation(out.gamma)
        assert Fraction(report.max_piece_length, report.min_relator_length) < Fraction(1, 6), entry
        assert report.ratio == out.certification.ratio


# -----------------------------------------------------------------------------
# Dehn's algorithm against brute force
# -----------------------------------------------------------------------------
def _dehn_against_brute(max_len: int) -> tuple[int, int]:
    p = get_presentation("c7-word")
    dehn = dehn_oracle(p)
    definitive = trivial = 0
    for codes in all_codes(p.rank, max_len):
        w = Word.from_codes(codes)
        verdict = dehn(w)
        result = brute_force_trivial(w, p, max_len=max_len + 4, max_steps=300)
        if result.verdict is Verdict.TRIVIAL:
            assert verdict is Verdict.TRIVIAL, codes
            trivial += 1
        elif result.abelian_witness:
            assert verdict is Verdict.NONTRIVIAL, codes
        else:
            continue
        definitive += 1
    return definitive, trivial


def test_dehn_agrees_with_brute_force_on_short_words():
    definitive, trivial = _dehn_against_brute(5)
    assert trivial == 1
    assert definitive > 1000


@pytest.mark.slow
def test_dehn_agrees_with_brute_force_up_to_length_eight():
    _, trivial = _dehn_against_brute(8)
    # cyclic permutations of the relator and its inverse, plus the empty word
    assert trivial >= 15


# -----------------------------------------------------------------------------
# RAAG normal forms against the swap-and-cancel partition
# -----------------------------------------------------------------------------
def _check_partition(max_len: int) -> None:
    for g in isomorphism_classes(4):
        adjacency = g.adjacency()
        words = list(all_codes(g.n, max_len))
        index = {w: k for k, w in enumerate(words)}
        parent = list(range(len(words)))

        def find(k: int) -> int:
            while parent[k] != k:
                parent[k] = parent[parent[k]]
                k = parent[k]
            return k

        for w in words:
            for k in range(len(w) - 1):
                x, y = w[k], w[k + 1]
                if abs(x) != abs(y) and abs(y) - 1 in adjacency[abs(x) - 1]:
                    swapped = reduce_codes(w[:k] + (y, x) + w[k + 2:])
                    parent[find(index[w])] = find(index[swapped])

        normalizer = RaagNormalizer(g)
        form_of: dict[int, tuple[int, ...]] = {}
        root_of: dict[tuple[int, ...], int] = {}
        for w in words:
            root, form = find(index[w]), normalizer.normal_codes(w)
            assert form_of.setdefault(root, form) == form, (g, w)
            assert root_of.setdefault(form, root) == root, (g, w)


def test_raag_normal_forms_match_the_partition():
    _check_partition(3)


@pytest.mark.slow
def test_raag_normal_forms_match_the_partition_to_length_five():
    _check_partition(5)


# -----------------------------------------------------------------------------
# Fibre-product membership over rips(Z)
# -----------------------------------------------------------------------------
@pytest.fixture(scope="module")
def fibre_z():
    return fibre_data_from_rips(rips(get_presentation("z")))


def _x_sum(codes: tuple[int, ...]) -> int:
    return sum(1 if c > 0 else -1 for c in codes if abs(c) == 1)


def _check_membership(f, max_len: int) -> None:
    words = [Word.from_codes(c) for c in all_codes(3, max_len)]
    for u in words:
        for v in words:
            expected = Membership.MEMBER if _x_sum(u.codes) == _x_sum(v.codes) else Membership.NON_MEMBER
            assert membership_query(PairWord(left=u, right=v), f, free_group_oracle) is expected


def test_membership_matches_the_quotient(fibre_z):
    _check_membership(fibre_z, 2)


@pytest.mark.slow
def test_membership_matches_the_quotient_to_length_four(fibre_z):
    _check_membership(fibre_z, 4)


def test_members_are_closed_under_products(fibre_z):
    rng = random.Random(5)
    members = []
    while len(members) < 40:
        u = Word.from_codes(rng.choice((1, -1, 2, -2, 3, -3)) for _ in range(rng.randint(0, 6)))
        v = Word.from_codes(rng.choice((1, -1, 2, -2, 3, -3)) for _ in range(rng.randint(0, 6)))
        if _x_sum(u.codes) == _x_sum(v.codes):
            members.append(PairWord(left=u, right=v))
    for first, second in zip(members, reversed(members)):
        product = pair_product([first, second])
        inverse = PairWord(left=invert(first.left), right=invert(first.right))
        assert membership_query(product, fibre_z, free_group_oracle) is Membership.MEMBER
        assert membership_query(inverse, fibre_z, free_group_oracle) is Membership.MEMBER


# -----------------------------------------------------------------------------
# Conjugacy against membership on the mapping torus
# -----------------------------------------------------------------------------
_TO_MEMBERSHIP = {
    ConjugacyVerdict.CONJUGATE: Membership.MEMBER,
    ConjugacyVerdict.NOT_CONJUGATE: Membership.NON_MEMBER,
    ConjugacyVerdict.UNKNOWN: Membership.UNKNOWN,
}


def _check_conjugacy(words) -> None:
    demo = mapping_torus_demo()
    base = max(1, product_table(demo.table).max_entry_length)
    for w in words:
        query = conjugacy_reduction_query(w, demo.fibre, demo.table, demo.quotient_oracle)
        membership = membership_query(split_pair_word(w, 3), demo.fibre, demo.quotient_oracle)
        assert _TO_MEMBERSHIP[query.verdict] is membership, w.codes
        assert len(query.rewritten) <= 2 * base ** len(w)


def test_conjugacy_matches_membership_on_short_words():
    _check_conjugacy(Word.from_codes(c) for c in all_codes(6, 2))


@pytest.mark.slow
def test_conjugacy_matches_membership_to_length_five():
    _check_conjugacy(Word.from_codes(c) for c in all_codes(6, 5))


def _random_length_six_words(seed: int, count: int) -> list[Word]:
    rng = random.Random(seed)
    letters = [c for g in range(1, 7) for c in (g, -g)]
    words = []
    while len(words) < count:
        codes = tuple(rng.choice(letters) for _ in range(6))
        if reduce_codes(codes) == codes:
            words.append(Word.from_codes(codes))
    return words


def test_conjugacy_matches_membership_on_100_random_length_six_words():
    _check_conjugacy(_random_length_six_words(6, 100))


@pytest.mark.slow
def test_conjugacy_matches_membership_on_5000_random_length_six_words():
    _check_conjugacy(_random_length_six_words(66, 5000))


# -----------------------------------------------------------------------------
# Γ0(17)
# -----------------------------------------------------------------------------
def test_order_four_element_of_gamma0_17():
    gamma = IntMatrix.from_rows([[4, -1], [17, -4]])
    assert gamma == order_four_element(17)
    assert gamma0_membership(gamma, 17)
    assert torsion_order(gamma) == 4
    assert gamma @ gamma == IntMatrix.from_rows([[-1, 0], [0, -1]])


def test_phi_at_level_17_is_cross_checked():
    phi = build_phi(17)
    assert phi.index == projective_line_index(17) == 18
    assert phi.free_rank >= 1
    generators = [su_matrix(g) for g in gamma0_generators(17)]
    assert any(phi_of_matrix(phi, g) for g in generators)
    rng = random.Random(1)
    for _ in range(100):
        a = rng.choice(generators) @ rng.choice(generators)
        b = rng.choice(generators).inverse() @ rng.choice(generators)
        assert phi_of_matrix(phi, a @ b) == phi_of_matrix(phi, a) + phi_of_matrix(phi, b)


# -----------------------------------------------------------------------------
# Symplectic images of RAAG generators
# -----------------------------------------------------------------------------
def _check_representation(max_vertices: int, cap: int) -> None:
    for g in isomorphism_classes(max_vertices):
        report = check_relations(raag_symplectic_rep(g, 2), g, cap)
        assert report.violations == 0, g
        for pair in report.pairs:
            assert pair.commute == pair.edge
            if not pair.edge:
                assert pair.relation is None


def test_representation_pattern_on_small_graphs():
    _check_representation(3, 6)


@pytest.mark.slow
def test_representation_pattern_up_to_five_vertices():
    _check_representation(5, 8)


# -----------------------------------------------------------------------------
# Genus bookkeeping and block matrices
# -----------------------------------------------------------------------------
@pytest.mark.parametrize("g_s", [0, 1, 2])
@pytest.mark.parametrize("b", [1, 2, 3])
@pytest.mark.parametrize("h", [0, 1, 3])
@pytest.mark.parametrize("m", [1, 2, 4])
def test_genus_two_ways(g_s, b, h, m):
    last = wreath_genus_stepwise(g_s, b, h, m)[-1]
    assert last.boundary == 0
    assert (2 - last.euler_characteristic) // 2 == wreath_genus(g_s, b, h, m)


def test_wreath_genus_genus_one_over_genus_two_base():
    assert wreath_genus(1, 1, 2, 2) == 4


def test_block_embedding_on_random_pairs():
    rng = random.Random(11)
    generators = [S, T, T.inverse()]

    def element() -> WreathElement:
        top = list(range(4))
        rng.shuffle(top)
        bottom = []
        for _ in range(4):
            m = IntMatrix.identity(2)
            for _ in range(rng.randint(0, 5)):
                m = m @ rng.choice(generators)
            bottom.append(m)
        return WreathElement(top=tuple(top), bottom=tuple(bottom))

    form = direct_sum_form(4, 1)
    for _ in range(100):
        w1, w2 = element(), element()
        product = block_wreath_embed(wreath_multiply(w1, w2), 2)
        assert product == block_wreath_embed(w1, 2) @ block_wreath_embed(w2, 2)
        assert is_symplectic(product, form)


# -----------------------------------------------------------------------------
# Finite-index pipeline
# -----------------------------------------------------------------------------
def test_even_length_subgroup_of_f2_is_free_of_rank_three():
    f2 = get_presentation("f2")
    gens = [parse_word(s, f2.alphabet) for s in ("a^2", "a b", "b a")]
    table = todd_coxeter(f2, gens).table
    assert table.n_cosets == 2
    subgroup, inclusion = reidemeister_schreier(f2, table)
    assert subgroup.rank == 3
    assert subgroup.relators == ()
    assert is_hom_certified(inclusion, free_group_oracle) is Verdict.TRIVIAL


def test_coset_indices_match_counting():
    small = [e["id"] for e in get_entries() if e.get("order") and e["order"] <= 48]
    assert len(small) >= 10
    for entry in small:
        p = get_presentation(entry)
        assert todd_coxeter(p).index == brute_force_coset_count(p, [])
        for g in range(p.rank):
            gens = [Word.generator(g)]
            assert todd_coxeter(p, gens).index == brute_force_coset_count(p, gens), (entry, g)
