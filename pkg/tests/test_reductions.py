import random

import pytest
from pydantic import ValidationError

from constructions import fibre_data_from_rips, rips
from models.errors import DimensionMismatchError, PreconditionError
from models.matrix import IntMatrix
from models.reductions import ConjugacyVerdict, Membership, PairWord, ZKernelSpec
from models.results import Verdict
from models.word import Word
from presentation import concat, conjugate, invert
from reductions.conjugacy import (
    conjugacy_reduction_query,
    conjugacy_rewrite,
    conjugation_table_from_rips,
    product_table,
    split_pair_word,
)
from reductions.demo import mapping_torus_demo, mapping_torus_oracle
from reductions.membership import membership_query, z_kernel_membership, z_kernel_value
from reductions.modular import (
    MINUS_IDENTITY,
    S,
    T,
    build_phi,
    evaluate_st,
    gamma0_generators,
    gamma0_membership,
    kn_membership,
    kn_torsion_witness,
    order_four_element,
    phi_of_matrix,
    projective_line_index,
    sl2z_word,
    st_to_su,
    torsion_order,
)
from reductions.oracles import choose_oracle, free_group_oracle
from solvers.dehn import dehn_solve
from tests.helpers import all_codes, su_matrix
from utilities.corpus import get_presentation


# -----------------------------------------------------------------------------
# Oracle selection
# -----------------------------------------------------------------------------
@pytest.mark.parametrize(
    "entry, kind",
    [("f2", "free"), ("z2", "raag"), ("path3", "raag"), ("c7-word", "dehn"), ("s3", "finite"), ("bs12", "brute-force")],
)
def test_choose_oracle(corpus, entry, kind):
    assert choose_oracle(corpus(entry))[0] == kind


# -----------------------------------------------------------------------------
# Fibre-product membership
# -----------------------------------------------------------------------------
@pytest.fixture(scope="module")
def rips_z():
    return rips(get_presentation("z"))


def test_membership_matches_x_exponents(rips_z):
    f = fibre_data_from_rips(rips_z)
    x, a1 = Word.generator(0), Word.generator(1)
    assert membership_query(PairWord(left=concat(x, a1), right=x), f, free_group_oracle) is Membership.MEMBER
    assert membership_query(PairWord(left=x), f, free_group_oracle) is Membership.NON_MEMBER
    assert membership_query(PairWord(left=a1, right=invert(a1)), f, free_group_oracle) is Membership.MEMBER


def test_membership_unknown_when_oracle_is_unsure(rips_z):
    f = fibre_data_from_rips(rips_z)
    assert membership_query(PairWord(), f, lambda w: Verdict.UNKNOWN) is Membership.UNKNOWN


def test_z_kernel(corpus, word):
    z2 = corpus("z2")
    spec = ZKernelSpec.from_weights([z2, z2], [[1, 0], [0, 1]])
    assert z_kernel_membership([word(z2, "a"), word(z2, "b^-1")], spec) is Membership.MEMBER
    assert z_kernel_membership([word(z2, "a"), word(z2, "a")], spec) is Membership.NON_MEMBER
    assert z_kernel_value([word(z2, "a^3 b"), word(z2, "b^2")], spec) == 5


def test_z_kernel_rejects_non_surjective_maps(corpus):
    with pytest.raises(ValidationError):
        ZKernelSpec.from_weights([corpus("z2")], [[2, 4]])


def test_z_kernel_dimension_mismatch(corpus):
    spec = ZKernelSpec.from_weights([corpus("z2")], [[1, 0]])
    with pytest.raises(DimensionMismatchError):
        z_kernel_value([Word(), Word()], spec)


# -----------------------------------------------------------------------------
# Conjugation tables
# -----------------------------------------------------------------------------
def test_rips_conjugation_table_entries_hold_in_gamma(rips_z):
    gamma = rips_z.gamma
    m = gamma.rank - 2
    table = conjugation_table_from_rips(rips_z)
    assert len(table.entries) == 2 * 2 * gamma.rank
    for entry in table.entries:
        b = Word.generator(entry.outer, entry.sign)
        inner = Word.from_codes(c + m if c > 0 else c - m for c in entry.word.codes)
        lhs = conjugate(Word.generator(m + entry.inner), b)
        assert dehn_solve(concat(lhs, invert(inner)), gamma) is Verdict.TRIVIAL


def test_conjugacy_rewrite_on_the_demo():
    demo = mapping_torus_demo()
    x = Word.generator(0)
    assert conjugacy_rewrite(x, 0, demo.table).codes == (1, 2)
    assert conjugacy_rewrite(concat(x, x), 0, demo.table).codes == (1, 2, 2)
    assert conjugacy_rewrite(invert(x), 0, demo.table).codes == (1, -2)
    assert conjugacy_rewrite(Word(), 1, demo.table).codes == (2,)


def test_conjugacy_rewrite_rejects_foreign_letters():
    demo = mapping_torus_demo()
    with pytest.raises(PreconditionError):
        conjugacy_rewrite(Word.generator(5), 0, demo.table)
    with pytest.raises(PreconditionError):
        conjugacy_rewrite(Word(), 2, demo.table)


def test_product_table_commutes_factors():
    demo = mapping_torus_demo()
    table = product_table(demo.table)
    lookup = table.lookup()
    assert len(table.outer_gens) == 6 and len(table.inner_gens) == 4
    assert lookup[(0, 1, 0)].codes == (1, 2)
    assert lookup[(3, 1, 2)].codes == (3, 4)
    assert lookup[(0, 1, 2)].codes == (3,)


def test_split_pair_word():
    pair = split_pair_word(Word.from_codes((1, 4, -2, 6)), 3)
    assert pair == PairWord(left=Word.from_codes((1, -2)), right=Word.from_codes((1, 3)))


def _check_rewrite(w: Word, query, demo) -> None:
    left, right = split_pair_word(w, 3).left, split_pair_word(w, 3).right
    rewritten = split_pair_word(query.rewritten, 2)
    a1 = Word.generator(1)
    for component, image in ((left, rewritten.left), (right, rewritten.right)):
        difference = concat(demo.embed_inner(image), invert(conjugate(a1, component)))
        assert mapping_torus_oracle(difference) is Verdict.TRIVIAL


def test_conjugacy_reduction_on_short_words():
    demo = mapping_torus_demo()
    envelope_base = max(1, product_table(demo.table).max_entry_length)
    for codes in all_codes(6, 3):
        w = Word.from_codes(codes)
        query = conjugacy_reduction_query(w, demo.fibre, demo.table, demo.quotient_oracle)
        pair = split_pair_word(w, 3)
        x_left = sum(1 if c > 0 else -1 for c in pair.left.codes if abs(c) == 1)
        x_right = sum(1 if c > 0 else -1 for c in pair.right.codes if abs(c) == 1)
        expected = ConjugacyVerdict.CONJUGATE if x_left == x_right else ConjugacyVerdict.NOT_CONJUGATE
        assert query.verdict is expected
        assert len(query.rewritten) <= 2 * envelope_base ** len(w)
        _check_rewrite(w, query, demo)


def test_conjugacy_reduction_needs_matching_table(rips_z):
    demo = mapping_torus_demo()
    with pytest.raises(PreconditionError):
        conjugacy_reduction_query(Word(), fibre_data_from_rips(rips_z), product_table(demo.table), free_group_oracle)


def test_mapping_torus_oracle():
    # x a1 x^-1 = a1 a2
    assert mapping_torus_oracle(Word.from_codes((1, 2, -1, -3, -2))) is Verdict.TRIVIAL
    assert mapping_torus_oracle(Word.from_codes((1, 3, -1, -3))) is Verdict.TRIVIAL
    assert mapping_torus_oracle(Word.from_codes((1, 2, -1, -2))) is Verdict.NONTRIVIAL
    assert mapping_torus_oracle(Word.from_codes((1,))) is Verdict.NONTRIVIAL


# -----------------------------------------------------------------------------
# SL(2, Z) and Γ0(p)
# -----------------------------------------------------------------------------
@pytest.mark.parametrize(
    "rows",
    [[[1, 0], [0, 1]], [[0, -1], [1, 0]], [[-1, 0], [0, -1]], [[2, 1], [1, 1]], [[4, -1], [17, -4]], [[-7, 3], [-5, 2]]],
)
def test_sl2z_word_multiplies_back(rows):
    m = IntMatrix.from_rows(rows)
    w = sl2z_word(m)
    assert evaluate_st(w) == m
    assert su_matrix(st_to_su(w)) == m


def test_sl2z_word_checks_its_input():
    with pytest.raises(DimensionMismatchError):
        sl2z_word(IntMatrix.identity(3))
    with pytest.raises(PreconditionError):
        sl2z_word(IntMatrix.from_rows([[2, 0], [0, 1]]))


def test_torsion_orders():
    assert torsion_order(S) == 4
    assert torsion_order(S @ T) == 6
    assert torsion_order(MINUS_IDENTITY) == 2
    assert torsion_order(T) is None
    assert torsion_order(order_four_element(17)) == 4


def test_gamma0_membership():
    assert gamma0_membership(T, 17)
    assert not gamma0_membership(S, 17)
    assert gamma0_membership(IntMatrix.from_rows([[4, -1], [17, -4]]), 17)


def test_projective_line():
    assert projective_line_index(17) == 18
    assert len(gamma0_generators(17)) == 19
    for g in gamma0_generators(17):
        assert gamma0_membership(su_matrix(g), 17)


def test_phi_at_level_17():
    phi = build_phi(17)
    assert phi.index == 18
    assert phi.free_rank == 3
    assert phi.torsion == (2, 2)
    assert order_four_element(17) == IntMatrix.from_rows([[4, -1], [17, -4]])
    assert phi_of_matrix(phi, order_four_element(17)) == 0
    assert phi_of_matrix(phi, IntMatrix.identity(2)) == 0


def test_phi_is_additive():
    phi = build_phi(17)
    generators = [su_matrix(g) for g in gamma0_generators(17)]
    rng = random.Random(17)
    for _ in range(100):
        a = rng.choice(generators) @ rng.choice(generators)
        b = rng.choice(generators) @ rng.choice(generators).inverse()
        assert phi_of_matrix(phi, a @ b) == phi_of_matrix(phi, a) + phi_of_matrix(phi, b)


def test_phi_needs_prime_level():
    with pytest.raises(PreconditionError):
        build_phi(15)


def test_phi_rejects_matrices_outside_gamma0():
    with pytest.raises(PreconditionError):
        phi_of_matrix(build_phi(17), S)


def test_kn_membership():
    phi = build_phi(17)
    assert kn_membership([T, T.inverse()], phi) is Membership.MEMBER
    nonzero = next(su_matrix(g) for g in gamma0_generators(17) if phi_of_matrix(phi, su_matrix(g)) != 0)
    assert kn_membership([nonzero, IntMatrix.identity(2)], phi) is Membership.NON_MEMBER


def test_kn_torsion_witness():
    witness = kn_torsion_witness(T, 3)
    assert witness.member
    assert witness.order == 4
    assert witness.phi_values == (0, 0, 0)
    assert len(witness.matrices) == 3


def test_kn_torsion_witness_checks_x():
    with pytest.raises(PreconditionError):
        kn_torsion_witness(S, 2)
    with pytest.raises(PreconditionError):
        kn_torsion_witness(T, 0)
