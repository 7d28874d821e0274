# =============================================================================
# reductions/modular.py
# =============================================================================
# Purpose:
# Congruence subgroups Γ0(N) < SL(2, ℤ) and a surjection φ: Γ0(p) -> ℤ.
#
# Matrices are written as words in S = [[0,-1],[1,0]] and T = [[1,1],[0,1]]
# by the Euclidean algorithm on the first column; each word is re-multiplied
# as a certificate. φ is computed in PSL(2, ℤ) = <s, u | s^2, u^3> with
# s = S and u = ST:
#
#   projective line P^1(F_p)  ->  Schreier generators of the stabilizer
#   Todd-Coxeter on those     ->  coset table, index checked against p + 1
#   Reidemeister-Schreier     ->  presentation of the image of Γ0(p)
#   Smith normal form         ->  first free coordinate, the weights of φ
#
# S -> s, T -> s^-1 u lifts exactly to SL(2, ℤ); ±m have the same image in
# PSL and φ(-I) = 0, so the sign is dropped when φ is evaluated.
# =============================================================================

import logging
from collections import deque
from functools import lru_cache
from math import gcd, lcm

import sympy

from constructions.reidemeister_schreier import reidemeister_schreier, schreier_rewrite
from constructions.todd_coxeter import DEFAULT_MAX_COSETS, todd_coxeter
from models.errors import DimensionMismatchError, ForgeError, NoSurjectionError, PreconditionError
from models.matrix import IntMatrix
from models.presentation import GroupHom, Presentation
from models.reductions import INTEGERS, KnWitness, Membership, ModularPhi
from models.results import CosetTable
from models.word import Word
from presentation.words import exponent_sums
from solvers.smith import SmithNormalForm, relation_matrix

logger = logging.getLogger(__name__)

S = IntMatrix.from_rows([[0, -1], [1, 0]])
T = IntMatrix.from_rows([[1, 1], [0, 1]])
MINUS_IDENTITY = IntMatrix.from_rows([[-1, 0], [0, -1]])

# S = 1, T = 2
SL2Z = Presentation(
    name="SL2Z",
    alphabet=("S", "T"),
    relators=(Word.from_codes((1, 1, 1, 1)), Word.from_codes((2, 1, 2, 1, 2, -1))),
)

# s = 1, u = 2
PSL2Z = Presentation(
    name="PSL2Z",
    alphabet=("s", "u"),
    relators=(Word.from_codes((1, 1)), Word.from_codes((2, 2, 2))),
)


def _check_sl2(m: IntMatrix) -> None:
    if (m.rows, m.cols) != (2, 2):
        raise DimensionMismatchError(f"expected a 2x2 matrix, got {m.rows}x{m.cols}")
    if m.determinant() != 1:
        raise PreconditionError(f"determinant is {m.determinant()}, not 1")


def gamma0_membership(m: IntMatrix, level: int) -> bool:
    _check_sl2(m)
    return m[1, 0] % level == 0


def torsion_order(m: IntMatrix, max_n: int = 12) -> int | None:
    """Least n <= max_n with m^n = I."""
    _check_sl2(m)
    current = m
    for n in range(1, max_n + 1):
        if current.is_identity():
            return n
        current = current @ m
    return None


# -----------------------------------------------------------------------------
# Words in S and T
# -----------------------------------------------------------------------------
def evaluate_st(w: Word) -> IntMatrix:
    result = IntMatrix.identity(2)
    letters = {1: S, -1: S.inverse(), 2: T, -2: T.inverse()}
    for code in w.codes:
        result = result @ letters[code]
    return result


def sl2z_word(m: IntMatrix) -> Word:
    """A word in S, T equal to m, certified by re-multiplication."""
    _check_sl2(m)
    (a, b), (c, d) = m.entries
    codes: list[int] = []
    while c != 0:
        q = a // c
        codes.extend([2] * q if q >= 0 else [-2] * -q)
        codes.append(-1)
        # S T^-q applied on the left
        a, b, c, d = -c, -d, a - q * c, b - q * d
    if a == 1:
        codes.extend([2] * b if b >= 0 else [-2] * -b)
    else:
        codes.extend([1, 1])
        codes.extend([-2] * b if b >= 0 else [2] * -b)

    word = Word.from_codes(codes)
    if evaluate_st(word) != m:
        raise ForgeError("S/T word failed re-multiplication")
    return word


def st_to_su(w: Word) -> Word:
    """S -> s, T -> s^-1 u."""
    images = {1: (1,), -1: (-1,), 2: (-1, 2), -2: (-2, 1)}
    return Word.from_codes(c for code in w.codes for c in images[code])


# -----------------------------------------------------------------------------
# P^1(F_p): the independent index oracle
# -----------------------------------------------------------------------------
def _require_prime(level: int) -> None:
    if not sympy.isprime(level):
        raise PreconditionError(f"level {level} is not prime")


def _point(x: int, y: int, level: int) -> int:
    """Index of (x : y); (0 : 1) is 0, (1 : k) is k + 1."""
    x, y = x % level, y % level
    if x == 0:
        return 0
    return 1 + y * pow(x, -1, level) % level


def _coordinates(index: int) -> tuple[int, int]:
    return (0, 1) if index == 0 else (1, index - 1)


@lru_cache(maxsize=16)
def projective_line_action(level: int) -> CosetTable:
    """Right action of s and u on row vectors of P^1(F_level), base point (0 : 1)."""
    _require_prime(level)
    u = S @ T
    columns = []
    for matrix in (S, S.inverse(), u, u.inverse()):
        (a, b), (c, d) = matrix.entries
        column = []
        for index in range(level + 1):
            x, y = _coordinates(index)
            column.append(_point(x * a + y * c, x * b + y * d, level))
        columns.append(tuple(column))
    return CosetTable(n_cosets=level + 1, action=tuple(columns))


def projective_line_index(level: int) -> int:
    """Size of the orbit of (0 : 1), i.e. the index of Γ0(level)."""
    table = projective_line_action(level)
    seen, queue = {0}, deque([0])
    while queue:
        c = queue.popleft()
        for column in table.action:
            if column[c] not in seen:
                seen.add(column[c])
                queue.append(column[c])
    return len(seen)


def gamma0_generators(level: int) -> tuple[Word, ...]:
    """Words in s, u generating the image of Γ0(level): Schreier generators of the stabilizer of (0 : 1)."""
    _, inclusion = reidemeister_schreier(PSL2Z, projective_line_action(level))
    return inclusion.images


# -----------------------------------------------------------------------------
# φ
# -----------------------------------------------------------------------------
@lru_cache(maxsize=8)
def build_phi(level: int = 17, max_cosets: int = DEFAULT_MAX_COSETS) -> ModularPhi:
    _require_prime(level)
    enumeration = todd_coxeter(PSL2Z, gamma0_generators(level), max_cosets)
    if enumeration.table is None:
        raise PreconditionError(f"coset enumeration for level {level} did not finish within {max_cosets} cosets")
    expected = projective_line_index(level)
    if enumeration.index != expected:
        raise ForgeError(f"Todd-Coxeter index {enumeration.index} disagrees with the projective line ({expected})")

    subgroup, _ = reidemeister_schreier(PSL2Z, enumeration.table)
    m = relation_matrix(subgroup)
    if m.rows:
        snf = SmithNormalForm(m).run()
        diagonal, v = snf.diagonal(), snf.V
    else:
        diagonal, v = [], IntMatrix.identity(subgroup.rank).to_array()

    nonzero = [d for d in diagonal if d]
    free_rank = subgroup.rank - len(nonzero)
    if free_rank == 0:
        raise NoSurjectionError(f"the image of Γ0({level}) has finite abelianization")
    coordinate = next(j for j in range(subgroup.rank) if j >= len(diagonal) or diagonal[j] == 0)

    weights = [int(v[i, coordinate]) for i in range(subgroup.rank)]
    divisor = 0
    for w in weights:
        divisor = gcd(divisor, w)
    if divisor != 1:
        raise ForgeError(f"projection weights {weights} are not primitive")

    hom = GroupHom(source=subgroup, target=INTEGERS, images=tuple(Word.generator(0, w) for w in weights))
    logger.debug("phi: level %d, index %d, free rank %d, coordinate %d", level, expected, free_rank, coordinate)
    return ModularPhi(
        level=level,
        index=expected,
        table=enumeration.table,
        subgroup=subgroup,
        free_rank=free_rank,
        torsion=tuple(d for d in nonzero if d > 1),
        coordinate=coordinate,
        hom=hom,
    )


def phi_of_matrix(phi: ModularPhi, m: IntMatrix) -> int:
    if not gamma0_membership(m, phi.level):
        raise PreconditionError(f"matrix is not in Γ0({phi.level})")
    rewritten = schreier_rewrite(st_to_su(sl2z_word(m)), phi.table)
    sums = exponent_sums(rewritten, phi.subgroup.rank)
    return sum(w * s for w, s in zip(phi.weights, sums))


# -----------------------------------------------------------------------------
# K_n = ker(Γ0(p)^n -> ℤ)
# -----------------------------------------------------------------------------
def order_four_element(level: int) -> IntMatrix:
    """[[a, -(a^2+1)/level], [level, -a]] for the least a with level | a^2 + 1."""
    for a in range(level):
        if (a * a + 1) % level == 0:
            return IntMatrix.from_rows([[a, -(a * a + 1) // level], [level, -a]])
    raise PreconditionError(f"Γ0({level}) has no element of order four")


def kn_membership(matrices: list[IntMatrix] | tuple[IntMatrix, ...], phi: ModularPhi) -> Membership:
    total = sum(phi_of_matrix(phi, m) for m in matrices)
    return Membership.MEMBER if total == 0 else Membership.NON_MEMBER


def kn_torsion_witness(x: IntMatrix, n: int, level: int = 17, phi: ModularPhi | None = None) -> KnWitness:
    """(x^-1 γ x, γ, ..., γ) with γ of order four, checked to lie in K_n."""
    if n < 1:
        raise PreconditionError("n must be positive")
    if not gamma0_membership(x, level):
        raise PreconditionError(f"x is not in Γ0({level})")
    phi = phi or build_phi(level)
    gamma = order_four_element(level)
    matrices = (x.inverse() @ gamma @ x,) + (gamma,) * (n - 1)
    values = tuple(phi_of_matrix(phi, m) for m in matrices)
    orders = [torsion_order(m) for m in matrices]
    order = None if None in orders else lcm(*orders)
    return KnWitness(level=level, matrices=matrices, phi_values=values, member=sum(values) == 0, order=order)
