# =============================================================================
# presentation/words.py
# =============================================================================
# Purpose:
# Free-group word algebra: reduction, cyclic reduction, products, powers,
# commutators and exponent sums.
#
# Every result is freely reduced; Word.from_codes does the cancelling.
# =============================================================================

from enum import Enum
from typing import Iterable

from models.errors import PreconditionError
from models.word import Letter, Word, invert_codes


class WordOp(str, Enum):
    INVERT = "invert"
    CONCAT = "concat"
    POWER = "power"
    COMMUTATOR = "commutator"


def free_reduce(raw: Iterable[Letter]) -> Word:
    """The unique freely reduced word equal to `raw` in the free group."""
    return Word.from_codes(letter.code for letter in raw)


def cyclic_reduce(w: Word) -> tuple[Word, Word]:
    """Split w as conjugator · core · conjugator⁻¹ with core cyclically reduced."""
    codes = w.codes
    start, end = 0, len(codes)
    # Peel matching x ... x^-1 pairs off both ends
    while end - start >= 2 and codes[start] == -codes[end - 1]:
        start += 1
        end -= 1
    return Word.from_codes(codes[start:end]), Word.from_codes(codes[:start])


def is_cyclically_reduced(codes: tuple[int, ...]) -> bool:
    return len(codes) < 2 or codes[0] != -codes[-1]


def invert(w: Word) -> Word:
    return Word.from_codes(invert_codes(w.codes))


def concat(*words: Word) -> Word:
    return Word.from_codes(code for w in words for code in w.codes)


def power(w: Word, exponent: int) -> Word:
    base = w.codes if exponent >= 0 else invert_codes(w.codes)
    return Word.from_codes(base * abs(exponent))


def commutator(u: Word, v: Word) -> Word:
    """[u, v] = u v u⁻¹ v⁻¹."""
    return concat(u, v, invert(u), invert(v))


def conjugate(w: Word, by: Word) -> Word:
    """by · w · by⁻¹."""
    return concat(by, w, invert(by))


def word_algebra(op: WordOp | str, *args) -> Word:
    op = WordOp(op)
    if op is WordOp.INVERT:
        (w,) = args
        return invert(w)
    if op is WordOp.CONCAT:
        return concat(*args)
    if op is WordOp.POWER:
        w, exponent = args
        return power(w, int(exponent))
    if op is WordOp.COMMUTATOR:
        u, v = args
        return commutator(u, v)
    raise PreconditionError(f"unknown word operation {op!r}")


def exponent_sums(w: Word, rank: int) -> list[int]:
    sums = [0] * rank
    for letter in w.letters:
        sums[letter.generator] += letter.sign
    return sums


def cyclic_rotations(codes: tuple[int, ...]) -> list[tuple[int, ...]]:
    return [codes[i:] + codes[:i] for i in range(len(codes))]
