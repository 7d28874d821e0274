# =============================================================================
# models/word.py
# =============================================================================
# Purpose:
# Letters and words, the currency every other module trades in.
#
# A Letter is a generator index into the owning alphabet plus a sign.
# A Word is an ordered tuple of letters; the constructors in this module keep
# words freely reduced, so the empty word is the identity.
#
# Searches run on the integer code of a word (see `Word.codes`): letter
# (g, +1) is code g+1 and (g, -1) is code -(g+1). Hashable, cheap, and
# inversion is negation.
# =============================================================================

from typing import Iterable, Literal

from pydantic import BaseModel, ConfigDict, field_validator


# -----------------------------------------------------------------------------
# Letter
# -----------------------------------------------------------------------------
class Letter(BaseModel):
    model_config = ConfigDict(frozen=True)

    # 0-based index into the alphabet of the owning presentation
    generator: int

    # +1 for the generator, -1 for its inverse
    sign: Literal[1, -1] = 1

    @field_validator("generator")
    @classmethod
    def _non_negative(cls, value: int) -> int:
        if value < 0:
            raise ValueError("generator index must be non-negative")
        return value

    @property
    def code(self) -> int:
        return (self.generator + 1) * self.sign

    @classmethod
    def from_code(cls, code: int) -> "Letter":
        return cls(generator=abs(code) - 1, sign=1 if code > 0 else -1)

    def inverse(self) -> "Letter":
        return Letter(generator=self.generator, sign=-self.sign)


# -----------------------------------------------------------------------------
# Word
# -----------------------------------------------------------------------------
class Word(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    letters: tuple[Letter, ...] = ()

    @field_validator("letters")
    @classmethod
    def _freely_reduced(cls, letters: tuple[Letter, ...]) -> tuple[Letter, ...]:
        for left, right in zip(letters, letters[1:]):
            if left.generator == right.generator and left.sign == -right.sign:
                raise ValueError("word is not freely reduced")
        return letters

    # -------------------------------------------------------------------------
    # Integer codes
    # -------------------------------------------------------------------------
    @property
    def codes(self) -> tuple[int, ...]:
        return tuple(letter.code for letter in self.letters)

    @classmethod
    def from_codes(cls, codes: Iterable[int]) -> "Word":
        """Build a word from letter codes, freely reducing on the way in."""
        return cls(letters=tuple(Letter.from_code(c) for c in reduce_codes(codes)))

    @classmethod
    def identity(cls) -> "Word":
        return cls()

    @classmethod
    def generator(cls, index: int, power: int = 1) -> "Word":
        code = index + 1 if power > 0 else -(index + 1)
        return cls.from_codes([code] * abs(power))

    def __len__(self) -> int:
        return len(self.letters)

    def is_identity(self) -> bool:
        return not self.letters

    def max_generator(self) -> int:
        """Largest generator index used, or -1 for the identity."""
        return max((letter.generator for letter in self.letters), default=-1)


# -----------------------------------------------------------------------------
# Code-level helpers shared by the searchers
# -----------------------------------------------------------------------------
def reduce_codes(codes: Iterable[int]) -> tuple[int, ...]:
    """Free reduction on letter codes with a stack; result has no x x^-1 pair."""
    stack: list[int] = []
    for code in codes:
        if stack and stack[-1] == -code:
            stack.pop()
        else:
            stack.append(code)
    return tuple(stack)


def invert_codes(codes: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(-c for c in reversed(codes))


def shortlex_key(codes: tuple[int, ...]) -> tuple[int, tuple[int, ...]]:
    """Shortlex key in declaration order, a generator before its inverse."""
    return len(codes), tuple(2 * (abs(c) - 1) + (0 if c > 0 else 1) for c in codes)
