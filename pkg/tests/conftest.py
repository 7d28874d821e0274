import pytest

from models.presentation import Presentation
from models.word import Word
from presentation import parse_presentation, parse_word
from utilities.corpus import get_presentation


@pytest.fixture
def z2() -> Presentation:
    return parse_presentation("name: Z2\ngens: a b\nrel: [a,b]\n")


@pytest.fixture
def c7() -> Presentation:
    """One relator of length 7 whose pieces all have length 1."""
    return parse_presentation("name: C7\ngens: a b c\nrel: a^2 b c a^-1 b c^-1\n")


@pytest.fixture
def corpus():
    return get_presentation


@pytest.fixture
def word():
    """word(p, text) parses text over p's alphabet."""

    def parse(p: Presentation, text: str) -> Word:
        return parse_word(text, p.alphabet)

    return parse

