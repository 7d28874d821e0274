# =============================================================================
# presentation/parser.py
# =============================================================================
# Purpose:
# Reader and writer for the line-oriented `.grp` format:
#
#     # comment
#     name: T3                      (optional)
#     gens: a b                     (exactly once)
#     rel: [a,b]^3                  (zero or more)
#
# Word expressions are sequences of terms separated by whitespace or `*`:
#     a   a^3   a^-1   (a b)^2   [a, b]   [a^2, b]^-1   1
# Commutator sugar [x, y] expands to x y x^-1 y^-1.
# =============================================================================

import logging
import re
from dataclasses import dataclass

from models.errors import DuplicateGeneratorError, PresentationSyntaxError, UnknownSymbolError
from models.presentation import Presentation
from models.word import Word, invert_codes, reduce_codes
from presentation.words import cyclic_reduce

logger = logging.getLogger(__name__)

DEFAULT_NAME = "G"

IDENTIFIER = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")

TOKEN = re.compile(
    r"(?P<space>\s+)"
    r"|(?P<id>[A-Za-z_][A-Za-z0-9_]*)"
    r"|(?P<int>-?\d+)"
    r"|(?P<op>[\^*()\[\],])"
)


# -----------------------------------------------------------------------------
# Tokenizer
# -----------------------------------------------------------------------------
@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    line: int
    column: int


def _tokenize(text: str, line: int, column: int) -> list[Token]:
    tokens: list[Token] = []
    pos = 0
    while pos < len(text):
        match = TOKEN.match(text, pos)
        if match is None:
            raise PresentationSyntaxError(f"unexpected character {text[pos]!r}", line, column + pos)
        kind = match.lastgroup
        if kind != "space":
            tokens.append(Token(kind, match.group(), line, column + pos))
        pos = match.end()
    return tokens


# -----------------------------------------------------------------------------
# Word-expression parser (recursive descent)
# -----------------------------------------------------------------------------
class _WordParser:
    def __init__(self, tokens: list[Token], alphabet: tuple[str, ...], line: int, column: int):
        self.tokens = tokens
        self.pos = 0
        self.lookup = {symbol: i for i, symbol in enumerate(alphabet)}
        self.line = line
        self.column = column

    def _peek(self) -> Token | None:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def _error(self, message: str, token: Token | None = None) -> PresentationSyntaxError:
        if token is None:
            token = self._peek()
        if token is None:
            return PresentationSyntaxError(message, self.line, self.column)
        return PresentationSyntaxError(message, token.line, token.column)

    def _expect(self, text: str) -> None:
        token = self._peek()
        if token is None or token.text != text:
            raise self._error(f"expected {text!r}")
        self.pos += 1

    def parse(self) -> tuple[int, ...]:
        codes = self._expression(stop=())
        if self._peek() is not None:
            raise self._error(f"unexpected {self._peek().text!r}")
        return codes

    def _expression(self, stop: tuple[str, ...]) -> tuple[int, ...]:
        codes: list[int] = []
        seen_term = False
        while True:
            token = self._peek()
            if token is None or token.text in stop:
                break
            if token.text == "*":
                self.pos += 1
                continue
            codes.extend(self._term())
            seen_term = True
        if not seen_term:
            raise self._error("empty word expression")
        return reduce_codes(codes)

    def _term(self) -> tuple[int, ...]:
        token = self._peek()
        self.pos += 1
        if token.kind == "id":
            if token.text not in self.lookup:
                raise UnknownSymbolError(
                    f"line {token.line}, column {token.column}: unknown generator {token.text!r}"
                )
            base: tuple[int, ...] = (self.lookup[token.text] + 1,)
        elif token.kind == "int" and token.text == "1":
            base = ()
        elif token.text == "(":
            base = self._expression(stop=(")",))
            self._expect(")")
        elif token.text == "[":
            left = self._expression(stop=(",",))
            self._expect(",")
            right = self._expression(stop=("]",))
            self._expect("]")
            base = reduce_codes(left + right + invert_codes(left) + invert_codes(right))
        else:
            raise self._error(f"unexpected {token.text!r}", token)
        return self._exponent(base)

    def _exponent(self, base: tuple[int, ...]) -> tuple[int, ...]:
        token = self._peek()
        if token is None or token.text != "^":
            return base
        self.pos += 1
        token = self._peek()
        if token is None or token.kind != "int":
            raise self._error("expected an integer exponent")
        self.pos += 1
        exponent = int(token.text)
        unit = base if exponent >= 0 else invert_codes(base)
        return reduce_codes(unit * abs(exponent))


def parse_word(text: str, alphabet: tuple[str, ...] | list[str], line: int = 1, column: int = 1) -> Word:
    """Parse one word expression over `alphabet`."""
    alphabet = tuple(alphabet)
    tokens = _tokenize(text, line, column)
    return Word.from_codes(_WordParser(tokens, alphabet, line, column).parse())


def format_word(w: Word, alphabet: tuple[str, ...] | list[str]) -> str:
    """Inverse of parse_word; runs of one letter are written as powers."""
    if w.is_identity():
        return "1"
    parts: list[str] = []
    codes = w.codes
    i = 0
    while i < len(codes):
        j = i
        while j < len(codes) and codes[j] == codes[i]:
            j += 1
        symbol = alphabet[abs(codes[i]) - 1]
        exponent = (j - i) * (1 if codes[i] > 0 else -1)
        parts.append(symbol if exponent == 1 else f"{symbol}^{exponent}")
        i = j
    return " ".join(parts)


# -----------------------------------------------------------------------------
# Presentation files
# -----------------------------------------------------------------------------
def _split_directive(raw: str, line_no: int) -> tuple[str, str, int]:
    key, sep, rest = raw.partition(":")
    if not sep:
        raise PresentationSyntaxError("expected 'gens:', 'rel:' or 'name:'", line_no, 1)
    offset = len(key) + 1 + (len(rest) - len(rest.lstrip()))
    return key.strip(), rest.strip(), offset + 1


def parse_presentation(text: str) -> Presentation:
    name = DEFAULT_NAME
    alphabet: tuple[str, ...] | None = None
    pending: list[tuple[str, int, int]] = []

    for line_no, raw in enumerate(text.splitlines(), start=1):
        raw = raw.split("#", 1)[0]
        if not raw.strip():
            continue
        key, value, column = _split_directive(raw, line_no)
        if key == "gens":
            if alphabet is not None:
                raise PresentationSyntaxError("'gens:' given twice", line_no, 1)
            symbols = value.split()
            for symbol in symbols:
                if not IDENTIFIER.match(symbol):
                    raise PresentationSyntaxError(f"bad generator name {symbol!r}", line_no, column)
            seen: set[str] = set()
            for symbol in symbols:
                if symbol in seen:
                    raise DuplicateGeneratorError(f"line {line_no}: duplicate generator {symbol!r}")
                seen.add(symbol)
            alphabet = tuple(symbols)
        elif key == "rel":
            pending.append((value, line_no, column))
        elif key == "name":
            if not value:
                raise PresentationSyntaxError("empty name", line_no, column)
            name = value
        else:
            raise PresentationSyntaxError(f"unknown directive {key!r}", line_no, 1)

    if alphabet is None:
        raise PresentationSyntaxError("missing 'gens:' line", 1, 1)

    relators: list[Word] = []
    for value, line_no, column in pending:
        word = parse_word(value, alphabet, line_no, column)
        core, _ = cyclic_reduce(word)
        if core.is_identity():
            logger.warning("line %d: relator reduces to the identity and is dropped", line_no)
            continue
        relators.append(core)

    return Presentation(name=name, alphabet=alphabet, relators=tuple(relators))


def serialize_presentation(p: Presentation) -> str:
    lines: list[str] = []
    if p.name != DEFAULT_NAME:
        lines.append(f"name: {p.name}")
    lines.append("gens: " + " ".join(p.alphabet) if p.alphabet else "gens:")
    for relator in p.relators:
        lines.append(f"rel: {format_word(relator, p.alphabet)}")
    return "\n".join(lines) + "\n"
