import itertools

from models.matrix import IntMatrix
from models.word import Word
from reductions.modular import S, T


def all_codes(rank: int, max_len: int, reduced: bool = True):
    """Every word of length <= max_len as a code tuple, shortest first."""
    letters = [c for g in range(1, rank + 1) for c in (g, -g)]
    for n in range(max_len + 1):
        for codes in itertools.product(letters, repeat=n):
            if not reduced or all(codes[i] != -codes[i + 1] for i in range(n - 1)):
                yield codes


def su_matrix(w: Word) -> IntMatrix:
    """Evaluate a word in s, u with s = S and u = ST."""
    letters = {1: S, -1: S.inverse(), 2: S @ T, -2: (S @ T).inverse()}
    result = IntMatrix.identity(2)
    for code in w.codes:
        result = result @ letters[code]
    return result


def pairwise_piece_length(elements) -> int:
    """Longest common prefix over every pair of distinct words."""
    best = 0
    for x, u in enumerate(elements):
        for v in elements[x + 1:]:
            if u == v:
                continue
            n = 0
            for a, b in zip(u.codes, v.codes):
                if a != b:
                    break
                n += 1
            best = max(best, n)
    return best


def random_relators(rng, rank: int, count: int, max_len: int) -> list[Word]:
    """Nonempty, cyclically reduced random relators."""
    letters = [c for g in range(1, rank + 1) for c in (g, -g)]
    relators: list[Word] = []
    while len(relators) < count:
        codes = list(Word.from_codes(rng.choice(letters) for _ in range(rng.randint(1, max_len))).codes)
        while len(codes) >= 2 and codes[0] == -codes[-1]:
            codes = codes[1:-1]
        if codes:
            relators.append(Word.from_codes(codes))
    return relators
