# =============================================================================
# constructions/todd_coxeter.py
# =============================================================================
# Purpose:
# Coset enumeration, HLT style: scan every relator at every live coset in
# creation order, defining new cosets to complete each scan, and collapse
# coincidences as soon as a scan closes on two different cosets.
#
# Columns are 2g for generator g and 2g+1 for its inverse. Subgroup
# generators are scanned at coset 0 first, then relators coset by coset.
# Nothing depends on hashing or timing, so the same input always produces
# the same table.
# =============================================================================

import logging

from models.errors import PreconditionError
from models.presentation import Presentation
from models.results import CosetEnumeration, CosetTable, Verdict
from models.word import Word

logger = logging.getLogger(__name__)

DEFAULT_MAX_COSETS = 10_000


def _column(code: int) -> int:
    return 2 * (abs(code) - 1) + (0 if code > 0 else 1)


def _inverse_column(col: int) -> int:
    return col ^ 1


class _Enumerator:
    def __init__(self, p: Presentation, max_cosets: int):
        self.ncols = 2 * p.rank
        self.max_cosets = max_cosets
        self.table: list[list[int]] = [[-1] * self.ncols]
        self.parent: list[int] = [0]
        self.live = 1
        self.overflow = False

    # -------------------------------------------------------------------------
    # Coset bookkeeping
    # -------------------------------------------------------------------------
    def rep(self, c: int) -> int:
        root = c
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[c] != root:
            self.parent[c], c = root, self.parent[c]
        return root

    def is_live(self, c: int) -> bool:
        return self.parent[c] == c

    def define(self, c: int, col: int) -> None:
        if self.live >= self.max_cosets:
            self.overflow = True
            return
        d = len(self.table)
        self.table.append([-1] * self.ncols)
        self.parent.append(d)
        self.live += 1
        self.table[c][col] = d
        self.table[d][_inverse_column(col)] = c

    def _merge(self, a: int, b: int, queue: list[int]) -> None:
        a, b = self.rep(a), self.rep(b)
        if a == b:
            return
        if a > b:
            a, b = b, a
        self.parent[b] = a
        self.live -= 1
        queue.append(b)

    def coincidence(self, a: int, b: int) -> None:
        queue: list[int] = []
        self._merge(a, b, queue)
        i = 0
        while i < len(queue):
            e = queue[i]
            i += 1
            for col in range(self.ncols):
                f = self.table[e][col]
                if f < 0:
                    continue
                inv = _inverse_column(col)
                self.table[f][inv] = -1
                e1, f1 = self.rep(e), self.rep(f)
                if self.table[e1][col] >= 0:
                    self._merge(f1, self.table[e1][col], queue)
                elif self.table[f1][inv] >= 0:
                    self._merge(e1, self.table[f1][inv], queue)
                else:
                    self.table[e1][col] = f1
                    self.table[f1][inv] = e1

    # -------------------------------------------------------------------------
    # Scanning
    # -------------------------------------------------------------------------
    def scan_and_fill(self, c: int, word: tuple[int, ...]) -> None:
        table = self.table
        f, b = c, c
        i, j = 0, len(word) - 1
        while True:
            while i <= j and table[f][_column(word[i])] >= 0:
                f = table[f][_column(word[i])]
                i += 1
            if i > j:
                if f != b:
                    self.coincidence(f, b)
                return
            while j >= i and table[b][_column(-word[j])] >= 0:
                b = table[b][_column(-word[j])]
                j -= 1
            if j < i:
                self.coincidence(f, b)
                return
            if i == j:
                table[f][_column(word[i])] = b
                table[b][_column(-word[i])] = f
                return
            self.define(f, _column(word[i]))
            if self.overflow:
                return

    def run(self, relators: list[tuple[int, ...]], subgroup: list[tuple[int, ...]]) -> bool:
        for w in subgroup:
            self.scan_and_fill(0, w)
            if self.overflow:
                return False
        c = 0
        while c < len(self.table):
            for r in relators:
                if not self.is_live(c):
                    break
                self.scan_and_fill(c, r)
                if self.overflow:
                    return False
            if self.is_live(c):
                for col in range(self.ncols):
                    if self.table[c][col] < 0:
                        self.define(c, col)
                        if self.overflow:
                            return False
            c += 1
        return True

    def compact(self, subgroup_gens: tuple[Word, ...]) -> CosetTable:
        alive = [c for c in range(len(self.table)) if self.is_live(c)]
        number = {c: k for k, c in enumerate(alive)}
        action = tuple(
            tuple(number[self.rep(self.table[c][col])] for c in alive)
            for col in range(self.ncols)
        )
        return CosetTable(n_cosets=len(alive), action=action, subgroup_gens=subgroup_gens)


def todd_coxeter(
    p: Presentation,
    subgroup_gens: list[Word] | tuple[Word, ...] = (),
    max_cosets: int = DEFAULT_MAX_COSETS,
) -> CosetEnumeration:
    """Enumerate the cosets of <subgroup_gens> in p; incomplete results carry no table."""
    for w in subgroup_gens:
        if w.max_generator() >= p.rank:
            raise PreconditionError("subgroup generator uses a letter outside the alphabet")

    enumerator = _Enumerator(p, max_cosets)
    relators = [r.codes for r in p.relators]
    subgroup = [w.codes for w in subgroup_gens if not w.is_identity()]
    completed = enumerator.run(relators, subgroup)
    defined = len(enumerator.table)

    if not completed:
        logger.info("todd-coxeter: index not determined within %d cosets (%d defined)", max_cosets, defined)
        return CosetEnumeration(completed=False, max_cosets=max_cosets, cosets_defined=defined)

    table = enumerator.compact(tuple(subgroup_gens))
    logger.debug("todd-coxeter: %s index %d after %d definitions", p.name, table.n_cosets, defined)
    return CosetEnumeration(completed=True, max_cosets=max_cosets, cosets_defined=defined, table=table)


# -----------------------------------------------------------------------------
# Table checks
# -----------------------------------------------------------------------------
def is_valid_table(t: CosetTable, p: Presentation) -> bool:
    """Closed, inverse columns mutually inverse, relators fix every coset, subgroup fixes coset 0."""
    if len(t.action) != 2 * p.rank:
        return False
    for g in range(p.rank):
        forward, backward = t.action[2 * g], t.action[2 * g + 1]
        if any(backward[forward[c]] != c for c in range(t.n_cosets)):
            return False
    for r in p.relators:
        if any(t.act_word(c, r) != c for c in range(t.n_cosets)):
            return False
    return all(t.act_word(0, w) == 0 for w in t.subgroup_gens)


# -----------------------------------------------------------------------------
# Finite groups
# -----------------------------------------------------------------------------
def regular_table(p: Presentation, max_cosets: int = DEFAULT_MAX_COSETS) -> CosetTable:
    """Cosets of the trivial subgroup, i.e. the group elements under right multiplication."""
    enumeration = todd_coxeter(p, (), max_cosets)
    if enumeration.table is None:
        raise PreconditionError(f"{p.name}: group order not determined within {max_cosets} cosets")
    return enumeration.table


def finite_group_oracle(p: Presentation, max_cosets: int = DEFAULT_MAX_COSETS):
    """Exact word oracle for a finite group: w = 1 iff w fixes the identity element."""
    table = regular_table(p, max_cosets)

    def oracle(w: Word) -> Verdict:
        return Verdict.TRIVIAL if table.act_word(0, w) == 0 else Verdict.NONTRIVIAL

    return oracle


def brute_force_coset_count(
    p: Presentation,
    subgroup_gens: list[Word] | tuple[Word, ...],
    max_elements: int = DEFAULT_MAX_COSETS,
) -> int:
    """Index of <subgroup_gens> by counting orbits gH on the listed group elements."""
    table = regular_table(p, max_elements)
    words = [w.codes for w in subgroup_gens if not w.is_identity()]
    unseen = set(range(table.n_cosets))
    orbits = 0
    while unseen:
        start = min(unseen)
        orbit, stack = {start}, [start]
        while stack:
            g = stack.pop()
            for w in words:
                for h in (table.act_word(g, w), _act_inverse(table, g, w)):
                    if h not in orbit:
                        orbit.add(h)
                        stack.append(h)
        unseen -= orbit
        orbits += 1
    return orbits


def _act_inverse(table: CosetTable, coset: int, codes: tuple[int, ...]) -> int:
    for code in reversed(codes):
        coset = table.act(coset, -code)
    return coset
