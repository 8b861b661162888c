"""Exact lettericity for small graphs.

``lettericity_exact`` climbs from the cochromatic number and asks
``is_k_letter`` at each alphabet size. ``brute_force_oracle`` is a separate,
deliberately naive enumeration used to cross-check it.
"""
from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import permutations
from typing import Iterator

from lettericity.constructor import compress
from lettericity.graph import Graph
from lettericity.lettering import Inconsistent, Lettering, infer_decoder, verify

DEFAULT_MAX_NODES = 10**8
ORACLE_CAP = 6


@dataclass(frozen=True)
class Budget:
    max_nodes: int | None = DEFAULT_MAX_NODES
    max_seconds: float | None = None

    def __post_init__(self):
        if self.max_nodes is not None and self.max_nodes <= 0:
            raise ValueError("max_nodes must be positive")
        if self.max_seconds is not None and self.max_seconds <= 0:
            raise ValueError("max_seconds must be positive")


class BudgetExceeded(Exception):
    def __init__(self, nodes: int, lower: int | None = None, upper: int | None = None):
        super().__init__(f"search budget exhausted after {nodes} nodes (bounds {lower}..{upper})")
        self.nodes = nodes
        self.lower = lower
        self.upper = upper


@dataclass(frozen=True)
class SolveResult:
    lettericity: int
    witness: Lettering
    lower_bound_used: str  # "cochromatic" or "trivial"
    nodes_explored: int
    cochromatic: int


class OracleRefused(ValueError):
    pass


# --- cochromatic number ---------------------------------------------------

def cochromatic_number(g: Graph) -> int:
    """Fewest cliques/anticliques partitioning the vertex set."""
    if g.n == 0:
        return 0
    for m in range(1, g.n + 1):
        if _cocolor(g, m):
            return m
    raise AssertionError("unreachable: singletons always work")


def _cocolor(g: Graph, m: int) -> bool:
    n = g.n
    rows = g.rows
    masks: list[int] = []
    kinds: list[int] = []  # -1 singleton, 1 clique, 0 anticlique

    def place(v: int) -> bool:
        if v == n:
            return True
        row = rows[v]
        for i in range(len(masks)):
            mask, kind = masks[i], kinds[i]
            if kind == -1:
                new_kind = 1 if row & mask else 0
            elif kind == 1 and row & mask == mask:
                new_kind = 1
            elif kind == 0 and not row & mask:
                new_kind = 0
            else:
                continue
            masks[i] = mask | (1 << v)
            kinds[i] = new_kind
            if place(v + 1):
                return True
            masks[i], kinds[i] = mask, kind
        # opening parts only in index order breaks the relabeling symmetry
        if len(masks) < m:
            masks.append(1 << v)
            kinds.append(-1)
            if place(v + 1):
                return True
            masks.pop()
            kinds.pop()
        return False

    return place(0)


# --- branch and bound -----------------------------------------------------

class _Search:
    def __init__(self, g: Graph, k: int, budget: Budget, nodes: int = 0):
        self.g = g
        self.k = k
        self.budget = budget
        self.nodes = nodes
        self.deadline = None if budget.max_seconds is None else time.monotonic() + budget.max_seconds
        self.order: list[int] = []
        self.letters: list[int] = []
        self.classes: list[int] = []  # placed-vertex mask per letter
        # status[a][b]: decided edge value for letter a before letter b, -1 if open
        self.status = [[-1] * k for _ in range(k)]

    def _tick(self):
        self.nodes += 1
        if self.budget.max_nodes is not None and self.nodes > self.budget.max_nodes:
            raise BudgetExceeded(self.nodes)
        if self.deadline is not None and self.nodes % 4096 == 0 and time.monotonic() > self.deadline:
            raise BudgetExceeded(self.nodes)

    def _assign(self, v: int, c: int) -> list[tuple[int, int]] | None:
        """Fix the statuses placing ``v`` with letter ``c`` forces; None on conflict."""
        row = self.g.rows[v]
        fixed = []
        st = self.status
        for a, cls in enumerate(self.classes):
            hit = row & cls
            if hit == 0:
                e = 0
            elif hit == cls:
                e = 1
            else:
                return None
            cur = st[a][c]
            if cur == -1:
                fixed.append((a, c))
            elif cur != e:
                return None
        for a, _ in fixed:
            st[a][c] = 1 if row & self.classes[a] else 0
        return fixed

    def _lookahead(self, unplaced: int) -> bool:
        """Every unplaced vertex must still fit some letter after the current prefix."""
        classes = self.classes
        used = len(classes)
        st = self.status
        rows = self.g.rows
        while unplaced:
            low = unplaced & -unplaced
            u = low.bit_length() - 1
            unplaced ^= low
            row = rows[u]
            pattern = []
            for cls in classes:
                hit = row & cls
                if hit == 0:
                    pattern.append(0)
                elif hit == cls:
                    pattern.append(1)
                else:
                    return False
            if used < self.k:
                continue
            for c in range(used):
                if all(st[a][c] in (-1, pattern[a]) for a in range(used)):
                    break
            else:
                return False
        return True

    def run(self) -> Lettering | None:
        n = self.g.n
        if n == 0:
            return Lettering((), frozenset(), ())
        if self._extend((1 << n) - 1):
            dec = frozenset((a, b) for a in range(self.k) for b in range(self.k) if self.status[a][b] == 1)
            return Lettering(tuple(self.letters), dec, tuple(self.order))
        return None

    def _extend(self, unplaced: int) -> bool:
        if not unplaced:
            return True
        last = unplaced & (unplaced - 1) == 0
        used = len(self.classes)
        cand = unplaced
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            # a word and its reverse are equivalent: keep first vertex < last vertex
            if last and self.order and v < self.order[0]:
                continue
            for c in range(min(used + 1, self.k)):
                fixed = self._assign(v, c)
                if fixed is None:
                    continue
                self._tick()
                new_letter = c == used
                if new_letter:
                    self.classes.append(low)
                else:
                    self.classes[c] |= low
                self.order.append(v)
                self.letters.append(c)
                rest = unplaced ^ low
                if self._lookahead(rest) and self._extend(rest):
                    return True
                self.order.pop()
                self.letters.pop()
                if new_letter:
                    self.classes.pop()
                else:
                    self.classes[c] ^= low
                for a, b in fixed:
                    self.status[a][b] = -1
        return False


def is_k_letter(g: Graph, k: int, budget: Budget | None = None) -> Lettering | None:
    """A verified k-letter lettering of ``g``, or None if none exists.

    Raises :class:`BudgetExceeded` when a cap trips.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    result, _ = _is_k_letter(g, k, budget or Budget(), 0)
    return result


def _is_k_letter(g: Graph, k: int, budget: Budget, nodes: int) -> tuple[Lettering | None, int]:
    search = _Search(g, k, budget, nodes)
    result = search.run()
    if result is not None:
        assert verify(g, result), "search produced an invalid lettering"
    return result, search.nodes


def lettericity_exact(g: Graph, budget: Budget | None = None) -> SolveResult:
    budget = budget or Budget()
    if g.n == 0:
        return SolveResult(0, Lettering((), frozenset(), ()), "trivial", 0, 0)
    lower = cochromatic_number(g)
    tag = "cochromatic" if lower > 1 else "trivial"
    upper_witness = compress(g)
    upper = upper_witness.alphabet_size
    nodes = 0
    for k in range(lower, max(lower, g.n - 1)):
        try:
            found, nodes = _is_k_letter(g, k, budget, nodes)
        except BudgetExceeded as exc:
            raise BudgetExceeded(exc.nodes, lower=k, upper=upper) from None
        if found is not None:
            return SolveResult(k, found, tag, nodes, lower)
    # every size below n - 1 failed, and n - 1 letters always suffice
    if upper_witness.alphabet_size != max(lower, g.n - 1):
        raise AssertionError("search contradicts the pairing construction")
    return SolveResult(upper, upper_witness, tag, nodes, lower)


# --- independent oracle ---------------------------------------------------

def _restricted_growth(n: int, m: int) -> Iterator[tuple[int, ...]]:
    """Canonical words of length n using exactly m letters."""
    def rec(prefix: list[int], top: int):
        if len(prefix) == n:
            if top == m:
                yield tuple(prefix)
            return
        if m - top > n - len(prefix):
            return
        for a in range(min(top + 1, m)):
            prefix.append(a)
            yield from rec(prefix, max(top, a + 1))
            prefix.pop()

    if n == 0:
        if m == 0:
            yield ()
        return
    yield from rec([], 0)


def brute_force_oracle(g: Graph, cap: int = ORACLE_CAP) -> int:
    """Minimum alphabet size by trying every ordering against every word."""
    if g.n > cap:
        raise OracleRefused(f"oracle refuses n={g.n} (cap {cap})")
    if g.n == 0:
        return 0
    orders = list(permutations(range(g.n)))
    for m in range(1, g.n + 1):
        for word in _restricted_growth(g.n, m):
            for order in orders:
                if not isinstance(infer_decoder(g, word, order), Inconsistent):
                    return m
    raise AssertionError("unreachable: identity lettering always works")
