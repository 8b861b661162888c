"""Upper-bound construction: find a core word and extend it to a lettering.

A core over pairs ``(x_1, y_1) .. (x_k, y_k)`` with pairing ``pi`` is the
word ``l_0 .. l_{k-1} l_{pi[0]} .. l_{pi[k-1]}`` where ``x_i`` takes the left
copy of ``l_i`` and ``y_i`` the right one. Any remaining vertices get fresh
singleton letters in the middle, so a core with ``k`` pairs saves ``k``
letters.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from lettericity.graph import Graph, induced_subgraph
from lettericity.lettering import (
    Decoder,
    Inconsistent,
    Lettering,
    identity_lettering,
    infer_decoder,
)


@dataclass(frozen=True)
class Core:
    pairs: tuple[tuple[int, int], ...]
    pi: tuple[int, ...]
    decoder: Decoder

    @property
    def k(self) -> int:
        return len(self.pairs)

    @property
    def word(self) -> tuple[int, ...]:
        return tuple(range(self.k)) + self.pi

    @property
    def vertices(self) -> tuple[int, ...]:
        """Vertices in word order: left copies, then right copies."""
        return tuple(x for x, _ in self.pairs) + tuple(self.pairs[i][1] for i in self.pi)

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "pairs": [list(p) for p in self.pairs],
            "pi": list(self.pi),
            "decoder": sorted(list(p) for p in self.decoder),
        }


@dataclass(frozen=True)
class SavingsGuarantee:
    n: int
    k: int


def _core_threshold(k: int) -> int:
    return 2 * (k - 1) + 4 ** (k - 1) + 1


def k_guarantee(n: int) -> SavingsGuarantee:
    """Largest k with n >= 2(k-1) + 2^(2(k-1)) + 1."""
    if n < 2:
        raise ValueError(f"savings guarantee needs n >= 2, got {n}")
    k = 1
    while _core_threshold(k + 1) <= n:
        k += 1
    return SavingsGuarantee(n, k)


def core_is_consistent(g: Graph, pairs: Sequence[tuple[int, int]], pi: Sequence[int]) -> Decoder | Inconsistent:
    k = len(pairs)
    vs = [x for x, _ in pairs] + [pairs[i][1] for i in pi]
    if len(set(vs)) != 2 * k:
        raise ValueError("core vertices must be distinct")
    word = list(range(k)) + list(pi)
    return infer_decoder(induced_subgraph(g, vs), word, range(2 * k))


def find_palindromic_core(g: Graph, start: tuple[int, int] = (0, 1)) -> Core:
    """Grow a core with word l_0..l_{k-1} l_{k-1}..l_0 by the pigeonhole step.

    While two unused vertices share a signature against the current core,
    they become the new innermost pair (smallest signature with at least two
    members, its two lowest vertices, lower one on the left). The decoder is
    assembled pair by pair: left copies before the new pair decide
    ``(l_i, l_new)``, the new pair before right copies decides
    ``(l_new, l_i)``, and the new pair's own edge decides ``(l_new, l_new)``.
    """
    if g.n < 2:
        raise ValueError(f"a core needs at least 2 vertices, got n={g.n}")
    x0, y0 = start
    pairs = [(x0, y0)]
    decoder = {(0, 0)} if g.has_edge(x0, y0) else set()
    used = (1 << x0) | (1 << y0)
    while True:
        basis = [x for x, _ in pairs] + [y for _, y in reversed(pairs)]
        buckets: dict[tuple[int, ...], list[int]] = {}
        for v in range(g.n):
            if (used >> v) & 1:
                continue
            row = g.rows[v]
            buckets.setdefault(tuple((row >> b) & 1 for b in basis), []).append(v)
        full = [sig for sig, members in buckets.items() if len(members) >= 2]
        if not full:
            break
        u, v = buckets[min(full)][:2]
        new = len(pairs)
        for i, (x, y) in enumerate(pairs):
            if g.has_edge(x, u):
                decoder.add((i, new))
            if g.has_edge(u, y):
                decoder.add((new, i))
        if g.has_edge(u, v):
            decoder.add((new, new))
        pairs.append((u, v))
        used |= (1 << u) | (1 << v)
    k = len(pairs)
    return Core(tuple(pairs), tuple(range(k - 1, -1, -1)), frozenset(decoder))


def _homogeneous_set(g: Graph, size: int, clique: bool) -> list[int] | None:
    full = (1 << g.n) - 1
    rows = g.rows if clique else tuple((~r & full) ^ (1 << v) for v, r in enumerate(g.rows))

    def extend(chosen: list[int], cand: int) -> list[int] | None:
        if len(chosen) == size:
            return chosen
        if len(chosen) + cand.bit_count() < size:
            return None
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            found = extend(chosen + [v], cand & rows[v])
            if found:
                return found
        return None

    return extend([], full)


def find_homogeneous_core(g: Graph, k: int, pi: Sequence[int] | None = None) -> Core | None:
    """Core on a clique or anticlique of size 2k, valid for every pairing."""
    if k < 1:
        raise ValueError("k must be at least 1")
    if 2 * k > g.n:
        return None
    pi = tuple(range(k)) if pi is None else tuple(pi)
    if sorted(pi) != list(range(k)):
        raise ValueError(f"{pi} is not a permutation of 0..{k - 1}")
    vs = _homogeneous_set(g, 2 * k, clique=True) or _homogeneous_set(g, 2 * k, clique=False)
    if vs is None:
        return None
    pairs = tuple((vs[i], vs[k + i]) for i in range(k))
    dec = core_is_consistent(g, pairs, pi)
    assert not isinstance(dec, Inconsistent)
    return Core(pairs, pi, dec)


def extend_core_to_lettering(g: Graph, core: Core) -> Lettering:
    """Insert a fresh letter per remaining vertex between the core halves.

    The decoder is the union of the core decoder, the pairs among middle
    letters, left core copies versus the middle, and the middle versus right
    core copies. Uses exactly n - k letters.
    """
    k = core.k
    if 2 * k > g.n:
        raise ValueError("core larger than graph")
    check = core_is_consistent(g, core.pairs, core.pi)
    # every ordered letter pair is constrained in a core word, so the core
    # decoder has to equal the inferred one
    if isinstance(check, Inconsistent) or core.decoder != check:
        raise ValueError(f"core is not a valid core of this graph: {check}")
    in_core = set(core.vertices)
    middle = [v for v in range(g.n) if v not in in_core]
    lam = {v: k + j for j, v in enumerate(middle)}

    dec = set(core.decoder)
    for j, v in enumerate(middle):
        for u in middle[j + 1:]:
            if g.has_edge(v, u):
                dec.add((lam[v], lam[u]))
    for i, (x, y) in enumerate(core.pairs):
        for v in middle:
            if g.has_edge(x, v):
                dec.add((i, lam[v]))
            if g.has_edge(v, y):
                dec.add((lam[v], i))

    word = tuple(range(k)) + tuple(lam[v] for v in middle) + core.pi
    vertex_of = tuple(x for x, _ in core.pairs) + tuple(middle) + tuple(core.pairs[i][1] for i in core.pi)
    return Lettering(word, frozenset(dec), vertex_of)


def compress(g: Graph) -> Lettering:
    if g.n < 2:
        return identity_lettering(g)
    return extend_core_to_lettering(g, find_palindromic_core(g))
