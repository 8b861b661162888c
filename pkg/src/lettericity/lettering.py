"""Letter graphs: decoding words, inferring decoders, verifying letterings.

Positions are 0-indexed here (position ``i`` is the paper-style ``i + 1``).
Letters are small non-negative ints; canonical words number letters by
first occurrence.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Sequence

from lettericity.graph import Graph

Word = tuple[int, ...]
Decoder = frozenset[tuple[int, int]]

THRESHOLD_DECODER: Decoder = frozenset({(0, 1), (1, 1)})


@dataclass(frozen=True)
class Lettering:
    word: Word
    decoder: Decoder
    vertex_of: tuple[int, ...]

    def __post_init__(self):
        if len(self.word) != len(self.vertex_of):
            raise ValueError("word and vertex_of differ in length")
        if sorted(self.vertex_of) != list(range(len(self.vertex_of))):
            raise ValueError("vertex_of is not a bijection onto 0..n-1")

    @property
    def alphabet_size(self) -> int:
        return len(set(self.word))

    def to_dict(self) -> dict:
        return {
            "word": list(self.word),
            "decoder": sorted(list(p) for p in self.decoder),
            "vertex_of": list(self.vertex_of),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, obj: dict) -> Lettering:
        return cls(
            tuple(int(a) for a in obj["word"]),
            frozenset((int(a), int(b)) for a, b in obj["decoder"]),
            tuple(int(v) for v in obj["vertex_of"]),
        )

    @classmethod
    def from_json(cls, text: str) -> Lettering:
        return cls.from_dict(json.loads(text))


@dataclass(frozen=True)
class Inconsistent:
    """No decoder exists: two position pairs with the same letter pair differ."""
    letters: tuple[int, int]
    edge_pair: tuple[int, int]
    non_edge_pair: tuple[int, int]

    def __bool__(self):
        return False


def canonical_word(word: Iterable) -> tuple[Word, dict]:
    """Renumber letters by first occurrence; returns the word and the map."""
    mapping: dict = {}
    out = []
    for a in word:
        if a not in mapping:
            mapping[a] = len(mapping)
        out.append(mapping[a])
    return tuple(out), mapping


def parse_word(text: str) -> tuple[Word, dict[str, int]]:
    return canonical_word(text)


def decode(word: Sequence[int], decoder: Iterable[tuple[int, int]]) -> Graph:
    d = set(decoder)
    n = len(word)
    rows = [0] * n
    for j in range(n):
        b = word[j]
        for i in range(j):
            if (word[i], b) in d:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return Graph(n, tuple(rows))


def verify(g: Graph, lettering: Lettering) -> bool:
    return first_discrepancy(g, lettering) is None


def first_discrepancy(g: Graph, lettering: Lettering) -> tuple[int, int, int, int] | None:
    """First position pair ``(i, j)`` whose decoded status differs from ``g``.

    Returned as ``(i, j, decoded, actual)``; ``None`` when the lettering is
    exact.
    """
    if len(lettering.word) != g.n:
        raise ValueError(f"lettering has {len(lettering.word)} positions, graph has {g.n} vertices")
    w, d, vo = lettering.word, lettering.decoder, lettering.vertex_of
    for j in range(g.n):
        row = g.rows[vo[j]]
        for i in range(j):
            want = (row >> vo[i]) & 1
            got = int((w[i], w[j]) in d)
            if want != got:
                return i, j, got, want
    return None


def infer_decoder(g: Graph, word: Sequence[int], vertex_of: Sequence[int]) -> Decoder | Inconsistent:
    """Minimal decoder realizing ``g`` on ``word`` under ``vertex_of``.

    Letter pairs never constrained by the word are left out.
    """
    if len(word) != g.n or len(vertex_of) != g.n:
        raise ValueError("word, vertex_of and graph disagree in size")
    seen: dict[tuple[int, int], tuple[int, int, int]] = {}
    for j in range(g.n):
        row = g.rows[vertex_of[j]]
        b = word[j]
        for i in range(j):
            key = (word[i], b)
            e = (row >> vertex_of[i]) & 1
            prev = seen.get(key)
            if prev is None:
                seen[key] = (e, i, j)
            elif prev[0] != e:
                pi, pj = prev[1], prev[2]
                edge, non = ((pi, pj), (i, j)) if prev[0] else ((i, j), (pi, pj))
                return Inconsistent(key, edge, non)
    return frozenset(k for k, v in seen.items() if v[0])


def threshold_lettering(g: Graph) -> Lettering | None:
    """Two-letter lettering with decoder {(a,b),(b,b)}, or None if not threshold.

    Peels the lowest-indexed isolated or dominating vertex until nothing is
    left; the word lists vertices in reverse peeling order, ``a`` (0) for
    isolated and ``b`` (1) for dominating.
    """
    alive = (1 << g.n) - 1
    peeled: list[tuple[int, int]] = []
    while alive:
        for v in range(g.n):
            if not (alive >> v) & 1:
                continue
            nb = g.rows[v] & alive
            rest = alive & ~(1 << v)
            if nb == 0:
                peeled.append((v, 0))
                break
            if nb == rest:
                peeled.append((v, 1))
                break
        else:
            return None
        alive &= ~(1 << peeled[-1][0])
    peeled.reverse()
    word = tuple(letter for _, letter in peeled)
    vertex_of = tuple(v for v, _ in peeled)
    return Lettering(word, THRESHOLD_DECODER, vertex_of)


def reverse_lettering(l: Lettering) -> Lettering:
    """Reversed word with transposed decoder; decodes to the same graph.

    The word is not re-canonicalized so that reversing twice is the identity.
    """
    return Lettering(
        l.word[::-1],
        frozenset((b, a) for a, b in l.decoder),
        l.vertex_of[::-1],
    )


def canonicalize(l: Lettering) -> Lettering:
    word, mapping = canonical_word(l.word)
    dec = frozenset((mapping[a], mapping[b]) for a, b in l.decoder if a in mapping and b in mapping)
    return Lettering(word, dec, l.vertex_of)


def complement_decoder(word: Sequence[int], decoder: Iterable[tuple[int, int]]) -> Decoder:
    sigma = sorted(set(word))
    d = set(decoder)
    return frozenset((a, b) for a in sigma for b in sigma if (a, b) not in d)


def identity_lettering(g: Graph) -> Lettering:
    """One letter per vertex; always valid."""
    word = tuple(range(g.n))
    return Lettering(word, frozenset((i, j) for i, j in g.edges()), tuple(range(g.n)))
