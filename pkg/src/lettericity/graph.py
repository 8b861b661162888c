"""Simple undirected graphs stored as bitmask adjacency rows.

Row ``v`` is a Python int whose bit ``u`` is set iff ``uv`` is an edge.
Kernels that need fixed-width words get them from :meth:`Graph.words`.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from lettericity import _kernels
from lettericity._kernels.rng import RNG_ALGORITHM, splitmix64_stream

__all__ = [
    "Graph",
    "Graph6Error",
    "Signature",
    "RandomSpec",
    "RNG_ALGORITHM",
    "random_graph",
    "from_graph6",
    "to_graph6",
    "read_graph6_lines",
    "induced_subgraph",
    "complement",
    "signature",
    "agrees_on",
    "to_json",
    "from_json",
]


@dataclass(frozen=True, eq=True)
class Graph:
    n: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if self.n < 0 or len(self.rows) != self.n:
            raise ValueError(f"expected {self.n} adjacency rows, got {len(self.rows)}")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.rows):
            if row & ~full:
                raise ValueError(f"row {v} has bits outside 0..{self.n - 1}")
            if (row >> v) & 1:
                raise ValueError(f"self-loop at vertex {v}")
            r = row
            while r:
                low = r & -r
                u = low.bit_length() - 1
                if not (self.rows[u] >> v) & 1:
                    raise ValueError(f"asymmetric adjacency between {v} and {u}")
                r ^= low

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n, (0,) * n)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def from_matrix(cls, matrix) -> Graph:
        m = np.asarray(matrix, dtype=bool)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise ValueError("adjacency matrix must be square")
        n = m.shape[0]
        weights = [1 << u for u in range(n)]
        rows = tuple(sum(w for w, bit in zip(weights, m[v]) if bit) for v in range(n))
        return cls(n, rows)

    @classmethod
    def complete(cls, n: int) -> Graph:
        full = (1 << n) - 1
        return cls(n, tuple(full ^ (1 << v) for v in range(n)))

    @classmethod
    def path(cls, n: int) -> Graph:
        return cls.from_edges(n, [(i, i + 1) for i in range(n - 1)])

    @classmethod
    def cycle(cls, n: int) -> Graph:
        return cls.from_edges(n, [(i, (i + 1) % n) for i in range(n)])

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.rows[u] >> v) & 1)

    def adj(self, u: int, v: int) -> int:
        return (self.rows[u] >> v) & 1

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in range(u + 1, self.n) if (self.rows[u] >> v) & 1]

    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    @cached_property
    def matrix(self) -> np.ndarray:
        m = np.zeros((self.n, self.n), dtype=np.uint8)
        for v, row in enumerate(self.rows):
            for u in range(self.n):
                if (row >> u) & 1:
                    m[v, u] = 1
        m.setflags(write=False)
        return m

    @cached_property
    def words(self) -> np.ndarray:
        """Rows packed into ``ceil(n / 64)`` little-endian uint64 words."""
        w = _kernels.n_words(self.n)
        out = np.zeros((self.n, w), dtype=np.uint64)
        mask = (1 << 64) - 1
        for v, row in enumerate(self.rows):
            for i in range(w):
                out[v, i] = (row >> (64 * i)) & mask
        out.setflags(write=False)
        return out

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


@dataclass(frozen=True)
class Signature:
    bits: tuple[int, ...]
    basis: tuple[int, ...]

    def __post_init__(self):
        if len(self.bits) != len(self.basis):
            raise ValueError("signature length does not match its basis")


@dataclass(frozen=True)
class RandomSpec:
    n: int
    seed: int
    edge_probability: float = field(default=0.5, init=False)

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("n must be non-negative")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be an unsigned 64-bit integer")


def random_graph(spec: RandomSpec | int, seed: int | None = None) -> Graph:
    """Sample G(n, 1/2) deterministically from ``(n, seed)``.

    Edge ``e`` in graph6 order ((0,1), (0,2), (1,2), (0,3), ...) is bit
    ``e % 64`` of output ``e // 64`` of the counter-based splitmix64 stream
    keyed by the seed.
    """
    if not isinstance(spec, RandomSpec):
        spec = RandomSpec(spec, seed)
    m = _kernels.random_adjacency(spec.n, spec.seed)
    return Graph.from_matrix(m)


def _random_graph_reference(n: int, seed: int) -> Graph:
    # Scalar path kept for cross-checking the array kernels.
    n_edges = n * (n - 1) // 2
    stream = splitmix64_stream(seed, (n_edges + 63) // 64)
    edges = []
    e = 0
    for j in range(1, n):
        for i in range(j):
            if (stream[e // 64] >> (e % 64)) & 1:
                edges.append((i, j))
            e += 1
    return Graph.from_edges(n, edges)


# --- graph6 ---------------------------------------------------------------

class Graph6Error(ValueError):
    def __init__(self, offset: int, message: str):
        super().__init__(f"graph6 byte {offset}: {message}")
        self.offset = offset


_HEADER = ">>graph6<<"


def _encode_n(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    if n <= 68719476735:
        return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    raise ValueError(f"n={n} too large for graph6")


def to_graph6(g: Graph) -> str:
    out = [_encode_n(g.n)]
    acc = 0
    nbits = 0
    for j in range(1, g.n):
        rj = g.rows[j]
        for i in range(j):
            acc = (acc << 1) | ((rj >> i) & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = 0
                nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def from_graph6(text: str) -> Graph:
    s = text.strip("\r\n")
    base = 0
    if s.startswith(_HEADER):
        s = s[len(_HEADER):]
        base = len(_HEADER)
    if not s:
        raise Graph6Error(base, "empty input")
    for off, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(base + off, f"byte {ord(ch)!r} outside printable range 63..126")
    vals = [ord(ch) - 63 for ch in s]
    if vals[0] == 63:
        if len(vals) >= 2 and vals[1] == 63:
            if len(vals) < 8:
                raise Graph6Error(base + len(vals), "truncated 8-byte vertex count")
            n = 0
            for v in vals[2:8]:
                n = (n << 6) | v
            pos = 8
        else:
            if len(vals) < 4:
                raise Graph6Error(base + len(vals), "truncated 4-byte vertex count")
            n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
            pos = 4
            if n <= 62:
                raise Graph6Error(base + 1, f"long-form vertex count {n} must exceed 62")
    else:
        n = vals[0]
        pos = 1
    n_bits = n * (n - 1) // 2
    need = (n_bits + 5) // 6
    have = len(vals) - pos
    if have != need:
        off = base + pos + min(have, need)
        raise Graph6Error(off, f"expected {need} edge bytes for n={n}, found {have}")
    if n_bits % 6:
        pad = 6 - n_bits % 6
        if vals[-1] & ((1 << pad) - 1):
            raise Graph6Error(base + len(vals) - 1, "non-zero padding bits")
    rows = [0] * n
    e = 0
    for j in range(1, n):
        for i in range(j):
            byte = vals[pos + e // 6]
            if (byte >> (5 - e % 6)) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            e += 1
    return Graph(n, tuple(rows))


def read_graph6_lines(lines: Iterable[str]):
    """Yield ``(line_number, graph6_text, Graph)`` for non-blank lines."""
    for lineno, raw in enumerate(lines, 1):
        text = raw.strip()
        if not text:
            continue
        yield lineno, text, from_graph6(text)


# --- JSON -----------------------------------------------------------------

def to_json(g: Graph) -> str:
    return json.dumps({"n": g.n, "edges": [list(e) for e in g.edges()]})


def from_json(text: str) -> Graph:
    obj = json.loads(text)
    return Graph.from_edges(obj["n"], [tuple(e) for e in obj["edges"]])


# --- derived graphs and agreement primitives ------------------------------

def _check_vertices(g: Graph, vs: Sequence[int], what: str = "vertex") -> None:
    seen = set()
    for v in vs:
        if not 0 <= v < g.n:
            raise ValueError(f"{what} {v} out of range for n={g.n}")
        if v in seen:
            raise ValueError(f"duplicate {what} {v}")
        seen.add(v)


def induced_subgraph(g: Graph, vs: Sequence[int]) -> Graph:
    _check_vertices(g, vs)
    rows = []
    for v in vs:
        rv = g.rows[v]
        row = 0
        for i, u in enumerate(vs):
            if (rv >> u) & 1:
                row |= 1 << i
        rows.append(row)
    return Graph(len(vs), tuple(rows))


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, tuple((~r & full) ^ (1 << v) for v, r in enumerate(g.rows)))


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Graph whose vertex ``perm[v]`` plays the role of ``v`` in ``g``."""
    inv = [0] * g.n
    for v, p in enumerate(perm):
        inv[p] = v
    return induced_subgraph(g, inv)


def signature(g: Graph, v: int, basis: Sequence[int]) -> Signature:
    if v in basis:
        raise ValueError(f"vertex {v} is part of the basis")
    _check_vertices(g, list(basis) + [v])
    row = g.rows[v]
    return Signature(tuple((row >> b) & 1 for b in basis), tuple(basis))


def agrees_on(g: Graph, v: int, targets: Iterable[int]) -> bool:
    targets = list(targets)
    if v in targets:
        raise ValueError(f"vertex {v} is one of the targets")
    _check_vertices(g, targets + [v])
    mask = 0
    for t in targets:
        mask |= 1 << t
    hit = g.rows[v] & mask
    return hit == 0 or hit == mask
