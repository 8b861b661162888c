"""Pure-numpy kernels. Reference semantics for the numba versions."""
from __future__ import annotations

import numpy as np

from lettericity._kernels.rng import GOLDEN, MUL1, MUL2, trial_seed
from lettericity._kernels.tables import core_checks, permutations_array

_GOLDEN = np.uint64(GOLDEN)
_MUL1 = np.uint64(MUL1)
_MUL2 = np.uint64(MUL2)
_ONE = np.uint64(1)


def n_words(n: int) -> int:
    return max(1, (n + 63) // 64)


def _mix64(z: np.ndarray) -> np.ndarray:
    z = (z ^ (z >> np.uint64(30))) * _MUL1
    z = (z ^ (z >> np.uint64(27))) * _MUL2
    return z ^ (z >> np.uint64(31))


def _edge_index(n: int) -> tuple[np.ndarray, np.ndarray]:
    # graph6 order: column j outer, row i < j inner
    js = np.concatenate([np.full(j, j) for j in range(1, n)]) if n > 1 else np.zeros(0, int)
    is_ = np.concatenate([np.arange(j) for j in range(1, n)]) if n > 1 else np.zeros(0, int)
    return is_.astype(np.intp), js.astype(np.intp)


def random_adjacency_batch(n: int, seeds: np.ndarray) -> np.ndarray:
    """uint8 adjacency matrices, shape (len(seeds), n, n)."""
    seeds = np.asarray(seeds, dtype=np.uint64)
    n_edges = n * (n - 1) // 2
    n_out = (n_edges + 63) // 64
    out = np.zeros((len(seeds), n, n), dtype=np.uint8)
    if n_edges == 0:
        return out
    counters = (np.arange(1, n_out + 1, dtype=np.uint64) * _GOLDEN)[None, :]
    stream = _mix64(seeds[:, None] + counters)
    e = np.arange(n_edges)
    bits = ((stream[:, e // 64] >> (e % 64).astype(np.uint64)) & _ONE).astype(np.uint8)
    ii, jj = _edge_index(n)
    out[:, ii, jj] = bits
    out[:, jj, ii] = bits
    return out


def random_adjacency(n: int, seed: int) -> np.ndarray:
    return random_adjacency_batch(n, np.array([seed], dtype=np.uint64))[0]


def pack_words(matrix: np.ndarray) -> np.ndarray:
    m = np.asarray(matrix, dtype=np.uint8)
    n = m.shape[0]
    w = n_words(n)
    padded = np.zeros((n, 64 * w), dtype=np.uint64)
    padded[:, :n] = m
    shifts = np.arange(64, dtype=np.uint64)
    return (padded.reshape(n, w, 64) << shifts).sum(axis=2, dtype=np.uint64)


def _onehot(n: int) -> np.ndarray:
    return pack_words(np.eye(n, dtype=np.uint8))


def exists_triple(matrix: np.ndarray) -> bool:
    """Some ordered (x, y, z) satisfies the same-letter triple condition."""
    m = np.asarray(matrix, dtype=np.uint8)
    n = m.shape[0]
    if n < 3:
        return False
    words = pack_words(m)
    one = _onehot(n)
    x = np.arange(n)[:, None, None]
    y = np.arange(n)[None, :, None]
    z = np.arange(n)[None, None, :]
    distinct = (x != y) & (y != z) & (x < z)
    homog = (m[x, y] == m[y, z]) & (m[x, y] == m[x, z])
    cand = np.nonzero(distinct & homog)
    if len(cand[0]) == 0:
        return False
    cx, cy, cz = cand
    rx, ry, rz = words[cx], words[cy], words[cz]
    bad = ~(rx ^ rz) & (rx ^ ry) & ~(one[cx] | one[cy] | one[cz])
    bad &= _valid_mask(n)[None, :]
    return bool(np.any(np.all(bad == 0, axis=1)))


def _valid_mask(n: int) -> np.ndarray:
    w = n_words(n)
    out = np.zeros(w, dtype=np.uint64)
    for i in range(w):
        lo = 64 * i
        width = min(64, max(0, n - lo))
        out[i] = np.uint64((1 << width) - 1)
    return out


def exists_separated(matrix: np.ndarray, chunk: int = 256) -> bool:
    """Some quadruple (x, y, s, t) satisfies the separated-pairs condition."""
    m = np.asarray(matrix, dtype=np.uint8)
    n = m.shape[0]
    if n < 4:
        return False
    words = pack_words(m)
    one = _onehot(n)
    px, py = np.triu_indices(n, 1)
    n_pairs = len(px)
    diff = words[px] ^ words[py]
    pmask = one[px] | one[py]
    # agreement value of each vertex on each pair; 2 = disagrees, 3 = member
    av = np.where(m[px] == m[py], m[px], 2).astype(np.uint8)
    av[np.arange(n_pairs), px] = 3
    av[np.arange(n_pairs), py] = 3
    valid = _valid_mask(n)
    for lo in range(0, n_pairs, chunk):
        hi = min(n_pairs, lo + chunk)
        a_s = av[lo:hi][:, px]
        a_t = av[lo:hi][:, py]
        cross = (a_s == a_t) & (a_s <= 1)
        # each unordered pair of pairs once: first pair's min below second's
        cross &= px[lo:hi, None] < px[None, :]
        i1, i2 = np.nonzero(cross)
        if len(i1) == 0:
            continue
        i1 = i1 + lo
        bad = diff[i1] & diff[i2] & ~(pmask[i1] | pmask[i2]) & valid[None, :]
        if np.any(np.all(bad == 0, axis=1)):
            return True
    return False


def exists_core(matrix: np.ndarray, k: int) -> bool:
    """Some 2k-tuple and pairing permutation admit a consistent decoder."""
    m = np.asarray(matrix, dtype=np.uint8)
    n = m.shape[0]
    if 2 * k > n:
        return False
    for perm in permutations_array(k):
        word = np.concatenate([np.arange(k), perm])
        if _core_frontier(m, word):
            return True
    return False


def _core_frontier(m: np.ndarray, word: np.ndarray) -> bool:
    n = m.shape[0]
    offsets, qs, q2s, p2s = core_checks(word)
    frontier = np.zeros((1, 0), dtype=np.intp)
    for p in range(len(word)):
        rows = frontier.shape[0]
        ext = np.repeat(frontier, n, axis=0)
        new = np.tile(np.arange(n, dtype=np.intp), rows)
        keep = np.all(ext != new[:, None], axis=1) if p else np.ones(len(new), bool)
        for c in range(offsets[p], offsets[p + 1]):
            q, q2, p2 = qs[c], q2s[c], p2s[c]
            lhs = m[ext[:, q], new]
            other = new if p2 == p else ext[:, p2]
            keep &= lhs == m[ext[:, q2], other]
        frontier = np.concatenate([ext[keep], new[keep, None]], axis=1)
        if frontier.shape[0] == 0:
            return False
    return True


def event_hits(event: int, n: int, k: int, master_seed: int, start: int, stop: int,
               batch: int = 4096) -> int:
    hits = 0
    for lo in range(start, stop, batch):
        hi = min(stop, lo + batch)
        seeds = np.array([trial_seed(master_seed, i) for i in range(lo, hi)], dtype=np.uint64)
        mats = random_adjacency_batch(n, seeds)
        for mat in mats:
            if event == 0:
                hits += exists_triple(mat)
            elif event == 1:
                hits += exists_separated(mat)
            else:
                hits += exists_core(mat, k)
    return hits
