"""numba kernels; same contracts as :mod:`numpy_impl`."""
from __future__ import annotations

import numpy as np
from numba import njit

from lettericity._kernels.rng import GOLDEN, MUL1, MUL2, trial_seed
from lettericity._kernels.tables import core_checks, permutations_array

_GOLDEN = np.uint64(GOLDEN)
_MUL1 = np.uint64(MUL1)
_MUL2 = np.uint64(MUL2)
_TRIAL_SALT = np.uint64(0x5851F42D4C957F2D)

_opts = dict(cache=True, nogil=True)


def n_words(n: int) -> int:
    return max(1, (n + 63) // 64)


@njit(**_opts)
def _mix64(z):
    z = (z ^ (z >> np.uint64(30))) * _MUL1
    z = (z ^ (z >> np.uint64(27))) * _MUL2
    return z ^ (z >> np.uint64(31))


@njit(**_opts)
def _fill_random(n, seed, out):
    out[:, :] = 0
    e = 0
    word = np.uint64(0)
    for j in range(1, n):
        for i in range(j):
            if e % 64 == 0:
                word = _mix64(seed + np.uint64(e // 64 + 1) * _GOLDEN)
            bit = (word >> np.uint64(e % 64)) & np.uint64(1)
            if bit:
                out[i, j] = 1
                out[j, i] = 1
            e += 1


def random_adjacency(n: int, seed: int) -> np.ndarray:
    out = np.zeros((n, n), dtype=np.uint8)
    _fill_random(n, np.uint64(seed), out)
    return out


@njit(**_opts)
def _pack(m, words):
    n = m.shape[0]
    words[:, :] = 0
    for v in range(n):
        for u in range(n):
            if m[v, u]:
                words[v, u // 64] |= np.uint64(1) << np.uint64(u % 64)


def pack_words(matrix: np.ndarray) -> np.ndarray:
    m = np.ascontiguousarray(matrix, dtype=np.uint8)
    words = np.zeros((m.shape[0], n_words(m.shape[0])), dtype=np.uint64)
    _pack(m, words)
    return words


@njit(**_opts)
def _exists_triple(m, words):
    n = m.shape[0]
    nw = words.shape[1]
    for y in range(n):
        for x in range(n):
            if x == y:
                continue
            for z in range(x + 1, n):
                if z == y:
                    continue
                e = m[x, y]
                if m[y, z] != e or m[x, z] != e:
                    continue
                ok = True
                for w in range(nw):
                    bad = ~(words[x, w] ^ words[z, w]) & (words[x, w] ^ words[y, w])
                    base = 64 * w
                    for v in (x, y, z):
                        if base <= v < base + 64:
                            bad &= ~(np.uint64(1) << np.uint64(v - base))
                    if bad != 0:
                        ok = False
                        break
                if ok:
                    return True
    return False


def exists_triple(matrix: np.ndarray) -> bool:
    m = np.ascontiguousarray(matrix, dtype=np.uint8)
    if m.shape[0] < 3:
        return False
    return bool(_exists_triple(m, pack_words(m)))


@njit(**_opts)
def _exists_separated(m, words):
    n = m.shape[0]
    nw = words.shape[1]
    cls = np.empty(n, dtype=np.int64)
    for x in range(n):
        for y in range(x + 1, n):
            # vertices agreeing on {x, y}, remembering the common value
            cnt = 0
            for s in range(x + 1, n):
                if s != y and m[x, s] == m[y, s]:
                    cls[cnt] = s
                    cnt += 1
            for a in range(cnt):
                s = cls[a]
                for b in range(a + 1, cnt):
                    t = cls[b]
                    if m[x, t] != m[x, s]:
                        continue
                    ok = True
                    for w in range(nw):
                        bad = (words[x, w] ^ words[y, w]) & (words[s, w] ^ words[t, w])
                        base = 64 * w
                        for v in (x, y, s, t):
                            if base <= v < base + 64:
                                bad &= ~(np.uint64(1) << np.uint64(v - base))
                        if bad != 0:
                            ok = False
                            break
                    if ok:
                        return True
    return False


def exists_separated(matrix: np.ndarray) -> bool:
    m = np.ascontiguousarray(matrix, dtype=np.uint8)
    if m.shape[0] < 4:
        return False
    return bool(_exists_separated(m, pack_words(m)))


@njit(**_opts)
def _core_dfs(m, length, offsets, qs, q2s, p2s):
    n = m.shape[0]
    t = np.empty(length, dtype=np.int64)
    nxt = np.zeros(length, dtype=np.int64)
    used = np.zeros(n, dtype=np.bool_)
    p = 0
    while p >= 0:
        placed = False
        while nxt[p] < n:
            v = nxt[p]
            nxt[p] += 1
            if used[v]:
                continue
            ok = True
            for c in range(offsets[p], offsets[p + 1]):
                other = v if p2s[c] == p else t[p2s[c]]
                if m[t[qs[c]], v] != m[t[q2s[c]], other]:
                    ok = False
                    break
            if ok:
                t[p] = v
                used[v] = True
                placed = True
                break
        if placed:
            if p == length - 1:
                return True
            p += 1
            nxt[p] = 0
        else:
            p -= 1
            if p >= 0:
                used[t[p]] = False
    return False


def exists_core(matrix: np.ndarray, k: int) -> bool:
    m = np.ascontiguousarray(matrix, dtype=np.uint8)
    if 2 * k > m.shape[0]:
        return False
    for perm in permutations_array(k):
        word = np.concatenate([np.arange(k), perm])
        if _core_dfs(m, 2 * k, *core_checks(word)):
            return True
    return False


@njit(**_opts)
def _hits_ab(event, n, seeds):
    m = np.zeros((n, n), dtype=np.uint8)
    words = np.zeros((n, (n + 63) // 64 if n > 0 else 1), dtype=np.uint64)
    hits = 0
    for i in range(seeds.shape[0]):
        _fill_random(n, seeds[i], m)
        _pack(m, words)
        if event == 0:
            if n >= 3 and _exists_triple(m, words):
                hits += 1
        else:
            if n >= 4 and _exists_separated(m, words):
                hits += 1
    return hits


def event_hits(event: int, n: int, k: int, master_seed: int, start: int, stop: int) -> int:
    seeds = np.array([trial_seed(master_seed, i) for i in range(start, stop)], dtype=np.uint64)
    if event in (0, 1):
        return int(_hits_ab(event, n, seeds))
    hits = 0
    for s in seeds:
        hits += exists_core(random_adjacency(n, int(s)), k)
    return hits
