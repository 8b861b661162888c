"""Precomputed constraint tables shared by both kernel backends."""
from __future__ import annotations

from functools import lru_cache
from itertools import permutations

import numpy as np


@lru_cache(maxsize=None)
def permutations_array(k: int) -> np.ndarray:
    return np.array(list(permutations(range(k))), dtype=np.intp).reshape(-1, k)


def core_checks(word) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    """Equality checks to run when position ``p`` of ``word`` is filled.

    All position pairs ``i < j`` carrying the same ordered letter pair must
    share an edge status. The first pair of each group to be completed is
    its representative; every later pair ``(q, p)`` is compared against it.
    Checks for position ``p`` are ``qs[offsets[p]:offsets[p+1]]`` etc.,
    meaning ``adj(t[q], t[p]) == adj(t[q2], t[p2])``.
    """
    word = [int(a) for a in word]
    rep: dict[tuple[int, int], tuple[int, int]] = {}
    offsets = [0]
    qs, q2s, p2s = [], [], []
    for p, b in enumerate(word):
        for q in range(p):
            key = (word[q], b)
            if key in rep:
                q2, p2 = rep[key]
                qs.append(q)
                q2s.append(q2)
                p2s.append(p2)
            else:
                rep[key] = (q, p)
        offsets.append(len(qs))
    as_arr = lambda xs: np.array(xs, dtype=np.intp)
    return as_arr(offsets), as_arr(qs), as_arr(q2s), as_arr(p2s)
