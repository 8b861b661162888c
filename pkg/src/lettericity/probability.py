"""Events that let a random graph save letters, their bounds, and estimators.

Three events on G(n, 1/2):

* ``A``: three vertices can share one letter (ordered triple x, y, z).
* ``B``: two doubled letters can sit in a separated pattern a..a..b..b
  (ordered quadruple x, y, s, t).
* ``C(k)``: 2k vertices can be lettered by l_1..l_k l_pi(1)..l_pi(k).

The per-tuple checkers are exact: every remaining vertex can always take a
fresh singleton letter in some gap of the word, so the only obstructions are
the ones tested here.
"""
from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from typing import NamedTuple, Sequence

from lettericity import _kernels
from lettericity.constructor import core_is_consistent
from lettericity.graph import RNG_ALGORITHM, Graph, agrees_on
from lettericity.lettering import Inconsistent

DEFAULT_CORE_K_CAP = 3
EXACT_TUPLE_K_CAP = 3


@dataclass(frozen=True)
class EventKind:
    tag: str
    k: int = 0

    def __post_init__(self):
        if self.tag not in ("A", "B", "C"):
            raise ValueError(f"unknown event {self.tag!r}")
        if self.tag == "C" and self.k < 1:
            raise ValueError("event C needs k >= 1")
        if self.tag != "C" and self.k:
            raise ValueError(f"event {self.tag} takes no k")

    @property
    def arity(self) -> int:
        return {"A": 3, "B": 4}.get(self.tag, 2 * self.k)

    def __str__(self):
        return f"C(k={self.k})" if self.tag == "C" else self.tag


TRIPLE = EventKind("A")
SEPARATED = EventKind("B")


def core_form(k: int) -> EventKind:
    return EventKind("C", k)


# --- per-tuple checkers ---------------------------------------------------

def _distinct(*vs):
    if len(set(vs)) != len(vs):
        raise ValueError(f"vertices must be distinct: {vs}")


def check_triple(g: Graph, x: int, y: int, z: int) -> bool:
    """x, y, z can carry one letter, in that order."""
    _distinct(x, y, z)
    e = g.adj(x, y)
    if g.adj(y, z) != e or g.adj(x, z) != e:
        return False
    for v in range(g.n):
        if v in (x, y, z):
            continue
        if agrees_on(g, v, (x, z)) and not agrees_on(g, v, (x, y)):
            return False
    return True


def check_separated_quad(g: Graph, x: int, y: int, s: int, t: int) -> bool:
    """x, y share one letter and s, t another, in the pattern a a b b."""
    _distinct(x, y, s, t)
    cross = {g.adj(x, s), g.adj(x, t), g.adj(y, s), g.adj(y, t)}
    if len(cross) != 1:
        return False
    for v in range(g.n):
        if v in (x, y, s, t):
            continue
        if not agrees_on(g, v, (x, y)) and not agrees_on(g, v, (s, t)):
            return False
    return True


def check_core_tuple(g: Graph, vs: Sequence[int], pi: Sequence[int]) -> bool:
    """Positions of l_1..l_k l_pi(1)..l_pi(k) map to ``vs`` consistently.

    ``vs`` lists vertices in word order.
    """
    k = len(pi)
    if len(vs) != 2 * k:
        raise ValueError(f"need {2 * k} vertices for k={k}, got {len(vs)}")
    _distinct(*vs)
    if sorted(pi) != list(range(k)):
        raise ValueError(f"{pi} is not a permutation of 0..{k - 1}")
    # rebuild the pair list so position k + j holds the right copy of pi[j]
    right = {pi[j]: vs[k + j] for j in range(k)}
    pairs = [(vs[i], right[i]) for i in range(k)]
    return not isinstance(core_is_consistent(g, pairs, pi), Inconsistent)


# --- existence over all tuples --------------------------------------------

def exists_event(g: Graph, event: EventKind, *, naive: bool = False,
                 k_cap: int = DEFAULT_CORE_K_CAP) -> bool:
    """Some tuple (and, for C, some pairing) satisfies the event.

    The default path uses the bitset kernels; ``naive=True`` loops over
    tuples with the per-tuple checkers instead.
    """
    if event.tag == "C" and event.k > k_cap:
        raise ValueError(f"event C scan capped at k={k_cap}, got k={event.k}")
    if event.arity > g.n:
        return False
    if naive:
        return _exists_naive(g, event)
    m = g.matrix
    if event.tag == "A":
        return _kernels.exists_triple(m)
    if event.tag == "B":
        return _kernels.exists_separated(m)
    return _kernels.exists_core(m, event.k)


def _exists_naive(g: Graph, event: EventKind) -> bool:
    vs = range(g.n)
    if event.tag == "A":
        return any(check_triple(g, *t) for t in permutations(vs, 3))
    if event.tag == "B":
        return any(check_separated_quad(g, *t) for t in permutations(vs, 4))
    k = event.k
    return any(
        check_core_tuple(g, t, pi)
        for pi in permutations(range(k))
        for t in permutations(vs, 2 * k)
    )


# --- union bounds ---------------------------------------------------------

def _falling(n: int, r: int) -> int:
    return math.perm(n, r)


def _to_float(value: Fraction) -> float:
    try:
        return float(value)
    except OverflowError:
        return math.inf


def union_bound_A(n: int) -> float:
    """n(n-1)(n-2) (3/4)^(n-3)."""
    if n < 3:
        return 0.0
    return _to_float(_falling(n, 3) * Fraction(3, 4) ** (n - 3))


def union_bound_B(n: int) -> float:
    """n(n-1)(n-2)(n-3) (3/4)^(n-4)."""
    if n < 4:
        return 0.0
    return _to_float(_falling(n, 4) * Fraction(3, 4) ** (n - 4))


class CoreBound(NamedTuple):
    falling: float  # n(n-1)...(n-2k+1) k! 2^(-k(k-1))
    relaxed: float  # (n^2 k 2^(-k+1))^k


def log2_relaxed_bound_C(n: float, k: float) -> float:
    """log2 of (n^2 k 2^(1-k))^k; k may be fractional."""
    return k * (2 * math.log2(n) + math.log2(k) - k + 1)


def _pow2(x: float) -> float:
    try:
        return 2.0 ** x
    except OverflowError:
        return math.inf


def union_bound_C(n: int, k: int) -> CoreBound:
    if k < 1 or 2 * k > n:
        raise ValueError(f"union bound for C needs 1 <= k and 2k <= n, got n={n}, k={k}")
    # exact rational when cheap, log space otherwise
    if 2 * k * math.log2(n) < 4096:
        falling = _to_float(Fraction(_falling(n, 2 * k) * math.factorial(k), 2 ** (k * (k - 1))))
    else:
        log2_val = (math.lgamma(n + 1) - math.lgamma(n - 2 * k + 1) + math.lgamma(k + 1)) / math.log(2)
        falling = _pow2(log2_val - k * (k - 1))
    return CoreBound(falling, _pow2(log2_relaxed_bound_C(n, k)))


class Threshold(NamedTuple):
    k_star: float
    lettericity_bound: float


def lower_bound_threshold(n: int) -> Threshold:
    """k*(n) = 2 log2 n + 2 log2 log2 n and the bound n - k*(n)."""
    if n < 3:
        raise ValueError(f"threshold needs n >= 3, got {n}")
    k = 2 * math.log2(n) + 2 * math.log2(math.log2(n))
    return Threshold(k, n - k)


def union_bound(event: EventKind, n: int) -> float:
    if event.tag == "A":
        return union_bound_A(n)
    if event.tag == "B":
        return union_bound_B(n)
    return union_bound_C(n, event.k).falling


# --- exact enumeration ----------------------------------------------------

def all_labeled_graphs(n: int):
    """Every labeled graph on n vertices, edges in graph6 order as bits."""
    slots = [(i, j) for j in range(1, n) for i in range(j)]
    for code in range(1 << len(slots)):
        rows = [0] * n
        for e, (i, j) in enumerate(slots):
            if (code >> e) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
        yield Graph(n, tuple(rows))


def core_tuple_count(k: int, pi: Sequence[int] | None = None) -> tuple[int, int]:
    """(accepting graphs, all graphs) on 2k labeled vertices for pairing ``pi``."""
    if k > EXACT_TUPLE_K_CAP:
        raise ValueError(f"refusing to enumerate 2^{math.comb(2 * k, 2)} graphs (k > {EXACT_TUPLE_K_CAP})")
    if k < 1:
        raise ValueError("k must be at least 1")
    pi = tuple(range(k)) if pi is None else tuple(pi)
    vs = list(range(2 * k))
    hits = total = 0
    for g in all_labeled_graphs(2 * k):
        total += 1
        hits += check_core_tuple(g, vs, pi)
    return hits, total


def exact_tuple_probability_C(k: int, pi: Sequence[int] | None = None) -> Fraction:
    hits, total = core_tuple_count(k, pi)
    return Fraction(hits, total)


def exact_event_probability(n: int, event: EventKind, cap: int = 6) -> Fraction:
    """Pr[event] on G(n, 1/2) by checking all labeled graphs naively."""
    if n > cap:
        raise ValueError(f"refusing exact enumeration at n={n} (cap {cap})")
    hits = total = 0
    for g in all_labeled_graphs(n):
        total += 1
        hits += event.arity <= n and _exists_naive(g, event)
    return Fraction(hits, total)


# --- Monte Carlo ----------------------------------------------------------

@dataclass(frozen=True)
class ExperimentConfig:
    n: int
    trials: int
    master_seed: int
    event: EventKind

    def __post_init__(self):
        if self.trials <= 0:
            raise ValueError("trials must be positive")
        if self.n < 0:
            raise ValueError("n must be non-negative")
        if not 0 <= self.master_seed < 2**64:
            raise ValueError("master_seed must be an unsigned 64-bit integer")
        if self.event.tag == "C" and 2 * self.event.k > self.n:
            raise ValueError(f"event C(k={self.event.k}) needs n >= {2 * self.event.k}")


@dataclass(frozen=True)
class ExperimentResult:
    event: str
    n: int
    k: int
    trials: int
    hits: int
    estimate: float
    margin: float
    union_bound: float
    master_seed: int
    rng_algorithm: str

    CSV_COLUMNS = ("event", "n", "k", "trials", "hits", "estimate", "margin",
                   "union_bound", "master_seed", "rng_algorithm")

    def csv_row(self) -> list:
        return [getattr(self, c) for c in self.CSV_COLUMNS]


def _hits(args):
    return _kernels.event_hits(*args)


def monte_carlo(cfg: ExperimentConfig, workers: int = 1) -> ExperimentResult:
    """Estimate Pr[event] from ``cfg.trials`` seeded samples of G(n, 1/2).

    Trial ``i`` uses the graph of ``trial_seed(master_seed, i)``, so the hit
    count does not depend on how trials are split across ``workers``.
    """
    code = _kernels.EVENT_CODES[cfg.event.tag]
    if cfg.event.arity > cfg.n:
        hits = 0
    elif workers <= 1:
        hits = _kernels.event_hits(code, cfg.n, cfg.event.k, cfg.master_seed, 0, cfg.trials)
    else:
        bounds = [cfg.trials * i // workers for i in range(workers + 1)]
        jobs = [(code, cfg.n, cfg.event.k, cfg.master_seed, lo, hi)
                for lo, hi in zip(bounds, bounds[1:]) if hi > lo]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            hits = sum(pool.map(_hits, jobs))
    p = hits / cfg.trials
    return ExperimentResult(
        event=cfg.event.tag,
        n=cfg.n,
        k=cfg.event.k,
        trials=cfg.trials,
        hits=hits,
        estimate=p,
        margin=3 * math.sqrt(p * (1 - p) / cfg.trials),
        union_bound=union_bound(cfg.event, cfg.n) if cfg.n >= cfg.event.arity else 0.0,
        master_seed=cfg.master_seed,
        rng_algorithm=RNG_ALGORITHM,
    )
