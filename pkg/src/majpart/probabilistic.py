"""Seeded random partitions built on perfect matchings, local-lemma bookkeeping, and tail checks.

All randomness comes from numpy's PCG64 bit generator.  Block structure is a
single permutation drawn from ``PCG64(seed)``.  The orientation of block ``b``
on its ``r``-th draw comes from ``SeedSequence(seed, spawn_key=(tag, b, r))``,
so redrawing one block never shifts the stream of any other block.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import permutations
from typing import Optional, Sequence, Union

import mpmath
import numpy as np

from .graph import COLORS, EmptyGraph, EdgeColoredGraph, max_degree, min_color_degree
from .partition import KPartition, SizeMismatch, verify_majority
from .solvers import SolveOutcome, Status


class BadParity(ValueError):
    pass


class BadArgs(ValueError):
    pass


_TAG_PAIR = 2
_TAG_TRIPLE = 3
_TRIPLE_PERMS = tuple(permutations((1, 2, 3)))


@dataclass(frozen=True)
class Matching:
    """Partition of ``0..n-1`` into blocks of ``arity`` vertices (pairs or triples)."""

    n: int
    arity: int
    blocks: tuple

    def __post_init__(self):
        seen = sorted(v for b in self.blocks for v in b)
        if seen != list(range(self.n)) or any(len(b) != self.arity for b in self.blocks):
            raise ValueError("blocks must be disjoint, of equal size, and cover every vertex")

    def block_of(self) -> list[int]:
        owner = [0] * self.n
        for i, b in enumerate(self.blocks):
            for v in b:
                owner[v] = i
        return owner


def _matching(n: int, arity: int, seed: int) -> Matching:
    if n < 0 or n % arity:
        raise BadParity(f"n={n} is not a multiple of {arity}")
    perm = np.random.Generator(np.random.PCG64(seed)).permutation(n).tolist()
    blocks = tuple(tuple(sorted(perm[i : i + arity])) for i in range(0, n, arity))
    return Matching(n, arity, blocks)


def pair_matching(n: int, seed: int) -> Matching:
    return _matching(n, 2, seed)


def triple_matching(n: int, seed: int) -> Matching:
    return _matching(n, 3, seed)


def _block_draw(seed: int, tag: int, block: int, draw: int) -> int:
    ss = np.random.SeedSequence(seed, spawn_key=(tag, block, draw))
    return int(ss.generate_state(1, np.uint64)[0])


def _orient(labels: list, m: Matching, seed: int, block: int, draw: int) -> None:
    b = m.blocks[block]
    if m.arity == 2:
        flip = _block_draw(seed, _TAG_PAIR, block, draw) % 2
        labels[b[0]], labels[b[1]] = (2, 1) if flip else (1, 2)
    else:
        perm = _TRIPLE_PERMS[_block_draw(seed, _TAG_TRIPLE, block, draw) % 6]
        for v, lab in zip(b, perm):
            labels[v] = lab


def random_bipartition(m: Matching, seed: int) -> KPartition:
    """Split every pair across the two parts with an independent fair coin."""
    if m.arity != 2:
        raise BadParity("random_bipartition needs a pair matching")
    labels = [0] * m.n
    for i in range(len(m.blocks)):
        _orient(labels, m, seed, i, 0)
    return KPartition(2, tuple(labels))


def rainbow_coloring(m: Matching, seed: int) -> KPartition:
    """Give each triple a uniformly random permutation of the three parts."""
    if m.arity != 3:
        raise BadParity("rainbow_coloring needs a triple matching")
    labels = [0] * m.n
    for i in range(len(m.blocks)):
        _orient(labels, m, seed, i, 0)
    return KPartition(3, tuple(labels))


def bad_events(g: EdgeColoredGraph, p: KPartition) -> list[tuple[int, int]]:
    """All (v, color) where v has some color edges but not strictly more than half of them cross."""
    if p.n != g.n:
        raise SizeMismatch(f"partition labels {p.n} vertices, graph has {g.n}")
    labels = p.labels
    out = []
    for v in g.vertices():
        for c in COLORS:
            nbrs = g.neighbors(v, c)
            if not nbrs:
                continue
            crossing = sum(1 for u in nbrs if labels[u] != labels[v])
            if 2 * crossing <= len(nbrs):
                out.append((v, c))
    return out


def resample_majority3(g: EdgeColoredGraph, seed: int, max_rounds: int = 1000) -> SolveOutcome:
    """Search for a balanced majority 3-partition by local resampling.

    Start from a rainbow coloring of a random triple matching.  While the
    partition is not a majority partition, take the lowest flagged (v, color)
    and redraw every triple meeting v or its neighbors of that color.  Giving
    up after ``max_rounds`` redraws says nothing about existence.
    """
    if g.n % 3:
        raise BadParity(f"n={g.n} is not a multiple of 3; pad first")
    if max_rounds <= 0:
        raise BadArgs("max_rounds must be positive")
    m = triple_matching(g.n, seed)
    owner = m.block_of()
    draws = [0] * len(m.blocks)
    labels = [0] * g.n
    for i in range(len(m.blocks)):
        _orient(labels, m, seed, i, 0)
    for rounds in range(max_rounds + 1):
        p = KPartition(3, tuple(labels))
        if verify_majority(g, p).ok:
            if p.sizes() != [g.n // 3] * 3:
                raise AssertionError("rainbow partition is not balanced")
            return SolveOutcome(Status.SAT, p, rounds)
        if rounds == max_rounds:
            break
        v, c = bad_events(g, p)[0]
        for b in sorted({owner[u] for u in (v, *g.neighbors(v, c))}):
            draws[b] += 1
            _orient(labels, m, seed, b, draws[b])
    return SolveOutcome(Status.GAVE_UP, None, max_rounds)


def lll_threshold(delta: int) -> mpmath.mpf:
    """Largest maximum degree the local lemma argument tolerates at minimum color-degree ``delta``."""
    if delta <= 0:
        raise BadArgs("delta must be positive")
    with mpmath.workdps(50):
        return mpmath.e ** (mpmath.mpf(delta) / 18) / (9 * delta) - 2


@dataclass(frozen=True)
class LLLCheck:
    holds: bool
    delta: int
    Delta: int
    threshold: Optional[mpmath.mpf]  # None when delta = 0


def lll_hypothesis_check(g: EdgeColoredGraph) -> LLLCheck:
    if g.n == 0:
        raise EmptyGraph("the degree hypothesis needs at least one vertex")
    delta, Delta = min_color_degree(g), max_degree(g)
    if delta == 0:
        return LLLCheck(False, 0, Delta, None)
    t = lll_threshold(delta)
    return LLLCheck(bool(Delta <= t), delta, Delta, t)


@dataclass(frozen=True)
class LLLParameters:
    """Local lemma quantities for a graph.

    ``sigma[v]`` and ``weights[v]`` are per-color pairs (red, blue).  The
    weights ``exp((1/delta - 1/18) d_i(v))`` only lie in (0, 1) once
    ``delta > 18``; below that they are left as None.
    """

    delta: int
    Delta: int
    k: int
    sigma: tuple
    weights: Optional[tuple]

    @classmethod
    def from_graph(cls, g: EdgeColoredGraph, k: int = 2) -> "LLLParameters":
        if g.n == 0:
            raise EmptyGraph("no vertices")
        delta, Delta = min_color_degree(g), max_degree(g)
        slack = math.log(2 * math.e * k) / 2 + math.log(max(Delta, 1))
        sigma = tuple(
            tuple(math.sqrt(len(g.neighbors(v, c)) * slack) for c in COLORS) for v in g.vertices()
        )
        weights = None
        if delta > 18:
            weights = tuple(
                tuple(math.exp((1 / delta - 1 / 18) * len(g.neighbors(v, c))) for c in COLORS)
                for v in g.vertices()
            )
        return cls(delta, Delta, k, sigma, weights)

    @property
    def dependency_bound(self) -> int:
        return 2 * self.k * self.Delta ** 2

    @property
    def event_probability(self) -> float:
        return 1 / (2 * math.e * self.k * max(self.Delta, 1) ** 2)


def pad_to_multiple_of_3(g: EdgeColoredGraph) -> tuple[EdgeColoredGraph, list[int]]:
    """Add one or two copies of a single vertex so that 3 divides n.

    A copy gets the same colored neighbors as the original (not the original
    itself or earlier copies), so every color degree is preserved or grows.
    The copied vertex is the one whose copies raise the maximum degree least,
    ties broken by smaller degree and then smaller id.
    """
    extra = (-g.n) % 3
    if extra == 0:
        return g, []
    if g.n == 0:
        raise EmptyGraph("cannot copy a vertex of the empty graph")
    deg = [sum(len(g.neighbors(v, c)) for c in COLORS) for v in g.vertices()]
    top = max(deg)

    def growth(v: int) -> int:
        mult: dict[int, int] = {}
        for c in COLORS:
            for u in g.neighbors(v, c):
                mult[u] = mult.get(u, 0) + 1
        return max([top] + [deg[u] + extra * k for u, k in mult.items()]) - top

    src = min(g.vertices(), key=lambda v: (growth(v), deg[v], v))
    added = list(range(g.n, g.n + extra))
    edges = [(u, w, c) for w in added for c in COLORS for u in g.neighbors(src, c)]
    return g.add_vertices(extra).with_edges(edges), added


def hoeffding_bound(n: int, sigma: float) -> float:
    """Upper bound on P(X <= E[X] - sigma) for a sum of n independent 0/1 variables."""
    if n < 1 or sigma < 0 or math.isnan(sigma):
        raise BadArgs("need n >= 1 and sigma >= 0")
    return math.exp(-2 * sigma * sigma / n)


def empirical_tail(
    n: int,
    p_success: Union[float, Sequence[float]],
    threshold: float,
    trials: int,
    seed: int,
) -> float:
    """Monte-Carlo estimate of P(X <= threshold), X a sum of n independent Bernoulli variables.

    ``p_success`` is one probability for all variables or one per variable.
    """
    if trials < 1 or n < 0:
        raise BadArgs("need trials >= 1 and n >= 0")
    probs = np.asarray(p_success, dtype=float)
    if probs.ndim == 0:
        probs = np.full(n, float(probs))
    if probs.shape != (n,) or np.any((probs < 0) | (probs > 1)):
        raise BadArgs("success probabilities must be n values in [0, 1]")
    rng = np.random.Generator(np.random.PCG64(seed))
    hits = 0
    chunk = max(1, min(trials, 2_000_000 // max(n, 1)))
    done = 0
    while done < trials:
        size = min(chunk, trials - done)
        sums = (rng.random((size, n)) < probs).sum(axis=1)
        hits += int(np.count_nonzero(sums <= threshold))
        done += size
    return hits / trials


TAIL_GRID_N = (10, 20, 50, 100)


def tail_study(trials: int, seed: int) -> list[dict]:
    """Empirical lower tails of Binomial(n, 1/2) against the Hoeffding bound at sigma in {0, sqrt n, 2 sqrt n}."""
    rows = []
    for n in TAIL_GRID_N:
        for mult in (0, 1, 2):
            sigma = mult * math.sqrt(n)
            threshold = n / 2 - sigma
            rows.append(
                {
                    "n": n,
                    "threshold": threshold,
                    "empirical": empirical_tail(n, 0.5, threshold, trials, seed),
                    "bound": hoeffding_bound(n, sigma),
                }
            )
    return rows


def tail_study_csv(rows: list[dict]) -> str:
    lines = ["n,threshold,empirical,bound"]
    lines += [f"{r['n']},{r['threshold']:.6f},{r['empirical']:.6f},{r['bound']:.6f}" for r in rows]
    return "\n".join(lines) + "\n"


def standard_error(prob: float, trials: int) -> float:
    return math.sqrt(max(prob * (1 - prob), 0.0) / trials)
