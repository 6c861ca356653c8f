"""Vertex partitions and verifiers for the partition conditions on 2-edge-colored graphs."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Optional, Sequence

from .graph import COLORS, EdgeColoredGraph, is_connected


class PartitionError(ValueError):
    pass


class SizeMismatch(PartitionError):
    pass


class WrongK(PartitionError):
    pass


class NotProperSubset(PartitionError):
    pass


class PartitionSyntaxError(PartitionError):
    pass


@dataclass(frozen=True)
class KPartition:
    """Total labeling of vertices ``0..n-1`` by parts ``1..k``; parts may be empty."""

    k: int
    labels: tuple

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(int(x) for x in self.labels))
        if self.k < 1:
            raise PartitionError("k must be at least 1")
        bad = [x for x in self.labels if not 1 <= x <= self.k]
        if bad:
            raise PartitionError(f"labels must lie in 1..{self.k}, got {bad[0]}")

    @property
    def n(self) -> int:
        return len(self.labels)

    def part(self, i: int) -> frozenset:
        return frozenset(v for v, x in enumerate(self.labels) if x == i)

    def parts(self) -> list[frozenset]:
        return [self.part(i) for i in range(1, self.k + 1)]

    def sizes(self) -> list[int]:
        sizes = [0] * self.k
        for x in self.labels:
            sizes[x - 1] += 1
        return sizes

    def restrict(self, n: int) -> "KPartition":
        return KPartition(self.k, self.labels[:n])

    @classmethod
    def from_parts(cls, n: int, parts: Sequence[Iterable[int]]) -> "KPartition":
        labels = [0] * n
        for i, part in enumerate(parts, 1):
            for v in part:
                if labels[v]:
                    raise PartitionError(f"vertex {v} appears in two parts")
                labels[v] = i
        if 0 in labels:
            raise PartitionError(f"vertex {labels.index(0)} is unlabeled")
        return cls(len(parts), tuple(labels))


class Violation(NamedTuple):
    vertex: int
    color: int
    inside: int
    outside: int


@dataclass
class ViolationReport:
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.ok

    def describe(self) -> list[str]:
        return [
            f"v {x.vertex + 1} color {x.color} inside {x.inside} outside {x.outside}"
            for x in self.violations
        ]


def _check_size(g: EdgeColoredGraph, p: KPartition) -> None:
    if p.n != g.n:
        raise SizeMismatch(f"partition labels {p.n} vertices, graph has {g.n}")


def _check_two(p: KPartition) -> None:
    if p.k != 2:
        raise WrongK(f"expected a 2-partition, got k={p.k}")


def side_counts(g: EdgeColoredGraph, labels: Sequence[int], v: int, c: int) -> tuple[int, int]:
    """(inside, outside) color-``c`` degree of ``v`` under ``labels``."""
    lv = labels[v]
    inside = sum(1 for u in g.neighbors(v, c) if labels[u] == lv)
    return inside, len(g.neighbors(v, c)) - inside


def verify_majority(g: EdgeColoredGraph, p: KPartition, vertices: Optional[Iterable[int]] = None) -> ViolationReport:
    """Check that every vertex has at most as many edges of each color inside its part as outside.

    ``vertices`` restricts which vertices are checked (all by default); the
    counts themselves always use the whole graph.
    """
    _check_size(g, p)
    report = ViolationReport()
    for v in (g.vertices() if vertices is None else vertices):
        for c in COLORS:
            inside, outside = side_counts(g, p.labels, v, c)
            if inside > outside:
                report.violations.append(Violation(v, c, inside, outside))
    return report


def verify_bicolor_cut(g: EdgeColoredGraph, p: KPartition) -> ViolationReport:
    """Every vertex needs at least one crossing edge of each color."""
    _check_size(g, p)
    _check_two(p)
    report = ViolationReport()
    for v in g.vertices():
        for c in COLORS:
            inside, outside = side_counts(g, p.labels, v, c)
            if outside < 1:
                report.violations.append(Violation(v, c, inside, outside))
    return report


def is_balanced(p: KPartition) -> bool:
    sizes = p.sizes()
    return max(sizes) - min(sizes) <= 1


def cut_color_subgraph(g: EdgeColoredGraph, p: KPartition, c: int) -> EdgeColoredGraph:
    """The color-``c`` edges crossing the 2-partition, on the full vertex set."""
    _check_size(g, p)
    _check_two(p)
    lab = p.labels
    return EdgeColoredGraph(g.n, frozenset(e for e in g.edges if e[2] == c and lab[e[0]] != lab[e[1]]))


def verify_connected_cut(g: EdgeColoredGraph, p: KPartition) -> tuple[bool, bool]:
    """(red, blue): whether each color's crossing edges form a spanning connected subgraph.

    A partition with an empty side is never a cut, so it fails both flags.
    """
    _check_size(g, p)
    if len(set(p.labels)) < 2:
        return False, False
    flags = []
    for c in COLORS:
        cut = cut_color_subgraph(g, p, c)
        flags.append(is_connected(g.n, ((u, v) for u, v, _ in cut.edges)))
    return flags[0], flags[1]


def verify_good_subset(g: EdgeColoredGraph, s: Iterable[int]) -> bool:
    """Whether every vertex of ``s`` has at least half of each color's neighbors outside ``s``."""
    s = frozenset(s)
    if not s or len(s) >= g.n or any(not 0 <= v < g.n for v in s):
        raise NotProperSubset("a good subset must be a nonempty proper subset of V")
    for v in s:
        for c in COLORS:
            nbrs = g.neighbors(v, c)
            inside = sum(1 for u in nbrs if u in s)
            if 2 * inside > len(nbrs):
                return False
    return True


EXHAUSTIVE_GOOD_SUBSET_LIMIT = 25


@dataclass
class GoodSubsetResult:
    subset: Optional[frozenset]
    exhaustive: bool

    @property
    def found(self) -> bool:
        return self.subset is not None


def search_good_subset(g: EdgeColoredGraph, min_size: int, budget: int = 200_000, seed: int = 0) -> GoodSubsetResult:
    """Look for a good subset with at least ``min_size`` vertices.

    Good subsets are closed under taking subsets, so it suffices to find one of
    size exactly ``min_size``.  For ``n <= 25`` the search is exhaustive and a
    ``None`` subset is a proof of nonexistence; above that a budgeted greedy
    search runs and a miss is only inconclusive (``exhaustive=False``).
    """
    n = g.n
    if min_size > n:
        raise ValueError("min_size exceeds the vertex count")
    target = max(min_size, 1)
    if target >= n:
        return GoodSubsetResult(None, True)
    if n <= EXHAUSTIVE_GOOD_SUBSET_LIMIT:
        return GoodSubsetResult(_exhaustive_good(g, target), True)
    return GoodSubsetResult(_greedy_good(g, target, budget, seed), False)


def _exhaustive_good(g: EdgeColoredGraph, target: int) -> Optional[frozenset]:
    n = g.n
    deg = [[0] + [len(g.neighbors(v, c)) for c in COLORS] for v in range(n)]
    inside = [[0, 0, 0] for _ in range(n)]
    chosen: list[int] = []
    member = [False] * n

    def can_add(v):
        for c in COLORS:
            if 2 * inside[v][c] > deg[v][c]:
                return False
            for u in g.neighbors(v, c):
                if member[u] and 2 * (inside[u][c] + 1) > deg[u][c]:
                    return False
        return True

    def add(v, sign):
        member[v] = sign > 0
        for c in COLORS:
            for u in g.neighbors(v, c):
                inside[u][c] += sign

    def rec(start):
        if len(chosen) == target:
            return True
        for v in range(start, n - (target - len(chosen)) + 1):
            if can_add(v):
                add(v, 1)
                chosen.append(v)
                if rec(v + 1):
                    return True
                chosen.pop()
                add(v, -1)
        return False

    return frozenset(chosen) if rec(0) else None


def _greedy_good(g: EdgeColoredGraph, target: int, budget: int, seed: int) -> Optional[frozenset]:
    import random

    rng = random.Random(seed)
    order = list(g.vertices())
    steps = 0
    while steps < budget:
        rng.shuffle(order)
        s: set[int] = set()
        for v in order:
            steps += 1
            s.add(v)
            if len(s) >= g.n or not verify_good_subset(g, s):
                s.discard(v)
            if len(s) == target:
                return frozenset(s)
    return None


def parse_partition(text: str) -> KPartition:
    """Parse ``s partition <n> <k>`` followed by ``n`` labels in vertex order."""
    tokens: list[str] = []
    header = None
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("s"):
            parts = line.split()
            if len(parts) != 4 or parts[1] != "partition":
                raise PartitionSyntaxError("expected 's partition <n> <k>'")
            header = (int(parts[2]), int(parts[3]))
            continue
        tokens.extend(line.split())
    if header is None:
        raise PartitionSyntaxError("missing 's partition' header")
    n, k = header
    if len(tokens) != n:
        raise PartitionSyntaxError(f"header declares {n} labels, found {len(tokens)}")
    try:
        return KPartition(k, tuple(int(t) for t in tokens))
    except ValueError as exc:
        raise PartitionSyntaxError(str(exc)) from None


def serialize_partition(p: KPartition) -> str:
    return f"s partition {p.n} {p.k}\n" + " ".join(map(str, p.labels)) + "\n"


def merge_parts(p: KPartition, a: int, b: int) -> KPartition:
    """Relabel part ``b`` as ``a`` and compact labels to ``1..k-1``."""
    if a == b:
        return p
    keep = [x for x in range(1, p.k + 1) if x != b]
    remap = {old: new for new, old in enumerate(keep, 1)}
    return KPartition(p.k - 1, tuple(remap[a if x == b else x] for x in p.labels))


def all_bipartitions(n: int):
    """Every 2-partition of ``0..n-1`` with vertex 0 in part 1 (one per unordered cut)."""
    if n == 0:
        yield KPartition(2, ())
        return
    for mask in range(1 << (n - 1)):
        yield KPartition(2, (1,) + tuple(2 if mask >> i & 1 else 1 for i in range(n - 1)))

