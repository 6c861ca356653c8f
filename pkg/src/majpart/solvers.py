"""Constructive and exact solvers for partition problems on 2-edge-colored graphs."""

from __future__ import annotations

import enum
import time
from dataclasses import dataclass
from typing import Optional

from .graph import BLUE, COLORS, RED, EdgeColoredGraph, degree
from .partition import KPartition, verify_bicolor_cut, verify_connected_cut, verify_majority


class Status(str, enum.Enum):
    SAT = "SAT"
    UNSAT = "UNSAT"
    TIMEOUT = "TIMEOUT"
    GAVE_UP = "GAVE_UP"


@dataclass
class SolveOutcome:
    status: Status
    witness: Optional[KPartition] = None
    nodes_explored: int = 0
    elapsed: float = 0.0

    def __post_init__(self):
        if (self.status == Status.SAT) != (self.witness is not None):
            raise ValueError("a witness is present exactly when the status is SAT")

    @property
    def sat(self) -> bool:
        return self.status == Status.SAT


class _Timeout(Exception):
    pass


class _Clock:
    def __init__(self, budget: Optional[float], max_nodes: Optional[int]):
        self.start = time.perf_counter()
        self.deadline = None if budget is None else self.start + budget
        self.max_nodes = max_nodes
        self.nodes = 0

    def tick(self) -> None:
        self.nodes += 1
        if self.max_nodes is not None and self.nodes > self.max_nodes:
            raise _Timeout
        if self.deadline is not None and self.nodes & 255 == 0 and time.perf_counter() > self.deadline:
            raise _Timeout

    @property
    def elapsed(self) -> float:
        return time.perf_counter() - self.start


def erdos_bipartition(g: EdgeColoredGraph, c: int) -> KPartition:
    """Local search for a 2-partition where every vertex has at least half its color-``c`` edges crossing.

    Starts from everything in part 1 and repeatedly moves, in vertex-id order,
    any vertex with more color-``c`` neighbors on its own side than across.
    Each move raises the color-``c`` cut by at least one, so this terminates.
    """
    labels = [1] * g.n
    moved = True
    while moved:
        moved = False
        for v in g.vertices():
            nbrs = g.neighbors(v, c)
            inside = sum(1 for u in nbrs if labels[u] == labels[v])
            if 2 * inside > len(nbrs):
                labels[v] = 3 - labels[v]
                moved = True
    return KPartition(2, tuple(labels))


def majority_4_partition(g: EdgeColoredGraph) -> KPartition:
    """Intersect the red and blue local-search bipartitions; always a majority partition."""
    red = erdos_bipartition(g, RED).labels
    blue = erdos_bipartition(g, BLUE).labels
    p = KPartition(4, tuple(2 * (a - 1) + b for a, b in zip(red, blue)))
    report = verify_majority(g, p)
    if not report.ok:
        raise AssertionError(f"4-partition failed verification: {report.describe()[:3]}")
    return p


def branching_order(g: EdgeColoredGraph) -> list[int]:
    return sorted(g.vertices(), key=lambda v: (-degree(g, v), v))


def exact_majority(
    g: EdgeColoredGraph,
    k: int,
    budget: Optional[float] = None,
    max_nodes: Optional[int] = None,
) -> SolveOutcome:
    """Decide whether ``g`` has a majority ``k``-partition.

    Backtracking over vertices by descending degree, with labels introduced in
    order (unused parts are interchangeable) and forward checking: a label is
    ruled out for a vertex as soon as more than half of its color-``c`` edges
    already lead into that part, and vertices left with a single option are
    assigned immediately.  UNSAT is reported only after the search space is
    exhausted; running out of ``budget`` seconds or ``max_nodes`` yields TIMEOUT.
    For ``k >= 4`` the constructive 4-partition answers directly.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    clock = _Clock(budget, max_nodes)
    if k >= 4:
        p = majority_4_partition(g)
        return SolveOutcome(Status.SAT, KPartition(k, p.labels), 0, clock.elapsed)
    search = _MajoritySearch(g, k, clock)
    try:
        found = search.run()
    except _Timeout:
        return SolveOutcome(Status.TIMEOUT, None, clock.nodes, clock.elapsed)
    if not found:
        return SolveOutcome(Status.UNSAT, None, clock.nodes, clock.elapsed)
    p = KPartition(k, tuple(search.label))
    report = verify_majority(g, p)
    if not report.ok:
        raise AssertionError(f"search returned an invalid witness: {report.describe()[:3]}")
    return SolveOutcome(Status.SAT, p, clock.nodes, clock.elapsed)


class _MajoritySearch:
    def __init__(self, g: EdgeColoredGraph, k: int, clock: _Clock):
        self.g = g
        self.k = k
        self.clock = clock
        self.n = g.n
        self.order = branching_order(g)
        self.nbrs = [[(), g.neighbors(v, RED), g.neighbors(v, BLUE)] for v in g.vertices()]
        self.deg = [[0, len(a[1]), len(a[2])] for a in self.nbrs]
        self.label = [0] * self.n
        # cnt[v][c][L]: color-c neighbors of v currently labeled L
        self.cnt = [[[0] * (k + 1) for _ in range(3)] for _ in range(self.n)]
        self.used = 0
        self.trail: list[tuple[int, int]] = []  # (vertex, used-before)

    def allowed(self, v: int, lab: int) -> bool:
        cnt, deg = self.cnt[v], self.deg[v]
        return 2 * cnt[RED][lab] <= deg[RED] and 2 * cnt[BLUE][lab] <= deg[BLUE]

    def options(self, v: int) -> list[int]:
        opts = [lab for lab in range(1, self.used + 1) if self.allowed(v, lab)]
        if self.used < self.k:
            opts.append(self.used + 1)
        return opts

    def assign(self, v: int, lab: int) -> bool:
        """Label ``v`` and propagate forced vertices; False on conflict.

        On False the caller must ``undo`` back to its trail mark.
        """
        pending: list[tuple[int, Optional[int]]] = [(v, lab)]
        while pending:
            v, lab = pending.pop()
            if self.label[v]:
                continue
            if lab is None:
                # forced when queued; options may have changed since
                opts = self.options(v)
                if not opts:
                    return False
                if len(opts) > 1:
                    continue
                lab = opts[0]
            if lab > self.used + 1 or not self.allowed(v, lab):
                return False
            before = self.used
            self.trail.append((v, before))
            self.label[v] = lab
            self.used = max(before, lab)
            ok = True
            touched = []
            for c in COLORS:
                for u in self.nbrs[v][c]:
                    self.cnt[u][c][lab] += 1
                    lu = self.label[u]
                    if not lu:
                        touched.append(u)
                    elif lu == lab and 2 * self.cnt[u][c][lab] > self.deg[u][c]:
                        ok = False
            if not ok:
                return False
            # once the last fresh part is taken every vertex may lose its fallback
            check = range(self.n) if before < self.k == self.used else touched
            for u in check:
                if self.label[u]:
                    continue
                opts = self.options(u)
                if not opts:
                    return False
                if len(opts) == 1:
                    pending.append((u, None))
        return True

    def undo(self, mark: int) -> None:
        while len(self.trail) > mark:
            v, used_before = self.trail.pop()
            lab = self.label[v]
            for c in COLORS:
                for u in self.nbrs[v][c]:
                    self.cnt[u][c][lab] -= 1
            self.label[v] = 0
            self.used = used_before

    def run(self) -> bool:
        return self._search(0)

    def _search(self, pos: int) -> bool:
        order, label = self.order, self.label
        while pos < self.n and label[order[pos]]:
            pos += 1
        if pos == self.n:
            return True
        v = order[pos]
        for lab in self.options(v):
            self.clock.tick()
            mark = len(self.trail)
            if self.assign(v, lab) and self._search(pos + 1):
                return True
            self.undo(mark)
        return False


def exact_bicolor_cut(
    g: EdgeColoredGraph,
    budget: Optional[float] = None,
    max_nodes: Optional[int] = None,
) -> SolveOutcome:
    """Decide whether some 2-partition gives every vertex a crossing edge of each color.

    Exhaustive backtracking (vertex 0 fixed to part 1 by symmetry) with unit
    propagation: once all but one color-``c`` neighbor of an assigned vertex
    sit on its own side, that last neighbor must go across; an unassigned
    vertex whose color-``c`` neighbors are all placed on one side must take
    the other side.
    """
    clock = _Clock(budget, max_nodes)
    n = g.n
    nbrs = [[(), g.neighbors(v, RED), g.neighbors(v, BLUE)] for v in g.vertices()]
    if n == 0 or any(not nbrs[v][c] for v in g.vertices() for c in COLORS):
        return SolveOutcome(Status.UNSAT, None, 0, clock.elapsed)
    order = _bfs_order(g)
    label = [0] * n
    trail: list[int] = []

    def demand(v: int):
        """None if v is fine so far, 0 on conflict, else the (vertex, side) forced by v."""
        forced = None
        for c in COLORS:
            lv = label[v]
            free = [u for u in nbrs[v][c] if not label[u]]
            if lv and any(label[u] and label[u] != lv for u in nbrs[v][c]):
                continue
            if lv:
                if not free:
                    return 0
                if len(free) == 1:
                    forced = forced or (free[0], 3 - lv)
            elif not free:
                sides = {label[u] for u in nbrs[v][c]}
                if len(sides) == 1:
                    forced = forced or (v, 3 - sides.pop())
        return forced

    def assign(v: int, lab: int) -> bool:
        stack = [(v, lab)]
        while stack:
            v, lab = stack.pop()
            if label[v]:
                if label[v] != lab:
                    return False
                continue
            label[v] = lab
            trail.append(v)
            for u in (v, *nbrs[v][RED], *nbrs[v][BLUE]):
                d = demand(u)
                if d == 0:
                    return False
                if d:
                    stack.append(d)
        return True

    def undo(mark: int) -> None:
        while len(trail) > mark:
            label[trail.pop()] = 0

    def search(pos: int) -> bool:
        while pos < n and label[order[pos]]:
            pos += 1
        if pos == n:
            return True
        v = order[pos]
        for lab in ((1,) if pos == 0 else (1, 2)):
            clock.tick()
            mark = len(trail)
            if assign(v, lab) and search(pos + 1):
                return True
            undo(mark)
        return False

    try:
        found = search(0)
    except _Timeout:
        return SolveOutcome(Status.TIMEOUT, None, clock.nodes, clock.elapsed)
    if not found:
        return SolveOutcome(Status.UNSAT, None, clock.nodes, clock.elapsed)
    p = KPartition(2, tuple(label))
    if not verify_bicolor_cut(g, p).ok:
        raise AssertionError("search returned a partition that is not a bicolor cut")
    return SolveOutcome(Status.SAT, p, clock.nodes, clock.elapsed)


def exact_connected_cut(
    g: EdgeColoredGraph,
    budget: Optional[float] = None,
    max_nodes: Optional[int] = None,
) -> SolveOutcome:
    """Decide whether some 2-partition has spanning connected crossing edges in both colors.

    Vertices are placed in breadth-first order from vertex 0 (fixed to part 1).
    A branch is cut as soon as, for some color, the edges that could still
    cross (not both endpoints already on one side) no longer connect all
    vertices.
    """
    clock = _Clock(budget, max_nodes)
    n = g.n
    if n < 2:
        return SolveOutcome(Status.UNSAT, None, 0, clock.elapsed)
    order = _bfs_order(g)
    label = [0] * n
    color_edges = {c: g.color_edges(c) for c in COLORS}

    def potential_connected() -> bool:
        for c in COLORS:
            parent = list(range(n))

            def find(x):
                while parent[x] != x:
                    parent[x] = parent[parent[x]]
                    x = parent[x]
                return x

            comps = n
            for u, v in color_edges[c]:
                if label[u] and label[u] == label[v]:
                    continue
                ru, rv = find(u), find(v)
                if ru != rv:
                    parent[ru] = rv
                    comps -= 1
            if comps != 1:
                return False
        return True

    def search(pos: int) -> bool:
        if pos == n:
            return True
        v = order[pos]
        for lab in ((1,) if pos == 0 else (1, 2)):
            clock.tick()
            label[v] = lab
            if potential_connected() and search(pos + 1):
                return True
        label[v] = 0
        return False

    try:
        found = search(0)
    except _Timeout:
        return SolveOutcome(Status.TIMEOUT, None, clock.nodes, clock.elapsed)
    if not found:
        return SolveOutcome(Status.UNSAT, None, clock.nodes, clock.elapsed)
    p = KPartition(2, tuple(label))
    if verify_connected_cut(g, p) != (True, True):
        raise AssertionError("search returned a cut that is not connected in both colors")
    return SolveOutcome(Status.SAT, p, clock.nodes, clock.elapsed)


def _bfs_order(g: EdgeColoredGraph) -> list[int]:
    seen = [False] * g.n
    order = []
    for root in g.vertices():
        if seen[root]:
            continue
        seen[root] = True
        queue = [root]
        for v in queue:
            order.append(v)
            for u in sorted(set(g.neighbors(v, RED)) | set(g.neighbors(v, BLUE))):
                if not seen[u]:
                    seen[u] = True
                    queue.append(u)
    return order
