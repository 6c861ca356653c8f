"""Two-edge-colored graphs: data model, color-degree queries and the ECG text format.

Vertices are dense ids ``0..n-1``.  Every edge carries color 1 (red) or 2
(blue); a pair of vertices may be joined by at most one edge of each color.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator

RED = 1
BLUE = 2
COLORS = (RED, BLUE)


class GraphError(ValueError):
    pass


class SelfLoop(GraphError):
    pass


class DuplicateEdge(GraphError):
    pass


class VertexOutOfRange(GraphError, IndexError):
    pass


class EmptyGraph(GraphError):
    pass


class ECGSyntaxError(GraphError):
    def __init__(self, lineno: int, msg: str):
        super().__init__(f"line {lineno}: {msg}")
        self.lineno = lineno


def _key(u: int, v: int, c: int) -> tuple[int, int, int]:
    return (u, v, c) if u < v else (v, u, c)


@dataclass(frozen=True)
class EdgeColoredGraph:
    """Immutable 2-edge-colored graph.

    ``edges`` is a frozenset of normalized ``(u, v, c)`` triples with ``u < v``.
    Per-color neighbor lists are sorted by vertex id so all iteration is
    deterministic.
    """

    n: int
    edges: frozenset = frozenset()
    _adj: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.n < 0:
            raise GraphError("vertex count must be non-negative")
        adj = [[[], [], []] for _ in range(self.n)]
        for u, v, c in self.edges:
            if u == v:
                raise SelfLoop(f"self-loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise VertexOutOfRange(f"edge ({u}, {v}) outside 0..{self.n - 1}")
            if c not in COLORS:
                raise GraphError(f"edge color must be 1 or 2, got {c}")
            adj[u][c].append(v)
            adj[v][c].append(u)
        frozen = tuple((None, tuple(sorted(a[1])), tuple(sorted(a[2]))) for a in adj)
        object.__setattr__(self, "_adj", frozen)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int, int]]) -> "EdgeColoredGraph":
        """Build a graph, rejecting self-loops and repeated (pair, color) edges."""
        seen = set()
        for u, v, c in edges:
            if u == v:
                raise SelfLoop(f"self-loop at vertex {u}")
            key = _key(u, v, c)
            if key in seen:
                raise DuplicateEdge(f"edge {u}-{v} of color {c} already present")
            seen.add(key)
        return cls(n, frozenset(seen))

    def __iter__(self) -> Iterator[tuple[int, int, int]]:
        return iter(sorted(self.edges))

    @property
    def m(self) -> int:
        return len(self.edges)

    def vertices(self) -> range:
        return range(self.n)

    def _check(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise VertexOutOfRange(f"vertex {v} outside 0..{self.n - 1}")

    def neighbors(self, v: int, c: int) -> tuple[int, ...]:
        self._check(v)
        return self._adj[v][c]

    def has_edge(self, u: int, v: int, c: int) -> bool:
        return _key(u, v, c) in self.edges

    def color_edges(self, c: int) -> list[tuple[int, int]]:
        return sorted((u, v) for u, v, col in self.edges if col == c)

    def add_vertices(self, count: int) -> "EdgeColoredGraph":
        return EdgeColoredGraph(self.n + count, self.edges)

    def with_edges(self, edges: Iterable[tuple[int, int, int]]) -> "EdgeColoredGraph":
        g = self
        new = set(self.edges)
        for u, v, c in edges:
            g._check_new(u, v, c, new)
            new.add(_key(u, v, c))
        return EdgeColoredGraph(self.n, frozenset(new))

    def _check_new(self, u, v, c, present) -> None:
        if u == v:
            raise SelfLoop(f"self-loop at vertex {u}")
        self._check(u)
        self._check(v)
        if c not in COLORS:
            raise GraphError(f"edge color must be 1 or 2, got {c}")
        if _key(u, v, c) in present:
            raise DuplicateEdge(f"edge {u}-{v} of color {c} already present")


def add_edge(g: EdgeColoredGraph, u: int, v: int, c: int) -> EdgeColoredGraph:
    """Return a copy of ``g`` with the edge ``uv`` of color ``c`` added."""
    return g.with_edges([(u, v, c)])


def color_degree(g: EdgeColoredGraph, v: int, c: int) -> int:
    return len(g.neighbors(v, c))


def color_degree_into(g: EdgeColoredGraph, v: int, c: int, s) -> int:
    """Number of color-``c`` edges from ``v`` into the vertex set ``s``."""
    return sum(1 for u in g.neighbors(v, c) if u in s)


def degree(g: EdgeColoredGraph, v: int) -> int:
    return color_degree(g, v, RED) + color_degree(g, v, BLUE)


def min_color_degree(g: EdgeColoredGraph) -> int:
    if g.n == 0:
        raise EmptyGraph("minimum color-degree of the empty graph")
    return min(color_degree(g, v, c) for v in g.vertices() for c in COLORS)


def max_degree(g: EdgeColoredGraph) -> int:
    if g.n == 0:
        raise EmptyGraph("maximum degree of the empty graph")
    return max(degree(g, v) for v in g.vertices())


def color_subgraph(g: EdgeColoredGraph, c: int) -> EdgeColoredGraph:
    return EdgeColoredGraph(g.n, frozenset(e for e in g.edges if e[2] == c))


def is_connected(n: int, edges: Iterable[tuple[int, int]]) -> bool:
    """Whether the simple graph on ``0..n-1`` with ``edges`` is connected."""
    if n <= 1:
        return True
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    comps = n
    for u, v in edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
            comps -= 1
    return comps == 1


def edge_connectivity(g: EdgeColoredGraph, c: int) -> int:
    """Edge-connectivity of the color-``c`` spanning subgraph (max-flow min-cut)."""
    import networkx as nx

    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.color_edges(c))
    if g.n <= 1:
        return 0
    if not nx.is_connected(h):
        return 0
    return nx.edge_connectivity(h)


def parse_graph(text: str) -> EdgeColoredGraph:
    """Parse the ECG format: ``c`` comments, ``p ecg n m`` header, ``e u v col`` lines (1-indexed)."""
    n = None
    declared_m = None
    edges: list[tuple[int, int, int]] = []
    seen = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if n is not None:
                raise ECGSyntaxError(lineno, "duplicate header")
            if len(parts) != 4 or parts[1] != "ecg":
                raise ECGSyntaxError(lineno, "expected 'p ecg <n> <m>'")
            try:
                n, declared_m = int(parts[2]), int(parts[3])
            except ValueError:
                raise ECGSyntaxError(lineno, "non-integer header field") from None
            if n < 0 or declared_m < 0:
                raise ECGSyntaxError(lineno, "negative header field")
        elif parts[0] == "e":
            if len(parts) != 4:
                raise ECGSyntaxError(lineno, "expected 'e <u> <v> <col>'")
            try:
                u, v, c = (int(x) for x in parts[1:])
            except ValueError:
                raise ECGSyntaxError(lineno, "non-integer edge field") from None
            if n is not None and not (1 <= u <= n and 1 <= v <= n):
                raise ECGSyntaxError(lineno, f"vertex out of range 1..{n}")
            if c not in COLORS:
                raise ECGSyntaxError(lineno, f"color must be 1 or 2, got {c}")
            if u == v:
                raise ECGSyntaxError(lineno, f"self-loop at vertex {u}")
            key = _key(u - 1, v - 1, c)
            if key in seen:
                raise ECGSyntaxError(lineno, f"duplicate edge {u} {v} {c}")
            seen.add(key)
            edges.append(key)
        else:
            raise ECGSyntaxError(lineno, f"unknown line type {parts[0]!r}")
    if n is None:
        # edges before a header are allowed only if a header follows; none did
        raise ECGSyntaxError(0, "missing 'p ecg' header")
    if any(not (0 <= u < n and 0 <= v < n) for u, v, _ in edges):
        raise ECGSyntaxError(0, "edge outside declared vertex range")
    if declared_m != len(edges):
        raise ECGSyntaxError(0, f"header declares {declared_m} edges, found {len(edges)}")
    return EdgeColoredGraph(n, frozenset(edges))


def serialize_graph(g: EdgeColoredGraph, comments: Iterable[str] = ()) -> str:
    lines = [f"c {text}" for text in comments]
    lines.append(f"p ecg {g.n} {g.m}")
    lines.extend(f"e {u + 1} {v + 1} {c}" for u, v, c in g)
    return "\n".join(lines) + "\n"
