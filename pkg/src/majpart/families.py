"""Fixed graph families: small counterexamples, the 4-vertex gadget, the 147-vertex graph,
and the 2-partition-connectivity family."""

from __future__ import annotations

import math
from itertools import combinations

from .graph import BLUE, RED, EdgeColoredGraph, GraphError, color_degree, edge_connectivity


class AnchorCollision(GraphError):
    pass


class ConstructionCheckFailed(AssertionError):
    pass


def triangle_nonmono() -> EdgeColoredGraph:
    """A 3-cycle with two red edges and one blue edge."""
    return EdgeColoredGraph.from_edges(3, [(0, 1, RED), (1, 2, RED), (0, 2, BLUE)])


# x1..x5 are vertices 0..4
K5_BLUE = [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]
K5_RED = [(0, 2), (4, 2), (1, 3), (0, 3), (4, 1)]


def figure2_k5() -> EdgeColoredGraph:
    """K5 split into a blue 5-cycle x1x2x3x4x5 and the complementary red 5-cycle."""
    return EdgeColoredGraph.from_edges(
        5, [(u, v, BLUE) for u, v in K5_BLUE] + [(u, v, RED) for u, v in K5_RED]
    )


# internal gadget edges on local ids x1..x4 = 0..3
GADGET_RED = [(0, 1), (3, 0), (3, 1), (3, 2)]
GADGET_BLUE = [(2, 0), (2, 1)]


def gadget_edges(anchors, xs):
    """The 18 edges of the gadget with internal vertices ``xs`` attached to three ``anchors``."""
    edges = [(xs[a], xs[b], RED) for a, b in GADGET_RED]
    edges += [(xs[a], xs[b], BLUE) for a, b in GADGET_BLUE]
    for a in anchors:
        edges += [(xs[0], a, RED), (xs[1], a, RED), (xs[2], a, BLUE), (xs[3], a, BLUE)]
    return edges


def gadget_append(g: EdgeColoredGraph, ai: int, aj: int, ak: int) -> EdgeColoredGraph:
    """Append a gadget on three distinct existing anchors; new vertices are ``n..n+3`` (x1..x4)."""
    anchors = (ai, aj, ak)
    if len(set(anchors)) != 3:
        raise AnchorCollision(f"anchors {anchors} are not distinct")
    for a in anchors:
        g._check(a)
    xs = range(g.n, g.n + 4)
    return g.add_vertices(4).with_edges(gadget_edges(anchors, xs))


def counterexample_147() -> EdgeColoredGraph:
    """Seven anchors ``0..6`` with a gadget on every anchor triple, in lexicographic triple order.

    The gadget for the ``t``-th triple occupies vertices ``7 + 4t .. 10 + 4t``.
    """
    edges = []
    n = 7
    for triple in combinations(range(7), 3):
        edges += gadget_edges(triple, range(n, n + 4))
        n += 4
    return EdgeColoredGraph.from_edges(n, edges)


COUNTEREXAMPLE_TRIPLES = list(combinations(range(7), 3))


def no_good_trees(k: int) -> EdgeColoredGraph:
    """Graph whose color classes are k-edge-connected yet no 2-partition is connected in both colors.

    Sides ``A = 0..s-1`` and ``B = s..2s-1`` with ``s = max(k+1, 3)``.  Blue is the
    bipartite circulant ``A_i B_{i+t}``, ``t < d``, with ``d = max(k, 2)``: a 1-regular
    bipartite graph on more than two vertices is disconnected, so ``k = 1`` uses the
    2-regular base.  Red is a perfect matching ``A_i B_{i+r}`` avoiding blue plus a
    clique on each side.  Regularity and edge-connectivity are verified here.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    s = max(k + 1, 3)
    d = max(k, 2)
    edges = [(i, s + (i + t) % s, BLUE) for i in range(s) for t in range(d)]
    blue_offsets = set(range(d))
    start = math.ceil(k / 2) + 1
    offset = next(o % s for o in range(start, start + s) if o % s not in blue_offsets)
    edges += [(i, s + (i + offset) % s, RED) for i in range(s)]
    for side in (range(s), range(s, 2 * s)):
        edges += [(u, v, RED) for u, v in combinations(side, 2)]
    g = EdgeColoredGraph.from_edges(2 * s, edges)
    _check_no_good_trees(g, k, d)
    return g


def _check_no_good_trees(g: EdgeColoredGraph, k: int, d: int) -> None:
    if any(color_degree(g, v, BLUE) != d for v in g.vertices()):
        raise ConstructionCheckFailed(f"blue subgraph is not {d}-regular")
    for c in (RED, BLUE):
        lam = edge_connectivity(g, c)
        if lam < k:
            raise ConstructionCheckFailed(f"color {c} subgraph has edge-connectivity {lam} < {k}")
    for u, v, c in g.edges:
        if c == RED and g.has_edge(u, v, BLUE):
            raise ConstructionCheckFailed(f"pair {u}-{v} carries both colors")


def no_good_trees_sides(k: int) -> tuple[range, range]:
    s = max(k + 1, 3)
    return range(s), range(s, 2 * s)
