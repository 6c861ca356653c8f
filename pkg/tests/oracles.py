"""Naive reference implementations the solvers are checked against.

Everything here enumerates the full search space and shares no code with the
package beyond the graph accessors.
"""

from __future__ import annotations

import random
from itertools import product

from majpart.graph import BLUE, RED, EdgeColoredGraph


def majority_ok(g: EdgeColoredGraph, labels) -> bool:
    for v in range(g.n):
        for c in (RED, BLUE):
            nbrs = g.neighbors(v, c)
            inside = sum(1 for u in nbrs if labels[u] == labels[v])
            if inside > len(nbrs) - inside:
                return False
    return True


def brute_majority(g: EdgeColoredGraph, k: int) -> bool:
    if g.n == 0:
        return True
    # vertex 0 may be pinned to part 1 since parts are interchangeable
    return any(majority_ok(g, (1,) + rest) for rest in product(range(1, k + 1), repeat=g.n - 1))


def bicolor_ok(g: EdgeColoredGraph, labels) -> bool:
    return all(
        any(labels[u] != labels[v] for u in g.neighbors(v, c)) for v in range(g.n) for c in (RED, BLUE)
    )


def brute_bicolor(g: EdgeColoredGraph) -> bool:
    return g.n > 0 and any(bicolor_ok(g, (1,) + rest) for rest in product((1, 2), repeat=g.n - 1))


def _components(n, edges):
    adj = {v: set() for v in range(n)}
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    seen, comps = set(), 0
    for s in range(n):
        if s in seen:
            continue
        comps += 1
        stack = [s]
        seen.add(s)
        while stack:
            x = stack.pop()
            for y in adj[x] - seen:
                seen.add(y)
                stack.append(y)
    return comps


def connected_cut_ok(g: EdgeColoredGraph, labels) -> bool:
    if len(set(labels)) < 2:
        return False
    for c in (RED, BLUE):
        crossing = [(u, v) for u, v, col in g.edges if col == c and labels[u] != labels[v]]
        if _components(g.n, crossing) != 1:
            return False
    return True


def brute_connected_cut(g: EdgeColoredGraph) -> bool:
    return g.n >= 2 and any(connected_cut_ok(g, (1,) + rest) for rest in product((1, 2), repeat=g.n - 1))


def _value(lit, assignment):
    return assignment[abs(lit) - 1] == (lit > 0)


def brute_sat(num_vars: int, clauses) -> bool:
    return any(
        all(any(_value(l, a) for l in c) for c in clauses) for a in product((False, True), repeat=num_vars)
    )


def dpll_sat(clauses) -> bool:
    """Plain DPLL with unit propagation on lists of literal tuples."""
    clauses = [frozenset(c) for c in clauses]

    def simplify(cls, lit):
        out = []
        for c in cls:
            if lit in c:
                continue
            reduced = c - {-lit}
            if not reduced:
                return None
            out.append(reduced)
        return out

    def solve(cls):
        while True:
            if cls is None:
                return False
            if not cls:
                return True
            unit = next((c for c in cls if len(c) == 1), None)
            if unit is None:
                break
            cls = simplify(cls, next(iter(unit)))
        lit = next(iter(cls[0]))
        return solve(simplify(cls, lit)) or solve(simplify(cls, -lit))

    return solve(clauses)


def brute_nae(num_vars: int, clauses) -> bool:
    return any(
        all(len({_value(l, a) for l in c}) == 2 for c in clauses) for a in product((False, True), repeat=num_vars)
    )


def brute_3colorable(n: int, edges) -> bool:
    return any(all(len({col[i] for i in e}) > 1 for e in edges) for col in product(range(3), repeat=n))


def random_graph(rng: random.Random, n: int, density: float) -> EdgeColoredGraph:
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            for c in (RED, BLUE):
                if rng.random() < density:
                    edges.append((u, v, c))
    return EdgeColoredGraph.from_edges(n, edges)


def random_formula(rng: random.Random, n: int, m: int):
    clauses = []
    for _ in range(m):
        vs = rng.sample(range(1, n + 1), 3)
        clauses.append(tuple(v if rng.random() < 0.5 else -v for v in vs))
    return clauses


def random_colored_graph(rng: random.Random, n: int, density: float) -> EdgeColoredGraph:
    """Random simple graph whose edges each get one uniformly random color."""
    edges = [
        (u, v, rng.choice((RED, BLUE)))
        for u in range(n)
        for v in range(u + 1, n)
        if rng.random() < density
    ]
    return EdgeColoredGraph.from_edges(n, edges)
