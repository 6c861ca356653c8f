"""Hardness reductions to partition problems on 2-edge-colored graphs, with witness maps.

Four reductions are provided:

``sat-bicolor``
    3-SAT to "2-partition with a crossing red and a crossing blue edge at every vertex".
``sat-majority2``
    3-SAT to majority 2-partition.
``h3c-majority3``
    3-colorability of 3-uniform hypergraphs to majority 3-partition.
``nae-connected``
    NAE-3-SAT to "2-partition whose crossing edges are spanning connected in both colors".

Each returns a :class:`ReductionArtifact` carrying the graph and a role name per
vertex.  :func:`lift_witness` maps a source solution to a verified partition;
:func:`project_witness` maps a verified partition back to a source solution.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Optional, Sequence, Union

from .families import gadget_edges
from .graph import BLUE, RED, EdgeColoredGraph
from .instances import (
    Assignment,
    CnfFormula,
    Hypergraph3,
    MalformedFormula,
    NaeNormalization,
    literal_value,
    normalize_nae,
)
from .partition import KPartition, verify_bicolor_cut, verify_connected_cut, verify_majority

SAT_BICOLOR = "sat-bicolor"
SAT_MAJORITY2 = "sat-majority2"
H3C_MAJORITY3 = "h3c-majority3"
NAE_CONNECTED = "nae-connected"
REDUCTIONS = (SAT_BICOLOR, SAT_MAJORITY2, H3C_MAJORITY3, NAE_CONNECTED)


class WitnessInvalid(ValueError):
    pass


class PartitionInvalid(ValueError):
    pass


@dataclass
class ReductionArtifact:
    graph: EdgeColoredGraph
    roles: tuple
    reduction: str
    source: Union[CnfFormula, Hypergraph3]
    meta: dict = field(default_factory=dict)
    normalization: Optional[NaeNormalization] = None

    def __post_init__(self):
        if len(self.roles) != self.graph.n:
            raise ValueError("role map must name every vertex")
        self._index = {r: v for v, r in enumerate(self.roles)}
        if len(self._index) != len(self.roles):
            raise ValueError("role names must be unique")

    def vertex(self, role: str) -> int:
        return self._index[role]

    def has_role(self, role: str) -> bool:
        return role in self._index

    def roles_json(self) -> str:
        """Sidecar describing every vertex's role (1-indexed, matching the ECG file)."""
        doc = {
            "reduction": self.reduction,
            "n": self.graph.n,
            "roles": {str(v + 1): r for v, r in enumerate(self.roles)},
            "meta": self.meta,
        }
        return json.dumps(doc, indent=1, sort_keys=True) + "\n"


class _Builder:
    def __init__(self):
        self.roles: list[str] = []
        self.index: dict[str, int] = {}
        self.edges: list[tuple[int, int, int]] = []

    def add(self, role: str) -> int:
        v = len(self.roles)
        self.roles.append(role)
        self.index[role] = v
        return v

    def edge(self, a: str, b: str, color: int) -> None:
        self.edges.append((self.index[a], self.index[b], color))

    def graph(self) -> EdgeColoredGraph:
        return EdgeColoredGraph.from_edges(len(self.roles), self.edges)


def lit_role(lit: int) -> str:
    return f"v_{lit}" if lit > 0 else f"~v_{-lit}"


def _sat_base(f: CnfFormula, b: _Builder, blue_h1_literals: bool) -> list[int]:
    """Common vertex/edge core of the two 3-SAT reductions; returns the occurring variables."""
    f.check_distinct_variables()
    variables = f.occurring_variables()
    for j in range(1, f.m + 1):
        b.add(f"w_{j}")
        b.add(f"w'_{j}")
    for i in variables:
        b.add(lit_role(i))
        b.add(lit_role(-i))
    for t in range(1, 5):
        b.add(f"z_{t}")
    for t in range(1, 5):
        b.add(f"h_{t}")
    for j in range(1, f.m + 1):
        b.edge(f"w'_{j}", f"w_{j}", RED)
        b.edge("z_1", f"w'_{j}", BLUE)
    for i in variables:
        b.edge(lit_role(i), lit_role(-i), RED)
        if blue_h1_literals:
            b.edge("h_1", lit_role(i), BLUE)
            b.edge("h_1", lit_role(-i), BLUE)
    b.edge("z_2", "z_3", RED)
    b.edge("z_4", "z_1", RED)
    b.edge("h_1", "h_2", RED)
    b.edge("h_3", "h_4", RED)
    b.edge("z_1", "z_2", BLUE)
    b.edge("z_3", "z_4", BLUE)
    b.edge("h_2", "h_3", BLUE)
    b.edge("h_4", "h_1", BLUE)
    for j, clause in enumerate(f.clauses, 1):
        for lit in clause:
            b.edge(f"w_{j}", lit_role(lit), BLUE)
    return variables


def reduce_sat_bicolor(f: CnfFormula) -> ReductionArtifact:
    """Graph with a bicolor-cut 2-partition iff ``f`` is satisfiable.

    Only variables occurring in some clause get literal vertices, so the graph
    has ``2m + 2n' + 8`` vertices with ``n'`` occurring variables; the red
    edges form a perfect matching.
    """
    b = _Builder()
    variables = _sat_base(f, b, blue_h1_literals=True)
    return ReductionArtifact(b.graph(), tuple(b.roles), SAT_BICOLOR, f, {"variables": variables})


def literal_multiplicity(f: CnfFormula, i: int) -> int:
    """Max of the occurrence counts of ``x_i`` and its negation."""
    return max(f.occurrences(i), f.occurrences(-i))


def reduce_sat_majority2(f: CnfFormula) -> ReductionArtifact:
    """Graph with a majority 2-partition iff ``f`` is satisfiable.

    Starts from the bicolor-cut graph without the blue ``h_1``-literal edges,
    adds ``w''_j`` (blue to ``w_j``, red to ``z_1``) and ``q_i`` alternating
    4-cycles hanging off each literal vertex by a blue edge.  Red edges form a
    perfect matching except at ``z_1``, which also carries every red ``w''_j z_1``.
    """
    b = _Builder()
    variables = _sat_base(f, b, blue_h1_literals=False)
    for j in range(1, f.m + 1):
        b.add(f"w''_{j}")
        b.edge(f"w''_{j}", f"w_{j}", BLUE)
        b.edge(f"w''_{j}", "z_1", RED)
    q = {}
    for i in variables:
        q[i] = literal_multiplicity(f, i)
        for lit in (i, -i):
            for r in range(1, q[i] + 1):
                copy = [b.add(f"H[{lit_role(lit)},{r}]:h_{t}") for t in range(1, 5)]
                h1, h2, h3, h4 = (b.roles[x] for x in copy)
                b.edge(h1, h2, RED)
                b.edge(h3, h4, RED)
                b.edge(h2, h3, BLUE)
                b.edge(h4, h1, BLUE)
                b.edge(lit_role(lit), h1, BLUE)
    meta = {"variables": variables, "q": {str(i): q[i] for i in variables}}
    return ReductionArtifact(b.graph(), tuple(b.roles), SAT_MAJORITY2, f, meta)


def reduce_h3c_majority3(h: Hypergraph3) -> ReductionArtifact:
    """Anchors ``a_1..a_n`` plus one gadget per hyperedge; majority 3-partition iff ``h`` is 3-colorable."""
    if h.n == 0:
        raise ValueError("hypergraph must have at least one vertex")
    roles = [f"a_{i + 1}" for i in range(h.n)]
    edges = []
    for e in h.edges:
        name = ",".join(str(x + 1) for x in e)
        xs = range(len(roles), len(roles) + 4)
        roles += [f"H[{name}]:x_{t}" for t in range(1, 5)]
        edges += gadget_edges(e, xs)
    g = EdgeColoredGraph.from_edges(len(roles), edges)
    return ReductionArtifact(g, tuple(roles), H3C_MAJORITY3, h)


# Hamilton decomposition of K_{4,4} on s_1..s_4, t_1..t_4
K44_BLUE_CYCLE = ["s_1", "t_1", "s_2", "t_2", "s_3", "t_3", "s_4", "t_4"]
K44_RED_CYCLE = ["s_1", "t_2", "s_4", "t_1", "s_3", "t_4", "s_2", "t_3"]


def reduce_nae_connected(f: CnfFormula) -> ReductionArtifact:
    """Graph with a 2-partition connected in both colors iff ``f`` is NAE-satisfiable.

    ``f`` is first normalized (complementary clauses dropped, one-sided
    variables padded); the graph has ``3m + 8`` vertices for the normalized
    clause count ``m``.
    """
    norm = normalize_nae(f)
    nf = norm.formula
    b = _Builder()
    for i in range(1, nf.m + 1):
        for j in (1, 2, 3):
            b.add(f"x_{i}^{j}")
    for t in range(1, 5):
        b.add(f"s_{t}")
    for t in range(1, 5):
        b.add(f"t_{t}")
    for i in range(1, nf.m + 1):
        b.edge(f"x_{i}^1", f"x_{i}^2", RED)
        b.edge(f"x_{i}^2", f"x_{i}^3", RED)
        b.edge(f"x_{i}^3", f"x_{i}^1", RED)
    for cycle, color in ((K44_BLUE_CYCLE, BLUE), (K44_RED_CYCLE, RED)):
        for a, c in zip(cycle, cycle[1:] + cycle[:1]):
            b.edge(a, c, color)
    positions = [(i, j, lit) for i, clause in enumerate(nf.clauses, 1) for j, lit in enumerate(clause, 1)]
    for x, (i, j, lit) in enumerate(positions):
        for a, p, other in positions[x + 1:]:
            if other == -lit:
                b.edge(f"x_{i}^{j}", f"x_{a}^{p}", BLUE)
    for i in range(1, nf.m + 1):
        b.edge("s_1", f"x_{i}^1", RED)
        b.edge("t_1", f"x_{i}^1", RED)
    e5 = {}
    for v in nf.occurring_variables():
        # first (clause, position) holding the positive literal
        i, j = next((i, j) for i, j, lit in positions if lit == v)
        e5[str(v)] = [i, j]
        b.edge("s_2", f"x_{i}^{j}", BLUE)
        b.edge("t_2", f"x_{i}^{j}", BLUE)
    meta = {
        "e5": e5,
        "normalized_clauses": [list(c) for c in nf.clauses],
        "padding": [list(t) for t in norm.padding],
        "dropped": [list(c) for c in norm.dropped],
    }
    return ReductionArtifact(b.graph(), tuple(b.roles), NAE_CONNECTED, f, meta, norm)


def _normalization(r: ReductionArtifact) -> NaeNormalization:
    return r.normalization if r.normalization is not None else normalize_nae(r.source)


def _two_partition(n: int, side2) -> KPartition:
    labels = [1] * n
    for v in side2:
        labels[v] = 2
    return KPartition(2, tuple(labels))


def _complete_assignment(f: CnfFormula, w: Assignment) -> dict[int, bool]:
    missing = [i for i in f.occurring_variables() if i not in w]
    if missing:
        raise WitnessInvalid(f"assignment leaves variable {missing[0]} unset")
    return {i: bool(w.get(i, False)) for i in range(1, f.num_vars + 1)}


def lift_witness(r: ReductionArtifact, w) -> KPartition:
    """Map a source solution to a partition of ``r.graph`` satisfying the reduction's condition.

    ``w`` is an assignment ``{variable: bool}`` for the SAT reductions and a
    sequence of colors in ``1..3`` (one per hypergraph vertex) for ``h3c-majority3``.
    """
    if r.reduction == SAT_BICOLOR:
        return _lift_sat_bicolor(r, w)
    if r.reduction == SAT_MAJORITY2:
        return _lift_sat_majority2(r, w)
    if r.reduction == H3C_MAJORITY3:
        return _lift_h3c(r, w)
    if r.reduction == NAE_CONNECTED:
        return _lift_nae(r, w)
    raise ValueError(f"unknown reduction {r.reduction!r}")


def _lift_sat_bicolor(r, w) -> KPartition:
    f: CnfFormula = r.source
    phi = _complete_assignment(f, w)
    if not f.satisfies(phi):
        raise WitnessInvalid("assignment does not satisfy the formula")
    # a true literal must occur in a clause to see a w_j across the cut;
    # flipping a pure variable to its occurring polarity keeps f satisfied
    for i in f.occurring_variables():
        if f.occurrences(i) == 0:
            phi[i] = False
        elif f.occurrences(-i) == 0:
            phi[i] = True
    side2 = [r.vertex(f"w'_{j}") for j in range(1, f.m + 1)]
    side2 += [r.vertex(x) for x in ("z_2", "z_4", "h_1", "h_3")]
    side2 += [r.vertex(lit_role(i if phi[i] else -i)) for i in f.occurring_variables()]
    p = _two_partition(r.graph.n, side2)
    report = verify_bicolor_cut(r.graph, p)
    if not report.ok:
        raise AssertionError(f"lifted partition fails: {report.describe()[:3]}")
    return p


def _lift_sat_majority2(r, w) -> KPartition:
    f: CnfFormula = r.source
    phi = _complete_assignment(f, w)
    if not f.satisfies(phi):
        raise WitnessInvalid("assignment does not satisfy the formula")
    side2 = [r.vertex(f"w'_{j}") for j in range(1, f.m + 1)]
    side2 += [r.vertex(f"w''_{j}") for j in range(1, f.m + 1)]
    side2 += [r.vertex(x) for x in ("z_2", "z_4", "h_1", "h_3")]
    for i in f.occurring_variables():
        for lit in (i, -i):
            true_lit = literal_value(lit, phi)
            if true_lit:
                side2.append(r.vertex(lit_role(lit)))
            # each copy's h_1, h_3 go opposite its literal, h_2, h_4 beside it
            in_v2 = ("h_2", "h_4") if true_lit else ("h_1", "h_3")
            for rr in range(1, literal_multiplicity(f, i) + 1):
                side2 += [r.vertex(f"H[{lit_role(lit)},{rr}]:{h}") for h in in_v2]
    p = _two_partition(r.graph.n, side2)
    report = verify_majority(r.graph, p)
    if not report.ok:
        raise AssertionError(f"lifted partition fails: {report.describe()[:3]}")
    return p


def _lift_h3c(r, colors: Sequence[int]) -> KPartition:
    from .refutation import gadget_extension_table

    h: Hypergraph3 = r.source
    colors = [int(c) for c in colors]
    if len(colors) != h.n or any(c not in (1, 2, 3) for c in colors):
        raise WitnessInvalid("coloring must give every hypergraph vertex a color in 1..3")
    if not h.is_proper_coloring(colors):
        raise WitnessInvalid("coloring leaves a monochromatic hyperedge")
    table = gadget_extension_table()
    labels = list(colors) + [0] * (r.graph.n - h.n)
    for e in h.edges:
        name = ",".join(str(x + 1) for x in e)
        ext = table[tuple(colors[x] for x in e)]
        for t, lab in enumerate(ext, 1):
            labels[r.vertex(f"H[{name}]:x_{t}")] = lab
    p = KPartition(3, tuple(labels))
    report = verify_majority(r.graph, p)
    if not report.ok:
        raise AssertionError(f"lifted partition fails: {report.describe()[:3]}")
    return p


def _lift_nae(r, w) -> KPartition:
    f: CnfFormula = r.source
    phi = _complete_assignment(f, w)
    if not f.nae_satisfies(phi):
        raise WitnessInvalid("assignment does not NAE-satisfy the formula")
    norm = _normalization(r)
    full = norm.extend(phi)
    side2 = [r.vertex(f"t_{t}") for t in range(1, 5)]
    for i, clause in enumerate(norm.formula.clauses, 1):
        for j, lit in enumerate(clause, 1):
            if not literal_value(lit, full):
                side2.append(r.vertex(f"x_{i}^{j}"))
    p = _two_partition(r.graph.n, side2)
    if verify_connected_cut(r.graph, p) != (True, True):
        raise AssertionError("lifted partition is not connected in both colors")
    return p


def project_witness(r: ReductionArtifact, p: KPartition):
    """Map a verified partition of ``r.graph`` back to a source solution."""
    if r.reduction in (SAT_BICOLOR, SAT_MAJORITY2):
        return _project_sat(r, p)
    if r.reduction == H3C_MAJORITY3:
        return _project_h3c(r, p)
    if r.reduction == NAE_CONNECTED:
        return _project_nae(r, p)
    raise ValueError(f"unknown reduction {r.reduction!r}")


def _project_sat(r, p: KPartition) -> dict[int, bool]:
    f: CnfFormula = r.source
    if p.k != 2:
        raise PartitionInvalid("expected a 2-partition")
    verifier = verify_bicolor_cut if r.reduction == SAT_BICOLOR else verify_majority
    if not verifier(r.graph, p).ok:
        raise PartitionInvalid(f"partition fails the {r.reduction} condition")
    # every w_j shares z_1's side
    w_side = p.labels[r.vertex("z_1")]
    phi = {i: False for i in range(1, f.num_vars + 1)}
    for i in f.occurring_variables():
        phi[i] = p.labels[r.vertex(lit_role(i))] != w_side
    if not f.satisfies(phi):
        raise AssertionError("projected assignment does not satisfy the formula")
    return phi


def _project_h3c(r, p: KPartition) -> list[int]:
    h: Hypergraph3 = r.source
    if p.k != 3 or not verify_majority(r.graph, p).ok:
        raise PartitionInvalid("partition is not a majority 3-partition")
    colors = [p.labels[r.vertex(f"a_{i + 1}")] for i in range(h.n)]
    if not h.is_proper_coloring(colors):
        raise AssertionError("projected coloring has a monochromatic hyperedge")
    return colors


def _project_nae(r, p: KPartition) -> dict[int, bool]:
    f: CnfFormula = r.source
    if p.k != 2 or verify_connected_cut(r.graph, p) != (True, True):
        raise PartitionInvalid("partition is not connected in both colors")
    nf = _normalization(r).formula
    x_side = p.labels[r.vertex("s_1")]
    phi = {i: False for i in range(1, f.num_vars + 1)}
    for i, clause in enumerate(nf.clauses, 1):
        for j, lit in enumerate(clause, 1):
            if abs(lit) <= f.num_vars:
                on_x = p.labels[r.vertex(f"x_{i}^{j}")] == x_side
                phi[abs(lit)] = on_x if lit > 0 else not on_x
    if not f.nae_satisfies(phi):
        raise AssertionError("projected assignment does not NAE-satisfy the formula")
    return phi


def reduce(kind: str, source) -> ReductionArtifact:
    return {
        SAT_BICOLOR: reduce_sat_bicolor,
        SAT_MAJORITY2: reduce_sat_majority2,
        H3C_MAJORITY3: reduce_h3c_majority3,
        NAE_CONNECTED: reduce_nae_connected,
    }[kind](source)


__all__ = [
    "ReductionArtifact",
    "WitnessInvalid",
    "PartitionInvalid",
    "MalformedFormula",
    "reduce",
    "reduce_sat_bicolor",
    "reduce_sat_majority2",
    "reduce_h3c_majority3",
    "reduce_nae_connected",
    "lift_witness",
    "project_witness",
    "REDUCTIONS",
]
