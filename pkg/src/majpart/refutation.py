"""Machine-checkable proof that the 147-vertex graph has no majority 3-partition.

The argument is finite.  Any 3-labeling of the seven anchors makes some anchor
triple monochromatic (pigeonhole), and the gadget on a monochromatic triple
cannot be labeled without breaking the majority condition at one of its four
internal vertices.  Internal vertices only see their own gadget and its
anchors, so that local failure is global.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product
from typing import Optional

from .families import COUNTEREXAMPLE_TRIPLES, counterexample_147, gadget_append
from .graph import COLORS, EdgeColoredGraph
from .partition import KPartition, verify_majority

LABEL_TRIPLES = list(product((1, 2, 3), repeat=3))
ANCHOR_LABELINGS = list(product((1, 2, 3), repeat=7))


class StructureMismatch(ValueError):
    pass


class CertificateInvalid(ValueError):
    pass


@lru_cache(maxsize=1)
def local_gadget() -> EdgeColoredGraph:
    """Anchors 0, 1, 2 and gadget vertices x1..x4 = 3..6."""
    return gadget_append(EdgeColoredGraph(3), 0, 1, 2)


def _anchors_balanced(g: EdgeColoredGraph, labels) -> bool:
    return verify_majority(g, KPartition(3, labels), vertices=(0, 1, 2)).ok


@lru_cache(maxsize=1)
def _table() -> tuple:
    g = local_gadget()
    rows = []
    for anchors in LABEL_TRIPLES:
        first_ok = None
        chosen = None
        for inner in product((1, 2, 3), repeat=4):
            labels = anchors + inner
            if not verify_majority(g, KPartition(3, labels), vertices=(3, 4, 5, 6)).ok:
                continue
            if first_ok is None:
                first_ok = inner
            # prefer extensions that also keep each anchor balanced within the gadget,
            # so extensions can be combined across gadgets sharing anchors
            if _anchors_balanced(g, labels):
                chosen = inner
                break
        rows.append((anchors, chosen if chosen is not None else first_ok))
    return tuple(rows)


def gadget_extension_table() -> dict[tuple, Optional[tuple]]:
    """Map each anchor label triple to a valid labeling of x1..x4, or None if none exists."""
    return dict(_table())


@dataclass
class RefutationCertificate:
    gadget_table: dict
    anchor_transcript: list  # per anchor labeling, the 1-based monochromatic triple it cites

    def to_json(self) -> str:
        doc = {
            "claim": "no majority 3-partition",
            "anchor_labeling_order": "lexicographic over (1,2,3)^7",
            "gadget_table": {
                ",".join(map(str, k)): (list(v) if v is not None else None)
                for k, v in sorted(self.gadget_table.items())
            },
            "anchor_transcript": [list(t) for t in self.anchor_transcript],
        }
        return json.dumps(doc, indent=1) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "RefutationCertificate":
        doc = json.loads(text)
        table = {
            tuple(int(x) for x in k.split(",")): (tuple(v) if v is not None else None)
            for k, v in doc["gadget_table"].items()
        }
        return cls(table, [tuple(t) for t in doc["anchor_transcript"]])


def refute_counterexample(g: EdgeColoredGraph) -> RefutationCertificate:
    if g != counterexample_147():
        raise StructureMismatch("graph is not the 147-vertex gadget construction")
    transcript = []
    for labels in ANCHOR_LABELINGS:
        triple = next(t for t in combinations(range(7), 3) if len({labels[i] for i in t}) == 1)
        transcript.append(tuple(i + 1 for i in triple))
    return RefutationCertificate(gadget_extension_table(), transcript)


def _gadget_locals(g: EdgeColoredGraph):
    """Yield (anchor triple, gadget vertices) for every gadget, read off the graph itself."""
    anchors = set(range(7))
    for v in range(7, g.n, 4):
        xs = tuple(range(v, v + 4))
        nbrs = set()
        for x in xs:
            for c in COLORS:
                nbrs.update(g.neighbors(x, c))
        outside = nbrs - set(xs)
        if not outside <= anchors or len(outside) != 3:
            raise CertificateInvalid(f"gadget at vertices {v + 1}..{v + 4} is not local to 3 anchors")
        yield tuple(sorted(outside)), xs


def _local_instance(g: EdgeColoredGraph, anchors, xs) -> EdgeColoredGraph:
    keep = list(anchors) + list(xs)
    pos = {v: i for i, v in enumerate(keep)}
    edges = [(pos[u], pos[v], c) for u, v, c in g.edges if u in pos and v in pos]
    return EdgeColoredGraph(len(keep), frozenset((min(a, b), max(a, b), c) for a, b, c in edges))


def check_certificate(cert: RefutationCertificate, g: EdgeColoredGraph) -> list[str]:
    """Re-check a certificate against ``g`` using only local majority verification.

    Returns a list of failures; an empty list means the certificate proves that
    ``g`` has no majority 3-partition.
    """
    problems: list[str] = []
    if g.n != 147 or g.m != 630:
        problems.append(f"expected 147 vertices and 630 edges, got {g.n} and {g.m}")
        return problems
    gadgets = {}
    try:
        for anchors, xs in _gadget_locals(g):
            gadgets[anchors] = xs
    except CertificateInvalid as exc:
        return [str(exc)]
    if sorted(gadgets) != COUNTEREXAMPLE_TRIPLES:
        problems.append("gadgets do not cover every anchor triple exactly once")
        return problems
    # x-vertices see only their gadget and its anchors, so local counts are global counts
    for anchors, xs in gadgets.items():
        for x in xs:
            full = sum(len(g.neighbors(x, c)) for c in COLORS)
            if full != 6:
                problems.append(f"vertex {x + 1} has degree {full}, expected 6")

    if len(cert.anchor_transcript) != len(ANCHOR_LABELINGS):
        problems.append(f"transcript has {len(cert.anchor_transcript)} entries, expected 2187")
        return problems
    for labels, cited in zip(ANCHOR_LABELINGS, cert.anchor_transcript):
        triple = tuple(i - 1 for i in cited)
        if triple not in gadgets:
            problems.append(f"labeling {labels} cites {cited}, which carries no gadget")
        elif len({labels[i] for i in triple}) != 1:
            problems.append(f"labeling {labels} cites non-monochromatic triple {cited}")

    if set(cert.gadget_table) != set(LABEL_TRIPLES):
        problems.append("gadget table does not have exactly the 27 label triples")
        return problems
    for anchors, xs in gadgets.items():
        local = _local_instance(g, anchors, xs)
        for lab in (1, 2, 3):
            for inner in product((1, 2, 3), repeat=4):
                p = KPartition(3, (lab,) * 3 + inner)
                if verify_majority(local, p, vertices=(3, 4, 5, 6)).ok:
                    problems.append(f"gadget on {anchors} extends monochromatic label {lab} by {inner}")
    local = _local_instance(g, *next(iter(gadgets.items())))
    for triple, ext in cert.gadget_table.items():
        mono = len(set(triple)) == 1
        if mono and ext is not None:
            problems.append(f"table claims an extension {ext} for monochromatic {triple}")
        if not mono:
            if ext is None:
                problems.append(f"table has no extension for {triple}")
            elif not verify_majority(local, KPartition(3, tuple(triple) + tuple(ext)), vertices=(3, 4, 5, 6)).ok:
                problems.append(f"extension {ext} for {triple} fails the majority condition")
    return problems
