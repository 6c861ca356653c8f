"""Source instances for the reductions: 3-CNF formulas and 3-uniform hypergraphs."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Sequence


class MalformedFormula(ValueError):
    pass


class MalformedHypergraph(ValueError):
    pass


class InstanceSyntaxError(ValueError):
    pass


Assignment = Mapping[int, bool]


def literal_value(lit: int, assignment: Assignment) -> bool:
    value = assignment[abs(lit)]
    return value if lit > 0 else not value


@dataclass(frozen=True)
class CnfFormula:
    """3-CNF formula in DIMACS convention: variables ``1..num_vars``, literals are signed ints."""

    num_vars: int
    clauses: tuple = ()

    def __post_init__(self):
        clauses = tuple(tuple(int(x) for x in c) for c in self.clauses)
        object.__setattr__(self, "clauses", clauses)
        for c in clauses:
            if len(c) != 3:
                raise MalformedFormula(f"clause {c} does not have exactly 3 literals")
            for lit in c:
                if lit == 0 or abs(lit) > self.num_vars:
                    raise MalformedFormula(f"literal {lit} outside 1..{self.num_vars}")

    @property
    def m(self) -> int:
        return len(self.clauses)

    def occurrences(self, lit: int) -> int:
        return sum(c.count(lit) for c in self.clauses)

    def occurring_variables(self) -> list[int]:
        return sorted({abs(lit) for c in self.clauses for lit in c})

    def satisfies(self, assignment: Assignment) -> bool:
        return all(any(literal_value(l, assignment) for l in c) for c in self.clauses)

    def nae_satisfies(self, assignment: Assignment) -> bool:
        for c in self.clauses:
            values = {literal_value(l, assignment) for l in c}
            if len(values) != 2:
                return False
        return True

    def check_distinct_variables(self) -> None:
        for j, c in enumerate(self.clauses, 1):
            if len({abs(l) for l in c}) != 3:
                raise MalformedFormula(f"clause {j} {c} repeats a variable")


@dataclass(frozen=True)
class NaeNormalization:
    """A NAE formula rewritten so every variable occurs in both polarities.

    ``padding`` lists ``(v, a, b)`` for each pair of clauses ``(v, a, b)`` and
    ``(-v, -a, -b)`` added with fresh variables ``a`` and ``b``.
    """

    formula: CnfFormula
    original: CnfFormula
    dropped: tuple = ()
    padding: tuple = ()

    def extend(self, assignment: Assignment) -> dict[int, bool]:
        """Extend an assignment of the original variables to the padded formula."""
        full = {v: bool(assignment.get(v, False)) for v in range(1, self.original.num_vars + 1)}
        for lit, a, b in self.padding:
            # (lit, a, b) and its negation are both NAE when a = b = not lit
            val = not literal_value(lit, full)
            full[a] = val if a > 0 else not val
            full[b] = val if b > 0 else not val
        return full


def normalize_nae(f: CnfFormula) -> NaeNormalization:
    """Drop clauses containing a variable and its negation; pad one-sided variables.

    Clauses repeating the same literal are rejected.  Variables that occur in
    no clause are left alone (they constrain nothing).
    """
    kept, dropped = [], []
    for c in f.clauses:
        if len(set(c)) != 3:
            if any(-l in c for l in c):
                dropped.append(c)
                continue
            raise MalformedFormula(f"clause {c} repeats a literal")
        if any(-l in c for l in c):
            dropped.append(c)
        else:
            kept.append(c)
    num_vars = f.num_vars
    padding = []
    base = CnfFormula(num_vars, tuple(kept))
    for v in base.occurring_variables():
        pos, neg = base.occurrences(v), base.occurrences(-v)
        if pos and neg:
            continue
        lit = v if pos else -v
        a, b = num_vars + 1, num_vars + 2
        num_vars += 2
        kept.append((-lit, a, b))
        kept.append((lit, -a, -b))
        padding.append((-lit, a, b))
    return NaeNormalization(CnfFormula(num_vars, tuple(kept)), f, tuple(dropped), tuple(padding))


def parse_dimacs(text: str) -> CnfFormula:
    """Parse DIMACS cnf (``p cnf n m``, clauses terminated by 0)."""
    header = None
    literals: list[int] = []
    clauses: list[tuple[int, ...]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c") or line.startswith("%"):
            continue
        if line.startswith("p"):
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise InstanceSyntaxError(f"line {lineno}: expected 'p cnf <n> <m>'")
            header = (int(parts[2]), int(parts[3]))
            continue
        try:
            nums = [int(x) for x in line.split()]
        except ValueError:
            raise InstanceSyntaxError(f"line {lineno}: non-integer literal") from None
        for x in nums:
            if x == 0:
                clauses.append(tuple(literals))
                literals = []
            else:
                literals.append(x)
    if literals:
        clauses.append(tuple(literals))
    if header is None:
        raise InstanceSyntaxError("missing 'p cnf' header")
    n, m = header
    if m != len(clauses):
        raise InstanceSyntaxError(f"header declares {m} clauses, found {len(clauses)}")
    return CnfFormula(n, tuple(clauses))


def serialize_dimacs(f: CnfFormula) -> str:
    lines = [f"p cnf {f.num_vars} {f.m}"]
    lines.extend(" ".join(map(str, c)) + " 0" for c in f.clauses)
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class Hypergraph3:
    """3-uniform hypergraph on vertices ``0..n-1``; edges are strictly increasing triples."""

    n: int
    edges: tuple = field(default=())

    def __post_init__(self):
        edges = tuple(tuple(int(x) for x in e) for e in self.edges)
        object.__setattr__(self, "edges", edges)
        for e in edges:
            if len(e) != 3 or not (0 <= e[0] < e[1] < e[2] < self.n):
                raise MalformedHypergraph(f"edge {e} is not an increasing triple in 0..{self.n - 1}")
        if len(set(edges)) != len(edges):
            raise MalformedHypergraph("repeated hyperedge")

    @property
    def m(self) -> int:
        return len(self.edges)

    def is_proper_coloring(self, colors: Sequence[int]) -> bool:
        return len(colors) == self.n and all(len({colors[i] for i in e}) > 1 for e in self.edges)


def parse_hypergraph(text: str) -> Hypergraph3:
    """Parse ``p h3 <n> <m>`` followed by ``m`` lines of three 1-indexed vertex ids."""
    header = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if len(parts) != 4 or parts[1] != "h3":
                raise InstanceSyntaxError(f"line {lineno}: expected 'p h3 <n> <m>'")
            header = (int(parts[2]), int(parts[3]))
            continue
        if len(parts) != 3:
            raise InstanceSyntaxError(f"line {lineno}: expected three vertex ids")
        try:
            edges.append(tuple(sorted(int(x) - 1 for x in parts)))
        except ValueError:
            raise InstanceSyntaxError(f"line {lineno}: non-integer vertex id") from None
    if header is None:
        raise InstanceSyntaxError("missing 'p h3' header")
    if header[1] != len(edges):
        raise InstanceSyntaxError(f"header declares {header[1]} edges, found {len(edges)}")
    return Hypergraph3(header[0], tuple(edges))


def serialize_hypergraph(h: Hypergraph3) -> str:
    lines = [f"p h3 {h.n} {h.m}"]
    lines.extend(" ".join(str(x + 1) for x in e) for e in h.edges)
    return "\n".join(lines) + "\n"


SAT_EXAMPLE = CnfFormula(3, ((1, 2, 3), (-1, 2, -3), (1, -2, -3), (-1, -2, 3)))
NAE_EXAMPLE = CnfFormula(4, ((1, 2, 3), (-1, -2, 4), (1, -3, -4)))
