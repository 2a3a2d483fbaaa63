"""The cyclic subgroup graph: covering relation of the cyclic-subgroup poset.

Vertices are the cyclic subgroups of a group; two are joined exactly when one
contains the other with no further cyclic subgroup strictly between.  For a
cyclic group of order n this is the divisor lattice of n, which doubles as an
independent oracle.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import SimpleGraph, connected_components
from .groups import FiniteGroup


@dataclass(frozen=True)
class VertexLabel:
    order: int
    members: tuple[int, ...]
    name: str


@dataclass(frozen=True)
class LabeledGraph:
    """A SimpleGraph whose vertices carry subgroup labels."""

    graph: SimpleGraph
    labels: tuple[VertexLabel, ...]

    def __post_init__(self) -> None:
        if len(self.labels) != self.graph.n:
            raise ValueError("label count must equal vertex count")
        if len({lab.members for lab in self.labels}) != self.graph.n:
            raise ValueError("vertex member sets must be distinct")


def build_gamma(group: FiniteGroup) -> LabeledGraph:
    """The cyclic subgroup graph of `group`.

    Vertices are sorted by (subgroup order, member tuple) so output is
    deterministic; the edge test scans all subgroup pairs for strict
    containment with no intermediate cyclic subgroup.
    """
    subs = group.cyclic_subgroups()
    sets = [frozenset(s.members) for s in subs]
    k = len(subs)
    edges = []
    for i in range(k):
        for j in range(i + 1, k):
            small, large = sets[i], sets[j]
            if not small < large:
                continue
            covered = not any(
                small < mid < large for m, mid in enumerate(sets) if m != i and m != j
            )
            if covered:
                edges.append((i, j))
    labels = []
    for s in subs:
        if s.order == 1:
            name = "{e}"
        else:
            name = f"<{group.labels[s.generator]}> (order {s.order})"
        labels.append(VertexLabel(s.order, s.members, name))
    return LabeledGraph(SimpleGraph.from_edges(k, edges), tuple(labels))


def divisor_hasse(n: int) -> SimpleGraph:
    """Covering graph of the divisors of n: d1 -- d2 iff d2/d1 is prime.

    Plain arithmetic, independent of any group machinery; for cyclic groups
    of order n this must be isomorphic to the cyclic subgroup graph.
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    divisors = [d for d in range(1, n + 1) if n % d == 0]

    def prime(m: int) -> bool:
        return m >= 2 and all(m % d for d in range(2, int(m**0.5) + 1))

    edges = []
    for i, d1 in enumerate(divisors):
        for j in range(i + 1, len(divisors)):
            d2 = divisors[j]
            if d2 % d1 == 0 and prime(d2 // d1):
                edges.append((i, j))
    return SimpleGraph.from_edges(len(divisors), edges)


@dataclass(frozen=True)
class GammaStats:
    vertices: int
    edges: int
    degrees: tuple[int, ...]
    is_connected: bool
    is_complete: bool


def gamma_stats(lg: LabeledGraph) -> GammaStats:
    g = lg.graph
    return GammaStats(
        vertices=g.n,
        edges=g.edge_count(),
        degrees=g.degrees(),
        is_connected=len(connected_components(g)) <= 1,
        is_complete=g.edge_count() == g.n * (g.n - 1) // 2,
    )


# ---------------------------------------------------------------------------
# serialization


def to_edge_list(lg: LabeledGraph) -> str:
    """`vertices <k>`, then `v <index> <order> <name>` lines, then `e <i> <j>`."""
    lines = [f"vertices {lg.graph.n}"]
    for i, lab in enumerate(lg.labels):
        lines.append(f"v {i} {lab.order} {lab.name}")
    for u, v in lg.graph.edges():
        lines.append(f"e {u} {v}")
    return "\n".join(lines) + "\n"


def to_dot(lg: LabeledGraph) -> str:
    lines = ["graph gamma {"]
    for i, lab in enumerate(lg.labels):
        escaped = lab.name.replace('"', '\\"')
        lines.append(f'  {i} [label="{escaped}"];')
    for u, v in lg.graph.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
