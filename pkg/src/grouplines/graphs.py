"""Small-graph engine: exact isomorphism, canonical forms, induced-subgraph
search, and exhaustive enumeration of isomorphism classes.

Everything here targets graphs with at most a dozen or so vertices.  Adjacency
is kept as one bitmask per vertex, which makes the backtracking searches cheap
and the value types hashable.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

# Cost guards for the exhaustive searches.
MAX_ENUM_VERTICES = 6
MAX_CONNECTED_ENUM_VERTICES = 7
MAX_ENUM_EDGES = 6


class EnumerationLimitError(ValueError):
    """An exhaustive search was asked to exceed its cost guard."""


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class SimpleGraph:
    """Undirected simple graph on vertices 0..n-1; adj[v] is a neighbour bitmask."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 0 or len(self.adj) != self.n:
            raise ValueError("adjacency length must equal vertex count")
        for v, mask in enumerate(self.adj):
            if mask >> self.n:
                raise ValueError(f"vertex {v} has a neighbour outside [0, {self.n})")
            if (mask >> v) & 1:
                raise ValueError(f"self-loop at vertex {v}")
        for v, mask in enumerate(self.adj):
            for u in _bits(mask):
                if not (self.adj[u] >> v) & 1:
                    raise ValueError(f"edge {v}-{u} is not symmetric")

    @staticmethod
    def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> SimpleGraph:
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return SimpleGraph(n, tuple(adj))

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> tuple[int, ...]:
        return tuple(m.bit_count() for m in self.adj)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(_bits(self.adj[v]))

    def edges(self) -> tuple[tuple[int, int], ...]:
        out = []
        for v in range(self.n):
            for u in _bits(self.adj[v] >> (v + 1)):
                out.append((v, v + 1 + u))
        return tuple(out)

    def edge_count(self) -> int:
        return sum(m.bit_count() for m in self.adj) // 2

    def induced(self, vertices: Sequence[int]) -> SimpleGraph:
        """Subgraph on the given vertices, relabelled 0..k-1 in the given order."""
        pos = {v: i for i, v in enumerate(vertices)}
        adj = [0] * len(vertices)
        for i, v in enumerate(vertices):
            for u in _bits(self.adj[v]):
                j = pos.get(u)
                if j is not None:
                    adj[i] |= 1 << j
        return SimpleGraph(len(vertices), tuple(adj))

    def relabeled(self, perm: Sequence[int]) -> SimpleGraph:
        """Image under the vertex map old -> perm[old]."""
        adj = [0] * self.n
        for v in range(self.n):
            for u in _bits(self.adj[v]):
                adj[perm[v]] |= 1 << perm[u]
        return SimpleGraph(self.n, tuple(adj))


# ---------------------------------------------------------------------------
# named constructions


def complete_graph(n: int) -> SimpleGraph:
    full = (1 << n) - 1
    return SimpleGraph(n, tuple(full ^ (1 << v) for v in range(n)))


def path_graph(n: int) -> SimpleGraph:
    return SimpleGraph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> SimpleGraph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return SimpleGraph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(leaves: int) -> SimpleGraph:
    return SimpleGraph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def make_named(name: str) -> SimpleGraph:
    """Build one of K<n>, P<n>, C<n>, K1,<k> from its conventional name."""
    m = re.fullmatch(r"K1,(\d+)", name)
    if m:
        return star_graph(int(m.group(1)))
    m = re.fullmatch(r"([KPC])(\d+)", name)
    if not m:
        raise ValueError(f"unknown graph name {name!r}")
    kind, n = m.group(1), int(m.group(2))
    if kind == "K":
        return complete_graph(n)
    if kind == "P":
        return path_graph(n)
    return cycle_graph(n)


# ---------------------------------------------------------------------------
# components


def connected_components(g: SimpleGraph) -> list[tuple[int, ...]]:
    """Vertex sets of the connected components, each sorted, ordered by minimum."""
    seen = 0
    comps = []
    for start in range(g.n):
        if (seen >> start) & 1:
            continue
        comp = 1 << start
        frontier = 1 << start
        while frontier:
            nxt = 0
            for v in _bits(frontier):
                nxt |= g.adj[v]
            frontier = nxt & ~comp
            comp |= nxt
        seen |= comp
        comps.append(tuple(_bits(comp)))
    return comps


def is_connected(g: SimpleGraph) -> bool:
    return len(connected_components(g)) <= 1


# ---------------------------------------------------------------------------
# canonical forms
#
# The key is the lexicographically minimal column-by-column reading of the
# upper adjacency triangle over all vertex orderings.  Column d holds the
# adjacency bits between the vertex placed at position d and positions
# 0..d-1, most significant bit first, so partial orderings give comparable
# prefixes and the search can prune on them.


@lru_cache(maxsize=None)
def canonical_key(g: SimpleGraph) -> tuple[int, ...]:
    """Total isomorphism invariant: equal keys iff isomorphic graphs."""
    n, adj = g.n, g.adj
    if n <= 1:
        return (n,)
    inf = 1 << n
    best = [inf] * n
    best[0] = 0

    def place(depth: int, avail: int, placed: list[int]) -> None:
        cands = []
        for v in _bits(avail):
            av = adj[v]
            col = 0
            for u in placed:
                col = (col << 1) | ((av >> u) & 1)
            cands.append((col, v))
        cands.sort()
        nxt = depth + 1
        for col, v in cands:
            if col > best[depth]:
                break
            if col < best[depth]:
                best[depth] = col
                for i in range(nxt, n):
                    best[i] = inf
            if nxt < n:
                place(nxt, avail ^ (1 << v), placed + [v])

    place(0, (1 << n) - 1, [])
    return (n, *best[1:])


def graph_from_key(key: tuple[int, ...]) -> SimpleGraph:
    n = key[0]
    adj = [0] * n
    for d in range(1, n):
        col = key[d]
        for i in range(d):
            if (col >> (d - 1 - i)) & 1:
                adj[d] |= 1 << i
                adj[i] |= 1 << d
    return SimpleGraph(n, tuple(adj))


def canonical_form(g: SimpleGraph) -> SimpleGraph:
    """The canonical representative of g's isomorphism class."""
    return graph_from_key(canonical_key(g))


# ---------------------------------------------------------------------------
# isomorphism
#
# Independent of the canonical form: iterated degree refinement to split the
# vertices into colour classes, then a backtracking search for an
# adjacency-preserving bijection restricted to matching colours.


def _refined_colors(g: SimpleGraph) -> tuple[int, ...]:
    colors = list(g.degrees())
    for _ in range(g.n):
        sigs = [
            (colors[v], tuple(sorted(colors[u] for u in _bits(g.adj[v]))))
            for v in range(g.n)
        ]
        relabel = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [relabel[s] for s in sigs]
        if len(set(new)) == len(set(colors)):
            return tuple(new)
        colors = new
    return tuple(colors)


def _match_order(g: SimpleGraph, colors: tuple[int, ...]) -> list[int]:
    class_size = {c: colors.count(c) for c in set(colors)}
    remaining = set(range(g.n))
    order: list[int] = []
    placed_mask = 0
    while remaining:
        def rank(v: int) -> tuple[int, int, int, int]:
            attached = (g.adj[v] & placed_mask).bit_count()
            return (-attached, class_size[colors[v]], -g.degree(v), v)

        v = min(remaining, key=rank)
        order.append(v)
        remaining.remove(v)
        placed_mask |= 1 << v
    return order


def isomorphism(a: SimpleGraph, b: SimpleGraph) -> tuple[int, ...] | None:
    """A vertex map a -> b preserving adjacency exactly, or None."""
    if a.n != b.n or a.edge_count() != b.edge_count():
        return None
    ca, cb = _refined_colors(a), _refined_colors(b)
    if sorted(ca) != sorted(cb):
        return None
    order = _match_order(a, ca)
    image = [-1] * a.n
    full = (1 << b.n) - 1

    def extend(idx: int, used: int) -> bool:
        if idx == len(order):
            return True
        v = order[idx]
        cand = full & ~used
        for w in order[:idx]:
            if a.has_edge(v, w):
                cand &= b.adj[image[w]]
            else:
                cand &= ~b.adj[image[w]]
        for u in _bits(cand):
            if cb[u] != ca[v]:
                continue
            image[v] = u
            if extend(idx + 1, used | (1 << u)):
                return True
        image[v] = -1
        return False

    if extend(0, 0):
        return tuple(image)
    return None


def is_isomorphic(a: SimpleGraph, b: SimpleGraph) -> bool:
    return isomorphism(a, b) is not None


# ---------------------------------------------------------------------------
# induced-subgraph search


def find_induced(host: SimpleGraph, pattern: SimpleGraph) -> tuple[int, ...] | None:
    """An injective map with pattern adjacency AND non-adjacency preserved.

    Backtracks over pattern vertices in descending-degree order (ties by
    index); host candidates are tried in ascending order, so the returned
    witness is deterministic.  None when no induced copy exists.
    """
    if pattern.n > host.n:
        return None
    order = sorted(range(pattern.n), key=lambda v: (-pattern.degree(v), v))
    image = [-1] * pattern.n
    full = (1 << host.n) - 1
    hdeg = host.degrees()

    def extend(idx: int, used: int) -> bool:
        if idx == len(order):
            return True
        p = order[idx]
        cand = full & ~used
        for q in order[:idx]:
            if pattern.has_edge(p, q):
                cand &= host.adj[image[q]]
            else:
                cand &= ~host.adj[image[q]]
        want = pattern.degree(p)
        for v in _bits(cand):
            if hdeg[v] < want:
                continue
            image[p] = v
            if extend(idx + 1, used | (1 << v)):
                return True
        image[p] = -1
        return False

    if extend(0, 0):
        return tuple(image)
    return None


def check_induced_embedding(
    host: SimpleGraph, pattern: SimpleGraph, mapping: Sequence[int]
) -> bool:
    """Re-verify that mapping is a valid induced embedding of pattern in host."""
    if len(mapping) != pattern.n or len(set(mapping)) != pattern.n:
        return False
    if any(not 0 <= v < host.n for v in mapping):
        return False
    for i in range(pattern.n):
        for j in range(i + 1, pattern.n):
            if pattern.has_edge(i, j) != host.has_edge(mapping[i], mapping[j]):
                return False
    return True


# ---------------------------------------------------------------------------
# exhaustive enumeration (one canonical representative per class)


def _extended(base: SimpleGraph, mask: int) -> SimpleGraph:
    n = base.n
    adj = [base.adj[v] | (((mask >> v) & 1) << n) for v in range(n)]
    adj.append(mask)
    return SimpleGraph(n + 1, tuple(adj))


@lru_cache(maxsize=None)
def _class_keys(n: int, connected_only: bool) -> tuple[tuple[int, ...], ...]:
    if n == 1:
        return ((1,),)
    keys = set()
    lo = 1 if connected_only else 0
    for base_key in _class_keys(n - 1, connected_only):
        base = graph_from_key(base_key)
        for mask in range(lo, 1 << (n - 1)):
            keys.add(canonical_key(_extended(base, mask)))
    return tuple(sorted(keys))


def enumerate_graphs(n: int) -> tuple[SimpleGraph, ...]:
    """All isomorphism classes of graphs on n vertices, canonical and sorted."""
    if not 1 <= n <= MAX_ENUM_VERTICES:
        raise EnumerationLimitError(
            f"graph enumeration is limited to 1..{MAX_ENUM_VERTICES} vertices, got {n}"
        )
    return tuple(graph_from_key(k) for k in _class_keys(n, False))


def enumerate_connected_graphs(n: int) -> tuple[SimpleGraph, ...]:
    """All connected isomorphism classes on n vertices (guarded at 7)."""
    if not 1 <= n <= MAX_CONNECTED_ENUM_VERTICES:
        raise EnumerationLimitError(
            f"connected enumeration is limited to 1..{MAX_CONNECTED_ENUM_VERTICES}"
            f" vertices, got {n}"
        )
    return tuple(graph_from_key(k) for k in _class_keys(n, True))


@lru_cache(maxsize=None)
def enumerate_connected_by_edges(k: int) -> tuple[SimpleGraph, ...]:
    """All connected isomorphism classes with exactly k edges (k <= 6).

    Grown edge by edge: a connected graph with k edges arises from one with
    k-1 edges either by joining two non-adjacent vertices or by attaching a
    pendant vertex (delete a cycle edge or a leaf to see completeness).
    """
    if not 1 <= k <= MAX_ENUM_EDGES:
        raise EnumerationLimitError(
            f"edge-count enumeration is limited to 1..{MAX_ENUM_EDGES} edges, got {k}"
        )
    if k == 1:
        return (complete_graph(2),)
    keys = set()
    for base in enumerate_connected_by_edges(k - 1):
        for u in range(base.n):
            for v in range(u + 1, base.n):
                if not base.has_edge(u, v):
                    adj = list(base.adj)
                    adj[u] |= 1 << v
                    adj[v] |= 1 << u
                    keys.add(canonical_key(SimpleGraph(base.n, tuple(adj))))
        for v in range(base.n):
            keys.add(canonical_key(_extended(base, 1 << v)))
    return tuple(graph_from_key(key) for key in sorted(keys))


# ---------------------------------------------------------------------------
# graph text format: `n <count>` then `e <i> <j>` lines


def format_graph_text(g: SimpleGraph) -> str:
    lines = [f"n {g.n}"]
    lines.extend(f"e {u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def parse_graph_text(text: str) -> SimpleGraph:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines or not lines[0].startswith("n "):
        raise ValueError("graph text must start with 'n <count>'")
    try:
        n = int(lines[0].split()[1])
    except (IndexError, ValueError) as exc:
        raise ValueError(f"bad vertex count line {lines[0]!r}") from exc
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 3 or parts[0] != "e":
            raise ValueError(f"bad edge line {ln!r}")
        u, v = int(parts[1]), int(parts[2])
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge {u}-{v} out of range for {n} vertices")
        edges.append((u, v))
    return SimpleGraph.from_edges(n, edges)
