"""Finite groups as validated Cayley tables.

Element 0 is always the identity.  Construction validates the full set of
group axioms (identity row/column, Latin square, associativity, inverses),
so a `FiniteGroup` that exists is a group.  All values are immutable and the
operations are pure, so instances can be shared freely across threads.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum


class GroupTableError(ValueError):
    """A Cayley table failed parsing or validation; the message names the offending entries."""


def _validate_table(table: tuple[tuple[int, ...], ...]) -> None:
    n = len(table)
    if n == 0:
        raise GroupTableError("a group needs at least the identity element")
    for i, row in enumerate(table):
        if len(row) != n:
            raise GroupTableError(f"row {i} has {len(row)} entries, expected {n}")
        for j, x in enumerate(row):
            if not 0 <= x < n:
                raise GroupTableError(f"entry ({i},{j}) = {x} is outside [0,{n})")
    for i, row in enumerate(table):
        if len(set(row)) != n:
            raise GroupTableError(f"row {i} is not a permutation (Latin square violated)")
    for j in range(n):
        if len({table[i][j] for i in range(n)}) != n:
            raise GroupTableError(f"column {j} is not a permutation (Latin square violated)")
    for j in range(n):
        if table[0][j] != j:
            raise GroupTableError(f"element 0 is not the identity: 0*{j} = {table[0][j]}")
        if table[j][0] != j:
            raise GroupTableError(f"element 0 is not the identity: {j}*0 = {table[j][0]}")
    for i in range(n):
        ti = table[i]
        for j in range(n):
            lhs = table[ti[j]]
            tj = table[j]
            rhs = tuple(ti[x] for x in tj)
            if lhs != rhs:
                k = next(k for k in range(n) if lhs[k] != rhs[k])
                raise GroupTableError(
                    f"associativity fails at ({i},{j},{k}):"
                    f" ({i}*{j})*{k} = {lhs[k]} but {i}*({j}*{k}) = {rhs[k]}"
                )
    for i in range(n):
        if 0 not in table[i]:
            raise GroupTableError(f"element {i} has no inverse")


@dataclass(frozen=True)
class Subgroup:
    """A subgroup given by its sorted member indices.

    `generator` is set when the subgroup was produced as the cyclic closure
    of a single element.
    """

    members: tuple[int, ...]
    generator: int | None = None

    def __post_init__(self) -> None:
        if tuple(sorted(set(self.members))) != self.members:
            raise ValueError("members must be sorted and duplicate-free")
        if not self.members or self.members[0] != 0:
            raise ValueError("a subgroup must contain the identity (element 0)")

    @property
    def order(self) -> int:
        return len(self.members)


@dataclass(frozen=True)
class FiniteGroup:
    """A finite group: n x n Cayley table over element indices, with labels."""

    name: str
    table: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...]

    def __post_init__(self) -> None:
        _validate_table(self.table)
        if len(self.labels) != len(self.table):
            raise GroupTableError(
                f"got {len(self.labels)} labels for {len(self.table)} elements"
            )

    def validate(self) -> None:
        """Re-run the construction-time invariant checks."""
        _validate_table(self.table)

    @property
    def order(self) -> int:
        return len(self.table)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self.table[a].index(0)

    def power(self, g: int, k: int) -> int:
        if k < 0:
            return self.power(self.inv(g), -k)
        x = 0
        for _ in range(k):
            x = self.table[x][g]
        return x

    def element_order(self, g: int) -> int:
        x = g
        k = 1
        while x != 0:
            x = self.table[x][g]
            k += 1
        return k

    def order_histogram(self) -> dict[int, int]:
        """Multiset of element orders; an isomorphism invariant."""
        hist: dict[int, int] = {}
        for g in range(self.order):
            k = self.element_order(g)
            hist[k] = hist.get(k, 0) + 1
        return dict(sorted(hist.items()))

    def cyclic_subgroup(self, g: int) -> Subgroup:
        members = [0]
        x = g
        while x != 0:
            members.append(x)
            x = self.table[x][g]
        return Subgroup(tuple(sorted(members)), generator=g)

    def cyclic_subgroups(self) -> tuple[Subgroup, ...]:
        """All distinct cyclic subgroups, sorted by (order, members).

        Deduplicated by member set; the stored generator is the smallest
        element generating that member set.
        """
        seen: dict[tuple[int, ...], int] = {}
        for g in range(self.order):
            members = self.cyclic_subgroup(g).members
            seen.setdefault(members, g)
        subs = [Subgroup(members, generator=g) for members, g in seen.items()]
        subs.sort(key=lambda s: (s.order, s.members))
        return tuple(subs)

    def is_abelian(self) -> bool:
        n = self.order
        return all(
            self.table[i][j] == self.table[j][i]
            for i in range(n)
            for j in range(i + 1, n)
        )

    def is_cyclic(self) -> bool:
        return any(self.element_order(g) == self.order for g in range(self.order))

    def check_subgroup(self, sub: Subgroup) -> bool:
        """Closure of the member set under products and inverses."""
        members = set(sub.members)
        if 0 not in members:
            return False
        for a in members:
            if self.inv(a) not in members:
                return False
            for b in members:
                if self.table[a][b] not in members:
                    return False
        return True


# ---------------------------------------------------------------------------
# constructors


def make_cyclic(n: int) -> FiniteGroup:
    """The cyclic group of order n, written additively."""
    if n < 1:
        raise ValueError(f"cyclic group order must be >= 1, got {n}")
    table = tuple(tuple((i + j) % n for j in range(n)) for i in range(n))
    return FiniteGroup(f"Z{n}", table, tuple(str(i) for i in range(n)))


def direct_product(g: FiniteGroup, h: FiniteGroup) -> FiniteGroup:
    """Componentwise product on pairs, encoded as a*|h| + b."""
    m = h.order

    def enc(a: int, b: int) -> int:
        return a * m + b

    n = g.order * m
    table = []
    for x in range(n):
        a1, b1 = divmod(x, m)
        row = []
        for y in range(n):
            a2, b2 = divmod(y, m)
            row.append(enc(g.table[a1][a2], h.table[b1][b2]))
        table.append(tuple(row))
    labels = tuple(
        f"({g.labels[a]},{h.labels[b]})" for a in range(g.order) for b in range(m)
    )
    return FiniteGroup(f"{g.name}x{h.name}", tuple(table), labels)


def make_dihedral(n: int) -> FiniteGroup:
    """Dihedral group of order 2n: rotations r^i and reflections r^i s."""
    if n < 1:
        raise ValueError(f"dihedral parameter must be >= 1, got {n}")

    def mul(x: int, y: int) -> int:
        i, j = x % n, x // n
        k, l = y % n, y // n
        rot = (i + k) % n if j == 0 else (i - k) % n
        return rot + n * ((j + l) % 2)

    table = tuple(tuple(mul(x, y) for y in range(2 * n)) for x in range(2 * n))
    labels = ["e"] + [f"r{i}" if i > 1 else "r" for i in range(1, n)]
    labels += ["s"] + [f"r{i}s" if i > 1 else "rs" for i in range(1, n)]
    return FiniteGroup(f"D{n}", table, tuple(labels))


def make_dicyclic(n: int) -> FiniteGroup:
    """Dicyclic group of order 4n: a of order 2n, b^2 = a^n, b a b^-1 = a^-1."""
    if n < 2:
        raise ValueError(f"dicyclic parameter must be >= 2, got {n}")
    m = 2 * n

    def mul(x: int, y: int) -> int:
        i, j = x % m, x // m
        k, l = y % m, y // m
        if j == 0:
            return (i + k) % m + m * l
        if l == 0:
            return (i - k) % m + m
        return (i - k + n) % m

    table = tuple(tuple(mul(x, y) for y in range(4 * n)) for x in range(4 * n))
    labels = ["e"] + [f"a{i}" if i > 1 else "a" for i in range(1, m)]
    labels += ["b"] + [f"a{i}b" if i > 1 else "ab" for i in range(1, m)]
    return FiniteGroup(f"Dic{n}", table, tuple(labels))


def _cycle_label(perm: tuple[int, ...]) -> str:
    seen = set()
    parts = []
    for start in range(len(perm)):
        if start in seen or perm[start] == start:
            continue
        cyc = [start]
        seen.add(start)
        x = perm[start]
        while x != start:
            cyc.append(x)
            seen.add(x)
            x = perm[x]
        parts.append("(" + " ".join(str(v) for v in cyc) + ")")
    return "".join(parts) if parts else "e"


def _perm_group(name: str, perms: list[tuple[int, ...]]) -> FiniteGroup:
    index = {p: i for i, p in enumerate(perms)}
    table = tuple(
        tuple(index[tuple(p[q[x]] for x in range(len(p)))] for q in perms)
        for p in perms
    )
    return FiniteGroup(name, table, tuple(_cycle_label(p) for p in perms))


def _parity(perm: tuple[int, ...]) -> int:
    inv = sum(
        1
        for i in range(len(perm))
        for j in range(i + 1, len(perm))
        if perm[i] > perm[j]
    )
    return inv % 2


def make_symmetric(n: int) -> FiniteGroup:
    """Symmetric group on {0..n-1}; permutations in lexicographic order."""
    if not 1 <= n <= 5:
        raise ValueError(f"symmetric-group parameter must be in 1..5, got {n}")
    return _perm_group(f"S{n}", list(itertools.permutations(range(n))))


def make_alternating(n: int) -> FiniteGroup:
    """Alternating group on {0..n-1}; even permutations in lexicographic order."""
    if not 3 <= n <= 5:
        raise ValueError(f"alternating-group parameter must be in 3..5, got {n}")
    perms = [p for p in itertools.permutations(range(n)) if _parity(p) == 0]
    return _perm_group(f"A{n}", perms)


# ---------------------------------------------------------------------------
# Cayley-table file format: `order <n>` header, then n whitespace-separated
# rows; lines starting with '#' are comments.


def from_cayley_table(text: str, name: str = "table") -> FiniteGroup:
    lines = [
        ln.strip()
        for ln in text.splitlines()
        if ln.strip() and not ln.lstrip().startswith("#")
    ]
    if not lines:
        raise GroupTableError("empty table file")
    head = lines[0].split()
    if len(head) != 2 or head[0] != "order":
        raise GroupTableError(f"expected 'order <n>' header, got {lines[0]!r}")
    try:
        n = int(head[1])
    except ValueError as exc:
        raise GroupTableError(f"bad order value {head[1]!r}") from exc
    if n < 1:
        raise GroupTableError(f"order must be >= 1, got {n}")
    if len(lines) - 1 != n:
        raise GroupTableError(f"expected {n} table rows, got {len(lines) - 1}")
    table = []
    for i, ln in enumerate(lines[1:]):
        parts = ln.split()
        if len(parts) != n:
            raise GroupTableError(f"row {i} has {len(parts)} entries, expected {n}")
        try:
            row = tuple(int(p) for p in parts)
        except ValueError as exc:
            raise GroupTableError(f"row {i} contains a non-integer entry") from exc
        table.append(row)
    return FiniteGroup(name, tuple(table), tuple(str(i) for i in range(n)))


def to_cayley_table(g: FiniteGroup) -> str:
    lines = [f"order {g.order}"]
    lines.extend(" ".join(str(x) for x in row) for row in g.table)
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# order arithmetic


class OrderClass(Enum):
    TRIVIAL = "trivial"
    PRIME_POWER = "prime-power"
    TWO_PRIMES_PQ = "pq"
    TWO_PRIMES_OTHER = "two-primes-other"
    THREE_OR_MORE_PRIMES = "three-plus-primes"


@dataclass(frozen=True)
class Factorization:
    """Prime factorization as (prime, exponent) pairs with primes increasing."""

    n: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        prod = 1
        prev = 1
        for p, e in self.factors:
            if p <= prev or e < 1 or not _is_prime(p):
                raise ValueError(f"bad factor ({p},{e}) in factorization of {self.n}")
            prev = p
            prod *= p**e
        if prod != self.n:
            raise ValueError(f"factors multiply to {prod}, not {self.n}")


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def factorize(n: int) -> Factorization:
    """Trial-division factorization; fine for the tiny orders used here."""
    if n < 1:
        raise ValueError(f"cannot factorize {n}")
    factors = []
    rest = n
    d = 2
    while d * d <= rest:
        if rest % d == 0:
            e = 0
            while rest % d == 0:
                rest //= d
                e += 1
            factors.append((d, e))
        d += 1
    if rest > 1:
        factors.append((rest, 1))
    return Factorization(n, tuple(factors))


def classify_order(f: Factorization) -> OrderClass:
    if not f.factors:
        return OrderClass.TRIVIAL
    if len(f.factors) == 1:
        return OrderClass.PRIME_POWER
    if len(f.factors) == 2:
        (p, a), (q, b) = f.factors
        if a == 1 and b == 1:
            return OrderClass.TWO_PRIMES_PQ
        return OrderClass.TWO_PRIMES_OTHER
    return OrderClass.THREE_OR_MORE_PRIMES


# ---------------------------------------------------------------------------
# brute-force isomorphism for small groups


def _generating_sequence(g: FiniteGroup) -> list[int]:
    gens: list[int] = []
    closure = {0}
    for x in range(g.order):
        if x in closure:
            continue
        gens.append(x)
        frontier = list(closure)
        closure.add(x)
        queue = [x]
        while queue:
            y = queue.pop()
            for z in list(closure):
                for w in (g.table[y][z], g.table[z][y]):
                    if w not in closure:
                        closure.add(w)
                        queue.append(w)
        if len(closure) == g.order:
            break
    return gens


def _extend_hom(
    a: FiniteGroup, b: FiniteGroup, gens: list[int], images: list[int]
) -> dict[int, int] | None:
    mapping = {0: 0}
    queue = [0]
    while queue:
        x = queue.pop()
        for gen, img in zip(gens, images):
            for xm, ym in (
                (a.table[x][gen], b.table[mapping[x]][img]),
                (a.table[gen][x], b.table[img][mapping[x]]),
            ):
                known = mapping.get(xm)
                if known is None:
                    mapping[xm] = ym
                    queue.append(xm)
                elif known != ym:
                    return None
    if len(mapping) != a.order or len(set(mapping.values())) != a.order:
        return None
    for x in range(a.order):
        for y in range(a.order):
            if mapping[a.table[x][y]] != b.table[mapping[x]][mapping[y]]:
                return None
    return mapping


def is_isomorphic_small_group(a: FiniteGroup, b: FiniteGroup) -> bool:
    """Exact isomorphism test by generator-image search (small orders only)."""
    if a.order != b.order:
        return False
    if a.order_histogram() != b.order_histogram():
        return False
    gens = _generating_sequence(a)
    if not gens:
        return True
    by_order: dict[int, list[int]] = {}
    for x in range(b.order):
        by_order.setdefault(b.element_order(x), []).append(x)
    pools = [by_order.get(a.element_order(g), []) for g in gens]
    for images in itertools.product(*pools):
        if len(set(images)) != len(images):
            continue
        if _extend_hom(a, b, gens, list(images)) is not None:
            return True
    return False
