"""Built-in group catalog and the textual group-spec grammar.

Spec grammar: `Z<n>` | `D<n>` (order 2n) | `Dic<n>` (order 4n) | `S<n>` |
`A<n>` | `<spec>x<spec>` (direct product, left-associative) | `file:<path>`
(Cayley-table file).  A spec that starts with `file:` is taken as a single
path; inside a product, `file:` tokens must not contain the letter x.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import reduce
from pathlib import Path

from .groups import (
    FiniteGroup,
    OrderClass,
    classify_order,
    direct_product,
    factorize,
    from_cayley_table,
    make_alternating,
    make_cyclic,
    make_dicyclic,
    make_dihedral,
    make_symmetric,
)

_ATOM = re.compile(r"(Dic|Z|D|S|A)(\d+)")

_CONSTRUCTORS = {
    "Z": make_cyclic,
    "D": make_dihedral,
    "Dic": make_dicyclic,
    "S": make_symmetric,
    "A": make_alternating,
}


def parse_group_spec(spec: str) -> FiniteGroup:
    """Build the group a spec string describes; ValueError on bad input."""
    spec = spec.strip()
    if not spec:
        raise ValueError("empty group spec")
    if spec.startswith("file:"):
        return _load_table(spec[len("file:") :])
    parts = spec.split("x")
    groups = []
    for token in parts:
        if token.startswith("file:"):
            groups.append(_load_table(token[len("file:") :]))
            continue
        m = _ATOM.fullmatch(token)
        if not m:
            raise ValueError(f"bad group spec token {token!r} in {spec!r}")
        groups.append(_CONSTRUCTORS[m.group(1)](int(m.group(2))))
    return reduce(direct_product, groups)


def _load_table(path: str) -> FiniteGroup:
    if not path:
        raise ValueError("empty path in file: spec")
    text = Path(path).read_text(encoding="utf-8")
    return from_cayley_table(text, name=Path(path).stem)


@dataclass(frozen=True)
class GroupRecord:
    """A catalog entry: the group, the spec string it came from, its order class."""

    group: FiniteGroup
    source: str
    order_class: OrderClass


def _record(source: str) -> GroupRecord:
    group = parse_group_spec(source)
    return GroupRecord(group, source, classify_order(factorize(group.order)))


# All 28 groups of order <= 15, one spec per isomorphism class
# (class counts by order: 1,1,1,2,1,2,1,5,2,2,1,5,1,2,1).
SMALL_GROUP_SPECS: tuple[str, ...] = (
    "Z1",
    "Z2",
    "Z3",
    "Z4",
    "Z2xZ2",
    "Z5",
    "Z6",
    "S3",
    "Z7",
    "Z8",
    "Z4xZ2",
    "Z2xZ2xZ2",
    "D4",
    "Dic2",
    "Z9",
    "Z3xZ3",
    "Z10",
    "D5",
    "Z11",
    "Z12",
    "Z6xZ2",
    "D6",
    "A4",
    "Dic3",
    "Z13",
    "Z14",
    "D7",
    "Z15",
)


def catalog_specs(max_order: int = 60) -> tuple[str, ...]:
    """Built-in catalog specs with order <= max_order, deterministic order.

    The complete classification below order 16, then parametric families:
    cyclic to 60, two-factor products to 48, dihedral to D24, dicyclic to
    Dic12, plus S4 and A5.
    """
    entries: list[tuple[int, str]] = []
    for source in SMALL_GROUP_SPECS:
        entries.append((_spec_order(source), source))
    for n in range(16, 61):
        entries.append((n, f"Z{n}"))
    for m in range(2, 7):
        for k in range(m, 49):
            if 15 < m * k <= 48:
                entries.append((m * k, f"Z{m}xZ{k}"))
    for n in range(8, 25):
        entries.append((2 * n, f"D{n}"))
    for n in range(4, 13):
        entries.append((4 * n, f"Dic{n}"))
    entries.append((24, "S4"))
    entries.append((60, "A5"))
    entries.sort()
    return tuple(source for order, source in entries if order <= max_order)


def _spec_order(source: str) -> int:
    order = 1
    for token in source.split("x"):
        m = _ATOM.fullmatch(token)
        kind, n = m.group(1), int(m.group(2))
        if kind == "Z":
            order *= n
        elif kind == "D":
            order *= 2 * n
        elif kind == "Dic":
            order *= 4 * n
        elif kind == "S":
            order *= _factorial(n)
        else:
            order *= _factorial(n) // 2
    return order


def _factorial(n: int) -> int:
    out = 1
    for i in range(2, n + 1):
        out *= i
    return out


def build_catalog(
    max_order: int = 60, table_paths: tuple[str, ...] = ()
) -> tuple[GroupRecord, ...]:
    """Built-in records up to max_order, then externally loaded tables.

    Loaded tables are kept regardless of max_order; the cap only filters the
    built-in families.
    """
    records = [_record(source) for source in catalog_specs(max_order)]
    for path in table_paths:
        records.append(_record(f"file:{path}"))
    return tuple(records)
