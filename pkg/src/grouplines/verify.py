"""Exhaustive computational checks of the classification over a group catalog.

The classification says: the cyclic subgroup graph of a finite group is a
line graph exactly when the group is cyclic of prime-power order or cyclic
of order pq.  `verify_main_theorem` confronts that equivalence with every
catalog group; `verify_case_theorems` re-derives the per-case witnesses the
arguments are built from (claws with prescribed subgroup orders); and
`check_completeness_claim` tests that the graph is complete exactly for the
trivial group and groups of prime order.
"""

from __future__ import annotations

from dataclasses import dataclass

from .catalog import GroupRecord
from .graphs import check_induced_embedding
from .groups import FiniteGroup, OrderClass, classify_order, factorize
from .lattice import LabeledGraph, build_gamma, gamma_stats
from .linegraph import Verdict, derive_forbidden_set, is_line_graph_by_beineke

_LINE_GRAPH_CLASSES = frozenset(
    {OrderClass.TRIVIAL, OrderClass.PRIME_POWER, OrderClass.TWO_PRIMES_PQ}
)


def predict(group: FiniteGroup) -> bool:
    """Classification right-hand side: cyclic of prime-power or pq order."""
    cls = classify_order(factorize(group.order))
    return group.is_cyclic() and cls in _LINE_GRAPH_CLASSES


def _decide(record: GroupRecord) -> tuple[LabeledGraph, Verdict]:
    lg = build_gamma(record.group)
    return lg, is_line_graph_by_beineke(lg.graph, derive_forbidden_set())


def _witness_summary(lg: LabeledGraph, verdict: Verdict) -> str:
    if verdict.is_line_graph:
        return "-"
    orders = sorted(lg.labels[v].order for v in verdict.embedding)
    return f"{verdict.pattern_id} orders={','.join(str(o) for o in orders)}"


# ---------------------------------------------------------------------------
# main theorem


@dataclass(frozen=True)
class TheoremRow:
    name: str
    order: int
    order_class: OrderClass
    is_cyclic: bool
    predicted: bool
    actual: bool
    witness: str


@dataclass(frozen=True)
class TheoremReport:
    rows: tuple[TheoremRow, ...]

    @property
    def passed(self) -> bool:
        return all(r.predicted == r.actual for r in self.rows)

    def summary(self) -> str:
        word = "HOLDS" if self.passed else "FAILS"
        return f"THEOREM {word} over {len(self.rows)} groups"

    def to_text(self) -> str:
        lines = []
        for r in self.rows:
            lines.append(
                "\t".join(
                    (
                        r.name,
                        str(r.order),
                        r.order_class.value,
                        _b(r.is_cyclic),
                        _b(r.predicted),
                        _b(r.actual),
                        r.witness,
                    )
                )
            )
        lines.append(self.summary())
        return "\n".join(lines) + "\n"


def _b(flag: bool) -> str:
    return "true" if flag else "false"


def verify_main_theorem(catalog: tuple[GroupRecord, ...]) -> TheoremReport:
    """One row per group: predicted (right-hand side) vs actual (recognizer)."""
    if not catalog:
        raise ValueError("catalog must be non-empty")
    rows = []
    for record in catalog:
        lg, verdict = _decide(record)
        rows.append(
            TheoremRow(
                name=record.source,
                order=record.group.order,
                order_class=record.order_class,
                is_cyclic=record.group.is_cyclic(),
                predicted=predict(record.group),
                actual=verdict.is_line_graph,
                witness=_witness_summary(lg, verdict),
            )
        )
    return TheoremReport(tuple(rows))


# ---------------------------------------------------------------------------
# per-case checks with prescribed witnesses


@dataclass(frozen=True)
class CaseCheck:
    case: str
    group: str
    expect_line_graph: bool
    center_order: int | None
    leaf_orders: tuple[int, ...] | None
    ok: bool

    def witness_text(self) -> str:
        if self.center_order is None:
            return "-"
        leaves = ",".join(str(o) for o in self.leaf_orders)
        return f"claw center={self.center_order} leaves={leaves}"


@dataclass(frozen=True)
class CaseReport:
    checks: tuple[CaseCheck, ...]

    @property
    def passed(self) -> bool:
        return all(c.ok for c in self.checks)

    def summary(self) -> str:
        word = "HOLD" if self.passed else "FAIL"
        return f"CASES {word} over {len(self.checks)} checks"

    def to_text(self) -> str:
        lines = [
            "\t".join(
                (
                    c.case,
                    c.group,
                    "line-graph" if c.expect_line_graph else "not-line-graph",
                    c.witness_text(),
                    _b(c.ok),
                )
            )
            for c in self.checks
        ]
        lines.append(self.summary())
        return "\n".join(lines) + "\n"


def _vertices_of_order(lg: LabeledGraph, order: int) -> list[int]:
    return [i for i, lab in enumerate(lg.labels) if lab.order == order]


def _claw_holds(lg: LabeledGraph, center: int, leaves: list[int]) -> bool:
    if len(set([center, *leaves])) != 4:
        return False
    g = lg.graph
    if not all(g.has_edge(center, leaf) for leaf in leaves):
        return False
    return not any(
        g.has_edge(leaves[i], leaves[j]) for i in range(3) for j in range(i + 1, 3)
    )


def _claw_check(
    case: str,
    record: GroupRecord,
    lg: LabeledGraph,
    actual_line_graph: bool,
    center: int | None,
    leaves: list[int] | None,
) -> CaseCheck:
    ok = (
        not actual_line_graph
        and center is not None
        and leaves is not None
        and len(leaves) == 3
        and _claw_holds(lg, center, leaves)
    )
    return CaseCheck(
        case=case,
        group=record.source,
        expect_line_graph=False,
        center_order=lg.labels[center].order if center is not None else None,
        leaf_orders=tuple(lg.labels[v].order for v in leaves) if leaves else None,
        ok=ok,
    )


def _trivial_vertex(lg: LabeledGraph) -> int:
    return _vertices_of_order(lg, 1)[0]


def verify_case_theorems(catalog: tuple[GroupRecord, ...]) -> CaseReport:
    """Check each classification case on the groups satisfying its hypothesis.

    Negative cases must come with a claw whose subgroup orders follow the
    construction used to rule the group out: {1,p1,p2,p3} when three primes
    divide the order, {1,t,t,t} for non-cyclic abelian groups and non-abelian
    groups of order pq, a chain-shaped claw for cyclic two-prime orders, and
    any induced claw for the remaining negatives.
    """
    if not catalog:
        raise ValueError("catalog must be non-empty")
    forbidden = derive_forbidden_set()
    claw = forbidden.patterns[0]
    claw_center = max(range(claw.n), key=claw.degree)
    checks = []
    for record in catalog:
        group = record.group
        factors = factorize(group.order).factors
        lg, verdict = _decide(record)
        actual = verdict.is_line_graph

        if record.order_class is OrderClass.THREE_OR_MORE_PRIMES:
            center = _trivial_vertex(lg)
            leaves = [min(_vertices_of_order(lg, p)) for p, _ in factors[:3]]
            checks.append(
                _claw_check("three-primes", record, lg, actual, center, leaves)
            )
        elif group.is_cyclic() and record.order_class in (
            OrderClass.PRIME_POWER,
            OrderClass.TWO_PRIMES_PQ,
        ):
            checks.append(
                CaseCheck(
                    case="cyclic-two-primes",
                    group=record.source,
                    expect_line_graph=True,
                    center_order=None,
                    leaf_orders=None,
                    ok=actual,
                )
            )
        elif group.is_cyclic() and record.order_class is OrderClass.TWO_PRIMES_OTHER:
            t, u = _chain_primes(factors)
            center = min(_vertices_of_order(lg, t))
            leaves = [
                _trivial_vertex(lg),
                min(_vertices_of_order(lg, t * t)),
                min(_vertices_of_order(lg, t * u)),
            ]
            checks.append(
                _claw_check("cyclic-two-primes", record, lg, actual, center, leaves)
            )
        elif not group.is_cyclic() and group.is_abelian():
            t = _prime_with_three_subgroups(lg, factors)
            center = _trivial_vertex(lg)
            leaves = _vertices_of_order(lg, t)[:3]
            checks.append(
                _claw_check("noncyclic-abelian", record, lg, actual, center, leaves)
            )
        elif (
            not group.is_abelian() and record.order_class is OrderClass.TWO_PRIMES_PQ
        ):
            t = _prime_with_three_subgroups(lg, factors)
            center = _trivial_vertex(lg)
            leaves = _vertices_of_order(lg, t)[:3]
            checks.append(
                _claw_check("nonabelian-pq", record, lg, actual, center, leaves)
            )
        elif not predict(group):
            # Remaining negatives (non-abelian prime-power or two-prime
            # orders): any induced claw will do; take the recognizer's.
            center = leaves = None
            if not actual and verdict.pattern_id == "Gamma1":
                if check_induced_embedding(lg.graph, claw, verdict.embedding):
                    center = verdict.embedding[claw_center]
                    leaves = [
                        verdict.embedding[i] for i in range(claw.n) if i != claw_center
                    ]
            checks.append(
                _claw_check("other-negative", record, lg, actual, center, leaves)
            )

    return CaseReport(tuple(checks))


def _chain_primes(factors: tuple[tuple[int, int], ...]) -> tuple[int, int]:
    (p, a), (q, b) = factors
    if a >= 2:
        return p, q
    return q, p


def _prime_with_three_subgroups(
    lg: LabeledGraph, factors: tuple[tuple[int, int], ...]
) -> int:
    for p, _ in factors:
        if len(_vertices_of_order(lg, p)) >= 3:
            return p
    raise RuntimeError("no prime with three subgroups of that order was found")


# ---------------------------------------------------------------------------
# completeness of the graph


@dataclass(frozen=True)
class CompletenessRow:
    name: str
    order: int
    complete: bool
    expected: bool

    @property
    def ok(self) -> bool:
        return self.complete == self.expected


@dataclass(frozen=True)
class CompletenessReport:
    rows: tuple[CompletenessRow, ...]

    @property
    def passed(self) -> bool:
        return all(r.ok for r in self.rows)

    def summary(self) -> str:
        word = "HOLDS" if self.passed else "FAILS"
        return f"COMPLETENESS {word} over {len(self.rows)} groups"

    def to_text(self) -> str:
        lines = [
            "\t".join((r.name, str(r.order), _b(r.complete), _b(r.expected), _b(r.ok)))
            for r in self.rows
        ]
        lines.append(self.summary())
        return "\n".join(lines) + "\n"


def check_completeness_claim(catalog: tuple[GroupRecord, ...]) -> CompletenessReport:
    """The graph is complete exactly for the trivial group and prime orders."""
    if not catalog:
        raise ValueError("catalog must be non-empty")
    rows = []
    for record in catalog:
        factors = factorize(record.group.order).factors
        expected = record.group.order == 1 or (
            len(factors) == 1 and factors[0][1] == 1
        )
        stats = gamma_stats(build_gamma(record.group))
        rows.append(
            CompletenessRow(
                name=record.source,
                order=record.group.order,
                complete=stats.is_complete,
                expected=expected,
            )
        )
    return CompletenessReport(tuple(rows))
