"""Component counts for crepant resolutions of the local models

    a_1^{d_1} * ... * a_k^{d_k} = lambda * x_1 * ... * x_s,

viewed as families over the lambda-line.  The module provides the counting
functions F and G (mutual recursion and closed binomial forms), their
multi-exponent sum, and a chart-rewriting simulator of the blow-up procedure
whose lexicographically decreasing weight proves termination.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cache
from typing import Iterator, NamedTuple

from .exactmath import binomial


class NodeLimitExceeded(RuntimeError):
    """Raised when a resolution trace would grow past its node budget."""


# ---------------------------------------------------------------------------
# counting functions


def f_rec(d: int, s: int) -> int:
    """Number of irreducible components over lambda = 0 in a crepant resolution
    of a^d = lambda * x_1 * ... * x_s (exceptional divisors plus the strict
    transform of the central fiber), by the mutual recursion with ``g_rec``.

    Conventions: 0 whenever d <= 0, and 1 when s = 0 (the hypersurface is
    already smooth, its central fiber irreducible).
    """
    if s < 0:
        raise ValueError(f"f_rec requires s >= 0, got s={s}")
    if d <= 0:
        return 0
    return _f_positive(d, s)


@cache
def _f_positive(d: int, s: int) -> int:
    if s == 0:
        return 1
    # one summand per choice of which x-variables vanish at the blow-up center
    return sum(binomial(s, i) * g_rec(d, i) for i in range(s + 1))


def g_rec(d: int, s: int) -> int:
    """Number of exceptional divisors in the central fiber whose center is the
    deepest vanishing stratum a = x_1 = ... = x_s = 0, by reduction to ``f_rec``.

    Blowing up the deepest stratum leaves, in the one chart that still meets it,
    the same family with d lowered to d - s; divisors met in the other charts
    sit over shallower strata and are not counted here.  G(d, 0) = 1.
    """
    if d < 1:
        raise ValueError(f"g_rec requires d >= 1, got d={d}")
    if s < 0:
        raise ValueError(f"g_rec requires s >= 0, got s={s}")
    if s == 0:
        return 1
    return f_rec(d - s, s)


def g_closed(d: int, s: int) -> int:
    """Closed form of ``g_rec``: C(d - 1, s)."""
    if d < 1:
        raise ValueError(f"g_closed requires d >= 1, got d={d}")
    if s < 0:
        raise ValueError(f"g_closed requires s >= 0, got s={s}")
    return binomial(d - 1, s)


def f_closed(d: int, s: int) -> int:
    """Closed form of ``f_rec``: C(d + s - 1, s)."""
    if d < 1:
        raise ValueError(f"f_closed requires d >= 1, got d={d}")
    if s < 0:
        raise ValueError(f"f_closed requires s >= 0, got s={s}")
    return binomial(d + s - 1, s)


def f_multi(dbar: tuple[int, ...], s: int, *, use_recursion: bool = False) -> int:
    """Components over lambda = 0 for the multi-exponent model
    a_1^{d_1} ... a_k^{d_k} = lambda * x_1 ... x_s.

    Resolving the singularities along a_1 = 0, then a_2 = 0, and so on splits
    the count into one summand per exponent, so the total is sum_i F(d_i, s).
    ``use_recursion`` switches the summands from the closed form to the mutual
    recursion for cross-checking.
    """
    dbar = tuple(dbar)
    if not dbar:
        raise ValueError("f_multi requires a nonempty exponent list")
    if any(d < 1 for d in dbar):
        raise ValueError(f"f_multi exponents must be positive, got {dbar}")
    count = f_rec if use_recursion else f_closed
    return sum(count(d, s) for d in dbar)


# ---------------------------------------------------------------------------
# chart rewriting


@dataclass(frozen=True)
class ChartType:
    """Local model of the rewriting: a_1^{d_1} ... a_k^{d_k} = lambda * x_1 ... x_s.

    ``dbar`` lists the exponents of the a-variables (possibly empty); ``s``
    counts the x-variables.  Charts with no a-variables or no x-variables are
    smooth, hence terminal.  The weight (s, sum(dbar)), compared
    lexicographically, decreases strictly under every rewriting step.
    """

    dbar: tuple[int, ...]
    s: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "dbar", tuple(self.dbar))
        if any(d < 1 for d in self.dbar):
            raise ValueError(f"chart exponents must be positive, got {self.dbar}")
        if self.s < 0:
            raise ValueError(f"chart requires s >= 0, got s={self.s}")

    def weight(self) -> tuple[int, int]:
        return (self.s, sum(self.dbar))

    @property
    def is_terminal(self) -> bool:
        return not self.dbar or self.s == 0

    def __str__(self) -> str:
        return f"L(({', '.join(map(str, self.dbar))}); s={self.s})"


class ChartEdge(NamedTuple):
    stratum: str
    label: str
    child: ChartType


def _nonzero(exponents: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(d for d in exponents if d)


def chart_children(chart: ChartType) -> list[ChartEdge]:
    """One blow-up step applied to a non-terminal chart.

    The center is {a_1 = x_1 = ... = x_m = 0} with m = min(d_1, s), and the
    blow-up is covered by m + 1 charts.  In the chart a_1 != 0 the exponent d_1
    drops to d_1 - m and the x-variables survive; in each chart x_i != 0
    (i = 1..m) one x-variable is consumed and an a-variable with exponent
    d_1 - m appears.  Exponents that reach zero are removed, so for d_1 < s the
    a-chart loses a_1 entirely and the x-charts keep dbar unchanged.  Every
    child weight is strictly smaller than the parent weight.
    """
    if chart.is_terminal:
        raise ValueError(f"chart {chart} is terminal (smooth); there is nothing to blow up")
    d1, rest = chart.dbar[0], chart.dbar[1:]
    m = min(d1, chart.s)
    stratum = "a1 = " + " = ".join(f"x{i}" for i in range(1, m + 1)) + " = 0"
    a_child = ChartType(_nonzero((d1 - m,) + rest), chart.s)
    x_child = ChartType(_nonzero(chart.dbar + (d1 - m,)), chart.s - 1)
    edges = [ChartEdge(stratum, "a1 != 0", a_child)]
    edges.extend(ChartEdge(stratum, f"x{i} != 0", x_child) for i in range(1, m + 1))
    return edges


@dataclass
class TraceNode:
    chart: ChartType
    edges: list[TraceEdge] = field(default_factory=list)


@dataclass
class TraceEdge:
    stratum: str
    charts: tuple[str, ...]
    node: TraceNode


@dataclass
class ResolutionTrace:
    """The full rewriting tree grown from one starting chart.

    Each blow-up contributes two child nodes: the a_1 != 0 chart, and one node
    shared by the x_i != 0 charts, which are pairwise isomorphic by
    construction; the edge records every chart label, so the multiplicity is
    preserved.  Without that grouping the tree repeats identical subtrees an
    exponential number of times and moderate inputs overflow any node budget.
    """

    root: TraceNode
    node_count: int

    def iter_nodes(self) -> Iterator[TraceNode]:
        stack = [self.root]
        while stack:
            node = stack.pop()
            yield node
            for edge in node.edges:
                stack.append(edge.node)

    def iter_edges(self) -> Iterator[tuple[TraceNode, TraceEdge]]:
        for node in self.iter_nodes():
            for edge in node.edges:
                yield node, edge

    def leaves(self) -> Iterator[TraceNode]:
        for node in self.iter_nodes():
            if not node.edges:
                yield node

    def to_json_dict(self) -> dict:
        def encode(node: TraceNode) -> dict:
            return {
                "dbar": list(node.chart.dbar),
                "s": node.chart.s,
                "weight": list(node.chart.weight()),
                "children": [
                    {
                        "stratum": edge.stratum,
                        "charts": list(edge.charts),
                        "node": encode(edge.node),
                    }
                    for edge in node.edges
                ],
            }

        return {"node_count": self.node_count, "root": encode(self.root)}

    def to_dot(self) -> str:
        lines = ["digraph resolution_trace {", "  node [shape=box];"]
        ids: dict[int, int] = {}
        for counter, node in enumerate(self.iter_nodes()):
            ids[id(node)] = counter
            dbar = ",".join(map(str, node.chart.dbar))
            weight = node.chart.weight()
            lines.append(
                f'  n{counter} [label="dbar=({dbar}) s={node.chart.s}\\n'
                f'w=({weight[0]},{weight[1]})"];'
            )
        for node, edge in self.iter_edges():
            label = ", ".join(edge.charts) + "\\n" + edge.stratum
            lines.append(f'  n{ids[id(node)]} -> n{ids[id(edge.node)]} [label="{label}"];')
        lines.append("}")
        return "\n".join(lines)


def resolution_trace(chart: ChartType, node_limit: int = 1_000_000) -> ResolutionTrace:
    """Run the rewriting to completion from ``chart``, recording every blow-up.

    Children are expanded until all leaves are terminal; the build fails with
    ``NodeLimitExceeded`` once more than ``node_limit`` nodes would be recorded,
    which would signal a termination bug since the weights decrease strictly.
    """
    if node_limit < 1:
        raise ValueError(f"node_limit must be positive, got {node_limit}")
    root = TraceNode(chart)
    count = 1
    stack = [root]
    while stack:
        node = stack.pop()
        if node.chart.is_terminal:
            continue
        grouped: dict[ChartType, list[str]] = {}
        stratum = ""
        for edge in chart_children(node.chart):
            stratum = edge.stratum
            grouped.setdefault(edge.child, []).append(edge.label)
        for child, labels in grouped.items():
            count += 1
            if count > node_limit:
                raise NodeLimitExceeded(
                    f"resolution trace from {chart} exceeded {node_limit} nodes"
                )
            child_node = TraceNode(child)
            node.edges.append(TraceEdge(stratum, tuple(labels), child_node))
            stack.append(child_node)
    return ResolutionTrace(root, count)
