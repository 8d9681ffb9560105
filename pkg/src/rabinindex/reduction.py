"""Color reductions that preserve winning behavior of parity games.

Two colorings of the same arena are equivalent when every simple cycle has
the same parity of minimal color under both; the Rabin index of a coloring
is the smallest index among equivalent colorings.  :func:`rabin` lowers a
coloring to that minimum using exact simple-cycle queries, or to the
coarser cycle-abstracted minimum (all closed walks instead of simple
cycles) when run in ``alpha`` mode, which keeps everything polynomial.

The remaining entry points are cheaper companions: :func:`static_compress`
squeezes gaps out of the color value set without looking at edges,
:func:`all_cycles_even` decides whether the index can drop to zero, and
:func:`rabin_a` is the Carton-Maceiras reduction known from parity word
automata (which classify runs by maximal recurring color; on min-parity
arenas it serves as an index baseline, see :func:`rabin_a`).
"""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass, field
from typing import Sequence

from .arena import Arena, Coloring, NodeId, ParityGame, index
from .cycles import (
    CycleAnswer,
    SccDecomposition,
    SearchBudget,
    simple_cycle_through_with_color,
    simple_cycle_with_max_color,
    tarjan_scc,
)

__all__ = [
    "OracleMode",
    "OracleStats",
    "IterationTrace",
    "ReductionReport",
    "BudgetExhausted",
    "ReductionAborted",
    "get_anchor",
    "cycle_pass",
    "pop_pass",
    "rabin",
    "static_compress",
    "all_cycles_even",
    "rabin_a",
    "abstract_membership",
]

Change = tuple[NodeId, int, int]  # node, old color, new color


class OracleMode(enum.Enum):
    """Which cycle notion anchors are computed against."""

    EXACT = "exact"
    ABSTRACT = "alpha"


def _as_mode(mode: OracleMode | str) -> OracleMode:
    return mode if isinstance(mode, OracleMode) else OracleMode(mode)


@dataclass
class OracleStats:
    exact_queries: int = 0
    abstract_queries: int = 0
    max_color_checks: int = 0
    nodes_expanded: int = 0


@dataclass
class IterationTrace:
    cycle_changes: tuple[Change, ...]
    pop_changes: tuple[Change, ...]

    @property
    def empty(self) -> bool:
        return not self.cycle_changes and not self.pop_changes


@dataclass
class ReductionReport:
    """Per-run trace of :func:`rabin`.

    ``rank_trace`` holds the color sum before the loop and after each
    iteration; it strictly decreases except for the final confirming entry.
    """

    mode: OracleMode
    initial_index: int
    final_index: int
    rank_trace: list[int] = field(default_factory=list)
    iterations: list[IterationTrace] = field(default_factory=list)
    stats: OracleStats = field(default_factory=OracleStats)

    @property
    def iteration_count(self) -> int:
        return len(self.iterations)

    def to_text(self) -> str:
        def fmt(changes: tuple[Change, ...]) -> str:
            if not changes:
                return "-"
            return " ".join(f"v{v} {old}->{new}" for v, old, new in changes)

        lines = [f"initial index {self.initial_index}"]
        for i, it in enumerate(self.iterations, start=1):
            lines.append(
                f"iteration {i}: cycle: {fmt(it.cycle_changes)} | pop: {fmt(it.pop_changes)}"
            )
        lines.append(f"final index {self.final_index}")
        return "\n".join(lines)

    def to_records(self) -> list[dict[str, int | str]]:
        records: list[dict[str, int | str]] = []
        for i, it in enumerate(self.iterations, start=1):
            for phase, changes in (("cycle", it.cycle_changes), ("pop", it.pop_changes)):
                for v, old, new in changes:
                    records.append(
                        {"iteration": i, "phase": phase, "node": v, "old": old, "new": new}
                    )
        return records


class BudgetExhausted(RuntimeError):
    """An exact simple-cycle query ran out of search budget."""

    def __init__(self, node: NodeId, gamma: int, message: str | None = None):
        self.node = node
        self.gamma = gamma
        super().__init__(
            message
            or f"search budget exhausted while probing node {node} at color {gamma}"
        )


class ReductionAborted(BudgetExhausted):
    """Exact reduction gave up; carries the partial report for inspection."""

    def __init__(self, node: NodeId, gamma: int, report: ReductionReport):
        super().__init__(
            node,
            gamma,
            f"exact reduction aborted: budget exhausted at node {node}, color {gamma}",
        )
        self.report = report


class _PassState:
    """Shared bookkeeping for one reduction run.

    Caches SCC decompositions of color-threshold subgraphs keyed by the
    threshold; any color change invalidates the cache.  Tracks how many
    nodes carry each color so queries for absent target colors are free.
    """

    def __init__(
        self,
        arena: Arena,
        colors: list[int],
        mode: OracleMode,
        budget_limit: int | None,
        stats: OracleStats,
    ):
        self.arena = arena
        self.colors = colors
        self.mode = mode
        self.budget_limit = budget_limit
        self.stats = stats
        self.color_count: Counter[int] = Counter(colors)
        self._scc_cache: dict[int, SccDecomposition] = {}

    def set_color(self, v: NodeId, new: int) -> None:
        old = self.colors[v]
        if new == old:
            return
        self.color_count[old] -= 1
        self.color_count[new] += 1
        self.colors[v] = new
        self._scc_cache.clear()

    def scc_at(self, gamma: int) -> SccDecomposition:
        scc = self._scc_cache.get(gamma)
        if scc is None:
            allowed = [c >= gamma for c in self.colors]
            scc = tarjan_scc(self.arena.successors, allowed)
            self._scc_cache[gamma] = scc
        return scc

    def anchor(self, v: NodeId) -> int:
        """Largest color gamma of opposite parity below c(v) such that some
        (simple, in exact mode) cycle through v has color exactly gamma; -1
        if there is none."""
        c_v = self.colors[v]
        if c_v == 0:
            return -1
        gamma_min = (c_v - 1) % 2
        # If v lies on no cycle of the >=gamma_min subgraph it lies on no
        # cycle relevant to any probed gamma, simple or otherwise.
        scc = self.scc_at(gamma_min)
        self.stats.abstract_queries += 1
        if not scc.nontrivial[scc.component_of[v]]:
            return -1
        for gamma in range(c_v - 1, gamma_min - 1, -2):
            if self.color_count[gamma] == 0:
                continue
            if self.mode is OracleMode.ABSTRACT:
                scc = self.scc_at(gamma)
                self.stats.abstract_queries += 1
                comp = scc.component_of[v]
                if scc.nontrivial[comp] and any(
                    self.colors[u] == gamma for u in scc.members[comp]
                ):
                    return gamma
            else:
                budget = SearchBudget(self.budget_limit)
                answer = simple_cycle_through_with_color(
                    self.arena, self.colors, v, gamma, budget
                )
                self.stats.exact_queries += 1
                self.stats.nodes_expanded += budget.spent
                if answer is CycleAnswer.EXHAUSTED:
                    raise BudgetExhausted(v, gamma)
                if answer is CycleAnswer.YES:
                    return gamma
        return -1

    def run_cycle_pass(self, order: Sequence[NodeId] | None) -> tuple[Change, ...]:
        colors = self.colors
        if order is None:
            order = sorted(range(self.arena.node_count), key=lambda v: (colors[v], v))
        changes: list[Change] = []
        for v in order:
            j = self.anchor(v)
            new = colors[v] % 2 if j == -1 else j + 1
            if new != colors[v]:
                changes.append((v, colors[v], new))
                self.set_color(v, new)
        return tuple(changes)

    def run_pop_pass(self) -> tuple[Change, ...]:
        colors = self.colors
        first_old: dict[NodeId, int] = {}
        m = max(colors)
        while True:
            self.stats.max_color_checks += 1
            if simple_cycle_with_max_color(self.arena, colors):
                break
            assert m > 0, "a total arena always has a cycle at the minimal color"
            for v, c in enumerate(colors):
                if c == m:
                    first_old.setdefault(v, c)
                    self.set_color(v, m - 1)
            m -= 1
        return tuple((v, old, colors[v]) for v, old in sorted(first_old.items()))


def get_anchor(
    arena: Arena,
    coloring: Sequence[int] | None,
    v: NodeId,
    mode: OracleMode | str = OracleMode.EXACT,
    budget_limit: int | None = None,
    stats: OracleStats | None = None,
) -> int:
    """Anchor of ``v``: the largest opposite-parity color below ``c(v)``
    realized as the color of a cycle through ``v``, or -1."""
    colors = list(arena.colors if coloring is None else coloring)
    state = _PassState(arena, colors, _as_mode(mode), budget_limit, stats or OracleStats())
    return state.anchor(v)


def cycle_pass(
    arena: Arena,
    coloring: Sequence[int] | None,
    mode: OracleMode | str = OracleMode.EXACT,
    order: Sequence[NodeId] | None = None,
    budget_limit: int | None = None,
) -> tuple[Coloring, tuple[Change, ...]]:
    """One in-place sweep of anchor-based lowering.

    Nodes are processed in ascending color order (ties by node id) unless an
    explicit ``order`` is given; later nodes see the updated colors of
    earlier ones.  A node with anchor ``j`` is recolored to ``j + 1``, a
    node without one drops to its own parity.
    """
    colors = list(arena.colors if coloring is None else coloring)
    state = _PassState(arena, colors, _as_mode(mode), budget_limit, OracleStats())
    changes = state.run_cycle_pass(order)
    return tuple(colors), changes


def pop_pass(
    arena: Arena,
    coloring: Sequence[int] | None,
    mode: OracleMode | str = OracleMode.EXACT,
) -> tuple[Coloring, tuple[Change, ...]]:
    """Lower the maximal color class until some cycle realizes the maximum.

    The check is the polynomial max-color test in both modes, since a cycle
    whose color equals the global maximum is monochromatic and can always
    be taken simple.
    """
    colors = list(arena.colors if coloring is None else coloring)
    state = _PassState(arena, colors, _as_mode(mode), None, OracleStats())
    changes = state.run_pop_pass()
    return tuple(colors), changes


def rabin(
    arena: Arena,
    coloring: Sequence[int] | None = None,
    mode: OracleMode | str = OracleMode.EXACT,
    budget_limit: int | None = None,
    orders: Sequence[Sequence[NodeId]] | None = None,
) -> tuple[Coloring, ReductionReport]:
    """Iterate cycle and pop passes to a fixpoint of the color sum.

    In ``EXACT`` mode the result has minimal index among colorings that
    agree with the input on the parity of every simple cycle; ``ABSTRACT``
    (``alpha``) mode minimizes over the coarser closed-walk relation in
    polynomial time.  ``orders`` optionally pins the processing order of
    the first cycle passes, for reproducing specific traces.

    Raises :class:`ReductionAborted` when an exact query exhausts its
    budget; the exception carries the partial report.
    """
    mode = _as_mode(mode)
    colors = list(arena.colors if coloring is None else coloring)
    stats = OracleStats()
    state = _PassState(arena, colors, mode, budget_limit, stats)
    report = ReductionReport(
        mode=mode,
        initial_index=index(colors),
        final_index=index(colors),
        rank_trace=[sum(colors)],
        stats=stats,
    )
    rank = sum(colors)
    iteration = 0
    while True:
        order = None
        if orders is not None and iteration < len(orders):
            order = orders[iteration]
        try:
            cycle_changes = state.run_cycle_pass(order)
        except BudgetExhausted as exc:
            report.final_index = index(colors)
            raise ReductionAborted(exc.node, exc.gamma, report) from None
        pop_changes = state.run_pop_pass()
        report.iterations.append(IterationTrace(cycle_changes, pop_changes))
        new_rank = sum(colors)
        report.rank_trace.append(new_rank)
        iteration += 1
        if new_rank == rank:
            break
        rank = new_rank
    report.final_index = index(colors)
    return tuple(colors), report


def static_compress(coloring: Sequence[int]) -> Coloring:
    """Close gaps in the color value set, preserving parities and order.

    The smallest color drops to its parity; each next distinct color either
    merges with its predecessor (same parity) or sits one above it.  Purely
    value-based, so it never beats the cycle-aware reductions.
    """
    if not coloring:
        raise ValueError("coloring is empty")
    mapping: dict[int, int] = {}
    prev: int | None = None
    for d in sorted(set(coloring)):
        if prev is None:
            mapping[d] = d % 2
        elif (d - prev) % 2 == 0:
            mapping[d] = mapping[prev]
        else:
            mapping[d] = mapping[prev] + 1
        prev = d
    return tuple(mapping[c] for c in coloring)


def all_cycles_even(arena: Arena, coloring: Sequence[int] | None = None) -> bool:
    """Does every cycle have even color?  Holds iff the index can reach 0.

    A cycle of odd color ``d`` exists iff some node colored ``d`` lies in a
    nontrivial strongly connected component of the color->=d subgraph.
    """
    c = arena.colors if coloring is None else tuple(coloring)
    for d in sorted({color for color in c if color % 2 == 1}):
        allowed = [color >= d for color in c]
        scc = tarjan_scc(arena.successors, allowed)
        for v, color in enumerate(c):
            if color == d and scc.nontrivial[scc.component_of[v]]:
                return False
    return True


def rabin_a(arena: Arena, coloring: Sequence[int] | None = None) -> Coloring:
    """Carton-Maceiras reduction, included as a baseline.

    Recursively strips the maximal color of each strongly connected
    component.  It stems from parity word automata, where a run is
    classified by the maximal color recurring in it: the output preserves
    the parity of the *maximal* color of every cycle.  On min-parity
    arenas it is therefore only an index baseline, not an equivalent
    coloring, and it performs no analogue of the pop pass.

    Reference: O. Carton, R. Maceiras, Computing the Rabin index of a
    parity automaton, RAIRO-ITA 33(6), 1999.
    """
    c = list(arena.colors if coloring is None else coloring)
    n = arena.node_count
    out = list(c)
    successors = arena.successors

    def reduce_over(allowed: list[bool]) -> int:
        best = 0
        for comp in tarjan_scc(successors, allowed).members:
            pi = max(c[u] for u in comp)
            if pi == 0:
                m = 0
            else:
                comp_set = set(comp)
                sub = [u in comp_set and c[u] != pi for u in range(n)]
                m = reduce_over(sub)
                if (pi - m) % 2 == 1:
                    m += 1
            for u in comp:
                if c[u] == pi:
                    out[u] = m
            best = max(best, m)
        return best

    reduce_over([True] * n)
    return tuple(out)


def abstract_membership(game: ParityGame | Arena, k: int) -> bool:
    """Is the cycle-abstracted Rabin index of the coloring below ``k``?

    This is the polynomial membership test for the k-th abstract index
    class; ``k = 1`` coincides with :func:`all_cycles_even`.
    """
    if k < 1:
        raise ValueError(f"class bound k must be at least 1, got {k}")
    arena = game.arena if isinstance(game, ParityGame) else game
    reduced, _ = rabin(arena, mode=OracleMode.ABSTRACT)
    return index(reduced) < k
