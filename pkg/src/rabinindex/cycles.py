"""Cycle queries over colored arenas.

The color of a cycle is the minimal color among its nodes.  Two kinds of
query drive the reductions in :mod:`rabinindex.reduction`:

* exact queries about *simple* cycles through a given node, which are
  NP-hard in general and answered by a budgeted backtracking search, and
* abstract queries about arbitrary cycles (closed walks), which reduce to
  strongly connected component decompositions and are polynomial.

Enumeration helpers at the bottom provide brute-force ground truth for
small arenas and power the equivalence oracles.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator, Sequence

import networkx as nx

from .arena import Arena, Coloring, NodeId

__all__ = [
    "CycleAnswer",
    "SearchBudget",
    "DEFAULT_BUDGET",
    "NodeCapExceeded",
    "SccDecomposition",
    "tarjan_scc",
    "scc_decompose",
    "simple_cycle_through_with_color",
    "simple_cycle_with_max_color",
    "cycle_through_with_color",
    "cycle_with_max_color",
    "enumerate_simple_cycles",
    "strongly_connected_subsets",
]

DEFAULT_BUDGET = 10_000_000


class CycleAnswer(enum.Enum):
    """Result of a budgeted query; EXHAUSTED is not a 'no'."""

    YES = "yes"
    NO = "no"
    EXHAUSTED = "exhausted"

    def __bool__(self) -> bool:
        # Guard against `if answer:`; exhaustion must be handled explicitly.
        raise TypeError("CycleAnswer is tri-valued; compare against members")


@dataclass
class SearchBudget:
    """Mutable per-query allowance counted in expanded search nodes."""

    limit: int | None = DEFAULT_BUDGET
    spent: int = 0

    def spend(self, amount: int = 1) -> bool:
        """Consume budget; False once the limit would be exceeded."""
        self.spent += amount
        return self.limit is None or self.spent <= self.limit


class NodeCapExceeded(ValueError):
    """Enumeration was refused because the arena is too large."""


@dataclass(frozen=True)
class SccDecomposition:
    """Strongly connected components of an (induced sub)graph.

    ``component_of[v]`` is -1 for nodes outside the induced subgraph.
    Components are numbered in reverse topological order of discovery and
    ``nontrivial[c]`` says whether component ``c`` contains a cycle, i.e.
    has at least two nodes or a self-loop.
    """

    component_of: tuple[int, ...]
    members: tuple[tuple[NodeId, ...], ...]
    nontrivial: tuple[bool, ...]

    @property
    def count(self) -> int:
        return len(self.members)


def tarjan_scc(
    successors: Sequence[Sequence[NodeId]],
    allowed: Sequence[bool] | None = None,
) -> SccDecomposition:
    """Iterative Tarjan decomposition of the subgraph induced by ``allowed``."""
    n = len(successors)
    if allowed is None:
        allowed = [True] * n
    UNVISITED = -1
    index_of = [UNVISITED] * n
    lowlink = [0] * n
    on_stack = [False] * n
    component_of = [-1] * n
    stack: list[int] = []
    members: list[tuple[int, ...]] = []
    nontrivial: list[bool] = []
    counter = 0

    for root in range(n):
        if not allowed[root] or index_of[root] != UNVISITED:
            continue
        work: list[tuple[int, int]] = [(root, 0)]
        while work:
            v, pos = work[-1]
            if pos == 0:
                index_of[v] = lowlink[v] = counter
                counter += 1
                stack.append(v)
                on_stack[v] = True
            advanced = False
            succ = successors[v]
            while pos < len(succ):
                w = succ[pos]
                pos += 1
                if not allowed[w]:
                    continue
                if index_of[w] == UNVISITED:
                    work[-1] = (v, pos)
                    work.append((w, 0))
                    advanced = True
                    break
                if on_stack[w]:
                    lowlink[v] = min(lowlink[v], index_of[w])
            if advanced:
                continue
            work.pop()
            if lowlink[v] == index_of[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    component_of[w] = len(members)
                    comp.append(w)
                    if w == v:
                        break
                comp.sort()
                members.append(tuple(comp))
                if len(comp) > 1:
                    nontrivial.append(True)
                else:
                    u = comp[0]
                    nontrivial.append(u in successors[u])
            if work:
                parent = work[-1][0]
                lowlink[parent] = min(lowlink[parent], lowlink[v])

    return SccDecomposition(tuple(component_of), tuple(members), tuple(nontrivial))


def scc_decompose(arena: Arena, allowed: Sequence[bool] | None = None) -> SccDecomposition:
    return tarjan_scc(arena.successors, allowed)


def _check_query(coloring: Sequence[int], v: NodeId, gamma: int) -> None:
    if not 0 <= v < len(coloring):
        raise ValueError(f"node {v} out of range")
    if gamma < 0:
        raise ValueError(f"target color {gamma} is negative")
    if gamma > coloring[v]:
        raise ValueError(
            f"target color {gamma} exceeds color {coloring[v]} of node {v}; "
            "such a cycle cannot exist"
        )


def simple_cycle_through_with_color(
    arena: Arena,
    coloring: Sequence[int] | None,
    v: NodeId,
    gamma: int,
    budget: SearchBudget | None = None,
) -> CycleAnswer:
    """Is there a simple cycle through ``v`` whose minimal color is ``gamma``?

    Equivalently: a simple cycle through ``v`` that stays within nodes of
    color >= gamma and visits a node colored exactly gamma.  The search is
    restricted to the strongly connected component of ``v`` in the induced
    subgraph, then backtracks over simple paths; ``EXHAUSTED`` is returned
    when the budget runs out before an answer is certain.
    """
    c = arena.colors if coloring is None else coloring
    _check_query(c, v, gamma)
    n = arena.node_count
    allowed = [c[w] >= gamma for w in range(n)]
    scc = tarjan_scc(arena.successors, allowed)
    comp = scc.component_of[v]
    if not scc.nontrivial[comp]:
        return CycleAnswer.NO
    if c[v] == gamma:
        # v itself realizes the target color: the shortest closed walk
        # through v inside its component is a simple cycle of color gamma.
        return CycleAnswer.YES
    members = set(scc.members[comp])
    if not any(c[u] == gamma for u in members):
        return CycleAnswer.NO

    adjacency = {
        u: sorted(w for w in arena.successors[u] if w in members) for u in members
    }
    if budget is None:
        budget = SearchBudget()

    # Depth-first enumeration of simple paths from v, counting how many
    # gamma-colored nodes are on the current path.
    on_path = {v}
    gamma_on_path = 0
    stack: list[tuple[int, Iterator[int]]] = [(v, iter(adjacency[v]))]
    while stack:
        node, it = stack[-1]
        pushed = False
        for w in it:
            if w == v:
                if gamma_on_path > 0:
                    return CycleAnswer.YES
                continue
            if w in on_path:
                continue
            if not budget.spend():
                return CycleAnswer.EXHAUSTED
            on_path.add(w)
            if c[w] == gamma:
                gamma_on_path += 1
            stack.append((w, iter(adjacency[w])))
            pushed = True
            break
        if not pushed:
            stack.pop()
            if node != v:
                on_path.discard(node)
                if c[node] == gamma:
                    gamma_on_path -= 1
    return CycleAnswer.NO


def simple_cycle_with_max_color(arena: Arena, coloring: Sequence[int] | None = None) -> bool:
    """Does some simple cycle have color equal to the index of the coloring?

    Such a cycle uses only nodes of the maximal color, so this is a plain
    cycle test on the induced subgraph and stays polynomial.
    """
    c = arena.colors if coloring is None else coloring
    m = max(c)
    allowed = [color == m for color in c]
    scc = tarjan_scc(arena.successors, allowed)
    return any(scc.nontrivial)


def cycle_through_with_color(
    arena: Arena, coloring: Sequence[int] | None, v: NodeId, gamma: int
) -> bool:
    """Is there a cycle (closed walk) through ``v`` with minimal color ``gamma``?

    A closed walk with minimum exactly ``gamma`` through ``v`` exists iff
    ``v`` shares a nontrivial strongly connected component of the
    color->=gamma subgraph with some node colored exactly ``gamma``.
    """
    c = arena.colors if coloring is None else coloring
    _check_query(c, v, gamma)
    if gamma not in c:
        return False
    allowed = [color >= gamma for color in c]
    scc = tarjan_scc(arena.successors, allowed)
    comp = scc.component_of[v]
    if not scc.nontrivial[comp]:
        return False
    return any(c[u] == gamma for u in scc.members[comp])


def cycle_with_max_color(arena: Arena, coloring: Sequence[int] | None = None) -> bool:
    """Closed-walk analogue of :func:`simple_cycle_with_max_color`.

    The two agree on every arena: a closed walk whose minimum equals the
    global maximum visits max-colored nodes only, and can be shortened to a
    simple cycle.  Both are exposed so that tests can assert the equality.
    """
    c = arena.colors if coloring is None else coloring
    m = max(c)
    return any(
        c[v] == m and cycle_through_with_color(arena, c, v, m)
        for v in range(arena.node_count)
    )


def enumerate_simple_cycles(
    arena: Arena, node_cap: int = 15
) -> Iterator[tuple[NodeId, ...]]:
    """All simple cycles, each exactly once, rotated to start at the minimal node.

    Johnson-style enumeration; intended as a brute-force oracle and refused
    outright above ``node_cap`` nodes because the count can be factorial.
    """
    if arena.node_count > node_cap:
        raise NodeCapExceeded(
            f"arena has {arena.node_count} nodes, enumeration capped at {node_cap}"
        )
    graph = nx.DiGraph()
    graph.add_nodes_from(range(arena.node_count))
    for v, succ in enumerate(arena.successors):
        for w in succ:
            graph.add_edge(v, w)
    for cycle in nx.simple_cycles(graph):
        pivot = cycle.index(min(cycle))
        yield tuple(cycle[pivot:] + cycle[:pivot])


def strongly_connected_subsets(
    arena: Arena, node_cap: int = 12
) -> Iterator[frozenset[NodeId]]:
    """All node sets inducing a strongly connected subgraph with an edge.

    These are exactly the node sets of closed walks, so they characterize
    the abstract (cycle) equivalence relation.  Exponential by nature and
    refused above ``node_cap`` nodes.
    """
    n = arena.node_count
    if n > node_cap:
        raise NodeCapExceeded(f"arena has {n} nodes, enumeration capped at {node_cap}")
    succ_sets = arena.successor_sets
    for size in range(1, n + 1):
        for combo in combinations(range(n), size):
            subset = set(combo)
            if size == 1:
                v = combo[0]
                if v in succ_sets[v]:
                    yield frozenset(subset)
                continue
            # forward reachability from the first node inside the subset
            reached = {combo[0]}
            frontier = [combo[0]]
            while frontier:
                u = frontier.pop()
                for w in arena.successors[u]:
                    if w in subset and w not in reached:
                        reached.add(w)
                        frontier.append(w)
            if reached != subset:
                continue
            back = {combo[0]}
            frontier = [combo[0]]
            while frontier:
                u = frontier.pop()
                for w in subset:
                    if w not in back and u in succ_sets[w]:
                        back.add(w)
                        frontier.append(w)
            if back == subset:
                yield frozenset(subset)
