"""Colored arenas and parity games.

An arena is a finite directed graph with a total edge relation (every node
has at least one successor) together with a coloring that assigns each node
a natural number.  A parity game additionally partitions the nodes between
player 0 and player 1.  Plays are infinite; under the min-parity convention
used throughout this package, player 0 wins a play iff the minimal color
occurring infinitely often is even.

Node identities are dense integers in ``[0, n)`` and stay fixed under all
color transformations: reductions return fresh colorings rather than
mutating shared state, so arenas and games are immutable and safe to share.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

NodeId = int
Coloring = tuple[int, ...]

__all__ = [
    "NodeId",
    "Coloring",
    "Arena",
    "ParityGame",
    "Solution",
    "cycle_color",
    "index",
]


@dataclass(frozen=True)
class Arena:
    """Directed graph with a total edge relation and per-node colors.

    ``successors[v]`` is the ordered successor sequence of node ``v``;
    duplicates are rejected (parsers deduplicate before construction).
    ``colors[v]`` is the color of ``v`` and must be a natural number.
    """

    successors: tuple[tuple[NodeId, ...], ...]
    colors: Coloring

    def __post_init__(self) -> None:
        n = len(self.successors)
        if n == 0:
            raise ValueError("arena must have at least one node")
        if len(self.colors) != n:
            raise ValueError(
                f"coloring has {len(self.colors)} entries for {n} nodes"
            )
        for v, succ in enumerate(self.successors):
            if not succ:
                raise ValueError(f"node {v} has no successors (arena must be total)")
            seen = set()
            for w in succ:
                if not 0 <= w < n:
                    raise ValueError(f"successor {w} of node {v} out of range")
                if w in seen:
                    raise ValueError(f"node {v} has duplicate successor {w}")
                seen.add(w)
        for v, c in enumerate(self.colors):
            if c < 0:
                raise ValueError(f"negative color {c} at node {v}")

    @classmethod
    def from_lists(
        cls, successors: Iterable[Iterable[NodeId]], colors: Iterable[int]
    ) -> "Arena":
        return cls(
            tuple(tuple(succ) for succ in successors),
            tuple(colors),
        )

    @property
    def node_count(self) -> int:
        return len(self.successors)

    @cached_property
    def successor_sets(self) -> tuple[frozenset[NodeId], ...]:
        return tuple(frozenset(succ) for succ in self.successors)

    @cached_property
    def predecessors(self) -> tuple[tuple[NodeId, ...], ...]:
        preds: list[list[NodeId]] = [[] for _ in range(self.node_count)]
        for v, succ in enumerate(self.successors):
            for w in succ:
                preds[w].append(v)
        return tuple(tuple(sorted(p)) for p in preds)

    def has_edge(self, u: NodeId, v: NodeId) -> bool:
        return v in self.successor_sets[u]

    def with_colors(self, colors: Iterable[int]) -> "Arena":
        """Same graph, different coloring."""
        return Arena(self.successors, tuple(colors))


@dataclass(frozen=True)
class ParityGame:
    """Arena plus an ownership partition.

    ``owners[v]`` is 0 or 1.  ``names`` optionally records display names,
    e.g. original identifiers when a sparse input file was renumbered.
    """

    arena: Arena
    owners: tuple[int, ...]
    names: tuple[str | None, ...] | None = None

    def __post_init__(self) -> None:
        n = self.arena.node_count
        if len(self.owners) != n:
            raise ValueError(f"owner vector has {len(self.owners)} entries for {n} nodes")
        for v, o in enumerate(self.owners):
            if o not in (0, 1):
                raise ValueError(f"owner of node {v} must be 0 or 1, got {o}")
        if self.names is not None and len(self.names) != n:
            raise ValueError("name table length does not match node count")

    @property
    def node_count(self) -> int:
        return self.arena.node_count

    def with_colors(self, colors: Iterable[int]) -> "ParityGame":
        return ParityGame(self.arena.with_colors(colors), self.owners, self.names)


@dataclass
class Solution:
    """Winner labeling plus positional strategies for both players.

    ``strategy0`` maps each node of ``W0`` owned by player 0 to the chosen
    successor; ``strategy1`` likewise for player 1 on ``W1``.  Nodes in the
    opponent's region carry no strategy entry.
    """

    winner: tuple[int, ...]
    strategy0: dict[NodeId, NodeId] = field(default_factory=dict)
    strategy1: dict[NodeId, NodeId] = field(default_factory=dict)

    def region(self, player: int) -> frozenset[NodeId]:
        return frozenset(v for v, w in enumerate(self.winner) if w == player)


def cycle_color(arena: Arena, nodes: Sequence[NodeId]) -> int:
    """Minimal color on a cycle, given as the sequence of its nodes.

    The sequence must traverse edges of the arena, including the closing
    edge from the last node back to the first; anything else is rejected.
    """
    if not nodes:
        raise ValueError("empty node sequence is not a cycle")
    for a, b in zip(nodes, list(nodes[1:]) + [nodes[0]]):
        if not arena.has_edge(a, b):
            raise ValueError(f"({a}, {b}) is not an edge; input is not a cycle")
    return min(arena.colors[v] for v in nodes)


def index(coloring: Sequence[int]) -> int:
    """Index of a coloring: the maximal color in use."""
    if not coloring:
        raise ValueError("coloring is empty")
    return max(coloring)
