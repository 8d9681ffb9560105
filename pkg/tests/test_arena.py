"""Arena and game construction invariants."""

from __future__ import annotations

import pytest
from hypothesis import given

from rabinindex.arena import Arena, ParityGame, Solution, cycle_color, index

from helpers import arenas


def test_from_lists_builds_tuples():
    arena = Arena.from_lists([[1], [0]], [0, 1])
    assert arena.successors == ((1,), (0,))
    assert arena.colors == (0, 1)
    assert arena.node_count == 2


def test_rejects_empty_arena():
    with pytest.raises(ValueError, match="at least one node"):
        Arena((), ())


def test_rejects_dead_end():
    with pytest.raises(ValueError, match="total"):
        Arena(((1,), ()), (0, 0))


def test_rejects_out_of_range_successor():
    with pytest.raises(ValueError, match="out of range"):
        Arena(((2,), (0,)), (0, 0))


def test_rejects_duplicate_successor():
    with pytest.raises(ValueError, match="duplicate"):
        Arena(((1, 1), (0,)), (0, 0))


def test_rejects_negative_color():
    with pytest.raises(ValueError, match="negative color"):
        Arena(((1,), (0,)), (0, -1))


def test_rejects_color_length_mismatch():
    with pytest.raises(ValueError, match="2 nodes"):
        Arena(((1,), (0,)), (0,))


def test_with_colors_keeps_graph():
    arena = Arena(((1,), (0,)), (0, 1))
    other = arena.with_colors((4, 5))
    assert other.successors is arena.successors
    assert other.colors == (4, 5)


def test_has_edge(fig1_arena):
    assert fig1_arena.has_edge(0, 4)
    assert not fig1_arena.has_edge(4, 0)


def test_predecessors_fig1(fig1_arena):
    assert fig1_arena.predecessors == ((1,), (0, 2), (1, 3), (4,), (0, 3))


@given(arenas(max_nodes=7))
def test_predecessors_invert_successors(arena):
    for v in range(arena.node_count):
        for w in arena.successors[v]:
            assert v in arena.predecessors[w]
    for w in range(arena.node_count):
        for v in arena.predecessors[w]:
            assert arena.has_edge(v, w)


def test_game_owner_validation(fig1_arena):
    with pytest.raises(ValueError, match="owner"):
        ParityGame(fig1_arena, (0, 1, 2, 0, 1))
    with pytest.raises(ValueError, match="entries"):
        ParityGame(fig1_arena, (0, 1))


def test_game_name_table_length(fig1_arena):
    with pytest.raises(ValueError, match="name table"):
        ParityGame(fig1_arena, (0,) * 5, names=("a",))


def test_solution_region():
    solution = Solution(winner=(1, 0, 0, 1, 1))
    assert solution.region(0) == {1, 2}
    assert solution.region(1) == {0, 3, 4}


def test_cycle_color(fig1_arena):
    assert cycle_color(fig1_arena, [0, 1]) == 3
    assert cycle_color(fig1_arena, [0, 4, 3, 2, 1]) == 1
    with pytest.raises(ValueError, match="not an edge"):
        cycle_color(fig1_arena, [0, 2])
    with pytest.raises(ValueError, match="empty"):
        cycle_color(fig1_arena, [])


def test_index():
    assert index((0, 3, 2)) == 3
    assert index((0,)) == 0
    with pytest.raises(ValueError):
        index(())
