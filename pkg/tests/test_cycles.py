"""Cycle detection machinery: SCCs, budgeted search, enumeration."""

from __future__ import annotations

import pytest
from hypothesis import given, settings

from rabinindex.arena import Arena, cycle_color
from rabinindex.cycles import (
    CycleAnswer,
    NodeCapExceeded,
    SearchBudget,
    cycle_through_with_color,
    cycle_with_max_color,
    enumerate_simple_cycles,
    simple_cycle_through_with_color,
    simple_cycle_with_max_color,
    strongly_connected_subsets,
    tarjan_scc,
)

from helpers import arenas


def test_cycle_answer_is_not_a_bool():
    with pytest.raises(TypeError):
        bool(CycleAnswer.YES)
    assert CycleAnswer.YES is not CycleAnswer.NO


def test_search_budget_spend():
    budget = SearchBudget(limit=2)
    assert budget.spend()
    assert budget.spend()
    assert not budget.spend()


def test_tarjan_two_components():
    # 0 <-> 1 feeding an isolated sink component {2}
    scc = tarjan_scc(((1,), (0, 2), (2,)), None)
    comp0 = scc.component_of[0]
    assert comp0 == scc.component_of[1] != scc.component_of[2]
    assert scc.nontrivial[comp0]
    assert scc.nontrivial[scc.component_of[2]]  # 2 has a self-loop
    assert sorted(len(m) for m in scc.members) == [1, 2]


def test_tarjan_allowed_mask():
    scc = tarjan_scc(((1,), (0,)), [True, False])
    assert scc.component_of[1] == -1
    assert scc.component_of[0] >= 0
    assert not scc.nontrivial[scc.component_of[0]]


def test_tarjan_singleton_self_loop():
    scc = tarjan_scc(((0,),), None)
    assert scc.nontrivial == (True,)


def test_simple_cycle_through_fig1(fig1_arena):
    # v4 sits on the 2-cycle with v3 (colors 2, 1).
    assert simple_cycle_through_with_color(fig1_arena, None, 4, 1) is CycleAnswer.YES
    # v1 reaches color 2 through the v1 v2 cycle.
    assert simple_cycle_through_with_color(fig1_arena, None, 1, 2) is CycleAnswer.YES
    # No simple cycle through v0 has minimum exactly 2: its cycles have
    # minima 3 (v0 v1) and 1 (the long cycle).
    assert simple_cycle_through_with_color(fig1_arena, None, 0, 2) is CycleAnswer.NO


def test_simple_cycle_budget_exhaustion(fig1_arena):
    answer = simple_cycle_through_with_color(
        fig1_arena, None, 0, 2, budget=SearchBudget(limit=1)
    )
    assert answer is CycleAnswer.EXHAUSTED


def test_query_validation(fig1_arena):
    with pytest.raises(ValueError, match="out of range"):
        simple_cycle_through_with_color(fig1_arena, None, 9, 0)
    with pytest.raises(ValueError, match="negative"):
        simple_cycle_through_with_color(fig1_arena, None, 0, -1)
    with pytest.raises(ValueError, match="exceeds"):
        simple_cycle_through_with_color(fig1_arena, None, 3, 2)


def test_max_color_checks(fig1_arena):
    assert simple_cycle_with_max_color(fig1_arena)  # v0 v1, both color 3
    assert cycle_with_max_color(fig1_arena)
    # On a 2-cycle colored (2, 1) the maximum 2 is on no cycle of color 2.
    lopsided = Arena(((1,), (0,)), (2, 1))
    assert not simple_cycle_with_max_color(lopsided)
    assert not cycle_with_max_color(lopsided)


def test_cycle_through_with_color_closed_walks(aidiff_arena):
    # The covering walk y -> x -> z -> x -> y has minimum 1.
    assert cycle_through_with_color(aidiff_arena, None, 2, 1)
    # But no *simple* cycle through z has minimum 1.
    assert (
        simple_cycle_through_with_color(aidiff_arena, None, 2, 1) is CycleAnswer.NO
    )


def test_enumerate_simple_cycles_fig1(fig1_arena):
    cycles = set(enumerate_simple_cycles(fig1_arena))
    assert cycles == {(0, 1), (1, 2), (3, 4), (0, 4, 3, 2, 1)}


def test_enumerate_respects_cap():
    big = Arena.from_lists(
        [[(v + 1) % 16] for v in range(16)], [0] * 16
    )
    with pytest.raises(NodeCapExceeded):
        list(enumerate_simple_cycles(big))
    with pytest.raises(NodeCapExceeded):
        list(strongly_connected_subsets(big))


def test_strongly_connected_subsets_aidiff(aidiff_arena):
    subsets = set(strongly_connected_subsets(aidiff_arena))
    assert subsets == {
        frozenset({0, 1}),
        frozenset({0, 2}),
        frozenset({0, 1, 2}),
    }


def test_strongly_connected_subsets_self_loop():
    arena = Arena(((0,),), (0,))
    assert set(strongly_connected_subsets(arena)) == {frozenset({0})}


@given(arenas(max_nodes=6))
@settings(max_examples=60)
def test_enumerated_cycles_are_cycles(arena):
    for cycle in enumerate_simple_cycles(arena):
        assert len(set(cycle)) == len(cycle)
        cycle_color(arena, cycle)  # raises if any edge is missing
        assert cycle[0] == min(cycle)


@given(arenas(max_nodes=6))
@settings(max_examples=60)
def test_simple_cycle_sets_are_strongly_connected_subsets(arena):
    subsets = set(strongly_connected_subsets(arena))
    for cycle in enumerate_simple_cycles(arena):
        assert frozenset(cycle) in subsets


@given(arenas(max_nodes=7, max_color=6, allow_self_loops=True))
@settings(max_examples=80)
def test_max_color_check_agreement(arena):
    assert simple_cycle_with_max_color(arena) == cycle_with_max_color(arena)


@given(arenas(max_nodes=6, max_color=4))
@settings(max_examples=60)
def test_simple_cycle_query_matches_enumeration(arena):
    cycles = list(enumerate_simple_cycles(arena))
    for v in range(arena.node_count):
        for gamma in range(arena.colors[v] + 1):
            expected = any(
                v in cycle and cycle_color(arena, cycle) == gamma for cycle in cycles
            )
            answer = simple_cycle_through_with_color(arena, None, v, gamma)
            assert (answer is CycleAnswer.YES) == expected
