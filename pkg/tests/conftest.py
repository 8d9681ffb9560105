from __future__ import annotations

from pathlib import Path

import pytest

from rabinindex.arena import Arena, ParityGame
from rabinindex.generators import gen_hardness_gadget
from rabinindex.pgsolver import parse_pgsolver

DATA_DIR = Path(__file__).parent / "data"

# Five-node running example: two 2-cycles v0<->v1, v1<->v2 hang off a long
# cycle v0 v4 v3 v2 v1; its exact Rabin index is 2 while the abstract
# reduction cannot improve on the original index 3.
FIG1_TEXT = """\
parity 4;
0 3 1 1,4 "v0";
1 3 0 0,2 "v1";
2 2 1 1 "v2";
3 1 1 2,4 "v3";
4 2 0 3 "v4";
"""


@pytest.fixture(scope="session")
def data_dir() -> Path:
    return DATA_DIR


@pytest.fixture(scope="session")
def fig1_text() -> str:
    return FIG1_TEXT


@pytest.fixture(scope="session")
def fig1_game() -> ParityGame:
    return parse_pgsolver(FIG1_TEXT)


@pytest.fixture(scope="session")
def fig1_arena(fig1_game: ParityGame) -> Arena:
    return fig1_game.arena


@pytest.fixture(scope="session")
def chain_arena() -> Arena:
    """Chain of 2-cycles with colors 0..6; takes several reduction rounds."""
    n = 7
    successors = []
    for i in range(n):
        succ = []
        if i > 0:
            succ.append(i - 1)
        if i < n - 1:
            succ.append(i + 1)
        successors.append(tuple(succ))
    return Arena(tuple(successors), tuple(range(n)))


@pytest.fixture(scope="session")
def aidiff_arena() -> Arena:
    """Three nodes x<->y, x<->z where simple cycles cannot tell two
    colorings apart but one closed walk can."""
    return Arena(((1, 2), (0,), (0,)), (2, 1, 2))


@pytest.fixture(scope="session")
def aidiff_other() -> tuple[int, ...]:
    return (2, 1, 0)


@pytest.fixture(scope="session")
def triangle_gadget() -> Arena:
    """Spine gadget over the triangle base s -> u -> t -> s with k = 2.

    The base has a simple cycle through s and t, yet the gadget's Rabin
    index is 1: interior base nodes are colored 0, so the long cycle has
    color 0 and never anchors t at k - 1.
    """
    base = Arena(((1,), (2,), (0,)), (0, 0, 0))
    return gen_hardness_gadget(base, s=0, t=2, k=2)
