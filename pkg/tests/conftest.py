import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from oneplanar.builder import cube, optimal_fixture, random_drawing  # noqa: E402
from oneplanar.drawing import OnePlanarDrawing  # noqa: E402
from oneplanar.graph import Graph  # noqa: E402


def k4_with_crossing() -> OnePlanarDrawing:
    """K4 drawn as the 4-cycle 0123 with crossing diagonals 02 and 13."""
    g = Graph(4, ((0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (1, 3)))
    return OnePlanarDrawing(g, ((4, 5),))


def plane_cube() -> OnePlanarDrawing:
    return OnePlanarDrawing(cube())


def optimal_corpus() -> dict[str, OnePlanarDrawing]:
    out = {"cube": optimal_fixture("cube")}
    for n in range(3, 9):
        out[f"pdw{n}"] = optimal_fixture("pseudo_double_wheel", n)
    return out


def random_drawings(count: int = 200, seed: int = 7) -> list[OnePlanarDrawing]:
    rng = random.Random(seed)
    return [
        random_drawing(
            rng,
            rng.randint(3, 16),
            extra_steps=rng.randint(0, 15),
            crossing_weight=rng.choice((0.3, 0.6, 0.9)),
        )
        for _ in range(count)
    ]


def drawing_corpus() -> dict[str, OnePlanarDrawing]:
    out = {"plane_cube": plane_cube(), "k4_crossing": k4_with_crossing()}
    out.update(optimal_corpus())
    return out


@pytest.fixture(scope="session")
def cube_optimal():
    return optimal_fixture("cube")


@pytest.fixture(scope="session")
def k4x():
    return k4_with_crossing()
