import time

import pytest

from qows import Quasigroup, algebraic_probe, census_order4, random_latin

from data import REFERENCE_SQUARE, BENCHMARK_SEEDS_CONSUMED


@pytest.fixture(scope="session")
def ref_square():
    return Quasigroup(REFERENCE_SQUARE)


@pytest.fixture(scope="session")
def ref_square_file(tmp_path_factory):
    path = tmp_path_factory.mktemp("qg") / "refsquare.qg"
    path.write_text("4\n2 1 0 3\n3 0 1 2\n1 2 3 0\n0 3 2 1\n")
    return str(path)


@pytest.fixture(scope="session")
def census_default():
    """One full default census per test session, with its wall time."""
    t0 = time.perf_counter()
    report = census_order4()
    return report, time.perf_counter() - t0


@pytest.fixture(scope="session")
def benchmark_squares():
    """100 random order-4 squares that are neither commutative nor
    associative, generated from consecutive seeds."""
    squares = []
    seed = 0
    while len(squares) < 100:
        q = random_latin(4, seed)
        profile = algebraic_probe(q)
        if not profile.commutative and not profile.associative:
            squares.append(q)
        seed += 1
    assert seed == BENCHMARK_SEEDS_CONSUMED
    return squares
