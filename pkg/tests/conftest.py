"""Shared fixtures: seeded corpora and builtin ideals used across the suites."""
import pytest

from prunres.ideals import (
    cycle_ideal,
    example_4_1_ideal,
    parse_ideal,
    path_ideal,
    random_corpus,
    rp2_ideal,
)

CORPUS_SEED = 20250808


@pytest.fixture(scope="session")
def corpus200():
    return random_corpus(200, seed=CORPUS_SEED)


@pytest.fixture(scope="session")
def corpus40():
    return random_corpus(40, seed=CORPUS_SEED + 1)


@pytest.fixture(scope="session")
def squarefree_corpus():
    return random_corpus(60, seed=CORPUS_SEED + 2, squarefree=True)


@pytest.fixture(scope="session")
def builtins():
    return {
        "path:5": path_ideal(5),
        "cycle:5": cycle_ideal(5),
        "rp2": rp2_ideal(),
        "example-4-1": example_4_1_ideal(),
    }


@pytest.fixture(scope="session")
def path5():
    return path_ideal(5)


@pytest.fixture(scope="session")
def cycle5():
    return cycle_ideal(5)


def quick(text: str):
    return parse_ideal(text)
