from pathlib import Path

import pytest

from discern import ObjectSet, parse_ranking, partition_from_labels

DATA_DIR = Path(__file__).parent / "data"
GOLDEN_DIR = Path(__file__).parent / "golden"


@pytest.fixture
def data_dir():
    return DATA_DIR


@pytest.fixture
def golden_dir():
    return GOLDEN_DIR


@pytest.fixture
def john():
    return partition_from_labels(
        {"egg1": 60, "egg2": 63, "egg3": 63, "egg4": 61, "egg5": 61}
    )


@pytest.fixture
def jack():
    return partition_from_labels(
        {"egg1": 60.2, "egg2": 62.8, "egg3": 63.1, "egg4": 61.1, "egg5": 61.1}
    )


@pytest.fixture
def alternatives():
    return ObjectSet(("x1", "x2", "x3", "x4", "x5"))


@pytest.fixture
def expert1(alternatives):
    return parse_ranking("x1 > x2 ~ x3 > x4 ~ x5", alternatives)


@pytest.fixture
def expert2(alternatives):
    return parse_ranking("x1 > x2 ~ x3 ~ x4 > x5", alternatives)


@pytest.fixture
def expert3(alternatives):
    return parse_ranking("x1 ~ x2 > x3 > x4 > x5", alternatives)


@pytest.fixture
def cassie():
    return partition_from_labels({"x1": 1, "x2": 2, "x3": 2, "x4": 3})


@pytest.fixture
def cassie_blocks():
    return [ObjectSet(("x1", "x4")), ObjectSet(("x2", "x3"))]
