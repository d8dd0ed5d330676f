from pathlib import Path

import pytest

from parsigame import build_game, validate_free_type_rep

GOLDEN_DIR = Path(__file__).parent / "golden"


@pytest.fixture
def golden():
    def read(name: str) -> str:
        return (GOLDEN_DIR / name).read_text()

    return read


@pytest.fixture
def game3122():
    return build_game(validate_free_type_rep((3, 1, 2, 2)))


@pytest.fixture
def game3113():
    return build_game(validate_free_type_rep((3, 1, 1, 3)))


@pytest.fixture
def game3():
    return build_game(validate_free_type_rep((3,)))


@pytest.fixture
def game22():
    return build_game(validate_free_type_rep((2, 2)))
