from pathlib import Path

import pytest

DATA_DIR = Path(__file__).parent / "data"


@pytest.fixture
def petersen():
    from bncheck import read_edge_list

    return read_edge_list((DATA_DIR / "petersen.col").read_text())


@pytest.fixture
def petersen_text():
    return (DATA_DIR / "petersen.col").read_text()
