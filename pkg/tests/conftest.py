"""Pytest configuration and shared fixtures."""

import shutil
import tempfile
from pathlib import Path
from typing import Generator

import pytest
from loguru import logger

from kneserlab.coloring import Coloring, c1_coloring, ck1_coloring
from kneserlab.config import CONFIG_FILE_ENV, use_config_file


@pytest.fixture(autouse=True)
def fresh_settings(monkeypatch) -> Generator[None, None, None]:
    """Re-read settings for every test, ignoring any config file override."""
    monkeypatch.delenv(CONFIG_FILE_ENV, raising=False)
    use_config_file(None)
    yield
    use_config_file(None)


@pytest.fixture(autouse=True)
def quiet_logger() -> Generator[None, None, None]:
    """Keep loguru output out of test reports."""
    logger.remove()
    yield
    logger.remove()


@pytest.fixture
def temp_dir() -> Generator[Path, None, None]:
    """Create a temporary directory for tests."""
    temp_path = Path(tempfile.mkdtemp())
    yield temp_path
    shutil.rmtree(temp_path)


@pytest.fixture
def c1_6_2() -> Coloring:
    """The max-based 4-coloring of the (6, 2)-Kneser graph."""
    return c1_coloring(6, 2)


@pytest.fixture
def ck1_9_2() -> Coloring:
    """The block-majority 7-coloring of the (9, 2)-Kneser graph."""
    return ck1_coloring(9, 2)


@pytest.fixture
def monochromatic_4_2() -> Coloring:
    """Every vertex of the (4, 2)-Kneser graph colored 1; three violations."""
    return Coloring(n=4, k=2, m=1, colors=(1,) * 6)



FANO_LINES = ((1, 2, 3), (1, 4, 5), (1, 6, 7), (2, 4, 6), (2, 5, 7), (3, 4, 7), (3, 5, 6))


@pytest.fixture
def fano_7_2() -> Coloring:
    """Proper 7-coloring of the (7, 2)-Kneser graph by the lines of the Fano plane.

    Every class is a triangle {ab, ac, bc}, so none is star-shaped.
    """

    def line_of(pair: tuple[int, ...]) -> int:
        return next(i for i, line in enumerate(FANO_LINES, start=1) if set(pair) <= set(line))

    return Coloring.from_rule(7, 2, 7, line_of)
