from __future__ import annotations

import pytest

from engeltree import catalog


@pytest.fixture
def hanoi():
    return catalog.hanoi()


@pytest.fixture
def grig():
    return catalog.grigorchuk()


@pytest.fixture
def gs3():
    return catalog.gupta_sidki(3)
