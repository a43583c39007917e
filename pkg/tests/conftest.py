from __future__ import annotations

import pytest

from permwords import enumerate_avoiders, mark

PATTERN_1324 = (1, 3, 2, 4)
CORPUS_MAX_N = 9
MODES = ("plain", "rule4prime")


@pytest.fixture(scope="session")
def avoiders_by_n():
    """All 1324-avoiders up to length 9, keyed by length."""
    return {
        n: tuple(enumerate_avoiders(n, PATTERN_1324))
        for n in range(CORPUS_MAX_N + 1)
    }


@pytest.fixture(scope="session")
def marked_by_mode(avoiders_by_n):
    """The same corpus, marked under both coloring modes."""
    return {
        mode: {
            n: tuple(mark(p, mode=mode) for p in ps)
            for n, ps in avoiders_by_n.items()
        }
        for mode in MODES
    }
