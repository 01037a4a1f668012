import pytest

from heckekit.combinatorics.permutations import Permutation
from heckekit.laurent import LaurentPoly


@pytest.fixture(scope="session")
def s3():
    """Elements of S_3 by their reduced words, ``s = s1`` and ``t = s2``."""
    word = lambda *w: Permutation.from_word(3, w)
    return {
        "e": word(),
        "s": word(1),
        "t": word(2),
        "st": word(1, 2),
        "ts": word(2, 1),
        "sts": word(1, 2, 1),
    }


@pytest.fixture
def lp():
    return LaurentPoly.parse
