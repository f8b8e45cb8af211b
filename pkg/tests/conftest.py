import random

import pytest

from superbethe.signature import AlgebraSignature
from superbethe.verify import random_family


@pytest.fixture
def rng():
    return random.Random(20240611)


def family(rng, m, n, r, avoid=()):
    return random_family(rng, AlgebraSignature(m, n), r, 1, avoid)


def points(*families):
    return [x for f in families for s in f.sets for x in s]
