import random

import pytest

from hopfcheck.spanback import frobenius_monoidale, random_cell as sp_rand, \
    random_two_cell as sp_rand2
from hopfcheck.gvecback import (frobenius_commutative, frobenius_weak,
                                random_cell as gv_rand,
                                random_two_cell as gv_rand2)


def context_rows():
    return [
        ("span2", frobenius_monoidale((0, 1)), sp_rand, sp_rand2),
        ("span3", frobenius_monoidale((0, 1, 2)), sp_rand, sp_rand2),
        ("comm1", frobenius_commutative(1), gv_rand, gv_rand2),
        ("comm2", frobenius_commutative(2), gv_rand, gv_rand2),
        ("weak2", frobenius_weak(2), gv_rand, gv_rand2),
    ]


@pytest.fixture(params=context_rows(), ids=lambda row: row[0])
def ctx_row(request):
    return request.param


@pytest.fixture
def rng():
    return random.Random(20240814)
