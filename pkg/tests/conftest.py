import pytest

from permpoly import Polynomial, make_field, make_fqu, make_zmod

# q -> (p, n) for every field order the suite exercises
FIELD_PARAMS = {
    3: (3, 1),
    4: (2, 2),
    5: (5, 1),
    7: (7, 1),
    8: (2, 3),
    9: (3, 2),
    11: (11, 1),
    13: (13, 1),
}


def field_of_order(q):
    p, n = FIELD_PARAMS[q]
    return make_field(p, n)


def random_poly(ring, max_degree, rng):
    elems = ring.elements()
    degree = rng.randrange(max_degree + 1)
    return Polynomial(ring, [rng.choice(elems) for _ in range(degree + 1)])


@pytest.fixture
def f3():
    return make_field(3)


@pytest.fixture
def f4():
    return make_field(2, 2)


@pytest.fixture
def f5():
    return make_field(5)


@pytest.fixture
def z9():
    return make_zmod(3, 2)


@pytest.fixture
def z4():
    return make_zmod(2, 2)


@pytest.fixture
def f3u2():
    return make_fqu(make_field(3), 2)
