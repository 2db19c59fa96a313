import os
import random
import sys
from fractions import Fraction

import pytest

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from hopfdeform.lie import load_lie_algebra
from hopfdeform.tensor import TensorPoly
from hopfdeform.uea import UEElem, monomial_degree

DATA = os.path.join(os.path.dirname(__file__), "..", "src", "hopfdeform", "data")


def algebra(name):
    return load_lie_algebra(os.path.join(DATA, f"{name}.json"))


@pytest.fixture(scope="session")
def sl2():
    return algebra("sl2")


@pytest.fixture(scope="session")
def sl3():
    return algebra("sl3")


@pytest.fixture(scope="session")
def sl2_sl2():
    return algebra("sl2_sl2")


@pytest.fixture(scope="session")
def abelian2():
    return algebra("abelian2")


@pytest.fixture(scope="session")
def abelian3():
    return algebra("abelian3")


@pytest.fixture(scope="session")
def heisenberg():
    return algebra("heisenberg3")


def random_monomial(rng, dim, max_degree):
    deg = rng.randint(0, max_degree)
    mono = [0] * dim
    for _ in range(deg):
        mono[rng.randrange(dim)] += 1
    return tuple(mono)


def random_ue(rng, L, max_degree=3, terms=3, allow_zero_degree=True):
    out = {}
    for _ in range(terms):
        m = random_monomial(rng, L.dim, max_degree)
        if not allow_zero_degree and monomial_degree(m) == 0:
            continue
        out[m] = Fraction(rng.randint(-4, 4), rng.randint(1, 3))
    return UEElem(L, out)


def random_tensor(rng, L, arity, max_degree=3, terms=3):
    out = {}
    for _ in range(terms):
        key = tuple(random_monomial(rng, L.dim, max_degree) for _ in range(arity))
        if sum(monomial_degree(m) for m in key) > max_degree:
            continue
        out[key] = Fraction(rng.randint(-4, 4), rng.randint(1, 3))
    return TensorPoly(L, arity, out)


@pytest.fixture
def rng():
    return random.Random(20240831)


@pytest.fixture(scope="session")
def sl2_assoc4(sl2):
    from hopfdeform.lie import dj_r_matrix
    from hopfdeform.solvers import associator_for_twist

    return associator_for_twist(sl2, dj_r_matrix(sl2), 4)


@pytest.fixture(scope="session")
def sl2_twist4(sl2, sl2_assoc4):
    from hopfdeform.lie import dj_r_matrix
    from hopfdeform.solvers import solve_twist

    return solve_twist(sl2, dj_r_matrix(sl2), sl2_assoc4, 4)


@pytest.fixture(scope="session")
def sl2_qt3(sl2):
    from hopfdeform.solvers import solve_quasitriangular
    from hopfdeform.tensor import casimir_tensor

    return solve_quasitriangular(sl2, casimir_tensor(sl2), 3)
