"""Shared instance corpus: hypersurfaces and their seeded generic versions."""

import pytest

from tropcm import (Ideal, apply_change, default_ring, parse_polynomial,
                    random_gl)

SEED = 42
BOUND = 100


def ideal_from(ring, *texts):
    return Ideal(ring, [parse_polynomial(t, ring) for t in texts])


@pytest.fixture(scope="session")
def ring3():
    return default_ring(3)


@pytest.fixture(scope="session")
def ring4():
    return default_ring(4)


@pytest.fixture(scope="session")
def ring6():
    return default_ring(6)


@pytest.fixture(scope="session")
def e_lin(ring3):
    return ideal_from(ring3, "x1 + x2 + x3")


@pytest.fixture(scope="session")
def e_conic(ring3):
    return ideal_from(ring3, "x1*x3 - x2^2")


@pytest.fixture(scope="session")
def e_quad4(ring4):
    text = " + ".join(f"x{i}*x{j}" for i in range(1, 5) for j in range(i, 5))
    return ideal_from(ring4, text)


@pytest.fixture(scope="session")
def e_pluck(ring6):
    return ideal_from(ring6, "x1*x6 - x2*x5 + x3*x4")


def _generic(ideal, seed=SEED, bound=BOUND):
    g = random_gl(ideal.ring.nvars, seed, bound)
    return apply_change(g, ideal)


@pytest.fixture(scope="session")
def e_lin_generic(e_lin):
    return _generic(e_lin)


@pytest.fixture(scope="session")
def e_conic_generic(e_conic):
    return _generic(e_conic)


@pytest.fixture(scope="session")
def e_quad4_generic(e_quad4):
    return _generic(e_quad4)


@pytest.fixture(scope="session")
def e_pluck_generic(e_pluck):
    return _generic(e_pluck)


@pytest.fixture(scope="session")
def corpus(e_lin, e_conic, e_quad4, e_pluck):
    return {"e-lin": e_lin, "e-conic": e_conic,
            "e-quad4": e_quad4, "e-pluck": e_pluck}


@pytest.fixture(scope="session")
def generic_corpus(e_lin_generic, e_conic_generic, e_quad4_generic,
                   e_pluck_generic):
    return {"e-lin": e_lin_generic, "e-conic": e_conic_generic,
            "e-quad4": e_quad4_generic, "e-pluck": e_pluck_generic}
