from fractions import Fraction

import pytest

from tropcm import (apply_change, default_ring, genericity_audit,
                    hilbert_series_quotient, inverse_change, random_gl)
from tropcm.fields import QQ, PrimeField
from tropcm.generic import LinearChange, _determinant

from conftest import ideal_from

R3 = default_ring(3)


def test_random_gl_deterministic():
    a = random_gl(4, seed=9, bound=50)
    b = random_gl(4, seed=9, bound=50)
    assert a.matrix == b.matrix
    assert random_gl(4, seed=10, bound=50).matrix != a.matrix


def test_random_gl_single_variable():
    g = random_gl(1, seed=0, bound=5)
    assert g.matrix[0][0] != 0


def test_random_gl_always_invertible():
    for seed in range(8):
        g = random_gl(5, seed=seed, bound=3)
        assert _determinant(g.matrix, QQ) != 0


def test_random_gl_over_prime_field():
    F = PrimeField(7)
    g = random_gl(3, seed=1, bound=100, field=F)
    assert _determinant(g.matrix, F)


def test_random_gl_bound_validation():
    with pytest.raises(ValueError):
        random_gl(3, seed=0, bound=1)


def test_apply_identity_and_permutation():
    I = ideal_from(R3, "x1*x3 - x2^2")
    ident = LinearChange(tuple(tuple(Fraction(int(i == j)) for j in range(3))
                               for i in range(3)), 0, 2)
    assert apply_change(ident, I) == I
    # x1 -> x2, x2 -> x3, x3 -> x1
    perm = LinearChange(((Fraction(0), Fraction(1), Fraction(0)),
                         (Fraction(0), Fraction(0), Fraction(1)),
                         (Fraction(1), Fraction(0), Fraction(0))), 0, 2)
    assert apply_change(perm, I) == ideal_from(R3, "x2*x1 - x3^2")


def test_change_preserves_hilbert_series(e_pluck, e_pluck_generic):
    assert hilbert_series_quotient(e_pluck) == hilbert_series_quotient(e_pluck_generic)


def test_inverse_round_trip(e_quad4):
    g = random_gl(4, seed=3, bound=20)
    there = apply_change(g, e_quad4)
    back = apply_change(inverse_change(g), there)
    assert back == e_quad4


def test_audit_untransformed_conic_passes():
    I = ideal_from(R3, "x1*x3 - x2^2")
    audit = genericity_audit(I, maxA=1)
    assert audit.passed
    assert {c.A for c in audit.checks} == {(1,), (2,), (3,)}
    assert all(c.expected_dim == 1 for c in audit.checks)


def test_audit_monomial_hypersurface():
    I = ideal_from(R3, "x1*x2")
    audit = genericity_audit(I, maxA=1)
    by_A = {c.A: c for c in audit.checks}
    assert by_A[(3,)].ok and by_A[(3,)].actual_dim == 1


def test_audit_flags_failures_monotonically():
    # x1 is a generator, so cutting by it cannot drop the dimension
    R4 = default_ring(4)
    I = ideal_from(R4, "x1")
    audit = genericity_audit(I, maxA=2)
    by_A = {c.A: c for c in audit.checks}
    assert not by_A[(1,)].ok
    for j in (2, 3, 4):
        assert not by_A[(1, j)].ok
    assert not audit.passed
    assert audit.failures


def test_audit_sampling_is_deterministic(e_pluck_generic):
    a = genericity_audit(e_pluck_generic, maxA=4, max_subsets=12, seed=5)
    b = genericity_audit(e_pluck_generic, maxA=4, max_subsets=12, seed=5)
    assert [c.A for c in a.checks] == [c.A for c in b.checks]
    assert len(a.checks) == 12
    assert a.passed


def test_audit_maxa_bound(e_conic):
    with pytest.raises(ValueError):
        genericity_audit(e_conic, maxA=2)  # d - 1 == 1


def test_audit_report_shape(e_conic_generic):
    audit = genericity_audit(e_conic_generic, maxA=1, seed=2)
    data = audit.to_dict()
    assert data["pass"] is True
    assert {"A", "expected_dim", "actual_dim", "pass"} <= set(data["checks"][0])
