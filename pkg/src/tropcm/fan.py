"""Cones C_A, the generic fan, epsilon vectors, and tropical membership.

A cone is stored combinatorially as its subset A of variable indices
(0-based internally, 1-based on every external surface): C_A is the set
of weight vectors whose coordinates outside A all attain the minimum.
All membership tests are exact rational comparisons.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .groebner import contains_monomial, initial_ideal


@dataclass(frozen=True)
class ConeCA:
    """C_A = {w : w_i = min(w) for all i outside A}; dimension |A| + 1."""

    A: frozenset
    n: int

    def __post_init__(self):
        if any(i < 0 or i >= self.n for i in self.A):
            raise ValueError("cone subset out of range")

    @property
    def complement(self):
        return frozenset(range(self.n)) - self.A

    def label(self):
        """1-based sorted subset, the external name of the cone."""
        return tuple(sorted(i + 1 for i in self.A))

    def __repr__(self):
        return f"C_{{{','.join(map(str, self.label()))}}}" if self.A else "C_{}"


def cone_contains(cone: ConeCA, w, interior=False) -> bool:
    """Closed containment; ``interior`` restricts to the relative interior."""
    if len(w) != cone.n:
        raise ValueError("weight vector length mismatch")
    w = [Fraction(x) for x in w]
    lo = min(w)
    if any(w[i] != lo for i in cone.complement):
        return False
    if interior and any(w[i] <= lo for i in cone.A):
        return False
    return True


def cone_of(w) -> ConeCA:
    """The unique cone whose relative interior contains w."""
    w = [Fraction(x) for x in w]
    lo = min(w)
    return ConeCA(frozenset(i for i, x in enumerate(w) if x > lo), len(w))


def epsilon_vector(A, n):
    """(0,1)-vector with ones exactly on A."""
    A = set(A)
    if any(i < 0 or i >= n for i in A):
        raise ValueError("subset out of range")
    return tuple(Fraction(1) if i in A else Fraction(0) for i in range(n))


def sample_interior(cone: ConeCA, seed: int):
    """Deterministic rational point of the relative interior, min entry 0."""
    rng = random.Random(("interior", tuple(sorted(cone.A)), cone.n, seed).__repr__())
    w = [Fraction(0)] * cone.n
    for i in sorted(cone.A):
        w[i] = Fraction(rng.randint(1, 9))
    if len(cone.A) == cone.n:
        # A = [n] leaves no coordinate pinned at the minimum; renormalize
        lo = min(w)
        w = [x - lo for x in w]
    return tuple(w)


@dataclass(frozen=True)
class GenericFan:
    """The fan with maximal cones C_A, |A^c| = n - d + 1."""

    n: int
    d: int

    def __post_init__(self):
        if not 1 <= self.d <= self.n:
            raise ValueError("need 1 <= d <= n")

    def stratum(self, codim=0):
        return enumerate_generic_fan(self.n, self.d, codim)

    @property
    def maximal_cones(self):
        return self.stratum(0)


def enumerate_generic_fan(n, d, codim=0):
    """All cones C_A with |A^c| = n - d + 1 + codim, deterministically ordered."""
    if not 1 <= d <= n:
        raise ValueError("need 1 <= d <= n")
    if not 0 <= codim <= d - 1:
        raise ValueError("codimension must lie in [0, d-1]")
    size_Ac = n - d + 1 + codim
    size_A = n - size_Ac
    return [ConeCA(frozenset(A), n)
            for A in combinations(range(n), size_A)]


def trop_membership(w, ideal, cache=None) -> bool:
    """w lies in Trop(I): the initial ideal contains no monomial."""
    if ideal.is_zero():
        return True
    inw = initial_ideal(w, ideal, cache)
    return contains_monomial(inw, cache) is None


def groebner_cone_equal(u, w, ideal, cache=None) -> bool:
    """Same initial ideal at u and w (reduced-basis equality)."""
    return initial_ideal(u, ideal, cache) == initial_ideal(w, ideal, cache)
