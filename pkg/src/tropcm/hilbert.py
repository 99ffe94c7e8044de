"""Hilbert series of quotients by monomial ideals, via pivot recursion.

A series is stored as an integer numerator N(t) over (1-t)^n.  Equality,
Krull dimension (pole order at t = 1), and Hilbert function values are
all derived from the reduced form, where every common factor of (1-t) has
been cancelled and N(1) != 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .polynomials import mono_degree, mono_divides, mono_gcd


def minimalize(gens):
    """Minimal generating set of the monomial ideal spanned by ``gens``."""
    gens = sorted(set(gens), key=lambda m: (mono_degree(m), m))
    out = []
    for m in gens:
        if not any(mono_divides(g, m) for g in out):
            out.append(m)
    return out


def _poly_mul(a, b):
    res = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    res[i + j] += x * y
    return res


def _poly_add(a, b):
    n = max(len(a), len(b))
    return [(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)]


def _poly_trim(a):
    while len(a) > 1 and a[-1] == 0:
        a = a[:-1]
    return a


def _one_minus_t_pow(e):
    # (1 - t^e)
    out = [0] * (e + 1)
    out[0] = 1
    out[e] = -1
    return out


def _div_one_minus_t(num):
    """Quotient of num by (1-t), or None when t = 1 is not a root."""
    if sum(num) != 0:
        return None
    d = len(num) - 1
    if d == 0:
        return [0]
    q = [0] * d
    carry = 0
    for i in range(d, 0, -1):
        carry += num[i]
        q[i - 1] = -carry
    return _poly_trim(q)


def hilbert_numerator(gens, n):
    """N(t) with HS(k[x_1..x_n] / <gens>) = N(t) / (1-t)^n, gens monomials."""
    gens = minimalize(gens)
    if not gens:
        return [1]
    if any(mono_degree(m) == 0 for m in gens):
        return [0]
    # pairwise coprime generators: Koszul product formula
    coprime = all(
        not any(mono_gcd(gens[i], gens[j]).count(0) < n
                for j in range(i + 1, len(gens)))
        for i in range(len(gens)))
    if len(gens) == 1 or coprime:
        num = [1]
        for m in gens:
            num = _poly_mul(num, _one_minus_t_pow(mono_degree(m)))
        return _poly_trim(num)
    # pivot on the variable hitting the most mixed generators
    counts = [0] * n
    for m in gens:
        if sum(1 for e in m if e) >= 2 or mono_degree(m) >= 2:
            for i, e in enumerate(m):
                if e:
                    counts[i] += 1
    j = max(range(n), key=lambda i: counts[i])
    colon = minimalize([
        tuple(e - 1 if i == j and e > 0 else e for i, e in enumerate(m))
        for m in gens])
    pivot = tuple(1 if i == j else 0 for i in range(n))
    plus = minimalize([m for m in gens if m[j] == 0] + [pivot])
    # short exact sequence 0 -> S/(I:x_j) -> S/I -> S/(I + <x_j>) -> 0
    num = _poly_add(hilbert_numerator(plus, n),
                    _poly_mul([0, 1], hilbert_numerator(colon, n)))
    return _poly_trim(num)


@dataclass(frozen=True)
class HilbertSeries:
    """N(t) / (1-t)^nvars with integer N."""

    numerator: tuple
    nvars: int

    @classmethod
    def from_leading_monomials(cls, gens, n):
        return cls(tuple(_poly_trim(hilbert_numerator(gens, n))), n)

    def reduced(self):
        """(numerator', pole_order) with all (1-t) factors cancelled."""
        num = _poly_trim(list(self.numerator))
        if num == [0]:
            return (0,), 0
        pole = self.nvars
        while pole > 0:
            q = _div_one_minus_t(num)
            if q is None:
                break
            num = q
            pole -= 1
        return tuple(num), pole

    def dimension(self):
        """Pole order at t = 1: the Krull dimension of the graded quotient."""
        _, pole = self.reduced()
        return max(pole, 0)

    def hilbert_function(self, m):
        """Dimension of the degree-m graded piece."""
        n = self.nvars
        total = 0
        for j, c in enumerate(self.numerator):
            if c and m - j >= 0:
                total += c * (comb(n - 1 + m - j, n - 1) if n > 0 else (1 if m == j else 0))
        return total

    def shift_denominator(self, k):
        """Multiply the series by 1 / (1-t)^k (adjoin k polynomial variables)."""
        return HilbertSeries(self.numerator, self.nvars + k)

    def __eq__(self, other):
        if not isinstance(other, HilbertSeries):
            return NotImplemented
        return self.reduced() == other.reduced()

    def __hash__(self):
        return hash(self.reduced())

    def __str__(self):
        num, pole = self.reduced()
        terms = []
        for i, c in enumerate(num):
            if c:
                if i == 0:
                    terms.append(str(c))
                else:
                    mag = "" if abs(c) == 1 else str(abs(c)) + "*"
                    t = "t" if i == 1 else f"t^{i}"
                    terms.append(("-" if c < 0 else "+") + f" {mag}{t}"
                                 if terms else (("-" if c < 0 else "") + f"{mag}{t}"))
        nums = " ".join(terms) if terms else "0"
        if pole == 0:
            return nums
        return f"({nums}) / (1-t)^{pole}"
