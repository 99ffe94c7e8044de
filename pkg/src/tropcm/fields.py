"""Exact coefficient fields: the rationals and prime fields F_p.

Scalars are either ``fractions.Fraction`` (always in lowest terms with a
positive denominator) or :class:`GFElement` carrying its modulus.  A field
object knows how to coerce user input into scalars and is attached to every
ring; mixing scalars from different prime fields raises :class:`FieldError`.
"""

from __future__ import annotations

from fractions import Fraction


class FieldError(ValueError):
    """Raised for bad moduli, coercion failures, or mixed-field arithmetic."""


def is_prime(p: int) -> bool:
    """Trial-division primality test; moduli here are small."""
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    i = 3
    while i * i <= p:
        if p % i == 0:
            return False
        i += 2
    return True


class GFElement:
    """An element of F_p.  Arithmetic partners must share the modulus."""

    __slots__ = ("val", "p")

    def __init__(self, val: int, p: int):
        self.val = val % p
        self.p = p

    def _check(self, other: "GFElement") -> None:
        if self.p != other.p:
            raise FieldError(f"mixed prime-field moduli {self.p} and {other.p}")

    def __add__(self, other):
        if isinstance(other, GFElement):
            self._check(other)
            return GFElement(self.val + other.val, self.p)
        if isinstance(other, int):
            return GFElement(self.val + other, self.p)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, GFElement):
            self._check(other)
            return GFElement(self.val - other.val, self.p)
        if isinstance(other, int):
            return GFElement(self.val - other, self.p)
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, int):
            return GFElement(other - self.val, self.p)
        return NotImplemented

    def __neg__(self):
        return GFElement(-self.val, self.p)

    def __mul__(self, other):
        if isinstance(other, GFElement):
            self._check(other)
            return GFElement(self.val * other.val, self.p)
        if isinstance(other, int):
            return GFElement(self.val * other, self.p)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, GFElement):
            self._check(other)
            if other.val == 0:
                raise ZeroDivisionError("division by zero in F_p")
            return GFElement(self.val * pow(other.val, -1, self.p), self.p)
        if isinstance(other, int):
            return self / GFElement(other, self.p)
        return NotImplemented

    def __pow__(self, e: int):
        if e < 0:
            return GFElement(pow(self.val, e, self.p), self.p)
        return GFElement(pow(self.val, e, self.p), self.p)

    def __eq__(self, other):
        if isinstance(other, GFElement):
            return self.p == other.p and self.val == other.val
        if isinstance(other, int):
            return self.val == other % self.p
        return NotImplemented

    def __bool__(self):
        return self.val != 0

    def __hash__(self):
        return hash((self.val, self.p))

    def __repr__(self):
        return str(self.val)


class Rationals:
    """The field Q.  A single shared instance is exported as ``QQ``."""

    name = "Q"
    char = 0

    def zero(self) -> Fraction:
        return Fraction(0)

    def one(self) -> Fraction:
        return Fraction(1)

    def coerce(self, x) -> Fraction:
        if isinstance(x, Fraction):
            return x
        if isinstance(x, int):
            return Fraction(x)
        if isinstance(x, str):
            try:
                return Fraction(x)
            except (ValueError, ZeroDivisionError) as exc:
                raise FieldError(f"cannot read {x!r} as a rational") from exc
        raise FieldError(f"cannot coerce {x!r} into Q")

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("Q")

    def __repr__(self):
        return "Q"


class PrimeField:
    """The field F_p for a prime modulus p."""

    def __init__(self, p: int):
        if not is_prime(p):
            raise FieldError(f"modulus {p} is not prime")
        self.p = p
        self.name = f"Fp:{p}"
        self.char = p

    def zero(self) -> GFElement:
        return GFElement(0, self.p)

    def one(self) -> GFElement:
        return GFElement(1, self.p)

    def coerce(self, x) -> GFElement:
        if isinstance(x, GFElement):
            if x.p != self.p:
                raise FieldError(f"mixed prime-field moduli {x.p} and {self.p}")
            return x
        if isinstance(x, int):
            return GFElement(x, self.p)
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise FieldError(f"denominator of {x} vanishes mod {self.p}")
            return GFElement(x.numerator, self.p) / GFElement(x.denominator, self.p)
        if isinstance(x, str):
            return self.coerce(Fraction(x))
        raise FieldError(f"cannot coerce {x!r} into F_{self.p}")

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("Fp", self.p))

    def __repr__(self):
        return self.name


QQ = Rationals()

DEFAULT_PRIME = 32003


def field_from_name(name: str):
    """Parse a field descriptor: ``Q`` or ``Fp:<p>``."""
    name = name.strip()
    if name in ("Q", "QQ"):
        return QQ
    if name.startswith("Fp:"):
        return PrimeField(int(name[3:]))
    if name == "Fp":
        return PrimeField(DEFAULT_PRIME)
    raise FieldError(f"unknown field descriptor {name!r}")
