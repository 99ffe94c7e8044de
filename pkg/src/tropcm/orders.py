"""Monomial orders: grevlex, lex, weight refinements, block elimination.

All comparisons use the min convention for weights: among monomials of a
fixed degree the leading one has the *smallest* inner product with the
weight vector, ties broken by the base order.  ``key`` returns a sortable
tuple where a bigger key means closer to leading.
"""

from __future__ import annotations

from fractions import Fraction


def grevlex_key(exps):
    return (sum(exps), tuple(-e for e in reversed(exps)))


def lex_key(exps):
    return tuple(exps)


class MonomialOrder:
    """A total order on monomials of each degree, identified by a descriptor.

    Kinds: ``grevlex``, ``lex``, ``weight`` (weight-refined, min convention)
    and ``elim`` (block order eliminating a variable subset).  Only the
    degree-compatible kinds (grevlex, lex, elim over a global base) are
    well-orders on all monomials; weight refinements are total only within
    a fixed degree, which suffices for homogeneous computation.
    """

    __slots__ = ("kind", "weight", "tiebreak", "block", "_desc")

    def __init__(self, kind, weight=None, tiebreak=None, block=None):
        self.kind = kind
        self.weight = tuple(Fraction(x) for x in weight) if weight is not None else None
        self.tiebreak = tiebreak
        self.block = frozenset(block) if block is not None else None
        self._desc = None

    @classmethod
    def grevlex(cls):
        return cls("grevlex")

    @classmethod
    def lex(cls):
        return cls("lex")

    @classmethod
    def weighted(cls, w, tiebreak=None):
        return cls("weight", weight=w, tiebreak=tiebreak or cls.grevlex())

    @classmethod
    def elimination(cls, block, tiebreak=None):
        """Block order ranking monomials by total degree in ``block`` first."""
        return cls("elim", block=block, tiebreak=tiebreak or cls.grevlex())

    def key(self, exps):
        if self.kind == "grevlex":
            return grevlex_key(exps)
        if self.kind == "lex":
            return lex_key(exps)
        if self.kind == "weight":
            wv = sum(w * e for w, e in zip(self.weight, exps))
            return (-wv,) + self.tiebreak.key(exps)
        if self.kind == "elim":
            bd = sum(exps[i] for i in self.block)
            return (bd,) + self.tiebreak.key(exps)
        raise ValueError(f"unknown order kind {self.kind!r}")

    def compare(self, a, b) -> int:
        """-1, 0, or 1 as ``a`` is below, equal to, or above ``b``."""
        if len(a) != len(b):
            raise ValueError("monomials from rings of different sizes")
        ka, kb = self.key(a), self.key(b)
        return (ka > kb) - (ka < kb)

    def is_global(self) -> bool:
        """True when every variable exceeds 1, so reduction is well-founded
        without a homogeneity assumption."""
        if self.kind in ("grevlex", "lex"):
            return True
        if self.kind == "elim":
            return self.tiebreak.is_global()
        return False

    def descriptor(self) -> str:
        if self._desc is None:
            if self.kind in ("grevlex", "lex"):
                self._desc = self.kind
            elif self.kind == "weight":
                ws = ",".join(str(w) for w in self.weight)
                self._desc = f"weight({ws});{self.tiebreak.descriptor()}"
            else:
                bs = ",".join(str(i + 1) for i in sorted(self.block))
                self._desc = f"elim({bs});{self.tiebreak.descriptor()}"
        return self._desc

    def __eq__(self, other):
        return isinstance(other, MonomialOrder) and self.descriptor() == other.descriptor()

    def __hash__(self):
        return hash(self.descriptor())

    def __repr__(self):
        return f"MonomialOrder({self.descriptor()})"


GREVLEX = MonomialOrder.grevlex()
LEX = MonomialOrder.lex()


def compare_monomials(order: MonomialOrder, a, b) -> int:
    """-1, 0, or 1; positive means ``a`` is closer to leading."""
    return order.compare(a, b)


def order_from_descriptor(desc: str) -> MonomialOrder:
    """Inverse of :meth:`MonomialOrder.descriptor` (used by the GB cache)."""
    if desc == "grevlex":
        return GREVLEX
    if desc == "lex":
        return LEX
    if desc.startswith("weight(") or desc.startswith("elim("):
        head, _, rest = desc.partition(";")
        inner = head[head.index("(") + 1:-1]
        tie = order_from_descriptor(rest)
        if desc.startswith("weight("):
            return MonomialOrder.weighted([Fraction(x) for x in inner.split(",")], tie)
        return MonomialOrder.elimination([int(x) - 1 for x in inner.split(",")], tie)
    raise ValueError(f"unknown order descriptor {desc!r}")
