"""Exact multivariate polynomials, monomials, initial forms, and parsing.

Monomials are plain exponent tuples.  A :class:`Polynomial` is a map from
exponent tuples to nonzero scalars together with its :class:`Ring`; the
zero polynomial has an empty term map, so structural equality is semantic
equality.  Weights follow the min convention throughout: the initial form
of ``f`` keeps the terms whose inner product with the weight vector is
minimal.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .fields import QQ, FieldError
from .orders import GREVLEX


class RingMismatchError(ValueError):
    """Operands live in different rings (variables or coefficient field)."""


class ParseError(ValueError):
    def __init__(self, message, pos=None):
        self.pos = pos
        super().__init__(message if pos is None else f"{message} (column {pos + 1})")


# ---------------------------------------------------------------------------
# monomial helpers (exponent tuples)

def mono_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a, b):
    """True when x^a divides x^b."""
    return all(x <= y for x, y in zip(a, b))


def mono_div(a, b):
    """Exponent vector of x^a / x^b; caller guarantees divisibility."""
    return tuple(x - y for x, y in zip(a, b))


def mono_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_gcd(a, b):
    return tuple(min(x, y) for x, y in zip(a, b))


def mono_degree(a):
    return sum(a)


def monomials_of_degree(n, d):
    """All exponent tuples of total degree d in n variables, grevlex-descending."""
    out = []

    def rec(prefix, remaining, slots):
        if slots == 1:
            out.append(prefix + (remaining,))
            return
        for e in range(remaining, -1, -1):
            rec(prefix + (e,), remaining - e, slots - 1)

    if n == 0:
        return [()] if d == 0 else []
    rec((), d, n)
    out.sort(key=GREVLEX.key, reverse=True)
    return out


def weight_value(w, exps):
    """Inner product <w, exps> as an exact rational."""
    if len(w) != len(exps):
        raise ValueError(f"weight length {len(w)} != monomial length {len(exps)}")
    return sum((Fraction(wi) * e for wi, e in zip(w, exps)), Fraction(0))


# ---------------------------------------------------------------------------
# rings

@dataclass(frozen=True)
class Ring:
    """Ambient polynomial ring: variable names plus a coefficient field."""

    names: tuple
    field: object = QQ

    def __post_init__(self):
        if len(set(self.names)) != len(self.names):
            raise ValueError("duplicate variable names")

    @property
    def nvars(self):
        return len(self.names)

    def index(self, name):
        try:
            return self.names.index(name)
        except ValueError:
            raise ParseError(f"unknown variable {name!r}") from None

    def zero(self):
        return Polynomial(self, {})

    def one(self):
        return Polynomial(self, {(0,) * self.nvars: self.field.one()})

    def variable(self, i):
        exps = tuple(1 if j == i else 0 for j in range(self.nvars))
        return Polynomial(self, {exps: self.field.one()})

    def monomial(self, exps, coeff=1):
        c = self.field.coerce(coeff)
        if not c:
            return self.zero()
        return Polynomial(self, {tuple(exps): c})

    def subring(self, keep):
        """Ring on the variables with (0-based) indices in ``keep``, order kept."""
        keep = sorted(keep)
        return Ring(tuple(self.names[i] for i in keep), self.field)

    def extended(self, extra_name):
        if extra_name in self.names:
            raise ValueError(f"variable {extra_name!r} already present")
        return Ring(self.names + (extra_name,), self.field)

    def descriptor(self):
        return f"{self.field.name}[{','.join(self.names)}]"


def default_ring(n, field=QQ, stem="x"):
    return Ring(tuple(f"{stem}{i + 1}" for i in range(n)), field)


# ---------------------------------------------------------------------------
# polynomials

class Polynomial:
    """Immutable term map over a fixed ring; zero coefficients never stored."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms):
        self.ring = ring
        self.terms = {m: c for m, c in terms.items() if c}

    # -- predicates and views -------------------------------------------------

    def is_zero(self):
        return not self.terms

    def degree(self):
        """Maximal total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(mono_degree(m) for m in self.terms)

    def is_homogeneous(self):
        degs = {mono_degree(m) for m in self.terms}
        return len(degs) <= 1

    def homogeneous_components(self):
        """Map of degree -> homogeneous part, ascending degrees."""
        comps = {}
        for m, c in self.terms.items():
            comps.setdefault(mono_degree(m), {})[m] = c
        return {d: Polynomial(self.ring, t) for d, t in sorted(comps.items())}

    def support_vars(self):
        used = set()
        for m in self.terms:
            used.update(i for i, e in enumerate(m) if e)
        return used

    def monomial_content(self):
        """GCD of the monomials of f (exponent tuple); zero vector for f = 0."""
        it = iter(self.terms)
        try:
            g = next(it)
        except StopIteration:
            return (0,) * self.ring.nvars
        for m in it:
            g = mono_gcd(g, m)
        return g

    # -- arithmetic ------------------------------------------------------------

    def _check_ring(self, other):
        if self.ring != other.ring:
            raise RingMismatchError(
                f"{self.ring.descriptor()} vs {other.ring.descriptor()}")

    def __add__(self, other):
        self._check_ring(other)
        res = dict(self.terms)
        for m, c in other.terms.items():
            s = res.get(m)
            s = c if s is None else s + c
            if s:
                res[m] = s
            elif m in res:
                del res[m]
        return Polynomial(self.ring, res)

    def __sub__(self, other):
        self._check_ring(other)
        res = dict(self.terms)
        for m, c in other.terms.items():
            s = res.get(m)
            s = -c if s is None else s - c
            if s:
                res[m] = s
            elif m in res:
                del res[m]
        return Polynomial(self.ring, res)

    def __neg__(self):
        return Polynomial(self.ring, {m: -c for m, c in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return self.scale(other)
        self._check_ring(other)
        res = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                s = res.get(m)
                s = c1 * c2 if s is None else s + c1 * c2
                if s:
                    res[m] = s
                elif m in res:
                    del res[m]
        return Polynomial(self.ring, res)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, c):
        c = self.ring.field.coerce(c)
        if not c:
            return self.ring.zero()
        return Polynomial(self.ring, {m: c * v for m, v in self.terms.items()})

    def term_mul(self, coeff, exps):
        """Multiply by the single term coeff * x^exps."""
        if not coeff:
            return self.ring.zero()
        return Polynomial(self.ring,
                          {mono_mul(m, exps): c * coeff for m, c in self.terms.items()})

    def __pow__(self, e):
        if e < 0:
            raise ValueError("negative powers are not polynomials")
        result = self.ring.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    # -- weights and leading data ----------------------------------------------

    def weight_min(self, w):
        """Minimal <w, alpha> over the support; error on the zero polynomial."""
        if not self.terms:
            raise ValueError("zero polynomial has no weight value")
        return min(weight_value(w, m) for m in self.terms)

    def initial_form(self, w):
        """Sum of the terms attaining the minimal weight value."""
        if not self.terms:
            raise ValueError("initial form of the zero polynomial is undefined")
        vals = {m: weight_value(w, m) for m in self.terms}
        lo = min(vals.values())
        return Polynomial(self.ring, {m: c for m, c in self.terms.items() if vals[m] == lo})

    def leading(self, order):
        """(exponent tuple, coefficient) of the leading term under ``order``."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        m = max(self.terms, key=order.key)
        return m, self.terms[m]

    def monic(self, order):
        if not self.terms:
            return self
        _, c = self.leading(order)
        return self.scale(self.ring.field.one() / c)

    # -- ring moves -------------------------------------------------------------

    def substitute(self, images, target_ring=None):
        """Map x_i -> images[i]; images live in a common target ring."""
        ring = target_ring or (images[0].ring if images else self.ring)
        if len(images) != self.ring.nvars:
            raise ValueError("one image per variable required")
        out = ring.zero()
        pow_cache = [dict() for _ in images]
        for m, c in self.terms.items():
            part = ring.one().scale(c)
            for i, e in enumerate(m):
                if e:
                    pe = pow_cache[i].get(e)
                    if pe is None:
                        pe = images[i] ** e
                        pow_cache[i][e] = pe
                    part = part * pe
            out = out + part
        return out

    def restrict(self, subring, keep):
        """Move into the subring on ``keep`` (0-based, sorted); support must fit."""
        keep = sorted(keep)
        pos = {i: j for j, i in enumerate(keep)}
        res = {}
        for m, c in self.terms.items():
            exps = [0] * len(keep)
            for i, e in enumerate(m):
                if e:
                    if i not in pos:
                        raise ValueError(
                            f"variable {self.ring.names[i]} not in the subring")
                    exps[pos[i]] = e
            res[tuple(exps)] = c
        return Polynomial(subring, res)

    def extend(self, superring, positions):
        """Inverse of restrict: place variable j at positions[j] in superring."""
        res = {}
        for m, c in self.terms.items():
            exps = [0] * superring.nvars
            for j, e in enumerate(m):
                exps[positions[j]] = e
            res[tuple(exps)] = c
        return Polynomial(superring, res)

    # -- formatting --------------------------------------------------------------

    def to_string(self):
        """Canonical text form; parse(to_string()) reproduces the polynomial."""
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms, key=GREVLEX.key, reverse=True):
            c = self.terms[m]
            parts.append((m, c))
        pieces = []
        for i, (m, c) in enumerate(parts):
            body = "*".join(
                f"{self.ring.names[j]}^{e}" if e > 1 else self.ring.names[j]
                for j, e in enumerate(m) if e)
            cs = str(c)
            neg = cs.startswith("-")
            mag = cs[1:] if neg else cs
            if body and mag == "1":
                text = body
            elif body:
                text = f"{mag}*{body}"
            else:
                text = mag
            if i == 0:
                pieces.append(f"-{text}" if neg else text)
            else:
                pieces.append(f" - {text}" if neg else f" + {text}")
        return "".join(pieces)

    def __str__(self):
        return self.to_string()

    def __repr__(self):
        return f"Polynomial({self.to_string()})"


# ---------------------------------------------------------------------------
# parsing

_OPS = set("+-*^()/")


def _tokenize(text):
    toks = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch == "#":
            break
        if ch in _OPS:
            toks.append((ch, ch, i))
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            toks.append(("int", text[i:j], i))
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            toks.append(("name", text[i:j], i))
            i = j
            continue
        raise ParseError(f"unexpected character {ch!r}", i)
    toks.append(("end", "", n))
    return toks


class _Parser:
    """Recursive descent for +, -, *, ^, parentheses, and a/b coefficients."""

    def __init__(self, toks, ring):
        self.toks = toks
        self.pos = 0
        self.ring = ring

    def peek(self):
        return self.toks[self.pos]

    def take(self, kind=None):
        tok = self.toks[self.pos]
        if kind is not None and tok[0] != kind:
            raise ParseError(f"expected {kind}, found {tok[1]!r}", tok[2])
        self.pos += 1
        return tok

    def parse(self):
        p = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise ParseError(f"unexpected {tok[1]!r}", tok[2])
        return p

    def expr(self):
        p = self.term()
        while self.peek()[0] in ("+", "-"):
            op = self.take()[0]
            q = self.term()
            p = p + q if op == "+" else p - q
        return p

    def term(self):
        p = self.factor()
        while True:
            tok = self.peek()
            if tok[0] == "*":
                self.take()
                p = p * self.factor()
            elif tok[0] == "/":
                self.take()
                q = self.factor()
                if q.is_zero() or q.degree() > 0:
                    raise ParseError("division only by a nonzero constant", tok[2])
                (_, c), = q.terms.items()
                p = p * self.ring.monomial((0,) * self.ring.nvars,
                                           self.ring.field.one() / c)
            else:
                return p

    def factor(self):
        sign = 1
        while self.peek()[0] in ("+", "-"):
            if self.take()[0] == "-":
                sign = -sign
        p = self.atom()
        if self.peek()[0] == "^":
            tok = self.take()
            e = self.take("int")
            p = p ** int(e[1])
        return p if sign > 0 else -p

    def atom(self):
        tok = self.peek()
        if tok[0] == "int":
            self.take()
            try:
                c = self.ring.field.coerce(int(tok[1]))
            except FieldError as exc:
                raise ParseError(str(exc), tok[2]) from exc
            return self.ring.monomial((0,) * self.ring.nvars, c)
        if tok[0] == "name":
            self.take()
            return self.ring.variable(self.ring.index(tok[1]))
        if tok[0] == "(":
            self.take()
            p = self.expr()
            self.take(")")
            return p
        raise ParseError(f"unexpected {tok[1] or 'end of input'!r}", tok[2])


def parse_polynomial(text, ring):
    """Parse the ideal-file grammar: + - * ^, parentheses, a/b coefficients."""
    return _Parser(_tokenize(text), ring).parse()
