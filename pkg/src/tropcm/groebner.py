"""Buchberger engine, reduced bases, initial ideals, elimination, membership.

The public surface only accepts homogeneous ideals: weight-refined orders
are well-founded degreewise, and homogeneity keeps every reduction inside
one degree.  The raw engine additionally serves the Rabinowitsch-style
membership tests, which need non-homogeneous ideals; those calls are
restricted to global well-orders (grevlex, lex, block).
"""

from __future__ import annotations

from functools import cached_property

from .cache import default_cache, digest
from .hilbert import HilbertSeries
from .orders import GREVLEX, MonomialOrder
from .polynomials import (Polynomial, monomials_of_degree, mono_degree,
                          mono_div, mono_divides, mono_lcm, mono_mul,
                          parse_polynomial)


class NonHomogeneousError(ValueError):
    """A generator mixes degrees where the engine requires homogeneity."""


# ---------------------------------------------------------------------------
# division and the Buchberger loop

def reduce_full(f, basis, order):
    """Full normal form: no term of the result is divisible by a basis LM."""
    lead = [(g.leading(order)[0], g.leading(order)[1], g)
            for g in basis if not g.is_zero()]
    if not lead:
        return f
    key = order.key
    work = dict(f.terms)
    rem = {}
    while work:
        m = max(work, key=key)
        c = work.pop(m)
        hit = None
        for gm, gc, g in lead:
            if mono_divides(gm, m):
                hit = (gm, gc, g)
                break
        if hit is None:
            rem[m] = c
            continue
        gm, gc, g = hit
        mult = mono_div(m, gm)
        coef = c / gc
        for tm, tc in g.terms.items():
            if tm == gm:
                continue
            dest = mono_mul(tm, mult)
            s = work.get(dest)
            s = -(tc * coef) if s is None else s - tc * coef
            if s:
                work[dest] = s
            elif dest in work:
                del work[dest]
    return Polynomial(f.ring, rem)


def s_polynomial(f, g, order):
    (mf, cf) = f.leading(order)
    (mg, cg) = g.leading(order)
    one = f.ring.field.one()
    l = mono_lcm(mf, mg)
    return (f.term_mul(one / cf, mono_div(l, mf))
            - g.term_mul(one / cg, mono_div(l, mg)))


def _interreduce(basis, order):
    """Minimalize then tail-reduce; output sorted by leading monomial."""
    basis = sorted((g for g in basis if not g.is_zero()),
                   key=lambda g: (mono_degree(g.leading(order)[0]),
                                  order.key(g.leading(order)[0])))
    minimal = []
    lms = []
    for g in basis:
        lm = g.leading(order)[0]
        if not any(mono_divides(m, lm) for m in lms):
            minimal.append(g)
            lms.append(lm)
    out = []
    for i, g in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1:]
        out.append(reduce_full(g, others, order).monic(order))
    # presentation order: ascending degree, leading-most first within a degree
    out.sort(key=lambda g: order.key(g.leading(order)[0]), reverse=True)
    out.sort(key=lambda g: mono_degree(g.leading(order)[0]))
    return out


def groebner_basis_raw(polys, order, homogeneous=None):
    """Reduced Groebner basis of a list of polynomials.

    Normal pair selection (smallest lcm degree first) with the coprime
    criterion; deterministic throughout.
    """
    polys = [p for p in polys if not p.is_zero()]
    if not polys:
        return []
    if homogeneous is None:
        homogeneous = all(p.is_homogeneous() for p in polys)
    if not homogeneous and not order.is_global():
        raise NonHomogeneousError(
            "non-homogeneous generators require a global order "
            f"(got {order.descriptor()})")
    G = [p.monic(order) for p in polys]
    lms = [g.leading(order)[0] for g in G]
    pairs = {(j, i) for i in range(len(G)) for j in range(i)}

    def pair_key(pair):
        i, j = pair
        l = mono_lcm(lms[i], lms[j])
        return (mono_degree(l), order.key(l), i, j)

    while pairs:
        i, j = min(pairs, key=pair_key)
        pairs.discard((i, j))
        li, lj = lms[i], lms[j]
        if all(a == 0 or b == 0 for a, b in zip(li, lj)):
            continue
        s = reduce_full(s_polynomial(G[i], G[j], order), G, order)
        if not s.is_zero():
            k = len(G)
            pairs.update((t, k) for t in range(k))
            G.append(s.monic(order))
            lms.append(s.leading(order)[0])
    return _interreduce(G, order)


# ---------------------------------------------------------------------------
# ideals and bases

class Ideal:
    """Homogeneous ideal given by generators; zero generators are dropped."""

    __slots__ = ("ring", "generators", "_canon", "_canon_hash")

    def __init__(self, ring, generators):
        gens = []
        for g in generators:
            if g.ring != ring:
                raise ValueError("generator from a different ring")
            if g.is_zero():
                continue
            if not g.is_homogeneous():
                raise NonHomogeneousError(f"non-homogeneous generator: {g}")
            gens.append(g)
        self.ring = ring
        self.generators = tuple(gens)
        self._canon = None
        self._canon_hash = None

    @classmethod
    def from_strings(cls, ring, texts):
        return cls(ring, [parse_polynomial(s, ring) for s in texts])

    def is_zero(self):
        return not self.generators

    def generator_key(self):
        return digest(self.ring.descriptor(),
                      ";".join(sorted(str(g) for g in self.generators)))

    def canonical_basis(self):
        """Reduced grevlex basis: the canonical form used for equality."""
        if self._canon is None:
            self._canon = buchberger_reduced(self, GREVLEX).basis
        return self._canon

    def canonical_hash(self):
        if self._canon_hash is None:
            self._canon_hash = digest(self.ring.descriptor(),
                                      ";".join(str(g) for g in self.canonical_basis()))
        return self._canon_hash

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        if self.ring != other.ring:
            return False
        return self.canonical_basis() == other.canonical_basis()

    def __hash__(self):
        return hash(self.canonical_hash())

    def __repr__(self):
        gens = ", ".join(str(g) for g in self.generators) or "0"
        return f"Ideal({gens})"


class GroebnerBasis:
    """A reduced basis together with its order and ring."""

    __slots__ = ("ring", "order", "basis")

    def __init__(self, ring, order, basis):
        self.ring = ring
        self.order = order
        self.basis = tuple(basis)

    def leading_monomials(self):
        return [g.leading(self.order)[0] for g in self.basis]

    def strings(self):
        return [str(g) for g in self.basis]

    def __iter__(self):
        return iter(self.basis)

    def __len__(self):
        return len(self.basis)

    def __repr__(self):
        return f"GroebnerBasis({self.order.descriptor()}; {', '.join(self.strings())})"


def buchberger_reduced(ideal, order, cache=None):
    """Unique reduced basis of a homogeneous ideal, cached by canonical form."""
    cache = cache or default_cache()
    raw_key = digest(ideal.generator_key(), order.descriptor())
    hit = cache.get(raw_key)
    if hit is not None:
        basis = [parse_polynomial(s, ideal.ring) for s in hit]
        return GroebnerBasis(ideal.ring, order, basis)
    if order != GREVLEX:
        # second chance: key by the canonical form so regenerated ideals hit
        canon_key = digest("canon", ideal.canonical_hash(), order.descriptor())
        hit = cache.get(canon_key)
        if hit is not None:
            cache.put(raw_key, hit)
            basis = [parse_polynomial(s, ideal.ring) for s in hit]
            return GroebnerBasis(ideal.ring, order, basis)
    basis = groebner_basis_raw(list(ideal.generators), order, homogeneous=True)
    gb = GroebnerBasis(ideal.ring, order, basis)
    strings = gb.strings()
    meta = {"ring": ideal.ring.descriptor(), "order": order.descriptor()}
    cache.put(raw_key, strings, meta)
    if order == GREVLEX and ideal._canon is None:
        ideal._canon = gb.basis
    canon_key = digest("canon", ideal.canonical_hash(), order.descriptor())
    cache.put(canon_key, strings, meta)
    return gb


def normal_form(f, gb: GroebnerBasis):
    """Remainder of f against a reduced basis; supported on standard monomials."""
    if f.ring != gb.ring:
        raise ValueError("polynomial and basis from different rings")
    return reduce_full(f, gb.basis, gb.order)


def ideal_membership(f, ideal, cache=None):
    gb = buchberger_reduced(ideal, GREVLEX, cache)
    return normal_form(f, gb).is_zero()


# ---------------------------------------------------------------------------
# initial ideals and elimination

def initial_ideal(w, ideal, cache=None):
    """in_w(I) = <in_w(g) : g in the reduced basis under the w-refined order>."""
    order = MonomialOrder.weighted(w)
    gb = buchberger_reduced(ideal, order, cache)
    return Ideal(ideal.ring, [g.initial_form(w) for g in gb.basis])


def initial_monomial_generators(ideal, order, cache=None):
    """Minimal generators of the leading-term ideal under ``order``."""
    gb = buchberger_reduced(ideal, order, cache)
    return sorted(gb.leading_monomials())


def eliminate(ideal, A, cache=None):
    """I_A: intersect I + <x_i : i in A> with the subring on the rest.

    ``A`` holds 0-based variable indices.  Computed through a block
    elimination order; the surviving basis elements generate the kernel of
    the induced presentation of the quotient by the chosen variables.
    """
    ring = ideal.ring
    A = sorted(set(A))
    if any(i < 0 or i >= ring.nvars for i in A):
        raise ValueError("variable index out of range")
    if not A:
        return ideal
    gens = list(ideal.generators) + [ring.variable(i) for i in A]
    ext = Ideal(ring, gens)
    order = MonomialOrder.elimination(A)
    gb = buchberger_reduced(ext, order, cache)
    keep = [i for i in range(ring.nvars) if i not in A]
    sub = ring.subring(keep)
    out = [g.restrict(sub, keep) for g in gb.basis
           if not (g.support_vars() & set(A))]
    return Ideal(sub, out)


def extend_ideal(sub_ideal, full_ring, positions):
    """Extension of an ideal in a subring: same generators inside full_ring."""
    gens = [g.extend(full_ring, positions) for g in sub_ideal.generators]
    return Ideal(full_ring, gens)


# ---------------------------------------------------------------------------
# radical membership, monomial detection

def _fresh_name(ring, stem="t"):
    name = stem
    while name in ring.names:
        name += "_"
    return name


def radical_membership(f, ideal):
    """f in rad(I), decided by 1 in I + <1 - t f> in an extended ring."""
    if f.is_zero():
        raise ValueError("radical membership of the zero polynomial")
    ring = ideal.ring
    ext = ring.extended(_fresh_name(ring))
    positions = list(range(ring.nvars))
    t = ext.variable(ext.nvars - 1)
    gens = [g.extend(ext, positions) for g in ideal.generators]
    gens.append(ext.one() - t * f.extend(ext, positions))
    basis = groebner_basis_raw(gens, GREVLEX, homogeneous=False)
    return any(mono_degree(g.leading(GREVLEX)[0]) == 0 for g in basis)


def contains_monomial(ideal, cache=None):
    """A witness monomial in I, or None.

    Saturation against the product of all variables decides existence;
    a witness is then recovered by degree-increasing search (guaranteed to
    end: some power of the variable product lies in the ideal).
    """
    if ideal.is_zero():
        return None
    ring = ideal.ring
    u = ring.monomial((1,) * ring.nvars)
    if not radical_membership(u, ideal):
        return None
    gb = buchberger_reduced(ideal, GREVLEX, cache)
    d = 1
    while True:
        for m in monomials_of_degree(ring.nvars, d):
            if reduce_full(ring.monomial(m), gb.basis, GREVLEX).is_zero():
                return m
        d += 1
        if d > 200:
            raise RuntimeError("witness search exceeded the degree cap")


# ---------------------------------------------------------------------------
# Hilbert data and presented algebras

def hilbert_series_quotient(ideal, order=GREVLEX, cache=None):
    """Hilbert series of k[x]/I via the leading-term ideal under ``order``."""
    gb = buchberger_reduced(ideal, order, cache)
    return HilbertSeries.from_leading_monomials(gb.leading_monomials(),
                                                ideal.ring.nvars)


def krull_dimension(ideal, cache=None):
    """Pole order of the Hilbert series at t = 1; the ideal must be proper."""
    gb = buchberger_reduced(ideal, GREVLEX, cache)
    if any(mono_degree(g.leading(GREVLEX)[0]) == 0 for g in gb.basis):
        raise ValueError("the ideal is the whole ring")
    return hilbert_series_quotient(ideal, GREVLEX, cache).dimension()


class PresentedAlgebra:
    """k[x]/I with cached dimension and Hilbert series."""

    def __init__(self, ideal):
        self.ideal = ideal

    @property
    def ring(self):
        return self.ideal.ring

    @cached_property
    def hilbert(self):
        return hilbert_series_quotient(self.ideal)

    @cached_property
    def dimension(self):
        return krull_dimension(self.ideal)

    def hilbert_function(self, m):
        return self.hilbert.hilbert_function(m)

    def __repr__(self):
        return f"PresentedAlgebra({self.ideal!r})"
