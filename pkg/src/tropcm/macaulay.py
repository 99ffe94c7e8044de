"""Degree-truncated Macaulay matrices: brute-force graded slices of ideals.

This route never touches the Buchberger engine.  A degree slice of an
ideal is spanned by the monomial multiples of the original generators;
row reduction over the exact field gives a canonical reduced echelon
form, so two slices agree iff their echelon matrices are equal.  For a
weight vector, echelonizing against the weight-refined column order and
taking initial forms of the rows spans the same slice of the initial
ideal, which is the independent oracle for in_w computations.
"""

from __future__ import annotations

from .orders import GREVLEX, MonomialOrder
from .polynomials import Polynomial, mono_mul, monomials_of_degree


def _echelon(rows):
    """Reduced row echelon form; rows are mutable coefficient lists."""
    rows = [list(r) for r in rows]
    pivots = []
    lead = 0
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    r = 0
    for c in range(ncols):
        pivot = None
        for i in range(r, nrows):
            if rows[i][c]:
                pivot = i
                break
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        pv = rows[r][c]
        rows[r] = [x / pv for x in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return [row for row in rows[:r] if any(row)], pivots


def _column_basis(n, degree, order):
    cols = sorted(monomials_of_degree(n, degree), key=order.key, reverse=True)
    index = {m: i for i, m in enumerate(cols)}
    return cols, index


def _slice_rows(generators, degree, cols, index):
    rows = []
    for g in generators:
        if g.is_zero():
            continue
        gdeg = g.degree()
        if gdeg > degree or not g.is_homogeneous():
            if gdeg > degree:
                continue
            raise ValueError("graded slices need homogeneous generators")
        n = g.ring.nvars
        for shift in monomials_of_degree(n, degree - gdeg):
            row = [g.ring.field.zero()] * len(cols)
            for m, c in g.terms.items():
                row[index[mono_mul(m, shift)]] = c
            rows.append(row)
    return rows


def graded_slice(generators, degree, order=GREVLEX):
    """Canonical echelon basis of the degree slice, columns ordered by
    ``order`` descending."""
    if not generators:
        return [], []
    n = generators[0].ring.nvars
    cols, index = _column_basis(n, degree, order)
    rows = _slice_rows(generators, degree, cols, index)
    if not rows:
        return [], cols
    echelon, _ = _echelon(rows)
    return echelon, cols


def initial_slice_oracle(generators, w, degree):
    """Echelon basis of the degree slice of in_w(<generators>), brute force.

    Echelonize the slice against the w-refined column order, take the
    initial form of every row, then re-echelonize against the canonical
    grevlex column order so the result is comparable with any other route.
    """
    if not generators:
        return [], []
    ring = generators[0].ring
    worder = MonomialOrder.weighted(w)
    cols_w, index_w = _column_basis(ring.nvars, degree, worder)
    rows = _slice_rows(generators, degree, cols_w, index_w)
    if not rows:
        return graded_slice([], degree)
    echelon, _ = _echelon(rows)
    initials = []
    for row in echelon:
        p = Polynomial(ring, {cols_w[i]: c for i, c in enumerate(row) if c})
        initials.append(p.initial_form(w))
    cols, index = _column_basis(ring.nvars, degree, GREVLEX)
    out_rows = []
    for p in initials:
        row = [ring.field.zero()] * len(cols)
        for m, c in p.terms.items():
            row[index[m]] = c
        out_rows.append(row)
    echelon, _ = _echelon(out_rows)
    return echelon, cols


def slices_equal(generators_a, generators_b, degree):
    """Compare degree slices of two generating sets under the canonical order."""
    ea, _ = graded_slice(generators_a, degree)
    eb, _ = graded_slice(generators_b, degree)
    return ea == eb
