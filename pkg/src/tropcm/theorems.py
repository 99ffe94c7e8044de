"""Executable verification of the structural claims on concrete instances.

Every check computes its two sides through disjoint code paths (initial
ideals vs elimination, Hilbert recursion vs basis equality, normal-form
evaluation vs adic membership) and compares exactly.  Failed hypotheses
are reported as such, never silently folded into pass or fail; verdicts
are ``pass``, ``fail``, ``undetermined`` (primeness outside certificate
range) or ``hypothesis-not-met``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field as dataclass_field
from fractions import Fraction

from .fan import (ConeCA, cone_contains, enumerate_generic_fan, epsilon_vector,
                  sample_interior, trop_membership)
from .groebner import (Ideal, buchberger_reduced, eliminate, extend_ideal,
                       hilbert_series_quotient, ideal_membership,
                       initial_ideal, krull_dimension, normal_form)
from .orders import GREVLEX, MonomialOrder
from .polynomials import (Polynomial, mono_div, mono_divides,
                          monomials_of_degree)
from .quasival import (INFINITY, ConeShareError, Quasivaluation, adic_order,
                       oplus_in_cone, standard_basis_slice)

PASS = "pass"
FAIL = "fail"
UNDETERMINED = "undetermined"
HYPOTHESIS = "hypothesis-not-met"


@dataclass
class VerificationReport:
    claim: str
    instance: dict
    verdict: str
    evidence: dict = dataclass_field(default_factory=dict)

    def to_dict(self):
        # the wire name for the per-claim instance data is "params"
        return {"claim": self.claim, "params": self.instance,
                "verdict": self.verdict, "evidence": self.evidence}

    @property
    def failed(self):
        return self.verdict == FAIL


@dataclass
class PrimenessCertificate:
    method: str           # linear | principal-quadric-rank | monomial | small-field-factor-search
    data: dict

    def to_dict(self):
        return {"method": self.method, "data": self.data}


def _fmt_w(w):
    return ",".join(str(Fraction(x)) for x in w)


def _fmt_A(A):
    return sorted(i + 1 for i in A)


def _basis_strings(ideal, cache=None):
    return buchberger_reduced(ideal, GREVLEX, cache).strings()


def _instance(ideal, **extra):
    inst = {"generators": [str(g) for g in ideal.generators]}
    inst.update(extra)
    return inst


def _dimension_hypothesis(ideal, A, d, cache=None):
    """The audited regular-sequence condition: cutting by A drops dim by |A|."""
    if not A:
        return True, d
    ring = ideal.ring
    cut = Ideal(ring, list(ideal.generators) + [ring.variable(i) for i in A])
    actual = krull_dimension(cut, cache)
    return actual == d - len(A), actual


# ---------------------------------------------------------------------------
# equality-of-ideals claims

def verify_initial_formula(ideal, A, w, d=None, cache=None) -> VerificationReport:
    """in_w(I) against the extension of the elimination ideal I_A."""
    ring = ideal.ring
    n = ring.nvars
    A = frozenset(A)
    if d is None:
        d = krull_dimension(ideal, cache)
    inst = _instance(ideal, A=_fmt_A(A), w=_fmt_w(w), d=d)
    cone = ConeCA(A, n)
    interior = cone_contains(cone, w, interior=True)
    size_ok = len(A) <= d - 1
    evidence = {"w_in_relative_interior": interior,
                "regular_sequence_size_ok": size_ok,
                "complement_bound_ok": (n - len(A)) <= n - d + 1}
    if not interior or not size_ok:
        evidence["reason"] = ("w outside the relative interior of C_A"
                              if not interior else "|A| exceeds d - 1")
        return VerificationReport("initial-formula", inst, HYPOTHESIS, evidence)
    lhs = initial_ideal(w, ideal, cache)
    keep = sorted(set(range(n)) - A)
    rhs = extend_ideal(eliminate(ideal, A, cache), ring, keep)
    evidence["initial_ideal_basis"] = _basis_strings(lhs, cache)
    evidence["eliminated_extension_basis"] = _basis_strings(rhs, cache)
    if lhs == rhs:
        return VerificationReport("initial-formula", inst, PASS, evidence)
    evidence["witness"] = "reduced bases differ"
    return VerificationReport("initial-formula", inst, FAIL, evidence)


def verify_gr_presentation(ideal, A, d=None, cache=None) -> VerificationReport:
    """Associated graded of ord_A: Hilbert identity plus basis identity.

    HS(k[x]/in_eps(I)) must equal HS(k[x_rest]/I_A) / (1-t)^|A| and the
    initial ideal must equal the extension of I_A, so the quotient really
    is a polynomial ring over the sliced algebra.
    """
    ring = ideal.ring
    n = ring.nvars
    A = frozenset(A)
    if d is None:
        d = krull_dimension(ideal, cache)
    inst = _instance(ideal, A=_fmt_A(A), d=d)
    dim_ok, actual = _dimension_hypothesis(ideal, A, d, cache)
    evidence = {"cut_dimension": actual, "expected_cut_dimension": d - len(A)}
    if not dim_ok:
        evidence["reason"] = "A does not cut the dimension as a regular sequence would"
        return VerificationReport("gr-presentation", inst, HYPOTHESIS, evidence)
    eps = epsilon_vector(A, n)
    lhs_ideal = initial_ideal(eps, ideal, cache)
    lhs_series = hilbert_series_quotient(lhs_ideal, GREVLEX, cache)
    sub_ideal = eliminate(ideal, A, cache)
    rhs_series = hilbert_series_quotient(sub_ideal, GREVLEX, cache).shift_denominator(len(A))
    keep = sorted(set(range(n)) - A)
    rhs_ideal = extend_ideal(sub_ideal, ring, keep)
    series_ok = lhs_series == rhs_series
    basis_ok = lhs_ideal == rhs_ideal
    evidence.update({
        "initial_series": str(lhs_series),
        "sliced_series_with_free_variables": str(rhs_series),
        "series_equal": series_ok,
        "basis_equal": basis_ok,
        "initial_ideal_basis": _basis_strings(lhs_ideal, cache),
    })
    verdict = PASS if (series_ok and basis_ok) else FAIL
    if verdict == FAIL:
        evidence["witness"] = ("Hilbert series differ" if not series_ok
                               else "reduced bases differ")
    return VerificationReport("gr-presentation", inst, verdict, evidence)


def verify_iterated_initial(ideal, A, i, d=None, cache=None) -> VerificationReport:
    """Two-step initial degeneration against the one-step one."""
    ring = ideal.ring
    n = ring.nvars
    A = frozenset(A)
    if i not in A:
        raise ValueError("index must belong to A")
    if d is None:
        d = krull_dimension(ideal, cache)
    inst = _instance(ideal, A=_fmt_A(A), i=i + 1, d=d)
    if len(A) > d - 1:
        return VerificationReport("iterated-initial", inst, HYPOTHESIS,
                                  {"reason": "|A| exceeds d - 1"})
    step = initial_ideal(epsilon_vector([i], n), ideal, cache)
    lhs = initial_ideal(epsilon_vector(A - {i}, n), step, cache)
    rhs = initial_ideal(epsilon_vector(A, n), ideal, cache)
    evidence = {"two_step_basis": _basis_strings(lhs, cache),
                "one_step_basis": _basis_strings(rhs, cache)}
    verdict = PASS if lhs == rhs else FAIL
    if verdict == FAIL:
        evidence["witness"] = "reduced bases differ"
    return VerificationReport("iterated-initial", inst, verdict, evidence)


# ---------------------------------------------------------------------------
# quasivaluation claims

def _random_homogeneous(ring, rng, maxdeg):
    """Small random homogeneous polynomial, possibly zero."""
    d = rng.randint(1, maxdeg)
    monos = monomials_of_degree(ring.nvars, d)
    terms = {}
    for m in monos:
        if rng.random() < min(1.0, 4.0 / len(monos)):
            c = rng.randint(-3, 3)
            if c:
                terms[m] = ring.field.coerce(c)
    if not terms:
        m = monos[rng.randrange(len(monos))]
        terms[m] = ring.field.coerce(rng.choice([1, -1, 2]))
    return Polynomial(ring, terms)


def verify_quasival_decomposition(ideal, A, w, maxdeg=4, samples=50, seed=0,
                                  d=None, cache=None) -> VerificationReport:
    """v_w against min(w)*deg + sum over A of (w_i - min(w))*ord_i.

    Checked on every standard monomial up to ``maxdeg`` (adapted basis of
    the w-refined order) and on seeded random homogeneous elements, whose
    expected value is the minimum of the right side over their adapted
    expansion.
    """
    from .groebner import PresentedAlgebra

    ring = ideal.ring
    n = ring.nvars
    A = frozenset(A)
    if d is None:
        d = krull_dimension(ideal, cache)
    w = tuple(Fraction(x) for x in w)
    inst = _instance(ideal, A=_fmt_A(A), w=_fmt_w(w), maxdeg=maxdeg,
                     samples=samples, seed=seed)
    cone = ConeCA(A, n)
    dim_ok, actual = _dimension_hypothesis(ideal, A, d, cache)
    if not cone_contains(cone, w, interior=False) or not dim_ok:
        reason = ("w outside C_A" if not cone_contains(cone, w)
                  else "A does not cut dimension like a regular sequence")
        return VerificationReport("quasival-decomposition", inst, HYPOTHESIS,
                                  {"reason": reason, "cut_dimension": actual})
    algebra = PresentedAlgebra(ideal)
    vw = Quasivaluation.weight(algebra, w)
    lo = min(w)
    ord_cache = {}

    def ord_i(i, mono):
        key = (i, mono)
        if key not in ord_cache:
            ord_cache[key] = adic_order([i], ring.monomial(mono), algebra, cache)
        return ord_cache[key]

    def rhs_on_monomial(mono):
        total = lo * sum(mono)
        for i in sorted(A):
            if w[i] != lo:
                o = ord_i(i, mono)
                if o is INFINITY:
                    return INFINITY
                total = total + (w[i] - lo) * o
        return total

    worder = MonomialOrder.weighted(w)
    checked = 0
    table = []
    for deg in range(0, maxdeg + 1):
        for mono in standard_basis_slice(algebra, worder, deg, cache):
            lhs = vw.evaluate(ring.monomial(mono), cache)
            rhs = rhs_on_monomial(mono)
            checked += 1
            if len(table) < 12:
                table.append({"element": str(ring.monomial(mono)),
                              "v_w": str(lhs), "decomposition": str(rhs)})
            if lhs != rhs:
                return VerificationReport(
                    "quasival-decomposition", inst, FAIL,
                    {"witness": str(ring.monomial(mono)),
                     "v_w": str(lhs), "decomposition": str(rhs),
                     "checked": checked, "value_table": table})
    gb = buchberger_reduced(ideal, worder, cache)
    rng = random.Random(repr(("decomp", seed, _fmt_w(w), sorted(A))))
    for _ in range(samples):
        f = _random_homogeneous(ring, rng, maxdeg)
        lhs = vw.evaluate(f, cache)
        nf = normal_form(f, gb)
        if nf.is_zero():
            rhs = INFINITY
        else:
            rhs = min(rhs_on_monomial(m) for m in nf.terms)
        checked += 1
        if lhs != rhs:
            return VerificationReport(
                "quasival-decomposition", inst, FAIL,
                {"witness": str(f), "v_w": str(lhs), "decomposition": str(rhs),
                 "checked": checked, "value_table": table})
    return VerificationReport("quasival-decomposition", inst, PASS,
                              {"checked": checked, "value_table": table})


def verify_weight_sum(ideal, u, w, maxdeg=4, cache=None) -> VerificationReport:
    """Additivity of values in a shared Groebner cone: v_u + v_w = v_{u+w}."""
    from .groebner import PresentedAlgebra

    ring = ideal.ring
    u = tuple(Fraction(x) for x in u)
    w = tuple(Fraction(x) for x in w)
    inst = _instance(ideal, u=_fmt_w(u), w=_fmt_w(w), maxdeg=maxdeg)
    algebra = PresentedAlgebra(ideal)
    vu = Quasivaluation.weight(algebra, u)
    vw = Quasivaluation.weight(algebra, w)
    try:
        vsum = oplus_in_cone([vu, vw], cache)
    except ConeShareError as exc:
        return VerificationReport("weight-sum", inst, HYPOTHESIS,
                                  {"reason": str(exc)})
    total = tuple(a + b for a, b in zip(u, w))
    vtotal = Quasivaluation.weight(algebra, total)
    order = MonomialOrder.weighted(total)
    checked = 0
    for deg in range(0, maxdeg + 1):
        for mono in standard_basis_slice(algebra, order, deg, cache):
            b = ring.monomial(mono)
            a1, a2 = vu.evaluate(b, cache), vw.evaluate(b, cache)
            s = vtotal.evaluate(b, cache)
            o = vsum.evaluate(b, cache)
            checked += 1
            if a1 + a2 != s or o != s:
                return VerificationReport(
                    "weight-sum", inst, FAIL,
                    {"witness": str(b), "v_u": str(a1), "v_w": str(a2),
                     "v_sum": str(s), "oplus": str(o), "checked": checked})
    return VerificationReport("weight-sum", inst, PASS, {"checked": checked})


def verify_epsilon_facts(ideal, A, d=None, cache=None) -> VerificationReport:
    """eps_A lies in the tropical variety and v_{eps_A}(x_i) = (eps_A)_i."""
    from .groebner import PresentedAlgebra

    ring = ideal.ring
    n = ring.nvars
    A = frozenset(A)
    inst = _instance(ideal, A=_fmt_A(A))
    if d is None:
        d = krull_dimension(ideal, cache)
    dim_ok, actual = _dimension_hypothesis(ideal, A, d, cache)
    if not dim_ok:
        return VerificationReport(
            "epsilon-facts", inst, HYPOTHESIS,
            {"reason": "A does not cut dimension like a regular sequence",
             "cut_dimension": actual, "expected_cut_dimension": d - len(A)})
    eps = epsilon_vector(A, n)
    member = trop_membership(eps, ideal, cache)
    algebra = PresentedAlgebra(ideal)
    veps = Quasivaluation.weight(algebra, eps)
    values = [veps.evaluate(ring.variable(i), cache) for i in range(n)]
    values_ok = all(values[i] == eps[i] for i in range(n))
    evidence = {"trop_membership": member,
                "variable_values": [str(v) for v in values]}
    if member and values_ok:
        return VerificationReport("epsilon-facts", inst, PASS, evidence)
    evidence["witness"] = ("monomial found in the initial ideal" if not member
                           else "variable value differs from the weight entry")
    return VerificationReport("epsilon-facts", inst, FAIL, evidence)


# ---------------------------------------------------------------------------
# primeness certificates

def _gram_matrix(q):
    """Symmetric matrix of a quadratic form; None in characteristic 2."""
    ring = q.ring
    field = ring.field
    if getattr(field, "char", 0) == 2:
        return None
    n = ring.nvars
    half = field.one() / field.coerce(2)
    M = [[field.zero() for _ in range(n)] for _ in range(n)]
    for m, c in q.terms.items():
        idx = [i for i, e in enumerate(m) for _ in range(e)]
        i, j = idx[0], idx[1]
        if i == j:
            M[i][i] = c
        else:
            M[i][j] = M[i][j] + c * half
            M[j][i] = M[i][j]
    return M


def _matrix_rank(M, field):
    rows = [list(r) for r in M]
    n = len(rows)
    rank = 0
    col = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        pivot = None
        for r in range(rank, n):
            if rows[r][col]:
                pivot = r
                break
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = field.one() / rows[rank][col]
        rows[rank] = [x * inv for x in rows[rank]]
        for r in range(n):
            if r != rank and rows[r][col]:
                f = rows[r][col]
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[rank])]
        rank += 1
    return rank


def _exact_divide(f, g, order=GREVLEX):
    """Quotient f/g when g divides f exactly, else None."""
    ring = f.ring
    q = ring.zero()
    rem = f
    gm, gc = g.leading(order)
    while not rem.is_zero():
        m, c = rem.leading(order)
        if not mono_divides(gm, m):
            return None
        t = ring.monomial(mono_div(m, gm), c / gc)
        q = q + t
        rem = rem - t * g
    return q


def _linear_factor_search(g):
    """Exhaustive small-template search for a linear factor of g over Q.

    Templates are linear forms with coefficients drawn from residues mod
    small primes, lifted to centered integers; a candidate counts only if
    exact division over the rationals succeeds, so hits are certificates
    and misses prove nothing.
    """
    ring = g.ring
    n = ring.nvars
    if n > 4 or g.degree() > 3:
        return None
    seen = set()
    for p in (2, 3, 5, 7):
        centered = lambda a: a - p if a > p // 2 else a
        for coeffs in _templates(n, p):
            lifted = tuple(centered(a) for a in coeffs)
            if lifted in seen:
                continue
            seen.add(lifted)
            ell = ring.zero()
            for i, a in enumerate(lifted):
                if a:
                    ell = ell + ring.variable(i).scale(a)
            if ell.is_zero():
                continue
            q = _exact_divide(g, ell)
            if q is not None:
                return ell, q
    return None


def _templates(n, p):
    """Nonzero coefficient tuples over F_p, first nonzero entry 1."""
    def rec(prefix, normalized):
        if len(prefix) == n:
            if normalized:
                yield prefix
            return
        if not normalized:
            yield from rec(prefix + (0,), False)
            yield from rec(prefix + (1,), True)
        else:
            for a in range(p):
                yield from rec(prefix + (a,), True)
    yield from rec((), False)


def primeness_check(ideal, cache=None):
    """(verdict, certificate) with verdict Prime, NotPrime, or Undetermined.

    The certificate menu covers linear ideals, monomial ideals, principal
    quadrics (symmetric rank), and principal cubics in few variables via
    factor search.  Everything else is honestly Undetermined.
    """
    gb = buchberger_reduced(ideal, GREVLEX, cache)
    basis = list(gb.basis)
    if not basis:
        return "Prime", PrimenessCertificate("linear", {"generators": [],
                                                        "note": "zero ideal"})
    if any(g.degree() == 0 for g in basis):
        return "NotPrime", PrimenessCertificate(
            "monomial", {"witness": "1", "note": "unit ideal"})
    if all(g.degree() == 1 for g in basis):
        return "Prime", PrimenessCertificate(
            "linear", {"generators": [str(g) for g in basis]})
    if all(len(g.terms) == 1 for g in basis):
        # monomial ideal: prime only when generated by variables
        for g in basis:
            (m, _), = g.terms.items()
            if sum(m) >= 2:
                i = next(k for k, e in enumerate(m) if e)
                rest = tuple(e - 1 if k == i else e for k, e in enumerate(m))
                return "NotPrime", PrimenessCertificate(
                    "monomial",
                    {"witness": str(g),
                     "factors": [str(ideal.ring.variable(i)),
                                 str(ideal.ring.monomial(rest))]})
    if len(basis) == 1:
        g = basis[0]
        content = g.monomial_content()
        if sum(content) > 0:
            cofactor = _exact_divide(g, ideal.ring.monomial(content))
            return "NotPrime", PrimenessCertificate(
                "monomial",
                {"witness": str(g),
                 "factors": [str(ideal.ring.monomial(content)), str(cofactor)]})
        if g.degree() == 2:
            M = _gram_matrix(g)
            if M is None:
                return "Undetermined", PrimenessCertificate(
                    "principal-quadric-rank",
                    {"note": "rank certificate unavailable in characteristic 2"})
            rank = _matrix_rank(M, ideal.ring.field)
            cert = PrimenessCertificate(
                "principal-quadric-rank",
                {"rank": rank, "matrix": [[str(x) for x in row] for row in M]})
            return ("Prime" if rank >= 3 else "NotPrime"), cert
        if g.degree() == 3:
            hit = _linear_factor_search(g)
            if hit is not None:
                ell, q = hit
                return "NotPrime", PrimenessCertificate(
                    "small-field-factor-search",
                    {"witness": str(g), "factors": [str(ell), str(q)]})
            return "Undetermined", PrimenessCertificate(
                "small-field-factor-search",
                {"note": "no lifted factorization found; not a proof"})
    return "Undetermined", None


def radicality_spot_check(ideal, samples=50, powmax=4, seed=0,
                          cache=None) -> VerificationReport:
    """Property-based evidence for radicality; failures are certificates."""
    from .groebner import radical_membership

    ring = ideal.ring
    inst = _instance(ideal, samples=samples, powmax=powmax, seed=seed)
    verdict, cert = primeness_check(ideal, cache)
    if verdict == "Prime":
        return VerificationReport(
            "radicality-spot", inst, PASS,
            {"note": "prime by certificate, hence radical",
             "certificate": cert.to_dict()})
    rng = random.Random(repr(("radical", seed)))
    candidates = [(ring.variable(i), True) for i in range(ring.nvars)]
    candidates += [(_random_homogeneous(ring, rng, 2), k % 5 == 0)
                   for k in range(samples)]
    tried = 0
    for f, probe_radical in candidates:
        if f.is_zero() or ideal_membership(f, ideal, cache):
            continue
        tried += 1
        power = f
        for m in range(2, powmax + 1):
            power = power * f
            if ideal_membership(power, ideal, cache):
                return VerificationReport(
                    "radicality-spot", inst, FAIL,
                    {"witness": str(f), "power": m,
                     "note": "f^m in I with f not in I"})
        if probe_radical and radical_membership(f, ideal):
            return VerificationReport(
                "radicality-spot", inst, FAIL,
                {"witness": str(f),
                 "note": "radical member that is not a member"})
    return VerificationReport("radicality-spot", inst, PASS,
                              {"note": "no non-radical witness found",
                               "sampled": tried})


def well_poised_check(ideal, d=None, samples_per_cone=3, seed=0,
                      cache=None) -> VerificationReport:
    """Primeness across all strata; cross-checked against linearity.

    For audited generic instances the expectation is: linear ideals are
    prime on every stratum, non-linear ones fail primeness somewhere on
    the top-dimensional stratum.
    """
    n = ideal.ring.nvars
    if d is None:
        d = krull_dimension(ideal, cache)
    inst = _instance(ideal, d=d, samples_per_cone=samples_per_cone, seed=seed)
    linear = all(g.degree() == 1 for g in buchberger_reduced(ideal, GREVLEX, cache))
    cones = []
    verdicts = []
    for codim in range(0, d):
        for cone in enumerate_generic_fan(n, d, codim):
            for k in range(samples_per_cone):
                w = sample_interior(cone, seed + k)
                inw = initial_ideal(w, ideal, cache)
                verdict, cert = primeness_check(inw, cache)
                verdicts.append(verdict)
                cones.append({"codim": codim, "A": list(cone.label()),
                              "w": _fmt_w(w), "prime_verdict": verdict,
                              "certificate": cert.to_dict() if cert else None})
    evidence = {"linear_ideal": linear, "cones": cones}
    if any(v == "Undetermined" for v in verdicts):
        evidence["note"] = "primeness undetermined on some cone"
        return VerificationReport("well-poised", inst, UNDETERMINED, evidence)
    all_prime = all(v == "Prime" for v in verdicts)
    evidence["status"] = "well-poised" if all_prime else "not-well-poised"
    consistent = (all_prime and linear) or (not all_prime and not linear)
    verdict = PASS if consistent else FAIL
    if verdict == FAIL:
        evidence["witness"] = ("linear ideal with a non-prime initial ideal"
                               if linear else
                               "non-linear ideal prime on every sampled stratum")
    return VerificationReport("well-poised", inst, verdict, evidence)


def cm_fan_audit(ideal, samples_per_cone=3, seed=0, cache=None) -> VerificationReport:
    """Constancy of the initial ideal on the interior of each maximal cone."""
    n = ideal.ring.nvars
    d = krull_dimension(ideal, cache)
    inst = _instance(ideal, d=d, samples_per_cone=samples_per_cone, seed=seed)
    notes = []
    for cone in enumerate_generic_fan(n, d, 0):
        base = None
        base_w = None
        for k in range(samples_per_cone):
            w = sample_interior(cone, seed + k)
            inw = initial_ideal(w, ideal, cache)
            if base is None:
                base, base_w = inw, w
            elif inw != base:
                return VerificationReport(
                    "cm-fan-coincidence", inst, FAIL,
                    {"witness_cone": list(cone.label()),
                     "w1": _fmt_w(base_w), "w2": _fmt_w(w),
                     "basis1": _basis_strings(base, cache),
                     "basis2": _basis_strings(inw, cache)})
        notes.append({"A": list(cone.label()),
                      "basis": _basis_strings(base, cache)})
    evidence = {"cones": notes}
    if samples_per_cone <= 1:
        evidence["note"] = "insufficient sampling: single sample per cone"
    return VerificationReport("cm-fan-coincidence", inst, PASS, evidence)
