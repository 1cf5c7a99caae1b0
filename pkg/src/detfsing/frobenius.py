"""Frobenius-side ideal operations: bracket powers, principal trace maps,
splitting and compatibility tests, the F-purity colon criterion, and
strong/pure F-regularity sweeps.

All tests at finite Frobenius level are one-sided: a confirmation is a proof,
an exhausted sweep is reported as inconclusive and never as a refutation.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ImproperIdeal, KernelError, PreconditionViolated
from .groebner import make_run, normal_form
from .ideals import Ideal
from .poly import Polynomial, trace_apply

DEFAULT_E_MAX = 3


@dataclass(frozen=True)
class PhiMap:
    """The map f |-> trace^e(a*f): a principal near-splitting of Frobenius."""

    a: Polynomial
    e: int

    def __post_init__(self):
        if self.a.is_zero():
            raise KernelError("the premultiplier of a trace map must be nonzero")
        if self.e < 1:
            raise KernelError("the Frobenius iterate must be positive")

    @property
    def ring(self):
        return self.a.ring

    @property
    def q(self):
        return self.ring.p ** self.e


def phi_apply(phi, f):
    phi.ring.check_same(f.ring)
    return trace_apply(phi.a * f, phi.e)


def is_split(phi):
    """True when phi sends 1 to 1, i.e. phi splits the e-th Frobenius."""
    return phi_apply(phi, Polynomial.one(phi.ring)).is_one()


def bracket_power(I, e):
    """The ideal generated by q-th powers of generators, q = p^e.

    Generator independent: over the polynomial ring, powering a reduced basis
    gives the reduced basis of the bracket, so the cache carries over.
    """
    if e < 1:
        raise KernelError("bracket iterate must be positive")
    ring = I.ring
    q = ring.p ** e

    def power(g):
        return Polynomial(ring, {ring.m_scale(m, q): c for m, c in g.d.items()})

    out = Ideal(ring, [power(g) for g in I.gens])
    if I._gb is not None:
        out.with_gb([power(g) for g in I._gb])
    return out


def is_compatible(phi, I, stats=None, budget=None):
    """Whether phi maps I into itself, by the colon-free bracket test a*I <= I^[q].

    Reduces a modulo the bracket first; multiplying a residue by a generator
    preserves membership of the product.
    """
    phi.ring.check_same(I.ring)
    if I.is_zero_ideal():
        return True
    gb = I.groebner(stats, budget)
    if len(gb) == 1 and gb[0].is_one():
        return True
    q = phi.q
    ring = I.ring
    bracket_basis = [
        {ring.m_scale(m, q): c for m, c in g.d.items()} for g in gb
    ]
    run = make_run(ring, stats, budget)
    a_red = normal_form(phi.a.d, bracket_basis, run)
    if not a_red:
        return True
    a_red_poly = Polynomial(ring, a_red)
    for g in I.gens:
        if normal_form((a_red_poly * g).d, bracket_basis, run):
            return False
    return True


def compatibility_witness(phi, I, stats=None, budget=None):
    """A generator g with phi.a*g outside I^[q], or None when compatible."""
    phi.ring.check_same(I.ring)
    if I.is_zero_ideal():
        return None
    gb = I.groebner(stats, budget)
    if len(gb) == 1 and gb[0].is_one():
        return None
    q = phi.q
    ring = I.ring
    bracket_basis = [{ring.m_scale(m, q): c for m, c in g.d.items()} for g in gb]
    run = make_run(ring, stats, budget)
    for g in I.gens:
        rem = normal_form((phi.a * g).d, bracket_basis, run)
        if rem:
            return g, Polynomial(ring, rem)
    return None


def is_compatible_direct(phi, I, stats=None, budget=None):
    """Cross-validation of the bracket test: push every basis slice through phi.

    Checks phi(g * x^b) in I for each generator g and every exponent vector
    b < q componentwise; only feasible on small rings.
    """
    ring = phi.ring
    ring.check_same(I.ring)
    q = phi.q
    n = ring.nvars
    if q ** n > 200_000:
        raise KernelError("direct basis check is limited to small rings")

    def all_b(i):
        if i == n:
            yield []
            return
        for e in range(q):
            for rest in all_b(i + 1):
                yield [e] + rest

    for g in I.gens:
        for b in all_b(0):
            mono = Polynomial.monomial_term(ring, tuple(b))
            if not I.member(phi_apply(phi, g * mono), stats, budget):
                return False
    return True


def outside_bracket_maximal(f, q):
    """True when f is not inside (x_1^q, ..., x_n^q): membership in that
    monomial ideal is a per-monomial exponent test."""
    ring = f.ring
    return any(all(e < q for e in ring.exps(m)) for m in f.d)


def _fedder_colon(I, e, stats=None, budget=None):
    """colon(I^[q], I) with a unique-factorization shortcut for principal I."""
    ring = I.ring
    q = ring.p ** e
    if I.is_zero_ideal():
        return Ideal.unit(ring)
    if len(I.gens) == 1:
        f = I.gens[0]
        return Ideal(ring, (f ** (q - 1),))
    return bracket_power(I, e).colon(I, stats, budget)


def fedder_is_f_pure(I, stats=None, budget=None):
    """F-purity of ring/I at the origin: colon(I^[p], I) escapes (x^p for all x).

    Requires a proper homogeneous ideal; escape is read off the colon's
    generators monomial by monomial.
    """
    if I.is_unit_ideal(stats, budget):
        raise ImproperIdeal("F-purity test needs a proper ideal")
    p = I.ring.p
    colon = _fedder_colon(I, 1, stats, budget)
    return any(outside_bracket_maximal(g, p) for g in colon.gens)


@dataclass(frozen=True)
class SweepResult:
    """Outcome of an F-regularity style sweep over Frobenius levels."""

    status: str  # "confirmed" | "inconclusive"
    e: int | None
    trace: tuple
    reason: str = ""

    @property
    def confirmed(self):
        return self.status == "confirmed"


def glassbrenner_f_regular(I, c, e_max=DEFAULT_E_MAX, stats=None, budget=None):
    """Search e <= e_max with c*colon(I^[q], I) escaping (all x^q).

    The multiplier must avoid the minimal primes of I; here that is enforced
    through the computable proxy c not in sqrt(I), and a violating c yields an
    immediate inconclusive (the sweep could never certify anything).
    """
    I.ring.check_same(c.ring)
    if c.is_zero():
        raise PreconditionViolated("multiplier c must be nonzero")
    if not I.is_zero_ideal() and I.radical_member(c, stats, budget):
        return SweepResult("inconclusive", None, (), "c lies in the radical of I")
    trace = []
    for e in range(1, e_max + 1):
        q = I.ring.p ** e
        colon = _fedder_colon(I, e, stats, budget)
        escaped = any(outside_bracket_maximal(c * g, q) for g in colon.gens)
        trace.append((e, escaped))
        if escaped:
            return SweepResult("confirmed", e, tuple(trace))
    return SweepResult("inconclusive", None, tuple(trace), "sweep exhausted")


def pair_compatible_colon(I, ptilde, e, stats=None, budget=None):
    """Multipliers a with a*I <= I^[q] and a*ptilde <= ptilde^[q]: the lift of
    level-e maps of ring/I that preserve ptilde."""
    left = _fedder_colon(I, e, stats, budget)
    right = _fedder_colon(ptilde, e, stats, budget)
    if I.is_zero_ideal():
        return right
    return left.intersect(right, stats, budget)


def glassbrenner_purely_f_regular(I, ptilde, c, e_max=DEFAULT_E_MAX, stats=None, budget=None):
    """Pure F-regularity sweep for the pair (ring/I, ptilde/I) with multiplier c.

    Confirmation at level e exhibits a ptilde-preserving map sending c to a
    unit; sweeping a pool of multipliers that generate the relevant test
    elements is the caller's job.
    """
    I.ring.check_same(ptilde.ring)
    I.ring.check_same(c.ring)
    if not ptilde.contains_all(I.gens, stats, budget):
        raise PreconditionViolated("the presentation ideal must sit inside ptilde")
    if ptilde.member(c, stats, budget):
        raise PreconditionViolated("multiplier c must lie outside ptilde")
    trace = []
    for e in range(1, e_max + 1):
        q = I.ring.p ** e
        J = pair_compatible_colon(I, ptilde, e, stats, budget)
        escaped = any(outside_bracket_maximal(c * g, q) for g in J.gens)
        trace.append((e, escaped))
        if escaped:
            return SweepResult("confirmed", e, tuple(trace))
    return SweepResult("inconclusive", None, tuple(trace), "sweep exhausted")
