"""Ideal algebra on top of the Buchberger engine.

An Ideal is a generator list with a lazily computed reduced Groebner basis,
which doubles as the canonical form: two ideals in the same ring and order
are equal exactly when their reduced bases coincide.  Intersections and
radical membership go through a fresh elimination variable; colons divide
out principal intersections.
"""

from __future__ import annotations

import threading

from .errors import ImproperIdeal, IterationCapExceeded, KernelError
from .groebner import GBStats, buchberger, make_run, normal_form
from .poly import Polynomial

SATURATION_CAP = 64


class Ideal:
    """Finitely generated ideal in a RingContext."""

    __slots__ = ("ring", "gens", "_gb", "_lock")

    def __init__(self, ring, gens):
        gens = tuple(g for g in gens if not g.is_zero())
        for g in gens:
            ring.check_same(g.ring)
        self.ring = ring
        self.gens = gens
        self._gb = None
        self._lock = threading.Lock()

    @classmethod
    def zero(cls, ring):
        return cls(ring, ())

    @classmethod
    def unit(cls, ring):
        return cls(ring, (Polynomial.one(ring),))

    def __repr__(self):
        inside = ", ".join(str(g) for g in self.gens) or "0"
        return f"Ideal({inside})"

    def is_zero_ideal(self):
        return not self.gens

    def with_gb(self, gb_polys):
        """Attach a known reduced basis (used by elimination and brackets)."""
        self._gb = tuple(gb_polys)
        return self

    # -- canonical form -----------------------------------------------------

    def groebner(self, stats=None, budget=None):
        """The reduced Groebner basis, cached after the first computation."""
        if self._gb is not None:
            return self._gb
        with self._lock:
            if self._gb is None:
                run = make_run(self.ring, stats, budget)
                basis = buchberger([dict(g.d) for g in self.gens], run)
                self._gb = tuple(Polynomial(self.ring, d) for d in basis)
        return self._gb

    def gb_stats(self, budget=None):
        """Compute the basis (if needed) and report the run's counters."""
        stats = GBStats()
        gb = self.groebner(stats=stats, budget=budget)
        return gb, stats

    def canonical_key(self, stats=None, budget=None):
        """Hashable identity: the reduced basis as sorted term tuples."""
        return tuple(g.terms for g in self.groebner(stats, budget))

    def is_unit_ideal(self, stats=None, budget=None):
        gb = self.groebner(stats, budget)
        return len(gb) == 1 and gb[0].is_one()

    def contains_all(self, polys, stats=None, budget=None):
        return all(self.member(f, stats, budget) for f in polys)

    # -- predicates -----------------------------------------------------------

    def member(self, f, stats=None, budget=None):
        """True exactly when f belongs to the ideal (normal form vanishes)."""
        self.ring.check_same(f.ring)
        if f.is_zero():
            return True
        gb = self.groebner(stats, budget)
        if not gb:
            return False
        run = make_run(self.ring, stats, budget)
        return not normal_form(f.d, [g.d for g in gb], run)

    def normal_form(self, f, stats=None, budget=None):
        gb = self.groebner(stats, budget)
        run = make_run(self.ring, stats, budget)
        return Polynomial(self.ring, normal_form(f.d, [g.d for g in gb], run))

    def equal(self, other, stats=None, budget=None):
        self.ring.check_same(other.ring)
        return self.canonical_key(stats, budget) == other.canonical_key(stats, budget)

    def subset_of(self, other, stats=None, budget=None):
        return other.contains_all(self.gens, stats, budget)

    # -- constructions --------------------------------------------------------

    def sum(self, other):
        self.ring.check_same(other.ring)
        return Ideal(self.ring, self.gens + other.gens)

    def intersect(self, other, stats=None, budget=None):
        """Elimination with one auxiliary variable u: (u*I + (1-u)*J) cap k[x]."""
        self.ring.check_same(other.ring)
        ring = self.ring
        if self.is_zero_ideal() or other.is_zero_ideal():
            return Ideal.zero(ring)
        ext = ring.extended(1)
        u = Polynomial.variable(ext, 0)
        one_minus_u = Polynomial.one(ext) - u
        gens = [u * g.lift(ext) for g in self.gens]
        gens += [one_minus_u * h.lift(ext) for h in other.gens]
        run = make_run(ext, stats, budget)
        basis = buchberger([dict(g.d) for g in gens], run)
        bound = ring.restrict_mask()
        kept = [Polynomial(ring, d) for d in basis if all(m < bound for m in d)]
        # the u-free part of a reduced elimination basis is itself reduced
        return Ideal(ring, kept).with_gb(kept)

    def colon_principal(self, f, stats=None, budget=None):
        """(I : f) computed as (I cap (f)) divided by f."""
        self.ring.check_same(f.ring)
        if f.is_zero():
            raise KernelError("colon by the zero polynomial")
        if f.is_constant():
            return Ideal(self.ring, self.gens)
        if self.is_zero_ideal():
            return Ideal.zero(self.ring)
        inter = self.intersect(Ideal(self.ring, (f,)), stats, budget)
        gens = [poly_divexact(g, f) for g in inter.gens]
        return Ideal(self.ring, gens)

    def colon(self, other, stats=None, budget=None):
        """(I : J) = {g : g*J inside I}, via the intersection over J's generators."""
        self.ring.check_same(other.ring)
        if other.is_zero_ideal():
            raise KernelError("colon by the zero ideal")
        parts = [self.colon_principal(f, stats, budget) for f in other.gens]
        result = parts[0]
        for part in parts[1:]:
            result = result.intersect(part, stats, budget)
        return result

    def saturate(self, f, stats=None, budget=None):
        """(I : f^infinity) by iterating the colon until it stabilizes."""
        if f.is_zero():
            raise KernelError("saturation by the zero polynomial")
        current = self
        current_key = current.canonical_key(stats, budget)
        for _ in range(SATURATION_CAP):
            nxt = current.colon_principal(f, stats, budget)
            nxt_key = nxt.canonical_key(stats, budget)
            if nxt_key == current_key:
                return current
            current, current_key = nxt, nxt_key
        raise IterationCapExceeded(f"saturation did not stabilize in {SATURATION_CAP} steps")

    def radical_member(self, f, stats=None, budget=None):
        """True when some power of f lies in the ideal (one extra variable)."""
        self.ring.check_same(f.ring)
        if f.is_zero():
            return True
        if self.member(f, stats, budget):
            return True
        ring = self.ring
        ext = ring.extended(1)
        u = Polynomial.variable(ext, 0)
        gens = [g.lift(ext) for g in self.gens]
        gens.append(Polynomial.one(ext) - u * f.lift(ext))
        run = make_run(ext, stats, budget)
        basis = buchberger([dict(g.d) for g in gens], run)
        return len(basis) == 1 and basis[0] == {0: 1}

    def krull_dim(self, stats=None, budget=None):
        """Krull dimension of ring/I via independent variable sets.

        The dimension equals the largest number of variables U such that no
        leading monomial of the reduced basis is supported inside U.
        """
        gb = self.groebner(stats, budget)
        if len(gb) == 1 and gb[0].is_one():
            raise ImproperIdeal("the unit ideal has no Krull dimension")
        ring = self.ring
        n = ring.nvars
        supports = set()
        for g in gb:
            exps = ring.exps(g.lead_monomial())
            supports.add(sum(1 << i for i, e in enumerate(exps) if e))
        # keep only minimal supports
        minimal = [s for s in supports if not any(t != s and t & s == t for t in supports)]
        minimal.sort()
        full = (1 << n) - 1
        memo = {}

        def best(allowed):
            cached = memo.get(allowed)
            if cached is not None:
                return cached
            violated = 0
            for s in minimal:
                if s & allowed == s:
                    violated = s
                    break
            if not violated:
                r = allowed.bit_count()
            else:
                r = 0
                v = violated
                while v:
                    b = v & -v
                    r = max(r, best(allowed & ~b))
                    v ^= b
            memo[allowed] = r
            return r

        return best(full)


def poly_divexact(g, f):
    """Exact quotient g/f; raises if f does not divide g."""
    ring = g.ring
    p = ring.p
    if f.is_zero():
        raise KernelError("division by zero polynomial")
    lf = f.lead_monomial()
    cf_inv = pow(f.d[lf], -1, p)
    rem = dict(g.d)
    q = {}
    key = ring.key
    divisible = ring.m_divisible
    while rem:
        m = max(rem, key=key)
        if not divisible(m, lf):
            raise KernelError("inexact polynomial division")
        c = (rem[m] * cf_inv) % p
        mu = m - lf
        q[mu] = c
        for mf, cfc in f.d.items():
            m2 = mu + mf
            v = (rem.get(m2, 0) - c * cfc) % p
            if v:
                rem[m2] = v
            else:
                rem.pop(m2, None)
    return Polynomial(ring, q)
