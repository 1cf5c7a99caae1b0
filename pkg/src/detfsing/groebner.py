"""Buchberger engine over F_p with normal pair selection, both Buchberger
criteria via the Gebauer-Moeller pair update, and hard resource budgets.

The engine operates on raw coefficient dicts (packed monomial -> residue) for
speed; the Ideal layer wraps results back into Polynomial values.  Budgets
count single-term cancellations; exceeding any cap raises BudgetExceeded with
the partial statistics attached.
"""

from __future__ import annotations

import heapq
import os
import time
from dataclasses import dataclass

from .errors import BudgetExceeded, KernelError

DEFAULT_MAX_GB_STEPS = 5_000_000
DEFAULT_MAX_SECONDS = 120.0

_TIME_CHECK_MASK = 0x3FF  # look at the clock every 1024 reductions


@dataclass
class GBStats:
    """Resource counters for one or more Groebner runs."""

    spairs_processed: int = 0
    reductions: int = 0
    max_degree_seen: int = 0
    elapsed_ms: int = 0

    def merge(self, other):
        self.spairs_processed += other.spairs_processed
        self.reductions += other.reductions
        self.max_degree_seen = max(self.max_degree_seen, other.max_degree_seen)
        self.elapsed_ms += other.elapsed_ms

    def as_dict(self):
        return {
            "spairs": self.spairs_processed,
            "reductions": self.reductions,
            "max_degree": self.max_degree_seen,
            "elapsed_ms": self.elapsed_ms,
        }


@dataclass(frozen=True)
class Budget:
    """Step, wall-clock, and degree caps for Groebner computations."""

    max_steps: int = DEFAULT_MAX_GB_STEPS
    max_seconds: float = DEFAULT_MAX_SECONDS
    max_degree: int | None = None

    @classmethod
    def default(cls):
        steps = int(os.environ.get("DETF_MAX_GB_STEPS", DEFAULT_MAX_GB_STEPS))
        seconds = float(os.environ.get("DETF_MAX_SECONDS", DEFAULT_MAX_SECONDS))
        if steps <= 0 or seconds <= 0:
            raise KernelError("budget caps must be positive")
        return cls(max_steps=steps, max_seconds=seconds)


class _Run:
    """Mutable state of one engine invocation: counters plus deadline."""

    __slots__ = ("ring", "stats", "budget", "t0", "deadline")

    def __init__(self, ring, stats=None, budget=None):
        self.ring = ring
        self.stats = stats if stats is not None else GBStats()
        self.budget = budget if budget is not None else Budget.default()
        self.t0 = time.monotonic()
        self.deadline = self.t0 + self.budget.max_seconds

    def flush_time(self):
        self.stats.elapsed_ms = int((time.monotonic() - self.t0) * 1000)

    def out_of_time(self):
        return time.monotonic() > self.deadline

    def bail(self, reason):
        self.flush_time()
        raise BudgetExceeded(self.stats, reason)


def make_run(ring, stats=None, budget=None):
    return _Run(ring, stats, budget)


# -- reduction ---------------------------------------------------------------


def reduce_full(f, reducers, run):
    """Fully reduce dict f modulo monic reducers [(lm, tail_items), ...].

    Consumes f.  Returns the normal form as a new dict; every monomial of the
    result is divisible by no reducer leading monomial.
    """
    ring = run.ring
    if not f or not reducers:
        return f
    p = ring.p
    key = ring.key
    G = ring.GUARD
    stats = run.stats
    steps = stats.reductions
    limit = run.budget.max_steps
    out = {}
    heap = [(-key(m), m) for m in f]
    heapq.heapify(heap)
    pop = heapq.heappop
    push = heapq.heappush
    while heap:
        _, m = pop(heap)
        c = f.pop(m, 0)
        if not c:
            continue  # stale heap entry
        mg = m | G
        for lm, tail in reducers:
            if (mg - lm) & G == G:
                steps += 1
                if steps >= limit:
                    stats.reductions = steps
                    run.bail("step cap")
                if not steps & _TIME_CHECK_MASK:
                    if run.out_of_time():
                        stats.reductions = steps
                        run.bail("wall clock")
                mu = m - lm
                for e, a in tail:
                    m2 = mu + e
                    v = f.get(m2)
                    if v is None:
                        v2 = (-c * a) % p
                        if v2:
                            f[m2] = v2
                            push(heap, (-key(m2), m2))
                    else:
                        v2 = (v - c * a) % p
                        if v2:
                            f[m2] = v2
                        else:
                            del f[m2]
                break
        else:
            out[m] = c
    stats.reductions = steps
    deg = ring.m_deg
    if out:
        d = deg(max(out, key=deg))
        if d > stats.max_degree_seen:
            stats.max_degree_seen = d
    return out


def _make_reducer(d, ring):
    """Split a monic dict into (leading monomial, tail items tuple)."""
    lm = max(d, key=ring.key)
    tail = tuple((m, c) for m, c in d.items() if m != lm)
    return lm, tail


def _monicize(d, ring):
    lm = max(d, key=ring.key)
    c = d[lm]
    if c != 1:
        inv = pow(c, -1, ring.p)
        d = {m: (v * inv) % ring.p for m, v in d.items()}
    return d, lm


def _spoly(da, lma, db, lmb, run):
    ring = run.ring
    p = ring.p
    L = ring.m_lcm(lma, lmb)
    ma = L - lma
    mb = L - lmb
    out = {}
    for m, c in da.items():
        out[m + ma] = c
    for m, c in db.items():
        m2 = m + mb
        v = out.get(m2)
        if v is None:
            out[m2] = (-c) % p
        else:
            v = (v - c) % p
            if v:
                out[m2] = v
            else:
                del out[m2]
    return out


# -- Buchberger with Gebauer-Moeller update ----------------------------------


def buchberger(gens, run):
    """Reduced Groebner basis of the dicts `gens` under the run's ring order.

    Returns a list of monic dicts sorted by decreasing leading monomial; []
    for the zero ideal, [{0: 1}] when the ideal is the whole ring.
    """
    ring = run.ring
    key = ring.key
    lcm = ring.m_lcm
    divisible = ring.m_divisible

    polys = []      # all accepted members, monic
    lms = []
    active = []     # indices forming the current basis
    pairs = {}      # (i, j) -> lcm of leading monomials
    heap = []       # (key(lcm), seq, i, j)
    seq = 0

    def reducers():
        return [(lms[i], tails[i]) for i in active]

    tails = []

    def add_poly(d):
        nonlocal seq
        d, lm = _monicize(d, ring)
        idx = len(polys)
        polys.append(d)
        lms.append(lm)
        tails.append(tuple((m, c) for m, c in d.items() if m != lm))
        # Gebauer-Moeller update of the pair set
        lmh = lm
        cand = [(g, lcm(lmh, lms[g])) for g in active]
        kept = []
        for a in range(len(cand)):
            g, L = cand[a]
            if lmh + lms[g] == L:  # coprime leads: S-pair reduces to zero
                kept.append((g, L, False))
                continue
            dominated = any(
                L2 != L and divisible(L, L2) for _, L2 in cand[:a] + cand[a + 1:]
            ) or any(L2 == L for _, L2, _keep in kept if _keep)
            if not dominated:
                kept.append((g, L, True))
        # chain criterion against existing pairs
        for (i, j), L in list(pairs.items()):
            if divisible(L, lmh) and lcm(lms[i], lmh) != L and lcm(lms[j], lmh) != L:
                del pairs[(i, j)]
        for g, L, keep in kept:
            if keep:
                pairs[(g, idx)] = L
                heapq.heappush(heap, (key(L), seq, g, idx))
                seq += 1
        # drop basis members whose lead became redundant
        active[:] = [g for g in active if not divisible(lms[g], lmh)]
        active.append(idx)

    # seed with interreduced inputs, smallest leading terms first
    seeds = [dict(d) for d in gens if d]
    seeds.sort(key=lambda d: (key(max(d, key=key)), len(d)))
    for d in seeds:
        h = reduce_full(d, reducers(), run)
        if h:
            if max(h, key=key) == 0:
                return [{0: 1}]
            add_poly(h)

    while heap:
        kL, _, i, j = heapq.heappop(heap)
        L = pairs.pop((i, j), None)
        if L is None:
            continue  # pruned by the chain criterion
        if run.budget.max_degree is not None and ring.m_deg(L) > run.budget.max_degree:
            run.bail("degree cap")
        run.stats.spairs_processed += 1
        s = _spoly(polys[i], lms[i], polys[j], lms[j], run)
        h = reduce_full(s, reducers(), run)
        if h:
            if max(h, key=key) == 0:
                return [{0: 1}]
            add_poly(h)

    # interreduce to the unique reduced basis
    active.sort(key=lambda g: key(lms[g]))
    minimal = []
    for g in active:
        if not any(divisible(lms[g], lms[h]) for h in minimal if h != g):
            minimal.append(g)
    result = []
    for g in minimal:
        others = [(lms[h], tails[h]) for h in minimal if h != g]
        red = reduce_full(dict(polys[g]), others, run)
        if red:
            result.append(red)
    result.sort(key=lambda d: key(max(d, key=key)), reverse=True)
    run.flush_time()
    return result


def normal_form(fd, basis_dicts, run):
    """Normal form of dict fd against a list of monic basis dicts."""
    reducers = [_make_reducer(d, run.ring) for d in basis_dicts]
    return reduce_full(dict(fd), reducers, run)
