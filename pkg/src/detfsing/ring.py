"""Ring contexts: block-tagged variables, a prime modulus, and a term order.

Monomials are packed into a single Python int, one 16-bit field per variable
with variable 0 in the most significant field.  The top bit of each field is
a guard bit, so exponents must stay below 2**15; that is ample for bracket
powers and colon computations at desk scale, and it makes divisibility and
lcm single big-int operations.
"""

from __future__ import annotations

from typing import NamedTuple

from .errors import KernelError, RingMismatch

BLOCK_TAGS = ("x", "xprime", "z", "w", "r", "c", "u", "v", "aux")

FIELD_BITS = 16
FIELD_MASK = (1 << FIELD_BITS) - 1
MAX_EXPONENT = (1 << (FIELD_BITS - 1)) - 1
MAX_PRIME = 46337  # squares still fit comfortably in 32-bit intermediates


class Var(NamedTuple):
    block: str
    i: int
    j: int

    @property
    def name(self):
        return f"{self.block}[{self.i},{self.j}]"


def is_prime(p):
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def _normalize_order(order, nvars):
    """Return the order as a tuple of (style, count) blocks covering all vars."""
    if isinstance(order, str):
        style = {"grevlex": "grevlex", "lex": "lex", "diaglex": "lex"}.get(order)
        if style is None:
            raise KernelError(f"unknown term order {order!r}")
        return ((style, nvars),)
    blocks = tuple((str(s), int(c)) for s, c in order)
    if sum(c for _, c in blocks) != nvars or any(c <= 0 for _, c in blocks):
        raise KernelError("order blocks must partition the variables")
    for s, _ in blocks:
        if s not in ("grevlex", "lex"):
            raise KernelError(f"unknown block order style {s!r}")
    return blocks


class RingContext:
    """An ambient polynomial ring F_p[vars] with a fixed term order.

    Immutable after construction; order keys and degrees are memoized per
    monomial, which is safe to share across threads.
    """

    __slots__ = (
        "vars", "p", "order_blocks", "nvars", "names", "index",
        "_shifts", "GUARD", "_key_cache", "_deg_cache", "_one_mask",
    )

    def __init__(self, vars, p, order="grevlex"):
        vars = tuple(Var(*v) for v in vars)
        if not vars:
            raise KernelError("a ring needs at least one variable")
        for v in vars:
            if v.block not in BLOCK_TAGS:
                raise KernelError(f"unknown block tag {v.block!r}")
        names = tuple(v.name for v in vars)
        if len(set(names)) != len(names):
            raise KernelError("variable names must be unique")
        if not (2 <= p <= MAX_PRIME) or not is_prime(p):
            raise KernelError(f"modulus {p} must be a prime in [2, {MAX_PRIME}]")
        self.vars = vars
        self.p = p
        self.nvars = len(vars)
        self.names = names
        self.index = {nm: i for i, nm in enumerate(names)}
        self.order_blocks = _normalize_order(order, self.nvars)
        n = self.nvars
        self._shifts = tuple((n - 1 - i) * FIELD_BITS for i in range(n))
        self.GUARD = sum(1 << (sh + FIELD_BITS - 1) for sh in self._shifts)
        self._one_mask = sum(1 << sh for sh in self._shifts)
        self._key_cache = {}
        self._deg_cache = {}

    # -- identity ---------------------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, RingContext)
            and self.vars == other.vars
            and self.p == other.p
            and self.order_blocks == other.order_blocks
        )

    def __hash__(self):
        return hash((self.vars, self.p, self.order_blocks))

    def __repr__(self):
        order = "+".join(f"{s}({c})" for s, c in self.order_blocks)
        return f"RingContext(F_{self.p}[{', '.join(self.names)}], {order})"

    def check_same(self, other):
        if self != other:
            raise RingMismatch(f"ring mismatch: {self!r} vs {other!r}")

    # -- monomials --------------------------------------------------------

    def monomial(self, exps):
        if len(exps) != self.nvars:
            raise KernelError("exponent vector length mismatch")
        m = 0
        for e, sh in zip(exps, self._shifts):
            if not (0 <= e <= MAX_EXPONENT):
                raise KernelError(f"exponent {e} out of range [0, {MAX_EXPONENT}]")
            m |= e << sh
        return m

    def exps(self, m):
        return tuple((m >> sh) & FIELD_MASK for sh in self._shifts)

    def var_mon(self, i):
        return 1 << self._shifts[i]

    def m_deg(self, m):
        d = self._deg_cache.get(m)
        if d is None:
            d = sum((m >> sh) & FIELD_MASK for sh in self._shifts)
            self._deg_cache[m] = d
        return d

    def m_divisible(self, a, b):
        """True when b divides a (componentwise a >= b)."""
        g = self.GUARD
        return ((a | g) - b) & g == g

    def m_lcm(self, a, b):
        g = self.GUARD
        d = (b | g) - a
        full = ((d & g) >> (FIELD_BITS - 1)) * FIELD_MASK
        return a + (d & ~g & full)

    def m_scale(self, m, q):
        """Componentwise multiply exponents by q, with overflow guard."""
        out = 0
        for sh in self._shifts:
            e = ((m >> sh) & FIELD_MASK) * q
            if e > MAX_EXPONENT:
                raise KernelError(f"exponent overflow: {e} > {MAX_EXPONENT}")
            out |= e << sh
        return out

    # -- term order -------------------------------------------------------

    def key(self, m):
        """Order key: bigger key means bigger monomial; injective on monomials."""
        k = self._key_cache.get(m)
        if k is None:
            k = self._compute_key(m)
            self._key_cache[m] = k
        return k

    def _compute_key(self, m):
        exps = self.exps(m)
        k = 0
        start = 0
        for style, count in self.order_blocks:
            end = start + count
            if style == "grevlex":
                kb = sum(exps[start:end])
                for i in range(end - 1, start - 1, -1):
                    kb = (kb << FIELD_BITS) | (FIELD_MASK - exps[i])
                k = (k << (32 + FIELD_BITS * count)) | kb
            else:  # lex
                kb = 0
                for i in range(start, end):
                    kb = (kb << FIELD_BITS) | exps[i]
                k = (k << (FIELD_BITS * count)) | kb
            start = end
        return k

    def sort_terms(self, items):
        """Sort (monomial, coeff) pairs descending in the ring order."""
        key = self.key
        return sorted(items, key=lambda mc: key(mc[0]), reverse=True)

    # -- derived rings ----------------------------------------------------

    def extended(self, count=1):
        """Ring with `count` fresh elimination variables prepended.

        The new variables form their own grevlex block ahead of the existing
        blocks, so the extended order eliminates them and restricts to this
        ring's order on old monomials.  Packed monomials carry over verbatim:
        old variables keep their field positions.
        """
        depth = 1 + max((v.i for v in self.vars if v.block == "aux"), default=0)
        aux = tuple(Var("aux", depth, j + 1) for j in range(count))
        ring = RingContext(
            aux + self.vars, self.p, (("grevlex", count),) + self.order_blocks
        )
        return ring

    def restrict_mask(self):
        """Monomials of the parent ring of an extension are below this bound."""
        return 1 << (self.nvars * FIELD_BITS)

    def without(self, idx):
        """Ring with variable idx removed; blocks shrink accordingly."""
        if self.nvars == 1:
            raise KernelError("cannot remove the last variable")
        vars2 = self.vars[:idx] + self.vars[idx + 1:]
        blocks = []
        start = 0
        for style, count in self.order_blocks:
            if start <= idx < start + count:
                if count > 1:
                    blocks.append((style, count - 1))
            else:
                blocks.append((style, count))
            start += count
        return RingContext(vars2, self.p, tuple(blocks))
