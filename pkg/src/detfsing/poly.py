"""Sparse multivariate polynomials over F_p, their text grammar, and the
Frobenius trace on monomials.

The canonical form is a coefficient dict keyed by packed monomials with no
zero entries; printed output lists terms in descending ring order with
coefficients as residues in 1..p-1 (no minus signs).
"""

from __future__ import annotations

import re

from .errors import KernelError, ParseError, UndeclaredVariable
from .ring import RingContext

# -- raw dict arithmetic (shared with the Groebner engine) ------------------


def d_add(a, b, p):
    out = dict(a)
    for m, c in b.items():
        v = out.get(m)
        if v is None:
            out[m] = c
        else:
            v = (v + c) % p
            if v:
                out[m] = v
            else:
                del out[m]
    return out


def d_sub(a, b, p):
    out = dict(a)
    for m, c in b.items():
        v = out.get(m)
        if v is None:
            out[m] = (-c) % p
        else:
            v = (v - c) % p
            if v:
                out[m] = v
            else:
                del out[m]
    return out


def d_neg(a, p):
    return {m: p - c for m, c in a.items()}


def d_scale(a, c, p):
    c %= p
    if c == 0:
        return {}
    if c == 1:
        return dict(a)
    return {m: (v * c) % p for m, v in a.items()}


def d_mul_term(a, mon, c, p):
    """Multiply by the single term c*x^mon."""
    c %= p
    if c == 0:
        return {}
    if c == 1:
        return {m + mon: v for m, v in a.items()}
    return {m + mon: (v * c) % p for m, v in a.items()}


def d_mul(a, b, p):
    if len(a) < len(b):
        a, b = b, a
    out = {}
    for m2, c2 in b.items():
        for m1, c1 in a.items():
            m = m1 + m2
            v = out.get(m)
            if v is None:
                out[m] = (c1 * c2) % p
            else:
                v = (v + c1 * c2) % p
                if v:
                    out[m] = v
                else:
                    del out[m]
    return {m: c for m, c in out.items() if c}


# -- the polynomial type ----------------------------------------------------


class Polynomial:
    """Immutable canonical sum of terms over F_p in a fixed RingContext."""

    __slots__ = ("ring", "d", "_terms", "_hash")

    def __init__(self, ring, d):
        self.ring = ring
        self.d = d
        self._terms = None
        self._hash = None

    # construction

    @classmethod
    def from_dict(cls, ring, d):
        return cls(ring, {m: c % ring.p for m, c in d.items() if c % ring.p})

    @classmethod
    def zero(cls, ring):
        return cls(ring, {})

    @classmethod
    def one(cls, ring):
        return cls(ring, {0: 1})

    @classmethod
    def const(cls, ring, c):
        c %= ring.p
        return cls(ring, {0: c} if c else {})

    @classmethod
    def variable(cls, ring, i):
        return cls(ring, {ring.var_mon(i): 1})

    @classmethod
    def monomial_term(cls, ring, exps, c=1):
        c %= ring.p
        return cls(ring, {ring.monomial(exps): c} if c else {})

    # canonical term list (descending ring order)

    @property
    def terms(self):
        if self._terms is None:
            self._terms = tuple(self.ring.sort_terms(self.d.items()))
        return self._terms

    def is_zero(self):
        return not self.d

    def is_one(self):
        return self.d == {0: 1}

    def is_constant(self):
        return not self.d or set(self.d) == {0}

    def lead_monomial(self):
        if not self.d:
            raise KernelError("zero polynomial has no leading term")
        key = self.ring.key
        return max(self.d, key=key)

    def lead_coeff(self):
        return self.d[self.lead_monomial()]

    def total_degree(self):
        if not self.d:
            return -1
        deg = self.ring.m_deg
        return max(deg(m) for m in self.d)

    def monic(self):
        if not self.d:
            return self
        c = self.lead_coeff()
        if c == 1:
            return self
        inv = pow(c, -1, self.ring.p)
        return Polynomial(self.ring, d_scale(self.d, inv, self.ring.p))

    def __len__(self):
        return len(self.d)

    # arithmetic

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            self.ring.check_same(other.ring)
            return other
        if isinstance(other, int):
            return Polynomial.const(self.ring, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Polynomial(self.ring, d_add(self.d, other.d, self.ring.p))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Polynomial(self.ring, d_sub(self.d, other.d, self.ring.p))

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Polynomial(self.ring, d_sub(other.d, self.d, self.ring.p))

    def __neg__(self):
        return Polynomial(self.ring, d_neg(self.d, self.ring.p))

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Polynomial(self.ring, d_mul(self.d, other.d, self.ring.p))

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise KernelError("negative powers are not defined")
        result = Polynomial.one(self.ring)
        base = self
        while n:
            if n & 1:
                result = result * base
            base_needed = n >> 1
            if base_needed:
                base = base * base
            n = base_needed
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            return self.d == (Polynomial.const(self.ring, other)).d
        return (
            isinstance(other, Polynomial)
            and self.ring == other.ring
            and self.d == other.d
        )

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self.d.items())))
        return self._hash

    def __str__(self):
        return poly_print(self)

    def __repr__(self):
        return f"Polynomial({poly_print(self)})"

    # ring moves

    def lift(self, bigger):
        """Reinterpret in an extension ring built by RingContext.extended."""
        if bigger.vars[-self.ring.nvars:] != self.ring.vars:
            raise KernelError("target is not an extension of this ring")
        return Polynomial(bigger, dict(self.d))

    def project(self, smaller):
        """Inverse of lift; all coordinates on the extra variables must vanish."""
        bound = smaller.restrict_mask()
        if any(m >= bound for m in self.d):
            raise KernelError("polynomial involves elimination variables")
        return Polynomial(smaller, dict(self.d))

    def transport(self, target, var_map):
        """Rename variables: var i here becomes var var_map[i] in target."""
        n = self.ring.nvars
        out = {}
        for m, c in self.d.items():
            exps = self.ring.exps(m)
            e2 = [0] * target.nvars
            for i in range(n):
                e2[var_map[i]] += exps[i]
            m2 = target.monomial(tuple(e2))
            out[m2] = (out.get(m2, 0) + c) % target.p
        return Polynomial(target, {m: c for m, c in out.items() if c})

    def eval_at_one(self, idx, target):
        """Substitute variable idx := 1; target must be self.ring.without(idx)."""
        n = self.ring.nvars
        out = {}
        p = target.p
        for m, c in self.d.items():
            exps = self.ring.exps(m)
            e2 = exps[:idx] + exps[idx + 1:]
            m2 = target.monomial(e2)
            v = (out.get(m2, 0) + c) % p
            if v:
                out[m2] = v
            else:
                out.pop(m2, None)
        return Polynomial(target, out)


# -- Frobenius trace ---------------------------------------------------------


def trace_apply(f, e):
    """Apply the e-th Frobenius trace to f.

    On a monomial x^a the trace returns x^((a-(q-1))/q) when every exponent
    is congruent to q-1 mod q (q = p^e) and 0 otherwise; extended F_p-linearly
    (coefficients are q-th powers of themselves).
    """
    if e < 1:
        raise KernelError("trace iterate must be positive")
    ring = f.ring
    q = ring.p ** e
    out = {}
    for m, c in f.d.items():
        exps = ring.exps(m)
        if all(a % q == q - 1 for a in exps):
            m2 = ring.monomial(tuple((a - (q - 1)) // q for a in exps))
            out[m2] = c
    return Polynomial(ring, out)


# -- text grammar ------------------------------------------------------------
#
# poly   := ['-'] term (('+'|'-') term)*
# term   := [nat '*'] factor ('*' factor)* | nat
# factor := var ['^' nat]
# var    := name '[' nat ',' nat ']'
#
# Whitespace-insensitive.  Canonical printing uses descending ring order,
# coefficients in 1..p-1 and no '-' signs.

_TOKEN = re.compile(r"\s*([A-Za-z_][A-Za-z0-9_]*|\d+|[\[\],^*+-])")


def _tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            stripped = text[pos:].lstrip()
            if not stripped:
                break
            raise ParseError(f"unexpected character {stripped[0]!r}", pos)
        tokens.append((m.group(1), m.start(1)))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, tokens, ring):
        self.tokens = tokens
        self.ring = ring
        self.k = 0

    def peek(self):
        return self.tokens[self.k][0] if self.k < len(self.tokens) else None

    def pos(self):
        return self.tokens[self.k][1] if self.k < len(self.tokens) else -1

    def take(self, expect=None):
        if self.k >= len(self.tokens):
            raise ParseError(f"unexpected end of input, expected {expect}", -1)
        tok, pos = self.tokens[self.k]
        if expect is not None and tok != expect:
            raise ParseError(f"expected {expect!r}, found {tok!r}", pos)
        self.k += 1
        return tok, pos

    def nat(self):
        tok, pos = self.take()
        if not tok.isdigit():
            raise ParseError(f"expected a number, found {tok!r}", pos)
        return int(tok)

    def factor(self):
        tok, pos = self.take()
        if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", tok):
            raise ParseError(f"expected a variable name, found {tok!r}", pos)
        self.take("[")
        i = self.nat()
        self.take(",")
        j = self.nat()
        self.take("]")
        name = f"{tok}[{i},{j}]"
        idx = self.ring.index.get(name)
        if idx is None:
            raise UndeclaredVariable(f"undeclared variable {name}", pos)
        exp = 1
        if self.peek() == "^":
            self.take("^")
            exp = self.nat()
        return idx, exp

    def term(self):
        """Return (coeff, exponent vector)."""
        exps = [0] * self.ring.nvars
        coeff = 1
        tok = self.peek()
        if tok is not None and tok.isdigit():
            coeff = self.nat()
            if self.peek() != "*":
                return coeff, exps
            self.take("*")
        while True:
            idx, e = self.factor()
            exps[idx] += e
            if self.peek() == "*":
                self.take("*")
                continue
            return coeff, exps

    def poly(self):
        p = self.ring.p
        acc = {}
        sign = 1
        if self.peek() == "-":
            self.take("-")
            sign = -1
        while True:
            coeff, exps = self.term()
            m = self.ring.monomial(tuple(exps))
            v = (acc.get(m, 0) + sign * coeff) % p
            if v:
                acc[m] = v
            else:
                acc.pop(m, None)
            tok = self.peek()
            if tok == "+":
                self.take("+")
                sign = 1
            elif tok == "-":
                self.take("-")
                sign = -1
            elif tok is None:
                return acc
            else:
                raise ParseError(f"expected '+', '-' or end, found {tok!r}", self.pos())


def poly_parse(text, ring):
    """Parse text in the polynomial grammar into a canonical Polynomial."""
    tokens = _tokenize(text)
    if not tokens:
        raise ParseError("empty input", 0)
    return Polynomial(ring, _Parser(tokens, ring).poly())


def poly_print(f):
    """Canonical text: descending terms, residue coefficients, no minus signs."""
    if not f.d:
        return "0"
    ring = f.ring
    parts = []
    for m, c in f.terms:
        factors = []
        for i, e in enumerate(ring.exps(m)):
            if e == 1:
                factors.append(ring.names[i])
            elif e > 1:
                factors.append(f"{ring.names[i]}^{e}")
        if not factors:
            parts.append(str(c))
        elif c == 1:
            parts.append("*".join(factors))
        else:
            parts.append(f"{c}*" + "*".join(factors))
    return " + ".join(parts)
