"""Constructors for generic determinantal data: minor ideals, the divisor
ideal, the splitting polynomial, gamma minors, bordered-minor identities,
and the interpolation family of pairs with their entry reductions.

Every constructor builds a fresh RingContext; cross-construction comparisons
go through explicit variable renaming.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import KernelError, PreconditionViolated
from .ideals import Ideal
from .matrix import PolyMatrix, poly_det
from .poly import Polynomial
from .ring import RingContext, Var


@dataclass(frozen=True)
class DeterminantalSpec:
    """Size parameters (m, n, t) of a generic matrix and its minor ideal."""

    m: int
    n: int
    t: int

    def __post_init__(self):
        if not (self.t >= 1 and self.m >= self.t and self.n >= self.t):
            raise PreconditionViolated(
                f"need m, n >= t >= 1, got (m, n, t) = ({self.m}, {self.n}, {self.t})"
            )

    def dimension_formula(self):
        return (self.t - 1) * (self.m + self.n - self.t + 1)

    def height_formula(self):
        return (self.m - self.t + 1) * (self.n - self.t + 1)


def generic_matrix(m, n, p=2, order="grevlex"):
    """An m x n matrix of fresh indeterminates x[i,j] over F_p."""
    if m < 1 or n < 1:
        raise PreconditionViolated("matrix dimensions must be positive")
    vars = [Var("x", i + 1, j + 1) for i in range(m) for j in range(n)]
    ring = RingContext(vars, p, order)
    entries = [Polynomial.variable(ring, k) for k in range(m * n)]
    return PolyMatrix(ring, m, n, entries)


def minors_ideal(M, t):
    """Ideal generated by all t x t minors of M."""
    if not (1 <= t <= min(M.rows, M.cols)):
        raise PreconditionViolated(f"minor size {t} out of range for {M.rows}x{M.cols}")
    gens = [
        poly_det(M.submatrix(rows, cols))
        for rows in itertools.combinations(range(M.rows), t)
        for cols in itertools.combinations(range(M.cols), t)
    ]
    return Ideal(M.ring, gens)


class DetContext:
    """A generic matrix together with its minor and divisor ideals.

    The divisor rows are the first t-1 rows; the divisor ideal is returned as
    its preimage in the polynomial ring, i.e. including the t-minors.
    """

    def __init__(self, spec, p=2, order="grevlex"):
        if isinstance(spec, tuple):
            spec = DeterminantalSpec(*spec)
        self.spec = spec
        self.matrix = generic_matrix(spec.m, spec.n, p, order)
        self.ring = self.matrix.ring
        self.presentation = minors_ideal(self.matrix, spec.t)
        if spec.t >= 2:
            self.xprime = self.matrix.submatrix(range(spec.t - 1), range(spec.n))
            self.xprime_minors = minors_ideal(self.xprime, spec.t - 1)
            self.divisor = Ideal(
                self.ring, self.xprime_minors.gens + self.presentation.gens
            )
        else:
            self.xprime = None
            self.xprime_minors = None
            self.divisor = None

    def delta(self):
        return splitting_delta_of(self.matrix)


def divisor_ideal(spec, p=2, order="grevlex"):
    """Preimage of the height-one divisor: (t-1)-minors of the first t-1 rows
    plus all t-minors, in a fresh ring."""
    if isinstance(spec, tuple):
        spec = DeterminantalSpec(*spec)
    if spec.t < 2:
        raise PreconditionViolated("the divisor ideal needs t >= 2")
    return DetContext(spec, p, order).divisor


def splitting_delta_of(M):
    """Product of the diagonal-block minors of M.

    Lower-left i-minors for i < min(m, n), the min(m,n)-minors of the
    |n-m|+1 central windows, then upper-right i-minors in decreasing order.
    Total degree m*n; the product of all entries appears with coefficient +-1.
    """
    m, n = M.rows, M.cols
    mu = min(m, n)
    factors = []
    for i in range(1, mu):
        factors.append(poly_det(M.submatrix(range(m - i, m), range(i))))
    if m <= n:
        for i in range(1, n - m + 2):
            factors.append(poly_det(M.submatrix(range(m), range(i - 1, i - 1 + m))))
    else:
        for j in range(1, m - n + 2):
            i = m - n + 2 - j
            factors.append(poly_det(M.submatrix(range(i - 1, i - 1 + n), range(n))))
    for i in range(mu - 1, 0, -1):
        factors.append(poly_det(M.submatrix(range(i), range(n - i, n))))
    out = Polynomial.one(M.ring)
    for f in factors:
        out = out * f
    return out


def splitting_delta(spec, p=2, order="grevlex"):
    if isinstance(spec, tuple):
        spec = DeterminantalSpec(*spec)
    return splitting_delta_of(generic_matrix(spec.m, spec.n, p, order))


def gamma_minors(M):
    """Maximal minors pairing one column with the trailing r-1 columns.

    For an r x c matrix with r <= c there are h = c-r+1 of them; the i-th
    takes columns (i, c-r+2, ..., c).
    """
    r, c = M.rows, M.cols
    if r > c:
        raise PreconditionViolated("gamma minors need at least as many columns as rows")
    h = c - r + 1
    tail = list(range(c - r + 1, c))
    return [poly_det(M.submatrix(range(r), [i] + tail)) for i in range(h)]


def beta_minor(M, i):
    """The i-th upper minor: first min(i, m) rows of the last i columns,
    identity-padded below when i exceeds the row count.  beta_0 = 1."""
    m, n = M.rows, M.cols
    if i == 0:
        return Polynomial.one(M.ring)
    if not (1 <= i <= n):
        raise PreconditionViolated(f"beta index {i} out of range")
    if i <= m:
        return poly_det(M.submatrix(range(i), range(n - i, n)))
    ring = M.ring
    one = Polynomial.one(ring)
    zero = Polynomial.zero(ring)
    rows = []
    for r in range(m):
        rows.extend(M[r, c] for c in range(n - i, n))
    for a in range(i - m):
        rows.extend(one if c == m + a else zero for c in range(i))
    return poly_det(PolyMatrix(ring, i, i, rows))


def _beta_matrix(M, i):
    m, n = M.rows, M.cols
    ring = M.ring
    one = Polynomial.one(ring)
    zero = Polynomial.zero(ring)
    rows = []
    for r in range(min(i, m)):
        rows.extend(M[r, c] for c in range(n - i, n))
    for a in range(i - m):
        rows.extend(one if c == m + a else zero for c in range(i))
    return PolyMatrix(ring, i, i, rows)


def sylvester_instance(spec, k, p=2, order="grevlex", matrix=None):
    """Bordered-minor identity data at level k.

    Builds the (k+1) x (k+1) matrix of (t-1)-minors of the matrix defining
    beta_{t+k-1}, pivoted on the top-right beta_{t-2} block with the extra row
    and column indices ascending.  Returns (lhs, rhs, sign, gamma_row) where
    lhs = beta_{t-2}^k * beta_{t+k-1}, rhs is the bordered determinant, and
    sign is +-1 with lhs = sign * rhs (None when the identity fails).
    """
    if isinstance(spec, tuple):
        spec = DeterminantalSpec(*spec)
    m, n, t = spec.m, spec.n, spec.t
    if t < 2:
        raise PreconditionViolated("bordered identity needs t >= 2")
    if m > n:
        raise PreconditionViolated("bordered identity is set up for m <= n")
    if not (0 <= k <= n - t + 1):
        raise PreconditionViolated(f"level k = {k} out of range 0..{n - t + 1}")
    M = matrix if matrix is not None else generic_matrix(m, n, p, order)
    i = t + k - 1
    X = _beta_matrix(M, i)
    piv_rows = list(range(t - 2))
    piv_cols = list(range(k + 1, i))
    entries = []
    for r in range(k + 1):
        for c in range(k + 1):
            sub = X.submatrix(piv_rows + [t - 2 + r], [c] + piv_cols)
            entries.append(poly_det(sub))
    gamma_row = entries[: k + 1]
    Gamma = PolyMatrix(M.ring, k + 1, k + 1, entries)
    rhs = poly_det(Gamma)
    lhs = (beta_minor(M, t - 2) ** k) * beta_minor(M, i)
    if lhs == rhs:
        sign = 1
    elif lhs == -rhs:
        sign = -1
    else:
        sign = None
    return lhs, rhs, sign, gamma_row


# -- interpolation pairs -----------------------------------------------------


class AuxiliaryPair:
    """The block-matrix family (m, t, s): an m x (m+1) generic matrix whose
    first s rows carry k = s-t+1 extra generic columns.

    Presentation ideal: t-minors of the m x (m+1) block.  Divisor: s-minors
    of the widened top block; the `divisor` attribute is its preimage
    (including the presentation), `divisor_minors` the raw minor ideal.
    """

    def __init__(self, m, t, s, p=2, order="grevlex"):
        if not (m >= 1 and t >= 1 and s >= 1):
            raise PreconditionViolated("parameters must be positive")
        if not (m >= s and m >= t and s >= t - 1):
            raise PreconditionViolated(
                f"need m >= s, m >= t and s >= t-1; got (m, t, s) = ({m}, {t}, {s})"
            )
        self.m, self.t, self.s = m, t, s
        self.n = m + 1
        self.k = s - (t - 1)
        vars = []
        for i in range(s):
            vars.extend(Var("xprime", i + 1, j + 1) for j in range(self.n))
            vars.extend(Var("z", i + 1, j + 1) for j in range(self.k))
        for i in range(m - s):
            vars.extend(Var("w", i + 1, j + 1) for j in range(self.n))
        self.ring = RingContext(vars, p, order)
        idx = self.ring.index
        vp = lambda name: Polynomial.variable(self.ring, idx[name])
        x_rows = []
        for i in range(s):
            x_rows.extend(vp(f"xprime[{i + 1},{j + 1}]") for j in range(self.n))
        for i in range(m - s):
            x_rows.extend(vp(f"w[{i + 1},{j + 1}]") for j in range(self.n))
        self.x_matrix = PolyMatrix(self.ring, m, self.n, x_rows)
        xz = []
        for i in range(s):
            xz.extend(vp(f"xprime[{i + 1},{j + 1}]") for j in range(self.n))
            xz.extend(vp(f"z[{i + 1},{j + 1}]") for j in range(self.k))
        self.xz_matrix = PolyMatrix(self.ring, s, self.n + self.k, xz)
        self.presentation = minors_ideal(self.x_matrix, t)
        self.divisor_minors = minors_ideal(self.xz_matrix, s)
        self.divisor = Ideal(
            self.ring, self.divisor_minors.gens + self.presentation.gens
        )

    @property
    def params(self):
        return (self.m, self.t, self.s)

    def __repr__(self):
        return f"AuxiliaryPair(m={self.m}, t={self.t}, s={self.s}, k={self.k})"


def auxiliary_pair(m, t, s, p=2, order="grevlex"):
    return AuxiliaryPair(m, t, s, p, order)


REDUCTION_TARGETS = {
    # case tag -> target (m, t, s) as a function of the source parameters
    "w": lambda m, t, s: (m - 1, t - 1, s),
    "z": lambda m, t, s: (m, t, s - 1),
    "xprime": lambda m, t, s: (m - 1, t - 1, s - 1),
}


@dataclass(frozen=True)
class ReductionCertificate:
    """Checkable payload of one entry reduction: the substituted source
    ideals and the rank-one-updated target ideals, all in the ring with the
    pivot entry set to 1."""

    case: str
    pivot: str
    source_params: tuple
    target_params: tuple
    ring: RingContext
    source_presentation: Ideal
    source_divisor: Ideal
    target_presentation: Ideal
    target_divisor: Ideal
    updated_x: PolyMatrix
    updated_xz: PolyMatrix


def _sub_all(polys, idx, target):
    return [f.eval_at_one(idx, target) for f in polys]


def reduce_at_entry(pair, block, entry):
    """Set one matrix entry to 1 and perform the corresponding rank-one
    reduction of the pair.

    Returns (target AuxiliaryPair, ReductionCertificate).  Case table for the
    target parameters: w-entries give (m-1, t-1, s), z-entries (m, t, s-1),
    and top-block entries (m-1, t-1, s-1).
    """
    m, t, s, n, k = pair.m, pair.t, pair.s, pair.n, pair.k
    i1, j1 = entry
    i0, j0 = i1 - 1, j1 - 1
    ring = pair.ring
    if block == "w":
        if m - s < 1:
            raise PreconditionViolated("the lower block is empty")
        if not (0 <= i0 < m - s and 0 <= j0 < n):
            raise KernelError(f"entry {entry} out of range for the lower block")
        if t < 2:
            raise PreconditionViolated("a lower-block reduction needs t >= 2")
        pivot = Var("w", i1, j1).name
        r0 = s + i0
    elif block == "z":
        if k < 1:
            raise PreconditionViolated("the extra-column block is empty")
        if not (0 <= i0 < s and 0 <= j0 < k):
            raise KernelError(f"entry {entry} out of range for the extra columns")
        if s < 2:
            raise PreconditionViolated("an extra-column reduction needs s >= 2")
        pivot = Var("z", i1, j1).name
    elif block == "xprime":
        if not (0 <= i0 < s and 0 <= j0 < n):
            raise KernelError(f"entry {entry} out of range for the top block")
        if t < 2 or s < 2:
            raise PreconditionViolated("a top-block reduction needs t >= 2 and s >= 2")
        pivot = Var("xprime", i1, j1).name
        r0 = i0
    else:
        raise KernelError(f"unknown block tag {block!r}")

    pidx = ring.index[pivot]
    sub = ring.without(pidx)

    def sub_entry(f):
        return f.eval_at_one(pidx, sub)

    X = [[sub_entry(pair.x_matrix[i, j]) for j in range(n)] for i in range(m)]
    Z = [[sub_entry(pair.xz_matrix[i, n + j]) for j in range(k)] for i in range(s)]

    src_pres = Ideal(sub, _sub_all(pair.presentation.gens, pidx, sub))
    src_div = Ideal(sub, _sub_all(pair.divisor_minors.gens, pidx, sub))

    if block in ("w", "xprime"):
        # clear row r0 and column j0 of the x block around the unit pivot
        upd = [
            [X[i][j] - X[i][j0] * X[r0][j] for j in range(n) if j != j0]
            for i in range(m) if i != r0
        ]
        tgt_pres = minors_ideal(_grid(sub, upd), t - 1)
        if block == "w":
            # widened top block: updated x' columns, the pivot column, old z
            rows = []
            for i in range(s):
                rows.extend(upd[i])
                rows.append(X[i][j0])
                rows.extend(Z[i])
            xz_upd = PolyMatrix(sub, s, (n - 1) + 1 + k, rows)
            tgt_div = minors_ideal(xz_upd, s)
        else:
            rows = []
            for i in range(s):
                if i == r0:
                    continue
                rows.extend(upd[i if i < r0 else i - 1])
                rows.extend(Z[i][j] - X[i][j0] * Z[r0][j] for j in range(k))
            xz_upd = PolyMatrix(sub, s - 1, (n - 1) + k, rows)
            tgt_div = minors_ideal(xz_upd, s - 1)
        x_upd = _grid(sub, upd)
    else:  # z-case: clear the pivot column using row i0, x rows keep width
        upd_x = []
        for i in range(m):
            if i < s and i != i0:
                upd_x.append([X[i][j] - Z[i][j0] * X[i0][j] for j in range(n)])
            else:
                upd_x.append(list(X[i]))
        x_upd = _grid(sub, upd_x)
        tgt_pres = minors_ideal(x_upd, t)
        rows = []
        for i in range(s):
            if i == i0:
                continue
            rows.extend(upd_x[i])
            rows.extend(Z[i][j] - Z[i][j0] * Z[i0][j] for j in range(k) if j != j0)
        xz_upd = PolyMatrix(sub, s - 1, n + (k - 1), rows)
        tgt_div = minors_ideal(xz_upd, s - 1)

    tp = REDUCTION_TARGETS[block](m, t, s)
    target = AuxiliaryPair(*tp, p=ring.p)
    cert = ReductionCertificate(
        case=block,
        pivot=pivot,
        source_params=(m, t, s),
        target_params=tp,
        ring=sub,
        source_presentation=src_pres,
        source_divisor=src_div,
        target_presentation=tgt_pres,
        target_divisor=tgt_div,
        updated_x=x_upd,
        updated_xz=xz_upd,
    )
    return target, cert


def _grid(ring, rows):
    flat = [f for row in rows for f in row]
    return PolyMatrix(ring, len(rows), len(rows[0]), flat)
