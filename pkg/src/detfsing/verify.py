"""Named verification checks with three-valued verdicts and witnesses.

Each check reproduces one finite computation about determinantal splittings
at explicit parameters and returns a VerificationReport.  A `fail` verdict
always carries a concrete counterexample witness; `inconclusive` only arises
from exhausted budgets or exhausted Frobenius sweeps, never from a negative
mathematical conclusion.
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from .determinantal import (
    DetContext,
    DeterminantalSpec,
    auxiliary_pair,
    beta_minor,
    gamma_minors,
    generic_matrix,
    minors_ideal,
    reduce_at_entry,
    splitting_delta_of,
    sylvester_instance,
)
from .errors import BudgetExceeded, UsageError
from .frobenius import (
    PhiMap,
    compatibility_witness,
    fedder_is_f_pure,
    glassbrenner_f_regular,
    glassbrenner_purely_f_regular,
    is_compatible,
    is_split,
)
from .groebner import Budget, GBStats
from .ideals import Ideal
from .poly import Polynomial
from .ring import is_prime

DEFAULT_SPECS = ((2, 2, 2), (2, 3, 2), (3, 3, 2), (3, 3, 3), (3, 4, 3))
DEFAULT_PRIMES = (2, 3)


@dataclass
class VerificationReport:
    check_id: str
    params: dict
    verdict: str
    witness: dict
    stats: GBStats = field(default_factory=GBStats)
    elapsed_ms: int = 0

    def as_obj(self):
        stats = self.stats.as_dict()
        stats["elapsed_ms"] = self.elapsed_ms
        return {
            "check": self.check_id,
            "params": self.params,
            "verdict": self.verdict,
            "witness": self.witness,
            "stats": stats,
        }

    def to_json(self):
        return json.dumps(self.as_obj(), sort_keys=True, separators=(",", ":"))

    @classmethod
    def from_json(cls, line):
        obj = json.loads(line)
        stats = GBStats(
            spairs_processed=obj["stats"]["spairs"],
            reductions=obj["stats"]["reductions"],
            max_degree_seen=obj["stats"]["max_degree"],
        )
        return cls(
            check_id=obj["check"],
            params=obj["params"],
            verdict=obj["verdict"],
            witness=obj["witness"],
            stats=stats,
            elapsed_ms=obj["stats"]["elapsed_ms"],
        )

    def text_block(self):
        lines = [f"[{self.verdict.upper()}] {self.check_id} {self.params}"]
        for k, v in self.witness.items():
            lines.append(f"    {k}: {v}")
        s = self.stats
        lines.append(
            f"    stats: spairs={s.spairs_processed} reductions={s.reductions}"
            f" max_degree={s.max_degree_seen} elapsed_ms={self.elapsed_ms}"
        )
        return "\n".join(lines)


def _run_check(check_id, params, body, budget):
    budget = budget or Budget.default()
    stats = GBStats()
    t0 = time.monotonic()
    try:
        verdict, witness = body(stats, budget)
    except BudgetExceeded as exc:
        verdict = "inconclusive"
        witness = {"budget_exhausted": exc.reason, "counters": exc.stats.as_dict()}
        if exc.stats is not stats:  # engine runs share the check's accumulator
            stats.merge(exc.stats)
    elapsed = int((time.monotonic() - t0) * 1000)
    return VerificationReport(check_id, dict(params), verdict, witness, stats, elapsed)


# -- individual checks -------------------------------------------------------


def verify_dimension(m, n, t, p=2, budget=None):
    """Krull dimension of the minor ring against the closed formula, plus the
    height-one drop of the divisor ideal when it exists."""
    spec = DeterminantalSpec(m, n, t)
    params = {"m": m, "n": n, "t": t, "p": p}

    def body(stats, budget):
        ctx = DetContext(spec, p)
        dim = ctx.presentation.krull_dim(stats, budget)
        want = spec.dimension_formula()
        witness = {
            "dim": dim,
            "dim_formula": want,
            "height": m * n - dim,
            "height_formula": spec.height_formula(),
        }
        ok = dim == want
        if t >= 2:
            ddim = ctx.divisor.krull_dim(stats, budget)
            witness["divisor_dim"] = ddim
            witness["divisor_dim_expected"] = want - 1
            ok = ok and ddim == want - 1
        return ("pass" if ok else "fail"), witness

    return _run_check("dim", params, body, budget)


def verify_split_and_compat(m, n, t, p, budget=None):
    """The trace map premultiplied by the splitting polynomial to the p-1 is
    a splitting and preserves the minor ideal, the divisor rows' minor ideal,
    and their sum."""
    spec = DeterminantalSpec(m, n, t)
    params = {"m": m, "n": n, "t": t, "p": p}

    def body(stats, budget):
        ctx = DetContext(spec, p)
        phi = PhiMap(ctx.delta() ** (p - 1), 1)
        witness = {}
        witness["split"] = is_split(phi)
        checks = [("presentation", ctx.presentation)]
        if t >= 2:
            checks += [("row_minors", ctx.xprime_minors), ("divisor", ctx.divisor)]
        ok = witness["split"]
        for name, ideal in checks:
            good = is_compatible(phi, ideal, stats, budget)
            witness[f"compatible_{name}"] = good
            if not good:
                bad = compatibility_witness(phi, ideal, stats, budget)
                if bad is not None:
                    witness[f"witness_{name}"] = {
                        "generator": str(bad[0]),
                        "remainder": str(bad[1]),
                    }
            ok = ok and good
        return ("pass" if ok else "fail"), witness

    return _run_check("split", params, body, budget)


def verify_compat(m, n, t, p, budget=None):
    """Compatibility of the splitting-polynomial trace map with the minor
    ideal and the divisor preimage, without the splitting assertion."""
    spec = DeterminantalSpec(m, n, t)
    params = {"m": m, "n": n, "t": t, "p": p}

    def body(stats, budget):
        ctx = DetContext(spec, p)
        phi = PhiMap(ctx.delta() ** (p - 1), 1)
        witness = {}
        ok = True
        checks = [("presentation", ctx.presentation)]
        if t >= 2:
            checks.append(("divisor", ctx.divisor))
        for name, ideal in checks:
            good = is_compatible(phi, ideal, stats, budget)
            witness[f"compatible_{name}"] = good
            ok = ok and good
        return ("pass" if ok else "fail"), witness

    return _run_check("compat", params, body, budget)


def verify_f_regular(m, n, t, p, e_max=3, budget=None):
    """Strong F-regularity sweeps of the minor ring and of the divisor
    quotient; a sweep confirmation is a proof, exhaustion is inconclusive."""
    spec = DeterminantalSpec(m, n, t)
    params = {"m": m, "n": n, "t": t, "p": p, "e_max": e_max}

    def body(stats, budget):
        ctx = DetContext(spec, p)
        c = Polynomial.variable(ctx.ring, ctx.ring.index[f"x[{m},{n}]"])
        witness = {"c": str(c)}
        all_confirmed = True
        targets = [("presentation", ctx.presentation)]
        if t >= 2:
            targets.append(("divisor", ctx.divisor))
        for label, ideal in targets:
            sweep = glassbrenner_f_regular(ideal, c, e_max, stats, budget)
            witness[label] = (
                {"status": "confirmed", "e": sweep.e}
                if sweep.confirmed
                else {"status": "inconclusive", "reason": sweep.reason,
                      "trace": [list(x) for x in sweep.trace]}
            )
            all_confirmed = all_confirmed and sweep.confirmed
        return ("pass" if all_confirmed else "inconclusive"), witness

    return _run_check("freg", params, body, budget)


def verify_row_decomposition(m, n, t, p=2, budget=None):
    """Adjacent-row window decomposition: the t-minors of the first and last
    m-1 rows sum to the intersection of the full t-minor ideal with the
    (t-1)-minors of the interior rows.  Exact equality is attempted first,
    mutual radical containment is the recorded fallback level."""
    if m < 3:
        raise UsageError("row decomposition needs at least three rows")
    if not (2 <= t <= m - 1 and t - 1 <= m - 2):
        raise UsageError(f"no interior window for (m, t) = ({m}, {t})")
    if t > n:
        raise UsageError("minor size exceeds the column count")
    params = {"m": m, "n": n, "t": t, "p": p}

    def body(stats, budget):
        M = generic_matrix(m, n, p)
        R = M.ring
        top = M.submatrix(range(m - 1), range(n))
        bottom = M.submatrix(range(1, m), range(n))
        interior = M.submatrix(range(1, m - 1), range(n))
        lhs = Ideal(R, minors_ideal(top, t).gens + minors_ideal(bottom, t).gens)
        full = minors_ideal(M, t)
        inner = minors_ideal(interior, t - 1)
        witness = {}
        exact_state = "inconclusive"
        try:
            rhs = full.intersect(inner, stats, budget)
            exact_state = "equal" if lhs.equal(rhs, stats, budget) else "unequal"
        except BudgetExceeded as exc:
            witness["exact_budget"] = exc.reason
        witness["exact"] = exact_state
        if exact_state == "equal":
            witness["level"] = "exact"
            return "pass", witness
        # radical-level fallback: lhs generators inside both factors' radicals,
        # and factor products inside the radical of lhs
        for g in lhs.gens:
            if not (full.radical_member(g, stats, budget)
                    and inner.radical_member(g, stats, budget)):
                witness["level"] = "failed"
                witness["counterexample"] = {"side": "left", "generator": str(g)}
                return "fail", witness
        for a in full.gens:
            for b in inner.gens:
                if not lhs.radical_member(a * b, stats, budget):
                    witness["level"] = "failed"
                    witness["counterexample"] = {
                        "side": "right", "generator": str(a * b),
                    }
                    return "fail", witness
        witness["level"] = "radical"
        return "pass", witness

    return _run_check("rowdec", params, body, budget)


def verify_gamma_decomposition(r, n, p=2, budget=None):
    """The column-pairing maximal minors cut out, up to radical, the
    intersection of the maximal-minor ideal with the (r-1)-minors of the
    trailing columns."""
    if not (1 <= r <= n):
        raise UsageError("need row count at most column count")
    params = {"r": r, "n": n, "p": p}

    def body(stats, budget):
        M = generic_matrix(r, n, p)
        R = M.ring
        gammas = gamma_minors(M)
        G = Ideal(R, gammas)
        A = minors_ideal(M, r)
        B = minors_ideal(M.submatrix(range(r), range(n - r + 1, n)), r - 1) if r >= 2 \
            else Ideal.unit(R)
        witness = {"count": len(gammas)}
        for g in gammas:
            if not (A.member(g, stats, budget) and B.member(g, stats, budget)):
                witness["counterexample"] = {"side": "gamma", "generator": str(g)}
                return "fail", witness
        rhs = A.intersect(B, stats, budget)
        witness["intersection_size"] = len(rhs.gens)
        for g in rhs.gens:
            if not G.radical_member(g, stats, budget):
                witness["counterexample"] = {"side": "intersection", "generator": str(g)}
                return "fail", witness
        return "pass", witness

    return _run_check("gammadec", params, body, budget)


def verify_local_membership(m, n, t, p, budget=None):
    """After inverting elements outside the divisor-row prime, the splitting
    polynomial to the p-1 multiplies every gamma minor into the ideal of
    their p-th powers; verified through an explicit multiplier or, failing
    that, the full colon."""
    if t < 2:
        raise UsageError("local membership needs t >= 2")
    if m > n:
        raise UsageError("set up for m <= n")
    params = {"m": m, "n": n, "t": t, "p": p}

    def body(stats, budget):
        M = generic_matrix(m, n, p)
        R = M.ring
        xp = M.submatrix(range(t - 1), range(n))
        P = minors_ideal(xp, t - 1)
        gammas = gamma_minors(xp)
        h = len(gammas)
        B = Ideal(R, [g ** p for g in gammas])
        delta_pow = splitting_delta_of(M) ** (p - 1)
        beta = beta_minor(M, t - 2)
        cap = (p - 1) * (h * (h - 1)) // 2 + 2
        witness = {"h": h, "per_gamma": []}
        for i, g in enumerate(gammas):
            f = delta_pow * g
            entry = {"i": i + 1}
            found = None
            c = Polynomial.one(R)
            for exponent in range(cap + 1):
                if B.member(c * f, stats, budget) and not P.member(c, stats, budget):
                    found = exponent
                    break
                if beta.is_one():
                    break
                c = c * beta
            if found is not None:
                entry["multiplier"] = f"beta^{found}"
                witness["per_gamma"].append(entry)
                continue
            colon = B.colon(Ideal(R, (f,)), stats, budget)
            escape = None
            for gen in colon.gens:
                if not P.member(gen, stats, budget):
                    escape = gen
                    break
            if escape is None:
                entry["colon_inside_prime"] = True
                witness["per_gamma"].append(entry)
                return "fail", witness
            entry["colon_generator"] = str(escape)
            witness["per_gamma"].append(entry)
        return "pass", witness

    return _run_check("local", params, body, budget)


def verify_sylvester(m, n, t, k, p=3, budget=None):
    """Bordered-minor determinant identity at level k, up to a recorded sign."""
    params = {"m": m, "n": n, "t": t, "k": k, "p": p}

    def body(stats, budget):
        lhs, rhs, sign, gamma_row = sylvester_instance((m, n, t), k, p)
        witness = {"sign": sign, "degree": lhs.total_degree()}
        if sign is None:
            witness["lhs"] = str(lhs)
            witness["rhs"] = str(rhs)
            return "fail", witness
        return "pass", witness

    return _run_check("sylvester", params, body, budget)


def verify_extension_decomposition(m, n, t, cols_added=1, p=2, budget=None):
    """Radical of the divisor-row prime extended along added generic columns:
    it cuts out the wider divisor-row prime together with the locus where the
    original columns drop below rank t-1."""
    if not (m >= n >= t >= 2):
        raise UsageError("extension decomposition needs m >= n >= t >= 2")
    if cols_added < 1:
        raise UsageError("must add at least one column")
    params = {"m": m, "n": n, "t": t, "cols_added": cols_added, "p": p}

    def body(stats, budget):
        wide = generic_matrix(m, n + cols_added, p)
        R = wide.ring
        pres = minors_ideal(wide, t)
        narrow_rows = minors_ideal(
            wide.submatrix(range(t - 1), range(n)), t - 1)
        A = Ideal(R, narrow_rows.gens + pres.gens)
        q_minors = minors_ideal(wide.submatrix(range(t - 1), range(n + cols_added)), t - 1)
        drop_minors = minors_ideal(wide.submatrix(range(m), range(n)), t - 1)
        witness = {}
        for g in narrow_rows.gens:
            if not (Ideal(R, q_minors.gens + pres.gens).radical_member(g, stats, budget)
                    and Ideal(R, drop_minors.gens + pres.gens).radical_member(g, stats, budget)):
                witness["counterexample"] = {"side": "forward", "generator": str(g)}
                return "fail", witness
        for a in q_minors.gens:
            for b in drop_minors.gens:
                if not A.radical_member(a * b, stats, budget):
                    witness["counterexample"] = {"side": "backward", "generator": str(a * b)}
                    return "fail", witness
        witness["forward"] = len(narrow_rows.gens)
        witness["backward"] = len(q_minors.gens) * len(drop_minors.gens)
        return "pass", witness

    return _run_check("extension", params, body, budget)


def verify_fedder_purity(m, n, t, p, e_max=3, budget=None):
    """F-purity of the minor ring and of the divisor quotient through the
    bracket colon criterion, with strong F-regularity sweeps attached as
    confirmed/inconclusive witnesses."""
    spec = DeterminantalSpec(m, n, t)
    if t < 2:
        raise UsageError("the divisor needs t >= 2")
    params = {"m": m, "n": n, "t": t, "p": p, "e_max": e_max}

    def body(stats, budget):
        ctx = DetContext(spec, p)
        R = ctx.ring
        fp_pres = fedder_is_f_pure(ctx.presentation, stats, budget)
        fp_div = fedder_is_f_pure(ctx.divisor, stats, budget)
        witness = {"f_pure_presentation": fp_pres, "f_pure_divisor": fp_div}
        c = Polynomial.variable(R, R.index[f"x[{m},{n}]"])
        for label, ideal in (("presentation", ctx.presentation), ("divisor", ctx.divisor)):
            sweep = glassbrenner_f_regular(ideal, c, e_max, stats, budget)
            witness[f"f_regular_{label}"] = (
                {"status": "confirmed", "e": sweep.e}
                if sweep.confirmed
                else {"status": "inconclusive", "reason": sweep.reason}
            )
        ok = fp_pres and fp_div
        return ("pass" if ok else "fail"), witness

    return _run_check("fedder", params, body, budget)


def default_multiplier_pool(ctx):
    """Multipliers for pure F-regularity sweeps: every variable outside the
    divisor preimage, the splitting polynomial, and the pivot minor used by
    the bordered identities; candidates inside the divisor are dropped."""
    R = ctx.ring
    pool = []
    seen = set()

    def consider(label, f):
        if f.is_zero() or ctx.divisor.member(f):
            return
        key = f.terms
        if key not in seen:
            seen.add(key)
            pool.append((label, f))

    consider("1", Polynomial.one(R))
    for i in range(R.nvars):
        consider(R.names[i], Polynomial.variable(R, i))
    consider("delta", ctx.delta())
    consider("beta_pivot", beta_minor(ctx.matrix, ctx.spec.t - 2))
    return pool


def verify_pure_f_regularity(m, n, t, p, e_max=2, budget=None):
    """Pure F-regularity sweep of the determinantal pair over the default
    multiplier pool; passes only when every multiplier is confirmed."""
    spec = DeterminantalSpec(m, n, t)
    if t < 2:
        raise UsageError("the pair needs t >= 2")
    params = {"m": m, "n": n, "t": t, "p": p, "e_max": e_max}

    def body(stats, budget):
        ctx = DetContext(spec, p)
        pool = default_multiplier_pool(ctx)
        witness = {"pool": [label for label, _ in pool], "confirmed": {}}
        all_ok = True
        for label, c in pool:
            sweep = glassbrenner_purely_f_regular(
                ctx.presentation, ctx.divisor, c, e_max, stats, budget
            )
            if sweep.confirmed:
                witness["confirmed"][label] = sweep.e
            else:
                witness["confirmed"][label] = None
                all_ok = False
        return ("pass" if all_ok else "inconclusive"), witness

    return _run_check("pure-freg", params, body, budget)


def verify_reduction_identities(m, t, s, block, entry=(1, 1), p=2, budget=None):
    """Setting one entry to 1 turns the pair's ideals into the rank-one
    updated ideals of the smaller pair; checked by basis equality in the
    substituted ring, for the presentation and the widened-block minors."""
    params = {"m": m, "t": t, "s": s, "block": block,
              "entry": list(entry), "p": p}

    def body(stats, budget):
        pair = auxiliary_pair(m, t, s, p)
        target, cert = reduce_at_entry(pair, block, tuple(entry))
        pres_ok = cert.source_presentation.equal(cert.target_presentation, stats, budget)
        div_ok = cert.source_divisor.equal(cert.target_divisor, stats, budget)
        witness = {
            "pivot": cert.pivot,
            "target": list(cert.target_params),
            "presentation_identity": pres_ok,
            "divisor_identity": div_ok,
        }
        if not pres_ok:
            witness["counterexample"] = _first_difference(
                cert.source_presentation, cert.target_presentation, stats, budget)
        elif not div_ok:
            witness["counterexample"] = _first_difference(
                cert.source_divisor, cert.target_divisor, stats, budget)
        return ("pass" if pres_ok and div_ok else "fail"), witness

    return _run_check("reduction", params, body, budget)


def _first_difference(I, J, stats, budget):
    for g in I.gens:
        if not J.member(g, stats, budget):
            return {"side": "source", "generator": str(g)}
    for g in J.gens:
        if not I.member(g, stats, budget):
            return {"side": "target", "generator": str(g)}
    return {"side": "basis", "note": "bases differ only after reduction"}


# -- suite runner ------------------------------------------------------------

CHECKS = {
    "dim": (verify_dimension, ("m", "n", "t"), {"p": 2}),
    "split": (verify_split_and_compat, ("m", "n", "t", "p"), {}),
    "compat": (verify_compat, ("m", "n", "t", "p"), {}),
    "freg": (verify_f_regular, ("m", "n", "t", "p"), {"e_max": 3}),
    "rowdec": (verify_row_decomposition, ("m", "n", "t"), {"p": 2}),
    "gammadec": (verify_gamma_decomposition, ("r", "n"), {"p": 2}),
    "local": (verify_local_membership, ("m", "n", "t", "p"), {}),
    "sylvester": (verify_sylvester, ("m", "n", "t", "k"), {"p": 3}),
    "extension": (verify_extension_decomposition, ("m", "n", "t"),
                  {"cols_added": 1, "p": 2}),
    "fedder": (verify_fedder_purity, ("m", "n", "t", "p"), {"e_max": 3}),
    "pure-freg": (verify_pure_f_regularity, ("m", "n", "t", "p"), {"e_max": 2}),
    "reduction": (verify_reduction_identities, ("m", "t", "s", "block"),
                  {"entry": (1, 1), "p": 2}),
}


def validate_request(req):
    """Check one grid entry; returns (runner, kwargs) or raises UsageError."""
    if not isinstance(req, dict) or "check" not in req:
        raise UsageError(f"malformed request {req!r}: missing 'check'")
    cid = req["check"]
    if cid not in CHECKS:
        raise UsageError(f"unknown check {cid!r}; known: {sorted(CHECKS)}")
    fn, required, optional = CHECKS[cid]
    kwargs = {}
    for name in required:
        if name not in req:
            raise UsageError(f"check {cid!r} requires parameter {name!r}")
        kwargs[name] = req[name]
    for name, default in optional.items():
        kwargs[name] = req.get(name, default)
    extra = set(req) - {"check"} - set(required) - set(optional)
    if extra:
        raise UsageError(f"check {cid!r} got unknown parameters {sorted(extra)}")
    for name in ("m", "n", "t", "s", "r", "k", "e_max", "cols_added"):
        if name in kwargs and (not isinstance(kwargs[name], int) or kwargs[name] < 0):
            raise UsageError(f"parameter {name!r} must be a nonnegative integer")
    for name in ("m", "n", "t", "s", "r"):
        if name in kwargs and kwargs[name] < 1:
            raise UsageError(f"parameter {name!r} must be positive")
    if "p" in kwargs and not is_prime(kwargs["p"]):
        raise UsageError(f"parameter p = {kwargs['p']} must be prime")
    if "block" in kwargs and kwargs["block"] not in ("w", "z", "xprime"):
        raise UsageError("block must be one of w, z, xprime")
    if "entry" in kwargs:
        entry = kwargs["entry"]
        if (not isinstance(entry, (list, tuple)) or len(entry) != 2
                or any(not isinstance(v, int) or v < 1 for v in entry)):
            raise UsageError("entry must be a pair of positive integers")
    return fn, kwargs


def run_suite(grid, budget=None, workers=1):
    """Run the grid in order; validation happens up front so a malformed
    request aborts before any computation starts."""
    plan = [validate_request(req) for req in grid]
    if workers <= 1:
        return [fn(**kwargs, budget=budget) for fn, kwargs in plan]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        futures = [pool.submit(fn, **kwargs, budget=budget) for fn, kwargs in plan]
        return [f.result() for f in futures]


def default_grid():
    """The stock verification grid: every standing check at its stated
    parameters, dimensions over the full desk-scale range."""
    grid = []
    for m in range(1, 5):
        for n in range(1, 5):
            for t in range(1, min(m, n) + 1):
                grid.append({"check": "dim", "m": m, "n": n, "t": t})
    for (m, n, t) in DEFAULT_SPECS:
        for p in DEFAULT_PRIMES:
            grid.append({"check": "split", "m": m, "n": n, "t": t, "p": p})
    for (m, n, t) in ((3, 3, 2), (3, 4, 2), (4, 4, 3)):
        grid.append({"check": "rowdec", "m": m, "n": n, "t": t})
    for (r, n) in ((2, 3), (2, 4), (3, 4)):
        grid.append({"check": "gammadec", "r": r, "n": n})
    for (m, n, t, p) in ((2, 3, 2, 2), (2, 3, 2, 3), (3, 4, 3, 2)):
        grid.append({"check": "local", "m": m, "n": n, "t": t, "p": p})
    for (m, n, t) in DEFAULT_SPECS:
        grid.append({"check": "sylvester", "m": m, "n": n, "t": t, "k": 0})
    for (m, n, t) in ((2, 3, 2), (3, 4, 3)):
        grid.append({"check": "sylvester", "m": m, "n": n, "t": t, "k": 1})
    for (m, n, t) in ((2, 2, 2), (3, 3, 2), (3, 3, 3)):
        grid.append({"check": "extension", "m": m, "n": n, "t": t})
    for (m, n, t) in ((2, 2, 2), (2, 3, 2), (3, 3, 2), (3, 3, 3)):
        for p in DEFAULT_PRIMES:
            grid.append({"check": "fedder", "m": m, "n": n, "t": t, "p": p})
    for (m, n, t) in ((2, 2, 2), (2, 3, 2)):
        grid.append({"check": "pure-freg", "m": m, "n": n, "t": t, "p": 2,
                     "e_max": 2})
    grid.append({"check": "reduction", "m": 2, "t": 2, "s": 1, "block": "w"})
    grid.append({"check": "reduction", "m": 2, "t": 2, "s": 2, "block": "z"})
    grid.append({"check": "reduction", "m": 3, "t": 2, "s": 2, "block": "xprime"})
    return grid


def worst_verdict(reports):
    if any(r.verdict == "fail" for r in reports):
        return "fail"
    if any(r.verdict == "inconclusive" for r in reports):
        return "inconclusive"
    return "pass"
