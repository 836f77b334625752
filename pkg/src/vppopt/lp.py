"""Bounded-variable primal simplex over dense problem data.

The solver handles columns with arbitrary (possibly infinite) lower and
upper bounds and rows with <=, ==, >= senses by appending one slack
column per row.  Feasibility is reached with a composite phase 1 that
prices the sum of basic bound violations directly, so no artificial
columns are ever added.  Pricing is Dantzig's rule with a switch to
Bland's rule after a stall, which restores the anti-cycling guarantee.
The basis inverse is kept explicitly and rebuilt from scratch whenever a
cheap residual probe (run every `refactor_every` pivots) detects drift.

All tie-breaking is by lowest variable index, so repeated solves of the
same problem produce bit-identical results.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

try:
    from numba import njit
except ImportError:  # pragma: no cover - numba is a hard dependency in practice
    def njit(*args, **kwargs):
        if args and callable(args[0]):
            return args[0]
        return lambda f: f

INF = np.inf

STATUS_OPTIMAL = "optimal"
STATUS_INFEASIBLE = "infeasible"
STATUS_UNBOUNDED = "unbounded"
STATUS_ITERATION_LIMIT = "iteration_limit"
_STATUS_BY_CODE = (
    STATUS_OPTIMAL,
    STATUS_INFEASIBLE,
    STATUS_UNBOUNDED,
    STATUS_ITERATION_LIMIT,
)

SENSE_LE = -1
SENSE_EQ = 0
SENSE_GE = 1
_SENSE_CODES = {"<=": SENSE_LE, "==": SENSE_EQ, "=": SENSE_EQ, ">=": SENSE_GE}

DEFAULT_TOL = 1e-8

# vstat codes shared with the compiled core
_AT_LOWER = 0
_AT_UPPER = 1
_BASIC = 2
_FREE = 3


class LpFormatError(ValueError):
    """Problem arrays are inconsistent (shapes, bound ordering, senses)."""


@dataclass(eq=False)
class LpProblem:
    """min objective @ x  s.t.  a_matrix @ x (sense) rhs,  lower <= x <= upper."""

    objective: np.ndarray
    lower: np.ndarray
    upper: np.ndarray
    a_matrix: np.ndarray
    senses: np.ndarray
    rhs: np.ndarray

    def __post_init__(self):
        self.objective = np.asarray(self.objective, dtype=np.float64)
        self.lower = np.asarray(self.lower, dtype=np.float64)
        self.upper = np.asarray(self.upper, dtype=np.float64)
        self.a_matrix = np.ascontiguousarray(np.atleast_2d(self.a_matrix), dtype=np.float64)
        self.senses = np.asarray(self.senses, dtype=np.int8)
        self.rhs = np.asarray(self.rhs, dtype=np.float64)
        n = self.objective.shape[0]
        m = self.rhs.shape[0]
        if self.lower.shape != (n,) or self.upper.shape != (n,):
            raise LpFormatError("bound vectors do not match objective length")
        if self.a_matrix.shape != (m, n):
            if m == 0 and self.a_matrix.size == 0:
                self.a_matrix = np.zeros((0, n))
            else:
                raise LpFormatError(
                    f"matrix shape {self.a_matrix.shape} != ({m}, {n})"
                )
        if self.senses.shape != (m,):
            raise LpFormatError("senses do not match rhs length")
        if np.any(self.lower > self.upper):
            j = int(np.flatnonzero(self.lower > self.upper)[0])
            raise LpFormatError(f"column {j}: lower bound exceeds upper bound")

    @property
    def n_vars(self) -> int:
        return self.objective.shape[0]

    @property
    def n_rows(self) -> int:
        return self.rhs.shape[0]


@dataclass(eq=False)
class LpSolution:
    """Result of one solve; `dual` holds one multiplier per row.

    Row duals follow the equality-form convention (A x + s = b): at an
    optimum a binding <= row has dual <= 0 and a binding >= row has
    dual >= 0 for minimization.  `basis_state` can be passed back to
    `solve_lp` as a warm start after bound changes.
    """

    status: str
    primal: np.ndarray
    dual: np.ndarray
    objective_value: float
    iterations: int = 0
    basis_state: tuple | None = None


class LpBuilder:
    """Incremental construction of an LpProblem from triplets."""

    def __init__(self):
        self._cost: list[float] = []
        self._lower: list[float] = []
        self._upper: list[float] = []
        self._rows: list[tuple[int, float, list, list]] = []

    def add_var(self, cost: float = 0.0, lower: float = 0.0, upper: float = INF) -> int:
        self._cost.append(cost)
        self._lower.append(lower)
        self._upper.append(upper)
        return len(self._cost) - 1

    def add_row(self, sense: str, rhs: float, cols, coefs) -> int:
        self._rows.append((_SENSE_CODES[sense], rhs, list(cols), list(coefs)))
        return len(self._rows) - 1

    def build(self) -> LpProblem:
        n = len(self._cost)
        m = len(self._rows)
        a = np.zeros((m, n))
        senses = np.empty(m, dtype=np.int8)
        rhs = np.empty(m)
        for i, (sense, r, cols, coefs) in enumerate(self._rows):
            senses[i] = sense
            rhs[i] = r
            a[i, cols] = coefs
        return LpProblem(
            objective=np.array(self._cost),
            lower=np.array(self._lower),
            upper=np.array(self._upper),
            a_matrix=a,
            senses=senses,
            rhs=rhs,
        )


@njit(cache=True)
def _nb_value(j, vstat, lo, up):
    s = vstat[j]
    if s == _AT_LOWER:
        return lo[j]
    if s == _AT_UPPER:
        return up[j]
    return 0.0


@njit(cache=True)
def _recompute_xb(indptr, indices, data, b, lo, up, vstat, Binv, xB):
    """Basic values from the current inverse and nonbasic bound values."""
    r = b.copy()
    n_total = indptr.shape[0] - 1
    for j in range(n_total):
        if vstat[j] == _BASIC:
            continue
        v = _nb_value(j, vstat, lo, up)
        if v != 0.0:
            for p in range(indptr[j], indptr[j + 1]):
                r[indices[p]] -= data[p] * v
    xB[:] = np.dot(Binv, r)


@njit(cache=True)
def _refactorize(indptr, indices, data, b, lo, up, basis, vstat, xB, Binv):
    """Rebuild the basis inverse from scratch and recompute basic values."""
    m = basis.shape[0]
    B = np.zeros((m, m))
    for pos in range(m):
        j = basis[pos]
        for p in range(indptr[j], indptr[j + 1]):
            B[indices[p], pos] = data[p]
    Binv[:, :] = np.linalg.inv(B)
    _recompute_xb(indptr, indices, data, b, lo, up, vstat, Binv, xB)


@njit(cache=True)
def _factor_drift(indptr, indices, data, basis, Binv, col):
    """Residual of B @ Binv[:, col] against the unit vector, in max norm."""
    m = basis.shape[0]
    r = np.zeros(m)
    for pos in range(m):
        v = Binv[pos, col]
        if v != 0.0:
            j = basis[pos]
            for p in range(indptr[j], indptr[j + 1]):
                r[indices[p]] += data[p] * v
    r[col] -= 1.0
    worst = 0.0
    for i in range(m):
        a = abs(r[i])
        if a > worst:
            worst = a
    return worst


@njit(cache=True)
def _price_all(indptr, indices, data, c, y, vstat, lo, up, d):
    """Exact reduced costs for every nonbasic column."""
    n_total = indptr.shape[0] - 1
    for j in range(n_total):
        if vstat[j] == _BASIC:
            d[j] = 0.0
            continue
        v = c[j]
        for p in range(indptr[j], indptr[j + 1]):
            v -= y[indices[p]] * data[p]
        d[j] = v


@njit(cache=True)
def _select_entering(d, gamma, vstat, lo, up, dtol, bland):
    """Devex-scored entering column (Bland: lowest eligible index)."""
    n_total = d.shape[0]
    enter = -1
    enter_dir = 1.0
    best_score = 0.0
    for j in range(n_total):
        s = vstat[j]
        if s == _BASIC:
            continue
        if lo[j] == up[j]:
            continue  # fixed column, removed from pricing
        dj = d[j]
        if s == _AT_LOWER:
            if dj >= -dtol:
                continue
            dirn = 1.0
        elif s == _AT_UPPER:
            if dj <= dtol:
                continue
            dirn = -1.0
        else:  # free at zero
            if -dtol <= dj <= dtol:
                continue
            dirn = 1.0 if dj < 0.0 else -1.0
        if bland:
            return j, dirn
        score = dj * dj / gamma[j]
        if score > best_score:
            best_score = score
            enter = j
            enter_dir = dirn
    return enter, enter_dir


@njit(cache=True)
def _simplex_loop(indptr, indices, data, c, lo, up, b, basis, vstat, xB, Binv,
                  ftol, dtol, max_iters, refactor_every, stall_limit):
    """Run the composite phase-1 / phase-2 iteration until termination.

    Phase 2 keeps the reduced-cost vector up to date across pivots and
    re-prices it exactly before declaring optimality or after a rebuild
    of the basis inverse.  Mutates basis, vstat, xB and Binv in place.
    Returns (status, iters).
    """
    m = basis.shape[0]
    n_total = indptr.shape[0] - 1
    ptol = 1e-10
    drift_tol = 1e-9
    hard_refactor = 1024

    w = np.empty(m)
    alpha = np.empty(m)
    d = np.zeros(n_total)
    gamma = np.ones(n_total)
    tabrow = np.empty(n_total)
    zero_costs = np.zeros(n_total)
    d_mode = 0  # 0 stale, 1 tracks phase-1 costs, 2 tracks true costs
    bland = False
    stall = 0
    best_metric = np.inf
    last_phase1 = True
    since_check = 0
    since_rebuild = 0
    probe_col = 0
    iters = 0

    while True:
        if iters >= max_iters:
            return 3, iters

        if m > 0 and since_check >= refactor_every:
            since_check = 0
            probe_col = (probe_col + 1) % m
            drift = _factor_drift(indptr, indices, data, basis, Binv, probe_col)
            if drift > drift_tol or since_rebuild >= hard_refactor:
                _refactorize(indptr, indices, data, b, lo, up, basis, vstat, xB, Binv)
                since_rebuild = 0
                d_mode = 0

        # phase detection and phase-1 gradient
        infeas = 0.0
        for pos in range(m):
            jb = basis[pos]
            v = xB[pos]
            if v < lo[jb] - ftol:
                infeas += lo[jb] - v
                w[pos] = -1.0
            elif v > up[jb] + ftol:
                infeas += v - up[jb]
                w[pos] = 1.0
            else:
                w[pos] = 0.0
        phase1 = infeas > 0.0

        # stall bookkeeping on the active phase metric
        if phase1:
            metric = infeas
        else:
            metric = 0.0
            for pos in range(m):
                metric += c[basis[pos]] * xB[pos]
            for j in range(n_total):
                if vstat[j] != _BASIC and c[j] != 0.0:
                    metric += c[j] * _nb_value(j, vstat, lo, up)
        if phase1 != last_phase1:
            best_metric = np.inf
            stall = 0
            bland = False
            last_phase1 = phase1
            d_mode = 0
        if metric < best_metric - 1e-9 * (1.0 + abs(best_metric)):
            best_metric = metric
            stall = 0
            bland = False
        else:
            stall += 1
            if stall >= stall_limit:
                if not bland:
                    d_mode = 0  # re-price exactly when falling back to Bland
                bland = True

        # pricing: d is kept current across pivots, rebuilt when stale
        d_fresh = False
        want_mode = 1 if phase1 else 2
        if d_mode != want_mode:
            if not phase1:
                for pos in range(m):
                    w[pos] = c[basis[pos]]
            y = np.dot(w, Binv)
            costs = zero_costs if phase1 else c
            _price_all(indptr, indices, data, costs, y, vstat, lo, up, d)
            for jj in range(n_total):
                gamma[jj] = 1.0
            d_mode = want_mode
            d_fresh = True
        enter, enter_dir = _select_entering(d, gamma, vstat, lo, up, dtol, bland)
        if enter < 0:
            # confirm with exact reduced costs before declaring termination
            if not phase1:
                for pos in range(m):
                    w[pos] = c[basis[pos]]
            y = np.dot(w, Binv)
            costs = zero_costs if phase1 else c
            _price_all(indptr, indices, data, costs, y, vstat, lo, up, d)
            for jj in range(n_total):
                gamma[jj] = 1.0
            d_fresh = True
            enter, enter_dir = _select_entering(d, gamma, vstat, lo, up, dtol, bland)
            if enter < 0:
                if phase1:
                    return 1, iters
                return 0, iters

        j = enter
        dirn = enter_dir

        # alpha = Binv @ a_j
        for pos in range(m):
            alpha[pos] = 0.0
        for p in range(indptr[j], indptr[j + 1]):
            i = indices[p]
            aij = data[p]
            for pos in range(m):
                alpha[pos] += aij * Binv[pos, i]

        # Harris ratio test, pass 1: shortest step against ftol-relaxed bounds
        theta_own = up[j] - lo[j] if (lo[j] > -INF and up[j] < INF) else INF
        theta_exp = theta_own
        for pos in range(m):
            rate = -dirn * alpha[pos]
            if rate > ptol:
                jb = basis[pos]
                v = xB[pos]
                if v > up[jb] + ftol:
                    continue
                tgt = lo[jb] if v < lo[jb] - ftol else up[jb]
                if tgt == INF:
                    continue
            elif rate < -ptol:
                jb = basis[pos]
                v = xB[pos]
                if v < lo[jb] - ftol:
                    continue
                tgt = up[jb] if v > up[jb] + ftol else lo[jb]
                if tgt == -INF:
                    continue
            else:
                continue
            th = (tgt - v) / rate + ftol / abs(rate)
            if th < 0.0:
                th = 0.0
            if th < theta_exp:
                theta_exp = th

        if theta_exp == INF:
            if not d_fresh:
                d_mode = 0  # stale pricing may fake a ray; re-price and retry
                continue
            return 2, iters

        # pass 2: among blockers whose exact ratio fits under theta_exp,
        # take the biggest pivot (Bland mode: the lowest variable index)
        leave = -1
        leave_lower = True
        best_piv = 0.0
        theta = theta_exp
        if theta_own > theta_exp:
            for pos in range(m):
                rate = -dirn * alpha[pos]
                if rate > ptol:
                    jb = basis[pos]
                    v = xB[pos]
                    if v > up[jb] + ftol:
                        continue
                    at_lower = v < lo[jb] - ftol
                    tgt = lo[jb] if at_lower else up[jb]
                    if tgt == INF:
                        continue
                elif rate < -ptol:
                    jb = basis[pos]
                    v = xB[pos]
                    if v < lo[jb] - ftol:
                        continue
                    at_lower = not (v > up[jb] + ftol)
                    tgt = up[jb] if not at_lower else lo[jb]
                    if tgt == -INF:
                        continue
                else:
                    continue
                th = (tgt - v) / rate
                if th < 0.0:
                    th = 0.0
                if th > theta_exp:
                    continue
                piv = abs(alpha[pos])
                if leave < 0:
                    take = True
                elif bland:
                    take = basis[pos] < basis[leave]
                else:
                    take = piv > best_piv * (1.0 + 1e-12)
                if take:
                    leave = pos
                    leave_lower = at_lower
                    best_piv = piv
                    theta = th

        if leave < 0:
            # bound flip: entering variable traverses to its opposite bound
            for pos in range(m):
                xB[pos] -= dirn * alpha[pos] * theta_own
            vstat[j] = _AT_UPPER if vstat[j] == _AT_LOWER else _AT_LOWER
            iters += 1
            continue

        enter_val = _nb_value(j, vstat, lo, up) + dirn * theta
        piv = alpha[leave]
        jl = basis[leave]

        if d_mode != 0:
            # tableau pivot row over nonbasic columns, from the old inverse
            dq = d[j]
            gq = gamma[j]
            for jj in range(n_total):
                if vstat[jj] == _BASIC or lo[jj] == up[jj]:
                    tabrow[jj] = 0.0
                    continue
                t = 0.0
                for p in range(indptr[jj], indptr[jj + 1]):
                    t += Binv[leave, indices[p]] * data[p]
                tabrow[jj] = t
            ratio = dq / piv
            for jj in range(n_total):
                t = tabrow[jj]
                if t != 0.0:
                    d[jj] -= ratio * t
                    gt = (t / piv) * (t / piv) * gq
                    if gt > gamma[jj]:
                        gamma[jj] = gt
            d[j] = 0.0
            # the leaver keeps its effective cost: the phase-1 weight it
            # carried while basic, zero under the true objective
            d[jl] = -ratio if d_mode == 2 else -w[leave] - ratio
            gl = gq / (piv * piv)
            gamma[jl] = gl if gl > 1.0 else 1.0

        for pos in range(m):
            xB[pos] -= dirn * alpha[pos] * theta
        vstat[jl] = _AT_LOWER if leave_lower else _AT_UPPER
        basis[leave] = j
        vstat[j] = _BASIC
        xB[leave] = enter_val

        inv_piv = 1.0 / piv
        for col in range(m):
            Binv[leave, col] *= inv_piv
        for pos in range(m):
            if pos == leave:
                continue
            f = alpha[pos]
            if f != 0.0:
                for col in range(m):
                    Binv[pos, col] -= f * Binv[leave, col]

        iters += 1
        since_check += 1
        since_rebuild += 1


def _to_csc(a_matrix: np.ndarray, m: int, n: int):
    """CSC arrays for the structural columns followed by m unit slack columns."""
    at = a_matrix.T
    cols, rows = np.nonzero(at)
    vals = at[cols, rows]
    counts = np.bincount(cols, minlength=n)
    indptr = np.empty(n + m + 1, dtype=np.int64)
    indptr[0] = 0
    np.cumsum(counts, out=indptr[1 : n + 1])
    indptr[n + 1 :] = indptr[n] + np.arange(1, m + 1)
    indices = np.concatenate([rows.astype(np.int64), np.arange(m, dtype=np.int64)])
    data = np.concatenate([vals.astype(np.float64), np.ones(m)])
    return indptr, indices, data


def _slack_bounds(senses: np.ndarray):
    m = senses.shape[0]
    lo = np.zeros(m)
    up = np.zeros(m)
    lo[senses == SENSE_LE] = 0.0
    up[senses == SENSE_LE] = INF
    lo[senses == SENSE_GE] = -INF
    up[senses == SENSE_GE] = 0.0
    return lo, up


def _initial_vstat(lo: np.ndarray, up: np.ndarray) -> np.ndarray:
    vstat = np.full(lo.shape[0], _AT_LOWER, dtype=np.int8)
    no_lower = lo == -INF
    vstat[no_lower & (up < INF)] = _AT_UPPER
    vstat[no_lower & (up == INF)] = _FREE
    return vstat


def _crash_basis(indptr, indices, data, lo, up, vstat, b, m, n, ftol):
    """Pick a starting basis of unit columns, one per row.

    Prefers the row's slack; if the slack value would violate its own
    bounds, tries unit structural columns that restore feasibility.  Rows
    left with an out-of-bound slack start infeasible and are repaired by
    phase 1.
    """
    values = np.where(vstat == _AT_LOWER, lo, np.where(vstat == _AT_UPPER, up, 0.0))
    values[np.isinf(values)] = 0.0
    resid = b.copy()
    for j in range(n + m):
        v = values[j]
        if v != 0.0:
            sl = slice(indptr[j], indptr[j + 1])
            np.subtract.at(resid, indices[sl], data[sl] * v)

    unit_cols: dict[int, list[int]] = {}
    for j in range(n):
        if indptr[j + 1] - indptr[j] == 1:
            unit_cols.setdefault(int(indices[indptr[j]]), []).append(j)

    basis = np.empty(m, dtype=np.int64)
    for i in range(m):
        sj = n + i
        sval = values[sj] + resid[i]
        if lo[sj] - ftol <= sval <= up[sj] + ftol:
            basis[i] = sj
            continue
        chosen = sj
        for j in unit_cols.get(i, ()):
            if vstat[j] == _BASIC:
                continue
            coef = data[indptr[j]]
            cand = values[j] + resid[i] / coef
            if lo[j] - ftol <= cand <= up[j] + ftol:
                chosen = j
                break
        basis[i] = chosen
        vstat[chosen] = _BASIC
    for i in range(m):
        vstat[basis[i]] = _BASIC
    return basis


def _bounds_only_solution(problem: LpProblem, tol: float) -> LpSolution:
    c = problem.objective
    x = np.where(c > 0.0, problem.lower, np.where(c < 0.0, problem.upper, 0.0))
    zero_cost = c == 0.0
    x[zero_cost] = np.where(
        np.isfinite(problem.lower[zero_cost]),
        problem.lower[zero_cost],
        np.minimum(problem.upper[zero_cost], 0.0),
    )
    if np.any(np.isinf(x)):
        return LpSolution(STATUS_UNBOUNDED, x, np.zeros(0), -INF)
    return LpSolution(STATUS_OPTIMAL, x, np.zeros(0), float(c @ x), 0, None)


def solve_lp(
    problem: LpProblem,
    tol: float = DEFAULT_TOL,
    max_iters: int | None = None,
    start: tuple | None = None,
    refactor_every: int = 64,
) -> LpSolution:
    """Solve a bounded-variable LP; never raises for infeasible/unbounded input.

    `tol` is a relative tolerance: primal feasibility is enforced within
    tol * max(1, |rhs|) per row and dual feasibility within
    tol * max(1, |objective|) per column.  `max_iters` defaults to
    50 * (rows + cols).  `start` accepts the `basis_state` of a previous
    solution of a problem with identical shape (bounds may differ).
    """
    m, n = problem.n_rows, problem.n_vars
    if max_iters is None:
        max_iters = 50 * (m + n)
    if m == 0:
        return _bounds_only_solution(problem, tol)

    indptr, indices, data = _to_csc(problem.a_matrix, m, n)
    slo, sup = _slack_bounds(problem.senses)
    lo = np.concatenate([problem.lower, slo])
    up = np.concatenate([problem.upper, sup])
    c = np.concatenate([problem.objective, np.zeros(m)])
    b = problem.rhs.astype(np.float64).copy()

    scale_b = max(1.0, float(np.abs(b).max())) if m else 1.0
    ftol = tol * scale_b
    dtol = tol * max(1.0, float(np.abs(c).max()))

    if start is not None:
        basis = np.asarray(start[0], dtype=np.int64).copy()
        vstat = np.asarray(start[1], dtype=np.int8).copy()
        if basis.shape[0] != m or vstat.shape[0] != n + m:
            raise LpFormatError("warm-start state does not match problem shape")
        # repair statuses that the new bounds made inconsistent
        for j in range(n + m):
            if vstat[j] == _AT_LOWER and lo[j] == -INF:
                vstat[j] = _AT_UPPER if up[j] < INF else _FREE
            elif vstat[j] == _AT_UPPER and up[j] == INF:
                vstat[j] = _AT_LOWER if lo[j] > -INF else _FREE
        xB = np.empty(m)
        try:
            if len(start) >= 3 and start[2] is not None:
                # reuse the carried inverse: valid because the matrix is
                # unchanged between warm starts (bounds-only edits)
                Binv = np.array(start[2], dtype=np.float64)
                _recompute_xb(indptr, indices, data, b, lo, up, vstat, Binv, xB)
            else:
                Binv = np.empty((m, m))
                _refactorize(indptr, indices, data, b, lo, up, basis, vstat, xB, Binv)
        except Exception:
            start = None
    if start is None:
        vstat = _initial_vstat(lo, up)
        basis = _crash_basis(indptr, indices, data, lo, up, vstat, b, m, n, ftol)
        Binv = np.empty((m, m))
        xB = np.empty(m)
        _refactorize(indptr, indices, data, b, lo, up, basis, vstat, xB, Binv)

    code, iters = _simplex_loop(
        indptr, indices, data, c, lo, up, b, basis, vstat, xB, Binv,
        ftol, dtol, max_iters, refactor_every, 200,
    )

    x = np.where(vstat == _AT_LOWER, lo, np.where(vstat == _AT_UPPER, up, 0.0))
    x[np.isinf(x)] = 0.0
    x[basis] = xB
    cb = c[basis]
    y = cb @ Binv
    primal = x[:n].copy()
    status = _STATUS_BY_CODE[code]
    obj = float(problem.objective @ primal)
    return LpSolution(
        status=status,
        primal=primal,
        dual=np.asarray(y, dtype=np.float64),
        objective_value=obj,
        iterations=int(iters),
        basis_state=(basis.copy(), vstat.copy(), Binv),
    )


def warmup() -> None:
    """Force JIT compilation of the solver core on a toy problem."""
    prob = LpProblem(
        objective=np.array([-1.0, 1.0]),
        lower=np.array([0.0, 0.0]),
        upper=np.array([1.0, INF]),
        a_matrix=np.array([[1.0, 1.0], [1.0, -1.0]]),
        senses=np.array([SENSE_LE, SENSE_GE], dtype=np.int8),
        rhs=np.array([1.5, -0.5]),
    )
    solve_lp(prob)
