"""Domain types and model arithmetic for VPP investment planning.

Holds the time-resolved problem data, the cluster-aggregated variant, the
decision-variable containers for both, objective evaluation, instance
aggregation, the full-to-aggregated solution mapping, and a constraint
checker that reports violations instead of a bare boolean.

Everything here is pure functions over (conventionally) immutable arrays;
no solver state lives in this module.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field

import numpy as np

KIND_THERMAL = "thermal"
KIND_RENEWABLE = "renewable"
GENERATOR_KINDS = (KIND_THERMAL, KIND_RENEWABLE)

#: default absolute per-row feasibility tolerance, commensurate with the
#: LP kernel's termination tolerance
FEASIBILITY_TOL = 1e-7


class DimensionMismatch(ValueError):
    """Solution or partition arrays do not match the instance shape."""


class EmptyClusterError(ValueError):
    """A cluster has no member periods; the aggregated model divides by T_k."""


@dataclass(frozen=True)
class GeneratorSpec:
    """One candidate generation unit.

    inv_cost is money per MW of installed capacity, op_cost money per MWh
    generated.  Capacity, if built, must land in [cap_min, cap_max].
    """

    id: int
    kind: str
    inv_cost: float
    op_cost: float
    cap_min: float
    cap_max: float

    def __post_init__(self):
        if self.kind not in GENERATOR_KINDS:
            raise ValueError(f"generator {self.id}: unknown kind {self.kind!r}")
        if not 0.0 <= self.cap_min <= self.cap_max:
            raise ValueError(
                f"generator {self.id}: need 0 <= cap_min <= cap_max, "
                f"got [{self.cap_min}, {self.cap_max}]"
            )
        if self.inv_cost < 0.0 or self.op_cost < 0.0:
            raise ValueError(f"generator {self.id}: negative cost")


def _frozen(a: np.ndarray) -> np.ndarray:
    out = np.ascontiguousarray(a, dtype=np.float64)
    out.setflags(write=False)
    return out


@dataclass(eq=False)
class ProblemInstance:
    """Full time-resolved input data for the investment problem.

    cap_factor has shape (G, T) with entries in [0, 1]; demand has shape
    (T,) in MWh; delta is the sampling time in hours.
    """

    generators: tuple[GeneratorSpec, ...]
    delta: float
    ns_cost: float
    cap_factor: np.ndarray
    demand: np.ndarray

    def __post_init__(self):
        self.generators = tuple(self.generators)
        self.cap_factor = _frozen(np.atleast_2d(self.cap_factor))
        self.demand = _frozen(np.atleast_1d(self.demand))
        g, t = self.cap_factor.shape
        if g != len(self.generators):
            raise DimensionMismatch(
                f"cap_factor has {g} rows for {len(self.generators)} generators"
            )
        if t != self.demand.shape[0]:
            raise DimensionMismatch(
                f"cap_factor has {t} columns for horizon {self.demand.shape[0]}"
            )
        if self.delta <= 0.0:
            raise ValueError("delta must be positive")
        if np.any(self.demand < 0.0):
            raise ValueError("negative demand")
        if np.any(self.cap_factor < 0.0) or np.any(self.cap_factor > 1.0):
            raise ValueError("capacity factors must lie in [0, 1]")
        ops = self.op_costs
        if ops.size and self.ns_cost <= ops.max():
            # not fatal: shedding would undercut some generator at every period
            warnings.warn(
                "ns_cost does not exceed the largest operational cost; "
                "the shedding penalty may not bind",
                stacklevel=2,
            )

    @property
    def n_generators(self) -> int:
        return len(self.generators)

    @property
    def horizon(self) -> int:
        return self.demand.shape[0]

    @property
    def inv_costs(self) -> np.ndarray:
        return np.array([g.inv_cost for g in self.generators])

    @property
    def op_costs(self) -> np.ndarray:
        return np.array([g.op_cost for g in self.generators])

    @property
    def cap_mins(self) -> np.ndarray:
        return np.array([g.cap_min for g in self.generators])

    @property
    def cap_maxs(self) -> np.ndarray:
        return np.array([g.cap_max for g in self.generators])


@dataclass(eq=False)
class Partition:
    """Assignment of the |T| periods to k_count nonempty clusters."""

    k_count: int
    assignment: np.ndarray
    members: tuple[np.ndarray, ...]
    sizes: np.ndarray

    @classmethod
    def from_assignment(cls, assignment, k_count: int) -> "Partition":
        assignment = np.asarray(assignment, dtype=np.int64)
        if assignment.ndim != 1 or assignment.size == 0:
            raise DimensionMismatch("assignment must be a nonempty 1-d vector")
        horizon = assignment.size
        if not 1 <= k_count <= horizon:
            raise ValueError(f"k_count {k_count} outside [1, {horizon}]")
        if assignment.min() < 0 or assignment.max() >= k_count:
            raise ValueError("assignment contains out-of-range cluster index")
        members = tuple(
            np.flatnonzero(assignment == k) for k in range(k_count)
        )
        sizes = np.array([m.size for m in members], dtype=np.int64)
        if np.any(sizes == 0):
            empty = int(np.flatnonzero(sizes == 0)[0])
            raise EmptyClusterError(f"cluster {empty} has no member periods")
        return cls(k_count=k_count, assignment=assignment, members=members, sizes=sizes)

    @classmethod
    def singleton(cls, horizon: int) -> "Partition":
        """Identity partition: every period its own cluster."""
        return cls.from_assignment(np.arange(horizon), horizon)

    @property
    def horizon(self) -> int:
        return self.assignment.size


@dataclass(eq=False)
class AggregatedInstance:
    """Cluster-averaged instance: K representative periods with weights T_k."""

    generators: tuple[GeneratorSpec, ...]
    delta: float
    ns_cost: float
    k_count: int
    weights: np.ndarray
    avg_demand: np.ndarray
    avg_cap_factor: np.ndarray

    @property
    def n_generators(self) -> int:
        return len(self.generators)

    @property
    def inv_costs(self) -> np.ndarray:
        return np.array([g.inv_cost for g in self.generators])

    @property
    def op_costs(self) -> np.ndarray:
        return np.array([g.op_cost for g in self.generators])

    @property
    def cap_mins(self) -> np.ndarray:
        return np.array([g.cap_min for g in self.generators])

    @property
    def cap_maxs(self) -> np.ndarray:
        return np.array([g.cap_max for g in self.generators])


@dataclass(eq=False)
class InvestmentPlan:
    """First-stage decisions: installed capacity and build indicator per unit."""

    capacity: np.ndarray
    built: np.ndarray

    def __post_init__(self):
        self.capacity = np.asarray(self.capacity, dtype=np.float64)
        self.built = np.asarray(self.built, dtype=np.int8)
        if self.capacity.shape != self.built.shape:
            raise DimensionMismatch("capacity and built differ in shape")


@dataclass(eq=False)
class FullSolution:
    """Time-resolved solution: plan, generation (G, T) in MW, unserved (T,) MWh."""

    plan: InvestmentPlan
    gen: np.ndarray
    unserved: np.ndarray

    def __post_init__(self):
        self.gen = np.atleast_2d(np.asarray(self.gen, dtype=np.float64))
        self.unserved = np.atleast_1d(np.asarray(self.unserved, dtype=np.float64))


@dataclass(eq=False)
class AggregatedSolution:
    """Cluster-resolved solution: plan, generation (G, K) in MW, unserved (K,) MWh."""

    plan: InvestmentPlan
    gen: np.ndarray
    unserved: np.ndarray

    def __post_init__(self):
        self.gen = np.atleast_2d(np.asarray(self.gen, dtype=np.float64))
        self.unserved = np.atleast_1d(np.asarray(self.unserved, dtype=np.float64))


@dataclass(frozen=True)
class Violation:
    """One violated constraint row: identifier, index within its family, magnitude."""

    constraint: str
    index: tuple
    magnitude: float


def _check_full_dims(instance: ProblemInstance, sol: FullSolution) -> None:
    g, t = instance.n_generators, instance.horizon
    if sol.plan.capacity.shape != (g,):
        raise DimensionMismatch(f"plan capacity shape {sol.plan.capacity.shape} != ({g},)")
    if sol.gen.shape != (g, t):
        raise DimensionMismatch(f"gen shape {sol.gen.shape} != ({g}, {t})")
    if sol.unserved.shape != (t,):
        raise DimensionMismatch(f"unserved shape {sol.unserved.shape} != ({t},)")


def _check_agg_dims(agg: AggregatedInstance, sol: AggregatedSolution) -> None:
    g, k = agg.n_generators, agg.k_count
    if sol.plan.capacity.shape != (g,):
        raise DimensionMismatch(f"plan capacity shape {sol.plan.capacity.shape} != ({g},)")
    if sol.gen.shape != (g, k):
        raise DimensionMismatch(f"gen shape {sol.gen.shape} != ({g}, {k})")
    if sol.unserved.shape != (k,):
        raise DimensionMismatch(f"unserved shape {sol.unserved.shape} != ({k},)")


def evaluate_full_objective(instance: ProblemInstance, sol: FullSolution) -> float:
    """Total cost of a full-scale solution: investment plus operation.

    Sum of C_inv_g * x_g over generators plus, per period, operational cost
    C_op_g * p_gt * delta and shedding penalty ns_cost * unserved_t.
    """
    _check_full_dims(instance, sol)
    inv = float(instance.inv_costs @ sol.plan.capacity)
    op = float(instance.op_costs @ sol.gen.sum(axis=1)) * instance.delta
    shed = instance.ns_cost * float(sol.unserved.sum())
    return inv + op + shed


def evaluate_aggregated_objective(agg: AggregatedInstance, sol: AggregatedSolution) -> float:
    """Total cost of an aggregated solution, with each cluster weighted by T_k."""
    _check_agg_dims(agg, sol)
    w = agg.weights.astype(np.float64)
    inv = float(agg.inv_costs @ sol.plan.capacity)
    op = float(agg.op_costs @ (sol.gen * w).sum(axis=1)) * agg.delta
    shed = agg.ns_cost * float(w @ sol.unserved)
    return inv + op + shed


def build_aggregated_instance(instance: ProblemInstance, part: Partition) -> AggregatedInstance:
    """Average demand and capacity factors over each cluster's member periods."""
    if part.horizon != instance.horizon:
        raise DimensionMismatch(
            f"partition covers {part.horizon} periods, instance has {instance.horizon}"
        )
    if np.any(part.sizes == 0):
        raise EmptyClusterError("partition contains an empty cluster")
    k = part.k_count
    avg_demand = np.empty(k)
    avg_cf = np.empty((instance.n_generators, k))
    for j, idx in enumerate(part.members):
        avg_demand[j] = instance.demand[idx].mean()
        avg_cf[:, j] = instance.cap_factor[:, idx].mean(axis=1)
    return AggregatedInstance(
        generators=instance.generators,
        delta=instance.delta,
        ns_cost=instance.ns_cost,
        k_count=k,
        weights=part.sizes.copy(),
        avg_demand=avg_demand,
        avg_cap_factor=avg_cf,
    )


def map_full_to_aggregated(sol: FullSolution, part: Partition) -> AggregatedSolution:
    """Project a full-scale solution onto a partition's clusters.

    Capacity and build indicators carry over unchanged; generation and
    unserved energy become cluster means.  A feasible input yields a
    feasible aggregated solution with the same objective value.
    """
    if sol.gen.shape[1] != part.horizon:
        raise DimensionMismatch(
            f"solution spans {sol.gen.shape[1]} periods, partition {part.horizon}"
        )
    k = part.k_count
    gen_hat = np.empty((sol.gen.shape[0], k))
    uns_hat = np.empty(k)
    for j, idx in enumerate(part.members):
        gen_hat[:, j] = sol.gen[:, idx].mean(axis=1)
        uns_hat[j] = sol.unserved[idx].mean()
    plan = InvestmentPlan(capacity=sol.plan.capacity.copy(), built=sol.plan.built.copy())
    return AggregatedSolution(plan=plan, gen=gen_hat, unserved=uns_hat)


def _plan_violations(plan: InvestmentPlan, cap_min, cap_max, out: list[Violation], tol: float):
    lo = plan.built * cap_min
    hi = plan.built * cap_max
    below = lo - plan.capacity
    above = plan.capacity - hi
    for g in np.flatnonzero(below > tol):
        out.append(Violation("capacity_lower", (int(g),), float(below[g])))
    for g in np.flatnonzero(above > tol):
        out.append(Violation("capacity_upper", (int(g),), float(above[g])))


def _block_violations(demand, factors, delta, plan, gen, unserved, out, tol):
    # balance rows: sum_g p * delta + unserved == demand
    resid = np.abs(gen.sum(axis=0) * delta + unserved - demand)
    for t in np.flatnonzero(resid > tol):
        out.append(Violation("balance", (int(t),), float(resid[t])))
    below = -gen
    for g, t in zip(*np.nonzero(below > tol)):
        out.append(Violation("gen_lower", (int(g), int(t)), float(below[g, t])))
    above = gen - factors * plan.capacity[:, None]
    for g, t in zip(*np.nonzero(above > tol)):
        out.append(Violation("gen_upper", (int(g), int(t)), float(above[g, t])))
    neg = -unserved
    for t in np.flatnonzero(neg > tol):
        out.append(Violation("unserved_nonneg", (int(t),), float(neg[t])))


def check_feasibility(instance, solution, tol: float = FEASIBILITY_TOL) -> list[Violation]:
    """List every constraint row violated by more than tol, worst first.

    Accepts (ProblemInstance, FullSolution) or (AggregatedInstance,
    AggregatedSolution).  An empty list means the solution is feasible
    within tol.  Order is deterministic: magnitude descending, then
    constraint id and index ascending.
    """
    out: list[Violation] = []
    if isinstance(instance, ProblemInstance):
        if not isinstance(solution, FullSolution):
            raise TypeError("expected FullSolution for a ProblemInstance")
        _check_full_dims(instance, solution)
        _block_violations(
            instance.demand, instance.cap_factor, instance.delta,
            solution.plan, solution.gen, solution.unserved, out, tol,
        )
        _plan_violations(solution.plan, instance.cap_mins, instance.cap_maxs, out, tol)
    elif isinstance(instance, AggregatedInstance):
        if not isinstance(solution, AggregatedSolution):
            raise TypeError("expected AggregatedSolution for an AggregatedInstance")
        _check_agg_dims(instance, solution)
        _block_violations(
            instance.avg_demand, instance.avg_cap_factor, instance.delta,
            solution.plan, solution.gen, solution.unserved, out, tol,
        )
        _plan_violations(solution.plan, instance.cap_mins, instance.cap_maxs, out, tol)
    else:
        raise TypeError(f"unsupported instance type {type(instance).__name__}")
    out.sort(key=lambda v: (-v.magnitude, v.constraint, v.index))
    return out
