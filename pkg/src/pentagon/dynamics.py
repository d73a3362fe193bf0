"""Iterating the cycle operator and sorting graphs into vanishing,
eventually periodic, or (suspected) expanding."""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass, field
from typing import Optional, Union

from . import canon
from .cycles import CycleLimitExceeded, count_induced_cycles
from .graph import Graph
from .operator import cycle_operator
from .structure import find_icosahedron, match_hatted_icosahedron, tadpole_hats

log = logging.getLogger(__name__)

DEFAULT_MAX_STEPS = 20
DEFAULT_MAX_ORDER = 5000
EXPANSION_THEOREM = "an icosahedron with h >= 1 tadpole hats is pentagon-expanding"


@dataclass
class IterateSummary:
    step: int
    order: int
    size: int
    invariant: int
    certificate_hash: Optional[int] = None
    certificate: Optional[canon.CanonicalCertificate] = field(default=None, repr=False)

    def as_dict(self) -> dict:
        return {
            "step": self.step,
            "order": self.order,
            "size": self.size,
            "certificate_hash": None if self.certificate_hash is None else f"{self.certificate_hash:016x}",
        }


@dataclass
class Trajectory:
    k_param: int
    summaries: list[IterateSummary]
    iterates: list[Graph] = field(repr=False)
    stop_reason: str  # "vanished" | "repeat" | "max_steps" | "max_order"
    repeat: Optional[tuple[int, int]] = None  # (m, m + p)
    exceeded_order: Optional[int] = None  # max_order when the next iterate was too large
    max_steps: int = DEFAULT_MAX_STEPS
    max_order: int = DEFAULT_MAX_ORDER

    @property
    def orders(self) -> list[int]:
        return [s.order for s in self.summaries]

    @property
    def terminal_graph(self) -> Graph:
        return self.iterates[-1]

    @property
    def budget_used(self) -> dict:
        return {"iterations": len(self.summaries) - 1, "max_order_touched": max(self.orders)}


def _certificate(summary: IterateSummary, g: Graph) -> canon.CanonicalCertificate:
    if summary.certificate is None:
        summary.certificate = canon.canonical_certificate(g)
        summary.certificate_hash = summary.certificate.hash
    return summary.certificate


def _summarize(step: int, g: Graph) -> IterateSummary:
    return IterateSummary(step, g.order, g.size, canon.invariant_hash(g))


def iterate(g: Graph, k: int = 5, max_steps: int = DEFAULT_MAX_STEPS,
            max_order: int = DEFAULT_MAX_ORDER) -> Trajectory:
    """Apply the operator from ``g`` until an empty iterate, a repeat up to
    isomorphism, or a budget stops it.

    Repeats are screened with a refinement invariant; a canonical
    certificate is computed only for iterates whose invariant collides with
    an earlier one, and equality of certificates confirms the repeat.
    """
    if max_steps < 1 or max_order < 1:
        raise ValueError("budgets must be at least 1")
    graphs = [g]
    summaries = [_summarize(0, g)]
    stop = "max_steps"
    repeat = None
    exceeded = None
    for step in range(1, max_steps + 1):
        try:
            nxt = cycle_operator(graphs[-1], k, max_order=max_order).output
        except CycleLimitExceeded:
            stop = "max_order"
            exceeded = max_order
            break
        cur = _summarize(step, nxt)
        graphs.append(nxt)
        summaries.append(cur)
        log.debug("step %d: order %d size %d", step, nxt.order, nxt.size)
        if nxt.order == 0:
            stop = "vanished"
            break
        key = (cur.order, cur.size, cur.invariant)
        for earlier in summaries[:-1]:
            if (earlier.order, earlier.size, earlier.invariant) != key:
                continue
            if _certificate(earlier, graphs[earlier.step]) == _certificate(cur, nxt):
                repeat = (earlier.step, step)
                break
        if repeat is not None:
            stop = "repeat"
            break
    return Trajectory(k, summaries, graphs, stop, repeat, exceeded, max_steps, max_order)


@dataclass(frozen=True)
class Vanishing:
    vanish_step: int
    name = "Vanishing"


@dataclass(frozen=True)
class EventuallyPeriodic:
    preperiod: int
    period: int
    shift_verified: bool = True
    name = "EventuallyPeriodic"


@dataclass(frozen=True)
class ExpandingSuspected:
    iterations_run: int
    orders: tuple[int, ...]
    structural_certificate: Optional[dict] = None
    name = "ExpandingSuspected"


Outcome = Union[Vanishing, EventuallyPeriodic, ExpandingSuspected]


@dataclass
class Classification:
    outcome: Outcome
    trajectory: Trajectory

    @property
    def name(self) -> str:
        return self.outcome.name

    def as_dict(self) -> dict:
        t = self.trajectory
        out = {"k": t.k_param, "outcome": self.outcome.name}
        o = self.outcome
        if isinstance(o, Vanishing):
            out["vanish_step"] = o.vanish_step
        elif isinstance(o, EventuallyPeriodic):
            out["preperiod"] = o.preperiod
            out["period"] = o.period
        out["orders"] = t.orders
        out["stop_reason"] = t.stop_reason
        if isinstance(o, ExpandingSuspected) and o.structural_certificate is not None:
            out["certificate"] = o.structural_certificate
        return out

    def to_json(self) -> str:
        return json.dumps(self.as_dict())


def structural_certificate(g: Graph) -> Optional[dict]:
    h = match_hatted_icosahedron(g)
    if h is None:
        return None
    return {"family": "hatted-icosahedron", "h": h, "theorem": EXPANSION_THEOREM}


def classify(g: Graph, k: int = 5, max_steps: int = DEFAULT_MAX_STEPS,
             max_order: int = DEFAULT_MAX_ORDER) -> Classification:
    """Vanishing if an empty iterate appears, EventuallyPeriodic if two
    iterates are isomorphic first, otherwise ExpandingSuspected.

    An empty iterate wins over periodicity, since the empty graph maps to
    itself. For a periodic result the repeat is pushed one step further as a
    check: iterate ``m+1`` must match the image of iterate ``m+p``.
    """
    traj = iterate(g, k, max_steps, max_order)
    if traj.stop_reason == "vanished":
        return Classification(Vanishing(len(traj.summaries) - 1), traj)
    if traj.repeat is not None:
        m, mp = traj.repeat
        return Classification(EventuallyPeriodic(m, mp - m, _shift_check(traj, m, mp)), traj)
    cert = structural_certificate(g) if k == 5 else None
    return Classification(
        ExpandingSuspected(len(traj.summaries) - 1, tuple(traj.orders), cert), traj
    )


def _shift_check(traj: Trajectory, m: int, mp: int) -> bool:
    after = cycle_operator(traj.iterates[mp], traj.k_param).output
    return canon.is_isomorphic(traj.iterates[m + 1], after)


def expansion_evidence(traj: Trajectory, h: Optional[int] = None,
                       search_cap: int = 2000, search_nodes: int = 200_000) -> dict:
    """Per-step growth report for a trajectory.

    For each iterate: order, size, number of induced k-cycles (the next
    order), and, when an induced icosahedron is found, how many outside
    vertices sit on one of its induced tadpoles. If ``h`` is given (or the
    input is recognized as an icosahedron with ``h`` hats) the report checks
    ``order >= 12 + h * 2**step`` at every step.
    """
    if h is None and traj.k_param == 5 and traj.iterates:
        h = match_hatted_icosahedron(traj.iterates[0])
    steps = []
    for i, (s, g) in enumerate(zip(traj.summaries, traj.iterates)):
        row = {"step": s.step, "order": s.order, "size": s.size}
        if i + 1 < len(traj.summaries):
            row["cycles"] = traj.summaries[i + 1].order
        else:
            try:
                row["cycles"] = count_induced_cycles(g, traj.k_param, limit=traj.max_order)
            except CycleLimitExceeded:
                row["cycles"] = None
                row["cycles_exceed"] = traj.max_order
        if g.order > search_cap:
            row["search"] = "SearchCapExceeded"
        else:
            core = find_icosahedron(g, search_nodes)
            if core is None:
                row["search"] = "not-found"
            else:
                row["search"] = "found"
                row["tadpole_hats"] = len(tadpole_hats(g, core))
        if h:
            bound = 12 + h * 2 ** s.step
            row["bound"] = bound
            row["bound_holds"] = s.order >= bound
        steps.append(row)
    report = {"k": traj.k_param, "h": h, "steps": steps}
    if h:
        report["all_bounds_hold"] = all(r["bound_holds"] for r in steps)
    return report
