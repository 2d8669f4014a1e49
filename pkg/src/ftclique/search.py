"""Exhaustive minimum-edge search at the critical order p*c + k.

Candidates are enumerated per work unit (m, d0): graphs with m edges in
which vertex 0 is adjacent to exactly 1..d0. Every isomorphism class with
minimum degree delta has such a representative with d0 = delta, so walking
d0 over [c+k-1, n-1] covers all classes with the forced degree floor;
duplicates across units are removed by canonical certificate. Units run in
(m, d0) order and are idempotent, which makes budget interruption and
resumption safe: a token lists the units still owed.
"""

import itertools
import time
from dataclasses import dataclass, field
from math import comb

from .canon import CanonicalForm, canonical_form, canonical_graph
from .connectivity import is_connected
from .formats import emit_graph6
from .graphs import Graph, mask_of
from .verify import (
    FTParams,
    FTVerdict,
    degree_floor,
    hub_edge_bound,
    verify_ft,
    verify_ft_oracle,
)

__all__ = [
    "Budget",
    "SearchResume",
    "SearchReport",
    "search_minimum",
    "probe_conjecture",
    "EXHAUSTIVE_ORDER_LIMIT",
]

EXHAUSTIVE_ORDER_LIMIT = 10
_CHECK_EVERY = 512


@dataclass(frozen=True)
class Budget:
    """Per-run caps; None means unlimited. Budgets meter one invocation,
    so resuming with the same budget always makes fresh progress."""

    seconds: float | None = None
    graphs: int | None = None

    def __post_init__(self) -> None:
        if self.seconds is not None and self.seconds <= 0:
            raise ValueError(f"seconds budget must be positive, got {self.seconds}")
        if self.graphs is not None and self.graphs < 1:
            raise ValueError(f"graphs budget must be >= 1, got {self.graphs}")


@dataclass(frozen=True)
class SearchResume:
    """Everything needed to continue an interrupted search.

    pending lists the (edge count, degree-of-vertex-0) work units left,
    first unit possibly part-done: unit_offset graphs of it are already
    counted and must be skipped on resume. graphs_examined is cumulative
    over all runs.
    """

    k: int
    p: int
    c: int
    max_edges: int
    pending: tuple[tuple[int, int], ...]
    best_m: int | None
    best_certs: tuple[CanonicalForm, ...]
    graphs_examined: int
    unit_offset: int = 0

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "p": self.p,
            "c": self.c,
            "max_edges": self.max_edges,
            "pending": [list(u) for u in self.pending],
            "best_m": self.best_m,
            "best_certs": [[cf.n, format(cf.code, "x")] for cf in self.best_certs],
            "graphs_examined": self.graphs_examined,
            "unit_offset": self.unit_offset,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "SearchResume":
        return cls(
            k=data["k"],
            p=data["p"],
            c=data["c"],
            max_edges=data["max_edges"],
            pending=tuple((m, d0) for m, d0 in data["pending"]),
            best_m=data["best_m"],
            best_certs=tuple(
                CanonicalForm(n, int(code, 16)) for n, code in data["best_certs"]
            ),
            graphs_examined=data["graphs_examined"],
            unit_offset=data.get("unit_offset", 0),
        )


@dataclass(frozen=True)
class SearchReport:
    params: FTParams
    n: int
    lower_bound: int
    target_bound: int
    max_edges: int
    minimum_found: int | None
    exemplars: tuple[CanonicalForm, ...]
    graphs_examined: int
    exhaustive: bool
    elapsed: float
    resume: SearchResume | None
    notes: tuple[str, ...] = field(default=())

    def exemplar_graphs(self) -> list[Graph]:
        return [canonical_graph(cf) for cf in self.exemplars]

    def to_dict(self) -> dict:
        return {
            "k": self.params.k,
            "p": self.params.p,
            "c": self.params.c,
            "n": self.n,
            "lower_bound": self.lower_bound,
            "target_bound": self.target_bound,
            "max_edges": self.max_edges,
            "minimum_found": self.minimum_found,
            "exemplars": [emit_graph6(g).strip() for g in self.exemplar_graphs()],
            "graphs_examined": self.graphs_examined,
            "exhaustive": self.exhaustive,
            "elapsed_seconds": round(self.elapsed, 3),
            "resume": None if self.resume is None else self.resume.to_dict(),
            "notes": list(self.notes),
        }


def _iter_adjacencies(n: int, m: int, dmin: int, d0: int):
    """All m-edge graphs with N(0) == {1..d0} and min degree >= dmin.

    Remaining edges are chosen among vertices 1..n-1 in lexicographic slot
    order. Prunings: total degree deficit must stay within 2 per missing
    edge; skipping a slot must leave each endpoint enough later slots to
    reach the floor; no degree may exceed 2m - d0 - (n-2)*dmin, the cap
    forced by everyone else needing the floor.
    """
    rem = m - d0
    if rem < 0 or not dmin <= d0 <= n - 1:
        return
    cap_rest = 2 * m - d0 - (n - 2) * dmin
    if cap_rest < dmin:
        return
    cap_rest = min(cap_rest, n - 1)
    slots = [(u, v) for u in range(1, n) for v in range(u + 1, n)]
    total_slots = len(slots)
    if rem > total_slots:
        return
    inc_after = [[0] * n for _ in range(total_slots + 1)]
    for i in range(total_slots - 1, -1, -1):
        u, v = slots[i]
        row = inc_after[i + 1][:]
        row[u] += 1
        row[v] += 1
        inc_after[i] = row

    adj = [0] * n
    adj[0] = mask_of(range(1, d0 + 1))
    deg = [0] * n
    deg[0] = d0
    for v in range(1, d0 + 1):
        adj[v] = 1
        deg[v] = 1
    deficit0 = sum(max(0, dmin - deg[v]) for v in range(1, n))

    def walk(i: int, need: int, deficit: int):
        if deficit > 2 * need:
            return
        if need == 0:
            if deficit == 0:
                yield tuple(adj)
            return
        if total_slots - i < need:
            return
        u, v = slots[i]
        du, dv = deg[u], deg[v]
        if du < cap_rest and dv < cap_rest:
            delta = (du < dmin) + (dv < dmin)
            adj[u] |= 1 << v
            adj[v] |= 1 << u
            deg[u] = du + 1
            deg[v] = dv + 1
            yield from walk(i + 1, need - 1, deficit - delta)
            adj[u] &= ~(1 << v)
            adj[v] &= ~(1 << u)
            deg[u] = du
            deg[v] = dv
        nxt = inc_after[i + 1]
        if du + nxt[u] >= dmin and dv + nxt[v] >= dmin:
            yield from walk(i + 1, need, deficit)

    yield from walk(0, rem, deficit0)


def search_minimum(params: FTParams, max_edges: int | None = None,
                   budget: Budget | None = None, *, allow_large: bool = False,
                   resume: SearchResume | None = None) -> SearchReport:
    """Smallest edge count admitting an accepted graph on p*c + k vertices.

    Scans m from the degree-floor lower bound upward, stops at the first m
    with a solution, and reports every solution at that m as a canonical
    certificate. With a budget the run may stop early, in which case the
    report carries a resume token; resumed runs reproduce exactly the
    unbudgeted result.
    """
    k, p, c = params.k, params.p, params.c
    n = params.critical_order
    if n > 64:
        raise ValueError(f"search supports order <= 64, got {n}")
    if n > EXHAUSTIVE_ORDER_LIMIT and not allow_large:
        raise ValueError(
            f"order {n} exceeds the exhaustive regime "
            f"(<= {EXHAUSTIVE_ORDER_LIMIT}); pass allow_large=True to force"
        )
    dmin = degree_floor(k, c)
    lower = (n * dmin + 1) // 2
    bound = hub_edge_bound(k, p, c)

    if resume is not None:
        if (resume.k, resume.p, resume.c) != (k, p, c):
            raise ValueError("resume token belongs to different parameters")
        if max_edges is not None and max_edges != resume.max_edges:
            raise ValueError("resume token was built for a different max_edges")
        max_edges = resume.max_edges
        pending = list(resume.pending)
        best_m = resume.best_m
        best_certs: set[CanonicalForm] = set(resume.best_certs)
        durable = resume.graphs_examined
        offset = resume.unit_offset
    else:
        if max_edges is None:
            max_edges = bound
        pending = [
            (m, d0)
            for m in range(lower, max_edges + 1)
            for d0 in range(dmin, n)
        ]
        best_m = None
        best_certs = set()
        durable = 0
        offset = 0

    budget = budget or Budget()
    start = time.monotonic()
    baseline = durable  # budget meters this run only; reports stay cumulative

    def over_budget(examined: int) -> bool:
        if budget.graphs is not None and examined - baseline >= budget.graphs:
            return True
        if budget.seconds is not None and time.monotonic() - start > budget.seconds:
            return True
        return False

    connectivity_prune = k >= 1 and c >= 3
    examined = durable
    seen: dict[CanonicalForm, bool] = {}
    seen_m: int | None = None
    resume_offset = offset

    while pending:
        m, d0 = pending[0]
        if best_m is not None and m > best_m:
            pending = []
            break
        if over_budget(examined):
            break
        if seen_m != m:
            seen = {}
            seen_m = m
        it = _iter_adjacencies(n, m, dmin, d0)
        pos = 0
        # Graphs before the offset were processed by an earlier run and are
        # already in the durable count; skip without recounting.
        for _ in itertools.islice(it, offset):
            pos += 1
        offset = 0
        aborted = False
        for adj in it:
            g = Graph._from_adj(n, adj)
            cert = canonical_form(g)
            if cert not in seen:
                holds = False
                if not connectivity_prune or is_connected(g):
                    holds = verify_ft(g, params).holds
                seen[cert] = holds
                if holds:
                    if best_m is None:
                        best_m = m
                    best_certs.add(cert)
            pos += 1
            examined += 1
            if examined % _CHECK_EVERY == 0 and over_budget(examined):
                aborted = True
                break
        durable = examined
        if aborted:
            resume_offset = pos
            break
        pending.pop(0)
        resume_offset = 0

    if best_m is not None:
        pending = [u for u in pending if u[0] <= best_m]
    # An interrupted unit is never popped, so full coverage of every edge
    # count up to the minimum (or max_edges) is exactly "nothing pending".
    exhaustive = not pending

    token = None
    notes: list[str] = []
    if pending:
        token = SearchResume(
            k, p, c, max_edges, tuple(pending), best_m,
            tuple(sorted(best_certs)), durable, resume_offset,
        )
        notes.append("budget exhausted; resume token covers the remaining units")
        if best_m is not None:
            notes.append(
                f"minimum {best_m} is final (smaller edge counts were exhausted) "
                "but its exemplar list may be incomplete"
            )
    if best_m is not None:
        if best_m == bound:
            notes.append("minimum matches the hub construction bound")
        elif best_m < bound:
            notes.append(f"minimum beats the hub construction bound {bound}")

    return SearchReport(
        params=params,
        n=n,
        lower_bound=lower,
        target_bound=bound,
        max_edges=max_edges,
        minimum_found=best_m,
        exemplars=tuple(sorted(best_certs)),
        graphs_examined=examined,
        exhaustive=exhaustive,
        elapsed=time.monotonic() - start,
        resume=token,
        notes=tuple(notes),
    )


def probe_conjecture(k: int, p: int, c: int, budget: Budget | None = None,
                     *, resume: SearchResume | None = None,
                     allow_large: bool = False) -> SearchReport:
    """Test whether the hub bound is the true minimum for k >= 2, k < c.

    Searches up to the bound; finding it confirms tightness for these
    parameters, finding less refutes it (any below-bound solution is
    re-verified with the oracle-backed verifier when it fits the budget).
    """
    if k < 2:
        raise ValueError(f"the probed regime starts at k = 2, got k = {k}")
    if k >= c:
        raise ValueError(
            f"the probed regime requires k < c (it is known to fail "
            f"otherwise), got k = {k}, c = {c}"
        )
    params = FTParams(k, p, c)
    report = search_minimum(params, None, budget, resume=resume,
                            allow_large=allow_large)
    notes = list(report.notes)
    if report.minimum_found is not None and report.minimum_found < report.target_bound:
        confirmations = []
        for g in report.exemplar_graphs():
            try:
                verdict: FTVerdict = verify_ft_oracle(g, params)
            except ValueError:
                continue
            confirmations.append(verdict.holds)
        if confirmations and all(confirmations):
            notes.append(
                "below-bound exemplars re-verified by the oracle-backed verifier"
            )
    elif report.minimum_found == report.target_bound:
        notes.append("bound confirmed tight at these parameters")
    return SearchReport(
        params=report.params,
        n=report.n,
        lower_bound=report.lower_bound,
        target_bound=report.target_bound,
        max_edges=report.max_edges,
        minimum_found=report.minimum_found,
        exemplars=report.exemplars,
        graphs_examined=report.graphs_examined,
        exhaustive=report.exhaustive,
        elapsed=report.elapsed,
        resume=report.resume,
        notes=tuple(notes),
    )
