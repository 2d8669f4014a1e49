"""Structural audits: necessary conditions every accepted graph satisfies.

Audits target graphs at the critical order p*c + k with c >= 3, where the
theory pins down degrees, local cliques, and how size-k separators split
the graph. Premise violations raise; property violations come back as
failing records with replayable witnesses.
"""

import random
from dataclasses import dataclass
from itertools import combinations
from math import comb

from .blocks import blocks
from .connectivity import component_masks
from .graphs import Graph, bits, mask_of, vertex_tuple
from .packing import has_clique_containing
from .verify import FTParams, degree_floor, verify_ft

__all__ = [
    "AuditRecord",
    "AuditReport",
    "audit_basic",
    "audit_low_degree_cliques",
    "audit_separator",
    "size_k_separators",
    "RecognitionResult",
    "recognize_min_1ft",
]

_SWEEP_CAP = 200_000


@dataclass(frozen=True)
class AuditRecord:
    """One audited property: id, plain statement, outcome, first violation."""

    check: str
    rule: str
    passed: bool
    witness: dict | None


@dataclass(frozen=True)
class AuditReport:
    records: tuple[AuditRecord, ...]

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.records)

    def failures(self) -> tuple[AuditRecord, ...]:
        return tuple(r for r in self.records if not r.passed)

    def to_dict(self) -> dict:
        return {
            "passed": self.passed,
            "records": [
                {
                    "check": r.check,
                    "rule": r.rule,
                    "passed": r.passed,
                    "witness": r.witness,
                }
                for r in self.records
            ],
        }


def _require_critical(graph: Graph, params: FTParams) -> None:
    if params.c < 3:
        raise ValueError(f"audits require c >= 3, got c = {params.c}")
    if graph.n != params.critical_order:
        raise ValueError(
            f"audits apply at order p*c + k = {params.critical_order}, "
            f"got {graph.n} vertices"
        )


def audit_basic(graph: Graph, params: FTParams, *, samples_per_vertex: int = 200,
                exhaustive_cutoff: int = 1000, seed: int = 0) -> AuditReport:
    """Per-vertex necessities: degree floor, clique membership, and clique
    membership after deletions (exhaustive below the cutoff, else sampled)."""
    _require_critical(graph, params)
    k, c = params.k, params.c
    n = graph.n
    floor = degree_floor(k, c)
    records: list[AuditRecord] = []

    witness = None
    for v in range(n):
        d = graph.adj[v].bit_count()
        if d < floor:
            witness = {"vertex": v, "degree": d, "required": floor}
            break
    records.append(AuditRecord(
        "min-degree",
        f"every vertex has degree >= c + k - 1 = {floor}",
        witness is None,
        witness,
    ))

    witness = None
    for v in range(n):
        if not has_clique_containing(graph, v, c):
            witness = {"vertex": v}
            break
    records.append(AuditRecord(
        "vertex-clique",
        f"every vertex lies in some {c}-clique",
        witness is None,
        witness,
    ))

    witness = None
    exhaustive = comb(n - 1, k) <= exhaustive_cutoff
    for v in range(n):
        others = [u for u in range(n) if u != v]
        if exhaustive:
            subsets = combinations(others, k)
        else:
            rng = random.Random(seed * 1_000_003 + v)
            drawn: set[tuple[int, ...]] = set()
            attempts = 0
            while len(drawn) < samples_per_vertex and attempts < samples_per_vertex * 20:
                drawn.add(tuple(sorted(rng.sample(others, k))))
                attempts += 1
            subsets = sorted(drawn)
        for s in subsets:
            allowed = graph.full_mask & ~mask_of(s)
            if not has_clique_containing(graph, v, c, allowed):
                witness = {"vertex": v, "deleted": list(s)}
                break
        if witness:
            break
    mode = "all" if exhaustive else f"{samples_per_vertex} sampled"
    records.append(AuditRecord(
        "surviving-clique",
        f"every vertex lies in a {c}-clique after deleting any {k} other "
        f"vertices ({mode} deletion sets per vertex)",
        witness is None,
        witness,
    ))
    return AuditReport(tuple(records))


def audit_low_degree_cliques(graph: Graph, params: FTParams) -> AuditReport:
    """Tight-degree vertices have clique closed neighborhoods, and size-k
    separators leaving an order-c component seal it into a (k+c)-clique."""
    _require_critical(graph, params)
    k, c = params.k, params.c
    n = graph.n
    floor = degree_floor(k, c)
    records: list[AuditRecord] = []

    witness = None
    for v in range(n):
        if graph.adj[v].bit_count() != floor:
            continue
        closed = vertex_tuple(graph.adj[v] | (1 << v))
        if not graph.is_clique(closed):
            pair = _non_adjacent_pair(graph, closed)
            witness = {"vertex": v, "non_adjacent_pair": list(pair)}
            break
    records.append(AuditRecord(
        "tight-degree-closed-clique",
        f"every vertex of degree exactly {floor} has a clique closed "
        f"neighborhood (a K_{c + k})",
        witness is None,
        witness,
    ))

    if comb(n, k) > _SWEEP_CAP:
        raise ValueError(
            f"separator sweep needs C({n}, {k}) subsets; cap is {_SWEEP_CAP}"
        )
    witness = None
    full = graph.full_mask
    for w in combinations(range(n), k):
        w_mask = mask_of(w)
        comps = component_masks(graph.adj, full & ~w_mask)
        if len(comps) < 2:
            continue
        for comp in comps:
            if comp.bit_count() != c:
                continue
            sealed = vertex_tuple(comp | w_mask)
            if not graph.is_clique(sealed):
                pair = _non_adjacent_pair(graph, sealed)
                witness = {
                    "separator": list(w),
                    "component": list(vertex_tuple(comp)),
                    "non_adjacent_pair": list(pair),
                }
                break
        if witness:
            break
    records.append(AuditRecord(
        "sealed-small-component",
        f"for every separating {k}-set whose removal leaves a component of "
        f"order exactly {c}, that component plus the separator is a clique",
        witness is None,
        witness,
    ))
    return AuditReport(tuple(records))


def _non_adjacent_pair(graph: Graph, vertices: tuple[int, ...]) -> tuple[int, int]:
    for a, b in combinations(vertices, 2):
        if not graph.has_edge(a, b):
            return a, b
    raise AssertionError("called on a clique")


def size_k_separators(graph: Graph, k: int) -> list[tuple[int, ...]]:
    """All k-subsets whose removal leaves a disconnected graph."""
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    n = graph.n
    if comb(n, k) > _SWEEP_CAP:
        raise ValueError(
            f"separator sweep needs C({n}, {k}) subsets; cap is {_SWEEP_CAP}"
        )
    full = graph.full_mask
    out = []
    for w in combinations(range(n), k):
        remaining = full & ~mask_of(w)
        if remaining and len(component_masks(graph.adj, remaining)) >= 2:
            out.append(w)
    return out


def audit_separator(graph: Graph, params: FTParams, separator) -> AuditReport:
    """How an accepted graph must split at a size-k separator W:
    components have order a positive multiple of c summing to p groups,
    each piece plus W is accepted for its share, every separator vertex
    anchors a c-clique inside each component, and every component sees all
    of W."""
    _require_critical(graph, params)
    k, p, c = params.k, params.p, params.c
    if k >= c:
        raise ValueError(f"separator audits require k < c, got k={k}, c={c}")
    w = tuple(sorted(separator))
    for v in w:
        graph._check_vertex(v)
    if len(w) != k or len(set(w)) != k:
        raise ValueError(f"separator must be {k} distinct vertices, got {w}")
    w_mask = mask_of(w)
    comps = component_masks(graph.adj, graph.full_mask & ~w_mask)
    if len(comps) < 2:
        raise ValueError(f"{w} does not disconnect the graph")

    records: list[AuditRecord] = []
    comp_sets = [vertex_tuple(m) for m in comps]

    witness = None
    for cs in comp_sets:
        if len(cs) % c != 0 or len(cs) == 0:
            witness = {"component": list(cs), "order": len(cs), "modulus": c}
            break
    records.append(AuditRecord(
        "component-size-multiple",
        f"every component of the split has order a positive multiple of {c}",
        witness is None,
        witness,
    ))

    shares = [len(cs) // c for cs in comp_sets]
    ok = sum(shares) == p and all(len(cs) % c == 0 for cs in comp_sets)
    records.append(AuditRecord(
        "share-total",
        f"component clique shares sum to p = {p}",
        ok,
        None if ok else {"shares": shares},
    ))

    witness = None
    for idx, cs in enumerate(comp_sets):
        if len(cs) % c != 0 or len(cs) == 0:
            continue
        piece, kept = graph.induced(cs + w)
        verdict = verify_ft(piece, FTParams(k, len(cs) // c, c))
        if not verdict.holds:
            cx = None
            if verdict.counterexample is not None:
                cx = [kept[v] for v in verdict.counterexample]
            witness = {"component": list(cs), "counterexample": cx}
            break
    records.append(AuditRecord(
        "piece-fault-tolerance",
        "every component plus the separator is itself accepted for its share",
        witness is None,
        witness,
    ))

    witness = None
    for x in w:
        for cs in comp_sets:
            pool = mask_of(cs) | (1 << x)
            if not has_clique_containing(graph, x, c, pool):
                witness = {"separator_vertex": x, "component": list(cs)}
                break
        if witness:
            break
    records.append(AuditRecord(
        "anchored-clique",
        f"every separator vertex completes a {c}-clique inside each component",
        witness is None,
        witness,
    ))

    witness = None
    for cs in comp_sets:
        seen = graph.neighborhood_mask(mask_of(cs))
        if seen != w_mask:
            witness = {"component": list(cs), "neighborhood": list(vertex_tuple(seen))}
            break
    records.append(AuditRecord(
        "full-components",
        "every component is adjacent to the entire separator",
        witness is None,
        witness,
    ))
    return AuditReport(tuple(records))


@dataclass(frozen=True)
class RecognitionResult:
    accepted: bool
    explanation: str

    def __bool__(self) -> bool:
        return self.accepted


def recognize_min_1ft(graph: Graph, p: int, c: int) -> RecognitionResult:
    """Decide minimality for k = 1 structurally: a graph on p*c + 1 vertices
    is a minimum accepted graph for (1, p, c) exactly when every block is a
    complete graph on c + 1 vertices. No verification scan is run."""
    if p < 1:
        raise ValueError(f"p must be >= 1, got {p}")
    if c < 3:
        raise ValueError(f"c must be >= 3, got {c}")
    n = graph.n
    if n != p * c + 1:
        return RecognitionResult(
            False, f"order {n} != p*c + 1 = {p * c + 1}"
        )
    decomposition = blocks(graph)
    want_vertices = c + 1
    want_edges = comb(c + 1, 2)
    for block in decomposition.blocks:
        if len(block) != want_vertices:
            return RecognitionResult(
                False,
                f"block {block} has {len(block)} vertices; expected {want_vertices}",
            )
        bmask = mask_of(block)
        m_block = sum((graph.adj[v] & bmask).bit_count() for v in block) // 2
        if m_block != want_edges:
            return RecognitionResult(
                False,
                f"block {block} has {m_block} edges; a K_{c + 1} has {want_edges}",
            )
    return RecognitionResult(
        True,
        f"all {len(decomposition.blocks)} blocks are complete graphs on "
        f"{want_vertices} vertices",
    )
