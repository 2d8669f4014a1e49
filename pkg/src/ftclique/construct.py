"""Constructions that realize the best known edge counts.

star_construction glues p disjoint c-cliques onto a shared K_k hub;
tree_of_cliques generalizes it to any tree of (k+c)-cliques overlapping in
k vertices, which keeps the graph chordal with all minimal separators of
size k. Both hit hub_edge_bound(k, p, c) edges on p*c + k vertices.
"""

import warnings
from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import TYPE_CHECKING

from .chordal import chordality
from .graphs import Graph, bits, cycle_graph, vertex_tuple

if TYPE_CHECKING:
    from .verify import FTParams

__all__ = [
    "star_construction",
    "TreeTemplate",
    "tree_of_cliques",
    "matches_gluing_profile",
    "contract_neighborhood",
    "odd_cycle",
    "harary",
    "c2_even_k_construction",
]


def star_construction(k: int, p: int, c: int) -> Graph:
    """Hub K_k on labels 0..k-1, joined completely to p disjoint K_c's.

    Clique i occupies labels k + i*c .. k + (i+1)*c - 1. Any k deletions
    are outweighed inside each damaged clique by the surviving hub part.
    """
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    if p < 1:
        raise ValueError(f"p must be >= 1, got {p}")
    if c < 2:
        raise ValueError(f"c must be >= 2, got {c}")
    n = p * c + k
    edges: list[tuple[int, int]] = list(combinations(range(k), 2))
    for i in range(p):
        block = range(k + i * c, k + (i + 1) * c)
        edges.extend(combinations(block, 2))
        edges.extend((h, v) for h in range(k) for v in block)
    return Graph(n, edges)


@dataclass(frozen=True)
class TreeTemplate:
    """Gluing plan for tree_of_cliques.

    Parts are numbered 0..p-1 with part 0 the root; tree_edges lists
    (parent, child) pairs; attachments maps each child to the k slot
    indices (0..k+c-1) of its parent's clique it reuses. Within any part,
    slots 0..k-1 are the inherited vertices (fresh for the root) and slots
    k..k+c-1 are the c fresh vertices.
    """

    p: int
    tree_edges: tuple[tuple[int, int], ...]
    attachments: tuple[tuple[int, tuple[int, ...]], ...]

    def attachment_for(self, child: int) -> tuple[int, ...]:
        for ch, slots in self.attachments:
            if ch == child:
                return slots
        raise KeyError(child)

    def validate(self, k: int, c: int) -> None:
        if self.p < 1:
            raise ValueError(f"a template needs p >= 1 parts, got {self.p}")
        if len(self.tree_edges) != self.p - 1:
            raise ValueError(
                f"a tree on {self.p} parts has {self.p - 1} edges, "
                f"got {len(self.tree_edges)}"
            )
        seen_children: set[int] = set()
        for parent, child in self.tree_edges:
            if not (0 <= parent < self.p and 0 < child < self.p):
                raise ValueError(f"tree edge ({parent}, {child}) out of range")
            if child in seen_children:
                raise ValueError(f"part {child} has two parents")
            seen_children.add(child)
        if seen_children != set(range(1, self.p)):
            raise ValueError("every part except the root needs a parent")
        # rootedness: all parts reachable from 0 following parent -> child
        kids: dict[int, list[int]] = {}
        for parent, child in self.tree_edges:
            kids.setdefault(parent, []).append(child)
        reached = {0}
        queue = deque([0])
        while queue:
            u = queue.popleft()
            for ch in kids.get(u, ()):
                reached.add(ch)
                queue.append(ch)
        if len(reached) != self.p:
            raise ValueError("tree edges must orient every part away from the root")
        attached = {ch for ch, _ in self.attachments}
        if attached != set(range(1, self.p)):
            raise ValueError("attachments must cover exactly the non-root parts")
        for child, slots in self.attachments:
            if len(slots) != k or len(set(slots)) != k:
                raise ValueError(
                    f"part {child} must attach at exactly k = {k} distinct slots"
                )
            if any(not (0 <= s < k + c) for s in slots):
                raise ValueError(f"part {child} attachment slot out of 0..{k + c - 1}")

    @classmethod
    def path(cls, p: int, k: int, c: int, *, newest: bool = True) -> "TreeTemplate":
        """Chain of parts; each child reuses its parent's k newest vertices
        (slots c..c+k-1, requires k <= c) or the k oldest (slots 0..k-1)."""
        if newest and k > c:
            raise ValueError("newest attachment needs k <= c")
        slots = tuple(range(c, c + k)) if newest else tuple(range(k))
        return cls(
            p=p,
            tree_edges=tuple((i, i + 1) for i in range(p - 1)),
            attachments=tuple((i + 1, slots) for i in range(p - 1)),
        )

    @classmethod
    def star(cls, p: int, k: int, *, slots: tuple[int, ...] | None = None) -> "TreeTemplate":
        """All parts hang off the root, reusing the same k root slots."""
        if slots is None:
            slots = tuple(range(k))
        return cls(
            p=p,
            tree_edges=tuple((0, i) for i in range(1, p)),
            attachments=tuple((i, slots) for i in range(1, p)),
        )


def tree_of_cliques(k: int, c: int, template: TreeTemplate) -> Graph:
    """Glue (k+c)-cliques along a tree, children sharing k parent vertices.

    Fresh labels are assigned root-first in breadth order, so the root part
    is 0..k+c-1 and every later part adds c consecutive labels. The result
    is chordal with all maximal cliques of size k+c and all minimal
    separators of size k, has p*c + k vertices and hub_edge_bound(k, p, c)
    edges.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if c < 3:
        raise ValueError(f"c must be >= 3, got {c}")
    template.validate(k, c)
    p = template.p
    kids: dict[int, list[int]] = {}
    for parent, child in template.tree_edges:
        kids.setdefault(parent, []).append(child)

    part_slots: dict[int, list[int]] = {0: list(range(k + c))}
    next_label = k + c
    edges: list[tuple[int, int]] = list(combinations(part_slots[0], 2))
    queue = deque([0])
    while queue:
        parent = queue.popleft()
        for child in sorted(kids.get(parent, ())):
            inherited = [part_slots[parent][s] for s in template.attachment_for(child)]
            fresh = list(range(next_label, next_label + c))
            next_label += c
            slots = inherited + fresh
            part_slots[child] = slots
            edges.extend(combinations(slots, 2))
            queue.append(child)
    return Graph(p * c + k, edges)


def matches_gluing_profile(graph: Graph, k: int, c: int) -> bool:
    """True iff the graph is chordal with every maximal clique of size k+c
    and every minimal separator of size k (the shape tree_of_cliques emits,
    which is accepted for (k, p, c) with p = (n - k) / c)."""
    if (graph.n - k) % c != 0 or graph.n < k + c:
        return False
    result = chordality(graph)
    if not result.is_chordal:
        return False
    tree = result.clique_tree
    if any(len(part) != k + c for part in tree.parts):
        return False
    return all(len(adh) == k for _, _, adh in tree.tree_edges)


def contract_neighborhood(graph: Graph, params: "FTParams", x: int) -> Graph:
    """Replace N[x] by a fresh K_k joined to N(N[x]), shrinking p by one.

    Requires the critical order p*c + k, degree(x) == c + k - 1, p >= 2,
    and N[x] a clique (guaranteed when the input is accepted and k == 1;
    supplied graphs violating it are rejected). Survivors keep their
    relative order at labels 0..n-c-k-1; the new hub takes the top k
    labels. For k != 1 the preservation of acceptance is unproven, so a
    warning is issued and callers should re-verify the output.
    """
    k, p, c = params.k, params.p, params.c
    graph._check_vertex(x)
    if graph.n != params.critical_order:
        raise ValueError(
            f"contraction needs order p*c + k = {params.critical_order}, got {graph.n}"
        )
    if p < 2:
        raise ValueError("contraction needs p >= 2; nothing would remain")
    d = graph.degree(x)
    if d != c + k - 1:
        raise ValueError(f"vertex {x} has degree {d}, need exactly c + k - 1 = {c + k - 1}")
    closed = graph.adj[x] | (1 << x)
    if not graph.is_clique(bits(closed)):
        raise ValueError(f"closed neighborhood of {x} is not a clique")
    if k != 1:
        warnings.warn(
            "contraction is only known to preserve acceptance for k = 1; "
            "re-verify the result",
            stacklevel=2,
        )
    boundary = graph.neighborhood_mask(closed)
    survivors, kept = graph.remove_vertices(vertex_tuple(closed))
    pos = {v: i for i, v in enumerate(kept)}
    base = survivors.n
    edges = survivors.edges()
    edges.extend(combinations(range(base, base + k), 2))
    for b in bits(boundary):
        edges.extend((pos[b], base + h) for h in range(k))
    return Graph(base + k, edges)


def odd_cycle(p: int) -> Graph:
    """C_{2p+1}: survives any one deletion while keeping p disjoint edges."""
    if p < 1:
        raise ValueError(f"p must be >= 1, got {p}")
    return cycle_graph(2 * p + 1)


def harary(m: int, n: int) -> Graph:
    """Circulant-style graph on n vertices with connectivity m and
    ceil(m*n/2) edges: offsets 1..m//2, plus diameters when m is odd
    (one extra near-diameter edge when n is odd too)."""
    if not 2 <= m < n:
        raise ValueError(f"need 2 <= m < n, got m={m}, n={n}")
    edges: set[tuple[int, int]] = set()
    for off in range(1, m // 2 + 1):
        for v in range(n):
            w = (v + off) % n
            edges.add((min(v, w), max(v, w)))
    if m % 2 == 1:
        half = n // 2
        count = half if n % 2 == 0 else half + 1
        for v in range(count):
            w = (v + half) % n
            edges.add((min(v, w), max(v, w)))
    return Graph(n, sorted(edges))


def c2_even_k_construction(k: int, p: int) -> Graph:
    """Accepted graph for (k, p, c=2) with (2p+k)(k+1)/2 edges, beating the
    hub bound; exists for even k in the narrow regime 2p + k <= 2k - 2."""
    if p < 1:
        raise ValueError(f"p must be >= 1, got {p}")
    if k % 2 != 0:
        raise ValueError(f"k must be even, got {k}")
    if 2 * p + k > 2 * k - 2:
        raise ValueError(
            f"regime requires 2p + k <= 2k - 2; got 2p + k = {2 * p + k}, "
            f"2k - 2 = {2 * k - 2}"
        )
    return harary(k + 1, 2 * p + k)
