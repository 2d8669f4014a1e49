"""Components and exact vertex / edge connectivity via augmenting paths."""

from collections import deque
from dataclasses import dataclass

from .graphs import Graph, bits, vertex_tuple

__all__ = [
    "components",
    "is_connected",
    "edge_connectivity",
    "vertex_connectivity",
    "ConnectivityInfo",
    "connectivity",
]


def component_masks(adj: tuple[int, ...], sub: int) -> list[int]:
    """Connected components of the subgraph induced on the mask `sub`."""
    comps = []
    remaining = sub
    while remaining:
        comp = 0
        frontier = remaining & -remaining
        while frontier:
            comp |= frontier
            nxt = 0
            f = frontier
            while f:
                low = f & -f
                nxt |= adj[low.bit_length() - 1]
                f ^= low
            frontier = nxt & sub & ~comp
        comps.append(comp)
        remaining &= ~comp
    return comps


def components(graph: Graph) -> list[tuple[int, ...]]:
    """Vertex sets of the connected components, ordered by least vertex."""
    return [vertex_tuple(m) for m in component_masks(graph.adj, graph.full_mask)]


def is_connected(graph: Graph) -> bool:
    if graph.n == 0:
        return True
    return len(component_masks(graph.adj, graph.full_mask)) == 1


def _max_flow(cap: list[list[int]], source: int, sink: int) -> int:
    """Edmonds-Karp on a dense capacity matrix. Sizes here are tiny."""
    size = len(cap)
    flow = 0
    while True:
        parent = [-1] * size
        parent[source] = source
        queue = deque([source])
        while queue:
            u = queue.popleft()
            if u == sink:
                break
            row = cap[u]
            for v in range(size):
                if row[v] > 0 and parent[v] < 0:
                    parent[v] = u
                    queue.append(v)
        if parent[sink] < 0:
            return flow
        # bottleneck along the path
        add = None
        v = sink
        while v != source:
            u = parent[v]
            if add is None or cap[u][v] < add:
                add = cap[u][v]
            v = u
        v = sink
        while v != source:
            u = parent[v]
            cap[u][v] -= add
            cap[v][u] += add
            v = u
        flow += add


def edge_connectivity(graph: Graph) -> int:
    """Minimum number of edges whose deletion disconnects the graph.

    0 for disconnected or trivial graphs. Computed as the minimum over all
    targets t of the max flow from a fixed source with unit edge capacities.
    """
    n = graph.n
    if n <= 1 or not is_connected(graph):
        return 0
    best = None
    for t in range(1, n):
        cap = [[0] * n for _ in range(n)]
        for u in range(n):
            for v in bits(graph.adj[u]):
                cap[u][v] = 1
        f = _max_flow(cap, 0, t)
        if best is None or f < best:
            best = f
            if best == 0:
                break
    return best


def vertex_connectivity(graph: Graph) -> int:
    """Minimum number of vertices whose deletion disconnects the graph.

    n-1 for complete graphs (convention), 0 for disconnected or trivial
    ones. Uses vertex-split max flow; by Menger it suffices to scan pairs
    (s, t) with s ranging over a minimum-degree vertex and its neighbors,
    because a minimum separator misses at least one vertex of that set.
    """
    n = graph.n
    if n <= 1:
        return 0
    full = graph.full_mask
    if all(graph.adj[v] == full ^ (1 << v) for v in range(n)):
        return n - 1
    if not is_connected(graph):
        return 0

    v0 = min(range(n), key=lambda v: graph.adj[v].bit_count())
    sources = [v0, *bits(graph.adj[v0])]
    big = n
    best = None
    for s in sources:
        non_adjacent = full & ~graph.adj[s] & ~(1 << s)
        for t in bits(non_adjacent):
            # node v -> (in=v, out=v+n); internal arc capacity 1
            cap = [[0] * (2 * n) for _ in range(2 * n)]
            for v in range(n):
                cap[v][v + n] = big if v in (s, t) else 1
                for w in bits(graph.adj[v]):
                    cap[v + n][w] = big
            f = _max_flow(cap, s + n, t)
            if best is None or f < best:
                best = f
                if best == 0:
                    return 0
    return best if best is not None else n - 1


@dataclass(frozen=True)
class ConnectivityInfo:
    components: tuple[tuple[int, ...], ...]
    vertex_connectivity: int
    edge_connectivity: int


def connectivity(graph: Graph) -> ConnectivityInfo:
    """Components plus both connectivity numbers (0 when disconnected)."""
    comps = tuple(components(graph))
    if len(comps) != 1:
        return ConnectivityInfo(comps, 0, 0)
    return ConnectivityInfo(comps, vertex_connectivity(graph), edge_connectivity(graph))
