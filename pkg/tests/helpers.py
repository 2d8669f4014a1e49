"""Independent brute-force oracles used to cross-check the library.

Everything here is deliberately naive: permutation search for isomorphism,
bipartition sweeps for cuts, subset sweeps for chordality and separators.
Slow but obviously correct on the small graphs the tests use.
"""

import random
from itertools import combinations, permutations

from ftclique import Graph


def random_graph(rng: random.Random, n: int, prob: float) -> Graph:
    """Erdos-Renyi style graph: each pair is an edge with probability prob."""
    edges = [(u, v) for u in range(n) for v in range(u + 1, n)
             if rng.random() < prob]
    return Graph(n, edges)


def random_graph_with_edges(rng: random.Random, n: int, m: int) -> Graph:
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    if m > len(pairs):
        raise ValueError(f"cannot place {m} edges on {n} vertices")
    return Graph(n, rng.sample(pairs, m))


def isomorphic_bruteforce(a: Graph, b: Graph) -> bool:
    """Permutation search with a degree-sequence prefilter; n <= 8 expected."""
    if a.n != b.n or a.edge_count != b.edge_count:
        return False
    if sorted(a.degrees()) != sorted(b.degrees()):
        return False
    deg_b = b.degrees()
    for perm in permutations(range(a.n)):
        if any(a.degree(v) != deg_b[perm[v]] for v in range(a.n)):
            continue
        if all(b.has_edge(perm[u], perm[v]) for u, v in a.edges()):
            return True
    return False


def edge_connectivity_bruteforce(g: Graph) -> int:
    """Minimum crossing-edge count over all bipartitions of the vertices."""
    n = g.n
    if n <= 1:
        return 0
    best = None
    for size in range(1, n // 2 + 1):
        for side in combinations(range(n), size):
            inside = set(side)
            crossing = sum(
                1 for u, v in g.edges() if (u in inside) != (v in inside)
            )
            if best is None or crossing < best:
                best = crossing
    return best


def vertex_connectivity_bruteforce(g: Graph) -> int:
    """Smallest deletion set leaving a disconnected remainder; n-1 for K_n."""
    from ftclique import is_connected

    n = g.n
    if n <= 1:
        return 0
    if g.edge_count == n * (n - 1) // 2:
        return n - 1
    for size in range(n - 1):
        for cut in combinations(range(n), size):
            rest, _ = g.remove_vertices(cut)
            if not is_connected(rest):
                return size
    return n - 1


def is_chordal_bruteforce(g: Graph) -> bool:
    """No subset of >= 4 vertices induces a cycle; n <= 8 expected."""
    for size in range(4, g.n + 1):
        for sub in combinations(range(g.n), size):
            h, _ = g.induced(sub)
            if h.edge_count != size:
                continue
            if any(h.degree(v) != 2 for v in range(size)):
                continue
            from ftclique import is_connected
            if is_connected(h):
                return False
    return True


def is_maximal_clique(g: Graph, part: tuple[int, ...]) -> bool:
    if not g.is_clique(part):
        return False
    members = set(part)
    for v in range(g.n):
        if v in members:
            continue
        if all(g.has_edge(v, u) for u in part):
            return False
    return True


def check_clique_tree(g: Graph, tree) -> None:
    """Assert the clique-tree contract: maximal-clique parts covering all
    vertices and edges, a spanning tree with stored adhesions equal to the
    part intersections, and the running-intersection property."""
    parts = tree.parts
    q = len(parts)
    assert q >= 1 or g.n == 0
    covered = set()
    for part in parts:
        assert is_maximal_clique(g, part), f"part {part} is not a maximal clique"
        covered.update(part)
    assert covered == set(range(g.n)), "parts must cover every vertex"
    in_part = [set(part) for part in parts]
    for u, v in g.edges():
        assert any(u in s and v in s for s in in_part), f"edge ({u},{v}) uncovered"

    assert len(tree.tree_edges) == max(q - 1, 0)
    parent = list(range(q))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    neighbors: dict[int, list[int]] = {i: [] for i in range(q)}
    for i, j, adhesion in tree.tree_edges:
        assert tuple(sorted(in_part[i] & in_part[j])) == adhesion
        ri, rj = find(i), find(j)
        assert ri != rj, "tree edges form a cycle"
        parent[ri] = rj
        neighbors[i].append(j)
        neighbors[j].append(i)

    for v in range(g.n):
        holding = [i for i in range(q) if v in in_part[i]]
        seen = {holding[0]}
        stack = [holding[0]]
        members = set(holding)
        while stack:
            i = stack.pop()
            for j in neighbors[i]:
                if j in members and j not in seen:
                    seen.add(j)
                    stack.append(j)
        assert seen == members, f"parts holding {v} are not connected in the tree"


def minimal_separators_bruteforce(g: Graph) -> set[tuple[int, ...]]:
    """All vertex sets with at least two full components in the remainder."""
    from ftclique import components

    out = set()
    n = g.n
    for size in range(n - 1):
        for cand in combinations(range(n), size):
            rest, kept = g.remove_vertices(cand)
            comps = components(rest)
            if len(comps) < 2:
                continue
            full = 0
            cand_set = set(cand)
            for comp in comps:
                seen = set()
                for v in comp:
                    seen.update(g.neighborhood(kept[v]))
                if cand_set <= seen:
                    full += 1
            if full >= 2:
                out.add(cand)
    return out


def packings_exist_bruteforce(g: Graph, p: int, c: int) -> bool:
    """Scan all ways to pick p disjoint c-subsets and test cliqueness."""

    def extend(chosen: list[tuple[int, ...]], used: set[int]) -> bool:
        if len(chosen) == p:
            return True
        pool = [v for v in range(g.n) if v not in used]
        floor = chosen[-1] if chosen else ()
        for sub in combinations(pool, c):
            if chosen and sub <= floor:
                continue
            if g.is_clique(sub) and extend(chosen + [sub], used | set(sub)):
                return True
        return False

    return extend([], set())


def all_graphs_with_edges(n: int, m: int, min_degree: int = 0):
    """Every labeled n-vertex graph with exactly m edges, degree filtered."""
    pairs = list(combinations(range(n), 2))
    for chosen in combinations(range(len(pairs)), m):
        deg = [0] * n
        for idx in chosen:
            u, v = pairs[idx]
            deg[u] += 1
            deg[v] += 1
        if min_degree and min(deg) < min_degree:
            continue
        yield Graph(n, [pairs[i] for i in chosen])
