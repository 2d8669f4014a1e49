"""Blocks (maximal 2-connected subgraphs), cutvertices, block-cut tree."""

from dataclasses import dataclass

from .graphs import Graph, bits, vertex_tuple

__all__ = ["BlockDecomposition", "blocks"]


@dataclass(frozen=True)
class BlockDecomposition:
    """Blocks as vertex sets, the cutvertices, and the bipartite tree edges.

    tree_edges pairs a block index with a cutvertex it contains; for a
    connected input this incidence structure is a tree.
    """

    blocks: tuple[tuple[int, ...], ...]
    cutvertices: tuple[int, ...]
    tree_edges: tuple[tuple[int, int], ...]


def blocks(graph: Graph) -> BlockDecomposition:
    """Depth-first block decomposition (iterative, edge-stack variant).

    A bridge is a 2-vertex block; an isolated vertex is its own block.
    Every edge lands in exactly one block; blocks pairwise share at most one
    vertex, and every shared vertex is a cutvertex.
    """
    n = graph.n
    nbr = [list(bits(a)) for a in graph.adj]
    disc = [-1] * n
    low = [0] * n
    parent = [-1] * n
    is_cut = [False] * n
    out_masks: list[int] = []
    timer = 0

    for root in range(n):
        if disc[root] != -1:
            continue
        if not nbr[root]:
            disc[root] = timer
            timer += 1
            out_masks.append(1 << root)
            continue
        root_children = 0
        disc[root] = low[root] = timer
        timer += 1
        edge_stack: list[tuple[int, int]] = []
        stack = [(root, iter(nbr[root]))]
        while stack:
            u, it = stack[-1]
            advanced = False
            for v in it:
                if disc[v] == -1:
                    parent[v] = u
                    if u == root:
                        root_children += 1
                    edge_stack.append((u, v))
                    disc[v] = low[v] = timer
                    timer += 1
                    stack.append((v, iter(nbr[v])))
                    advanced = True
                    break
                if v != parent[u] and disc[v] < disc[u]:
                    edge_stack.append((u, v))
                    if disc[v] < low[u]:
                        low[u] = disc[v]
            if advanced:
                continue
            stack.pop()
            if not stack:
                continue
            pu = stack[-1][0]
            if low[u] < low[pu]:
                low[pu] = low[u]
            if low[u] >= disc[pu]:
                comp = 0
                while True:
                    a, b = edge_stack.pop()
                    comp |= (1 << a) | (1 << b)
                    if (a, b) == (pu, u):
                        break
                out_masks.append(comp)
                if pu != root:
                    is_cut[pu] = True
        if root_children >= 2:
            is_cut[root] = True

    block_sets = sorted(vertex_tuple(m) for m in out_masks)
    cuts = tuple(v for v in range(n) if is_cut[v])
    tree_edges = tuple(
        (bi, v) for bi, bl in enumerate(block_sets) for v in bl if is_cut[v]
    )
    return BlockDecomposition(tuple(block_sets), cuts, tree_edges)
