"""Exact and greedy coloring utilities plus a planarity predicate."""

from __future__ import annotations

import networkx as nx

from .errors import SizeGuardError
from .instances import Graph


def exact_coloring(graph: Graph, colors: int) -> tuple[int, ...] | None:
    """Proper coloring with at most ``colors`` colors, or None if impossible.

    Plain backtracking over vertices in (degree desc, id asc) order; intended
    for desk-scale inputs only (callers guard sizes).
    """
    n = graph.n
    if colors <= 0:
        return tuple() if n == 0 else None
    order = sorted(range(n), key=lambda v: (-graph.degree(v), v))
    assignment: dict[int, int] = {}

    def backtrack(i: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        used = {assignment[u] for u in graph.neighbors(v) if u in assignment}
        for c in range(colors):
            if c not in used:
                assignment[v] = c
                if backtrack(i + 1):
                    return True
                del assignment[v]
            # symmetry break: a fresh color index beyond all used ones is
            # interchangeable with any later fresh one
            if c not in {assignment[u] for u in assignment}:
                break
        return False

    if not backtrack(0):
        return None
    return tuple(assignment[v] for v in range(n))


def is_colorable(graph: Graph, colors: int, max_vertices: int = 20,
                 max_colors: int = 4) -> bool:
    """Exact colorability with the desk-scale guard of the validator."""
    if colors > max_colors or graph.n > max_vertices:
        raise SizeGuardError(
            f"exact {colors}-colorability check limited to "
            f"{max_colors} colors and {max_vertices} vertices (got n={graph.n})")
    return exact_coloring(graph, colors) is not None


def degeneracy_order(graph: Graph) -> tuple[list[int], int]:
    """Order obtained by repeatedly removing a minimum-degree vertex.

    Returns (order, degeneracy).  Lowest id wins ties, so the order is
    deterministic.
    """
    n = graph.n
    alive = set(range(n))
    deg = {v: graph.degree(v) for v in alive}
    order = []
    degeneracy = 0
    while alive:
        v = min(alive, key=lambda u: (deg[u], u))
        degeneracy = max(degeneracy, deg[v])
        order.append(v)
        alive.remove(v)
        for u in graph.neighbors(v):
            if u in alive:
                deg[u] -= 1
    return order, degeneracy


def greedy_coloring(graph: Graph, order: list[int]) -> dict[int, int]:
    """First-fit coloring along ``order``; uses at most degeneracy+1 colors
    when ``order`` is the reverse of a degeneracy order."""
    colors: dict[int, int] = {}
    for v in order:
        used = {colors[u] for u in graph.neighbors(v) if u in colors}
        c = 0
        while c in used:
            c += 1
        colors[v] = c
    return colors


def is_planar(graph: Graph) -> bool:
    """Exact planarity via the left-right algorithm (networkx)."""
    n, m = graph.n, graph.m
    if m <= 8:
        return True  # K5 needs 10 edges, K3,3 needs 9
    if n >= 3 and m > 3 * n - 6:
        return False  # Euler bound
    g = nx.Graph()
    g.add_nodes_from(range(n))
    g.add_edges_from(graph.edges())
    ok, _ = nx.check_planarity(g)
    return ok
