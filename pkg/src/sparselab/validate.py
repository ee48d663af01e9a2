"""Feasibility validators for every supported problem.

``validate`` is definitional: it re-derives feasibility and the objective
value straight from the problem definitions, by exact (possibly exponential)
checks, never by heuristics.  The l-colorability check is guarded to desk
scale and rejects larger inputs.
"""

from __future__ import annotations

from typing import NamedTuple

from . import coloring
from .errors import PayloadError, UnknownProblemError
from .instances import (ARC_PROBLEMS, ASSIGNMENT_PROBLEMS, DS, ELEMENT_PROBLEMS, FAS,
                        FVS, HITTING_SET, IDS, IS, LCOL_SUBGRAPH, MAX_2_SAT, MAX_3_SAT,
                        MMVC, PLANAR_SUBGRAPH, PROBLEMS, SET_COVER, SET_INDEX_PROBLEMS,
                        SET_PACKING, VC, VERTEX_PROBLEMS, Candidate, CnfInstance, Graph,
                        SetSystem)


class ValidationResult(NamedTuple):
    feasible: bool
    value: int


def validate(problem: str, instance, candidate: Candidate,
             ell: int | None = None) -> ValidationResult:
    """Check ``candidate`` against the definition of ``problem`` on ``instance``.

    Returns (feasible, value) where value is recomputed from the payload.
    Raises on unknown tags, payload/instance type mismatches, or a missing
    ``ell`` for LCOL-SUBGRAPH.
    """
    if problem not in PROBLEMS:
        raise UnknownProblemError(f"unknown problem tag {problem!r}")
    if candidate.problem != problem:
        raise PayloadError(f"candidate tagged {candidate.problem!r}, expected {problem!r}")

    if problem in VERTEX_PROBLEMS:
        graph = _expect(instance, Graph, problem)
        verts = _vertex_payload(candidate, graph.n)
        if graph.directed:
            raise PayloadError(f"{problem} requires an undirected graph")
        feasible = _check_vertex_problem(problem, graph, verts, ell)
        return ValidationResult(feasible, len(verts))

    if problem in ARC_PROBLEMS:
        graph = _expect(instance, Graph, problem)
        if not graph.directed:
            raise PayloadError("FAS requires a directed graph")
        arcs = _arc_payload(candidate, graph)
        return ValidationResult(_is_acyclic_directed(graph, removed=arcs), len(arcs))

    if problem in SET_INDEX_PROBLEMS or problem in ELEMENT_PROBLEMS:
        system = _expect(instance, SetSystem, problem)
        if problem in SET_INDEX_PROBLEMS:
            idxs = _index_payload(candidate, len(system.sets))
            if problem == SET_COVER:
                covered = set()
                for i in idxs:
                    covered |= system.sets[i]
                return ValidationResult(len(covered) == system.ground, len(idxs))
            # SET-PACKING: chosen sets pairwise disjoint (empty sets disjoint
            # with everything)
            seen: set[int] = set()
            for i in sorted(idxs):
                if system.sets[i] & seen:
                    return ValidationResult(False, len(idxs))
                seen |= system.sets[i]
            return ValidationResult(True, len(idxs))
        elems = _index_payload(candidate, system.ground)
        hits_all = all(s & elems for s in system.sets)
        return ValidationResult(hits_all, len(elems))

    if problem in ASSIGNMENT_PROBLEMS:
        cnf = _expect(instance, CnfInstance, problem)
        width = 2 if problem == MAX_2_SAT else 3
        if cnf.max_clause_width > width:
            raise PayloadError(f"{problem} instance has a clause of width "
                               f"{cnf.max_clause_width} > {width}")
        assignment = candidate.payload
        if not isinstance(assignment, tuple) or len(assignment) != cnf.num_vars:
            raise PayloadError("assignment payload must be a bool tuple of length num_vars")
        return ValidationResult(True, cnf.satisfied_count(assignment))

    raise UnknownProblemError(problem)  # pragma: no cover


# -- per-problem vertex checks ----------------------------------------------

def _check_vertex_problem(problem: str, graph: Graph, verts: frozenset[int],
                          ell: int | None) -> bool:
    if problem == IS:
        return _independent(graph, verts)
    if problem == VC:
        return _covers(graph, verts)
    if problem == DS:
        return _dominates(graph, verts)
    if problem == IDS:
        return _independent(graph, verts) and _dominates(graph, verts)
    if problem == MMVC:
        return _covers(graph, verts) and _minimal_cover(graph, verts)
    if problem == FVS:
        return _is_forest(graph, exclude=verts)
    if problem == LCOL_SUBGRAPH:
        if ell is None:
            raise PayloadError("LCOL-SUBGRAPH requires ell")
        return coloring.is_colorable(graph.induced_subgraph(verts), ell)
    if problem == PLANAR_SUBGRAPH:
        return coloring.is_planar(graph.induced_subgraph(verts))
    raise UnknownProblemError(problem)  # pragma: no cover


def _independent(graph: Graph, verts: frozenset[int]) -> bool:
    return all(not (set(graph.neighbors(v)) & verts) for v in verts)


def _covers(graph: Graph, verts: frozenset[int]) -> bool:
    return all(u in verts or v in verts for u, v in graph.edges())


def _dominates(graph: Graph, verts: frozenset[int]) -> bool:
    # an isolated vertex is dominated only by itself
    return all(v in verts or set(graph.neighbors(v)) & verts
               for v in range(graph.n))


def _minimal_cover(graph: Graph, verts: frozenset[int]) -> bool:
    # minimality for vertex covers is pointwise: every member has an edge
    # that only it covers
    for v in verts:
        if not any(u not in verts for u in graph.neighbors(v)):
            return False
    return True


def _is_forest(graph: Graph, exclude: frozenset[int]) -> bool:
    keep = [v for v in range(graph.n) if v not in exclude]
    index = {v: i for i, v in enumerate(keep)}
    parent = list(range(len(keep)))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in graph.edges():
        if u in index and v in index:
            ru, rv = find(index[u]), find(index[v])
            if ru == rv:
                return False
            parent[ru] = rv
    return True


def _is_acyclic_directed(graph: Graph, removed: frozenset[tuple[int, int]]) -> bool:
    indeg = [0] * graph.n
    out: list[list[int]] = [[] for _ in range(graph.n)]
    for u, v in graph.edges():
        if (u, v) not in removed:
            out[u].append(v)
            indeg[v] += 1
    queue = [v for v in range(graph.n) if indeg[v] == 0]
    seen = 0
    while queue:
        u = queue.pop()
        seen += 1
        for v in out[u]:
            indeg[v] -= 1
            if indeg[v] == 0:
                queue.append(v)
    return seen == graph.n


# -- payload coercion --------------------------------------------------------

def _expect(instance, cls, problem):
    if not isinstance(instance, cls):
        raise PayloadError(f"{problem} expects a {cls.__name__} instance, "
                           f"got {type(instance).__name__}")
    return instance


def _vertex_payload(candidate: Candidate, n: int) -> frozenset[int]:
    payload = candidate.payload
    if not isinstance(payload, frozenset):
        raise PayloadError("vertex payload must be a frozenset of vertex ids")
    for v in payload:
        if not isinstance(v, int) or not (0 <= v < n):
            raise PayloadError(f"vertex {v!r} does not exist in the instance")
    return payload


def _index_payload(candidate: Candidate, limit: int) -> frozenset[int]:
    payload = candidate.payload
    if not isinstance(payload, frozenset):
        raise PayloadError("index payload must be a frozenset of ints")
    for i in payload:
        if not isinstance(i, int) or not (0 <= i < limit):
            raise PayloadError(f"index {i!r} out of range (< {limit})")
    return payload


def _arc_payload(candidate: Candidate, graph: Graph) -> frozenset[tuple[int, int]]:
    payload = candidate.payload
    if not isinstance(payload, frozenset):
        raise PayloadError("arc payload must be a frozenset of (u, v) pairs")
    for arc in payload:
        if (not isinstance(arc, tuple) or len(arc) != 2
                or not graph.has_edge(arc[0], arc[1])):
            raise PayloadError(f"arc {arc!r} does not exist in the instance")
    return payload
