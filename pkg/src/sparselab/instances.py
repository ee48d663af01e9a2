"""Core instance types: graphs, set systems, CNF formulas, solution candidates.

Vertices are dense integers 0..n-1 internally; original labels ride along in a
side table so reductions and the CLI can report solutions in source labels.
All types are immutable after construction and safe to share across workers.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from .errors import InstanceError

# Problem tags.
IS = "IS"
VC = "VC"
DS = "DS"
IDS = "IDS"
FVS = "FVS"
MMVC = "MMVC"
SET_COVER = "SET-COVER"
HITTING_SET = "HITTING-SET"
SET_PACKING = "SET-PACKING"
MAX_2_SAT = "MAX-2-SAT"
MAX_3_SAT = "MAX-3-SAT"
FAS = "FAS"
LCOL_SUBGRAPH = "LCOL-SUBGRAPH"
PLANAR_SUBGRAPH = "PLANAR-SUBGRAPH"

PROBLEMS = frozenset({
    IS, VC, DS, IDS, FVS, MMVC, SET_COVER, HITTING_SET, SET_PACKING,
    MAX_2_SAT, MAX_3_SAT, FAS, LCOL_SUBGRAPH, PLANAR_SUBGRAPH,
})

#: Problems whose payload is a vertex set of a Graph.
VERTEX_PROBLEMS = frozenset({IS, VC, DS, IDS, FVS, MMVC, LCOL_SUBGRAPH, PLANAR_SUBGRAPH})
#: Problems whose payload is a set of set indices of a SetSystem.
SET_INDEX_PROBLEMS = frozenset({SET_COVER, SET_PACKING})
#: Problems whose payload is a set of ground elements of a SetSystem.
ELEMENT_PROBLEMS = frozenset({HITTING_SET})
#: Problems whose payload is a truth assignment of a CnfInstance.
ASSIGNMENT_PROBLEMS = frozenset({MAX_2_SAT, MAX_3_SAT})
#: Problems whose payload is an arc set of a directed Graph.
ARC_PROBLEMS = frozenset({FAS})

MAXIMIZATION = frozenset({IS, MMVC, SET_PACKING, MAX_2_SAT, MAX_3_SAT,
                          LCOL_SUBGRAPH, PLANAR_SUBGRAPH})
MINIMIZATION = PROBLEMS - MAXIMIZATION


Label = int | str


@dataclass(frozen=True)
class Graph:
    """Simple graph with sorted per-vertex neighbor lists.

    ``adjacency[v]`` holds the neighbors of ``v`` (out-neighbors when
    directed).  No self-loops, no parallel edges; undirected adjacency is
    symmetric.  Construct through :meth:`build`, which validates.
    """

    adjacency: tuple[tuple[int, ...], ...]
    directed: bool = False
    labels: tuple[Label, ...] = ()

    @staticmethod
    def build(n: int, edges: Iterable[tuple[int, int]], directed: bool = False,
              labels: Sequence[Label] | None = None) -> "Graph":
        if n < 0:
            raise InstanceError(f"negative vertex count {n}")
        if labels is None:
            labels = tuple(range(n))
        else:
            labels = tuple(labels)
            if len(labels) != n:
                raise InstanceError(f"{len(labels)} labels for {n} vertices")
        nbrs: list[set[int]] = [set() for _ in range(n)]
        seen: set[tuple[int, int]] = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InstanceError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise InstanceError(f"self-loop at vertex {u}")
            key = (u, v) if directed else (min(u, v), max(u, v))
            if key in seen:
                raise InstanceError(f"parallel edge ({u},{v})")
            seen.add(key)
            nbrs[u].add(v)
            if not directed:
                nbrs[v].add(u)
        adjacency = tuple(tuple(sorted(s)) for s in nbrs)
        return Graph(adjacency=adjacency, directed=directed, labels=labels)

    # -- basic accessors ---------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.adjacency)

    @cached_property
    def m(self) -> int:
        total = sum(len(a) for a in self.adjacency)
        return total if self.directed else total // 2

    @cached_property
    def max_degree(self) -> int:
        return max((len(a) for a in self.adjacency), default=0)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges as sorted (u,v) pairs with u<v; arcs (u,v) when directed."""
        for u, nbrs in enumerate(self.adjacency):
            for v in nbrs:
                if self.directed or u < v:
                    yield (u, v)

    def vertices(self) -> range:
        return range(self.n)

    # -- bitmask views (used heavily by the exact solvers) ------------------

    @cached_property
    def adj_masks(self) -> tuple[int, ...]:
        """Neighbor bitmasks (out-neighbors when directed)."""
        return tuple(sum(1 << v for v in nbrs) for nbrs in self.adjacency)

    @cached_property
    def in_masks(self) -> tuple[int, ...]:
        """In-neighbor bitmasks; equals adj_masks for undirected graphs."""
        if not self.directed:
            return self.adj_masks
        masks = [0] * self.n
        for u, nbrs in enumerate(self.adjacency):
            for v in nbrs:
                masks[v] |= 1 << u
        return tuple(masks)

    # -- derived graphs ------------------------------------------------

    def induced_subgraph(self, vertices: Iterable[int]) -> "Graph":
        """Subgraph induced by ``vertices``; labels preserved, ids compacted."""
        keep = sorted(set(vertices))
        for v in keep:
            if not (0 <= v < self.n):
                raise InstanceError(f"unknown vertex id {v}")
        index = {v: i for i, v in enumerate(keep)}
        edges = []
        for u in keep:
            for v in self.adjacency[u]:
                if v in index and (self.directed or u < v):
                    edges.append((index[u], index[v]))
        return Graph.build(len(keep), edges, directed=self.directed,
                           labels=[self.labels[v] for v in keep])

    def without_vertices(self, vertices: Iterable[int]) -> "Graph":
        drop = set(vertices)
        return self.induced_subgraph(v for v in range(self.n) if v not in drop)


@dataclass(frozen=True)
class SetSystem:
    """A family of subsets over the ground set {0, .., ground-1}."""

    ground: int
    sets: tuple[frozenset[int], ...]

    def __post_init__(self):
        if self.ground < 0:
            raise InstanceError(f"negative ground size {self.ground}")
        for i, s in enumerate(self.sets):
            for e in s:
                if not (0 <= e < self.ground):
                    raise InstanceError(f"set {i} has element {e} outside ground {self.ground}")

    @staticmethod
    def build(ground: int, sets: Iterable[Iterable[int]]) -> "SetSystem":
        return SetSystem(ground=ground, sets=tuple(frozenset(s) for s in sets))

    @cached_property
    def frequency(self) -> int:
        """Maximum, over ground elements, of the number of sets containing it."""
        counts = [0] * self.ground
        for s in self.sets:
            for e in s:
                counts[e] += 1
        return max(counts, default=0)

    @cached_property
    def set_masks(self) -> tuple[int, ...]:
        return tuple(sum(1 << e for e in s) for s in self.sets)


@dataclass(frozen=True)
class CnfInstance:
    """Clause list in DIMACS literal convention: +-(var index + 1), 1-based.

    ``target`` optionally records a decision threshold (satisfy at least
    ``target`` clauses); the optimization solvers ignore it.
    """

    num_vars: int
    clauses: tuple[tuple[int, ...], ...]
    target: int | None = None

    def __post_init__(self):
        for i, clause in enumerate(self.clauses):
            seen = set()
            for lit in clause:
                if lit == 0 or abs(lit) > self.num_vars:
                    raise InstanceError(f"clause {i}: literal {lit} out of range")
                if abs(lit) in seen:
                    raise InstanceError(f"clause {i}: variable {abs(lit)} appears twice")
                seen.add(abs(lit))

    @staticmethod
    def build(num_vars: int, clauses: Iterable[Iterable[int]],
              target: int | None = None) -> "CnfInstance":
        return CnfInstance(num_vars, tuple(tuple(c) for c in clauses), target)

    @property
    def num_clauses(self) -> int:
        return len(self.clauses)

    @cached_property
    def max_clause_width(self) -> int:
        return max((len(c) for c in self.clauses), default=0)

    def satisfied_count(self, assignment: Sequence[bool]) -> int:
        if len(assignment) != self.num_vars:
            raise InstanceError(f"assignment length {len(assignment)} != {self.num_vars}")
        count = 0
        for clause in self.clauses:
            if any(assignment[abs(l) - 1] == (l > 0) for l in clause):
                count += 1
        return count


Instance = Graph | SetSystem | CnfInstance


@dataclass(frozen=True)
class Candidate:
    """Uniform solution carrier: problem tag, payload, objective value.

    Payload type depends on the tag: frozenset of vertex ids / set indices /
    ground elements, frozenset of (u,v) arcs for FAS, or a bool tuple for the
    SAT variants.  ``value`` must be recomputable from the payload.
    """

    problem: str
    payload: frozenset | tuple
    value: int

    @staticmethod
    def of_vertices(problem: str, vertices: Iterable[int]) -> "Candidate":
        payload = frozenset(vertices)
        return Candidate(problem, payload, len(payload))

    @staticmethod
    def of_assignment(problem: str, assignment: Sequence[bool], value: int) -> "Candidate":
        return Candidate(problem, tuple(bool(b) for b in assignment), value)

    @staticmethod
    def of_arcs(arcs: Iterable[tuple[int, int]]) -> "Candidate":
        payload = frozenset((u, v) for u, v in arcs)
        return Candidate(FAS, payload, len(payload))
