"""Instance file formats.

Supported formats:

* ``dimacs-edge``    -- ``p edge N M`` header, ``e u v`` lines, 1-based ids,
  undirected graphs only.
* ``dimacs-wcnf``    -- ``p cnf NV NC`` or ``p wcnf NV NC [TOP]``; clause
  lines end in 0; the leading weight token of wcnf lines is ignored
  (the library handles unweighted problems only).  Written back as ``p cnf``.
* ``setsystem-text`` -- ``p set GROUND NSETS`` header, then one line of
  1-based element ids per set (a blank line is an empty set).
* ``json``           -- a tagged envelope for any instance type; the only
  format that can carry directed graphs.

Reading back a written file reproduces the instance up to vertex relabeling
(dimacs formats drop labels; json keeps them).
"""

from __future__ import annotations

import json
from pathlib import Path

from .errors import ParseError, SparselabError
from .instances import Candidate, CnfInstance, FAS, Graph, Instance, SetSystem

FORMATS = ("dimacs-edge", "dimacs-wcnf", "setsystem-text", "json")


def read_instance(path: str | Path, fmt: str) -> Instance:
    text = Path(path).read_text()
    return parse_instance(text, fmt)


def write_instance(instance: Instance, path: str | Path, fmt: str) -> None:
    Path(path).write_text(render_instance(instance, fmt))


def parse_instance(text: str, fmt: str) -> Instance:
    if fmt == "dimacs-edge":
        return parse_dimacs_edge(text)
    if fmt == "dimacs-wcnf":
        return parse_dimacs_cnf(text)
    if fmt == "setsystem-text":
        return parse_setsystem(text)
    if fmt == "json":
        return instance_from_json(json.loads(text))
    raise SparselabError(f"unknown format {fmt!r}; expected one of {FORMATS}")


def render_instance(instance: Instance, fmt: str) -> str:
    if fmt == "dimacs-edge":
        if not isinstance(instance, Graph) or instance.directed:
            raise SparselabError("dimacs-edge carries undirected graphs only")
        lines = [f"p edge {instance.n} {instance.m}"]
        lines += [f"e {u + 1} {v + 1}" for u, v in instance.edges()]
        return "\n".join(lines) + "\n"
    if fmt == "dimacs-wcnf":
        if not isinstance(instance, CnfInstance):
            raise SparselabError("dimacs-wcnf carries CNF instances only")
        lines = [f"p cnf {instance.num_vars} {instance.num_clauses}"]
        lines += [" ".join(str(l) for l in clause) + " 0" for clause in instance.clauses]
        return "\n".join(lines) + "\n"
    if fmt == "setsystem-text":
        if not isinstance(instance, SetSystem):
            raise SparselabError("setsystem-text carries set systems only")
        lines = [f"p set {instance.ground} {len(instance.sets)}"]
        lines += [" ".join(str(e + 1) for e in sorted(s)) for s in instance.sets]
        return "\n".join(lines) + "\n"
    if fmt == "json":
        return json.dumps(instance_to_json(instance), sort_keys=True)
    raise SparselabError(f"unknown format {fmt!r}; expected one of {FORMATS}")


# -- dimacs edge --------------------------------------------------------------

def parse_dimacs_edge(text: str) -> Graph:
    n = m = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if n is not None:
                raise ParseError("duplicate header", lineno)
            if len(parts) != 4 or parts[1] != "edge":
                raise ParseError(f"malformed header {line!r}, expected 'p edge N M'", lineno)
            n, m = _ints(parts[2:4], lineno)
        elif parts[0] == "e":
            if n is None:
                raise ParseError("edge before 'p edge' header", lineno)
            if len(parts) != 3:
                raise ParseError(f"malformed edge line {line!r}", lineno)
            u, v = _ints(parts[1:3], lineno)
            if not (1 <= u <= n and 1 <= v <= n):
                raise ParseError(f"edge ({u},{v}) out of range 1..{n}", lineno)
            if u == v:
                raise ParseError(f"self-loop at vertex {u}", lineno)
            edges.append((u - 1, v - 1))
        else:
            raise ParseError(f"unrecognized line {line!r}", lineno)
    if n is None:
        raise ParseError("missing 'p edge' header")
    if len(edges) != m:
        raise ParseError(f"header declares {m} edges, found {len(edges)}")
    try:
        return Graph.build(n, edges)
    except SparselabError as exc:
        raise ParseError(str(exc)) from exc


# -- dimacs cnf / wcnf ---------------------------------------------------------

def parse_dimacs_cnf(text: str) -> CnfInstance:
    num_vars = num_clauses = None
    weighted = False
    clauses: list[tuple[int, ...]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if num_vars is not None:
                raise ParseError("duplicate header", lineno)
            if len(parts) == 4 and parts[1] == "cnf":
                num_vars, num_clauses = _ints(parts[2:4], lineno)
            elif len(parts) in (4, 5) and parts[1] == "wcnf":
                num_vars, num_clauses = _ints(parts[2:4], lineno)
                weighted = True
            else:
                raise ParseError(f"malformed header {line!r}, expected "
                                 "'p cnf NV NC' or 'p wcnf NV NC [TOP]'", lineno)
        else:
            if num_vars is None:
                raise ParseError("clause before header", lineno)
            tokens = _ints(parts, lineno)
            if weighted:
                if len(tokens) < 2:
                    raise ParseError("wcnf clause line needs a weight and literals", lineno)
                tokens = tokens[1:]  # unweighted semantics: drop the weight
            if not tokens or tokens[-1] != 0:
                raise ParseError("clause line must end with 0", lineno)
            lits = tokens[:-1]
            if 0 in lits:
                raise ParseError("literal 0 inside clause", lineno)
            if any(abs(l) > num_vars for l in lits):
                raise ParseError(f"literal out of range 1..{num_vars}", lineno)
            clauses.append(tuple(lits))
    if num_vars is None:
        raise ParseError("missing cnf header")
    if len(clauses) != num_clauses:
        raise ParseError(f"header declares {num_clauses} clauses, found {len(clauses)}")
    try:
        return CnfInstance.build(num_vars, clauses)
    except SparselabError as exc:
        raise ParseError(str(exc)) from exc


# -- set system text -----------------------------------------------------------

def parse_setsystem(text: str) -> SetSystem:
    ground = expected = None
    sets: list[frozenset[int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line.startswith("c"):
            continue
        if ground is None:
            if not line:
                continue
            parts = line.split()
            if len(parts) != 4 or parts[0] != "p" or parts[1] != "set":
                raise ParseError(f"malformed header {line!r}, expected 'p set GROUND NSETS'",
                                 lineno)
            ground, expected = _ints(parts[2:4], lineno)
        else:
            if len(sets) == expected and not line:
                continue  # trailing blank lines
            elems = _ints(line.split(), lineno) if line else []
            if any(not (1 <= e <= ground) for e in elems):
                raise ParseError(f"element out of range 1..{ground}", lineno)
            sets.append(frozenset(e - 1 for e in elems))
    if ground is None:
        raise ParseError("missing 'p set' header")
    if len(sets) != expected:
        raise ParseError(f"header declares {expected} sets, found {len(sets)}")
    return SetSystem(ground, tuple(sets))


# -- json ----------------------------------------------------------------------

def instance_to_json(instance: Instance) -> dict:
    if isinstance(instance, Graph):
        return {"type": "graph", "directed": instance.directed, "n": instance.n,
                "labels": list(instance.labels), "edges": [list(e) for e in instance.edges()]}
    if isinstance(instance, SetSystem):
        return {"type": "setsystem", "ground": instance.ground,
                "sets": [sorted(s) for s in instance.sets]}
    if isinstance(instance, CnfInstance):
        return {"type": "cnf", "num_vars": instance.num_vars,
                "clauses": [list(c) for c in instance.clauses],
                "target": instance.target}
    raise SparselabError(f"cannot serialize {type(instance).__name__}")


def instance_from_json(data: dict) -> Instance:
    kind = data.get("type")
    if kind == "graph":
        return Graph.build(data["n"], [tuple(e) for e in data["edges"]],
                           directed=data.get("directed", False),
                           labels=data.get("labels"))
    if kind == "setsystem":
        return SetSystem.build(data["ground"], data["sets"])
    if kind == "cnf":
        return CnfInstance.build(data["num_vars"], data["clauses"], data.get("target"))
    raise ParseError(f"unknown json instance type {kind!r}")


def candidate_to_json(candidate: Candidate) -> dict:
    if candidate.problem == FAS:
        payload = sorted([list(a) for a in candidate.payload])
    elif isinstance(candidate.payload, frozenset):
        payload = sorted(candidate.payload)
    else:
        payload = [int(b) for b in candidate.payload]
    return {"problem": candidate.problem, "payload": payload, "value": candidate.value}


def candidate_from_json(data: dict) -> Candidate:
    problem = data["problem"]
    if problem == FAS:
        payload: frozenset | tuple = frozenset(tuple(a) for a in data["payload"])
    elif problem in ("MAX-2-SAT", "MAX-3-SAT"):
        payload = tuple(bool(b) for b in data["payload"])
    else:
        payload = frozenset(data["payload"])
    return Candidate(problem, payload, data["value"])


def leaf_to_json(leaf) -> dict:
    """External transcript schema for one sparsification leaf."""
    return {"committed": sorted(leaf.committed), "deleted": sorted(leaf.deleted),
            "leaf": instance_to_json(leaf.residual)}


def _ints(tokens, lineno) -> list[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError as exc:
        raise ParseError(f"expected integers, got {tokens!r}", lineno) from exc
