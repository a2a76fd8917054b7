"""Homotopy-preserving rewrites of graphs (for their independence complexes) and a
deterministic reduction engine that records what it did.

Every rule here either keeps the homotopy type of I(G) or replaces it by an
explicit wedge/join/suspension expression of smaller graphs.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from enum import Enum
from typing import Sequence, Union

from .graphs import (
    Graph,
    VertexLabel,
    connected_components,
    delete_closed_neighborhood,
    delete_vertices,
    is_complete,
    is_cycle,
    is_path,
)
from .theory import EMPTY, HomotopyType, join, kozlov, suspend, wedge


class Rule(str, Enum):
    FOLD = "FOLD"
    STRING_DELETE = "STRING_DELETE"
    LINK_CONTRACTIBLE_DELETE = "LINK_CONTRACTIBLE_DELETE"
    COMPONENT_SPLIT = "COMPONENT_SPLIT"
    SIMPLICIAL_SPLIT = "SIMPLICIAL_SPLIT"
    KOZLOV_LEAF = "KOZLOV_LEAF"


DEFAULT_STRATEGY: tuple[Rule, ...] = (
    Rule.COMPONENT_SPLIT,
    Rule.KOZLOV_LEAF,
    Rule.FOLD,
    Rule.STRING_DELETE,
    Rule.LINK_CONTRACTIBLE_DELETE,
    Rule.SIMPLICIAL_SPLIT,
)


class NotApplicable(Exception):
    """A rule's precondition does not hold for the given graph and vertices."""


class UnresolvedLeaf(ValueError):
    """A residual graph could not be closed with the path/cycle table."""


@dataclass(frozen=True)
class ReductionStep:
    rule: Rule
    vertices: tuple[VertexLabel, ...]
    before_hash: str
    after_hash: str

    def to_json(self) -> dict:
        return {
            "rule": self.rule.value,
            "vertices": [str(v) for v in self.vertices],
            "before_hash": self.before_hash,
            "after_hash": self.after_hash,
        }


# --- expression trees ------------------------------------------------------------


@dataclass(frozen=True)
class Leaf:
    graph: Graph


@dataclass(frozen=True)
class Closed:
    value: HomotopyType


@dataclass(frozen=True)
class Wedge:
    parts: tuple["HomotopyExpr", ...]

    def __post_init__(self):
        if len(self.parts) < 2:
            raise ValueError("WEDGE needs at least two operands")


@dataclass(frozen=True)
class Join:
    parts: tuple["HomotopyExpr", ...]

    def __post_init__(self):
        if len(self.parts) < 2:
            raise ValueError("JOIN needs at least two operands")


@dataclass(frozen=True)
class Suspend:
    k: int
    part: "HomotopyExpr"

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("SUSPEND degree must be >= 1")


HomotopyExpr = Union[Leaf, Closed, Wedge, Join, Suspend]


def expr_to_json(e: HomotopyExpr) -> dict:
    if isinstance(e, Leaf):
        return {"leaf": e.graph.to_json(), "digest": e.graph.digest()}
    if isinstance(e, Closed):
        return {"closed": str(e.value)}
    if isinstance(e, Wedge):
        return {"wedge": [expr_to_json(p) for p in e.parts]}
    if isinstance(e, Join):
        return {"join": [expr_to_json(p) for p in e.parts]}
    return {"suspend": e.k, "of": expr_to_json(e.part)}


def kozlov_type(g: Graph) -> HomotopyType | None:
    """Table value for a connected path or cycle; ``None`` for anything else."""
    if is_path(g):
        return kozlov("path", g.num_vertices)
    if is_cycle(g):
        return kozlov("cycle", g.num_vertices)
    return None


def evaluate(e: HomotopyExpr) -> HomotopyType:
    """Close an expression; residual leaves must be disjoint unions of paths and cycles."""
    if isinstance(e, Closed):
        return e.value
    if isinstance(e, Leaf):
        parts = []
        for comp in connected_components(e.graph):
            h = kozlov_type(comp)
            if h is None:
                raise UnresolvedLeaf(f"residual component {comp!r} is not a path or cycle")
            parts.append(h)
        return join(*parts)
    if isinstance(e, Wedge):
        return wedge(evaluate(p) for p in e.parts)
    if isinstance(e, Join):
        return join(*(evaluate(p) for p in e.parts))
    return suspend(evaluate(e.part), e.k)


# --- individual rules ------------------------------------------------------------


def try_fold(g: Graph, v, w) -> Graph:
    """Delete ``v`` when N(w) is contained in N(v) (non-strict containment)."""
    iv, iw = g.index(v), g.index(w)
    if iv == iw:
        raise ValueError("fold needs two distinct vertices")
    if not g.adj[iw] <= g.adj[iv]:
        raise NotApplicable(f"N({g.vertices[iw]}) is not contained in N({g.vertices[iv]})")
    return delete_vertices(g, [iv])


def _pendant_path(g: Graph, v: int, w: int) -> list[int] | None:
    """Walk from ``v`` through ``w`` along degree-2 vertices to a leaf."""
    path = [v, w]
    prev, cur = v, w
    while True:
        deg = len(g.adj[cur])
        if deg == 1:
            return path
        if deg != 2:
            return None
        (nxt,) = g.adj[cur] - {prev}
        if nxt == v:
            return None
        path.append(nxt)
        prev, cur = cur, nxt


def find_string(g: Graph, v) -> tuple[tuple[VertexLabel, ...], int] | None:
    """A pendant path of 3k+2 >= 2 vertices based at ``v``, listed from ``v``.

    Returns ``(vertices, k)`` for the first admissible neighbour in vertex order.
    """
    iv = g.index(v)
    for w in sorted(g.adj[iv]):
        path = _pendant_path(g, iv, w)
        if path is not None and len(path) % 3 == 2:
            return tuple(g.vertices[x] for x in path), (len(path) - 2) // 3
    return None


def string_delete(g: Graph, v) -> Graph:
    """Delete N(v) minus the string neighbour of ``v``."""
    iv = g.index(v)
    found = find_string(g, iv)
    if found is None:
        raise NotApplicable(f"no (3k+2)-string based at {g.vertices[iv]}")
    w = g.index(found[0][1])
    return delete_vertices(g, g.adj[iv] - {w})


def certify_contractible(g: Graph) -> bool:
    """Sound but incomplete: ``True`` only with a proof that I(g) is contractible.

    Proofs: a component that is an isolated vertex or a path on 3k+1 vertices,
    or a component that becomes one after a fold.
    """
    for comp in connected_components(g):
        n = comp.num_vertices
        if n == 1 or (n % 3 == 1 and is_path(comp)):
            return True
        if is_path(comp) or is_cycle(comp):
            continue
        folded = _first_fold(comp)
        if folded is not None and certify_contractible(folded[1]):
            return True
    return False


def link_contractible_delete(g: Graph, v) -> Graph:
    """Delete ``v`` when I(g \\ N[v]) is certified contractible."""
    iv = g.index(v)
    if not certify_contractible(delete_closed_neighborhood(g, iv)):
        raise NotApplicable(f"link of {g.vertices[iv]} not certified contractible")
    return delete_vertices(g, [iv])


def is_simplicial(g: Graph, v) -> bool:
    iv = g.index(v)
    return bool(g.adj[iv]) and is_complete(g, sorted(g.adj[iv]))


def simplicial_split(g: Graph, v) -> HomotopyExpr:
    """I(g) = wedge over w in N(v) of the suspension of I(g \\ N[w])."""
    iv = g.index(v)
    if not is_simplicial(g, iv):
        raise NotApplicable(f"{g.vertices[iv]} is not simplicial")
    parts = tuple(Suspend(1, Leaf(delete_closed_neighborhood(g, w))) for w in sorted(g.adj[iv]))
    return parts[0] if len(parts) == 1 else Wedge(parts)


def _first_fold(g: Graph) -> tuple[tuple[int, int], Graph] | None:
    for v in range(g.num_vertices):
        for w in range(g.num_vertices):
            if w != v and g.adj[w] <= g.adj[v]:
                return (v, w), delete_vertices(g, [v])
    return None


# --- engine ----------------------------------------------------------------------------


def _step(rule: Rule, verts: Sequence[VertexLabel], before: Graph, after: "Graph | str") -> ReductionStep:
    """``after`` is the rewritten graph, or a string describing split operands."""
    if isinstance(after, Graph):
        after_hash = after.digest()
    else:
        after_hash = hashlib.sha256(after.encode()).hexdigest()
    return ReductionStep(rule, tuple(verts), before.digest(), after_hash)


def reduce(g: Graph, strategy: Sequence[Rule] = DEFAULT_STRATEGY) -> tuple[HomotopyExpr, list[ReductionStep]]:
    """Apply rules in priority order until none fires; return the expression and trace.

    The trace lists steps in depth-first order; split rules recurse into their
    operands immediately after being recorded.
    """
    trace: list[ReductionStep] = []
    return _reduce(g, tuple(Rule(r) for r in strategy), trace), trace


def _reduce(g: Graph, strategy: tuple[Rule, ...], trace: list[ReductionStep]) -> HomotopyExpr:
    while True:
        if g.num_vertices == 0:
            return Closed(EMPTY)
        for rule in strategy:
            out = _apply(rule, g, strategy, trace)
            if out is None:
                continue
            if isinstance(out, Graph):
                g = out
                break
            return out
        else:
            return Leaf(g)


def _apply(rule: Rule, g: Graph, strategy, trace) -> "Graph | HomotopyExpr | None":
    n = g.num_vertices
    if rule is Rule.COMPONENT_SPLIT:
        comps = connected_components(g)
        if len(comps) < 2:
            return None
        trace.append(_step(rule, [c.vertices[0] for c in comps], g, ",".join(c.digest() for c in comps)))
        return Join(tuple(_reduce(c, strategy, trace) for c in comps))
    if rule is Rule.KOZLOV_LEAF:
        if len(connected_components(g)) != 1:
            return None
        h = kozlov_type(g)
        if h is None:
            return None
        trace.append(_step(rule, g.vertices, g, str(h)))
        return Closed(h)
    if rule is Rule.FOLD:
        found = _first_fold(g)
        if found is None:
            return None
        (v, w), out = found
        trace.append(_step(rule, [g.vertices[v], g.vertices[w]], g, out))
        return out
    if rule is Rule.STRING_DELETE:
        for v in range(n):
            found = find_string(g, v)
            if found is None:
                continue
            w = g.index(found[0][1])
            if len(g.adj[v]) < 2:
                continue
            out = delete_vertices(g, g.adj[v] - {w})
            removed = [g.vertices[u] for u in sorted(g.adj[v] - {w})]
            trace.append(_step(rule, [g.vertices[v], *removed], g, out))
            return out
        return None
    if rule is Rule.LINK_CONTRACTIBLE_DELETE:
        for v in range(n):
            if certify_contractible(delete_closed_neighborhood(g, v)):
                out = delete_vertices(g, [v])
                trace.append(_step(rule, [g.vertices[v]], g, out))
                return out
        return None
    if rule is Rule.SIMPLICIAL_SPLIT:
        for v in range(n):
            if is_simplicial(g, v):
                expr = simplicial_split(g, v)
                operands = ",".join(delete_closed_neighborhood(g, w).digest() for w in sorted(g.adj[v]))
                trace.append(_step(rule, [g.vertices[v]], g, operands))
                return _reduce_children(expr, strategy, trace)
        return None
    raise ValueError(f"unknown rule {rule}")


def _reduce_children(e: HomotopyExpr, strategy, trace) -> HomotopyExpr:
    if isinstance(e, Leaf):
        return _reduce(e.graph, strategy, trace)
    if isinstance(e, Suspend):
        return Suspend(e.k, _reduce_children(e.part, strategy, trace))
    if isinstance(e, Wedge):
        return Wedge(tuple(_reduce_children(p, strategy, trace) for p in e.parts))
    return e


def trace_to_json(trace: Sequence[ReductionStep]) -> list[dict]:
    return [s.to_json() for s in trace]
