"""Graphs: paths, cycles, polygonal line tilings and their line graphs G_{n,t}, H_{n,t}.

Vertices are stored in construction order and carry structured labels so that
deletions and induced subgraphs stay readable (``a_3``, ``b_{2,1}``, ...).
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence


class Kind(str, Enum):
    A = "a"
    B = "b"
    C = "c"
    OPAQUE = "v"


@dataclass(frozen=True, order=True)
class VertexLabel:
    kind: Kind
    i: int = 0
    j: int = 0
    opaque_id: int = 0

    @classmethod
    def a(cls, i: int) -> "VertexLabel":
        return cls(Kind.A, i)

    @classmethod
    def b(cls, i: int, j: int) -> "VertexLabel":
        return cls(Kind.B, i, j)

    @classmethod
    def c(cls, i: int, j: int) -> "VertexLabel":
        return cls(Kind.C, i, j)

    @classmethod
    def opaque(cls, k: int) -> "VertexLabel":
        return cls(Kind.OPAQUE, opaque_id=k)

    def __str__(self) -> str:
        if self.kind is Kind.OPAQUE:
            return f"v{self.opaque_id}"
        if self.kind is Kind.A:
            return f"a_{self.i}"
        return f"{self.kind.value}_{{{self.i},{self.j}}}"

    def to_json(self) -> dict:
        if self.kind is Kind.OPAQUE:
            return {"kind": "opaque", "id": self.opaque_id}
        if self.kind is Kind.A:
            return {"kind": "a", "i": self.i}
        return {"kind": self.kind.value, "i": self.i, "j": self.j}

    @classmethod
    def from_json(cls, obj: dict) -> "VertexLabel":
        kind = obj["kind"]
        if kind == "opaque":
            return cls.opaque(int(obj["id"]))
        if kind == "a":
            return cls.a(int(obj["i"]))
        if kind in ("b", "c"):
            return cls(Kind(kind), int(obj["i"]), int(obj["j"]))
        raise ValueError(f"unknown vertex kind {kind!r}")



@dataclass(frozen=True)
class Graph:
    """Finite simple graph; ``adj[i]`` is the neighbour set of vertex index ``i``."""

    vertices: tuple[VertexLabel, ...]
    adj: tuple[frozenset[int], ...]

    def __post_init__(self):
        if len(self.vertices) != len(self.adj):
            raise ValueError("vertex and adjacency lengths differ")
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("duplicate vertex labels")
        for u, nbrs in enumerate(self.adj):
            for v in nbrs:
                if v == u:
                    raise ValueError(f"loop at {self.vertices[u]}")
                if not 0 <= v < len(self.vertices) or u not in self.adj[v]:
                    raise ValueError("adjacency is not symmetric")

    @classmethod
    def from_edges(cls, vertices: Sequence[VertexLabel], edges: Iterable[tuple[int, int]]) -> "Graph":
        nbrs: list[set[int]] = [set() for _ in vertices]
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at {vertices[u]}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(tuple(vertices), tuple(frozenset(s) for s in nbrs))

    @classmethod
    def from_labelled_edges(
        cls, vertices: Sequence[VertexLabel], edges: Iterable[tuple[VertexLabel, VertexLabel]]
    ) -> "Graph":
        pos = {lab: k for k, lab in enumerate(vertices)}
        return cls.from_edges(vertices, ((pos[x], pos[y]) for x, y in edges))

    def __len__(self) -> int:
        return len(self.vertices)

    @property
    def num_vertices(self) -> int:
        return len(self.vertices)

    @property
    def num_edges(self) -> int:
        return sum(len(s) for s in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        """Edges as index pairs ``(u, v)`` with ``u < v``, sorted."""
        return sorted((u, v) for u, nbrs in enumerate(self.adj) for v in nbrs if u < v)

    def labelled_edges(self) -> set[frozenset[VertexLabel]]:
        return {frozenset((self.vertices[u], self.vertices[v])) for u, v in self.edges()}

    def index(self, v: "int | VertexLabel") -> int:
        if isinstance(v, VertexLabel):
            try:
                return self._positions()[v]
            except KeyError:
                raise ValueError(f"{v} is not a vertex of this graph") from None
        if isinstance(v, int) and 0 <= v < len(self.vertices):
            return v
        raise ValueError(f"vertex index {v!r} out of range")

    def _positions(self) -> dict[VertexLabel, int]:
        cache = self.__dict__.get("_pos")
        if cache is None:
            cache = {lab: k for k, lab in enumerate(self.vertices)}
            object.__setattr__(self, "_pos", cache)
        return cache

    def neighbors(self, v: "int | VertexLabel") -> frozenset[int]:
        return self.adj[self.index(v)]

    def degree(self, v: "int | VertexLabel") -> int:
        return len(self.neighbors(v))

    def has_edge(self, u: "int | VertexLabel", v: "int | VertexLabel") -> bool:
        return self.index(v) in self.adj[self.index(u)]

    def to_json(self) -> dict:
        return {
            "vertices": [lab.to_json() for lab in self.vertices],
            "edges": [list(e) for e in self.edges()],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "Graph":
        vertices = [VertexLabel.from_json(x) for x in obj["vertices"]]
        edges = []
        for e in obj["edges"]:
            u, v = (int(x) for x in e)
            if not (0 <= u < len(vertices) and 0 <= v < len(vertices)):
                raise ValueError(f"edge {e} refers to a missing vertex")
            edges.append((u, v))
        return cls.from_edges(vertices, edges)

    def digest(self) -> str:
        """Stable hex digest of the labelled vertex list and sorted edge list."""
        payload = json.dumps(self.to_json(), sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(payload.encode()).hexdigest()

    def __repr__(self) -> str:
        return f"Graph(|V|={self.num_vertices}, |E|={self.num_edges})"


EMPTY_GRAPH = Graph((), ())


def path_graph(k: int) -> Graph:
    """P_k on vertices v1..vk; ``k == 0`` gives the empty graph."""
    if k < 0:
        raise ValueError("path length must be non-negative")
    labels = [VertexLabel.opaque(i) for i in range(1, k + 1)]
    return Graph.from_edges(labels, ((i, i + 1) for i in range(k - 1)))


def cycle_graph(k: int) -> Graph:
    if k < 3:
        raise ValueError(f"a simple cycle needs at least 3 vertices, got {k}")
    labels = [VertexLabel.opaque(i) for i in range(1, k + 1)]
    return Graph.from_edges(labels, ((i, (i + 1) % k) for i in range(k)))


def disjoint_union(*graphs: Graph) -> Graph:
    """Disjoint union; labels are renumbered as opaque when they would collide."""
    labels: list[VertexLabel] = []
    edges: list[tuple[int, int]] = []
    seen: set[VertexLabel] = set()
    clash = False
    for g in graphs:
        if seen & set(g.vertices):
            clash = True
        seen |= set(g.vertices)
    for g in graphs:
        off = len(labels)
        labels.extend(g.vertices)
        edges.extend((u + off, v + off) for u, v in g.edges())
    if clash:
        labels = [VertexLabel.opaque(i) for i in range(1, len(labels) + 1)]
    return Graph.from_edges(labels, edges)


# --- polygonal line tilings -------------------------------------------------


def _check_n(n: int) -> None:
    if n < 2:
        raise ValueError(f"polygon parameter n must be >= 2, got {n}")


def _check_t(t: int) -> None:
    if t < 0:
        raise ValueError(f"t must be non-negative, got {t}")


def _tiling_layout(n: int, t: int) -> tuple[int, list[tuple[int, int]], list[VertexLabel]]:
    """Vertex count, edge list and the G-label of every edge of P_{n,t}.

    Vertical edge ``a_i`` joins top vertex ``u_i`` and bottom vertex ``l_i``.
    Gon ``i`` has a top strand ``u_{i-1} -> u_i`` made of edges ``b_{i,1..n-1}``
    and a bottom strand ``l_{i-1} -> l_i`` made of edges ``c_{i,1..n-1}``.
    """
    _check_n(n)
    _check_t(t)
    count = 0

    def fresh() -> int:
        nonlocal count
        count += 1
        return count - 1

    edges: list[tuple[int, int]] = []
    names: list[VertexLabel] = []
    top, bot = fresh(), fresh()
    edges.append((top, bot))
    names.append(VertexLabel.a(0))
    for i in range(1, t + 1):
        top_path = [top] + [fresh() for _ in range(n - 2)]
        bot_path = [bot] + [fresh() for _ in range(n - 2)]
        new_top, new_bot = fresh(), fresh()
        top_path.append(new_top)
        bot_path.append(new_bot)
        for j in range(1, n):
            edges.append((top_path[j - 1], top_path[j]))
            names.append(VertexLabel.b(i, j))
        for j in range(1, n):
            edges.append((bot_path[j - 1], bot_path[j]))
            names.append(VertexLabel.c(i, j))
        edges.append((new_top, new_bot))
        names.append(VertexLabel.a(i))
        top, bot = new_top, new_bot
    return count, edges, names


def polygon_line_tiling(n: int, t: int) -> Graph:
    """P_{n,t}: ``t`` copies of the (2n)-gon glued in a row along vertical edges."""
    count, edges, _ = _tiling_layout(n, t)
    labels = [VertexLabel.opaque(k) for k in range(count)]
    return Graph.from_edges(labels, edges)


def tiling_edge_names(n: int, t: int) -> dict[tuple[int, int], VertexLabel]:
    """Map each edge ``(u, v)``, ``u < v``, of ``polygon_line_tiling(n, t)`` to its G_{n,t} label."""
    _, edges, names = _tiling_layout(n, t)
    return {(min(e), max(e)): lab for e, lab in zip(edges, names)}


def line_graph(g: Graph) -> Graph:
    """L(g): one vertex per edge of ``g`` (opaque id = position in ``g.edges()``)."""
    edges = g.edges()
    incident: list[list[int]] = [[] for _ in range(g.num_vertices)]
    for k, (u, v) in enumerate(edges):
        incident[u].append(k)
        incident[v].append(k)
    new_edges = set()
    for bucket in incident:
        for x in range(len(bucket)):
            for y in range(x + 1, len(bucket)):
                new_edges.add((bucket[x], bucket[y]))
    labels = [VertexLabel.opaque(k) for k in range(len(edges))]
    return Graph.from_edges(labels, sorted(new_edges))


def _g_labels(n: int, t: int) -> list[VertexLabel]:
    labels = [VertexLabel.a(i) for i in range(t + 1)]
    labels += [VertexLabel.b(i, j) for i in range(1, t + 1) for j in range(1, n)]
    labels += [VertexLabel.c(i, j) for i in range(1, t + 1) for j in range(1, n)]
    return labels


def G_graph(n: int, t: int) -> Graph:
    """G_{n,t}, the line graph of P_{n,t}, with a/b/c labels.

    ``a_{i-1}`` touches the first edge of both strands of gon ``i`` and ``a_i``
    touches the last; consecutive strands meet at the top/bottom of ``a_i``.
    """
    _check_n(n)
    _check_t(t)
    a, b, c = VertexLabel.a, VertexLabel.b, VertexLabel.c
    edges = []
    for i in range(1, t + 1):
        edges += [(a(i - 1), b(i, 1)), (a(i - 1), c(i, 1)), (a(i), b(i, n - 1)), (a(i), c(i, n - 1))]
        edges += [(b(i, j), b(i, j + 1)) for j in range(1, n - 1)]
        edges += [(c(i, j), c(i, j + 1)) for j in range(1, n - 1)]
        if i < t:
            edges += [(b(i, n - 1), b(i + 1, 1)), (c(i, n - 1), c(i + 1, 1))]
    return Graph.from_labelled_edges(_g_labels(n, t), edges)


def H_graph(n: int, t: int) -> Graph:
    """H_{n,t}: G_{n,t+1} induced on V(G_{n,t}) plus ``b_{t+1,1}`` and ``c_{t+1,1}``."""
    _check_n(n)
    _check_t(t)
    keep = set(_g_labels(n, t)) | {VertexLabel.b(t + 1, 1), VertexLabel.c(t + 1, 1)}
    return induced_subgraph(G_graph(n, t + 1), keep)


# --- subgraphs ----------------------------------------------------------------


def induced_subgraph(g: Graph, s: Iterable["int | VertexLabel"]) -> Graph:
    """G[S], keeping the vertex order of ``g``."""
    keep = sorted({g.index(v) for v in s})
    new_pos = {old: new for new, old in enumerate(keep)}
    adj = tuple(frozenset(new_pos[w] for w in g.adj[old] if w in new_pos) for old in keep)
    return Graph(tuple(g.vertices[k] for k in keep), adj)


def delete_vertices(g: Graph, s: Iterable["int | VertexLabel"]) -> Graph:
    drop = {g.index(v) for v in s}
    return induced_subgraph(g, (k for k in range(g.num_vertices) if k not in drop))


def delete_closed_neighborhood(g: Graph, v: "int | VertexLabel") -> Graph:
    """G \\ N[v]."""
    k = g.index(v)
    return delete_vertices(g, g.adj[k] | {k})


def connected_components(g: Graph) -> list[Graph]:
    """Components as induced subgraphs, ordered by smallest vertex index."""
    seen = [False] * g.num_vertices
    parts = []
    for start in range(g.num_vertices):
        if seen[start]:
            continue
        seen[start] = True
        stack, comp = [start], []
        while stack:
            u = stack.pop()
            comp.append(u)
            for w in g.adj[u]:
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        parts.append(induced_subgraph(g, comp))
    return parts


def relabel(g: Graph, names: dict[VertexLabel, VertexLabel]) -> Graph:
    return Graph(tuple(names[lab] for lab in g.vertices), g.adj)


def is_path(g: Graph) -> bool:
    """True for P_k, k >= 1 (connected, acyclic, max degree 2)."""
    n = g.num_vertices
    if n == 0 or g.num_edges != n - 1:
        return False
    return all(len(s) <= 2 for s in g.adj) and len(connected_components(g)) == 1


def is_cycle(g: Graph) -> bool:
    n = g.num_vertices
    return n >= 3 and all(len(s) == 2 for s in g.adj) and len(connected_components(g)) == 1


def is_complete(g: Graph, s: Iterable[int]) -> bool:
    s = list(s)
    return all(s[y] in g.adj[s[x]] for x in range(len(s)) for y in range(x + 1, len(s)))
