"""Independence and matching complexes, and their simplicial chain complexes."""

from __future__ import annotations

import os
from dataclasses import dataclass, field

from .graphs import Graph, line_graph

DEFAULT_BUDGET = 500_000
BUDGET_ENV = "MATCHTILE_BUDGET"


class BudgetExceeded(RuntimeError):
    """Raised when a complex would have more faces than the configured budget."""

    def __init__(self, budget: int):
        super().__init__(f"face count exceeds budget of {budget}")
        self.budget = budget


def default_budget() -> int:
    return int(os.environ.get(BUDGET_ENV, DEFAULT_BUDGET))


@dataclass(frozen=True)
class SimplicialComplex:
    """All non-empty faces, grouped by dimension, each dimension in lex order.

    The empty face is implicit. ``faces_by_dim == ()`` is the EMPTY complex
    (no vertices), whose reduced homology sits in dimension -1.
    """

    vertex_count: int
    faces_by_dim: tuple[tuple[tuple[int, ...], ...], ...]
    _index: dict = field(default_factory=dict, compare=False, repr=False)

    @property
    def dim(self) -> int:
        return len(self.faces_by_dim) - 1

    @property
    def is_empty(self) -> bool:
        return not self.faces_by_dim

    def num_faces(self) -> int:
        return sum(len(fs) for fs in self.faces_by_dim)

    def faces(self, d: int) -> tuple[tuple[int, ...], ...]:
        if 0 <= d < len(self.faces_by_dim):
            return self.faces_by_dim[d]
        return ()

    def face_index(self, d: int) -> dict[tuple[int, ...], int]:
        idx = self._index.get(d)
        if idx is None:
            idx = {f: k for k, f in enumerate(self.faces(d))}
            self._index[d] = idx
        return idx

    def all_faces(self) -> list[tuple[int, ...]]:
        return [f for fs in self.faces_by_dim for f in fs]

    def to_json(self) -> dict:
        return {"vertex_count": self.vertex_count, "faces": [list(f) for f in self.all_faces()]}

    @classmethod
    def from_faces(cls, vertex_count: int, faces) -> "SimplicialComplex":
        """Build from an explicit face list (need not be sorted; must be closed)."""
        by_dim: dict[int, set[tuple[int, ...]]] = {}
        for f in faces:
            f = tuple(sorted(f))
            if f:
                by_dim.setdefault(len(f) - 1, set()).add(f)
        top = max(by_dim, default=-1)
        return cls(vertex_count, tuple(tuple(sorted(by_dim.get(d, ()))) for d in range(top + 1)))


def independence_complex(g: Graph, budget: int | None = None) -> SimplicialComplex:
    """I(g): faces are the non-empty independent sets of ``g``.

    Depth-first extension in vertex order emits faces lexicographically, so
    splitting the stream by size keeps every dimension sorted.
    """
    if budget is None:
        budget = default_budget()
    n = g.num_vertices
    forbid = [(1 << (v + 1)) - 1 | sum(1 << w for w in g.adj[v]) for v in range(n)]
    by_dim: list[list[tuple[int, ...]]] = []
    count = 0
    # explicit stack of (face, candidate mask); candidates only above max(face)
    stack: list[tuple[tuple[int, ...], int]] = [((), (1 << n) - 1)]
    # visit children in increasing order: push in decreasing order
    while stack:
        face, cand = stack.pop()
        if face:
            d = len(face) - 1
            if d == len(by_dim):
                by_dim.append([])
            by_dim[d].append(face)
            count += 1
            if count > budget:
                raise BudgetExceeded(budget)
        children = []
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            children.append((face + (v,), cand & ~forbid[v]))
            cand ^= low
        stack.extend(reversed(children))
    return SimplicialComplex(n, tuple(tuple(fs) for fs in by_dim))


def matching_complex(g: Graph, budget: int | None = None) -> SimplicialComplex:
    """M(g) = I(L(g))."""
    return independence_complex(line_graph(g), budget)


def f_vector(k: SimplicialComplex) -> tuple[int, ...]:
    return tuple(len(fs) for fs in k.faces_by_dim)


def reduced_euler_characteristic(k: SimplicialComplex) -> int:
    """-1 + f_0 - f_1 + f_2 - ... (the empty face counts in dimension -1)."""
    return -1 + sum((-1) ** d * f for d, f in enumerate(f_vector(k)))


def join(k1: SimplicialComplex, k2: SimplicialComplex) -> SimplicialComplex:
    """Simplicial join; vertices of ``k2`` are shifted past those of ``k1``."""
    off = k1.vertex_count
    left = [()] + k1.all_faces()
    right = [()] + [tuple(v + off for v in f) for f in k2.all_faces()]
    return SimplicialComplex.from_faces(off + k2.vertex_count, (a + b for a in left for b in right))


@dataclass(frozen=True)
class SparseIntMatrix:
    """Column-major sparse integer matrix: ``cols[j]`` maps row -> nonzero value."""

    nrows: int
    ncols: int
    cols: tuple[dict[int, int], ...]

    @classmethod
    def from_dense(cls, rows) -> "SparseIntMatrix":
        rows = [list(r) for r in rows]
        nrows = len(rows)
        ncols = len(rows[0]) if rows else 0
        cols = tuple({i: int(rows[i][j]) for i in range(nrows) if rows[i][j]} for j in range(ncols))
        return cls(nrows, ncols, cols)

    def to_dense(self) -> list[list[int]]:
        out = [[0] * self.ncols for _ in range(self.nrows)]
        for j, col in enumerate(self.cols):
            for i, v in col.items():
                out[i][j] = v
        return out

    def nnz(self) -> int:
        return sum(len(c) for c in self.cols)

    def matmul(self, other: "SparseIntMatrix") -> "SparseIntMatrix":
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch")
        out = []
        for col in other.cols:
            acc: dict[int, int] = {}
            for k, v in col.items():
                for i, w in self.cols[k].items():
                    acc[i] = acc.get(i, 0) + w * v
            out.append({i: v for i, v in acc.items() if v})
        return SparseIntMatrix(self.nrows, other.ncols, tuple(out))

    def is_zero(self) -> bool:
        return all(not c for c in self.cols)


@dataclass(frozen=True)
class ChainComplex:
    """Boundary maps of a simplicial complex.

    ``boundary[d]`` for ``d >= 1`` maps d-chains to (d-1)-chains;
    ``boundary[0]`` is the augmentation (a 1 x f_0 row of ones), which is
    what makes the resulting homology reduced.
    """

    sizes: tuple[int, ...]
    boundary: tuple[SparseIntMatrix, ...]

    @property
    def top_dim(self) -> int:
        return len(self.sizes) - 1

    def boundary_map(self, d: int) -> SparseIntMatrix:
        """``boundary_map(d)``, with zero maps outside the stored range."""
        if 0 <= d < len(self.boundary):
            return self.boundary[d]
        src = self.sizes[d] if 0 <= d < len(self.sizes) else 0
        dst = self.sizes[d - 1] if 0 <= d - 1 < len(self.sizes) else (1 if d == 0 else 0)
        return SparseIntMatrix(dst, src, tuple({} for _ in range(src)))


def chain_complex(k: SimplicialComplex) -> ChainComplex:
    sizes = f_vector(k)
    if not sizes:
        return ChainComplex((), ())
    mats = [SparseIntMatrix(1, sizes[0], tuple({0: 1} for _ in range(sizes[0])))]
    for d in range(1, len(sizes)):
        lower = k.face_index(d - 1)
        cols = []
        for f in k.faces(d):
            col = {}
            for pos in range(d + 1):
                col[lower[f[:pos] + f[pos + 1:]]] = -1 if pos & 1 else 1
            cols.append(col)
        mats.append(SparseIntMatrix(sizes[d - 1], sizes[d], tuple(cols)))
    return ChainComplex(sizes, tuple(mats))
