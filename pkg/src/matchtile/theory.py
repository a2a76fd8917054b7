"""Wedge-of-spheres algebra and the recursive homotopy-type predictors for I(G_{n,t}), I(H_{n,t}).

Conventions: POINT is the empty wedge (contractible), EMPTY is the (-1)-sphere,
i.e. the independence complex of the empty graph. EMPTY is the unit for join
and is never allowed inside a wedge; POINT absorbs under join.
"""

from __future__ import annotations

import math
import threading
from collections import Counter
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Mapping

INFINITY = math.inf


class Variant(str, Enum):
    POINT = "point"
    EMPTY = "empty"
    WEDGE = "wedge"


@dataclass(frozen=True)
class HomotopyType:
    variant: Variant
    spheres: tuple[tuple[int, int], ...] = ()  # sorted (dimension, multiplicity)

    def __post_init__(self):
        if self.variant is Variant.WEDGE:
            if not self.spheres:
                raise ValueError("a wedge needs at least one sphere; use POINT")
            if any(d < 0 or k <= 0 for d, k in self.spheres):
                raise ValueError("sphere dimensions must be >= 0 with positive multiplicity")
        elif self.spheres:
            raise ValueError(f"{self.variant.value} carries no spheres")

    @classmethod
    def from_dims(cls, dims: "Iterable[int] | Mapping[int, int]") -> "HomotopyType":
        counts = Counter(dims) if not isinstance(dims, Mapping) else Counter(dict(dims))
        counts = +counts
        if not counts:
            return POINT
        if -1 in counts:
            if counts == Counter({-1: 1}):
                return EMPTY
            raise ValueError("S^-1 cannot appear inside a wedge")
        return cls(Variant.WEDGE, tuple(sorted(counts.items())))

    @classmethod
    def sphere(cls, d: int, mult: int = 1) -> "HomotopyType":
        if d == -1 and mult == 1:
            return EMPTY
        return cls.from_dims({d: mult})

    def multiset(self) -> Counter:
        return Counter(dict(self.spheres))

    def betti(self) -> dict[int, int]:
        """Reduced Betti numbers of this type."""
        if self.variant is Variant.EMPTY:
            return {-1: 1}
        return dict(self.spheres)

    def __str__(self) -> str:
        if self.variant is Variant.POINT:
            return "pt"
        if self.variant is Variant.EMPTY:
            return "S^-1"
        parts = []
        for d, k in sorted(self.spheres, reverse=True):
            parts += [f"S^{d}"] * k if k <= 3 else [f"{k}*S^{d}"]
        return " v ".join(parts)

    def to_json(self) -> dict:
        return {"type": self.variant.value, "spheres": {str(d): k for d, k in self.spheres}}


POINT = HomotopyType(Variant.POINT)
EMPTY = HomotopyType(Variant.EMPTY)


def suspend(h: HomotopyType, k: int = 1) -> HomotopyType:
    if k < 0:
        raise ValueError("suspension degree must be non-negative")
    if k == 0 or h.variant is Variant.POINT:
        return h
    if h.variant is Variant.EMPTY:
        return HomotopyType.sphere(k - 1)
    return HomotopyType(Variant.WEDGE, tuple((d + k, m) for d, m in h.spheres))


def wedge(hs: Iterable[HomotopyType]) -> HomotopyType:
    total: Counter = Counter()
    for h in hs:
        if h.variant is Variant.EMPTY:
            raise ValueError("the empty complex has no basepoint and cannot be wedged")
        total.update(h.multiset())
    return HomotopyType.from_dims(total)


def join(*hs: HomotopyType) -> HomotopyType:
    acc = EMPTY
    for h in hs:
        if h.variant is Variant.POINT or acc.variant is Variant.POINT:
            acc = POINT
        elif h.variant is Variant.EMPTY:
            continue
        elif acc.variant is Variant.EMPTY:
            acc = h
        else:
            out: Counter = Counter()
            for a, x in acc.spheres:
                for b, y in h.spheres:
                    out[a + b + 1] += x * y
            acc = HomotopyType.from_dims(out)
    return acc


def connectivity(h: HomotopyType) -> "int | float":
    if h.variant is Variant.POINT:
        return INFINITY
    if h.variant is Variant.EMPTY:
        return -2
    return min(d for d, _ in h.spheres) - 1


# --- Kozlov's table ------------------------------------------------------------


def kozlov(shape: str, k: int) -> HomotopyType:
    """Homotopy type of I(P_k) (``shape='path'``) or I(C_k) (``shape='cycle'``)."""
    q, r = divmod(k, 3)
    if shape == "path":
        if k < 0:
            raise ValueError("path length must be non-negative")
        return [HomotopyType.sphere(q - 1), POINT, HomotopyType.sphere(q)][r]
    if shape == "cycle":
        if k < 3:
            raise ValueError(f"cycle needs at least 3 vertices, got {k}")
        return [HomotopyType.sphere(q - 1, 2), HomotopyType.sphere(q - 1), HomotopyType.sphere(q)][r]
    raise ValueError(f"unknown shape {shape!r}")


# --- tiling predictors -------------------------------------------------------

_tables: dict[int, tuple[list[HomotopyType], list[HomotopyType]]] = {}
_tables_lock = threading.Lock()


def _check(n: int, t: int) -> None:
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    if t < 0:
        raise ValueError(f"t must be >= 0, got {t}")


def _s(d: int, mult: int = 1) -> HomotopyType:
    return HomotopyType.sphere(d, mult)


def _bases_3m_plus_2(m: int) -> list[HomotopyType]:
    return [POINT, _s(2 * m), _s(4 * m + 1, 2), _s(6 * m + 2)]


def _bases_3m(m: int) -> list[HomotopyType]:
    return [POINT, _s(2 * m - 1, 2), _s(4 * m - 2, 2), wedge([_s(6 * m - 2), _s(6 * m - 3)])]


def _extend(n: int, t: int) -> tuple[list[HomotopyType], list[HomotopyType]]:
    """Grow the memo tables of I(G_{n,s}) (and I(H_{n,s}) when 3 | n) up to s = t."""
    m, r = divmod(n, 3)
    with _tables_lock:
        g, h = _tables.setdefault(n, ([], []))
        while len(g) <= t:
            s = len(g)
            if r == 2:
                if s <= 3:
                    g.append(_bases_3m_plus_2(m)[s])
                else:
                    g.append(wedge([suspend(g[s - 3], 6 * m + 2)] * 2 + [suspend(g[s - 4], 8 * m + 3)]))
                continue
            h.append(_s(0) if s == 0 else wedge([suspend(g[s - 1], 2 * m), suspend(h[s - 1], 2 * m - 1)]))
            if s <= 3:
                g.append(_bases_3m(m)[s])
            else:
                g.append(wedge([
                    suspend(h[s - 2], 4 * m - 2),
                    suspend(g[s - 3], 6 * m - 2),
                    suspend(h[s - 4], 8 * m - 3),
                ]))
        return g, h


def predict_G(n: int, t: int) -> HomotopyType:
    """Homotopy type of I(G_{n,t}) = M(P_{n,t}), fully evaluated."""
    _check(n, t)
    m, r = divmod(n, 3)
    if r == 1:
        return _s(2 * t * m, t) if t else POINT
    return _extend(n, t)[0][t]


def predict_H(n: int, t: int) -> HomotopyType:
    """Homotopy type of I(H_{n,t}); defined here for n divisible by 3."""
    _check(n, t)
    if n % 3:
        raise ValueError(f"H-family predictions need n divisible by 3, got {n}")
    return _extend(n, t)[1][t]


def predict(family: str, n: int, t: int) -> HomotopyType:
    if family == "G":
        return predict_G(n, t)
    if family == "H":
        return predict_H(n, t)
    raise ValueError(f"unknown family {family!r}")


def check_bases_agree(m_values: Iterable[int] = range(1, 6)) -> None:
    """The n = 3m bases used by the recursion must match the one-step H recursion and the
    known closed forms for t = 1, 2, 3; raise AssertionError otherwise."""
    for m in m_values:
        n = 3 * m
        quoted = {1: _s(2 * m - 1, 2), 2: _s(4 * m - 2, 2), 3: wedge([_s(6 * m - 2), _s(6 * m - 3)])}
        for t, h in quoted.items():
            assert predict_G(n, t) == h, (n, t)
        assert predict_H(n, 0) == _s(0)
        assert predict_H(n, 1) == _s(2 * m - 1), n


def connectivity_G(n: int, t: int) -> int:
    """Closed-form connectivity of I(G_{n,t}) for t >= 1."""
    _check(n, t)
    if t < 1:
        raise ValueError("connectivity formula needs t >= 1")
    m, r = divmod(n, 3)
    if r == 1:
        return 2 * t * m - 1
    if r == 2:
        s, eps = divmod(t - 1, 3)
        return 2 * m * t + 2 * (s - 1) + eps + 1
    return (2 * m - 1) * t - 1


def connectivity_H(n: int, t: int) -> int:
    """Closed-form connectivity of I(H_{n,t}); also right at t = 0, where I(H_0) is S^0."""
    _check(n, t)
    if n % 3:
        raise ValueError("H-family needs n divisible by 3")
    return (2 * (n // 3) - 1) * t - 1


def jmmv_lower_bound(n: int, t: int) -> int:
    """Previously published lower bound on the connectivity, for n = 3m + 2."""
    if n % 3 != 2:
        raise ValueError("lower bound is stated for n = 3m + 2")
    if t < 1:
        raise ValueError("t must be >= 1")
    m = n // 3
    return 2 * m * t + t - (t + 1) // 2 - 1


def prediction_json(n: int, t: int, family: str = "G") -> dict:
    h = predict(family, n, t)
    conn = connectivity(h)
    return {
        "family": family,
        "n": n,
        "t": t,
        "type": h.variant.value,
        "spheres": {str(d): k for d, k in h.spheres},
        "connectivity": "inf" if conn == INFINITY else conn,
    }


check_bases_agree()
