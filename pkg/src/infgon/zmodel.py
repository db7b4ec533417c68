"""Cyclically ordered vertex sets on the circle and their arcs.

Two families of models are supported:

* ``Finite(n)``: the vertices of a convex n-gon, labelled 0..n-1
  counterclockwise.
* ``Blocks(k)``: k copies of the integers glued cyclically, with one
  limit point L(b) between block b and block b+1 (mod k).  Within a
  block the index increases counterclockwise.

All order and crossing questions are answered through an integer
"position key" linearization anchored at vertex (0, 0); no
floating-point geometry is used anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Union


class Vertex(NamedTuple):
    block: int
    idx: int

    def __repr__(self) -> str:
        return f"V({self.block},{self.idx})"


@dataclass(frozen=True)
class Limit:
    """The limit point between block ``gap`` and block ``gap+1 mod k``."""

    gap: int

    def __repr__(self) -> str:
        return f"L({self.gap})"


ClosurePoint = Union[Vertex, Limit]


class ModelError(ValueError):
    """Raised for structurally invalid model-level inputs."""


@dataclass(frozen=True)
class ZModel:
    """Either a finite polygon or a blocks-of-integers model.

    Exactly one of ``n`` (finite) and ``k`` (blocks) is set.
    """

    n: int | None = None
    k: int | None = None

    def __post_init__(self) -> None:
        if (self.n is None) == (self.k is None):
            raise ModelError("exactly one of n, k must be given")
        if self.n is not None and self.n < 4:
            raise ModelError("finite model needs n >= 4")
        if self.k is not None and self.k < 1:
            raise ModelError("blocks model needs k >= 1")

    # -- constructors ------------------------------------------------

    @staticmethod
    def finite(n: int) -> "ZModel":
        return ZModel(n=n)

    @staticmethod
    def blocks(k: int) -> "ZModel":
        return ZModel(k=k)

    @property
    def is_finite(self) -> bool:
        return self.n is not None

    # -- vertex handling ---------------------------------------------

    def v(self, a, b: int | None = None) -> Vertex:
        """Coerce an int (finite model), pair, or Vertex into a Vertex."""
        if b is not None:
            return self.check_vertex(Vertex(a, b))
        if isinstance(a, Vertex):
            return self.check_vertex(a)
        if isinstance(a, int):
            if self.is_finite:
                return Vertex(0, a % self.n)
            if self.k == 1:
                return Vertex(0, a)
            raise ModelError("bare integer vertex is ambiguous for k > 1")
        if isinstance(a, tuple) and len(a) == 2:
            return self.check_vertex(Vertex(*a))
        raise ModelError(f"cannot interpret {a!r} as a vertex")

    def check_vertex(self, v: Vertex) -> Vertex:
        if self.is_finite:
            if v.block != 0 or not (0 <= v.idx < self.n):
                raise ModelError(f"{v!r} is not a vertex of Finite({self.n})")
        else:
            if not (0 <= v.block < self.k):
                raise ModelError(f"{v!r} is not a vertex of Blocks({self.k})")
        return v

    def limits(self) -> list[Limit]:
        if self.is_finite:
            return []
        return [Limit(g) for g in range(self.k)]

    def vertices(self):
        """All vertices; only available for finite models."""
        if not self.is_finite:
            raise ModelError("infinite model has no finite vertex list")
        return [Vertex(0, i) for i in range(self.n)]

    # -- successor / predecessor -------------------------------------

    def succ(self, v: Vertex) -> Vertex:
        v = self.v(v)
        if self.is_finite:
            return Vertex(0, (v.idx + 1) % self.n)
        return Vertex(v.block, v.idx + 1)

    def pred(self, v: Vertex) -> Vertex:
        v = self.v(v)
        if self.is_finite:
            return Vertex(0, (v.idx - 1) % self.n)
        return Vertex(v.block, v.idx - 1)

    # -- linearization -----------------------------------------------

    def key(self, p: ClosurePoint) -> tuple[int, int, int]:
        """Canonical linearization key starting at vertex (0, 0).

        Keys compare as the counterclockwise order of closure points
        read from (0, 0).  For Blocks(k) the negative half of block 0
        is mapped past the last limit point (pseudo-block k).
        """
        if isinstance(p, Limit):
            if self.is_finite or not (0 <= p.gap < self.k):
                raise ModelError(f"{p!r} is not a limit point of this model")
            return (p.gap, 1, 0)
        v = self.check_vertex(p)
        if self.is_finite:
            return (0, 0, v.idx)
        if v.block == 0 and v.idx < 0:
            return (self.k, 0, v.idx)
        return (v.block, 0, v.idx)

    def rel(self, p: ClosurePoint, start: ClosurePoint):
        """Position of ``p`` in the rotation of the linearization that
        begins at ``start``; totally ordered tuples."""
        kp, ks = self.key(p), self.key(start)
        return (0, kp) if kp >= ks else (1, kp)

    # -- cyclic order -------------------------------------------------

    def cyclically_between(self, a: ClosurePoint, x: ClosurePoint,
                           b: ClosurePoint) -> bool:
        """True iff x lies in the closed counterclockwise interval [a, b]."""
        if self.key(a) == self.key(b):
            raise ModelError("degenerate interval: a == b")
        return self.rel(x, a) <= self.rel(b, a)

    def strictly_between(self, a: ClosurePoint, x: ClosurePoint,
                         b: ClosurePoint) -> bool:
        """True iff x lies in the open counterclockwise interval (a, b)."""
        kx = self.key(x)
        if kx == self.key(a) or kx == self.key(b):
            return False
        return self.cyclically_between(a, x, b)

    # -- arcs ---------------------------------------------------------

    def arc(self, p, q) -> "Arc":
        return Arc(self._coerce_point(p), self._coerce_point(q))

    def _coerce_point(self, p) -> ClosurePoint:
        if isinstance(p, Limit):
            if self.is_finite:
                raise ModelError("finite model has no limit points")
            return Limit(p.gap % self.k)
        return self.v(p)

    def are_neighbours(self, u: Vertex, v: Vertex) -> bool:
        return self.succ(u) == v or self.succ(v) == u

    def is_edge(self, a: "Arc") -> bool:
        return (isinstance(a.p, Vertex) and isinstance(a.q, Vertex)
                and self.are_neighbours(a.p, a.q))

    def is_diagonal(self, a: "Arc") -> bool:
        return (isinstance(a.p, Vertex) and isinstance(a.q, Vertex)
                and a.p != a.q and not self.are_neighbours(a.p, a.q))

    def crosses(self, a: "Arc", t: "Arc") -> bool:
        """Whether the virtual arc ``a`` crosses the diagonal ``t``.

        True iff exactly one endpoint of t lies strictly inside the
        open interval (a.p, a.q); sharing an endpoint means no crossing.
        """
        if not self.is_diagonal(t):
            raise ModelError(f"{t!r} is not a diagonal")
        pts = {self.key(a.p), self.key(a.q)}
        if self.key(t.p) in pts or self.key(t.q) in pts:
            return False
        inside_p = self.strictly_between(a.p, t.p, a.q)
        inside_q = self.strictly_between(a.p, t.q, a.q)
        return inside_p != inside_q


def _point_sort_key(p: ClosurePoint):
    # Structural, model-independent order used only for normalization.
    if isinstance(p, Limit):
        return (1, p.gap, 0)
    return (0, p.block, p.idx)


@dataclass(frozen=True)
class Arc:
    """Unordered pair of distinct closure points, stored normalized."""

    p: ClosurePoint
    q: ClosurePoint

    def __init__(self, p: ClosurePoint, q: ClosurePoint) -> None:
        if p == q:
            raise ModelError("arc endpoints must be distinct")
        if _point_sort_key(p) > _point_sort_key(q):
            p, q = q, p
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)

    def endpoints(self) -> tuple[ClosurePoint, ClosurePoint]:
        return (self.p, self.q)

    def other(self, x: ClosurePoint) -> ClosurePoint:
        if x == self.p:
            return self.q
        if x == self.q:
            return self.p
        raise ModelError(f"{x!r} is not an endpoint of {self!r}")

    def has_endpoint(self, x: ClosurePoint) -> bool:
        return x == self.p or x == self.q

    def __repr__(self) -> str:
        return f"Arc({self.p!r},{self.q!r})"


def suspend(z: ZModel, a: Arc) -> Arc:
    """The suspension: both endpoints move to their predecessors."""
    if not (isinstance(a.p, Vertex) and isinstance(a.q, Vertex)):
        raise ModelError("suspension needs vertex endpoints")
    return Arc(z.pred(a.p), z.pred(a.q))


def unsuspend(z: ZModel, a: Arc) -> Arc:
    if not (isinstance(a.p, Vertex) and isinstance(a.q, Vertex)):
        raise ModelError("unsuspension needs vertex endpoints")
    return Arc(z.succ(a.p), z.succ(a.q))
