"""Triangulations: finite core plus tail schemas at limit points.

A triangulation of a Blocks model is described by finitely many core
diagonals together with one tail per limit point.  A tail is either a
fountain (all diagonals from one base vertex, converging to the limit
from both sides) or a leapfrog (diagonals alternating across the limit
point).

Queries over the infinite tail families are answered exactly: every
predicate used here (interval membership, crossing) is, as a function
of the family index, eventually constant with breakpoints only near
finitely many indices computable from the data.  Evaluating at those
breakpoints plus one large sentinel index is therefore a complete
decision procedure, not a sample.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Union

from .zmodel import Arc, ClosurePoint, Limit, ModelError, Vertex, ZModel


class UnattainedError(RuntimeError):
    """A requested sup/inf exists only as a limit point.

    This cannot happen for the queries the theory performs on valid
    triangulations; reaching it signals invalid input.
    """


@dataclass(frozen=True)
class Fountain:
    """All diagonals {base, (b, i)} for i >= right_from and
    {base, (b+1 mod k, j)} for j <= left_to, at limit point L(b)."""

    base: Vertex
    right_from: int
    left_to: int


@dataclass(frozen=True)
class Leapfrog:
    """Diagonals {(b, right_from+m), (b+1, left_to-m)} and
    {(b+1, left_to-m), (b, right_from+m+1)} for all m >= 0, at L(b)."""

    right_from: int
    left_to: int


Tail = Union[Fountain, Leapfrog]


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    reason: str | None = None
    witness: object | None = None


@dataclass(frozen=True)
class DualQuiver:
    nodes: tuple[Arc, ...]
    arrows: tuple[tuple[Arc, Arc], ...]
    window_bound: int

    def is_acyclic(self) -> bool:
        out: dict[Arc, list[Arc]] = {n: [] for n in self.nodes}
        for s, t in self.arrows:
            out[s].append(t)
        state: dict[Arc, int] = {}

        def visit(n: Arc) -> bool:
            state[n] = 1
            for m in out[n]:
                st = state.get(m, 0)
                if st == 1:
                    return False
                if st == 0 and not visit(m):
                    return False
            state[n] = 2
            return True

        return all(state.get(n, 0) == 2 or visit(n) for n in self.nodes)


def is_acyclic(q: DualQuiver) -> bool:
    return q.is_acyclic()


# ---------------------------------------------------------------------------
# Tail sub-families: arcs whose endpoints are affine in a single index.


@dataclass(frozen=True)
class _SubFamily:
    """Arcs member(i) = {(b1, o1 + s1*i), (b2, o2 + s2*i)}, imin <= i <= imax
    (None bound = unbounded in that direction)."""

    gap: int
    sub: str
    imin: int | None
    imax: int | None
    e1: tuple[int, int, int]  # (block, offset, slope)
    e2: tuple[int, int, int]

    def vertex(self, which: int, i: int) -> Vertex:
        b, o, s = self.e1 if which == 0 else self.e2
        return Vertex(b, o + s * i)

    def member(self, i: int) -> Arc:
        return Arc(self.vertex(0, i), self.vertex(1, i))

    def in_range(self, i: int) -> bool:
        if self.imin is not None and i < self.imin:
            return False
        if self.imax is not None and i > self.imax:
            return False
        return True

    @staticmethod
    def _match(ep: tuple[int, int, int], v: Vertex):
        """Index forced by one endpoint: an int, "any" for a matching
        constant endpoint, or None for a mismatch."""
        b, o, s = ep
        if v.block != b:
            return None
        if s == 0:
            return "any" if v.idx == o else None
        return (v.idx - o) * s

    def index_of(self, a: Arc) -> int | None:
        """The family index of the member equal to arc a, if any."""
        if not (isinstance(a.p, Vertex) and isinstance(a.q, Vertex)):
            return None
        for (u, w) in ((a.p, a.q), (a.q, a.p)):
            i = self._match(self.e1, u)
            j = self._match(self.e2, w)
            if i is None or j is None:
                continue
            if i == "any" and j == "any":
                continue
            if i != "any" and j != "any" and i != j:
                continue
            idx = i if i != "any" else j
            if self.in_range(idx):
                return idx
        return None


def _subfamilies_of_tail(z: ZModel, gap: int, tail: Tail) -> list[_SubFamily]:
    g1 = (gap + 1) % z.k
    if isinstance(tail, Fountain):
        base = (tail.base.block, tail.base.idx, 0)
        return [
            _SubFamily(gap, "right", tail.right_from, None, base, (gap, 0, 1)),
            _SubFamily(gap, "left", None, tail.left_to, base, (g1, 0, 1)),
        ]
    return [
        _SubFamily(gap, "a", 0, None, (gap, tail.right_from, 1),
                   (g1, tail.left_to, -1)),
        _SubFamily(gap, "b", 0, None, (g1, tail.left_to, -1),
                   (gap, tail.right_from + 1, 1)),
    ]


# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Triangulation:
    z: ZModel
    core: frozenset[Arc]
    tails: tuple[tuple[int, Tail], ...] = ()

    @staticmethod
    def make(z: ZModel, core: Iterable[Arc], tails: dict[int, Tail] | None = None
             ) -> "Triangulation":
        tails = tails or {}
        return Triangulation(z, frozenset(core),
                             tuple(sorted(tails.items())))

    @property
    def tail_map(self) -> dict[int, Tail]:
        return dict(self.tails)

    def subfamilies(self) -> tuple[_SubFamily, ...]:
        cached = self.__dict__.get("_subfam_cache")
        if cached is None:
            out = []
            for g, tail in self.tails:
                out.extend(_subfamilies_of_tail(self.z, g, tail))
            cached = tuple(out)
            object.__setattr__(self, "_subfam_cache", cached)
        return cached

    # -- membership ---------------------------------------------------

    def contains(self, a: Arc) -> bool:
        if a in self.core:
            return True
        return self.tail_ref_of(a) is not None

    def tail_ref_of(self, a: Arc) -> tuple[int, str, int] | None:
        for sf in self.subfamilies():
            i = sf.index_of(a)
            if i is not None:
                return (sf.gap, sf.sub, i)
        return None

    def contains_or_edge(self, a: Arc) -> bool:
        return self.z.is_edge(a) or self.contains(a)

    # -- magnitude data for sentinels ---------------------------------

    def _data_magnitude(self) -> int:
        cached = self.__dict__.get("_mag_cache")
        if cached is not None:
            return cached
        m = 4
        for a in self.core:
            for p in (a.p, a.q):
                if isinstance(p, Vertex):
                    m = max(m, abs(p.idx))
        for sf in self.subfamilies():
            for (_, o, _) in (sf.e1, sf.e2):
                m = max(m, abs(o))
            for b in (sf.imin, sf.imax):
                if b is not None:
                    m = max(m, abs(b))
        object.__setattr__(self, "_mag_cache", m)
        return m

    # -- the exact extremal engine ------------------------------------

    def _in_interval(self, lo: ClosurePoint, hi: ClosurePoint,
                     p: ClosurePoint) -> bool:
        z = self.z
        if z.key(lo) == z.key(hi):
            return z.key(p) == z.key(lo)
        return z.cyclically_between(lo, p, hi)

    def _breakpoints(self, ep: tuple[int, int, int],
                     bounds: list[ClosurePoint]) -> set[int]:
        b, o, s = ep
        if s == 0:
            return set()
        pts: set[int] = set()
        for p in bounds:
            if isinstance(p, Vertex) and p.block == b:
                pts.add((p.idx - o) * s)
        if not self.z.is_finite and b == 0:
            pts.add((0 - o) * s)
        return pts

    def _extremal_connected(self, want_min: bool,
                            a_lo: Vertex, a_hi: Vertex,
                            b_lo: ClosurePoint, b_hi: ClosurePoint,
                            edges_allowed: bool) -> Vertex | None:
        """inf (or sup) over A = [a_lo, a_hi] of vertices joined to some
        vertex of B = [b_lo, b_hi] by a diagonal of T, or an edge when
        edges_allowed.  Ordering is position along A from a_lo."""
        z = self.z
        feas: dict[Vertex, tuple] = {}
        markers: list[tuple] = []  # (kind, rel_of_limit)

        def in_a(p):
            return isinstance(p, Vertex) and self._in_interval(a_lo, a_hi, p)

        def in_b(p):
            return self._in_interval(b_lo, b_hi, p)

        def add(v: Vertex):
            feas.setdefault(v, z.rel(v, a_lo))

        for arc in self.core:
            for (u, w) in ((arc.p, arc.q), (arc.q, arc.p)):
                if in_a(u) and in_b(w):
                    add(u)

        if edges_allowed:
            for u in {a_lo, a_hi}:
                for w in (z.succ(u), z.pred(u)):
                    if in_b(w):
                        add(u)

        big = self._data_magnitude()
        for p in (a_lo, a_hi, b_lo, b_hi):
            if isinstance(p, Vertex):
                big = max(big, abs(p.idx))

        for sf in self.subfamilies():
            for (ea, eb) in ((sf.e1, sf.e2), (sf.e2, sf.e1)):
                cands: set[int] = set()
                cands |= self._breakpoints(ea, [a_lo, a_hi])
                cands |= self._breakpoints(eb, [b_lo, b_hi])
                for bd in (sf.imin, sf.imax):
                    if bd is not None:
                        cands.add(bd)
                window: set[int] = set()
                for c in cands:
                    window.update(range(c - 2, c + 3))
                big_here = big + max((abs(c) for c in window), default=0) + 29
                sentinels = []
                if sf.imax is None:
                    sentinels.append(big_here)
                if sf.imin is None:
                    sentinels.append(-big_here)

                def feasible(i, ea=ea, eb=eb, sf=sf):
                    if not sf.in_range(i):
                        return False
                    va = Vertex(ea[0], ea[1] + ea[2] * i)
                    vb = Vertex(eb[0], eb[1] + eb[2] * i)
                    if va == vb:
                        return False
                    return in_a(va) and in_b(vb)

                for i in window:
                    if feasible(i):
                        add(Vertex(ea[0], ea[1] + ea[2] * i))
                for s in sentinels:
                    if not feasible(s):
                        continue
                    bblk, _, slope = ea
                    if slope == 0:
                        add(Vertex(bblk, ea[1]))
                        continue
                    # direction of idx as the family runs off to this
                    # infinite end
                    going_up = (slope > 0) == (s > 0)
                    if going_up:
                        lim = Limit(bblk)
                        markers.append(("max", z.rel(lim, a_lo)))
                    else:
                        lim = Limit((bblk - 1) % z.k)
                        markers.append(("min", z.rel(lim, a_lo)))

        relevant = [r for kind, r in markers
                    if kind == ("min" if want_min else "max")]
        if not feas:
            if relevant:
                raise UnattainedError(
                    "candidate set accumulates at a limit point")
            return None
        if want_min:
            best = min(feas, key=feas.get)
            if any(r < feas[best] for r in relevant):
                raise UnattainedError(
                    "infimum approaches a limit point, not attained")
        else:
            best = max(feas, key=feas.get)
            if any(r > feas[best] for r in relevant):
                raise UnattainedError(
                    "supremum approaches a limit point, not attained")
        return best

    # -- public interval queries --------------------------------------

    def _check_interval_excludes(self, lo: Vertex, hi: Vertex, x: Vertex):
        if self._in_interval(lo, hi, x):
            raise ModelError("interval [lo, hi] must not contain x")

    def sup_connected(self, x: Vertex, lo: Vertex, hi: Vertex,
                      diagonals_only: bool = False) -> Vertex | None:
        x, lo, hi = self.z.v(x), self.z.v(lo), self.z.v(hi)
        self._check_interval_excludes(lo, hi, x)
        return self._extremal_connected(False, lo, hi, x, x,
                                        not diagonals_only)

    def inf_connected(self, x: Vertex, lo: Vertex, hi: Vertex,
                      diagonals_only: bool = False) -> Vertex | None:
        x, lo, hi = self.z.v(x), self.z.v(lo), self.z.v(hi)
        self._check_interval_excludes(lo, hi, x)
        return self._extremal_connected(True, lo, hi, x, x,
                                        not diagonals_only)

    # -- adjacent triangles -------------------------------------------

    def third_vertex(self, d: Arc, side: ClosurePoint) -> Vertex:
        """The vertex h completing d to a triangle of T on the side of d
        that contains the closure point ``side``."""
        z = self.z
        u, w = d.p, d.q
        if not (isinstance(u, Vertex) and isinstance(w, Vertex)):
            raise ModelError("third_vertex needs vertex endpoints")
        if not z.strictly_between(u, side, w):
            if not z.strictly_between(w, side, u):
                raise ModelError("side marker must not be an endpoint of d")
            u, w = w, u
        # region is [u, w] counterclockwise
        if z.succ(u) == w:
            raise ModelError("chosen side of the edge has no interior")
        h = self._extremal_connected(True, z.succ(u), z.pred(w), w, w, True)
        if h is None:
            raise UnattainedError(
                f"no triangle of T adjacent to {d!r} on the requested side")
        return h

    def triangle_on_side(self, d: Arc, side: ClosurePoint
                         ) -> tuple[Vertex, Vertex, Vertex]:
        """Counterclockwise-ordered triangle (u, h, w) of T on a side of d."""
        z = self.z
        u, w = d.p, d.q
        if not z.strictly_between(u, side, w):
            u, w = w, u
        h = self.third_vertex(d, side)
        return (u, h, w)

    # -- bridge and crossing quadruples --------------------------------

    def bridge_quadruple(self, a0: Vertex, b0: Vertex, a1: Vertex, b1: Vertex):
        """Extremal connecting configuration between [a0,b0] and [a1,b1].

        Returns (i0, s0, h0, i1, s1, h1) with {i1, h0, s0} and
        {i0, h1, s1} triangles of T, or None when no diagonal of T
        connects the two intervals."""
        z = self.z
        a0, b0, a1, b1 = (z.v(p) for p in (a0, b0, a1, b1))
        r = lambda p: z.rel(p, a0)
        if not (r(a0) <= r(b0) < r(a1) <= r(b1)):
            raise ModelError("need a0 <= b0 < a1 <= b1 < a0 cyclically")
        if z.succ(b0) == a1 or z.succ(b1) == a0:
            raise ModelError("intervals must be separated by a vertex "
                             "on both sides")
        i0 = self._extremal_connected(True, a0, b0, a1, b1, False)
        if i0 is None:
            return None
        s1 = self._extremal_connected(False, a1, b1, i0, i0, False)
        i1 = self._extremal_connected(True, a1, b1, a0, b0, False)
        s0 = self._extremal_connected(False, a0, b0, i1, i1, False)
        h0 = self.third_vertex(Arc(s0, i1), z.succ(s0))
        h1 = self.third_vertex(Arc(s1, i0), z.succ(s1))
        return (i0, s0, h0, i1, s1, h1)

    def crossing_quadruple(self, v: Arc):
        """For a diagonal v, the extremal vertices of the diagonals of T
        crossing v: (i0, s0, i1, s1) with i0 <= s0 < v0 < i1 <= s1 < v1
        and {i1, v0, s0}, {i0, v1, s1} triangles of T; None if v crosses
        nothing in T."""
        z = self.z
        if not z.is_diagonal(v):
            raise ModelError(f"{v!r} is not a diagonal")
        v0, v1 = v.p, v.q
        got = self.bridge_quadruple(z.succ(v1), z.pred(v0),
                                    z.succ(v0), z.pred(v1))
        if got is None:
            return None
        i0, s0, h0, i1, s1, h1 = got
        assert h0 == v0 and h1 == v1, "bridge triangles must rest on v"
        return (i0, s0, i1, s1)

    # -- ears ----------------------------------------------------------

    def ears(self) -> set[Vertex]:
        z = self.z
        if z.is_finite:
            return {v for v in z.vertices()
                    if self.contains(Arc(z.pred(v), z.succ(v)))}
        cands: set[Vertex] = set()
        for a in self.core:
            for (u, w) in ((a.p, a.q), (a.q, a.p)):
                if z.succ(z.succ(u)) == w:
                    cands.add(z.succ(u))
        for sf in self.subfamilies():
            b1, o1, s1 = sf.e1
            b2, o2, s2 = sf.e2
            if b1 != b2:
                continue
            # |(o1 + s1 i) - (o2 + s2 i)| == 2 has at most two solutions
            for target in (2, -2):
                num = target - (o1 - o2)
                den = s1 - s2
                sols = []
                if den == 0:
                    continue
                if num % den == 0:
                    sols.append(num // den)
                for i in sols:
                    if sf.in_range(i):
                        u, w = sf.vertex(0, i), sf.vertex(1, i)
                        if z.succ(z.succ(u)) == w:
                            cands.add(z.succ(u))
                        if z.succ(z.succ(w)) == u:
                            cands.add(z.succ(w))
        return {e for e in cands
                if self.contains(Arc(z.pred(e), z.succ(e)))}

    # -- flip ----------------------------------------------------------

    def flip(self, d: Arc) -> tuple["Triangulation", Arc]:
        z = self.z
        if d not in self.core:
            raise ModelError("only core diagonals can be flipped")
        h_a = self.third_vertex(d, z.succ(d.p))
        h_b = self.third_vertex(d, z.succ(d.q))
        dstar = Arc(h_a, h_b)
        new_core = (self.core - {d}) | {dstar}
        return (Triangulation(z, new_core, self.tails), dstar)

    # -- dual quiver ----------------------------------------------------

    def window_nodes(self, window: int | None = None) -> list[Arc]:
        """Core diagonals plus tail members with indices within a
        junction window."""
        w = window if window is not None else self._data_magnitude() + 8
        nodes = list(self.core)
        for sf in self.subfamilies():
            if sf.imin is not None:
                rng = range(sf.imin, sf.imin + w + 1)
            else:
                rng = range(sf.imax - w, sf.imax + 1)
            nodes.extend(sf.member(i) for i in rng)
        seen = set()
        out = []
        for a in sorted(nodes, key=lambda a: (self.z.key(a.p), self.z.key(a.q))):
            if a not in seen:
                seen.add(a)
                out.append(a)
        return out

    def _ccw_triangle(self, verts: frozenset[Vertex]
                      ) -> tuple[Vertex, Vertex, Vertex]:
        a, b, c = sorted(verts, key=self.z.key)
        return (a, b, c)

    def dual_quiver(self, window: int | None = None) -> DualQuiver:
        z = self.z
        w = window if window is not None else self._data_magnitude() + 8
        nodes = self.window_nodes(w)
        node_set = set(nodes)
        triangles: set[frozenset[Vertex]] = set()
        for d in nodes:
            for side in (z.succ(d.p), z.succ(d.q)):
                if side in (d.p, d.q):
                    continue
                tri = self.triangle_on_side(d, side)
                triangles.add(frozenset(tri))
        arrows: list[tuple[Arc, Arc]] = []
        for tri in triangles:
            a, b, c = self._ccw_triangle(tri)
            sides = (Arc(a, b), Arc(b, c), Arc(c, a))
            for i in range(3):
                s, t = sides[i], sides[(i + 1) % 3]
                if s in node_set and t in node_set:
                    arrows.append((s, t))
        key = lambda a: (z.key(a.p), z.key(a.q))
        arrows.sort(key=lambda st: (key(st[0]), key(st[1])))
        return DualQuiver(tuple(nodes), tuple(arrows), w)


# ---------------------------------------------------------------------------
# Validation


def validate(t: Triangulation) -> ValidationReport:
    z = t.z
    # (iv) every limit point carries exactly one tail
    expected = set(range(z.k)) if not z.is_finite else set()
    have = {g for g, _ in t.tails}
    if have != expected:
        missing = expected - have
        extra = have - expected
        return ValidationReport(False, "tail coverage",
                                {"missing": sorted(missing),
                                 "extra": sorted(extra)})

    # (i) all arcs are diagonals
    for a in t.core:
        if not z.is_diagonal(a):
            return ValidationReport(False, "non-diagonal arc", a)
    subfams = t.subfamilies()
    big = t._data_magnitude() + 29
    for sf in subfams:
        probe = []
        if sf.imin is not None:
            probe += [sf.imin, sf.imin + 1]
        if sf.imax is not None:
            probe += [sf.imax, sf.imax - 1]
        probe += [big if sf.imax is None else sf.imax - big]
        for i in probe:
            if sf.in_range(i):
                m = sf.vertex(0, i), sf.vertex(1, i)
                if m[0] == m[1] or not z.is_diagonal(Arc(*m)):
                    return ValidationReport(
                        False, "non-diagonal tail member",
                        (sf.gap, sf.sub, i))

    # (ii) pairwise non-crossing
    core = sorted(t.core, key=lambda a: (z.key(a.p), z.key(a.q)))
    for i, a in enumerate(core):
        for b in core[i + 1:]:
            if z.crosses(a, b):
                return ValidationReport(False, "crossing pair", (a, b))

    def family_crosses_arc(sf: _SubFamily, arc: Arc):
        cands: set[int] = set()
        cands |= t._breakpoints(sf.e1, [arc.p, arc.q])
        cands |= t._breakpoints(sf.e2, [arc.p, arc.q])
        for bd in (sf.imin, sf.imax):
            if bd is not None:
                cands.add(bd)
        window: set[int] = set()
        for c in cands:
            window.update(range(c - 2, c + 3))
        s = big + max((abs(c) for c in window), default=0)
        window.add(s if sf.imin is not None else -s)
        for i in window:
            if not sf.in_range(i):
                continue
            m = sf.member(i)
            if m == arc:
                continue
            if z.crosses(arc, m):
                return i
        return None

    for sf in subfams:
        for a in core:
            i = family_crosses_arc(sf, a)
            if i is not None:
                return ValidationReport(False, "crossing pair",
                                        (a, (sf.gap, sf.sub, i)))
    for ia, fa in enumerate(subfams):
        for fb in subfams[ia + 1:]:
            if fa.gap == fb.gap:
                continue  # same tail: non-crossing by construction
            probes: set[int] = set()
            for bd in (fb.imin, fb.imax):
                if bd is not None:
                    probes.update(range(bd - big, bd + big + 1))
            for j in probes:
                if not fb.in_range(j):
                    continue
                i = family_crosses_arc(fa, fb.member(j))
                if i is not None:
                    return ValidationReport(
                        False, "crossing pair",
                        ((fa.gap, fa.sub, i), (fb.gap, fb.sub, j)))

    # (iii) maximality by face extraction
    def check_faces_of(d: Arc, sides):
        for side in sides:
            try:
                a, h, b = t.triangle_on_side(d, side)
            except (UnattainedError, ModelError) as exc:
                return ValidationReport(False, "non-triangular face",
                                        (d, str(exc)))
            for sidearc in (Arc(a, h), Arc(h, b)):
                if not t.contains_or_edge(sidearc):
                    return ValidationReport(False, "non-triangular face",
                                            (d, sidearc))
        return None

    check_nodes = list(t.core) if z.is_finite else t.window_nodes()
    for d in check_nodes:
        bad = check_faces_of(d, [z.succ(d.p), z.succ(d.q)])
        if bad:
            return bad
    # edges: every edge's inner side must be a triangle
    if z.is_finite:
        edges = [Arc(v, z.succ(v)) for v in z.vertices()]
    else:
        reach = t._data_magnitude() + 10
        edges = [Arc(Vertex(b, i), Vertex(b, i + 1))
                 for b in range(z.k) for i in range(-reach, reach)]
    for e in edges:
        u = e.p if z.succ(e.p) == e.q else e.q
        w = e.other(u)
        bad = check_faces_of(e, [z.succ(w)])
        if bad:
            return bad
    return ValidationReport(True)


# ---------------------------------------------------------------------------
# Exhaustive enumeration for finite polygons.


def enumerate_triangulations(z: ZModel) -> list[Triangulation]:
    """All triangulations of a finite polygon, canonically ordered."""
    if not z.is_finite:
        raise ModelError("enumeration is only defined for finite polygons")
    n = z.n

    def solve(idxs: tuple[int, ...]) -> list[frozenset[Arc]]:
        if len(idxs) <= 3:
            return [frozenset()]
        a, b = idxs[0], idxs[-1]
        out = []
        for mi in range(1, len(idxs) - 1):
            m = idxs[mi]
            for left in solve(idxs[:mi + 1]):
                for right in solve(idxs[mi:]):
                    diags = set(left) | set(right)
                    for (x, y) in ((a, m), (m, b)):
                        if (y - x) % n not in (1, n - 1):
                            diags.add(z.arc(x, y))
                    out.append(frozenset(diags))
        return out

    cores = solve(tuple(range(n)))
    tris = [Triangulation.make(z, c) for c in cores]
    tris.sort(key=lambda t: sorted((z.key(a.p), z.key(a.q)) for a in t.core))
    return tris
