"""Triangulation queries checked against brute-force finite oracles and
hand-frozen infinite fixtures."""

from __future__ import annotations

from itertools import combinations

import pytest

from infgon.triangulation import (Fountain, Leapfrog, Triangulation,
                                  enumerate_triangulations, validate)
from infgon.zmodel import Arc, Limit, ModelError, Vertex, ZModel


def pentagon_fan():
    z = ZModel.finite(5)
    return z, Triangulation.make(z, {z.arc(0, 2), z.arc(0, 3)})


def hexagon_cyclic():
    z = ZModel.finite(6)
    return z, Triangulation.make(z, {z.arc(0, 2), z.arc(2, 4), z.arc(4, 0)})


def fountain_fixture():
    z = ZModel.blocks(1)
    t = Triangulation.make(z, set(), {0: Fountain(Vertex(0, 0), 2, -2)})
    return z, t


def leapfrog_fixture():
    z = ZModel.blocks(1)
    t = Triangulation.make(z, set(), {0: Leapfrog(1, -1)})
    return z, t


# -- membership -----------------------------------------------------------


def test_fountain_membership():
    z, t = fountain_fixture()
    for n in (2, 3, 17, -2, -3, -40):
        assert t.contains(z.arc(0, n))
    for bad in (z.arc(0, 1), z.arc(1, 3), z.arc(2, -2)):
        assert not t.contains(bad)


def test_leapfrog_membership():
    z, t = leapfrog_fixture()
    # {(0,1+m),(0,-1-m)} and {(0,-1-m),(0,2+m)} for m >= 0
    for a in (z.arc(1, -1), z.arc(-1, 2), z.arc(2, -2), z.arc(-2, 3)):
        assert t.contains(a)
    for bad in (z.arc(1, -2), z.arc(0, 2), z.arc(2, -3)):
        assert not t.contains(bad)


# -- validate -------------------------------------------------------------


def test_validate_pentagon_fan():
    _, t = pentagon_fan()
    assert validate(t).ok


def test_validate_pentagon_missing_diagonal():
    z = ZModel.finite(5)
    rep = validate(Triangulation.make(z, {z.arc(0, 2)}))
    assert not rep.ok
    assert rep.reason == "non-triangular face"


def test_validate_crossing_pair():
    z = ZModel.finite(6)
    rep = validate(Triangulation.make(z, {z.arc(0, 2), z.arc(1, 3), z.arc(0, 3)}))
    assert not rep.ok
    assert rep.reason == "crossing pair"


def test_validate_fountain():
    _, t = fountain_fixture()
    assert validate(t).ok


def test_validate_leapfrog():
    _, t = leapfrog_fixture()
    assert validate(t).ok


def test_validate_missing_tail():
    z = ZModel.blocks(1)
    rep = validate(Triangulation.make(z, set()))
    assert not rep.ok
    assert rep.reason == "tail coverage"


def test_validate_fountain_gap_is_invalid():
    z = ZModel.blocks(1)
    # right_from 3 leaves the face (0,1,2,3) untriangulated
    rep = validate(Triangulation.make(z, set(), {0: Fountain(Vertex(0, 0), 3, -2)}))
    assert not rep.ok


def test_validate_fountain_with_core():
    z = ZModel.blocks(1)
    t = Triangulation.make(z, {z.arc(0, 2)}, {0: Fountain(Vertex(0, 0), 3, -2)})
    assert validate(t).ok


def test_validate_blocks2_two_fountains():
    z = ZModel.blocks(2)
    t = Triangulation.make(
        z,
        {z.arc(Vertex(0, 0), Vertex(1, 0))},
        {0: Fountain(Vertex(0, 0), 2, -1),   # toward L(0): {0,(0,i>=2)}, {0,(1,j<=-1)}
         1: Fountain(Vertex(1, 0), 2, -1)})  # toward L(1): {(1,0),(1,i>=2)}, {(1,0),(0,j<=-1)}
    # needs the short spokes to be diagonals and faces to close up
    rep = validate(t)
    assert rep.ok, rep


def test_catalan_counts():
    expected = {5: 5, 6: 14, 7: 42, 8: 132, 9: 429}
    for n, c in expected.items():
        tris = enumerate_triangulations(ZModel.finite(n))
        assert len(tris) == c
        assert len({t.core for t in tris}) == c


def test_enumerated_triangulations_all_validate():
    for n in (5, 6, 7):
        for t in enumerate_triangulations(ZModel.finite(n)):
            assert validate(t).ok


# -- sup/inf --------------------------------------------------------------


def test_sup_inf_pentagon():
    z, t = pentagon_fan()
    assert t.sup_connected(z.v(0), z.v(3), z.v(4)) == z.v(4)
    assert t.inf_connected(z.v(2), z.v(0), z.v(0), diagonals_only=True) == z.v(0)


def test_sup_fountain_edge_beats_tail():
    z, t = fountain_fixture()
    got = t.sup_connected(Vertex(0, 0), Vertex(0, 3), Vertex(0, -1))
    assert got == Vertex(0, -1)


def test_sup_fountain_symbolic():
    z, t = fountain_fixture()
    # diagonals only, interval stopping before the edge neighbour:
    # spokes {0, i} accumulate at L(0) but {0,-2} lies beyond it
    got = t.sup_connected(Vertex(0, 0), Vertex(0, 3), Vertex(0, -2),
                          diagonals_only=True)
    assert got == Vertex(0, -2)


def test_inf_connected_none():
    z, t = pentagon_fan()
    assert t.inf_connected(z.v(1), z.v(3), z.v(4), diagonals_only=True) is None


def test_interval_precondition():
    z, t = pentagon_fan()
    with pytest.raises(ModelError):
        t.sup_connected(z.v(3), z.v(2), z.v(4))


# -- third_vertex ---------------------------------------------------------


def test_third_vertex_pentagon():
    z, t = pentagon_fan()
    d = z.arc(0, 2)
    assert t.third_vertex(d, z.v(1)) == z.v(1)
    assert t.third_vertex(d, z.v(3)) == z.v(3)
    assert t.third_vertex(d, z.v(4)) == z.v(3)


def test_third_vertex_fountain():
    z, t = fountain_fixture()
    assert t.third_vertex(z.arc(0, 4), Vertex(0, 5)) == Vertex(0, 5)
    assert t.third_vertex(z.arc(0, 4), Vertex(0, 3)) == Vertex(0, 3)
    assert t.third_vertex(z.arc(0, 2), Vertex(0, 1)) == Vertex(0, 1)


def test_third_vertex_all_triangles():
    for n in (5, 6, 7):
        z = ZModel.finite(n)
        for t in enumerate_triangulations(z):
            for d in t.core:
                for side in (z.succ(d.p), z.succ(d.q)):
                    a, h, b = t.triangle_on_side(d, side)
                    assert t.contains_or_edge(Arc(a, h))
                    assert t.contains_or_edge(Arc(h, b))


# -- bridge / crossing quadruples ----------------------------------------


def test_bridge_pentagon_degenerate():
    z, t = pentagon_fan()
    got = t.bridge_quadruple(z.v(2), z.v(2), z.v(0), z.v(0))
    assert got is not None
    i0, s0, h0, i1, s1, h1 = got
    assert (i0, s0, i1, s1) == (z.v(2), z.v(2), z.v(0), z.v(0))
    assert {h0, h1} == {z.v(1), z.v(3)}


def test_bridge_none():
    z, t = pentagon_fan()
    assert t.bridge_quadruple(z.v(1), z.v(1), z.v(4), z.v(4)) is None


def test_bridge_hexagon():
    z, t = hexagon_cyclic()
    got = t.bridge_quadruple(z.v(2), z.v(3), z.v(5), z.v(0))
    assert got is not None
    i0, s0, h0, i1, s1, h1 = got
    assert (i0, s0, i1, s1) == (z.v(2), z.v(2), z.v(0), z.v(0))
    # {i1, h0, s0} = {0, 4, 2} with b0 < h0 < a1; {i0, h1, s1} = {2, 1, 0}
    assert h0 == z.v(4)
    assert h1 == z.v(1)


def test_crossing_quadruple_pentagon():
    z, t = pentagon_fan()
    got = t.crossing_quadruple(z.arc(1, 4))
    assert got is not None
    i0, s0, i1, s1 = got
    # crossing diagonals of {1,4} are {0,2},{0,3}; v0 = 1, v1 = 4
    assert (i0, s0, i1, s1) == (z.v(0), z.v(0), z.v(2), z.v(3))


def test_crossing_quadruple_inequalities():
    # the eight cyclic-betweenness constraints of the extremal
    # crossing configuration
    for n in (5, 6):
        z = ZModel.finite(n)
        for t in enumerate_triangulations(z):
            for i, j in combinations(range(n), 2):
                v = z.arc(i, j)
                if not z.is_diagonal(v):
                    continue
                got = t.crossing_quadruple(v)
                crossers = [d for d in t.core if z.crosses(v, d)]
                if not crossers:
                    assert got is None
                    continue
                i0, s0, i1, s1 = got
                v0, v1 = v.p, v.q
                r = lambda p: z.rel(p, i0)
                assert r(i0) <= r(s0) < r(v0) < r(i1) <= r(s1) < r(v1)
                for tri in ({i0, v1, s1}, {i1, v0, s0}):
                    pts = sorted(tri, key=z.key)
                    for x, y in combinations(pts, 2):
                        assert t.contains_or_edge(Arc(x, y))


def test_crossing_quadruple_fountain():
    z, t = fountain_fixture()
    got = t.crossing_quadruple(z.arc(1, -1))
    assert got is not None
    i0, s0, i1, s1 = got
    # crossers are the spokes {0,n}, |n| >= 2; normalized v0 = -1, v1 = 1,
    # so the first interval is [2, -2] and the second is [0, 0]
    assert (i0, s0) == (Vertex(0, 2), Vertex(0, -2))
    assert (i1, s1) == (Vertex(0, 0), Vertex(0, 0))


# -- ears -----------------------------------------------------------------


def test_ears():
    z, t = pentagon_fan()
    assert t.ears() == {z.v(1), z.v(4)}
    z6, t6 = hexagon_cyclic()
    assert t6.ears() == {z6.v(1), z6.v(3), z6.v(5)}
    zf, tf = fountain_fixture()
    assert tf.ears() == {Vertex(0, 1), Vertex(0, -1)}
    zl, tl = leapfrog_fixture()
    assert tl.ears() == {Vertex(0, 0)}


# -- flip -----------------------------------------------------------------


def test_flip_pentagon():
    z, t = pentagon_fan()
    t2, dstar = t.flip(z.arc(0, 2))
    assert dstar == z.arc(1, 3)
    assert t2.core == frozenset({z.arc(1, 3), z.arc(0, 3)})
    t3, back = t2.flip(dstar)
    assert back == z.arc(0, 2)
    assert t3 == t


def test_flip_square():
    z = ZModel.finite(4)
    t = Triangulation.make(z, {z.arc(0, 2)})
    t2, dstar = t.flip(z.arc(0, 2))
    assert dstar == z.arc(1, 3)
    assert t2.core == frozenset({z.arc(1, 3)})


def test_flip_hexagon():
    z, t = hexagon_cyclic()
    _, dstar = t.flip(z.arc(0, 2))
    assert dstar == z.arc(1, 4)


def test_flip_preserves_validity():
    for n in (5, 6):
        z = ZModel.finite(n)
        for t in enumerate_triangulations(z):
            for d in t.core:
                t2, _ = t.flip(d)
                assert validate(t2).ok


def test_flip_core_next_to_tail():
    z = ZModel.blocks(1)
    t = Triangulation.make(z, {z.arc(0, 2)}, {0: Fountain(Vertex(0, 0), 3, -2)})
    t2, dstar = t.flip(z.arc(0, 2))
    assert dstar == z.arc(1, 3)
    assert validate(t2).ok


# -- dual quiver ----------------------------------------------------------


def test_dual_quiver_pentagon_fan():
    z, t = pentagon_fan()
    q = t.dual_quiver()
    assert set(q.nodes) == t.core
    assert q.arrows == ((z.arc(0, 3), z.arc(0, 2)),)
    assert q.is_acyclic()


def test_dual_quiver_hexagon_cycle():
    z, t = hexagon_cyclic()
    q = t.dual_quiver()
    assert len(q.arrows) == 3
    assert not q.is_acyclic()


def test_dual_quiver_fountain_path():
    z, t = fountain_fixture()
    q = t.dual_quiver()
    # fan of an infinite strip: within the window, in/out degree <= 1
    # along a single two-sided path
    indeg = {n: 0 for n in q.nodes}
    outdeg = {n: 0 for n in q.nodes}
    for s, d in q.arrows:
        outdeg[s] += 1
        indeg[d] += 1
    assert q.is_acyclic()
    assert all(v <= 1 for v in indeg.values())
    assert all(v <= 1 for v in outdeg.values())


def test_dual_quiver_no_loops_or_2cycles():
    for n in (5, 6, 7):
        z = ZModel.finite(n)
        for t in enumerate_triangulations(z):
            q = t.dual_quiver()
            pairs = set(q.arrows)
            for s, d in pairs:
                assert s != d
                assert (d, s) not in pairs
