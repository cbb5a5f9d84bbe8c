"""Polygon generation, general-position checking, family assembly."""

import pytest

from vislink import Segment, point
from vislink.complexes import contains_point, contains_segment, incident_segments
from vislink.construct import (
    Construction,
    GammaPlacementFailed,
    KTooSmall,
    NotConvex,
    PolygonSpec,
    build_family,
    check_strong_general_position,
    make_polygon,
)
from vislink.kernel import GeometryError, Orientation, orientation


def hand_spec(coords, k):
    return PolygonSpec(
        k=k,
        kappa=k // 2,
        vertices=tuple(point(x, y) for x, y in coords),
        seed=0,
        retry_count=0,
    )


# ------------------------------------------------------------ make_polygon


def test_make_polygon_hexagon():
    p = make_polygon(2, seed=11)
    assert len(p.vertices) == 6
    assert p.kappa == 1
    ok, witness = check_strong_general_position(p)
    assert ok and witness is None


def test_make_polygon_octagon():
    p = make_polygon(3, seed=11)
    assert len(p.vertices) == 8


def test_make_polygon_clockwise():
    p = make_polygon(4, seed=3)
    m = len(p.vertices)
    for i in range(m):
        o = orientation(
            p.vertices[i], p.vertices[(i + 1) % m], p.vertices[(i + 2) % m]
        )
        assert o == Orientation.CW


def test_make_polygon_deterministic():
    assert make_polygon(3, seed=99) == make_polygon(3, seed=99)
    assert make_polygon(3, seed=99) != make_polygon(3, seed=100)


def test_k_too_small():
    with pytest.raises(KTooSmall):
        make_polygon(1, seed=0)


def test_index_accessors_reduce_modulo():
    p = make_polygon(2, seed=5)
    assert p.a(3) == p.a(0)
    assert p.b(-1) == p.b(2)


# ---------------------------------------------- check_strong_general_position


def test_symmetric_hexagon_rejected():
    # centrally symmetric: the three main diagonals meet at the origin
    spec = hand_spec(
        [(2, 0), (1, -2), (-1, -2), (-2, 0), (-1, 2), (1, 2)], k=2
    )
    ok, witness = check_strong_general_position(spec)
    assert not ok
    assert witness is not None and len(witness) == 3
    # every reported diagonal really passes through the common point
    for (i, j) in witness:
        s = Segment(spec.vertices[i], spec.vertices[j])
        from vislink.kernel import on_segment

        assert on_segment(point(0, 0), s)


def test_not_convex_rejected():
    spec = hand_spec(
        [(2, 0), (1, -2), (-1, -2), (-2, 0), (0, 1), (1, 2)], k=2
    )
    with pytest.raises(NotConvex):
        check_strong_general_position(spec)


def test_quadrilateral_precondition():
    spec = hand_spec([(1, 1), (1, -1), (-1, -1), (-1, 1)], k=1)
    with pytest.raises(KTooSmall):
        check_strong_general_position(spec)


# ------------------------------------------------------------ build_family


def test_hexagon_family_is_boundary():
    p = make_polygon(2, seed=7)
    c = build_family(p)
    assert c.n == 2 and c.k == 2
    assert len(c.complex.maximal_segments) == 6
    edges = {
        Segment(p.vertices[i], p.vertices[(i + 1) % 6]) for i in range(6)
    }
    assert set(c.complex.maximal_segments) == edges
    assert all(len(g) == 2 for g in c.B)


def test_octagon_family_counts():
    c = build_family(make_polygon(3, seed=7))
    assert len(c.complex.maximal_segments) == 12  # 8 edges + 4 diagonals
    boundary = 0
    m = len(c.polygon.vertices)
    verts = c.polygon.vertices
    edge_set = {Segment(verts[i], verts[(i + 1) % m]) for i in range(m)}
    for s in c.complex.maximal_segments:
        if s in edge_set:
            boundary += 1
    assert boundary == 8


def test_k4_fan_membership():
    p = make_polygon(4, seed=7)
    c = build_family(p)
    for i in (1, 2, 3, 4):
        assert contains_segment(c.complex, p.a(3), p.b(i))
    assert not contains_segment(c.complex, p.a(3), p.b(0))


def test_segment_count_law():
    for n, k in [(2, 2), (2, 5), (3, 2), (4, 3), (5, 4)]:
        c = build_family(make_polygon(k, seed=13), n)
        want = (k + 1) * k + (k + 1) * (n - 2)
        assert len(c.complex.maximal_segments) == want, (n, k)


def test_matching_midpoints_absent():
    p = make_polygon(3, seed=21)
    c = build_family(p)
    for i in range(4):
        am, bi = p.a(i - p.kappa), p.b(i)
        mid = point((am.x + bi.x) / 2, (am.y + bi.y) / 2)
        assert not contains_point(c.complex, mid)
        assert not contains_segment(c.complex, am, bi)


def test_midpoint_incidence_n2():
    c = build_family(make_polygon(2, seed=7))
    for ci in c.c:
        assert len(incident_segments(c.complex, ci)) == 1


def test_midpoint_incidence_with_tails():
    c = build_family(make_polygon(2, seed=7), 4)
    for ci in c.c:
        assert len(incident_segments(c.complex, ci)) == 2


def _strictly_outside(p, verts):
    m = len(verts)
    for i in range(m):
        if orientation(verts[i], verts[(i + 1) % m], p) == Orientation.CCW:
            return True  # clockwise polygon: CCW side of an edge is outside
    return False


def test_tails_outside_polygon():
    p = make_polygon(2, seed=7)
    c = build_family(p, 5)
    assert c.gamma and all(len(t) == 4 for t in c.gamma)  # 3 edges each
    for t in c.gamma:
        assert not _strictly_outside(t[0], p.vertices)  # base on boundary
        for g in t[1:]:
            assert _strictly_outside(g, p.vertices)


def test_tails_pairwise_disjoint():
    from vislink.backend import impl as _k

    c = build_family(make_polygon(3, seed=7), 5)
    tails = [
        [Segment(t[r], t[r + 1]) for r in range(len(t) - 1)] for t in c.gamma
    ]
    for i in range(len(tails)):
        for j in range(i + 1, len(tails)):
            for s1 in tails[i]:
                for s2 in tails[j]:
                    kind, _ = _k.seg_meet(s1.p.key, s1.q.key, s2.p.key, s2.q.key)
                    assert kind == 0


def test_tail_edges_never_consecutively_collinear():
    c = build_family(make_polygon(2, seed=7), 6)
    for t in c.gamma:
        for r in range(len(t) - 2):
            assert orientation(t[r], t[r + 1], t[r + 2]) != Orientation.COLLINEAR


def test_n3_tails_are_single_edges():
    c = build_family(make_polygon(2, seed=7), 3)
    assert len(c.gamma) == 3
    assert all(len(t) == 2 for t in c.gamma)
    assert all(e == t[-1] for e, t in zip(c.e, c.gamma))


def test_n2_has_no_tails_and_e_is_c():
    c = build_family(make_polygon(2, seed=7))
    assert c.gamma == ()
    assert c.e == c.c


def test_build_family_deterministic():
    a = build_family(make_polygon(3, seed=42), 4)
    b = build_family(make_polygon(3, seed=42), 4)
    assert a == b


def test_n_too_small():
    with pytest.raises(GeometryError):
        build_family(make_polygon(2, seed=7), 1)
