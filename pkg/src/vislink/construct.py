"""Generation of the fan-family counterexample complexes.

The base object is a strictly convex polygon with 2k+2 vertices labeled
clockwise a_0, b_0, a_1, b_1, ..., a_k, b_k, all on a rational circle.
From it:

- the 2-link family removes a perfect matching from the complete a-to-b
  join: B_i keeps [a_v, b_i] for every v except v = i - kappa (mod k+1),
  with kappa = floor(k/2); the union of the B_i fans is the complex;
- the n-link family (n > 2) attaches to each fan an outward zigzag tail
  of n-2 edges starting at the midpoint c_i of the boundary edge
  [b_i, a_{i+1}].

Vertices sit in "strong general position": strictly convex, no three
diagonals concurrent inside the polygon, and additionally no diagonal
passes through any of the midpoints the construction relies on. All of
this is verified exactly; failures trigger a deterministic reseed of the
jitter, never silent acceptance.

Tail geometry is chosen so the required side conditions hold by
construction where possible: tail vertices march outward along the edge
normal (strictly outside the polygon after the first vertex), lateral
offsets alternate with distinct consecutive differences (so no two
consecutive tail edges are collinear and the tail is simple). Only
pairwise disjointness of different tails needs an explicit exact check;
the lateral amplitude is halved until it passes.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .backend import impl as _k
from .complexes import SegmentComplex, contains_point, contains_segment, normalize
from .kernel import (
    GeometryError,
    Orientation,
    Point,
    Segment,
    on_segment,
    orientation,
    point_from_key,
)
from .rng import STREAM_POLYGON, Stream, derive


class KTooSmall(GeometryError):
    """The family needs k >= 2 (at least a hexagon)."""


class RetryLimitExceeded(GeometryError):
    """No admissible vertex placement found within the retry bound."""


class NotConvex(GeometryError):
    """Vertex cycle is not strictly convex clockwise."""


class GammaPlacementFailed(GeometryError):
    """No disjoint tail placement found within the amplitude schedule."""


_RETRY_LIMIT = 1000
_AMP_HALVINGS = 64
_NORMAL_STEP = Fraction(1, 4)
_BASE_AMP = Fraction(1, 8)


@dataclass(frozen=True)
class PolygonSpec:
    """Clockwise cyclic vertex list a_0, b_0, ..., a_k, b_k."""

    k: int
    kappa: int
    vertices: Tuple[Point, ...]
    seed: int
    retry_count: int

    def a(self, i: int) -> Point:
        # single choke point for index reduction mod k+1
        return self.vertices[2 * (i % (self.k + 1))]

    def b(self, i: int) -> Point:
        return self.vertices[2 * (i % (self.k + 1)) + 1]


@dataclass(frozen=True)
class Construction:
    """A generated family member with all features indexed."""

    n: int
    k: int
    polygon: PolygonSpec
    complex: SegmentComplex
    B: Tuple[Tuple[int, ...], ...]
    c: Tuple[Point, ...]
    gamma: Tuple[Tuple[Point, ...], ...]
    e: Tuple[Point, ...]


def _diagonal_index_pairs(m: int) -> List[Tuple[int, int]]:
    """Vertex index pairs of all diagonals of an m-gon, sorted."""
    out = []
    for i in range(m):
        for j in range(i + 1, m):
            if (j - i) % m in (1, m - 1):
                continue
            out.append((i, j))
    return out


def check_strong_general_position(
    p: PolygonSpec,
) -> Tuple[bool, Optional[Tuple[Tuple[int, int], ...]]]:
    """Exact no-three-concurrent-diagonals test.

    Returns (True, None) or (False, first violating triple of diagonals),
    each diagonal given as a pair of vertex indices. Raises NotConvex
    unless every consecutive vertex triple turns strictly clockwise.
    """
    verts = p.vertices
    m = len(verts)
    if m < 6:
        raise KTooSmall("need k >= 2, i.e. at least 6 vertices")
    for i in range(m):
        o = orientation(verts[i], verts[(i + 1) % m], verts[(i + 2) % m])
        if o != Orientation.CW:
            raise NotConvex(f"vertex triple at index {i} does not turn clockwise")
    diags = _diagonal_index_pairs(m)
    vertex_set = set(verts)
    hits: Dict[Point, List[Tuple[int, int]]] = {}
    for di in range(len(diags)):
        i1, j1 = diags[di]
        s1 = Segment(verts[i1], verts[j1])
        for dj in range(di + 1, len(diags)):
            i2, j2 = diags[dj]
            if len({i1, j1, i2, j2}) < 4:
                continue  # shared vertex: contact is on the boundary
            s2 = Segment(verts[i2], verts[j2])
            kind, payload = _k.seg_meet(s1.p.key, s1.q.key, s2.p.key, s2.q.key)
            if kind == 2:
                raise NotConvex("collinear overlapping diagonals")
            if kind != 1:
                continue
            z = point_from_key(payload)
            if z in vertex_set:
                continue
            bucket = hits.setdefault(z, [])
            for d in (diags[di], diags[dj]):
                if d not in bucket:
                    bucket.append(d)
            if len(bucket) >= 3:
                return False, tuple(sorted(bucket[:3]))
    return True, None


def _midpoint(p: Point, q: Point) -> Point:
    return Point((p.x + q.x) / 2, (p.y + q.y) / 2)


def _midpoints_clear(p: PolygonSpec) -> bool:
    """Construction-specific genericity on top of general position.

    Every edge midpoint c_i and every removed-matching midpoint must avoid
    all diagonals (other than the removed diagonal itself), so that later
    membership claims about these midpoints are clean.
    """
    verts = p.vertices
    m = len(verts)
    diags = _diagonal_index_pairs(m)
    k1 = p.k + 1
    for i in range(k1):
        ci = _midpoint(p.b(i), p.a(i + 1))
        match = (2 * ((i - p.kappa) % k1), 2 * (i % k1) + 1)
        match = (min(match), max(match))
        mmid = _midpoint(verts[match[0]], verts[match[1]])
        for d in diags:
            s = Segment(verts[d[0]], verts[d[1]])
            if on_segment(ci, s):
                return False
            if d != match and on_segment(mmid, s):
                return False
    return True


def make_polygon(k: int, seed: int) -> PolygonSpec:
    """Deterministic admissible vertex placement on the rational circle.

    Parameters t_j come from a jittered strictly increasing grid mapped
    through t = s(3 - s^2) / (2(1 - s^2)); the image points
    ((1-t^2)/(1+t^2), 2t/(1+t^2)) trace the unit circle monotonically, so
    strict convexity holds by construction. The jitter is re-derived from
    (seed, retry) until the exact genericity checks pass.
    """
    if k < 2:
        raise KTooSmall(f"k must be >= 2, got {k}")
    m = 2 * k + 2
    for retry in range(_RETRY_LIMIT):
        stream = Stream(derive(seed, STREAM_POLYGON, retry))
        pts: List[Point] = []
        for j in range(m):
            eps = Fraction(stream.below(4096), 4096)
            u = (j + Fraction(1, 4) + eps / 2) / m
            s = 2 * u - 1
            t = s * (3 - s * s) / (2 * (1 - s * s))
            pts.append(Point((1 - t * t) / (1 + t * t), 2 * t / (1 + t * t)))
        pts.reverse()  # monotone parameter runs counterclockwise; flip
        spec = PolygonSpec(
            k=k, kappa=k // 2, vertices=tuple(pts), seed=seed, retry_count=retry
        )
        ok, _ = check_strong_general_position(spec)
        if ok and _midpoints_clear(spec):
            return spec
    raise RetryLimitExceeded(f"no admissible polygon after {_RETRY_LIMIT} retries")


def _fan_segments(p: PolygonSpec) -> Tuple[List[Segment], List[List[int]]]:
    """Raw fan segments in document order plus per-fan raw indices."""
    k1 = p.k + 1
    raw: List[Segment] = []
    groups: List[List[int]] = []
    for i in range(k1):
        skip = (i - p.kappa) % k1
        idxs: List[int] = []
        for v in range(k1):
            if v == skip:
                continue
            idxs.append(len(raw))
            raw.append(Segment(p.a(v), p.b(i)))
        groups.append(idxs)
    return raw, groups


def _assert_matching_is_diagonal(p: PolygonSpec) -> None:
    m = len(p.vertices)
    k1 = p.k + 1
    pos = {pt: idx for idx, pt in enumerate(p.vertices)}
    for i in range(k1):
        gap = (pos[p.b(i)] - pos[p.a(i - p.kappa)]) % m
        assert gap not in (1, m - 1), "matching segment must be a diagonal"


def _outward_normal(p: PolygonSpec, i: int) -> Tuple[Fraction, Fraction]:
    """Outward normal vector of boundary edge [b_i, a_{i+1}]."""
    u, w = p.b(i), p.a(i + 1)
    dx, dy = w.x - u.x, w.y - u.y
    other = p.a(i)  # any vertex off the edge line marks the inner side
    inner = orientation(u, w, other)
    cand = Point(u.x - dy, u.y + dx)
    if orientation(u, w, cand) == inner:
        return (dy, -dx)
    return (-dy, dx)


def _tails(p: PolygonSpec, n: int, amp: Fraction) -> List[List[Point]]:
    """Candidate tails: outward march with alternating lateral offsets.

    Vertex r sits at c_i + r*step*N + amp*alt_r*E with alt_r =
    (-1)^(r+1) / 2^r. Consecutive offset differences are all distinct, so
    no two consecutive tail edges are collinear; the strictly increasing
    normal coordinate makes each tail simple and keeps every point after
    the base strictly outside the polygon.
    """
    k1 = p.k + 1
    tails: List[List[Point]] = []
    for i in range(k1):
        u, w = p.b(i), p.a(i + 1)
        ci = _midpoint(u, w)
        nx, ny = _outward_normal(p, i)
        ex, ey = w.x - u.x, w.y - u.y
        verts = [ci]
        for r in range(1, n - 1):
            alt = Fraction((-1) ** (r + 1), 2**r)
            verts.append(
                Point(
                    ci.x + _NORMAL_STEP * r * nx + amp * alt * ex,
                    ci.y + _NORMAL_STEP * r * ny + amp * alt * ey,
                )
            )
        tails.append(verts)
    return tails


def _tails_disjoint(tails: Sequence[Sequence[Point]]) -> bool:
    """Exact pairwise disjointness across different tails."""
    edges: List[List[Segment]] = [
        [Segment(t[r], t[r + 1]) for r in range(len(t) - 1)] for t in tails
    ]
    for i in range(len(edges)):
        for j in range(i + 1, len(edges)):
            for s1 in edges[i]:
                for s2 in edges[j]:
                    kind, _ = _k.seg_meet(
                        s1.p.key, s1.q.key, s2.p.key, s2.q.key
                    )
                    if kind != 0:
                        return False
    return True


def build_family(p: PolygonSpec, n: int = 2) -> Construction:
    """Assemble the (n, k) family member over an admissible polygon.

    n = 2 is the pure fan union; n > 2 additionally grows the tails,
    halving the lateral amplitude until all tails are pairwise disjoint.
    Structural side conditions that the later claims rely on are asserted
    after normalization.
    """
    if n < 2:
        raise GeometryError(f"n must be >= 2, got {n}")
    k1 = p.k + 1
    _assert_matching_is_diagonal(p)
    raw, groups = _fan_segments(p)

    mids = tuple(_midpoint(p.b(i), p.a(i + 1)) for i in range(k1))
    gamma: Tuple[Tuple[Point, ...], ...] = ()
    if n > 2:
        for attempt in range(_AMP_HALVINGS):
            tails = _tails(p, n, _BASE_AMP / 2**attempt)
            if _tails_disjoint(tails):
                gamma = tuple(tuple(t) for t in tails)
                break
        else:
            raise GammaPlacementFailed(
                f"tails still intersect after {_AMP_HALVINGS} amplitude halvings"
            )
        for t in gamma:
            for r in range(len(t) - 1):
                raw.append(Segment(t[r], t[r + 1]))

    C = normalize(raw)
    assert len(C.maximal_segments) == len(raw), (
        "construction segments must survive normalization unmerged"
    )
    where = {s: idx for idx, s in enumerate(C.maximal_segments)}
    B = tuple(tuple(sorted(where[raw[r]] for r in g)) for g in groups)

    for i in range(k1):
        # midpoint of each kept boundary edge lies on exactly that edge,
        # plus the base tail edge when tails are present
        pk = mids[i].key
        hits = [
            s
            for s in C.maximal_segments
            if _k.on_seg(pk, s.p.key, s.q.key)
        ]
        assert len(hits) == (1 if n == 2 else 2), (
            "edge midpoint lies on unexpected segments"
        )
        # removed matching diagonal is genuinely absent
        am, bi = p.a(i - p.kappa), p.b(i)
        assert not contains_segment(C, am, bi)
        assert not contains_point(C, _midpoint(am, bi))

    e = tuple(t[-1] for t in gamma) if n > 2 else mids
    return Construction(
        n=n, k=p.k, polygon=p, complex=C, B=B, c=mids, gamma=gamma, e=e
    )
