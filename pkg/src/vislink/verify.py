"""Exact verification of the two visibility claims on generated families.

Positive claim: any k points of the complex have a common viewer, and the
proof formula names it directly: if j0 is an index whose piece C_j0
contains none of the points, then vertex a_{(j0 - kappa) mod (k+1)} is
joined to every b_i with i != j0 and reaches each point within the family's
link budget. The verifier computes that witness and certifies every path;
an exhaustive region-intersection search exists only as a fallback and its
use is reported as a failure of the formula.

Negative claim: the k+1 distinguished targets (edge midpoints c_i when
n = 2, outer tail endpoints otherwise) have no common viewer. This is
checked by exact emptiness of the fold of their n-link regions, with the
whole intersection trace exposed for independent re-checking. Dropping any
single target must flip the answer to non-empty, which guards against a
vacuously empty region engine.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .complexes import (
    OneSet,
    SegmentComplex,
    contains_point,
    incident_segments,
    oneset_intersect,
)
from .construct import Construction
from .kernel import GeometryError, Point, Segment
from .links import PathCertificate, common_viewer, link_region, n_visible
from .rng import STREAM_SAMPLE, STREAM_TUPLES, Stream, derive


class IndexOutOfRange(GeometryError):
    """Index outside 0..k."""


class TupleNotOnComplex(GeometryError):
    """A tuple point does not lie on the complex."""


class WrongArity(GeometryError):
    """Tuple size differs from k."""


class VerificationFailed(GeometryError):
    """A mathematical claim check came out false."""


@dataclass(frozen=True)
class WitnessReport:
    """Common-viewer verification result for one k-tuple."""

    tuple: Tuple[Point, ...]
    witness: Point
    paths: Tuple[PathCertificate, ...]
    method: str  # "proof-formula" or "exhaustive"


@dataclass(frozen=True)
class EmptinessReport:
    """Region-intersection trace proving the targets share no viewer."""

    targets: Tuple[Point, ...]
    n: int
    per_target_regions: Tuple[OneSet, ...]
    intersection_trace: Tuple[OneSet, ...]
    final: OneSet


def witness_vertex_index(k: int, untouched: int) -> int:
    """Index m with a_m joined to b_i for every i != untouched."""
    if not 0 <= untouched <= k:
        raise IndexOutOfRange(f"untouched index {untouched} outside 0..{k}")
    return (untouched - k // 2) % (k + 1)


def piece_segment_indices(c: Construction) -> List[frozenset]:
    """Maximal-segment indices of each piece C_i = B_i plus its tail."""
    where: Dict[Segment, int] = {
        s: idx for idx, s in enumerate(c.complex.maximal_segments)
    }
    out: List[frozenset] = []
    for i in range(c.k + 1):
        idxs = set(c.B[i])
        if c.gamma:
            t = c.gamma[i]
            for r in range(len(t) - 1):
                idxs.add(where[Segment(t[r], t[r + 1])])
        out.append(frozenset(idxs))
    return out


def verify_common_witness(
    c: Construction, pts: Sequence[Point]
) -> WitnessReport:
    """Certify that one point sees all k tuple points within n links.

    Each point is assigned to the least-index piece containing it; the
    formula witness for the least untouched index is tried first and is
    expected to always work.
    """
    if len(pts) != c.k:
        raise WrongArity(f"need exactly k={c.k} points, got {len(pts)}")
    pieces = piece_segment_indices(c)
    assigned = set()
    for x in pts:
        if not contains_point(c.complex, x):
            raise TupleNotOnComplex(f"{x} is not on the complex")
        incident = set(incident_segments(c.complex, x))
        for i in range(c.k + 1):
            if pieces[i] & incident:
                assigned.add(i)
                break
        else:
            raise AssertionError("every maximal segment belongs to a piece")
    j0 = min(i for i in range(c.k + 1) if i not in assigned)
    witness = c.polygon.a(witness_vertex_index(c.k, j0))
    paths = []
    for x in pts:
        cert = n_visible(c.complex, witness, x, c.n)
        if cert is None:
            break
        paths.append(cert)
    if len(paths) == len(pts):
        return WitnessReport(tuple(pts), witness, tuple(paths), "proof-formula")
    fallback = common_viewer(c.complex, list(pts), c.n)
    if fallback is None:
        raise VerificationFailed(
            f"no common viewer at all for tuple {tuple(pts)}"
        )
    paths = tuple(n_visible(c.complex, fallback, x, c.n) for x in pts)
    assert all(p is not None for p in paths)
    return WitnessReport(tuple(pts), fallback, paths, "exhaustive")


def verify_targets_blocked(
    c: Construction, drop_index: Optional[int] = None
) -> EmptinessReport:
    """Fold the n-link regions of the distinguished targets.

    With the full target list the intersection must be empty (else
    VerificationFailed). With drop_index set, that target is excluded and
    the fold is returned as-is; by the positive claim it should then be
    non-empty, which callers assert as the adversarial control.
    """
    targets = list(c.e)
    if drop_index is not None:
        if not 0 <= drop_index <= c.k:
            raise IndexOutOfRange(f"drop index {drop_index} outside 0..{c.k}")
        targets.pop(drop_index)
    regions = tuple(link_region(c.complex, t, c.n).region for t in targets)
    trace: List[OneSet] = []
    for r in regions:
        trace.append(r if not trace else oneset_intersect(trace[-1], r))
    final = trace[-1]
    if drop_index is None and not final.is_empty():
        raise VerificationFailed(
            f"targets have a common {c.n}-link viewer: {final.least_point()}"
        )
    return EmptinessReport(tuple(targets), c.n, regions, tuple(trace), final)


def sample_on_complex(
    C: SegmentComplex, count: int, seed: int
) -> List[Point]:
    """Deterministic on-complex points: segment index and a rational
    parameter in [0,1] drawn from the seeded mixing generator."""
    stream = Stream(derive(seed, STREAM_SAMPLE))
    m = len(C.maximal_segments)
    out: List[Point] = []
    for _ in range(count):
        s = C.maximal_segments[stream.below(m)]
        t = Fraction(stream.below(65537), 65536)
        out.append(
            Point(s.p.x + t * (s.q.x - s.p.x), s.p.y + t * (s.q.y - s.p.y))
        )
    return out


def sample_tuples(
    C: SegmentComplex, k: int, count: int, seed: int
) -> List[Tuple[Point, ...]]:
    """Deterministic stream of k-tuples of on-complex points."""
    stream = Stream(derive(seed, STREAM_TUPLES))
    m = len(C.maximal_segments)
    out: List[Tuple[Point, ...]] = []
    for _ in range(count):
        pts = []
        for _ in range(k):
            s = C.maximal_segments[stream.below(m)]
            t = Fraction(stream.below(65537), 65536)
            pts.append(
                Point(s.p.x + t * (s.q.x - s.p.x), s.p.y + t * (s.q.y - s.p.y))
            )
        out.append(tuple(pts))
    return out
