"""Structured-text documents: constructions, reports, audit logs.

Every artifact is a JSON object with a "schema" version field and all
coordinates as canonical rational strings "p/q". Serialization is
canonical (sorted keys, fixed separators, trailing newline), so identical
inputs produce byte-identical files; the determinism tests rely on this.

Readers validate shape and reconstruct full domain objects from the
serialized geometry alone. A construction document carries its complex
explicitly, so a reader never re-derives geometry from the embedded seed;
hand edits (for corruption controls) therefore take effect, and the
verify round-trip proves the format is complete.
"""

from __future__ import annotations

import json
from typing import Any, Dict, List, Optional, Sequence, Tuple

from .complexes import OneSet, SegmentComplex, normalize
from .construct import Construction, PolygonSpec
from .kernel import GeometryError, Point, Segment, parse_rat, rat_str
from .links import PathCertificate
from .shutter import ShutterState, StepRecord
from .verify import EmptinessReport, WitnessReport

SCHEMA_VERSION = "1"


class DocumentError(GeometryError):
    """Malformed or inconsistent document (usage error, not a math failure)."""


# ---------------------------------------------------------------------------
# primitives


def point_to_doc(p: Point) -> List[str]:
    return [rat_str(p.x), rat_str(p.y)]


def point_from_doc(v: Any) -> Point:
    if not isinstance(v, (list, tuple)) or len(v) != 2:
        raise DocumentError(f"point must be a [x, y] pair, got {v!r}")
    try:
        return Point(parse_rat(v[0]), parse_rat(v[1]))
    except (ValueError, TypeError, ZeroDivisionError, AttributeError) as e:
        raise DocumentError(f"bad rational in point {v!r}: {e}") from None


def segment_to_doc(s: Segment) -> List[List[str]]:
    return [point_to_doc(s.p), point_to_doc(s.q)]


def segment_from_doc(v: Any) -> Segment:
    if not isinstance(v, (list, tuple)) or len(v) != 2:
        raise DocumentError(f"segment must be a [p, q] pair, got {v!r}")
    try:
        return Segment(point_from_doc(v[0]), point_from_doc(v[1]))
    except GeometryError as e:
        if isinstance(e, DocumentError):
            raise
        raise DocumentError(str(e)) from None


def oneset_to_doc(s: OneSet) -> Dict[str, Any]:
    return {
        "segments": [segment_to_doc(x) for x in s.segments],
        "points": [point_to_doc(p) for p in s.points],
    }


# ---------------------------------------------------------------------------
# construction documents


def construction_to_doc(c: Construction) -> Dict[str, Any]:
    return {
        "schema": SCHEMA_VERSION,
        "kind": "construction",
        "k": c.k,
        "n": c.n,
        "kappa": c.polygon.kappa,
        "seed": c.polygon.seed,
        "retry_count": c.polygon.retry_count,
        "polygon": [point_to_doc(p) for p in c.polygon.vertices],
        "segments": [segment_to_doc(s) for s in c.complex.maximal_segments],
        "fans": [list(g) for g in c.B],
        "c": [point_to_doc(p) for p in c.c],
        "gamma": [[point_to_doc(p) for p in t] for t in c.gamma],
        "e": [point_to_doc(p) for p in c.e],
    }


def _need(doc: Dict[str, Any], key: str) -> Any:
    if key not in doc:
        raise DocumentError(f"missing document field {key!r}")
    return doc[key]


def _check_schema(doc: Any, kind: str) -> Dict[str, Any]:
    if not isinstance(doc, dict):
        raise DocumentError("document must be a JSON object")
    if _need(doc, "schema") != SCHEMA_VERSION:
        raise DocumentError(f"unsupported schema {doc.get('schema')!r}")
    if _need(doc, "kind") != kind:
        raise DocumentError(f"expected a {kind} document, got {doc.get('kind')!r}")
    return doc


def construction_from_doc(doc: Any) -> Construction:
    """Rebuild a Construction from its serialized geometry.

    The complex is re-normalized from the listed segments; fan indices are
    remapped through the result, so a document whose listed segments are
    not maximal (merged or covered by another) is rejected as inconsistent.
    """
    _check_schema(doc, "construction")
    k = _need(doc, "k")
    n = _need(doc, "n")
    if not (isinstance(k, int) and k >= 2 and isinstance(n, int) and n >= 2):
        raise DocumentError(f"bad parameters k={k!r} n={n!r}")
    vertices = tuple(point_from_doc(v) for v in _need(doc, "polygon"))
    if len(vertices) != 2 * (k + 1):
        raise DocumentError(
            f"polygon needs {2 * (k + 1)} vertices, got {len(vertices)}"
        )
    kappa = _need(doc, "kappa")
    if kappa != k // 2:
        raise DocumentError(f"kappa must be {k // 2}, got {kappa!r}")
    poly = PolygonSpec(
        k=k,
        kappa=kappa,
        vertices=vertices,
        seed=_need(doc, "seed"),
        retry_count=_need(doc, "retry_count"),
    )
    listed = [segment_from_doc(v) for v in _need(doc, "segments")]
    if not listed:
        raise DocumentError("construction document lists no segments")
    complex_ = normalize(listed)
    where = {s: i for i, s in enumerate(complex_.maximal_segments)}
    fans_doc = _need(doc, "fans")
    if len(fans_doc) != k + 1:
        raise DocumentError(f"need {k + 1} fans, got {len(fans_doc)}")
    fans: List[Tuple[int, ...]] = []
    for g in fans_doc:
        idxs = []
        for j in g:
            if not isinstance(j, int) or not 0 <= j < len(listed):
                raise DocumentError(f"fan index {j!r} out of range")
            s = listed[j]
            if s not in where:
                raise DocumentError(
                    f"fan segment {segment_to_doc(s)} is not maximal in the "
                    "listed complex"
                )
            idxs.append(where[s])
        fans.append(tuple(sorted(idxs)))
    mids = tuple(point_from_doc(v) for v in _need(doc, "c"))
    gamma = tuple(
        tuple(point_from_doc(v) for v in t) for t in _need(doc, "gamma")
    )
    e = tuple(point_from_doc(v) for v in _need(doc, "e"))
    if len(mids) != k + 1 or len(e) != k + 1:
        raise DocumentError("need k+1 marked points and k+1 targets")
    if gamma and len(gamma) != k + 1:
        raise DocumentError("tails must be absent or one per fan")
    return Construction(
        n=n, k=k, polygon=poly, complex=complex_, B=tuple(fans),
        c=mids, gamma=gamma, e=e,
    )


# ---------------------------------------------------------------------------
# report documents


def _certificate_to_doc(cert: PathCertificate) -> Dict[str, Any]:
    return {
        "vertices": [point_to_doc(p) for p in cert.vertices],
        "links": cert.links,
    }


def witness_report_to_doc(r: WitnessReport) -> Dict[str, Any]:
    return {
        "tuple": [point_to_doc(p) for p in r.tuple],
        "witness": point_to_doc(r.witness),
        "method": r.method,
        "paths": [_certificate_to_doc(c) for c in r.paths],
    }


def emptiness_report_to_doc(r: EmptinessReport) -> Dict[str, Any]:
    return {
        "targets": [point_to_doc(p) for p in r.targets],
        "n": r.n,
        "per_target_regions": [oneset_to_doc(s) for s in r.per_target_regions],
        "intersection_trace": [oneset_to_doc(s) for s in r.intersection_trace],
        "final": oneset_to_doc(r.final),
        "final_empty": r.final.is_empty(),
    }


def verify_report_doc(
    k: int,
    n: int,
    seed: int,
    emptiness: EmptinessReport,
    witnesses: Sequence[WitnessReport],
    drop_report: Optional[EmptinessReport] = None,
    drop_index: Optional[int] = None,
) -> Dict[str, Any]:
    doc: Dict[str, Any] = {
        "schema": SCHEMA_VERSION,
        "kind": "verify-report",
        "k": k,
        "n": n,
        "seed": seed,
        "no_common_viewer": emptiness_report_to_doc(emptiness),
        "tuples_checked": len(witnesses),
        "formula_failures": sum(
            1 for w in witnesses if w.method != "proof-formula"
        ),
        "witnesses": [witness_report_to_doc(w) for w in witnesses],
    }
    if drop_report is not None:
        doc["drop_control"] = {
            "dropped_target": drop_index,
            "report": emptiness_report_to_doc(drop_report),
            "nonempty": not drop_report.final.is_empty(),
        }
    return doc


# ---------------------------------------------------------------------------
# axis-screen documents


def shutter_input_to_doc(
    K: Sequence[Point], tuples: Optional[Sequence[Sequence[Point]]] = None
) -> Dict[str, Any]:
    doc: Dict[str, Any] = {
        "schema": SCHEMA_VERSION,
        "kind": "shutter-input",
        "k": len(K) - 1,
        "K": [point_to_doc(p) for p in K],
    }
    if tuples is not None:
        doc["tuples"] = [[point_to_doc(p) for p in t] for t in tuples]
    return doc


def shutter_input_from_doc(
    doc: Any,
) -> Tuple[Tuple[Point, ...], Optional[List[Tuple[Point, ...]]]]:
    _check_schema(doc, "shutter-input")
    K = tuple(point_from_doc(v) for v in _need(doc, "K"))
    k = _need(doc, "k")
    if not isinstance(k, int) or len(K) != k + 1:
        raise DocumentError(f"K size {len(K)} does not match k={k!r}")
    tuples = None
    if "tuples" in doc:
        tuples = [
            tuple(point_from_doc(v) for v in t) for t in doc["tuples"]
        ]
    return K, tuples


def _step_record_to_doc(r: StepRecord) -> Dict[str, Any]:
    return {
        "step": r.step,
        "tuple": [point_to_doc(p) for p in r.tuple],
        "witness": point_to_doc(r.witness),
        "z_new": r.z_new,
        "b_added": [point_to_doc(p) for p in r.b_added],
        "a_added": [point_to_doc(p) for p in r.a_added],
        "a_size": r.a_size,
        "b_size": r.b_size,
        "viewer_absent": r.viewer_absent,
    }


def audit_to_doc(s: ShutterState, seed: Optional[int] = None) -> Dict[str, Any]:
    doc: Dict[str, Any] = {
        "schema": SCHEMA_VERSION,
        "kind": "shutter-audit",
        "k": s.k,
        "K": [point_to_doc(p) for p in s.K],
        "steps": s.step,
        "b0_size": s.b0_size,
        "a_final": [point_to_doc(p) for p in s.A],
        "b_size_final": len(s.B),
        "records": [_step_record_to_doc(r) for r in s.audit],
    }
    if seed is not None:
        doc["seed"] = seed
    return doc


# ---------------------------------------------------------------------------
# canonical bytes


def doc_bytes(doc: Dict[str, Any]) -> bytes:
    return (
        json.dumps(doc, sort_keys=True, separators=(",", ": "), indent=1)
        + "\n"
    ).encode("ascii")


def write_doc(path: str, doc: Dict[str, Any]) -> None:
    with open(path, "wb") as f:
        f.write(doc_bytes(doc))


def read_doc(path: str) -> Dict[str, Any]:
    try:
        with open(path, "rb") as f:
            raw = f.read()
    except OSError as e:
        raise DocumentError(f"cannot read {path}: {e}") from None
    try:
        doc = json.loads(raw)
    except ValueError as e:
        raise DocumentError(f"{path} is not valid JSON: {e}") from None
    if not isinstance(doc, dict):
        raise DocumentError(f"{path} does not hold a JSON object")
    return doc
