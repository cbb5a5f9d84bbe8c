"""Command-line front end.

Commands: gen (build a family member and write its document), verify (run
the no-common-viewer check and sampled witness certification), shutter
(run the axis-screen process with full auditing), render (draw a
construction document as SVG).

Exit codes: 0 all checks pass, 1 a mathematical claim failed verification,
2 usage or input error.
"""

from __future__ import annotations

import argparse
import sys
from typing import List, Optional, Sequence

from . import docio
from .construct import build_family, make_polygon
from .docio import DocumentError
from .kernel import GeometryError
from .render import render_construction
from .shutter import (
    DegenerateK,
    InvariantViolation,
    gen_kset,
    gen_tuples,
    run_schedule,
    verify_history,
)
from .verify import (
    VerificationFailed,
    sample_tuples,
    verify_common_witness,
    verify_targets_blocked,
)

_USAGE_ERRORS = (
    DocumentError,
    DegenerateK,
)


def _parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="vislink",
        description="exact visibility toolkit: generate, verify, simulate, draw",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="generate a family member document")
    g.add_argument("--k", type=int, required=True, help="fan count minus one (>= 2)")
    g.add_argument("--n", type=int, default=2, help="link budget (>= 2)")
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--out", help="document path (stdout when omitted)")
    g.add_argument("--svg-out", help="also draw the construction")

    v = sub.add_parser("verify", help="verify both visibility claims")
    v.add_argument("--in", dest="in_", required=True, help="construction document")
    v.add_argument(
        "--tuples",
        default="100",
        help="sampled tuple count, or path to a tuple-input document",
    )
    v.add_argument("--seed", type=int, default=None, help="sampling seed (default: document seed)")
    v.add_argument("--out", help="write the report document here")
    v.add_argument(
        "--drop-target",
        type=int,
        default=None,
        help="positive control: drop this target and expect a non-empty intersection",
    )

    s = sub.add_parser("shutter", help="run the axis-screen process")
    s.add_argument("--in", dest="in_", help="input document with K (and optional tuples)")
    s.add_argument("--k", type=int, default=None, help="generate K of size k+1 (>= 2)")
    s.add_argument("--steps", type=int, default=10, help="induction steps after the basis")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--out", help="write the audit-log document here")

    r = sub.add_parser("render", help="draw a construction document")
    r.add_argument("--in", dest="in_", required=True, help="construction document")
    r.add_argument("--svg-out", required=True, help="figure path")
    return ap


def _cmd_gen(args) -> int:
    if args.k < 2:
        print("gen: --k must be >= 2", file=sys.stderr)
        return 2
    if args.n < 2:
        print("gen: --n must be >= 2", file=sys.stderr)
        return 2
    c = build_family(make_polygon(args.k, args.seed), args.n)
    doc = docio.construction_to_doc(c)
    if args.out:
        docio.write_doc(args.out, doc)
        print(
            f"gen: k={args.k} n={args.n} seed={args.seed} "
            f"segments={len(c.complex.maximal_segments)} -> {args.out}"
        )
    else:
        sys.stdout.write(docio.doc_bytes(doc).decode("ascii"))
    if args.svg_out:
        with open(args.svg_out, "wb") as f:
            f.write(render_construction(c).encode("ascii"))
    return 0


def _load_tuples(c, value: str, seed: int) -> List[tuple]:
    if value.lstrip("-").isdigit():
        count = int(value)
        if count < 0:
            raise DocumentError("--tuples count must be >= 0")
        return sample_tuples(c.complex, c.k, count, seed)
    doc = docio.read_doc(value)
    docio._check_schema(doc, "tuple-input")
    return [
        tuple(docio.point_from_doc(p) for p in t)
        for t in docio._need(doc, "tuples")
    ]


def _cmd_verify(args) -> int:
    c = docio.construction_from_doc(docio.read_doc(args.in_))
    seed = args.seed if args.seed is not None else c.polygon.seed

    if args.drop_target is not None:
        rep = verify_targets_blocked(c, drop_index=args.drop_target)
        ok = not rep.final.is_empty()
        if args.out:
            docio.write_doc(
                args.out,
                {
                    "schema": docio.SCHEMA_VERSION,
                    "kind": "drop-control-report",
                    "k": c.k,
                    "n": c.n,
                    "dropped_target": args.drop_target,
                    "report": docio.emptiness_report_to_doc(rep),
                    "nonempty": ok,
                },
            )
        if not ok:
            print(
                f"verify: control FAILED, intersection empty without target "
                f"{args.drop_target}",
                file=sys.stderr,
            )
            return 1
        print(
            f"verify: control ok, non-empty intersection without target "
            f"{args.drop_target}"
        )
        return 0

    emptiness = verify_targets_blocked(c)  # raises VerificationFailed if non-empty
    tuples = _load_tuples(c, args.tuples, seed)
    witnesses = [verify_common_witness(c, t) for t in tuples]
    failures = sum(1 for w in witnesses if w.method != "proof-formula")
    if args.out:
        docio.write_doc(
            args.out,
            docio.verify_report_doc(c.k, c.n, seed, emptiness, witnesses),
        )
    if failures:
        print(
            f"verify: {failures}/{len(witnesses)} tuples needed the "
            "exhaustive fallback; the proof formula failed",
            file=sys.stderr,
        )
        return 1
    print(
        f"verify: targets share no viewer; {len(witnesses)} tuples "
        f"certified by formula witnesses"
    )
    return 0


def _cmd_shutter(args) -> int:
    if args.in_:
        K, tuples = docio.shutter_input_from_doc(docio.read_doc(args.in_))
        if tuples is None:
            tuples = gen_tuples(len(K) - 1, args.steps + 1, args.seed)
    elif args.k is not None:
        if args.k < 2:
            print("shutter: --k must be >= 2", file=sys.stderr)
            return 2
        if args.steps < 0:
            print("shutter: --steps must be >= 0", file=sys.stderr)
            return 2
        K = gen_kset(args.k, args.seed)
        tuples = gen_tuples(args.k, args.steps + 1, args.seed)
    else:
        print("shutter: need --in or --k", file=sys.stderr)
        return 2
    state = run_schedule(K, tuples)  # raises InvariantViolation on failure
    if not verify_history(state):
        print("shutter: a historical witness no longer verifies", file=sys.stderr)
        return 1
    if args.out:
        docio.write_doc(args.out, docio.audit_to_doc(state, args.seed))
    print(
        f"shutter: k={state.k} steps={state.step} |A|={len(state.A)} "
        f"|B|={len(state.B)} records={len(state.audit)} all invariants held"
    )
    return 0


def _cmd_render(args) -> int:
    c = docio.construction_from_doc(docio.read_doc(args.in_))
    with open(args.svg_out, "wb") as f:
        f.write(render_construction(c).encode("ascii"))
    print(
        f"render: {len(c.complex.maximal_segments)} segments, "
        f"{len(c.polygon.vertices)} vertices -> {args.svg_out}"
    )
    return 0


_COMMANDS = {
    "gen": _cmd_gen,
    "verify": _cmd_verify,
    "shutter": _cmd_shutter,
    "render": _cmd_render,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        args = _parser().parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2
    try:
        return _COMMANDS[args.command](args)
    except (VerificationFailed, InvariantViolation) as e:
        print(f"{args.command}: claim failed: {e}", file=sys.stderr)
        return 1
    except _USAGE_ERRORS as e:
        print(f"{args.command}: {e}", file=sys.stderr)
        return 2
    except GeometryError as e:
        # remaining domain errors (bad parameters, failed construction)
        print(f"{args.command}: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
