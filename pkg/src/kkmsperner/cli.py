"""Command-line interface.

Instances travel as canonical JSON on stdin/stdout, so commands compose::

    kkmsperner fixture fig1 | kkmsperner find-cl
    kkmsperner gen-subdivision --n 3 --m 2 | kkmsperner validate --mode full

Exit status is 0 on success, 1 when an input fails validation and 2 on
usage errors.
"""

from __future__ import annotations

import argparse
import sys

from . import io
from .fixedpoint import MAPS, approximate_fixed_point
from .geometry import bpoint, format_rational, parse_rational
from .kkm import (
    NotInIntersection,
    build_cover,
    extract_cl_simplex,
    intersection_point,
    member,
    naive_cover_check,
    verify_covering_certificate,
    verify_covering_sampled,
)
from .labeling import labeling_from_map, random_sperner_labeling, validate_labeling
from .sperner import InvalidInstanceError, find_completely_labeled
from .subdivision import (
    ValidationReport,
    barycentric_refine,
    edgewise_subdivision,
    trivial_subdivision,
    validate,
)
from .svg import UnsupportedDimensionError, render_svg
from .fixtures import fig1

EXIT_OK, EXIT_INVALID, EXIT_USAGE = 0, 1, 2


class Failure(Exception):
    """Abort with exit status 1 and a JSON payload on stdout."""

    def __init__(self, payload: dict):
        self.payload = payload
        super().__init__(payload.get("error", ""))


def _int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _point(text: str):
    try:
        return bpoint(parse_rational(t) for t in text.split(","))
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _read(args):
    text = open(args.input).read() if args.input else sys.stdin.read()
    try:
        return io.parse(text)
    except io.DocumentError as exc:
        raise Failure({"error": str(exc)})


def _read_labeled(args):
    sub, labels = _read(args)
    if labels is None:
        raise Failure({"error": "instance has no labels; run `label` first"})
    return sub, labels


def _report(report: ValidationReport) -> dict:
    if not report.passed:
        raise Failure(report.to_dict())
    return report.to_dict()


def cmd_gen_subdivision(args):
    if args.scheme == "edgewise":
        sub = edgewise_subdivision(args.n, args.m)
    else:
        sub = trivial_subdivision(args.n)
        for _ in range(args.m):
            sub = barycentric_refine(sub)
    return io.serialize(sub)


def cmd_label(args):
    sub, _ = _read(args)
    if args.map is not None:
        labels = labeling_from_map(sub, MAPS[args.map])
    else:
        labels = random_sperner_labeling(sub, args.seed)
    return io.serialize(sub, labels)


def cmd_validate(args):
    sub, labels = _read(args)
    report = validate(sub, args.mode)
    if labels is not None:
        report = ValidationReport(report.mode, report.violations + validate_labeling(sub, labels).violations)
    out = _report(report)
    out["cells"] = len(sub.cells)
    return io.dumps(out)


def cmd_find_cl(args):
    return io.dumps(find_completely_labeled(*_read_labeled(args)).to_dict())


def cmd_build_cover(args):
    return io.dumps(build_cover(*_read_labeled(args)).to_dict())


def cmd_member(args):
    sub, labels = _read_labeled(args)
    w = member(build_cover(sub, labels), sub, args.label, args.point)
    return io.dumps(w.to_dict() if w else {"member": False, "label": args.label})


def cmd_verify_cover(args):
    sub, labels = _read_labeled(args)
    if args.sample:
        if args.J is None or args.denom is None:
            raise Failure({"error": "--sample needs --J and --denom"})
        cover = build_cover(sub, labels)
        return io.dumps(_report(verify_covering_sampled(cover, sub, args.J, args.denom)))
    cover = build_cover(sub, labels, check=False)
    return io.dumps(_report(verify_covering_certificate(cover, sub, labels)))


def cmd_intersect(args):
    x, witnesses = intersection_point(*_read_labeled(args))
    return io.dumps({
        "point": [format_rational(c) for c in x],
        "witnesses": [w.to_dict() for w in witnesses],
    })


def cmd_extract(args):
    sub, labels = _read_labeled(args)
    try:
        cell = extract_cl_simplex(build_cover(sub, labels), sub, labels, args.point)
    except NotInIntersection as exc:
        raise Failure({"error": "NotInIntersection", "label": exc.label, "detail": str(exc)})
    return io.dumps({"cell": list(cell)})


def cmd_naive_check(args):
    return io.dumps(naive_cover_check(*_read_labeled(args)).to_dict())


def cmd_fixpoint(args):
    trace = approximate_fixed_point(MAPS[args.map], args.n, args.schedule)
    return "".join(io.dumps(step.to_dict()) for step in trace)


def cmd_render_svg(args):
    sub, labels = _read(args)
    try:
        return render_svg(sub, labels, overlay=args.overlay)
    except UnsupportedDimensionError as exc:
        raise Failure({"error": str(exc)})


def cmd_fixture(args):
    return io.serialize(*fig1())


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="kkmsperner", description="Sperner labelings and KKM covers, exactly.")
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", help="write output here instead of stdout")
    reads = argparse.ArgumentParser(add_help=False, parents=[common])
    reads.add_argument("--input", "-i", help="read the instance from this file instead of stdin")

    p = sub.add_parser("gen-subdivision", parents=[common], help="generate a subdivision")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True, help="resolution (edgewise) or refinement depth (barycentric)")
    p.add_argument("--scheme", choices=["edgewise", "barycentric"], default="edgewise")
    p.set_defaults(func=cmd_gen_subdivision)

    p = sub.add_parser("label", parents=[reads], help="attach a Sperner labeling")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--seed", type=int)
    g.add_argument("--map", choices=sorted(MAPS))
    p.set_defaults(func=cmd_label)

    p = sub.add_parser("validate", parents=[reads], help="validate subdivision (and labels if present)")
    p.add_argument("--mode", choices=["fast", "full"], default="full")
    p.set_defaults(func=cmd_validate)

    for name, func, help_ in [
        ("find-cl", cmd_find_cl, "list completely labeled cells"),
        ("build-cover", cmd_build_cover, "emit the cover pieces"),
        ("intersect", cmd_intersect, "a point of every cover set, with witnesses"),
        ("naive-check", cmd_naive_check, "vertices fooling the naive cover"),
    ]:
        p = sub.add_parser(name, parents=[reads], help=help_)
        p.set_defaults(func=func)

    p = sub.add_parser("member", parents=[reads], help="decide membership in a cover set")
    p.add_argument("--label", type=int, required=True)
    p.add_argument("--point", type=_point, required=True, help="comma-separated rationals, e.g. 1/2,0,1/2")
    p.set_defaults(func=cmd_member)

    p = sub.add_parser("verify-cover", parents=[reads], help="check the covering condition")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--cert", action="store_true")
    g.add_argument("--sample", action="store_true")
    p.add_argument("--J", type=_int_list)
    p.add_argument("--denom", type=int)
    p.set_defaults(func=cmd_verify_cover)

    p = sub.add_parser("extract", parents=[reads], help="completely labeled cell from a point of every cover set")
    p.add_argument("--point", type=_point, required=True)
    p.set_defaults(func=cmd_extract)

    p = sub.add_parser("fixpoint", parents=[common], help="approximate a fixed point of a built-in map")
    p.add_argument("--map", choices=sorted(MAPS), required=True)
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--schedule", type=_int_list, required=True)
    p.set_defaults(func=cmd_fixpoint)

    p = sub.add_parser("render-svg", parents=[reads], help="draw an n=3 instance")
    p.add_argument("--overlay", type=int, help="shade the cover set for this label")
    p.set_defaults(func=cmd_render_svg)

    p = sub.add_parser("fixture", parents=[common], help="emit a built-in instance")
    p.add_argument("name", choices=["fig1"])
    p.set_defaults(func=cmd_fixture)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        text = args.func(args)
    except Failure as exc:
        sys.stdout.write(io.dumps(exc.payload))
        return EXIT_INVALID
    except InvalidInstanceError as exc:
        sys.stdout.write(io.dumps(exc.report.to_dict()))
        return EXIT_INVALID
    except ValueError as exc:
        sys.stderr.write(f"kkmsperner: error: {exc}\n")
        return EXIT_USAGE
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
