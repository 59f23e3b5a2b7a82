"""Command-line front end: branch evaluation, figure datasets, verification.

Every command is deterministic: the same invocation produces byte-identical
output.  Exit codes: 0 success, 1 verification failure, 2 usage or value
error, 3 I/O error.
"""

from __future__ import annotations

import argparse
import math
import re
import sys

import numpy as np

from .branches import (
    branch_arrays,
    branch_values,
    cosine_approximation_many,
    phi1,
    sample_branches,
)
from .output import (
    DEFAULT_PRECISION,
    MAX_PRECISION,
    MIN_PRECISION,
    OutputSpec,
    csv_text,
    format_number,
    json_text,
    svg_text,
    write_text,
)
from .quartic import TWO_PI, reduce_angle
from .similarity import similarity_set_2d, similarity_set_3d, sum_similarity_sets_2d
from .triangles import (
    TriangleVec,
    UnitTriangleParams,
    similar_triangle,
    tri_angle,
    tri_norm,
    triangle_similarity_set,
    unit_triangle,
    vertex_angle,
)
from .verify import render_report, run_all_checks

POLAR_SELECTORS = (
    "phi1", "phi2", "phi3", "phi4", "sum12", "sum23", "sum13", "sum123",
)

# flags whose value may start with a minus sign; joined to --flag=value form
# before parsing, since argparse otherwise reads the value as an option
_NEGATIVE_VALUE_FLAGS = frozenset(
    {
        "--deg", "--rad", "--start", "--stop", "--vector", "--a1", "--a2",
        "--verts", "--translate", "--lambda-deg", "--phi-deg",
    }
)
_NEGATIVE_VALUE = re.compile(r"^-[0-9.]")


def _precision_arg(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"precision must be an integer, got {text!r}")
    if not MIN_PRECISION <= value <= MAX_PRECISION:
        raise argparse.ArgumentTypeError(
            f"precision must lie in [{MIN_PRECISION}, {MAX_PRECISION}], got {value}"
        )
    return value


def _parse_vector_arg(text: str, dim: int, name: str) -> list[float]:
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != dim or "" in parts:
        raise ValueError(f"{name} must be {dim} comma-separated numbers, got {text!r}")
    try:
        return [float(p) for p in parts]
    except ValueError as exc:
        raise ValueError(f"{name} must be numeric, got {text!r}") from exc


def _parse_verts_arg(text: str) -> list[list[float]]:
    chunks = text.split()
    if len(chunks) != 3:
        raise ValueError(
            f"--verts must name three x,y vertices separated by spaces, got {text!r}"
        )
    return [_parse_vector_arg(chunk, 2, "vertex") for chunk in chunks]


def _parse_phi_degrees(text: str) -> list[float]:
    text = text.strip()
    if ":" in text:
        parts = text.split(":")
        if len(parts) != 3:
            raise ValueError(f"phi range must be start:step:stop, got {text!r}")
        try:
            start, step, stop = (float(p) for p in parts)
        except ValueError as exc:
            raise ValueError(f"phi range must be numeric, got {text!r}") from exc
        if step <= 0:
            raise ValueError(f"phi range step must be positive, got {step}")
        if stop < start:
            raise ValueError("phi range stop must not precede start")
        n = int(math.floor((stop - start) / step + 1e-9)) + 1
        return [start + step * k for k in range(n)]
    try:
        values = [float(p) for p in text.split(",") if p.strip()]
    except ValueError as exc:
        raise ValueError(f"phi list must be numeric, got {text!r}") from exc
    if not values:
        raise ValueError("phi list is empty")
    return values


def _angle_range(args) -> tuple[float, float]:
    start = args.start if args.start is not None else 0.0
    stop = args.stop
    if args.deg:
        start = math.radians(start)
        stop = math.radians(stop) if stop is not None else TWO_PI
    elif stop is None:
        stop = TWO_PI
    return float(start), float(stop)


def _fmt_complex(z: complex, precision: int) -> str:
    sign = "+" if z.imag >= 0 else "-"
    return (
        f"{format_number(z.real, precision)} {sign} "
        f"{format_number(abs(z.imag), precision)}j"
    )


def _emit(args, command: str, parameters: dict, header, rows, svg_builder=None):
    spec = OutputSpec(fmt=args.fmt, path=args.out, precision=args.precision)
    if spec.fmt == "csv":
        text = csv_text(header, rows, spec.precision)
    elif spec.fmt == "json":
        text = json_text(command, parameters, header, rows, spec.precision)
    else:
        text = svg_text(svg_builder(), spec.precision)
    write_text(text, spec.path)


def _cmd_eval(args):
    alpha = reduce_angle(math.radians(args.deg) if args.deg is not None else args.rad)
    vals = branch_values(alpha)
    if args.fmt == "text":
        p = args.precision
        lines = [
            f"alpha = {format_number(alpha, p)} rad "
            f"({format_number(math.degrees(alpha), p)} deg)",
            f"phi1 = {format_number(vals.phi1, p)}",
            f"phi2 = {format_number(vals.phi2, p)}",
            f"phi3 = {_fmt_complex(vals.phi3, p)}",
            f"phi4 = {_fmt_complex(vals.phi4, p)}",
        ]
        write_text("\n".join(lines) + "\n", args.out)
        return
    header = ["alpha", "phi1", "phi2", "re_phi3", "im_phi3", "re_phi4", "im_phi4"]
    row = [
        alpha, vals.phi1, vals.phi2,
        vals.phi3.real, vals.phi3.imag, vals.phi4.real, vals.phi4.imag,
    ]
    _emit(args, "eval", {"alpha_rad": alpha}, header, [row])


def _cmd_branches(args):
    start, stop = _angle_range(args)
    table = sample_branches(start, stop, args.count)
    fit = cosine_approximation_many(table.alphas)
    header = ["alpha", "phi1", "phi2", "re_phi3", "im_phi3", "cosine_approx"]
    rows = [
        [a, v1, v2, w.real, w.imag, ca]
        for a, v1, v2, w, ca in zip(
            table.alphas, table.phi1, table.phi2, table.phi3, fit
        )
    ]

    def curves():
        x = table.alphas
        return [
            ("polyline", np.column_stack([x, table.phi1])),
            ("polyline", np.column_stack([x, table.phi2])),
            ("polyline", np.column_stack([x, table.phi3.real])),
            ("polyline", np.column_stack([x, table.phi3.imag])),
            ("polyline", np.column_stack([x, fit])),
        ]

    params = {"count": args.count, "start": start, "stop": stop}
    _emit(args, "branches", params, header, rows, curves)


def _cmd_polar(args):
    start, stop = _angle_range(args)
    table = sample_branches(start, stop, args.count)
    p1, p2, p3 = table.phi1, table.phi2, table.phi3
    w = {
        "phi1": p1 + 0j,
        "phi2": p2 + 0j,
        "phi3": p3,
        "phi4": np.conj(p3),
        "sum12": p1 + p2 + 0j,
        "sum23": p2 + p3,
        "sum13": p1 + p3,
        "sum123": p1 + p2 + p3,
    }[args.selector]
    header = ["alpha", "radius", "angle"]
    rows = [
        [a, r, t]
        for a, r, t in zip(table.alphas, np.abs(w), np.angle(w))
    ]
    params = {
        "selector": args.selector, "count": args.count,
        "start": start, "stop": stop,
    }
    _emit(
        args, "polar", params, header, rows,
        lambda: [("polyline", np.column_stack([w.real, w.imag]))],
    )


def _cmd_sim2d(args):
    a = _parse_vector_arg(args.vector, 2, "--vector")
    samples = similarity_set_2d(a, args.count)
    header = ["phi", "x", "y", "ggr", "residual"]
    rows = [[s.phi, s.vector[0], s.vector[1], s.ggr, s.residual] for s in samples]
    params = {"vector": a, "count": args.count}
    _emit(
        args, "sim2d", params, header, rows,
        lambda: [("polygon", np.array([s.vector for s in samples]))],
    )


def _cmd_sumsets(args):
    a1 = _parse_vector_arg(args.a1, 2, "--a1")
    a2 = _parse_vector_arg(args.a2, 2, "--a2")
    result = sum_similarity_sets_2d(a1, a2, args.count)
    samples = result.samples
    header = ["phi", "x", "y", "ggr", "residual"]
    rows = [[s.phi, s.vector[0], s.vector[1], s.ggr, s.residual] for s in samples]
    params = {
        "a1": a1, "a2": a2, "count": args.count,
        "max_sum_residual": result.max_sum_residual,
    }
    _emit(
        args, "sumsets", params, header, rows,
        lambda: [("polygon", np.array([s.vector for s in samples]))],
    )


def _cmd_sim3d(args):
    a = _parse_vector_arg(args.vector, 3, "--vector")
    samples = similarity_set_3d(a, args.nphi, args.npsi)
    header = ["phi", "psi", "x", "y", "z", "ggr", "residual"]
    rows = [
        [s.phi, s.psi, s.vector[0], s.vector[1], s.vector[2], s.ggr, s.residual]
        for s in samples
    ]

    def rings():
        coords = np.array([s.vector for s in samples])
        u = (coords[:, 0] - coords[:, 1]) * math.cos(math.pi / 6)
        v = coords[:, 2] - (coords[:, 0] + coords[:, 1]) * math.sin(math.pi / 6)
        points = np.column_stack([u, v])
        return [
            ("polygon", points[k * args.npsi : (k + 1) * args.npsi])
            for k in range(args.nphi)
        ]

    params = {"vector": a, "n_phi": args.nphi, "n_psi": args.npsi}
    _emit(args, "sim3d", params, header, rows, rings)


def _cmd_triangle(args):
    verts = _parse_verts_arg(args.verts)
    v = TriangleVec(*verts)
    lam = math.radians(args.lambda_deg)
    phi_degrees = _parse_phi_degrees(args.phi_deg)
    bad = [p for p in phi_degrees if not (math.isfinite(p) and 0.0 < p < 180.0)]
    if bad:
        raise ValueError(
            f"phi-deg values must lie in (0, 180) exclusive; offending values: {bad}"
        )
    shift = _parse_vector_arg(args.translate, 2, "--translate")
    phi_list = [math.radians(p) for p in phi_degrees]
    translated = triangle_similarity_set(v, phi_list, lam, shift)

    origin_angle = vertex_angle(v)
    header = [
        "kind", "phi_deg", "ax", "ay", "bx", "by", "cx", "cy",
        "theta_deg", "ggr", "vertex_angle_deg", "ggr_at_vertex_angle", "residual",
    ]
    rows = [
        [
            "original", None,
            v.v_a[0], v.v_a[1], v.v_b[0], v.v_b[1], v.v_c[0], v.v_c[1],
            None, None,
            math.degrees(origin_angle), phi1(origin_angle), None,
        ]
    ]
    nv = tri_norm(v)
    for phi_deg, phi, s in zip(phi_degrees, phi_list, translated):
        params = UnitTriangleParams(phi, lam)
        theta = tri_angle(v, unit_triangle(params))
        s0 = similar_triangle(v, params)
        summed = TriangleVec(s0.v_a + v.v_a, s0.v_b + v.v_b, s0.v_c + v.v_c)
        residual = abs(tri_norm(summed) * nv - tri_norm(s0) ** 2)
        angle = vertex_angle(s0)
        rows.append(
            [
                "similar", phi_deg,
                s.v_a[0], s.v_a[1], s.v_b[0], s.v_b[1], s.v_c[0], s.v_c[1],
                math.degrees(theta), phi1(theta),
                math.degrees(angle), phi1(angle), residual,
            ]
        )

    params = {
        "verts": verts, "lambda_deg": args.lambda_deg,
        "phi_deg": phi_degrees, "translate": shift,
    }
    _emit(
        args, "triangle", params, header, rows,
        lambda: [("polygon", np.array(t.vertices())) for t in [v, *translated]],
    )


def _cmd_verify(args):
    report = run_all_checks()
    if args.fmt == "text":
        write_text(render_report(report), args.out)
    else:
        header = ["check", "residual", "tolerance", "status", "note"]
        rows = [
            [
                c.name, c.residual,
                None if math.isinf(c.tolerance) else c.tolerance,
                "PASS" if c.passed else "FAIL", c.note,
            ]
            for c in report.checks
        ]
        _emit(args, "verify", {"passed": report.passed}, header, rows)
    if not report.passed:
        failing = ", ".join(c.name for c in report.checks if not c.passed)
        print(f"goldenvec: verification failed: {failing}", file=sys.stderr)
        return 1
    return 0


def _add_output_options(parser, formats, default_fmt):
    parser.add_argument(
        "--out", metavar="PATH", default=None,
        help="write to PATH instead of standard output",
    )
    parser.add_argument(
        "--format", dest="fmt", choices=formats, default=default_fmt,
        help=f"output format (default {default_fmt})",
    )
    parser.add_argument(
        "--precision", type=_precision_arg, default=DEFAULT_PRECISION,
        help=f"significant digits, {MIN_PRECISION} to {MAX_PRECISION} (default "
        f"{DEFAULT_PRECISION})",
    )


def _add_range_options(parser, default_count):
    parser.add_argument(
        "--count", type=int, default=default_count,
        help=f"grid points, endpoints included (default {default_count})",
    )
    parser.add_argument(
        "--start", type=float, default=None,
        help="range start (default 0)",
    )
    parser.add_argument(
        "--stop", type=float, default=None,
        help="range stop (default one full turn)",
    )
    parser.add_argument(
        "--deg", action="store_true",
        help="interpret --start/--stop as degrees",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="goldenvec",
        description="Generalized golden ratio toolkit: quartic branch values, "
        "similarity-set datasets, triangle sets, verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate all four branch values at one angle")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--deg", type=float, help="angle in degrees")
    group.add_argument("--rad", type=float, help="angle in radians")
    _add_output_options(p, ("text", "csv", "json"), "text")
    p.set_defaults(handler=_cmd_eval)

    p = sub.add_parser("branches", help="sample all branches over an angle range")
    _add_range_options(p, 4801)
    _add_output_options(p, ("csv", "json", "svg"), "csv")
    p.set_defaults(handler=_cmd_branches)

    p = sub.add_parser("polar", help="polar curve of one branch or branch sum")
    p.add_argument(
        "--selector", choices=POLAR_SELECTORS, default="phi1",
        help="branch or pairwise sum to plot (default phi1)",
    )
    _add_range_options(p, 361)
    _add_output_options(p, ("csv", "json", "svg"), "csv")
    p.set_defaults(handler=_cmd_polar)

    p = sub.add_parser("sim2d", help="2-D similarity set of a vector")
    p.add_argument("--vector", required=True, help="components as x,y")
    p.add_argument(
        "--count", type=int, default=128,
        help="number of sampled directions (default 128)",
    )
    _add_output_options(p, ("csv", "json", "svg"), "csv")
    p.set_defaults(handler=_cmd_sim2d)

    p = sub.add_parser("sumsets", help="similarity set of a sum of two vectors")
    p.add_argument("--a1", required=True, help="first vector as x,y")
    p.add_argument("--a2", required=True, help="second vector as x,y")
    p.add_argument(
        "--count", type=int, default=128,
        help="number of sampled directions (default 128)",
    )
    _add_output_options(p, ("csv", "json", "svg"), "csv")
    p.set_defaults(handler=_cmd_sumsets)

    p = sub.add_parser("sim3d", help="3-D similarity set of a vector")
    p.add_argument("--vector", required=True, help="components as x,y,z")
    p.add_argument(
        "--nphi", type=int, default=257,
        help="polar grid points on [0, pi], endpoints included (default 257)",
    )
    p.add_argument(
        "--npsi", type=int, default=512,
        help="azimuth grid points per turn, stop excluded (default 512)",
    )
    _add_output_options(p, ("csv", "json", "svg"), "csv")
    p.set_defaults(handler=_cmd_sim3d)

    p = sub.add_parser("triangle", help="similar-triangle set of a triangle")
    p.add_argument(
        "--verts", required=True,
        help='three vertices as "ax,ay bx,by cx,cy"',
    )
    p.add_argument(
        "--lambda-deg", type=float, required=True,
        help="inter-side angle of the unit triangle, degrees in (0, 180)",
    )
    p.add_argument(
        "--phi-deg", required=True,
        help='rotation angles, degrees: a list "20,40,70" or a range "10:5:120"',
    )
    p.add_argument(
        "--translate", default="0,0",
        help="shift applied to every similar triangle, as x,y (default 0,0)",
    )
    _add_output_options(p, ("csv", "json", "svg"), "csv")
    p.set_defaults(handler=_cmd_triangle)

    p = sub.add_parser("verify", help="run every invariant check; exit 0 iff all pass")
    _add_output_options(p, ("text", "csv", "json"), "text")
    p.set_defaults(handler=_cmd_verify)

    return parser


def _join_negative_values(argv: list[str]) -> list[str]:
    joined = []
    i = 0
    while i < len(argv):
        token = argv[i]
        if (
            token in _NEGATIVE_VALUE_FLAGS
            and i + 1 < len(argv)
            and _NEGATIVE_VALUE.match(argv[i + 1])
        ):
            joined.append(f"{token}={argv[i + 1]}")
            i += 2
        else:
            joined.append(token)
            i += 1
    return joined


def main(argv=None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    parser = build_parser()
    args = parser.parse_args(_join_negative_values(list(argv)))
    try:
        result = args.handler(args)
    except (ValueError, ZeroDivisionError) as exc:
        print(f"goldenvec: error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"goldenvec: i/o error: {exc}", file=sys.stderr)
        return 3
    except RuntimeError as exc:
        print(f"goldenvec: {exc}", file=sys.stderr)
        return 1
    return 0 if result is None else int(result)
