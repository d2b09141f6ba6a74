"""Command-line interface: polynomial emission, classification,
isoperiodicity, numeric tracing, Painleve verification, figure/CSV export.

Exit codes: 0 success, 1 failed verification, 2 flag errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import verify
from .cayley import locus, locus_at_p
from .classify import Center, isoperiodic_n, pair_classify
from .geometry import Circle, Parabola, poncelet_trace
from .painleve import sample_family, hitchin_residual
from .polycore import format_poly

VIEW = 3.0  # SVG viewport is [-3, 3]^2
PARABOLA_SAMPLES = 400


def parse_rational(text: str) -> Fraction:
    """`num/den` or a decimal string, converted exactly."""
    return Fraction(text)


def parse_center(text: str) -> Center:
    try:
        xs, ys = text.split(",")
        return Center(parse_rational(xs), parse_rational(ys))
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"bad center {text!r}: {exc}") from exc


def _svg_header() -> list[str]:
    return [
        '<svg xmlns="http://www.w3.org/2000/svg" width="600" height="600" '
        f'viewBox="{-VIEW} {-VIEW} {2 * VIEW} {2 * VIEW}">',
        f'<g transform="scale(1,-1)">',
    ]


def _svg_footer() -> list[str]:
    return ["</g>", "</svg>"]


def _svg_parabola(p: float) -> str:
    pts = []
    for i in range(PARABOLA_SAMPLES + 1):
        y = -4.0 + 8.0 * i / PARABOLA_SAMPLES
        x = (y * y - p * p) / (2 * p)
        pts.append(f"{x:.5f},{y:.5f}")
    return f'<polyline fill="none" stroke="green" stroke-width="0.02" points="{" ".join(pts)}"/>'


def trace_svg(center: tuple[float, float], p: float, vertices) -> str:
    lines = _svg_header()
    lines.append(
        f'<circle cx="{center[0]:.5f}" cy="{center[1]:.5f}" r="1" '
        'fill="none" stroke="blue" stroke-width="0.02"/>'
    )
    lines.append(_svg_parabola(p))
    pts = " ".join(f"{v[0].real:.6f},{v[1].real:.6f}" for v in vertices)
    lines.append(
        f'<polygon fill="none" stroke="red" stroke-width="0.02" points="{pts}"/>'
    )
    lines.extend(_svg_footer())
    return "\n".join(lines)


def marching_squares(f, grid: int, lo: float = -VIEW, hi: float = VIEW) -> list[tuple[float, float]]:
    """Zero-crossing points of f(x, y) on a grid, by edge interpolation."""
    h = (hi - lo) / grid
    vals = [[f(lo + i * h, lo + j * h) for j in range(grid + 1)] for i in range(grid + 1)]
    points: list[tuple[float, float]] = []

    def cross(x1, y1, v1, x2, y2, v2):
        if v1 == 0.0:
            points.append((x1, y1))
            return
        if (v1 < 0) == (v2 < 0):
            return
        t = v1 / (v1 - v2)
        points.append((x1 + t * (x2 - x1), y1 + t * (y2 - y1)))

    for i in range(grid):
        for j in range(grid):
            x0, y0 = lo + i * h, lo + j * h
            x1, y1 = x0 + h, y0 + h
            cross(x0, y0, vals[i][j], x1, y0, vals[i + 1][j])
            cross(x0, y0, vals[i][j], x0, y1, vals[i][j + 1])
    return points


def locus_svg(points) -> str:
    lines = _svg_header()
    for x, y in points:
        lines.append(f'<circle cx="{x:.5f}" cy="{y:.5f}" r="0.012" fill="black"/>')
    lines.extend(_svg_footer())
    return "\n".join(lines)


def _emit(out: str | None, text: str) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def cmd_cayley(args) -> int:
    if args.p is not None:
        poly = locus_at_p(args.n, args.p)
        removed = locus(args.n).divisors_removed
    else:
        loc = locus(args.n)
        poly, removed = loc.canonical, loc.divisors_removed
    if args.format == "json":
        _emit(None, json.dumps({
            "n": args.n,
            "divisors_removed": list(removed),
            "canonical": format_poly(poly),
        }))
    else:
        _emit(None, format_poly(poly))
    return 0


def cmd_classify(args) -> int:
    result = pair_classify(args.n, args.center)
    _emit(None, json.dumps(result.to_dict()))
    return 0


def cmd_isoperiodic(args) -> int:
    n = isoperiodic_n(args.center)
    _emit(None, json.dumps({"isoperiodic_n": n}))
    return 0


def cmd_trace(args) -> int:
    circle = Circle((complex(args.center.x), complex(args.center.y)))
    result = poncelet_trace(circle, Parabola(float(args.p)), complex(args.start), args.n)
    payload = {
        "closed": result.closed,
        "closure_residual": result.closure_residual,
        "steps": result.steps,
        "vertices": [[[v[0].real, v[0].imag], [v[1].real, v[1].imag]] for v in result.vertices],
        "tangency_params": [[t.real, t.imag] for t in result.tangency_params],
    }
    _emit(None, json.dumps(payload))
    if args.svg:
        real = all(abs(v[0].imag) + abs(v[1].imag) < 1e-7 for v in result.vertices)
        if real:
            _emit(args.svg, trace_svg((float(args.center.x), float(args.center.y)),
                                      float(args.p), result.vertices))
        else:
            print("vertices are not real; SVG not written", file=sys.stderr)
    return 0


def cmd_locus(args) -> int:
    curve = locus_at_p(args.n, args.p)
    f = lambda x, y: float(curve.evaluate(1, x, y))  # p already substituted
    points = marching_squares(f, args.grid)
    if args.format == "svg":
        _emit(args.out, locus_svg(points))
    else:
        rows = ["x,y"] + [f"{x:.12g},{y:.12g}" for x, y in points]
        _emit(args.out, "\n".join(rows) + "\n")
    return 0


def cmd_painleve(args) -> int:
    family = f"N{args.family}"
    points, _ = sample_family(family, [complex(v) for v in args.p])
    rows = []
    for pt in points:
        if family == "N3":
            rel = hitchin_residual(pt.x, pt.y)
        else:
            rel = abs(pt.y**2 - 2 * pt.x * pt.y + pt.x)
        rows.append({
            "p": pt.p.real, "x": pt.x.real, "y0": pt.y0.real, "y": pt.y.real,
            "res0": pt.residual_y0, "res1": pt.residual_y, "rel": rel,
        })
    if args.format == "json":
        _emit(None, json.dumps(rows))
    else:
        header = "p,x,y0,y,res0,res1,rel"
        lines = [header] + [
            f'{r["p"]:.12g},{r["x"]:.12g},{r["y0"]:.12g},{r["y"]:.12g},'
            f'{r["res0"]:.3e},{r["res1"]:.3e},{r["rel"]:.3e}'
            for r in rows
        ]
        _emit(None, "\n".join(lines) + "\n")
    return 0


def cmd_verify(args) -> int:
    ok = verify.run_all(verbose=True)
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="poncelet")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    c = sub.add_parser("cayley", help="print the canonical locus polynomial")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--p", type=parse_rational)
    c.add_argument("--format", choices=("text", "json"), default="text")
    c.set_defaults(func=cmd_cayley)

    c = sub.add_parser("classify", help="pair classification for a center")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--center", type=parse_center, required=True)
    c.set_defaults(func=cmd_classify)

    c = sub.add_parser("isoperiodic", help="isoperiodic n for a center, if any")
    c.add_argument("--center", type=parse_center, required=True)
    c.set_defaults(func=cmd_isoperiodic)

    c = sub.add_parser("trace", help="numeric tangent-chord trace")
    c.add_argument("--center", type=parse_center, required=True)
    c.add_argument("--p", type=float, required=True)
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--start", type=float, default=0.8)
    c.add_argument("--svg", help="write an SVG overlay to this file")
    c.set_defaults(func=cmd_trace)

    c = sub.add_parser("locus", help="rasterize the locus curve at fixed p")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--p", type=parse_rational, required=True)
    c.add_argument("--grid", type=int, default=512)
    c.add_argument("--format", choices=("csv", "svg"), default="csv")
    c.add_argument("--out")
    c.set_defaults(func=cmd_locus)

    c = sub.add_parser("painleve", help="evaluate and verify PVI solution points")
    c.add_argument("--family", type=int, choices=(3, 4), required=True)
    c.add_argument("--p", type=float, nargs="+", required=True)
    c.add_argument("--format", choices=("csv", "json"), default="csv")
    c.set_defaults(func=cmd_painleve)

    c = sub.add_parser("verify-identities", help="run all golden polynomial identities")
    c.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except Exception as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
