"""Command-line front end: ``weylorbit <command> --algebra C2 --M 4 --type Es+ ...``.

Exit codes: 0 success, 1 validation error, 2 verification failure.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from math import lcm

import numpy as np

from . import io as wio
from .affine import choose_reflection, apply_generator, in_boundary_h, in_simplex
from .errors import BudgetExceeded, DomainError, NoClosedForm
from .grids import composite_label_set, composite_point_set, count_closed_form, count_enumerated
from .orbitfn import FunctionType, kernel_matrix
from .rootdata import build_root_system, orthonormal_embedding
from .transforms import (DEFAULT_BUDGET, SampleSet, forward, forward_hartley, gram_matrix,
                         interpolate, parseval_check)
from .weyl import Sign

EXIT_OK, EXIT_INVALID, EXIT_FAILED = 0, 1, 2

# tolerances used by ``verify``
OFFDIAG_TOL = 1e-9
DIAG_TOL = 1e-12
PARSEVAL_TOL = 1e-11


class VerificationFailed(Exception):
    pass


def _emit(text: str, output: str | None) -> None:
    if output:
        with open(output, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _frac_matrix(m) -> list:
    return [[str(x) if Fraction(x).denominator == 1 else wio.frac_str(x) for x in row] for row in m]


def _job(args):
    data = build_root_system(args.algebra)
    ft = FunctionType.parse(args.type).check(data) if getattr(args, "type", None) else None
    return data, ft


def cmd_rootinfo(args) -> int:
    data = build_root_system(args.algebra)
    info = {
        "algebra": str(data.algebra),
        "rank": data.rank,
        "cartan": [list(r) for r in data.cartan],
        "gram": _frac_matrix(data.gram),
        "marks": list(data.marks),
        "dual_marks": list(data.dual_marks),
        "connection_index": data.connection_index,
        "coxeter_number": data.coxeter_number,
        "weyl_order": data.weyl_order,
        "short": sorted(data.short_set),
        "long": sorted(data.long_set),
    }
    if args.format == "json":
        _emit(wio.dumps(info), args.output)
    else:
        lines = [f"{k}: {v}" for k, v in info.items()]
        _emit("\n".join(lines) + "\n", args.output)
    return EXIT_OK


def cmd_points(args) -> int:
    data, ft = _job(args)
    ps = composite_point_set(data, ft.sigma_tilde, ft.sigma, args.M)
    doc = wio.points_document(ps)
    text = wio.dumps(doc) if args.format == "json" else wio.records_csv(doc["points"], "u")
    _emit(text, args.output)
    return EXIT_OK


def cmd_labels(args) -> int:
    data, ft = _job(args)
    ls = composite_label_set(data, ft.sigma_tilde, ft.sigma, args.M)
    doc = wio.labels_document(ls)
    text = wio.dumps(doc) if args.format == "json" else wio.records_csv(doc["labels"], "t")
    _emit(text, args.output)
    return EXIT_OK


def cmd_count(args) -> int:
    data, ft = _job(args)
    n = count_enumerated(data, ft.sigma_tilde, ft.sigma, args.M)
    report = {"algebra": str(data.algebra), "M": args.M, "type": ft.name, "enumerated": n}
    status = EXIT_OK
    if args.closed_form:
        try:
            cf = count_closed_form(data, ft.sigma_tilde, ft.sigma, args.M)
        except NoClosedForm as exc:
            report["closed_form"] = None
            report["note"] = str(exc)
        else:
            report["closed_form"] = cf
            report["match"] = cf == n
            if cf != n:
                status = EXIT_FAILED
    if args.format == "json":
        _emit(wio.dumps(report), args.output)
    else:
        cf = report.get("closed_form")
        _emit(f"{n}" + (f" = {cf}" if cf == n else f" != {cf}" if cf is not None else "") + "\n",
              args.output)
    return status


def _load(path: str):
    with open(path) as fh:
        return json.load(fh)


def cmd_analyze(args) -> int:
    f, kernel = wio.read_samples(_load(args.input))
    _check_header(args, f.points.data, f.points.M, FunctionType(f.points.sigma_tilde, f.points.sigma))
    kernel = args.kernel or kernel
    coeffs = forward_hartley(f) if kernel == "hartley" else forward(f)
    _emit(wio.dumps(wio.spectrum_document(coeffs)), args.output)
    return EXIT_OK


def _parse_point(text: str) -> list[Fraction]:
    return [Fraction(x.strip()) for x in text.split(",")]


def cmd_synthesize(args) -> int:
    coeffs = wio.read_spectrum(_load(args.input))
    ls = coeffs.labels
    ft = FunctionType(ls.sigma_tilde, ls.sigma)
    _check_header(args, ls.data, ls.M, ft)
    kernel = "hartley" if coeffs.hartley else "complex"
    if args.at:
        pts = [_parse_point(p) for p in args.at]
        if any(len(p) != ls.data.rank for p in pts):
            raise ValueError(f"points need {ls.data.rank} coordinates")
        vals = interpolate(coeffs, pts)
        doc = {"header": wio.header(ls.data, ls.M, ft, "values", kernel),
               "points": [[wio.frac_str(x) for x in p] for p in pts],
               "values": wio._encode_values(vals, coeffs.hartley)}
    else:
        ps = composite_point_set(ls.data, ls.sigma_tilde, ls.sigma, ls.M)
        vals = interpolate(coeffs, ps)
        doc = wio.samples_document(SampleSet(ps, np.real(vals) if coeffs.hartley else vals), kernel)
    _emit(wio.dumps(doc), args.output)
    return EXIT_OK


def _check_header(args, data, M, ft) -> None:
    """Optional command-line parameters must agree with the file header."""
    if args.algebra and build_root_system(args.algebra) is not data:
        raise ValueError(f"file is for {data.algebra}, not {args.algebra}")
    if args.M is not None and args.M != M:
        raise ValueError(f"file has M = {M}, not {args.M}")
    if args.type and FunctionType.parse(args.type).normalized() != ft.normalized():
        raise ValueError(f"file has type {ft.name}, not {args.type}")


def verify_report(data, ft: FunctionType, M: int, kernel: str, budget: int, seed: int = 0) -> dict:
    rep = gram_matrix(data, ft, M, kernel, budget)
    maxdiag = float(rep.expected_diag.max()) if rep.card_labels else 0.0
    rng = np.random.default_rng(seed)
    ps = composite_point_set(data, ft.sigma_tilde, ft.sigma, M)
    n = len(ps)
    if kernel == "hartley":
        f = SampleSet(ps, rng.standard_normal(n))
    else:
        f = SampleSet(ps, rng.standard_normal(n) + 1j * rng.standard_normal(n))
    parseval = parseval_check(f, hartley=kernel == "hartley")[2] if n else 0.0
    ok = (rep.card_points == rep.card_labels
          and rep.max_off_diag <= OFFDIAG_TOL * max(maxdiag, 1.0)
          and rep.max_diag_rel_err <= DIAG_TOL
          and parseval <= PARSEVAL_TOL)
    return {"algebra": str(data.algebra), "M": M, "type": ft.name, "kernel": kernel,
            "cardPoints": rep.card_points, "cardLabels": rep.card_labels,
            "maxOffDiag": rep.max_off_diag, "maxDiagRelErr": rep.max_diag_rel_err,
            "parsevalRelErr": parseval, "pass": bool(ok)}


def cmd_verify(args) -> int:
    data, ft = _job(args)
    try:
        report = verify_report(data, ft, args.M, args.kernel or "complex", args.budget, args.seed)
    except BudgetExceeded as exc:
        _emit(wio.dumps({"error": "budget exceeded", "message": str(exc)}), args.output)
        return EXIT_INVALID
    _emit(wio.dumps(report), args.output)
    return EXIT_OK if report["pass"] else EXIT_FAILED


def _domain_box(data, ft: FunctionType) -> tuple[list[Fraction], list[Fraction]]:
    """omega^vee bounding box of F together with r_sigma F."""
    n = data.rank
    verts = [tuple(Fraction(0) for _ in range(n))]
    for i in range(n):
        verts.append(tuple(Fraction(1, data.marks[i]) if j == i else Fraction(0) for j in range(n)))
    if ft.sigma is not Sign.ONE:
        r = choose_reflection(data, ft.sigma)
        verts += [apply_generator(data, r, v) for v in verts]
    lo = [min(v[k] for v in verts) for k in range(n)]
    hi = [max(v[k] for v in verts) for k in range(n)]
    return lo, hi


def raster_rows(data, ft: FunctionType, label, kernel: str, resolution: int) -> list[dict]:
    """Exact rational R x R grid over the domain box with inside/boundary flags."""
    if data.rank != 2:
        raise ValueError("raster output needs a rank-2 algebra")
    if resolution < 2:
        raise ValueError("resolution must be at least 2")
    lo, hi = _domain_box(data, ft)
    steps = resolution - 1
    pts = []
    for j in range(resolution):
        for i in range(resolution):
            pts.append((lo[0] + (hi[0] - lo[0]) * Fraction(i, steps),
                        lo[1] + (hi[1] - lo[1]) * Fraction(j, steps)))
    D = 1
    for p in pts:
        for x in p:
            D = lcm(D, x.denominator)
    num = np.array([[int(x * D) for x in p] for p in pts], dtype=np.int64)
    vals = kernel_matrix(data, ft, [label], numerators=num, denominator=D,
                         hartley=kernel == "hartley")[0]
    rows = []
    r = choose_reflection(data, ft.sigma) if ft.sigma is not Sign.ONE else None
    for p, v in zip(pts, vals):
        inside = in_simplex(data, p) or (r is not None and in_simplex(data, apply_generator(data, r, p)))
        try:
            boundary = inside and in_boundary_h(data, p, ft.sigma_tilde, ft.sigma)
        except DomainError:
            boundary = False
        x, y = (float(c) for c in orthonormal_embedding(data, p))
        rows.append({"u1": p[0], "u2": p[1], "x": x, "y": y, "value": v,
                     "inside": inside, "boundary": boundary})
    return rows


def cmd_raster(args) -> int:
    data, ft = _job(args)
    label = [int(x) for x in args.label.split(",")]
    if len(label) != data.rank:
        raise ValueError(f"label needs {data.rank} coordinates")
    kernel = args.kernel or "hartley"
    rows = raster_rows(data, ft, label, kernel, args.resolution)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    cols = ["u1", "u2", "x", "y"] + (["value"] if kernel == "hartley" else ["re", "im"]) + ["inside", "boundary"]
    w.writerow(cols)
    for r in rows:
        val = [repr(float(r["value"].real))] if kernel == "hartley" else \
            [repr(float(r["value"].real)), repr(float(r["value"].imag))]
        w.writerow([wio.frac_str(r["u1"]), wio.frac_str(r["u2"]), repr(r["x"]), repr(r["y"])]
                   + val + [int(r["inside"]), int(r["boundary"])])
    _emit(buf.getvalue(), args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="weylorbit", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, need_type=True, need_M=True):
        sp.add_argument("--algebra", required=True, help="e.g. A2, C2, G2, F4")
        if need_M:
            sp.add_argument("--M", type=int, required=True)
        if need_type:
            sp.add_argument("--type", required=True, help="canonical name (Es+) or pair (1,s)")
        sp.add_argument("--format", choices=["json", "csv"], default="json")
        sp.add_argument("--output")

    sp = sub.add_parser("rootinfo", help="dump root system data")
    sp.add_argument("--algebra", required=True)
    sp.add_argument("--format", choices=["json", "text"], default="json")
    sp.add_argument("--output")
    sp.set_defaults(func=cmd_rootinfo)

    sp = sub.add_parser("points", help="grid points F_M")
    common(sp)
    sp.set_defaults(func=cmd_points)

    sp = sub.add_parser("labels", help="label set Lambda_M")
    common(sp)
    sp.set_defaults(func=cmd_labels)

    sp = sub.add_parser("count", help="number of grid points")
    common(sp)
    sp.add_argument("--closed-form", action="store_true", help="also evaluate the closed-form count")
    sp.set_defaults(func=cmd_count)

    for name, fn, hlp in (("analyze", cmd_analyze, "samples -> spectrum"),
                          ("synthesize", cmd_synthesize, "spectrum -> values")):
        sp = sub.add_parser(name, help=hlp)
        sp.add_argument("--input", required=True)
        sp.add_argument("--algebra")
        sp.add_argument("--M", type=int)
        sp.add_argument("--type")
        sp.add_argument("--kernel", choices=["complex", "hartley"])
        sp.add_argument("--output")
        if name == "synthesize":
            sp.add_argument("--at", action="append", help="point in omega^vee coords, e.g. 1/4,1/2")
        sp.set_defaults(func=fn)

    sp = sub.add_parser("verify", help="orthogonality, cardinality and Parseval report")
    common(sp)
    sp.add_argument("--kernel", choices=["complex", "hartley"], default="complex")
    sp.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    sp.add_argument("--seed", type=int, default=0)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("raster", help="CSV samples over the domain for contour plots")
    sp.add_argument("--algebra", required=True)
    sp.add_argument("--type", required=True)
    sp.add_argument("--label", required=True, help="weight in omega coords, e.g. 1,0")
    sp.add_argument("--kernel", choices=["complex", "hartley"], default="hartley")
    sp.add_argument("--resolution", type=int, default=101)
    sp.add_argument("--output")
    sp.set_defaults(func=cmd_raster)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "M", None) is not None and args.M < 1:
        print("error: M must be a positive integer", file=sys.stderr)
        return EXIT_INVALID
    try:
        return args.func(args)
    except (ValueError, KeyError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
