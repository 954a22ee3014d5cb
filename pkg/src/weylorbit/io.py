"""JSON/CSV serialization of grids, samples and spectra.

Exact quantities are written as ``"p/q"`` strings; every file carries a
header naming the algebra, M and function type so that readers can
regenerate the grid and check alignment.
"""
from __future__ import annotations

import csv
import io
import json
from fractions import Fraction
from typing import Any, Sequence

import numpy as np

from .errors import GridMismatch
from .grids import LabelSet, PointSet, composite_label_set, composite_point_set
from .orbitfn import FunctionType
from .rootdata import build_root_system, orthonormal_embedding, orthonormal_label
from .transforms import SampleSet, SpectrumCoeffs

FORMAT_VERSION = 1


def frac_str(x) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def parse_frac(s) -> Fraction:
    if isinstance(s, (int, Fraction)):
        return Fraction(s)
    if not isinstance(s, str):
        raise ValueError(f"expected a rational string, got {s!r}")
    return Fraction(s.strip())


def _floats(v: Sequence) -> list[float]:
    return [float(x) for x in v]


def header(data, M: int, ftype: FunctionType, kind: str, kernel: str | None = None) -> dict:
    h = {"format": FORMAT_VERSION, "kind": kind, "algebra": str(data.algebra), "M": M,
         "type": ftype.name, "sigma_tilde": ftype.sigma_tilde.value, "sigma": ftype.sigma.value}
    if kernel is not None:
        h["kernel"] = kernel
    return h


def point_records(ps: PointSet) -> list[dict]:
    return [{"u": [frac_str(x) for x in p.u],
             "orthonormal": _floats(orthonormal_embedding(ps.data, p.u)),
             "epsilon": int(w), "reflected": p.reflected}
            for p, w in zip(ps.points, ps.weights)]


def label_records(ls: LabelSet) -> list[dict]:
    return [{"t": list(b.t), "orthonormal": _floats(orthonormal_label(ls.data, b.t)),
             "h": int(w), "reflected": b.reflected}
            for b, w in zip(ls.labels, ls.weights)]


def points_document(ps: PointSet) -> dict:
    return {"header": header(ps.data, ps.M, FunctionType(ps.sigma_tilde, ps.sigma), "points"),
            "points": point_records(ps)}


def labels_document(ls: LabelSet) -> dict:
    return {"header": header(ls.data, ls.M, FunctionType(ls.sigma_tilde, ls.sigma), "labels"),
            "labels": label_records(ls)}


def records_csv(records: list[dict], coord_key: str) -> str:
    if not records:
        return ""
    n = len(records[0][coord_key])
    weight_key = "epsilon" if coord_key == "u" else "h"
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow([f"{coord_key}{i + 1}" for i in range(n)] + [f"x{i + 1}" for i in range(n)]
               + [weight_key, "reflected"])
    for r in records:
        w.writerow([str(c) for c in r[coord_key]] + [repr(x) for x in r["orthonormal"]]
                   + [r[weight_key], int(r["reflected"])])
    return buf.getvalue()


def _encode_values(values: np.ndarray, real: bool) -> list:
    if real:
        return [float(v) for v in np.real(values)]
    return [[float(v.real), float(v.imag)] for v in np.asarray(values, dtype=complex)]


def _decode_values(raw: list) -> np.ndarray:
    if all(isinstance(v, (int, float)) for v in raw):
        return np.array(raw, dtype=float)
    try:
        return np.array([complex(float(re), float(im)) for re, im in raw])
    except (TypeError, ValueError):
        raise ValueError("values must be numbers or [re, im] pairs") from None


def samples_document(f: SampleSet, kernel: str = "complex") -> dict:
    ps = f.points
    return {"header": header(ps.data, ps.M, FunctionType(ps.sigma_tilde, ps.sigma), "samples", kernel),
            "points": [[frac_str(x) for x in p.u] for p in ps.points],
            "values": _encode_values(f.values, kernel == "hartley")}


def spectrum_document(c: SpectrumCoeffs) -> dict:
    ls = c.labels
    kernel = "hartley" if c.hartley else "complex"
    return {"header": header(ls.data, ls.M, FunctionType(ls.sigma_tilde, ls.sigma), "spectrum", kernel),
            "labels": [list(b.t) for b in ls.labels],
            "coeffs": _encode_values(c.coeffs, c.hartley)}


def _read_header(doc: Any, kind: str) -> tuple:
    if not isinstance(doc, dict) or "header" not in doc:
        raise ValueError("malformed file: missing header")
    h = doc["header"]
    if h.get("kind") != kind:
        raise ValueError(f"expected a {kind} file, got {h.get('kind')!r}")
    data = build_root_system(h["algebra"])
    M = h["M"]
    if not isinstance(M, int) or M < 1:
        raise ValueError(f"bad M in header: {M!r}")
    ft = FunctionType.parse(h["type"]).check(data)
    return data, M, ft, h.get("kernel", "complex")


def read_samples(doc: Any) -> tuple[SampleSet, str]:
    """Rebuild a SampleSet, checking the point list against the regenerated grid."""
    data, M, ft, kernel = _read_header(doc, "samples")
    ps = composite_point_set(data, ft.sigma_tilde, ft.sigma, M)
    pts = doc.get("points")
    vals = doc.get("values")
    if not isinstance(pts, list) or not isinstance(vals, list):
        raise ValueError("malformed samples file")
    if len(pts) != len(ps) or len(vals) != len(ps):
        raise GridMismatch(f"file has {len(pts)} points / {len(vals)} values, grid has {len(ps)}")
    for i, (row, p) in enumerate(zip(pts, ps.points)):
        if tuple(parse_frac(x) for x in row) != p.u:
            raise GridMismatch(f"point {i} differs from the regenerated grid")
    return SampleSet(ps, _decode_values(vals)), kernel


def read_spectrum(doc: Any) -> SpectrumCoeffs:
    data, M, ft, kernel = _read_header(doc, "spectrum")
    ls = composite_label_set(data, ft.sigma_tilde, ft.sigma, M)
    labels = doc.get("labels")
    coeffs = doc.get("coeffs")
    if not isinstance(labels, list) or not isinstance(coeffs, list):
        raise ValueError("malformed spectrum file")
    if len(labels) != len(ls) or len(coeffs) != len(ls):
        raise GridMismatch(f"file has {len(labels)} labels, grid has {len(ls)}")
    for i, (row, b) in enumerate(zip(labels, ls.labels)):
        if tuple(int(x) for x in row) != b.t:
            raise GridMismatch(f"label {i} differs from the regenerated label set")
    return SpectrumCoeffs(ls, _decode_values(coeffs), kernel == "hartley")


def dumps(doc: Any) -> str:
    return json.dumps(doc, indent=2) + "\n"


__all__ = [
    "dumps", "frac_str", "header", "label_records", "labels_document", "parse_frac",
    "point_records", "points_document", "read_samples", "read_spectrum", "records_csv",
    "samples_document", "spectrum_document",
]
