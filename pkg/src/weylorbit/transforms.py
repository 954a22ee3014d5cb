"""Discrete Fourier-Weyl and Hartley-Weyl transforms on F_M^{sigma~,sigma}."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .affine import even_order
from .errors import BudgetExceeded, GridMismatch
from .grids import LabelSet, PointSet, composite_label_set, composite_point_set
from .orbitfn import FunctionType, kernel_matrix
from .rootdata import build_root_system

DEFAULT_BUDGET = 2 * 10**9


@dataclass
class SampleSet:
    points: PointSet
    values: np.ndarray

    def __post_init__(self):
        self.values = np.asarray(self.values)
        if self.values.shape != (len(self.points),):
            raise GridMismatch(f"{self.values.shape[0] if self.values.ndim else 0} values "
                               f"for {len(self.points)} points")


@dataclass
class SpectrumCoeffs:
    labels: LabelSet
    coeffs: np.ndarray
    hartley: bool = False

    def __post_init__(self):
        self.coeffs = np.asarray(self.coeffs)
        if self.coeffs.shape != (len(self.labels),):
            raise GridMismatch(f"{self.coeffs.size} coefficients for {len(self.labels)} labels")


def _ftype(s: PointSet | LabelSet) -> FunctionType:
    return FunctionType(s.sigma_tilde, s.sigma)


def _same_grid(p: PointSet, q: PointSet) -> bool:
    return (p is q) or (p.data is q.data and p.M == q.M and p.sigma_tilde is q.sigma_tilde
                        and p.sigma is q.sigma and p.points == q.points)


def grid_kernel(points: PointSet, labels: LabelSet, hartley: bool = False) -> np.ndarray:
    """``K[l, p]`` = kernel of label l at grid point p."""
    if points.M != labels.M or points.data is not labels.data or _ftype(points) != _ftype(labels):
        raise GridMismatch("point and label sets have different parameters")
    return kernel_matrix(points.data, _ftype(points), labels.array,
                         numerators=points.numerators, denominator=points.M, hartley=hartley)


def norms(labels: LabelSet) -> np.ndarray:
    """``c |W^sigma| M^n h_M^{vee sigma}(b)`` per label."""
    d = labels.data
    base = d.connection_index * even_order(d, labels.sigma) * labels.M ** d.rank
    return base * np.array(labels.weights, dtype=float)


def inner_product(f: SampleSet, g: SampleSet) -> complex:
    if not _same_grid(f.points, g.points):
        raise GridMismatch("samples live on different point sets")
    eps = np.array(f.points.weights, dtype=float)
    return complex(np.sum(eps * f.values * np.conj(g.values)))


def _label_set_for(points: PointSet) -> LabelSet:
    return composite_label_set(points.data, points.sigma_tilde, points.sigma, points.M)


def forward(f: SampleSet, labels: LabelSet | None = None, *, hartley: bool = False,
            kernel: np.ndarray | None = None) -> SpectrumCoeffs:
    """Expansion coefficients of grid samples (``hartley`` uses the real cas kernel, no conjugate)."""
    labels = labels or _label_set_for(f.points)
    K = grid_kernel(f.points, labels, hartley) if kernel is None else kernel
    eps = np.array(f.points.weights, dtype=float)
    ker = K if hartley else K.conj()
    return SpectrumCoeffs(labels, (ker @ (eps * f.values)) / norms(labels), hartley)


def forward_hartley(g: SampleSet, labels: LabelSet | None = None, **kw) -> SpectrumCoeffs:
    if np.iscomplexobj(g.values) and np.any(np.imag(g.values) != 0):
        raise ValueError("Hartley transform needs real samples")
    return forward(SampleSet(g.points, np.real(g.values)), labels, hartley=True, **kw)


def interpolate(coeffs: SpectrumCoeffs, points) -> np.ndarray | complex:
    """Evaluate ``sum_b k_b Psi_b`` (or ``l_b zeta_b``) at a point, a list of points or a PointSet."""
    L = coeffs.labels
    single = False
    if isinstance(points, PointSet):
        K = grid_kernel(points, L, coeffs.hartley)
    else:
        pts = list(points)
        if pts and not isinstance(pts[0], (list, tuple, np.ndarray)):
            pts, single = [pts], True
        K = kernel_matrix(L.data, _ftype(L), L.array, pts, hartley=coeffs.hartley)
    out = coeffs.coeffs @ K
    return out[0] if single else out


def interpolate_hartley(coeffs: SpectrumCoeffs, points):
    if not coeffs.hartley:
        raise ValueError("coefficients come from the complex transform")
    return np.real(interpolate(coeffs, points))


@dataclass
class GramReport:
    matrix: np.ndarray
    expected_diag: np.ndarray
    max_off_diag: float
    max_diag_rel_err: float
    max_imag: float
    card_points: int
    card_labels: int


def gram_matrix(algebra, ftype, M: int, kernel: str = "complex",
                budget: int = DEFAULT_BUDGET) -> GramReport:
    """Weighted Gram matrix of the kernel functions over F_M, with an error report."""
    data = build_root_system(algebra) if not hasattr(algebra, "cartan") else algebra
    ft = FunctionType.parse(ftype) if isinstance(ftype, str) else ftype
    ft.check(data)
    if kernel not in ("complex", "hartley"):
        raise ValueError(f"unknown kernel {kernel!r}")
    P = composite_point_set(data, ft.sigma_tilde, ft.sigma, M)
    L = composite_label_set(data, ft.sigma_tilde, ft.sigma, M)
    cost = len(L) ** 2 * len(P) * even_order(data, ft.sigma)
    if cost > budget:
        raise BudgetExceeded(f"Gram cost {cost} exceeds budget {budget}; try a smaller M")
    hartley = kernel == "hartley"
    K = grid_kernel(P, L, hartley)
    eps = np.array(P.weights, dtype=float)
    G = (K * eps) @ (K.T if hartley else K.conj().T)
    expected = norms(L)
    diag = np.real(np.diag(G))
    off = G - np.diag(np.diag(G))
    return GramReport(
        matrix=G,
        expected_diag=expected,
        max_off_diag=float(np.abs(off).max()) if off.size else 0.0,
        max_diag_rel_err=float(np.max(np.abs(diag - expected) / expected)) if len(L) else 0.0,
        max_imag=float(np.abs(np.imag(G)).max()) if G.size else 0.0,
        card_points=len(P),
        card_labels=len(L),
    )


def parseval_check(f: SampleSet, coeffs: SpectrumCoeffs | None = None,
                   hartley: bool = False) -> tuple[float, float, float]:
    """``(sum eps |f|^2, c |W^sigma| M^n sum h |k|^2, relative error)``."""
    if coeffs is None:
        coeffs = forward_hartley(f) if hartley else forward(f)
    eps = np.array(f.points.weights, dtype=float)
    lhs = float(np.sum(eps * np.abs(f.values) ** 2))
    rhs = float(np.sum(norms(coeffs.labels) * np.abs(coeffs.coeffs) ** 2))
    scale = max(abs(lhs), abs(rhs))
    return lhs, rhs, (abs(lhs - rhs) / scale if scale else 0.0)


def samples_of(points: PointSet, fn, hartley: bool = False) -> SampleSet:
    """Sample a callable of the exact omega^vee coordinates on the grid."""
    vals = [fn(p.u) for p in points.points]
    return SampleSet(points, np.array(vals, dtype=float if hartley else complex))


__all__ = [
    "DEFAULT_BUDGET", "GramReport", "SampleSet", "SpectrumCoeffs", "forward",
    "forward_hartley", "gram_matrix", "grid_kernel", "inner_product", "interpolate",
    "interpolate_hartley", "norms", "parseval_check", "samples_of",
]
