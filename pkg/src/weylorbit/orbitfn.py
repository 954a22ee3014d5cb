"""The ten families of orbit functions Psi^{sigma~,sigma} and their Hartley versions zeta.

Phases ``<wb, a>`` are reduced exactly: for ``a = k / D`` in omega^vee
coordinates the pairing is ``(wb)^T adj k / (c D)`` with ``adj = c C^-1``
integral, so the integer numerator is taken mod ``c D`` and looked up in a
precomputed table of roots of unity.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import lcm
from typing import Iterable, Sequence

import numpy as np

from .errors import SignUndefined
from .rootdata import RootSystemData, build_root_system
from .weyl import Sign, check_sign, weyl_group

# canonical name -> representative (sigma~, sigma)
TYPE_TABLE: dict[str, tuple[Sign, Sign]] = {
    "C": (Sign.ONE, Sign.ONE),
    "S": (Sign.E, Sign.ONE),
    "E+": (Sign.ONE, Sign.E),
    "Ss": (Sign.S, Sign.ONE),
    "Sl": (Sign.L, Sign.ONE),
    "Es+": (Sign.ONE, Sign.S),
    "El+": (Sign.ONE, Sign.L),
    "E-": (Sign.L, Sign.E),
    "Es-": (Sign.L, Sign.S),
    "El-": (Sign.S, Sign.L),
}
_BY_PAIR = {pair: name for name, pair in TYPE_TABLE.items()}
ONE_LENGTH_TYPES = ("C", "S", "E+")


@dataclass(frozen=True)
class FunctionType:
    sigma_tilde: Sign
    sigma: Sign

    def normalized(self) -> "FunctionType":
        """The listed representative of the pair {(s~, s), (s~ s, s)}."""
        if (self.sigma_tilde, self.sigma) in _BY_PAIR:
            return self
        return FunctionType(self.sigma_tilde * self.sigma, self.sigma)

    @property
    def name(self) -> str:
        n = self.normalized()
        return _BY_PAIR[(n.sigma_tilde, n.sigma)]

    def check(self, data: RootSystemData) -> "FunctionType":
        try:
            check_sign(data, self.sigma_tilde)
            check_sign(data, self.sigma)
        except SignUndefined:
            raise SignUndefined(f"type {self.name} needs two root lengths; {data.algebra} has one") from None
        return self

    @classmethod
    def parse(cls, text: str) -> "FunctionType":
        """Accept a canonical name (``Es+``) or a pair such as ``(1,s)`` / ``e,l``."""
        key = text.strip()
        if key in TYPE_TABLE:
            return cls(*TYPE_TABLE[key])
        body = key.strip("()").replace(" ", "")
        parts = body.split(",")
        if len(parts) != 2:
            raise ValueError(f"unknown function type {text!r}")
        return cls(Sign.parse(parts[0]), Sign.parse(parts[1]))

    def __str__(self):
        return f"{self.name}=({self.sigma_tilde},{self.sigma})"


def available_types(data: RootSystemData) -> list[FunctionType]:
    names = TYPE_TABLE if data.two_lengths else ONE_LENGTH_TYPES
    return [FunctionType(*TYPE_TABLE[n]) for n in names]


def _as_type(ftype) -> FunctionType:
    if isinstance(ftype, FunctionType):
        return ftype
    if isinstance(ftype, str):
        return FunctionType.parse(ftype)
    return FunctionType(*ftype)


@lru_cache(maxsize=None)
def _group_data(data: RootSystemData, sigma_tilde: Sign, sigma: Sign):
    """Label matrices of W^sigma and the values of sigma~ on them."""
    check_sign(data, sigma_tilde)
    G = weyl_group(data).even_subgroup(sigma)
    return G.label_matrices, G.point_matrices, G.signs(sigma_tilde).astype(float)


@lru_cache(maxsize=64)
def _table(period: int, hartley: bool) -> np.ndarray:
    j = np.arange(period)
    ang = 2 * np.pi * j / period
    if hartley:
        return np.cos(ang) + np.sin(ang)
    return np.exp(1j * ang)


def _to_numerators(points) -> tuple[np.ndarray, int]:
    """Common-denominator integer form ``k / D`` of rational points (N, n)."""
    rows = [[Fraction(x) for x in p] for p in points]
    D = 1
    for r in rows:
        for x in r:
            D = lcm(D, x.denominator)
    k = np.array([[int(x * D) for x in r] for r in rows], dtype=np.int64)
    return k, D


def _is_exact(points) -> bool:
    return all(isinstance(x, (int, Fraction, np.integer)) for p in points for x in p)


def kernel_matrix(data, ftype, labels, points=None, *, numerators=None, denominator=None,
                  hartley: bool = False, chunk: int = 4_000_000) -> np.ndarray:
    """Matrix ``K[l, p] = Psi_{b_l}(a_p)`` (or ``zeta``), shape (L, N).

    Points are rational (omega^vee coordinates) and reduced exactly, or floats
    in which case the phase is computed in floating point.  ``numerators`` and
    ``denominator`` may be passed instead of ``points`` to skip conversion.
    """
    data = build_root_system(data) if isinstance(data, str) else data
    ft = _as_type(ftype).check(data)
    mats, _, signs = _group_data(data, ft.sigma_tilde, ft.sigma)
    B = np.asarray(labels, dtype=np.int64).reshape(-1, data.rank)
    # orbit images (L, g, n)
    images = np.einsum("gij,lj->lgi", mats, B)
    if numerators is None and points is not None and not _is_exact(points):
        P = np.asarray(points, dtype=float).reshape(-1, data.rank)
        Ci = np.array([[float(x) for x in r] for r in data.cartan_inverse])
        ph = np.einsum("lgi,ij,pj->lgp", images.astype(float), Ci, P)
        ph -= np.floor(ph)
        kern = np.exp(2j * np.pi * ph) if not hartley else np.cos(2 * np.pi * ph) + np.sin(2 * np.pi * ph)
        return np.einsum("g,lgp->lp", signs, kern)
    if numerators is None:
        numerators, denominator = _to_numerators(points)
    K = np.asarray(numerators, dtype=np.int64).reshape(-1, data.rank)
    period = data.connection_index * int(denominator)
    table = _table(period, hartley)
    UA = images @ data.adjugate  # (L, g, n)
    L, g, _ = UA.shape
    N = K.shape[0]
    out = np.zeros((L, N), dtype=float if hartley else complex)
    step = max(1, chunk // max(1, g * N))
    for s in range(0, L, step):
        r = np.mod(UA[s:s + step] @ K.T, period)  # (l, g, N)
        out[s:s + step] = np.einsum("g,lgp->lp", signs, table[r])
    return out


def eval_psi(data, ftype, b: Sequence[int], a: Sequence) -> complex:
    """``Psi_b^{sigma~,sigma}(a)`` for a label b (omega coords) and point a (omega^vee coords)."""
    return complex(kernel_matrix(data, ftype, [b], [a])[0, 0])


def eval_zeta(data, ftype, b: Sequence[int], a: Sequence) -> float:
    """Hartley orbit function ``zeta_b^{sigma~,sigma}(a)`` (cas kernel)."""
    return float(kernel_matrix(data, ftype, [b], [a], hartley=True)[0, 0])


def phase(data: RootSystemData, b: Sequence[int], a: Sequence) -> Fraction:
    """``<b, a>`` mod 1 as an exact fraction in [0, 1)."""
    from .rootdata import pairing_omega
    x = pairing_omega(data, b, a)
    return x - (x.numerator // x.denominator)


def product_decompose(data, sigma1: Sign, sigma2: Sign, sigma: Sign,
                      b: Sequence[int], a: Sequence, a2: Sequence) -> tuple[complex, complex]:
    """Both sides of ``Psi^{s1,s}_b(a) Psi^{s2,s}_b(a') = sum_w s2(w) Psi^{s1 s2,s}_b(a + w a')``."""
    data = build_root_system(data) if isinstance(data, str) else data
    lhs = eval_psi(data, (sigma1, sigma), b, a) * eval_psi(data, (sigma2, sigma), b, a2)
    _, pmats, s2 = _group_data(data, sigma2, sigma)
    a = [Fraction(x) for x in a]
    a2 = [Fraction(x) for x in a2]
    shifted = []
    for B in pmats:
        wa2 = [sum((int(B[r, k]) * a2[k] for k in range(len(a2))), Fraction(0)) for r in range(len(a2))]
        shifted.append([x + y for x, y in zip(a, wa2)])
    vals = kernel_matrix(data, (sigma1 * sigma2, sigma), [b], shifted)[0]
    return lhs, complex(np.dot(s2, vals))


def all_sign_triples(data: RootSystemData) -> Iterable[tuple[Sign, Sign, Sign]]:
    signs = (Sign.ONE, Sign.E, Sign.S, Sign.L) if data.two_lengths else (Sign.ONE, Sign.E)
    for s1 in signs:
        for s2 in signs:
            for s in signs:
                yield s1, s2, s


__all__ = [
    "FunctionType", "ONE_LENGTH_TYPES", "TYPE_TABLE", "all_sign_triples", "available_types",
    "eval_psi", "eval_zeta", "kernel_matrix", "phase", "product_decompose",
]
