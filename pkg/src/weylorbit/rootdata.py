"""Root-system data for the simple Lie algebras.

Coordinates used throughout the package:

* labels (weights) ``t`` are integer vectors in the basis of fundamental
  weights ``omega_i``;
* points ``u`` are rational vectors in the basis of fundamental coweights
  ``omega_i^vee``; ``<alpha_i, omega_j^vee> = delta_ij``;
* ``alpha^vee`` coordinates ``y`` of a point satisfy ``u = C y``.

Simple roots follow Bourbaki numbering, except for G2 where alpha_1 is the
long root. Long roots have squared length 2.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Sequence

import numpy as np

from .errors import UnsupportedAlgebra

Matrix = tuple[tuple[Fraction, ...], ...]

_MIN_RANK = {"A": 1, "B": 3, "C": 2, "D": 4}
_EXCEPTIONAL = {("E", 6), ("E", 7), ("E", 8), ("F", 4), ("G", 2)}


@dataclass(frozen=True, order=True)
class AlgebraId:
    family: str
    rank: int

    def __post_init__(self):
        fam, n = self.family, self.rank
        if fam in _MIN_RANK:
            ok = isinstance(n, int) and n >= _MIN_RANK[fam]
        else:
            ok = (fam, n) in _EXCEPTIONAL
        if not ok:
            raise UnsupportedAlgebra(f"unsupported algebra: {fam}{n}")

    @classmethod
    def parse(cls, text: str) -> "AlgebraId":
        m = re.fullmatch(r"\s*([A-Ga-g])_?(\d+)\s*", text)
        if m is None:
            raise UnsupportedAlgebra(f"unsupported algebra: {text!r}")
        return cls(m.group(1).upper(), int(m.group(2)))

    @property
    def two_lengths(self) -> bool:
        return self.family in "BCFG"

    def __str__(self):
        return f"{self.family}{self.rank}"


def _cartan(fam: str, n: int) -> list[list[int]]:
    C = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def link(i, j, cij=-1, cji=-1):
        C[i][j], C[j][i] = cij, cji

    if fam == "A":
        for i in range(n - 1):
            link(i, i + 1)
    elif fam == "B":
        for i in range(n - 2):
            link(i, i + 1)
        link(n - 2, n - 1, -2, -1)
    elif fam == "C":
        for i in range(n - 2):
            link(i, i + 1)
        link(n - 2, n - 1, -1, -2)
    elif fam == "D":
        for i in range(n - 2):
            link(i, i + 1)
        link(n - 3, n - 1)
    elif fam == "E":
        link(0, 2)
        link(1, 3)
        for i in range(2, n - 1):
            link(i, i + 1)
    elif fam == "F":
        link(0, 1)
        link(1, 2, -2, -1)
        link(2, 3)
    elif fam == "G":
        link(0, 1, -3, -1)
    return C


def _squared_lengths(fam: str, n: int) -> list[Fraction]:
    two, one = Fraction(2), Fraction(1)
    if fam == "B":
        return [two] * (n - 1) + [one]
    if fam == "C":
        return [one] * (n - 1) + [two]
    if fam == "F":
        return [two, two, one, one]
    if fam == "G":
        return [two, Fraction(2, 3)]
    return [two] * n


# Coefficients of the highest root (marks) and of the highest coroot in the
# simple-coroot basis (dual marks).
def _marks(fam: str, n: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    if fam == "A":
        m = (1,) * n
        return m, m
    if fam == "B":
        return (1,) + (2,) * (n - 1), (2,) * (n - 1) + (1,)
    if fam == "C":
        return (2,) * (n - 1) + (1,), (1,) + (2,) * (n - 1)
    if fam == "D":
        m = (1,) + (2,) * (n - 3) + (1, 1)
        return m, m
    if fam == "E":
        m = {6: (1, 2, 2, 3, 2, 1),
             7: (2, 2, 3, 4, 3, 2, 1),
             8: (2, 3, 4, 6, 5, 4, 3, 2)}[n]
        return m, m
    if fam == "F":
        return (2, 3, 4, 2), (2, 4, 3, 2)
    return (2, 3), (3, 2)


def _frac_inverse(A: Sequence[Sequence[Fraction]]) -> list[list[Fraction]]:
    n = len(A)
    M = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(A)]
    for col in range(n):
        piv = next(r for r in range(col, n) if M[r][col] != 0)
        M[col], M[piv] = M[piv], M[col]
        p = M[col][col]
        M[col] = [x / p for x in M[col]]
        for r in range(n):
            if r != col and M[r][col] != 0:
                f = M[r][col]
                M[r] = [a - f * b for a, b in zip(M[r], M[col])]
    return [row[n:] for row in M]


def _frac_det(A: Sequence[Sequence[Fraction]]) -> Fraction:
    n = len(A)
    M = [[Fraction(x) for x in row] for row in A]
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if M[r][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            M[col], M[piv] = M[piv], M[col]
            det = -det
        det *= M[col][col]
        for r in range(col + 1, n):
            f = M[r][col] / M[col][col]
            M[r] = [a - f * b for a, b in zip(M[r], M[col])]
    return det


def _exact_sqrt(x: Fraction) -> Fraction | None:
    p, q = math.isqrt(x.numerator), math.isqrt(x.denominator)
    if p * p == x.numerator and q * q == x.denominator:
        return Fraction(p, q)
    return None


@dataclass(frozen=True)
class RootSystemData:
    algebra: AlgebraId
    cartan: tuple[tuple[int, ...], ...]
    gram: Matrix
    marks: tuple[int, ...]
    dual_marks: tuple[int, ...]
    coxeter_number: int
    connection_index: int
    short_set: frozenset[int]
    long_set: frozenset[int]

    @property
    def rank(self) -> int:
        return self.algebra.rank

    @property
    def two_lengths(self) -> bool:
        return self.algebra.two_lengths

    @cached_property
    def squared_lengths(self) -> tuple[Fraction, ...]:
        return tuple(self.gram[i][i] for i in range(self.rank))

    @cached_property
    def cartan_inverse(self) -> Matrix:
        return tuple(tuple(r) for r in _frac_inverse(self.cartan))

    @cached_property
    def adjugate(self) -> np.ndarray:
        """Integer matrix ``c * C^-1``."""
        c = self.connection_index
        A = [[x * c for x in row] for row in self.cartan_inverse]
        assert all(x.denominator == 1 for row in A for x in row)
        return np.array([[int(x) for x in row] for row in A], dtype=np.int64)

    @cached_property
    def cartan_array(self) -> np.ndarray:
        return np.array(self.cartan, dtype=np.int64)

    @cached_property
    def weyl_order(self) -> int:
        """``|W| = n! * c * prod(marks)``."""
        return (math.factorial(self.rank) * self.connection_index
                * math.prod(self.marks))

    @cached_property
    def highest_root(self) -> tuple[int, ...]:
        """Highest root in the simple-root basis."""
        return self.marks

    @cached_property
    def highest_coroot_direction(self) -> tuple[Fraction, ...]:
        """The highest dual root expressed in the simple-root basis."""
        return tuple(Fraction(2 * m) / L
                     for m, L in zip(self.dual_marks, self.squared_lengths))

    @cached_property
    def orthonormal_basis(self) -> tuple[tuple[Fraction | float, ...], ...]:
        """Rows are the simple roots in an orthonormal frame (Cholesky of the Gram matrix).

        Entries stay exact ``Fraction`` when every pivot is a rational square.
        """
        n = self.rank
        G = [list(r) for r in self.gram]
        L = [[Fraction(0)] * n for _ in range(n)]
        exact = True
        for j in range(n):
            d = G[j][j] - sum(L[j][k] ** 2 for k in range(j))
            s = _exact_sqrt(d)
            if s is None:
                exact = False
                break
            L[j][j] = s
            for i in range(j + 1, n):
                L[i][j] = (G[i][j] - sum(L[i][k] * L[j][k] for k in range(j))) / s
        if exact:
            return tuple(tuple(r) for r in L)
        Lf = np.linalg.cholesky(np.array(G, dtype=float))
        return tuple(tuple(float(x) for x in r) for r in Lf)

    @cached_property
    def exact_embedding(self) -> bool:
        return all(isinstance(x, Fraction) for r in self.orthonormal_basis for x in r)


@lru_cache(maxsize=None)
def _build(algebra: AlgebraId) -> RootSystemData:
    fam, n = algebra.family, algebra.rank
    C = _cartan(fam, n)
    lengths = _squared_lengths(fam, n)
    gram = tuple(tuple(C[i][j] * lengths[j] / 2 for j in range(n)) for i in range(n))
    assert all(gram[i][j] == gram[j][i] for i in range(n) for j in range(n))
    marks, dual_marks = _marks(fam, n)
    det = _frac_det(C)
    assert det.denominator == 1
    short = frozenset(i + 1 for i in range(n) if lengths[i] < 2)
    return RootSystemData(
        algebra=algebra,
        cartan=tuple(tuple(r) for r in C),
        gram=gram,
        marks=marks,
        dual_marks=dual_marks,
        coxeter_number=1 + sum(marks),
        connection_index=int(det),
        short_set=short if algebra.two_lengths else frozenset(),
        long_set=frozenset(range(1, n + 1)) - short,
    )


def build_root_system(algebra: AlgebraId | str) -> RootSystemData:
    """Return the root-system data of ``algebra`` (an ``AlgebraId`` or a string like ``"C2"``)."""
    if isinstance(algebra, str):
        algebra = AlgebraId.parse(algebra)
    return _build(algebra)


def _as_fractions(v) -> tuple[Fraction, ...]:
    return tuple(Fraction(x) for x in v)


def pairing(label: Sequence[int], point: Sequence) -> Fraction:
    """``<b, a>`` for ``b`` in the omega basis and ``a`` in the alpha^vee basis."""
    if len(label) != len(point):
        raise ValueError(f"length mismatch: {len(label)} != {len(point)}")
    return sum((Fraction(t) * Fraction(y) for t, y in zip(label, point)), Fraction(0))


def omega_check_to_alpha_check(data: RootSystemData, u: Sequence) -> tuple[Fraction, ...]:
    u = _as_fractions(u)
    Ci = data.cartan_inverse
    return tuple(sum((Ci[k][j] * u[j] for j in range(len(u))), Fraction(0))
                 for k in range(len(u)))


def alpha_check_to_omega_check(data: RootSystemData, y: Sequence) -> tuple[Fraction, ...]:
    y = _as_fractions(y)
    C = data.cartan
    return tuple(sum((C[k][j] * y[j] for j in range(len(y))), Fraction(0))
                 for k in range(len(y)))


def omega_to_alpha(data: RootSystemData, t: Sequence) -> tuple[Fraction, ...]:
    """Weight coordinates (omega basis) to simple-root coordinates."""
    t = _as_fractions(t)
    Ci = data.cartan_inverse
    # t = C^T x
    return tuple(sum((Ci[j][k] * t[j] for j in range(len(t))), Fraction(0))
                 for k in range(len(t)))


def pairing_omega(data: RootSystemData, label: Sequence[int], u: Sequence) -> Fraction:
    """``<b, a>`` with ``a`` given in the omega^vee basis."""
    return pairing(label, omega_check_to_alpha_check(data, u))


def _combine(basis, coeffs):
    n = len(basis)
    return tuple(sum((coeffs[i] * basis[i][k] for i in range(n)), 0 * coeffs[0])
                 for k in range(n))


def orthonormal_embedding(data: RootSystemData, u: Sequence, basis: str = "omega_check") -> tuple:
    """Euclidean coordinates of a point given in the omega^vee (default) or alpha^vee basis."""
    if basis == "omega_check":
        y = omega_check_to_alpha_check(data, u)
    elif basis == "alpha_check":
        y = _as_fractions(u)
    else:
        raise ValueError(f"unknown basis {basis!r}")
    coeffs = [y[i] * 2 / data.squared_lengths[i] for i in range(data.rank)]
    return _embed(data, coeffs)


def orthonormal_label(data: RootSystemData, t: Sequence) -> tuple:
    """Euclidean coordinates of a weight given in the omega basis."""
    return _embed(data, list(omega_to_alpha(data, t)))


def _embed(data: RootSystemData, coeffs: list[Fraction]) -> tuple:
    L = data.orthonormal_basis
    if not data.exact_embedding:
        coeffs = [float(c) for c in coeffs]
    out = _combine(L, coeffs)
    if data.exact_embedding:
        return tuple(Fraction(x) for x in out)
    return tuple(float(x) for x in out)
