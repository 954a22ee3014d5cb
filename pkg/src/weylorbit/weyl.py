"""Finite Weyl groups, sign homomorphisms and even subgroups."""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Sequence

import numpy as np

from .errors import SignUndefined
from .rootdata import RootSystemData

DEFAULT_MAX_ORDER = 200_000


class Sign(enum.Enum):
    """The four sign homomorphisms W -> {1, -1}."""

    ONE = "1"
    E = "e"
    S = "s"
    L = "l"

    def __mul__(self, other: "Sign") -> "Sign":
        if self is Sign.ONE:
            return other
        if other is Sign.ONE:
            return self
        if self is other:
            return Sign.ONE
        # product of two distinct non-trivial elements of the Klein group
        return ({Sign.E, Sign.S, Sign.L} - {self, other}).pop()

    @classmethod
    def parse(cls, text: str) -> "Sign":
        key = text.strip().lower()
        aliases = {"1": cls.ONE, "one": cls.ONE, "id": cls.ONE,
                   "e": cls.E, "sigma^e": cls.E,
                   "s": cls.S, "sigma^s": cls.S,
                   "l": cls.L, "sigma^l": cls.L}
        if key not in aliases:
            raise ValueError(f"unknown sign homomorphism {text!r}")
        return aliases[key]

    def __str__(self):
        return self.value


ALL_SIGNS = (Sign.ONE, Sign.E, Sign.S, Sign.L)


def available_signs(data: RootSystemData) -> tuple[Sign, ...]:
    return ALL_SIGNS if data.two_lengths else (Sign.ONE, Sign.E)


def check_sign(data: RootSystemData, sigma: Sign) -> None:
    if sigma in (Sign.S, Sign.L) and not data.two_lengths:
        raise SignUndefined(
            f"sign homomorphism undefined: sigma^{sigma.value} on {data.algebra}")


@dataclass(frozen=True)
class WeylElement:
    """A Weyl group element acting on omega coordinates of weights.

    ``point_matrix`` is the same element acting on omega^vee coordinates.
    """

    matrix: tuple[tuple[int, ...], ...]
    point_matrix: tuple[tuple[int, ...], ...]
    word: tuple[int, ...]
    sign_e: int
    sign_s: int
    sign_l: int
    two_lengths: bool = True

    def sign(self, sigma: Sign) -> int:
        if sigma is Sign.ONE:
            return 1
        if sigma is Sign.E:
            return self.sign_e
        if not self.two_lengths:
            raise SignUndefined(f"sign homomorphism undefined: sigma^{sigma.value}")
        return self.sign_s if sigma is Sign.S else self.sign_l

    def act_label(self, t: Sequence[int]) -> tuple[int, ...]:
        return tuple(int(v) for v in np.array(self.matrix) @ np.array(t, dtype=np.int64))

    def act_point(self, u: Sequence) -> tuple[Fraction, ...]:
        return tuple(sum((Fraction(row[k]) * Fraction(u[k]) for k in range(len(u))), Fraction(0))
                     for row in self.point_matrix)


def sign_value(sigma: Sign, w: WeylElement) -> int:
    return w.sign(sigma)


def _diag_lengths(data: RootSystemData) -> list[Fraction]:
    return [L / 2 for L in data.squared_lengths]


def reflection_matrices(data: RootSystemData, direction: Sequence) -> tuple[np.ndarray, np.ndarray]:
    """Label and point matrices of the reflection along a root (simple-root coordinates)."""
    n = data.rank
    d = [Fraction(x) for x in direction]
    G, C = data.gram, data.cartan
    dd = sum(d[i] * G[i][j] * d[j] for i in range(n) for j in range(n))
    D = _diag_lengths(data)
    # labels: <lambda, d> = sum t_i d_i |alpha_i|^2 / 2 ; d in omega coords = C^T d
    d_omega = [sum(d[i] * C[i][j] for i in range(n)) for j in range(n)]
    # points: <a, d> = sum u_i d_i ; d in omega^vee coords = G d
    d_omega_check = [sum(G[j][i] * d[i] for i in range(n)) for j in range(n)]
    A = [[Fraction(int(r == k)) - 2 * d_omega[r] * d[k] * D[k] / dd for k in range(n)]
         for r in range(n)]
    B = [[Fraction(int(r == k)) - 2 * d_omega_check[r] * d[k] / dd for k in range(n)]
         for r in range(n)]
    for M in (A, B):
        assert all(x.denominator == 1 for row in M for x in row), "non-integral reflection"
    return (np.array([[int(x) for x in row] for row in A], dtype=np.int64),
            np.array([[int(x) for x in row] for row in B], dtype=np.int64))


def simple_reflection(data: RootSystemData, i: int) -> tuple[np.ndarray, np.ndarray]:
    """Reflection r_i (1-based index)."""
    d = [0] * data.rank
    d[i - 1] = 1
    return reflection_matrices(data, d)


def linear_generator(data: RootSystemData, i: int, dual: bool = False):
    """Linear part of the i-th affine generator: r_i for i >= 1, r_xi or r_eta for i = 0."""
    if i > 0:
        return simple_reflection(data, i)
    direction = data.highest_coroot_direction if dual else data.highest_root
    return reflection_matrices(data, direction)


@lru_cache(maxsize=None)
def generator_signs(data: RootSystemData, i: int, dual: bool = False) -> dict[Sign, int]:
    """Values of all sign homomorphisms on the linear part of generator i."""
    if i > 0:
        short = i in data.short_set
    elif not data.two_lengths:
        short = False
    else:
        d = data.highest_coroot_direction if dual else data.highest_root
        n = data.rank
        norm = sum(Fraction(d[a]) * data.gram[a][b] * d[b] for a in range(n) for b in range(n))
        # a root is short iff its squared length is < 2; a coroot iff > 2
        short = norm > 2 if dual else norm < 2
    out = {Sign.ONE: 1, Sign.E: -1, Sign.S: 1, Sign.L: 1}
    if data.two_lengths:
        out[Sign.S] = -1 if short else 1
        out[Sign.L] = 1 if short else -1
    return out


class WeylGroup:
    """All elements of W in breadth-first (shortlex) order, with vectorised copies."""

    def __init__(self, data: RootSystemData, elements: list[WeylElement]):
        self.data = data
        self.elements = elements

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    @cached_property
    def label_matrices(self) -> np.ndarray:
        return np.array([w.matrix for w in self.elements], dtype=np.int64)

    @cached_property
    def point_matrices(self) -> np.ndarray:
        return np.array([w.point_matrix for w in self.elements], dtype=np.int64)

    def signs(self, sigma: Sign) -> np.ndarray:
        check_sign(self.data, sigma)
        return np.array([w.sign(sigma) for w in self.elements], dtype=np.int64)

    @lru_cache(maxsize=None)
    def even_subgroup(self, sigma: Sign) -> "WeylGroup":
        check_sign(self.data, sigma)
        return WeylGroup(self.data, [w for w in self.elements if w.sign(sigma) == 1])


def generate_weyl_group(data: RootSystemData, max_order: int = DEFAULT_MAX_ORDER) -> list[WeylElement]:
    """Closure of the simple reflections, identity first, BFS by word length."""
    if data.weyl_order > max_order:
        raise ValueError(f"|W({data.algebra})| = {data.weyl_order} exceeds max_order={max_order}")
    n = data.rank
    gens = [simple_reflection(data, i) for i in range(1, n + 1)]
    gsign = [generator_signs(data, i) for i in range(1, n + 1)]
    I = np.eye(n, dtype=np.int64)
    seen = {I.tobytes()}
    # frontier entries: (label matrix, point matrix, word, (e, s, l))
    frontier = [(I, I, (), (1, 1, 1))]
    out = []
    while frontier:
        out.extend(frontier)
        nxt = []
        for A, B, word, (se, ss, sl) in frontier:
            for i, (Ai, Bi) in enumerate(gens):
                A2 = A @ Ai
                key = A2.tobytes()
                if key in seen:
                    continue
                seen.add(key)
                s = gsign[i]
                nxt.append((A2, B @ Bi, word + (i + 1,),
                            (se * s[Sign.E], ss * s[Sign.S], sl * s[Sign.L])))
        frontier = nxt
    assert len(out) == data.weyl_order, (len(out), data.weyl_order)
    two = data.two_lengths
    return [WeylElement(tuple(map(tuple, A.tolist())), tuple(map(tuple, B.tolist())),
                        word, se, ss if two else 1, sl if two else 1, two)
            for A, B, word, (se, ss, sl) in out]


@lru_cache(maxsize=None)
def weyl_group(data: RootSystemData) -> WeylGroup:
    return WeylGroup(data, generate_weyl_group(data))


def even_subgroup(sigma: Sign, group: list[WeylElement]) -> list[WeylElement]:
    return [w for w in group if w.sign(sigma) == 1]


@lru_cache(maxsize=None)
def negative_generators(data: RootSystemData, sigma: Sign, dual: bool = False) -> frozenset[int]:
    """Indices i in {0..n} of affine generators whose linear part has sign -1."""
    check_sign(data, sigma)
    return frozenset(i for i in range(data.rank + 1)
                     if generator_signs(data, i, dual)[sigma] == -1)
