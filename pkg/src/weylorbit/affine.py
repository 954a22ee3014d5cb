"""Affine Weyl group actions, fundamental simplices and stabilizer orders.

The primal side acts on points in omega^vee coordinates (translations by
Q^vee, affine generator r_0 built on the highest root xi).  The dual side
acts on ``b / M`` in omega coordinates (translations by Q, r_0^vee built on
the highest dual root eta).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

import numpy as np

from .errors import DomainError
from .rootdata import RootSystemData
from .weyl import (Sign, check_sign, generator_signs, linear_generator,
                   negative_generators, reflection_matrices)

Point = tuple[Fraction, ...]


def _marks(data: RootSystemData, dual: bool) -> tuple[int, ...]:
    return data.dual_marks if dual else data.marks


def simplex_coords(data: RootSystemData, u: Sequence, dual: bool = False) -> Point:
    """``(y_0, y_1, ..., y_n)`` with ``y_0 = 1 - sum m_i y_i`` (dual marks when ``dual``)."""
    u = tuple(Fraction(x) for x in u)
    m = _marks(data, dual)
    return (1 - sum(mi * ui for mi, ui in zip(m, u)),) + u


def dual_simplex_coords(data: RootSystemData, t: Sequence[int], M: int) -> Point:
    return simplex_coords(data, [Fraction(x, M) for x in t], dual=True)


def zero_indices(coords: Sequence[Fraction]) -> frozenset[int]:
    return frozenset(i for i, y in enumerate(coords) if y == 0)


def in_simplex(data: RootSystemData, u: Sequence, dual: bool = False) -> bool:
    return all(y >= 0 for y in simplex_coords(data, u, dual))


@lru_cache(maxsize=None)
def affine_generators(data: RootSystemData, dual: bool = False):
    """``[(matrix, translation), ...]`` for generators 0..n acting as ``x -> B x + tau``."""
    n = data.rank
    zero = (Fraction(0),) * n
    gens = []
    for i in range(n + 1):
        A, B = linear_generator(data, i, dual)
        mat = A if dual else B
        if i == 0:
            d = [Fraction(x) for x in
                 (data.highest_coroot_direction if dual else data.highest_root)]
            G, C = data.gram, data.cartan
            dd = sum(d[a] * G[a][b] * d[b] for a in range(n) for b in range(n))
            if dual:
                vec = [sum(d[a] * C[a][j] for a in range(n)) for j in range(n)]
            else:
                vec = [sum(G[j][a] * d[a] for a in range(n)) for j in range(n)]
            tau = tuple(2 * v / dd for v in vec)
            assert all(x.denominator == 1 for x in tau)
        else:
            tau = zero
        gens.append((mat, tau))
    return gens


def _apply(mat: np.ndarray, tau: Point, x: Point) -> Point:
    n = len(x)
    return tuple(sum((int(mat[r, k]) * x[k] for k in range(n)), Fraction(0)) + tau[r]
                 for r in range(n))


def apply_generator(data: RootSystemData, i: int, x: Sequence, dual: bool = False) -> Point:
    mat, tau = affine_generators(data, dual)[i]
    return _apply(mat, tau, tuple(Fraction(v) for v in x))


@dataclass
class AffineMap:
    """``x -> linear @ x + translation`` in the coordinates of one side.

    ``signs`` holds the value of every sign homomorphism on the linear part.
    """

    linear: np.ndarray
    translation: Point
    signs: dict = field(default_factory=dict)

    def __call__(self, x: Sequence) -> Point:
        return _apply(self.linear, self.translation, tuple(Fraction(v) for v in x))


def identity_map(n: int) -> AffineMap:
    return AffineMap(np.eye(n, dtype=np.int64), (Fraction(0),) * n,
                     {s: 1 for s in Sign})


def reduce_to_fundamental(data: RootSystemData, point: Sequence,
                          dual: bool = False, max_steps: int = 100_000) -> tuple[Point, AffineMap]:
    """Walk ``point`` into the fundamental simplex by repeated affine reflections.

    At each step the generator with the most negative simplex coordinate is
    applied (lowest index on ties).  Returns the reduced point and the map
    taking the input to it.
    """
    x = tuple(Fraction(v) for v in point)
    gens = affine_generators(data, dual)
    amap = identity_map(data.rank)
    for _ in range(max_steps):
        coords = simplex_coords(data, x, dual)
        low = min(coords)
        if low >= 0:
            return x, amap
        i = coords.index(low)
        mat, tau = gens[i]
        x = _apply(mat, tau, x)
        gs = generator_signs(data, i, dual)
        amap = AffineMap(mat @ amap.linear, _apply(mat, tau, amap.translation),
                         {s: amap.signs[s] * gs[s] for s in Sign})
    raise RuntimeError("reduction did not terminate")


@lru_cache(maxsize=None)
def reflection_subgroup_order(data: RootSystemData, indices: frozenset[int], dual: bool = False) -> int:
    """Order of the subgroup of W generated by the linear parts of the given affine generators."""
    gens = [linear_generator(data, i, dual)[0] for i in sorted(indices)]
    n = data.rank
    I = np.eye(n, dtype=np.int64)
    seen = {I.tobytes()}
    frontier = [I]
    while frontier:
        nxt = []
        for A in frontier:
            for g in gens:
                A2 = A @ g
                key = A2.tobytes()
                if key not in seen:
                    seen.add(key)
                    nxt.append(A2)
        frontier = nxt
    return len(seen)


def even_order(data: RootSystemData, sigma: Sign) -> int:
    """``|W^sigma|``."""
    check_sign(data, sigma)
    return data.weyl_order if sigma is Sign.ONE else data.weyl_order // 2


def in_h(data: RootSystemData, coords: Sequence[Fraction], sigma: Sign, dual: bool = False) -> bool:
    """Membership of a simplex point in the boundary set H^sigma."""
    return bool(zero_indices(coords) & negative_generators(data, sigma, dual))


def choose_reflection(data: RootSystemData, sigma: Sign, dual: bool = False) -> int:
    """Index of the generator used for the reflected half of the domain: lowest linear index in R^sigma."""
    if sigma is Sign.ONE:
        raise ValueError("no reflection needed for the trivial sign homomorphism")
    neg = negative_generators(data, sigma, dual)
    linear = sorted(i for i in neg if i > 0)
    return linear[0] if linear else 0


def locate(data: RootSystemData, x: Sequence, sigma: Sign, dual: bool = False) -> tuple[Point, bool]:
    """Return ``(x', reflected)`` with ``x'`` in the simplex and ``x = r_sigma x'`` when reflected.

    Raises ``DomainError`` unless ``x`` lies in F or in r_sigma F^sigma.
    """
    x = tuple(Fraction(v) for v in x)
    if in_simplex(data, x, dual):
        return x, False
    if sigma is not Sign.ONE:
        pre = apply_generator(data, choose_reflection(data, sigma, dual), x, dual)
        coords = simplex_coords(data, pre, dual)
        if all(y >= 0 for y in coords) and not in_h(data, coords, sigma, dual):
            return pre, True
    raise DomainError(f"point {tuple(map(str, x))} outside the fundamental domain")


def stabilizer_order_one(data: RootSystemData, x: Sequence, dual: bool = False) -> int:
    coords = simplex_coords(data, x, dual)
    if min(coords) < 0:
        raise DomainError("point not reduced")
    return reflection_subgroup_order(data, zero_indices(coords) - {None}, dual)


def stabilizer_order_primal(data: RootSystemData, a: Sequence, sigma: Sign) -> int:
    """h^sigma(a) for a point of F (omega^vee coordinates)."""
    check_sign(data, sigma)
    coords = simplex_coords(data, a)
    if min(coords) < 0:
        raise DomainError("point not reduced")
    h = reflection_subgroup_order(data, zero_indices(coords))
    return h // 2 if in_h(data, coords, sigma) else h


def epsilon(data: RootSystemData, a: Sequence, sigma: Sign) -> int:
    """``|W^sigma| / h^sigma(a)`` for a in F or in r_sigma F^sigma."""
    base, _ = locate(data, a, sigma)
    return even_order(data, sigma) // stabilizer_order_primal(data, base, sigma)


def dual_stabilizer_order(data: RootSystemData, b: Sequence[int], M: int, sigma: Sign) -> int:
    """h_M^{vee sigma}(b) for b in M (F^vee union r_sigma F^{vee sigma})."""
    check_sign(data, sigma)
    if M < 1:
        raise ValueError("M must be a positive integer")
    z, _ = locate(data, [Fraction(x, M) for x in b], sigma, dual=True)
    coords = simplex_coords(data, z, dual=True)
    h = reflection_subgroup_order(data, zero_indices(coords), True)
    return h // 2 if in_h(data, coords, sigma, dual=True) else h


def in_boundary_h(data: RootSystemData, point: Sequence, sigma_tilde: Sign, sigma: Sign,
                  dual: bool = False, M: int | None = None) -> bool:
    """Membership in H^{sigma~, sigma} (or its dual ``H^{vee sigma~, sigma}`` for ``b / M``).

    On F this is H^{sigma~} and H^{sigma~ sigma}.  A reflected point
    ``r_sigma x`` with x in F^sigma belongs to it iff x is in H^{sigma~}.
    """
    check_sign(data, sigma_tilde)
    check_sign(data, sigma)
    if dual:
        if M is None:
            raise ValueError("M required for the dual side")
        point = [Fraction(x, M) for x in point]
    base, reflected = locate(data, point, sigma, dual)
    coords = simplex_coords(data, base, dual)
    if reflected:
        return in_h(data, coords, sigma_tilde, dual)
    return in_h(data, coords, sigma_tilde, dual) and in_h(data, coords, sigma_tilde * sigma, dual)


def in_domain(data: RootSystemData, point: Sequence, sigma_tilde: Sign, sigma: Sign,
              dual: bool = False, M: int | None = None) -> bool:
    """Membership in F^{sigma~, sigma} (dual: ``b / M`` in F^{vee sigma~, sigma})."""
    try:
        return not in_boundary_h(data, point, sigma_tilde, sigma, dual, M)
    except DomainError:
        return False


__all__ = [
    "AffineMap", "affine_generators", "apply_generator", "choose_reflection",
    "dual_simplex_coords", "dual_stabilizer_order", "epsilon", "even_order",
    "in_boundary_h", "in_domain", "in_h", "in_simplex", "locate",
    "reduce_to_fundamental", "reflection_matrices", "reflection_subgroup_order",
    "simplex_coords", "stabilizer_order_one", "stabilizer_order_primal", "zero_indices",
]
