from fractions import Fraction as Fr

import numpy as np
import pytest

from weylorbit.errors import UnsupportedAlgebra
from weylorbit.rootdata import (AlgebraId, alpha_check_to_omega_check, build_root_system,
                                omega_check_to_alpha_check, omega_to_alpha, orthonormal_embedding,
                                orthonormal_label, pairing, pairing_omega)

ALL = ["A1", "A2", "A3", "A5", "B3", "B4", "B5", "C2", "C3", "C4", "D4", "D5", "D6",
       "E6", "E7", "E8", "F4", "G2"]

CONNECTION = {"A": lambda n: n + 1, "B": lambda n: 2, "C": lambda n: 2, "D": lambda n: 4,
              "E": lambda n: {6: 3, 7: 2, 8: 1}[n], "F": lambda n: 1, "G": lambda n: 1}

COXETER = {"A1": 2, "A2": 3, "A3": 4, "A5": 6, "B3": 6, "B4": 8, "B5": 10, "C2": 4, "C3": 6,
           "C4": 8, "D4": 6, "D5": 8, "D6": 10, "E6": 12, "E7": 18, "E8": 30, "F4": 12, "G2": 6}


def positive_roots(cartan):
    """All positive roots (simple-root coordinates) by root strings: an independent oracle."""
    n = len(cartan)
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    roots = set(simple)
    layer = list(simple)
    while layer:
        nxt = []
        for beta in layer:
            for i in range(n):
                # <beta, alpha_i^vee> with C_ij = <alpha_i, alpha_j^vee>
                pair = sum(beta[j] * cartan[j][i] for j in range(n))
                p = 0
                down = list(beta)
                while True:
                    down[i] -= 1
                    if tuple(down) in roots:
                        p += 1
                    else:
                        break
                if p - pair > 0:
                    up = list(beta)
                    up[i] += 1
                    if tuple(up) not in roots:
                        roots.add(tuple(up))
                        nxt.append(tuple(up))
        layer = nxt
    return roots


@pytest.mark.parametrize("name", ALL)
def test_invariants(name):
    d = build_root_system(name)
    n = d.rank
    C = np.array(d.cartan)
    assert round(np.linalg.det(C)) == d.connection_index == CONNECTION[d.algebra.family](n)
    assert d.coxeter_number == 1 + sum(d.marks) == 1 + sum(d.dual_marks) == COXETER[name]
    G = d.gram
    for i in range(n):
        for j in range(n):
            assert G[i][j] == G[j][i]
            assert d.cartan[i][j] == 2 * G[i][j] / G[j][j]
    assert max(G[i][i] for i in range(n)) == 2
    assert np.all(np.linalg.eigvalsh(np.array(G, dtype=float)) > 0)
    if not d.two_lengths:
        assert d.short_set == frozenset() and d.marks == d.dual_marks
    else:
        assert d.short_set and d.long_set
        assert d.short_set | d.long_set == set(range(1, n + 1))


@pytest.mark.parametrize("name", ALL)
def test_marks_against_root_string_oracle(name):
    d = build_root_system(name)
    roots = positive_roots(d.cartan)
    highest = max(roots, key=sum)
    assert highest == d.marks
    # highest root is dominant
    assert all(sum(highest[j] * d.cartan[j][i] for j in range(d.rank)) >= 0 for i in range(d.rank))
    # dual system: Cartan transpose; its highest root gives the dual marks
    dual_roots = positive_roots([list(r) for r in zip(*d.cartan)])
    assert max(dual_roots, key=sum) == d.dual_marks
    # |positive roots| = n h / 2
    assert len(roots) == d.rank * d.coxeter_number // 2


def test_examples():
    c2 = build_root_system("C2")
    assert c2.marks == (2, 1) and c2.connection_index == 2 and c2.coxeter_number == 4
    assert c2.short_set == {1} and c2.long_set == {2}
    a1 = build_root_system("A1")
    assert a1.cartan == ((2,),) and a1.connection_index == 2 and a1.marks == (1,)
    assert a1.coxeter_number == 2
    g2 = build_root_system("G2")
    assert g2.connection_index == 1 and g2.coxeter_number == 6
    assert sorted(g2.marks) == [2, 3]


@pytest.mark.parametrize("bad", ["B2", "D3", "E9", "F5", "G3", "H3", "A0", "C1", "X2", ""])
def test_inadmissible(bad):
    with pytest.raises(UnsupportedAlgebra, match="unsupported algebra"):
        build_root_system(bad)


def test_algebra_id_two_lengths():
    assert [AlgebraId.parse(s).two_lengths for s in ("B3", "C2", "F4", "G2", "A2", "D4", "E6")] == \
        [True] * 4 + [False] * 3


def test_pairing_examples():
    assert pairing((1, 0), (Fr(1, 4), Fr(1, 2))) == Fr(1, 4)
    assert pairing((0, 0), (Fr(3, 7), Fr(-2, 5))) == 0
    assert pairing((1, 1), (Fr(1, 3), Fr(2, 3))) == 1
    with pytest.raises(ValueError):
        pairing((1, 0, 0), (1, 2))


def test_coordinate_maps():
    a1 = build_root_system("A1")
    assert omega_check_to_alpha_check(a1, (1,)) == (Fr(1, 2),)
    c2 = build_root_system("C2")
    assert omega_check_to_alpha_check(c2, (0, 0)) == (0, 0)
    y = omega_check_to_alpha_check(c2, (1, 0))
    # <alpha_i, y> = delta_i1, i.e. C y = e_1
    assert alpha_check_to_omega_check(c2, y) == (1, 0)
    for name in ["G2", "F4", "B3", "E6"]:
        d = build_root_system(name)
        rng = np.random.default_rng(1)
        for _ in range(10):
            u = tuple(Fr(int(a), int(b)) for a, b in zip(rng.integers(-9, 9, d.rank),
                                                         rng.integers(1, 9, d.rank)))
            assert alpha_check_to_omega_check(d, omega_check_to_alpha_check(d, u)) == u


def test_pairing_omega_is_dual():
    # <omega_i, omega_j^vee> pairs to (C^-1)_ij ; for omega_i vs alpha_j^vee it is delta
    d = build_root_system("B3")
    for i in range(3):
        for j in range(3):
            e_i = [int(k == i) for k in range(3)]
            alpha_j_check = alpha_check_to_omega_check(d, [int(k == j) for k in range(3)])
            assert pairing_omega(d, e_i, alpha_j_check) == int(i == j)


def test_orthonormal_c2():
    c2 = build_root_system("C2")
    assert orthonormal_embedding(c2, (Fr(1, 2), 0)) == (Fr(1, 2), Fr(1, 2))
    assert orthonormal_embedding(c2, (0, 1)) == (0, 1)
    assert orthonormal_embedding(c2, (0, 0)) == (0, 0)
    # basis is (alpha_1, alpha_1 + alpha_2): alpha_1 -> (1, 0), alpha_1 + alpha_2 -> (0, 1)
    assert orthonormal_label(c2, (2, -1)) == (1, 0)
    assert orthonormal_label(c2, (0, 1)) == (0, 1)


@pytest.mark.parametrize("name", ["A2", "B3", "C3", "D4", "F4", "G2", "E6"])
def test_orthonormal_reproduces_gram(name):
    d = build_root_system(name)
    n = d.rank
    # alpha_i in omega^vee coordinates is 2 alpha_i^vee / |alpha_i|^2 ... embed via alpha^vee basis
    vecs = []
    for i in range(n):
        y = [Fr(0)] * n
        y[i] = d.squared_lengths[i] / 2  # alpha_i = (|alpha_i|^2 / 2) alpha_i^vee
        vecs.append(np.array([float(x) for x in orthonormal_embedding(d, y, basis="alpha_check")]))
    for i in range(n):
        for j in range(n):
            assert abs(vecs[i] @ vecs[j] - float(d.gram[i][j])) < 1e-12
    with pytest.raises(ValueError):
        orthonormal_embedding(d, [0] * n, basis="nonsense")


def test_omega_to_alpha_roundtrip():
    d = build_root_system("C2")
    # omega_1 = alpha_1 + alpha_2 / 2 for C2 with alpha_2 long
    assert omega_to_alpha(d, (1, 0)) == (1, Fr(1, 2))
    assert omega_to_alpha(d, (0, 1)) == (1, 1)
