import random

import sympy
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy.matrices.normalforms import smith_normal_form

from magnusprop import lattice as lat

small = st.integers(-9, 9)


def matrices(max_rows=4, max_cols=4):
    return st.integers(1, max_rows).flatmap(
        lambda m: st.integers(1, max_cols).flatmap(
            lambda n: st.lists(st.lists(small, min_size=n, max_size=n), min_size=m, max_size=m)))


@settings(max_examples=200, deadline=None)
@given(matrices())
def test_hnf_transform_reproduces_input(a):
    h, u = lat.hnf(a)
    assert lat.mat_mul(u, a) == h
    assert abs(lat.det(u)) == 1
    pivots = []
    for row in h:
        nz = [j for j, v in enumerate(row) if v]
        if nz:
            pivots.append(nz[0])
            assert row[nz[0]] > 0
    assert pivots == sorted(pivots) and len(set(pivots)) == len(pivots)


@settings(max_examples=200, deadline=None)
@given(matrices())
def test_smith_matches_sympy(a):
    d, p, q = lat.smith(a)
    assert lat.mat_mul(lat.mat_mul(p, a), q) == d
    ours = lat.elementary_divisors(a)
    ref = smith_normal_form(sympy.Matrix(a), domain=sympy.ZZ)
    theirs = [abs(int(ref[i, i])) for i in range(min(ref.shape)) if ref[i, i] != 0]
    assert ours == theirs
    for x, y in zip(ours, ours[1:]):
        assert y % x == 0


@settings(max_examples=200, deadline=None)
@given(matrices())
def test_rank_and_det_match_sympy(a):
    M = sympy.Matrix(a)
    assert lat.rank(a) == M.rank()
    if len(a) == len(a[0]):
        assert lat.det(a) == M.det()


@settings(max_examples=150, deadline=None)
@given(matrices())
def test_left_kernel_is_saturated_basis(a):
    ker = lat.left_kernel(a)
    for v in ker:
        assert lat.vec_mat(v, a) == [0] * len(a[0])
    assert len(ker) == len(a) - lat.rank(a)


@settings(max_examples=150, deadline=None)
@given(matrices(), st.lists(small, min_size=4, max_size=4))
def test_solve_left_finds_lattice_members(a, coeffs):
    y = coeffs[:len(a)]
    target = lat.vec_mat(y, a)
    sol = lat.solve_left(a, target)
    assert sol is not None and lat.vec_mat(sol, a) == target


def test_solve_left_rejects_non_members():
    assert lat.solve_left([[2, 0], [0, 2]], [1, 0]) is None


def test_inverse_unimodular_and_index():
    rng = random.Random(1)
    u = lat.identity(4)
    for _ in range(20):
        i, j = rng.sample(range(4), 2)
        k = rng.randint(-3, 3)
        u[i] = [x + k * y for x, y in zip(u[i], u[j])]
    inv = lat.inverse_unimodular(u)
    assert lat.mat_mul(inv, u) == lat.identity(4)
    assert lat.lattice_index([[2, 0], [0, 3]], 2) == 6
    assert lat.lattice_index([[1, 1]], 2) == 0
