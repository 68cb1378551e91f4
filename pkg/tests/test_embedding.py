import random

import pytest

from magnusprop.cyclotomic import CycInt, LaurentPoly, build_f, nu
from magnusprop.embedding import (X, Y, EmbeddingError, FreeModVec, GroupRingElem, MagnusMat,
                                  OLaurent, embed_word, iterated_commutator, psi, theta_const,
                                  theta_Y, verify_prop_4_3, verify_prop_4_5, wedge)
from magnusprop.embedding import _H
from magnusprop.nilpotent import collect, hall_basis
from magnusprop.nilpotent.collect import expand_to_generators


def random_word(rng, length):
    return [(rng.randrange(2), rng.choice((1, -1))) for _ in range(length)]


def fox_module_part(word, c):
    """Module coordinate of a word by Fox calculus, independent of the matrix product."""
    H = _H.get(c)
    out = FreeModVec.zero(c)
    suffix = H.one
    for g, s in reversed(word):
        base = FreeModVec.e(c) if g == X else FreeModVec.f(c)
        if s == 1:
            out = out + base.act(suffix)
        else:
            out = out - base.act(H.mul(H.gen(g, -1), suffix))
        suffix = H.mul(H.gen(g, s), suffix)
    return out


def test_homomorphism_on_random_word_pairs():
    rng = random.Random(11)
    for k in range(1000):
        c = 2 if k % 2 else 3
        u, v = random_word(rng, rng.randint(0, 7)), random_word(rng, rng.randint(0, 7))
        M = embed_word(u + v, c)
        assert M == embed_word(u, c) * embed_word(v, c)
        assert M.h_word() == collect(u + v, 2, c)
        assert M.v == fox_module_part(u + v, c)


def test_free_reduction_and_inverse_words_map_to_identity():
    rng = random.Random(2)
    for _ in range(100):
        w = random_word(rng, rng.randint(1, 8))
        inv = [(g, -s) for g, s in reversed(w)]
        assert embed_word(w + inv, 2).is_identity()
        assert (embed_word(w, 3) * embed_word(w, 3).inverse()).is_identity()


@pytest.mark.parametrize("c", [1, 2])
def test_metabelian_type_relators_map_to_identity(c):
    # commutators of two elements of gamma_(c+1) lie in the kernel
    rng = random.Random(c)
    x, y = MagnusMat.generator(X, c), MagnusMat.generator(Y, c)
    for _ in range(30):
        a = embed_word(random_word(rng, 4), c)
        b = embed_word(random_word(rng, 4), c)
        u = y.comm(*([x] * (c - 1) + [a])) if c > 1 else y.comm(a)
        w = x.comm(*([y] * (c - 1) + [b])) if c > 1 else x.comm(b)
        assert not any(u.h) and not any(w.h)
        assert u.comm(w).is_identity()


@pytest.mark.parametrize("c", [1, 2, 3])
def test_nontrivial_normal_forms_of_next_class_are_not_killed(c):
    rng = random.Random(100 + c)
    basis = hall_basis(2, c + 1)
    hits = 0
    while hits < 100:
        exps = [rng.randint(-2, 2) if rng.random() < 0.5 else 0 for _ in range(len(basis))]
        if not any(exps):
            continue
        hits += 1
        assert not embed_word(expand_to_generators(basis, exps), c).is_identity()


def test_theta_is_equivariant():
    rng = random.Random(5)
    p, c = 5, 2
    H = _H.get(c)
    for _ in range(100):
        vec = embed_word(random_word(rng, 6), c).v
        h = embed_word(random_word(rng, 4), c).h
        lhs = theta_Y(p, vec.act(h))
        factor = OLaurent(p, {h[Y]: CycInt.zeta(p, h[X])})
        rhs = theta_Y(p, vec)
        assert lhs == (rhs[0] * factor, rhs[1] * factor)
        lc = theta_const(p, vec.act(h))
        rc = theta_const(p, vec)
        z = CycInt.zeta(p, h[X])
        assert lc == (rc[0] * z, rc[1] * z)
    assert H.one == (0,) * len(H.basis)


def test_y_to_one_square_commutes():
    rng = random.Random(6)
    for _ in range(100):
        p = rng.choice((5, 7))
        vec = embed_word(random_word(rng, rng.randint(0, 9)), rng.choice((1, 2, 3))).v
        ty = theta_Y(p, vec)
        assert (ty[0].eval_Y1(), ty[1].eval_Y1()) == theta_const(p, vec)


def test_conjugation_of_kernel_elements_acts_on_the_module():
    rng = random.Random(7)
    c = 2
    z = iterated_commutator(c, c)
    assert not any(z.h)
    for _ in range(50):
        w = embed_word(random_word(rng, 5), c)
        zw = z.conj(w)
        assert not any(zw.h)
        assert zw.v == z.v.act(w.h)


def test_power_of_x_module_part():
    for c in (1, 2, 3):
        H = _H.get(c)
        p = 5
        M = embed_word([(X, 1)] * p, c)
        total = GroupRingElem.zero(c)
        h = H.one
        for _ in range(p):
            total = total + GroupRingElem.of(c, h)
            h = H.mul(h, H.gen(X))
        assert M.v == FreeModVec(total, GroupRingElem.zero(c))
        assert theta_const(p, M.v)[0].is_zero()


def _random_olaurent(rng, p):
    return OLaurent(p, {k: CycInt(p, [rng.randint(-3, 3) for _ in range(p - 1)])
                        for k in rng.sample(range(-2, 4), 3)})


def test_wedge_is_antisymmetric_and_bilinear():
    rng = random.Random(8)
    p = 5
    for _ in range(100):
        u, v, w = ([_random_olaurent(rng, p), _random_olaurent(rng, p)] for _ in range(3))
        a = CycInt(p, [rng.randint(-2, 2) for _ in range(p - 1)])
        assert wedge(u, v) == -wedge(v, u)
        assert wedge(u, u).is_zero()
        uw = [u[0] + w[0], u[1] + w[1]]
        assert wedge(uw, v) == wedge(u, v) + wedge(w, v)
        au = [u[0] * OLaurent.const(p, a), u[1] * OLaurent.const(p, a)]
        assert wedge(au, v) == wedge(u, v).scale(a)


def test_psi_is_the_wedge_of_theta_images():
    c, p = 2, 5
    z1 = iterated_commutator(c, c)
    z2 = z1.comm(MagnusMat.generator(Y, c))
    assert psi(p, z1, z2) == wedge(theta_Y(p, z1.v), theta_Y(p, z2.v))
    assert psi(p, z2, z1) == -psi(p, z1, z2)


@pytest.mark.parametrize("c", [1, 2, 3])
def test_abelian_by_nilpotent_witness(c):
    cert = verify_prop_4_3(5, c)
    assert cert["verdict"]
    assert all(cert["checks"].values())
    assert "unverified_step" in cert


def test_hand_expanded_commutator_word():
    cert = verify_prop_4_3(5, 2)
    assert cert["checks"]["v_z_matches_hand_expansion"]


@pytest.mark.parametrize("c", [1, 2])
def test_class_two_by_nilpotent_wedge_computation(c):
    cert = verify_prop_4_5(5, c)
    checks = cert["checks"]
    assert cert["verdict"]
    assert checks["v_z1_theta_matches"]
    assert checks["z_psi_coefficient_is_+-(zeta-1)^(2c-2)"]
    assert checks["v_psi_nonzero"]
    assert checks["[g,w]_psi_zero_on_samples"]
    assert cert["sign_report"]["z_psi_coefficient_sign"] == "+"
    assert cert["sign_report"]["v_z2_theta_sign_vs_display"] == "-"


def test_wedge_coefficient_by_hand_for_class_one():
    # c = 1: theta(v_z1) = (1 - Y, zeta - 1) and v_z2 = v_z1 (y - 1)
    p = 5
    z1 = iterated_commutator(1, 1)
    z2 = z1.comm(MagnusMat.generator(Y, 1))
    coeff = psi(p, z1, z2).coeff(("ee", 1, 2))
    assert coeff == CycInt.const(p, 1)


def test_v_psi_uses_the_squared_root_of_unity():
    p, c = 5, 1
    cert = verify_prop_4_5(p, c)
    assert cert["checks"]["v_psi_equals_z_psi_times_(f(zeta^2)-1)"]
    f = build_f(p)
    assert CycInt.reduce(p, f.subst_power(2)) != nu(p)


def test_bad_parameters_are_rejected():
    with pytest.raises(ValueError):
        verify_prop_4_3(4, 2)
    with pytest.raises(ValueError):
        verify_prop_4_5(5, 3)
    with pytest.raises(EmbeddingError):
        verify_prop_4_3(5, 2, witness={"verdict": False})
    with pytest.raises(ValueError):
        embed_word([], 0)
    assert LaurentPoly.T(0) == LaurentPoly.const(1)
