import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from magnusprop.cyclotomic import (CycInt, LaurentPoly, ModTp, WitnessError, build_f, build_fbar,
                                   check_explicit_expansion_p5, check_wreath_certificate,
                                   cyc_inverse_unit, explicit_pair_p5, is_root_of_unity,
                                   not_power_of_T, nu, verify_wreath_witness)
from magnusprop.cyclotomic.units import NotAUnitError

laurent = st.dictionaries(st.integers(-4, 6), st.integers(-5, 5), max_size=5).map(LaurentPoly)


@settings(max_examples=150, deadline=None)
@given(laurent, laurent, laurent)
def test_laurent_ring_axioms(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert a - a == LaurentPoly.const(0)


@settings(max_examples=150, deadline=None)
@given(laurent, st.integers(0, 4))
def test_division_by_monic_recovers_dividend(a, k):
    d = LaurentPoly.T(5) - 1
    q, r = (a.shift(k)).divmod_monic(d)
    assert q * d + r == a.shift(k)
    assert (a * d).divide_exact(d) == a


@settings(max_examples=100, deadline=None)
@given(laurent)
def test_reduction_mod_cyclotomic_is_a_ring_map(a):
    p = 7
    b = LaurentPoly.from_list([1, -2, 0, 3])
    assert CycInt.reduce(p, a * b) == CycInt.reduce(p, a) * CycInt.reduce(p, b)
    assert ModTp.reduce(p, a * b) == ModTp.reduce(p, a) * ModTp.reduce(p, b)


def test_zeta_has_order_p():
    for p in (3, 5, 7):
        z = CycInt.zeta(p)
        assert z ** p == CycInt.const(p, 1)
        assert z != CycInt.const(p, 1)
        total = CycInt.const(p, 0)
        for k in range(p):
            total = total + CycInt.zeta(p, k)
        assert total.is_zero()


@pytest.mark.parametrize("p", [5, 7, 11, 13])
def test_unit_and_inverse(p):
    u = nu(p)
    inv = cyc_inverse_unit(p, u)
    assert u * inv == CycInt.const(p, 1)
    assert not is_root_of_unity(p, u)


def test_non_unit_is_rejected():
    with pytest.raises(NotAUnitError):
        cyc_inverse_unit(5, CycInt.const(5, 1) - CycInt.zeta(5))


@pytest.mark.parametrize("p", [5, 7, 11, 13])
def test_f_and_fbar(p):
    f = build_f(p)
    fbar, q = build_fbar(p, f)
    assert f.eval_at_one() == 1 and fbar.eval_at_one() == 1
    assert f * fbar == 1 + q * (LaurentPoly.T(p) - 1)
    assert CycInt.reduce(p, f) == nu(p)
    assert not_power_of_T(p, f)


@pytest.mark.parametrize("p", [5, 7, 11, 13])
def test_wreath_witness_certificate(p):
    cert = verify_wreath_witness(p)
    assert cert["verdict"]
    for part in ("part_b", "part_c", "part_d"):
        assert cert[part]["holds"]
    assert cert["part_a"]["nu_not_root_of_unity"]
    assert check_wreath_certificate(cert)


def test_tampered_certificate_is_rejected():
    cert = verify_wreath_witness(5)
    bad = dict(cert)
    bad["v"] = {"0": 1}
    assert not check_wreath_certificate(bad)


def test_p3_has_no_witness():
    with pytest.raises(WitnessError, match="root of unity"):
        verify_wreath_witness(3)


def test_explicit_p5_pair():
    f, fbar = explicit_pair_p5()
    tp1 = LaurentPoly.T(5) - 1
    assert ModTp.reduce(5, f * fbar) == ModTp.reduce(5, LaurentPoly.const(1))
    assert verify_wreath_witness(5, f=f)["verdict"]
    rep = check_explicit_expansion_p5()
    assert all(v for k, v in rep.items() if k != "product_mod_T5_minus_1")
    assert rep["product_mod_T5_minus_1"] == [1, 0, 0, 0, 0]
    assert (f * fbar - 1).divide_exact(tp1) * tp1 == f * fbar - 1
