import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from magnusprop import lattice as lat
from magnusprop.nilpotent import (NilWord, build_G9, collect, hall_basis, parse_letters,
                                  quotient_by_relators, verify_prop_3_6, witt_number)
from magnusprop.nilpotent import truncated
from magnusprop.nilpotent.ncpoly import NcPoly, dynkin_is_lie, left_normed, lie_bracket, leading_monomial


def words(r, max_len=10):
    return st.lists(st.tuples(st.integers(0, r - 1), st.sampled_from((1, -1))), max_size=max_len)


@pytest.mark.parametrize("r,c", [(2, 1), (2, 3), (2, 5), (3, 3), (4, 3), (3, 4)])
def test_hall_counts_match_witt(r, c):
    assert hall_basis(r, c).counts() == [witt_number(r, n) for n in range(1, c + 1)]


def test_rank_two_class_three_basis_names():
    b = hall_basis(2, 3)
    assert b.counts() == [2, 1, 2]
    assert [b.name(i) for i in range(len(b))] == ["x", "y", "[y,x]", "[y,x,x]", "[y,x,y]"]


def test_rank_four_class_three_total():
    assert sum(hall_basis(4, 3).counts()) == 30


def test_commutator_of_generators_is_basic():
    b = hall_basis(2, 3)
    x, y = NilWord.generator(0, 2, 3), NilWord.generator(1, 2, 3)
    assert y.comm(x) == NilWord.basic(b, "[y,x]")
    assert y.comm(x, x) == NilWord.basic(b, "[y,x,x]")
    assert y.comm(x, y) == NilWord.basic(b, "[y,x,y]")


@pytest.mark.parametrize("r,c", [(2, 3), (3, 3), (2, 4)])
def test_collection_agrees_with_truncated_algebra(r, c):
    rng = random.Random(r * 10 + c)
    b = hall_basis(r, c)
    for _ in range(60):
        w = [(rng.randrange(r), rng.choice((1, -1))) for _ in range(rng.randint(0, 12))]
        nf = collect(w, r, c)
        assert truncated.image(w, c) == truncated.normal_form_image(b, nf.exponents, c)


@settings(max_examples=120, deadline=None)
@given(words(2), words(2), words(2))
def test_product_is_associative_and_matches_collection(u, v, w):
    r, c = 2, 3
    U, V, W = (NilWord.from_letters(s, r, c) for s in (u, v, w))
    assert (U * V) * W == U * (V * W)
    assert U * V == collect(u + v, r, c)


@settings(max_examples=120, deadline=None)
@given(words(3, 8))
def test_inverse_and_normal_form_roundtrip(u):
    r, c = 3, 3
    U = collect(u, r, c)
    assert (U * U.inverse()).is_identity()
    assert collect(U.letters(), r, c) == U
    assert NilWord.from_json(U.to_json()) == U


@settings(max_examples=60, deadline=None)
@given(words(2, 6), st.integers(-4, 4))
def test_powers_agree_with_repeated_products(u, k):
    U = collect(u, 2, 4)
    expected = NilWord.identity(2, 4)
    for _ in range(abs(k)):
        expected = expected * (U if k > 0 else U.inverse())
    assert U ** k == expected


def test_class_bound_kills_long_commutators():
    x, y = NilWord.generator(0, 2, 2), NilWord.generator(1, 2, 2)
    assert y.comm(x, x).is_identity()


def test_parse_letters():
    assert parse_letters("xYy", 2) == [(0, 1), (1, -1), (1, 1)]
    with pytest.raises(ValueError):
        parse_letters("q", 2)


def test_quotient_of_heisenberg_type():
    x, y = NilWord.generator(0, 2, 2), NilWord.generator(1, 2, 2)
    G = quotient_by_relators(2, 2, [y.comm(x) ** 3])
    assert G.hirsch_length == 2
    assert not G.torsion_free


def test_g9_certificate():
    G, cert = build_G9(triples=2000)
    assert cert["verdict"]
    assert G.hirsch_length == 9 and G.torsion_free
    assert cert["center"]["equals_gamma3"] and cert["center"]["rank"] == 1
    assert abs(lat.det(cert["pairing_matrix"])) == 1
    assert cert["consistency"]["failures"] == 0


def test_g9_products_associate_on_random_triples():
    G, _ = build_G9(triples=100)
    rng = random.Random(3)
    for _ in range(200):
        a, b, c = (G.random_element(rng) for _ in range(3))
        assert G.mul(G.mul(a, b), c) == G.mul(a, G.mul(b, c))
        assert G.mul(a, G.inv(a)) == G.identity()


def test_witness_in_free_class_three_group():
    cert = verify_prop_3_6()
    assert cert["verdict"]
    assert cert["weight_one_coordinates_zero"]
    assert cert["[y,x]_coordinate_is_-e2"]
    assert cert["[y,x,y]_coordinate_zero_on_central_locus"]
    assert cert["random_checks"]["mismatches"] == 0
    assert all(row["ok"] for row in cert["[x,[y,x]^n]"])
    assert cert["v_coordinates"] == {"[y,x]": 0, "[y,x,y]": 1}


def test_x_against_powers_of_commutator():
    x, y = NilWord.generator(0, 2, 3), NilWord.generator(1, 2, 3)
    yx = y.comm(x)
    yxx = y.comm(x, x)
    for n in range(-5, 6):
        assert x.comm(yx ** n) == yxx ** (-n)


def test_lie_elements_pass_dynkin_test():
    x, y = NcPoly.letter(0), NcPoly.letter(1)
    assert dynkin_is_lie(lie_bracket(lie_bracket(y, x), x))
    assert dynkin_is_lie(left_normed([1, 0, 1]))
    assert not dynkin_is_lie(NcPoly.word([0, 1]))


def test_leading_monomial_of_commutator():
    lead = leading_monomial(lie_bracket(NcPoly.letter(1), NcPoly.letter(0)))
    assert lead in ((1, 0), (0, 1))
