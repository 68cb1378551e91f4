import itertools

import numpy as np
import pytest

from magnusprop import groups as gc


def test_cyclic_and_dihedral_orders():
    assert gc.build_cyclic(7).order == 7
    assert gc.build_dihedral(5).order == 10
    assert gc.build_quaternion().order == 8
    assert gc.build_metacyclic(3, 2).order == 27
    assert gc.build_three_group().order == 243


@pytest.mark.parametrize("G", [gc.build_cyclic(6), gc.build_dihedral(4), gc.build_quaternion(),
                               gc.build_metacyclic(5, 2)], ids=lambda G: G.name)
def test_tables_are_groups(G):
    G.validate()
    assert G.check_associative()
    for g in range(G.order):
        assert G.m(g, int(G.inv[g])) == 0


def test_commutator_and_conjugation_conventions():
    G = gc.build_dihedral(5)
    for g, w in itertools.product(range(G.order), repeat=2):
        assert G.conj(g, w) == G.product([int(G.inv[w]), g, w])
        assert G.comm(g, w) == G.product([int(G.inv[g]), int(G.inv[w]), g, w])


def test_quaternion_not_abelian_but_every_subgroup_normal():
    Q = gc.build_quaternion()
    assert any(Q.m(a, b) != Q.m(b, a) for a in range(8) for b in range(8))
    for g in range(8):
        assert Q.subgroup([g]).is_normal()


def test_series_of_dihedral_and_quaternion():
    s = gc.series(gc.build_dihedral(4))
    assert s.nilpotent and s.nilpotency_class == 2
    assert s.center.order == 2
    s3 = gc.series(gc.build_dihedral(3))
    assert not s3.nilpotent
    with pytest.raises(gc.NotNilpotentError):
        s3.nilpotency_class


def test_three_group_structure():
    G = gc.build_three_group()
    s = gc.series(G)
    derived = G.commutator_subgroup(np.arange(G.order), np.arange(G.order))
    assert s.center == derived and derived.order == 9
    assert gc.build_quotient(G, s.center).order == 27
    assert G.normal_closure([G.index_of("a")]).order == 27


def test_cyclic_mp_orders():
    mp = [m for m in range(1, 31) if gc.is_mp(gc.build_cyclic(m)).verdict]
    assert mp == [1, 2, 3, 4, 6]


def test_three_group_counterexample_reverifies():
    G = gc.build_three_group()
    rep = gc.is_mp(G)
    assert not rep.verdict
    g, h = rep.counterexample
    assert (G.labels[g], G.labels[h]) == ("a", "a^4")
    assert rep.verify_counterexample()
    assert not gc.check_3group_criterion(G)


def test_mp_groups_have_no_counterexample():
    for G in (gc.build_dihedral(3), gc.build_quaternion(), gc.build_metacyclic(3, 2)):
        rep = gc.is_mp(G)
        assert rep.verdict and rep.counterexample is None


def test_weak_mp_on_cyclic_groups():
    for m in (5, 8, 12):
        assert gc.is_weak_mp_linear(gc.build_cyclic(m)).verdict


def test_cocentraliser_is_commutator_closure():
    G = gc.build_dihedral(6)
    for g in range(G.order):
        cc = gc.cocentraliser(G, g)
        assert set(gc.commutator_set(G, g).tolist()) <= set(cc.members.tolist())
        assert cc.is_normal()


def test_basic_witness_pair_in_three_group():
    G = gc.build_three_group()
    a = G.index_of("a")
    v = G.m(int(G.inv[a]), G.index_of("a^4"))
    assert gc.is_basic_witness_pair(G, a, v)


def test_normal_subgroups_of_dihedral_4():
    orders = sorted(N.order for N in gc.normal_subgroups(gc.build_dihedral(4)))
    assert orders == [1, 2, 4, 4, 4, 8]


def test_quotient_and_direct_product_orders():
    G = gc.build_dihedral(6)
    Z = gc.series(gc.build_dihedral(4)).center
    assert gc.build_quotient(gc.build_dihedral(4), Z).order == 4
    P = gc.build_direct_product(G, gc.build_cyclic(3))
    assert P.order == 36 and P.check_associative()


def test_json_roundtrip():
    G = gc.build_metacyclic(3, 2)
    H = gc.FiniteGroup.from_json(G.to_json())
    assert np.array_equal(G.mul, H.mul)
    assert G.labels == H.labels


def test_criterion_rejects_non_three_groups():
    with pytest.raises(gc.GroupError):
        gc.check_3group_criterion(gc.build_cyclic(4))
