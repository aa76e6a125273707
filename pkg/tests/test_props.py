import pytest

import oracles
from isodense import props, topo
from isodense.ground import GroundSet, SetFamily
from isodense.topo import GenTopology

X2 = GroundSet.of_size(2)
X3 = GroundSet.of_size(3)


def space(g, *sets):
    return GenTopology(g, SetFamily(g.subset(s) for s in sets))


EX25 = space(X3, [], ["1", "2", "3"], ["1", "2"], ["2", "3"])
EX45 = space(X3, [], ["1", "2", "3"], ["1", "2"])


def test_separation_examples():
    sup = topo.superset_topology(1, X2)
    assert props.is_T0(sup) and not props.is_T1(sup)
    assert props.t1_witness(sup) == 0
    disc = topo.discrete_topology(X3)
    assert props.is_T0(disc) and props.is_T1(disc)
    ind = topo.indiscrete_topology(X2)
    assert not props.is_T0(ind) and not props.is_T1(ind)
    assert props.t0_witness(ind) == (0, 1)


def test_indiscrete_and_discrete():
    assert props.is_indiscrete(GenTopology(X3, [0]))
    assert props.is_indiscrete(topo.indiscrete_topology(X3))
    assert not props.is_indiscrete(EX45) and not props.is_discrete(EX45)
    assert props.is_discrete(topo.discrete_topology(X3))


def test_iso_density_examples():
    empty = GenTopology(X2, [0])
    assert props.is_iso_dense(empty) and props.is_dense_in_itself(empty)
    assert props.is_iso_dense(topo.superset_topology(1, X3))
    assert not props.is_iso_dense(EX25) and props.is_dense_in_itself(EX25)


def test_resolvability_examples():
    assert props.resolving_pair(EX25) == (X3.subset(["2"]), X3.subset(["1", "3"]))
    assert props.is_resolvable(EX45)
    assert not props.is_resolvable(topo.indiscrete_topology(GroundSet.of_size(1)))
    assert props.is_resolvable(topo.indiscrete_topology(X2))
    assert props.is_resolvable(GenTopology(X3, [0]))


def test_f_d_examples():
    ind = topo.indiscrete_topology(X2)
    assert props.f_d_T(ind) and not props.f_d(ind)
    sup = topo.superset_topology(1, X3)
    assert props.f_d(sup) and props.f_d_T(sup)
    assert not props.f_d(EX25) and not props.f_d_T(EX25)
    a, b = props.f_d_T_witness(EX25)
    assert (a & b) and not EX25.is_dense(a & b)


@pytest.mark.parametrize("n", [0, 1, 2, 3])
def test_profile_matches_oracle(n):
    g = GroundSet.of_size(n)
    X = frozenset(range(n))
    for code in range(1 << (1 << n)):
        f = SetFamily.from_code(code, n)
        if not topo.is_generalized_topology(f):
            continue
        t = GenTopology(g, f, validate=False)
        opens = oracles.to_family(f)
        p = props.profile(t)
        assert p.is_T0 == oracles.is_T0(opens, X)
        assert p.is_T1 == oracles.is_T1(opens, X)
        assert p.is_resolvable == oracles.is_resolvable(opens, X)
        assert p.f_d == oracles.f_d(opens, X)
        assert p.f_d_T == oracles.f_d_T(opens, X)
        iso = oracles.isolated(opens, X)
        assert p.is_iso_dense == oracles.is_dense(opens, X, iso)
        assert p.is_dense_in_itself == (not iso)
        assert p.is_indiscrete == (opens <= {frozenset(), X})
        assert p.is_discrete == (len(opens) == 2 ** n)


def test_profile_witnesses_are_genuine():
    for code in range(1 << 8):
        f = SetFamily.from_code(code, 3)
        if not topo.is_generalized_topology(f):
            continue
        t = GenTopology(X3, f, validate=False)
        w = props.profile(t).witnesses
        if "resolvable" in w:
            d, e = w["resolvable"]
            assert d & e == 0 and t.is_dense(d) and t.is_dense(e)
        if "f_d" in w:
            a, b = w["f_d"]
            assert t.is_dense(a) and t.is_dense(b) and not t.is_dense(a & b)
        if "T1" in w:
            assert (t.full & ~w["T1"]) not in t.opens
        if "iso_dense" in w:
            assert w["iso_dense"] in t.opens and not w["iso_dense"] & t.isolated


def test_profile_json_uses_labels():
    out = props.profile(EX25).to_json(X3)
    assert out["is_resolvable"] is True
    assert out["witnesses"]["resolvable"] == [["2"], ["1", "3"]]


def test_cofinite_degenerates_to_discrete():
    for n in range(9):
        t = topo.cofinite_topology(GroundSet.of_size(n))
        assert props.is_discrete(t)
        assert props.f_d(t)
        assert props.is_resolvable(t) == (n == 0)
