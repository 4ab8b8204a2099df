import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles as o
from conftest import homogeneous_relations, pack, relations, unpack
from relalg import (
    Carrier,
    classify,
    compose,
    converse,
    difunctional_characterizations,
    enumerate_pers,
    enumerate_relations,
    identity,
    is_bijection,
    is_core_relation,
    is_coreflexive,
    is_difunctional,
    is_functional,
    is_injective,
    is_per,
    is_rectangle,
    is_square,
    ldom,
    per_characterizations,
    per_ldom,
    per_rdom,
    rdom,
)
from relalg.domains import domain_law_suite


def _all(na, nb, src="A", dst="B"):
    return list(enumerate_relations(Carrier(src, na), Carrier(dst, nb)))


# -- the four domain operators against the oracle -------------------------------------


@pytest.mark.parametrize("na,nb", [(1, 1), (2, 2), (2, 3), (3, 2), (3, 3)])
def test_domain_operators_match_oracle(na, nb):
    for r in _all(na, nb):
        ro = unpack(r)
        assert unpack(ldom(r)) == o.oldom(ro)
        assert unpack(rdom(r)) == o.ordom(ro)
        assert unpack(per_ldom(r)) == o.operldom(ro, na)
        assert unpack(per_rdom(r)) == o.operrdom(ro, nb)


@given(relations())
def test_per_domains_are_pers_and_least(r):
    lpd, rpd = per_ldom(r), per_rdom(r)
    assert o.ois_per(unpack(lpd)) and o.ois_per(unpack(rpd))
    assert compose(lpd, r) == r
    assert compose(r, rpd) == r


# -- predicates ------------------------------------------------------------------------


def test_predicates_match_oracle_exhaustively():
    for r in _all(3, 3):
        ro = unpack(r)
        assert is_functional(r) == o.ois_functional(ro)
        assert is_injective(r) == o.ois_injective(ro)
        assert is_difunctional(r) == o.ois_difunctional(ro)
        assert is_rectangle(r) == o.ois_rectangle(ro, 3, 3)
        assert is_bijection(r) == (o.ois_functional(ro) and o.ois_injective(ro))


def test_coreflexive_predicate_needs_matching_carriers():
    for r in _all(3, 3, dst="A"):
        assert is_coreflexive(r) == o.ois_coreflexive(unpack(r))
    # a heterogeneous relation is never coreflexive, not even the empty one
    assert not is_coreflexive(pack(3, 3, []))


def test_per_predicate_matches_oracle():
    for r in _all(3, 3, dst="A"):
        assert is_per(r) == o.ois_per(unpack(r))


def test_functional_follows_composition_order():
    # one source claiming two targets is fine; two sources sharing a target is not
    assert is_functional(pack(2, 2, [(0, 0), (0, 1)]))
    assert not is_functional(pack(2, 2, [(0, 0), (1, 0)]))
    assert is_injective(pack(2, 2, [(0, 0), (1, 0)]))
    assert not is_injective(pack(2, 2, [(0, 0), (0, 1)]))


def test_square_and_core_relation():
    sq = pack(2, 2, [(0, 0), (0, 1), (1, 0), (1, 1)], src="A", dst="A")
    assert is_square(sq)
    assert not is_square(pack(2, 2, [(0, 1)], src="A", dst="A"))
    bij = pack(2, 2, [(0, 1), (1, 0)])
    assert is_core_relation(bij)
    # a full block has a non-trivial row class, so it is compressible
    assert not is_core_relation(pack(2, 2, [(0, 0), (0, 1), (1, 0), (1, 1)]))


def test_is_square_false_for_heterogeneous():
    assert not is_square(pack(2, 3, []))
    assert not is_square(pack(2, 3, [(0, 0)]))


# -- characterization bundles -------------------------------------------------------------


@given(homogeneous_relations(max_size=3))
def test_per_characterizations_agree(q):
    chars = per_characterizations(q)
    assert set(chars) == {
        "symmetric and transitive",
        "R = R°∘R",
        "R = R≺",
        "R = R≻",
    }
    assert len(set(chars.values())) == 1
    assert chars["symmetric and transitive"] == is_per(q)


def test_per_characterizations_reject_heterogeneous():
    with pytest.raises(ValueError):
        per_characterizations(pack(2, 3, []))


@given(relations(max_size=3))
def test_difunctional_characterizations_agree(r):
    chars = difunctional_characterizations(r)
    assert len(chars) == 7
    assert len(set(chars.values())) == 1
    assert chars["R∘R°∘R ⊆ R"] == is_difunctional(r)


# -- classify --------------------------------------------------------------------------


def test_classify_block(block):
    rep = classify(block)
    assert rep.difunctional and not rep.functional and not rep.per
    assert not rep.coreflexive and not rep.rectangle
    assert rep.checks["R∘R°∘R ⊆ R"] is True
    assert rep.checks["R = R∘⊤∘R"] is False


def test_classify_identity():
    rep = classify(identity(Carrier("A", 2)))
    assert rep.coreflexive and rep.per and rep.bijection and rep.core_relation


@given(relations(max_size=3))
def test_classify_flags_cohere(r):
    rep = classify(r)
    assert rep.bijection == (rep.functional and rep.injective)
    if rep.square:
        assert rep.rectangle


# -- enumeration of pers -------------------------------------------------------------------


@pytest.mark.parametrize("n,expected", [(0, 1), (1, 2), (2, 5), (3, 15), (4, 52)])
def test_enumerate_pers_counts(n, expected):
    # sum over subsets of the carrier of the number of partitions of the subset
    pers = list(enumerate_pers(Carrier("A", n)))
    assert len(pers) == expected
    assert len(set(pers)) == expected
    assert all(is_per(p) for p in pers)


def test_enumerate_pers_matches_filter():
    brute = {r for r in _all(3, 3, dst="A") if o.ois_per(unpack(r))}
    assert set(enumerate_pers(Carrier("A", 3))) == brute


# -- bundled law suite ----------------------------------------------------------------------


@given(relations(max_size=3))
def test_domain_law_suite_all_true(r):
    suite = domain_law_suite(r)
    assert all(suite.values()), {k: v for k, v in suite.items() if not v}
