import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles as o
from conftest import homogeneous_relations, pack, relations, unpack
from relalg import (
    Carrier,
    CarrierMismatch,
    EnumerationLimit,
    Relation,
    RelationFormatError,
    bottom,
    cache_clear,
    complement,
    compose,
    cone_check,
    converse,
    coreflexive,
    dedekind_check,
    enumerate_coreflexives,
    enumerate_relations,
    equals,
    from_dict,
    from_pairs,
    identity,
    intersect,
    is_subset,
    to_dict,
    top,
    union,
)
from relalg.rel import relation_at, relation_code


# -- carriers ---------------------------------------------------------------------


def test_carrier_equality_is_nominal():
    assert Carrier("A", 3) == Carrier("A", 3)
    assert Carrier("A", 3) != Carrier("B", 3)
    assert Carrier("A", 3) != Carrier("A", 2)
    assert hash(Carrier("A", 3)) == hash(Carrier("A", 3))


def test_carrier_default_labels():
    assert Carrier("A", 3).labels == ("0", "1", "2")


def test_carrier_custom_labels():
    c = Carrier("People", 2, labels=("ann", "bob"))
    assert c.labels == ("ann", "bob")


def test_carrier_rejects_wrong_label_count():
    with pytest.raises(ValueError):
        Carrier("A", 2, labels=("x",))


def test_carrier_rejects_duplicate_labels():
    with pytest.raises(ValueError):
        Carrier("A", 2, labels=("x", "x"))


def test_carrier_rejects_negative_size():
    with pytest.raises(ValueError):
        Carrier("A", -1)


# -- construction and access --------------------------------------------------------


def test_from_pairs_and_pairs_round_trip():
    r = pack(2, 3, [(0, 2), (1, 0)])
    assert list(r.pairs()) == [(0, 2), (1, 0)]
    assert (0, 2) in r
    assert (0, 0) not in r
    assert r.bit_count() == 2
    assert bool(r)


def test_from_pairs_rejects_out_of_range():
    a, b = Carrier("A", 2), Carrier("B", 2)
    with pytest.raises(RelationFormatError):
        from_pairs(a, b, [(2, 0)])
    with pytest.raises(RelationFormatError):
        from_pairs(a, b, [(0, -1)])


def test_bottom_is_falsy():
    assert not bottom(Carrier("A", 2), Carrier("B", 2))


def test_coreflexive_constructor():
    p = coreflexive(Carrier("A", 3), [0, 2])
    assert unpack(p) == {(0, 0), (2, 2)}
    with pytest.raises(ValueError):
        coreflexive(Carrier("A", 3), [3])


def test_constants():
    a, b = Carrier("A", 2), Carrier("B", 3)
    assert unpack(top(a, b)) == o.otop(2, 3)
    assert unpack(identity(a)) == o.oid(2)
    assert unpack(bottom(a, b)) == frozenset()


# -- operators against the oracle ----------------------------------------------------


def _all_relations(na, nb, src="A", dst="B"):
    return list(enumerate_relations(Carrier(src, na), Carrier(dst, nb)))


def test_compose_matches_oracle_exhaustively_at_size_2():
    for r in _all_relations(2, 2):
        for s in _all_relations(2, 2, src="B", dst="C"):
            assert unpack(compose(r, s)) == o.ocompose(unpack(r), unpack(s))


@settings(max_examples=150)
@given(relations(max_size=4), st.integers(min_value=0, max_value=(1 << 16) - 1))
def test_compose_matches_oracle_sampled(r, bits):
    nb, nc = r.dst.size, 4
    pairs = [(k // nc, k % nc) for k in range(nb * nc) if (bits >> k) & 1]
    s = pack(nb, nc, pairs, src="B", dst="C")
    assert unpack(compose(r, s)) == o.ocompose(unpack(r), unpack(s))


@given(relations())
def test_converse_matches_oracle(r):
    assert unpack(converse(r)) == o.oconverse(unpack(r))
    assert converse(r).src == r.dst and converse(r).dst == r.src


@given(relations(), st.integers(min_value=0, max_value=(1 << 16) - 1))
def test_lattice_ops_match_oracle(r, bits):
    na, nb = r.src.size, r.dst.size
    pairs = [(k // nb, k % nb) for k in range(na * nb) if (bits >> k) & 1]
    s = pack(na, nb, pairs)
    assert unpack(union(r, s)) == unpack(r) | unpack(s)
    assert unpack(intersect(r, s)) == unpack(r) & unpack(s)
    assert is_subset(r, s) == (unpack(r) <= unpack(s))
    assert unpack(complement(r)) == o.otop(na, nb) - unpack(r)
    assert equals(r, s) == (unpack(r) == unpack(s))


def test_operator_sugar():
    r = pack(2, 2, [(0, 0), (0, 1)])
    s = pack(2, 2, [(0, 1)], src="B", dst="C")
    assert unpack(r @ s) == {(0, 1)}
    assert unpack(r & pack(2, 2, [(0, 0)])) == {(0, 0)}
    assert unpack(r | pack(2, 2, [(1, 1)])) == {(0, 0), (0, 1), (1, 1)}
    assert unpack(~r) == {(1, 0), (1, 1)}
    assert pack(2, 2, [(0, 0)]) <= r
    assert pack(2, 2, [(0, 0)]) < r
    assert r >= r and not (r > r)
    assert unpack(r.conv) == {(0, 0), (1, 0)}


def test_mismatched_carriers_raise():
    r = pack(2, 2, [])
    s = pack(3, 3, [], src="C", dst="D")
    with pytest.raises(CarrierMismatch):
        compose(r, s)
    with pytest.raises(CarrierMismatch):
        union(r, s)
    with pytest.raises(CarrierMismatch):
        is_subset(r, s)


# -- dedekind and cone ----------------------------------------------------------------


@settings(max_examples=100)
@given(st.data())
def test_dedekind_check_matches_oracle(data):
    na = data.draw(st.integers(min_value=1, max_value=3))
    nb = data.draw(st.integers(min_value=1, max_value=3))
    nc = data.draw(st.integers(min_value=1, max_value=3))
    def draw_rel(n, m, src, dst):
        bits = data.draw(st.integers(min_value=0, max_value=(1 << (n * m)) - 1))
        return pack(n, m, [(k // m, k % m) for k in range(n * m) if (bits >> k) & 1], src=src, dst=dst)

    r = draw_rel(na, nb, "A", "B")
    s = draw_rel(nb, nc, "B", "C")
    t = draw_rel(na, nc, "A", "C")
    ro, so, to_ = unpack(r), unpack(s), unpack(t)
    lhs = o.ocompose(ro, so) & to_
    rhs1 = o.ocompose(ro, so & o.ocompose(o.oconverse(ro), to_))
    rhs2 = o.ocompose(ro & o.ocompose(to_, o.oconverse(so)), so)
    assert dedekind_check(r, s, t) == (lhs <= rhs1, lhs <= rhs2)


def test_cone_check():
    assert cone_check(pack(2, 3, [(1, 2)]))
    assert cone_check(pack(2, 3, []))
    assert cone_check(top(Carrier("A", 2), Carrier("B", 2)))


# -- enumeration -----------------------------------------------------------------------


def test_enumerate_relations_counts():
    assert len(_all_relations(2, 2)) == 16
    assert len(_all_relations(3, 3)) == 512
    assert len(list(enumerate_coreflexives(Carrier("A", 3)))) == 8


def test_enumeration_order_matches_relation_code():
    a, b = Carrier("A", 2), Carrier("B", 2)
    for code, r in enumerate(enumerate_relations(a, b)):
        assert relation_code(r) == code
        assert relation_at(a, b, code) == r


def test_enumeration_refuses_large_carriers():
    with pytest.raises(EnumerationLimit):
        list(enumerate_relations(Carrier("A", 5), Carrier("B", 5)))
    assert len(_all_relations(2, 2)) == 16  # small ones still fine


# -- serialization -----------------------------------------------------------------------


@given(relations())
def test_json_round_trip(r):
    again = from_dict(json.loads(json.dumps(to_dict(r))))
    assert again == r
    assert again.src.labels == r.src.labels


@pytest.mark.parametrize(
    "mangle, field",
    [
        (lambda d: d.pop("src"), "src"),
        (lambda d: d["src"].update(size="two"), "src.size"),
        (lambda d: d["src"].pop("name"), "src"),
        (lambda d: d.update(pairs=[[0]]), "pairs[0]"),
        (lambda d: d.update(pairs=[[0, 9]]), "pairs[0]"),
        (lambda d: d.update(pairs="nope"), "pairs"),
        (lambda d: d["dst"].update(labels=["x", 3]), "dst.labels"),
        (lambda d: d["dst"].update(labels=["x"]), "dst"),
    ],
)
def test_from_dict_reports_field_paths(mangle, field):
    d = to_dict(pack(2, 2, [(0, 1)]))
    mangle(d)
    with pytest.raises(RelationFormatError) as exc:
        from_dict(d)
    assert exc.value.field == field


def test_from_dict_rejects_non_mapping():
    with pytest.raises(RelationFormatError):
        from_dict([1, 2, 3])


# -- cache plumbing ----------------------------------------------------------------------


def test_cache_clear_keeps_results_correct():
    r = pack(2, 2, [(0, 1), (1, 0)], src="A", dst="A")
    before = compose(r, r)
    cache_clear()
    assert compose(r, r) == before


@given(homogeneous_relations(max_size=3))
def test_compose_is_cached_by_value_not_identity(r):
    twin = pack(r.src.size, r.dst.size, list(r.pairs()), src=r.src.name, dst=r.dst.name)
    assert compose(r, twin) == compose(r, r)
