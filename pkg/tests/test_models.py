import json
from pathlib import Path

import pytest

from relalg.models import (
    AbstractModel,
    AxiomReport,
    BUNDLED_NAMES,
    ModelFormatError,
    bundled_models,
    check_axioms,
    load_bundled,
    load_model,
    model_to_dict,
    product_model,
    recheck,
)

FIXTURES = Path(__file__).parent / "fixtures"

# Independent copy of the expected verdict matrix. test_models and the package
# each carry one; a change to either without the other is a failure.
EXPECTED_FLAGS = {
    "one_element": dict(lattice=True, monoid=True, converse=True, dedekind=True,
                        cone=True, choice=True, all_or_nothing=True,
                        extensional=True, universal_choice=True),
    "two_element": dict(lattice=True, monoid=True, converse=True, dedekind=True,
                        cone=True, choice=True, all_or_nothing=True,
                        extensional=True, universal_choice=True),
    "three_element": dict(lattice=True, monoid=True, converse=True, dedekind=True,
                          cone=True, choice=False, all_or_nothing=False,
                          extensional=True, universal_choice=True),
    "three_element_unit_top": dict(lattice=True, monoid=True, converse=True,
                                   dedekind=True, cone=False, choice=True,
                                   all_or_nothing=True, extensional=False,
                                   universal_choice=True),
    "four_element_point": dict(lattice=True, monoid=True, converse=True,
                               dedekind=True, cone=False, choice=False,
                               all_or_nothing=True, extensional=False,
                               universal_choice=True),
    "desharnais13": dict(lattice=True, monoid=True, converse=True, dedekind=True,
                         cone=True, choice=False, all_or_nothing=True,
                         extensional=False, universal_choice=True),
}


def test_bundled_names_and_sizes():
    assert BUNDLED_NAMES == tuple(EXPECTED_FLAGS)
    sizes = {name: len(load_bundled(name).elements) for name in BUNDLED_NAMES}
    assert sizes == {
        "one_element": 1,
        "two_element": 2,
        "three_element": 3,
        "three_element_unit_top": 3,
        "four_element_point": 4,
        "desharnais13": 13,
    }


def test_one_element_collapses_constants():
    m = load_bundled("one_element")
    assert m.bot == m.ident == m.top


def test_three_element_unit_top_identifies_id_with_top():
    m = load_bundled("three_element_unit_top")
    assert m.ident == m.top


@pytest.mark.parametrize("name", list(EXPECTED_FLAGS))
def test_axiom_matrix(name):
    rep = check_axioms(load_bundled(name))
    assert rep.flags() == EXPECTED_FLAGS[name]
    assert set(rep.counterexamples) == {a for a, v in EXPECTED_FLAGS[name].items() if not v}


def test_shipped_expectations_agree_with_matrix():
    for bm in bundled_models():
        assert bm.expected.flags() == EXPECTED_FLAGS[bm.name]
        assert check_axioms(bm.model).counterexamples == bm.expected.counterexamples


@pytest.mark.parametrize("name", list(EXPECTED_FLAGS))
def test_stored_counterexamples_still_refute(name):
    m = load_bundled(name)
    rep = check_axioms(m)
    for axiom, ce in rep.counterexamples.items():
        assert recheck(m, axiom, ce), (axiom, ce)


def test_recheck_unknown_axiom():
    m = load_bundled("two_element")
    with pytest.raises(ValueError, match="unknown axiom"):
        recheck(m, "completeness", ("top",))


def test_recheck_is_negative_on_healthy_instances():
    m = load_bundled("two_element")
    assert not recheck(m, "cone", ("top",))
    assert not recheck(m, "dedekind", ("top", "top", "top"))


def test_report_flags_and_ok():
    rep = check_axioms(load_bundled("three_element"))
    assert tuple(rep.flags()) == AxiomReport.AXIOMS
    assert not rep.ok
    assert check_axioms(load_bundled("two_element")).ok


# -- the 13-element algebra -------------------------------------------------------


def test_desharnais13_structure():
    m = load_bundled("desharnais13")
    e = m.elements
    assert len(e) == 13
    conv_names = {e[i]: e[m.conv[i]] for i in range(13)}
    assert conv_names["b"] == "c" and conv_names["c"] == "b"
    assert conv_names["b+id"] == "id+c" and conv_names["b+E"] == "E+c"
    assert all(conv_names[x] == x for x in ("bot", "a", "id", "E", "b+c", "b+id+c", "top"))
    assert [e[x] for x in m.points()] == ["a"]
    assert [e[x] for x in m.coreflexives()] == ["bot", "a", "id"]
    assert [e[x] for x in m.pers()] == ["bot", "a", "id", "E", "top"]


def test_desharnais13_E_has_no_index_but_top_does():
    m = load_bundled("desharnais13")
    assert m.index_of_per(m.idx("E")) is None
    assert m.elements[m.index_of_per(m.idx("top"))] == "a"


def test_desharnais13_generators():
    m = load_bundled("desharnais13")
    a, e_, top = m.idx("a"), m.idx("E"), m.top
    assert m.elements[m.comp[a][top]] == "b"
    assert m.elements[m.comp[top][a]] == "c"
    assert m.comp[a][e_] == a and m.comp[e_][a] == a


def _join_irreducibles(m: AbstractModel) -> list[int]:
    out = []
    for x in range(len(m.elements)):
        if x == m.bot:
            continue
        below = [y for y in range(len(m.elements)) if m.leq[y][x] and y != x]
        if all(m.joins[p][q] != x for p in below for q in below):
            out.append(x)
    return out


def test_desharnais13_composition_table_is_forced():
    """Rebuild the composition table by backtracking from first principles.

    Unknowns are the products of join-irreducible elements (everything else
    follows by join-distributivity). Constraints: 𝕀 unit, monotonicity,
    a ⊆ 𝕀 ⊆ E squeezing, converse contravariance, associativity, the cone
    rule, b = a∘⊤ and c = ⊤∘a, and all-or-nothing at the point a. Exactly one
    table survives, and it is the one shipped in the data file.
    """
    m = load_bundled("desharnais13")
    n = len(m.elements)
    A, B, C, ID, E = (m.idx(k) for k in ("a", "b", "c", "id", "E"))

    irr = _join_irreducibles(m)
    assert sorted(m.elements[i] for i in irr) == ["E", "a", "b", "c", "id"]
    irr_below = {x: [i for i in irr if m.leq[i][x]] for x in range(n)}
    for x in range(n):
        assert m.join_all(irr_below[x]) == x  # every element is a join of irreducibles

    def ext(t, x, y):
        out = m.bot
        for i in irr_below[x]:
            for j in irr_below[y]:
                out = m.joins[out][t[(i, j)]]
        return out

    def static_dom(i, j):
        vs = range(n)
        if (m.conv[j], m.conv[i]) == (i, j):
            vs = [v for v in vs if m.conv[v] == v]
        if i == A:
            vs = [v for v in vs if m.leq[v][j]]
        if j == A:
            vs = [v for v in vs if m.leq[v][i]]
        if i == E:
            vs = [v for v in vs if m.leq[j][v]]
        if j == E:
            vs = [v for v in vs if m.leq[i][v]]
        return list(vs)

    cells = [(i, j) for i in irr for j in irr if i != ID and j != ID]
    # a-row and a-column first (the generator equations prune those hard);
    # converse mirrors adjacent so they are derived, not searched
    order, seen = [], set()
    for cell in sorted(cells, key=lambda p: (p[0] != A and p[1] != A, p)):
        if cell in seen:
            continue
        order.append(cell)
        seen.add(cell)
        mirror = (m.conv[cell[1]], m.conv[cell[0]])
        if mirror != cell and mirror not in seen:
            order.append(mirror)
            seen.add(mirror)

    dom = {cell: static_dom(*cell) for cell in cells}

    def monotone_ok(t, cell, v):
        i, j = cell
        for other, v2 in t.items():
            if m.leq[other[0]][i] and m.leq[other[1]][j] and not m.leq[v2][v]:
                return False
            if m.leq[i][other[0]] and m.leq[j][other[1]] and not m.leq[v][v2]:
                return False
        return True

    def full_checks(t):
        for i in irr:
            for j in irr:
                if m.conv[t[(i, j)]] != t[(m.conv[j], m.conv[i])]:
                    return False
                if ext(t, i, j) != t[(i, j)]:
                    return False
        g = [[ext(t, x, y) for y in range(n)] for x in range(n)]
        for x in range(n):
            if x != m.bot and g[g[m.top][x]][m.top] != m.top:
                return False
        if g[A][m.top] != B or g[m.top][A] != C:
            return False
        atop_a = g[g[A][m.top]][A]
        for r in range(n):
            sq = g[g[A][r]][A]
            if sq != m.bot and sq != atop_a:
                return False
        for x in range(n):
            gx = g[x]
            for y in range(n):
                gxy = g[gx[y]]
                gy = g[y]
                for z in range(n):
                    if gxy[z] != gx[gy[z]]:
                        return False
        return True

    solutions = []

    def backtrack(t, k):
        if k == len(order):
            if full_checks(t):
                solutions.append(dict(t))
            return
        cell = order[k]
        i, j = cell
        mirror = (m.conv[j], m.conv[i])
        if mirror in t:
            v = m.conv[t[mirror]]
            if v in dom[cell] and monotone_ok(t, cell, v):
                t[cell] = v
                backtrack(t, k + 1)
                del t[cell]
            return
        for v in dom[cell]:
            if not monotone_ok(t, cell, v):
                continue
            t[cell] = v
            row_a = [t.get((A, jj)) for jj in irr]
            if all(x is not None for x in row_a) and m.join_all(row_a) != B:
                del t[cell]
                continue
            col_a = [t.get((ii, A)) for ii in irr]
            if all(x is not None for x in col_a) and m.join_all(col_a) != C:
                del t[cell]
                continue
            backtrack(t, k + 1)
            del t[cell]

    start = {(ID, j): j for j in irr}
    start.update({(i, ID): i for i in irr})
    backtrack(start, 0)

    assert len(solutions) == 1
    sol = solutions[0]
    assert all(m.comp[i][j] == sol[(i, j)] for i in irr for j in irr)


# -- products ----------------------------------------------------------------------


def test_product_model_matches_shipped_fixture():
    two = load_bundled("two_element")
    built = product_model(two, two)
    shipped = load_bundled("product_two_two")
    assert built.elements == shipped.elements
    assert built.leq == shipped.leq
    assert built.comp == shipped.comp
    assert built.conv == shipped.conv
    assert (built.ident, built.top, built.bot) == (shipped.ident, shipped.top, shipped.bot)


def test_product_breaks_exactly_the_cone_rule():
    rep = check_axioms(load_bundled("product_two_two"))
    assert rep.flags() == dict(lattice=True, monoid=True, converse=True, dedekind=True,
                               cone=False, choice=True, all_or_nothing=True,
                               extensional=True, universal_choice=True)
    assert rep.counterexamples == {"cone": ("bot|top",)}
    assert recheck(load_bundled("product_two_two"), "cone", ("bot|top",))


# -- loading & validation -----------------------------------------------------------


@pytest.mark.parametrize(
    "fixture,category,fragment",
    [
        ("corrupt_format", "format", "3x3 matrix"),
        ("corrupt_order", "order", "not antisymmetric"),
        ("corrupt_lattice", "lattice", "no unique join"),
        ("corrupt_converse", "converse", "(id, top)"),
        ("broken_assoc", "associativity", "(a, a, top)"),
    ],
)
def test_loader_diagnostics(fixture, category, fragment):
    with pytest.raises(ModelFormatError) as exc:
        load_model(FIXTURES / f"{fixture}.json")
    assert exc.value.category == category
    assert fragment in str(exc.value)


def test_loader_rejects_missing_key():
    with pytest.raises(ModelFormatError, match="missing key 'converse'"):
        load_model({"elements": ["e"], "leq": [["e", "e"]], "compose": [["e"]],
                    "identity": "e", "top": "e", "bottom": "e"})


def test_loader_rejects_unknown_element():
    with pytest.raises(ModelFormatError, match="unknown element 'zz'"):
        load_model({"elements": ["e"], "leq": [["e", "zz"]], "compose": [["e"]],
                    "converse": ["e"], "identity": "e", "top": "e", "bottom": "e"})


def test_loader_rejects_bad_json_file(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text('{"elements": [,]}')
    with pytest.raises(ModelFormatError, match="invalid JSON at line 1"):
        load_model(path)


def test_load_bundled_rejects_unknown_name():
    with pytest.raises(KeyError, match="no bundled model"):
        load_bundled("five_element")


def test_model_to_dict_round_trips():
    for name in BUNDLED_NAMES:
        m = load_bundled(name)
        again = load_model(model_to_dict(m), name=name)
        assert again == m


def test_broken_assoc_diagnostic_names_least_triple():
    """The reported triple is the first violating one in element scan order."""
    data = json.loads((FIXTURES / "broken_assoc.json").read_text())
    names = data["elements"]
    pos = {x: i for i, x in enumerate(names)}
    comp = [[pos[v] for v in row] for row in data["compose"]]
    violations = [
        (x, y, z)
        for x in range(len(names))
        for y in range(len(names))
        for z in range(len(names))
        if comp[comp[x][y]][z] != comp[x][comp[y][z]]
    ]
    assert violations, "fixture must actually break associativity"
    least = violations[0]
    with pytest.raises(ModelFormatError) as exc:
        load_model(FIXTURES / "broken_assoc.json")
    assert tuple(names[i] for i in least) == ("a", "a", "top")
    assert "(a, a, top)" in str(exc.value)
