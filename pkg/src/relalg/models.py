"""Abstract (non-concrete) homogeneous relation-algebra models.

A model is a finite lattice-ordered monoid with converse, given entirely as
data: element names, the order, a composition table, a converse table, and
the three constants. Nothing here assumes the elements are relations between
sets — the point of these models is exactly that some of them cannot be.

load_model validates everything the type itself promises: shapes and name
resolution, the order being a partial order with all binary meets and joins,
composition a monoid with 𝕀 unit and ⊥ zero that distributes over joins, and
converse an involutive order-isomorphism reversing composition — each failure
a distinct diagnostic naming the first offending elements. The axioms under
investigation — the modular (Dedekind) law, the cone rule, existence of
indexes for pers, all-or-nothing, extensionality (saturation by points), and
the universal-choice variant — are *evaluated*, never assumed, by
check_axioms, which reports per-axiom verdicts plus a first counterexample
for each failure (it re-verifies the structural laws too, for models built
directly rather than loaded). recheck re-evaluates a stored counterexample so
reports stay honest.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Iterable


class ModelFormatError(ValueError):
    """Malformed model data. .category says which validation failed."""

    def __init__(self, category: str, message: str):
        super().__init__(f"{category}: {message}")
        self.category = category


@dataclass(frozen=True)
class AbstractModel:
    name: str
    elements: tuple[str, ...]
    leq: tuple[tuple[bool, ...], ...]          # leq[i][j]  ⇔  x_i ⊆ x_j
    comp: tuple[tuple[int, ...], ...]          # comp[i][j] = index of x_i∘x_j
    conv: tuple[int, ...]
    ident: int
    top: int
    bot: int
    joins: tuple[tuple[int, ...], ...] = field(repr=False)
    meets: tuple[tuple[int, ...], ...] = field(repr=False)

    # -- little element calculus ------------------------------------------

    def idx(self, name: str) -> int:
        try:
            return self.elements.index(name)
        except ValueError:
            raise KeyError(f"model {self.name!r} has no element {name!r}") from None

    def join_all(self, xs: Iterable[int]) -> int:
        out = self.bot
        for x in xs:
            out = self.joins[out][x]
        return out

    def coreflexives(self) -> list[int]:
        return [x for x in range(len(self.elements)) if self.leq[x][self.ident]]

    def pers(self) -> list[int]:
        return [
            x
            for x in range(len(self.elements))
            if self.conv[x] == x and self.leq[self.comp[x][x]][x]
        ]

    def atoms(self) -> list[int]:
        """Elements whose only strict lower bound is ⊥ (⊥ qualifies vacuously)."""
        out = []
        for x in range(len(self.elements)):
            if all(not self.leq[q][x] or q == x or q == self.bot for q in range(len(self.elements))):
                out.append(x)
        return out

    def points(self) -> list[int]:
        return [x for x in self.atoms() if x != self.bot and self.leq[x][self.ident]]

    def rdom(self, x: int) -> int:
        return self.meets[self.ident][self.comp[self.conv[x]][x]]

    def ldom(self, x: int) -> int:
        return self.meets[self.ident][self.comp[x][self.conv[x]]]

    def index_of_per(self, p: int) -> int | None:
        """A coreflexive j with j ⊆ P<, j∘P∘j = j and P∘j∘P = P, if any."""
        pdom = self.ldom(p)
        for j in self.coreflexives():
            if not self.leq[j][pdom]:
                continue
            if self.comp[self.comp[j][p]][j] != j:
                continue
            if self.comp[self.comp[p][j]][p] != p:
                continue
            return j
        return None


# -- loading -------------------------------------------------------------------


def _fail(category: str, message: str) -> None:
    raise ModelFormatError(category, message)


def load_model(source: str | Path | dict, name: str | None = None) -> AbstractModel:
    """Load and validate a model from a JSON file path or an already-parsed dict.

    Expected shape:
        {"elements": [names...],
         "leq": [[x, y], ...]            # the full order, reflexive pairs included
         "compose": [[name, ...], ...],  # row i, column j: name of x_i∘x_j
         "converse": [name, ...],
         "identity": name, "top": name, "bottom": name}
    """
    if isinstance(source, (str, Path)):
        path = Path(source)
        if name is None:
            name = path.stem
        try:
            data = json.loads(path.read_text())
        except json.JSONDecodeError as e:
            _fail("format", f"{path}: invalid JSON at line {e.lineno}, column {e.colno}: {e.msg}")
    else:
        data = source
    if not isinstance(data, dict):
        _fail("format", f"expected a JSON object, got {type(data).__name__}")
    if name is None:
        name = str(data.get("name", "unnamed"))

    for key in ("elements", "leq", "compose", "converse", "identity", "top", "bottom"):
        if key not in data:
            _fail("format", f"missing key {key!r}")

    elements = data["elements"]
    if (
        not isinstance(elements, list)
        or not elements
        or not all(isinstance(x, str) for x in elements)
    ):
        _fail("format", "'elements' must be a nonempty list of strings")
    if len(set(elements)) != len(elements):
        _fail("format", "'elements' contains duplicates")
    elements = tuple(elements)
    n = len(elements)
    pos = {x: i for i, x in enumerate(elements)}

    def resolve(x: object, where: str) -> int:
        if not isinstance(x, str) or x not in pos:
            _fail("format", f"{where}: unknown element {x!r}")
        return pos[x]

    leq = [[False] * n for _ in range(n)]
    raw_leq = data["leq"]
    if not isinstance(raw_leq, list):
        _fail("format", "'leq' must be a list of [x, y] pairs")
    for k, entry in enumerate(raw_leq):
        if not (isinstance(entry, list) and len(entry) == 2):
            _fail("format", f"leq[{k}]: expected an [x, y] pair, got {entry!r}")
        i, j = resolve(entry[0], f"leq[{k}]"), resolve(entry[1], f"leq[{k}]")
        leq[i][j] = True

    raw_comp = data["compose"]
    if not (isinstance(raw_comp, list) and len(raw_comp) == n and all(isinstance(row, list) and len(row) == n for row in raw_comp)):
        _fail("format", f"'compose' must be a {n}x{n} matrix of element names")
    comp = tuple(
        tuple(resolve(raw_comp[i][j], f"compose[{i}][{j}]") for j in range(n)) for i in range(n)
    )

    raw_conv = data["converse"]
    if not (isinstance(raw_conv, list) and len(raw_conv) == n):
        _fail("format", f"'converse' must be a list of {n} element names")
    conv = tuple(resolve(raw_conv[i], f"converse[{i}]") for i in range(n))

    ident = resolve(data["identity"], "identity")
    tp = resolve(data["top"], "top")
    bt = resolve(data["bottom"], "bottom")

    # the order must actually be a partial order…
    for i in range(n):
        if not leq[i][i]:
            _fail("order", f"not reflexive: {elements[i]!r} ⊆ {elements[i]!r} missing")
    for i in range(n):
        for j in range(n):
            if leq[i][j] and leq[j][i] and i != j:
                _fail("order", f"not antisymmetric: {elements[i]!r} and {elements[j]!r}")
            for k in range(n):
                if leq[i][j] and leq[j][k] and not leq[i][k]:
                    _fail(
                        "order",
                        f"not transitive: {elements[i]!r} ⊆ {elements[j]!r} ⊆ {elements[k]!r} "
                        f"but not {elements[i]!r} ⊆ {elements[k]!r}",
                    )

    # …and a lattice: unique least upper / greatest lower bounds throughout.
    joins = [[0] * n for _ in range(n)]
    meets = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            ubs = [k for k in range(n) if leq[i][k] and leq[j][k]]
            least = [k for k in ubs if all(leq[k][u] for u in ubs)]
            if len(least) != 1:
                _fail("lattice", f"no unique join for {elements[i]!r} and {elements[j]!r}")
            joins[i][j] = least[0]
            lbs = [k for k in range(n) if leq[k][i] and leq[k][j]]
            greatest = [k for k in lbs if all(leq[u][k] for u in lbs)]
            if len(greatest) != 1:
                _fail("lattice", f"no unique meet for {elements[i]!r} and {elements[j]!r}")
            meets[i][j] = greatest[0]

    model = AbstractModel(
        name=name,
        elements=elements,
        leq=tuple(tuple(row) for row in leq),
        comp=comp,
        conv=conv,
        ident=ident,
        top=tp,
        bot=bt,
        joins=tuple(tuple(row) for row in joins),
        meets=tuple(tuple(row) for row in meets),
    )

    # Structural invariants of the type itself. These are data errors, not
    # axioms under investigation, so they refuse the load — one distinct
    # category per law, message naming the first offending elements.
    mv = _first_monoid_violation(model)
    if mv is not None:
        tag, *names = mv
        category = {
            "unit": "identity",
            "zero": "zero",
            "assoc": "associativity",
            "join-left": "distributivity",
            "join-right": "distributivity",
        }[tag]
        _fail(category, f"{tag} law fails at ({', '.join(names)})")
    cv = _first_converse_violation(model)
    if cv is not None:
        tag, *names = cv
        _fail("converse", f"{tag} fails at ({', '.join(names) or elements[ident]})")
    return model


# -- axiom checking -------------------------------------------------------------


@dataclass(frozen=True)
class AxiomReport:
    """Per-axiom verdicts; counterexamples maps a failed axiom's name to the
    tuple of element names (tagged, where an axiom bundles several laws) that
    refutes it. Every stored tuple re-evaluates via recheck."""

    lattice: bool
    monoid: bool
    converse: bool
    dedekind: bool
    cone: bool
    choice: bool
    all_or_nothing: bool
    extensional: bool
    universal_choice: bool
    counterexamples: dict[str, tuple[str, ...]] = field(default_factory=dict, compare=False)

    AXIOMS = (
        "lattice",
        "monoid",
        "converse",
        "dedekind",
        "cone",
        "choice",
        "all_or_nothing",
        "extensional",
        "universal_choice",
    )

    def flags(self) -> dict[str, bool]:
        return {a: getattr(self, a) for a in self.AXIOMS}

    @property
    def ok(self) -> bool:
        return all(self.flags().values())


def _first_lattice_violation(m: AbstractModel) -> tuple[str, ...] | None:
    n = len(m.elements)
    for x in range(n):
        if not (m.leq[m.bot][x] and m.leq[x][m.top]):
            return ("bounds", m.elements[x])
    for x in range(n):
        for y in range(n):
            for z in range(n):
                if m.meets[x][m.joins[y][z]] != m.joins[m.meets[x][y]][m.meets[x][z]]:
                    return ("meet-over-join", m.elements[x], m.elements[y], m.elements[z])
    return None


def _first_monoid_violation(m: AbstractModel) -> tuple[str, ...] | None:
    n = len(m.elements)
    for x in range(n):
        if m.comp[m.ident][x] != x or m.comp[x][m.ident] != x:
            return ("unit", m.elements[x])
        if m.comp[m.bot][x] != m.bot or m.comp[x][m.bot] != m.bot:
            return ("zero", m.elements[x])
    for x in range(n):
        for y in range(n):
            for z in range(n):
                if m.comp[m.comp[x][y]][z] != m.comp[x][m.comp[y][z]]:
                    return ("assoc", m.elements[x], m.elements[y], m.elements[z])
                if m.comp[x][m.joins[y][z]] != m.joins[m.comp[x][y]][m.comp[x][z]]:
                    return ("join-left", m.elements[x], m.elements[y], m.elements[z])
                if m.comp[m.joins[y][z]][x] != m.joins[m.comp[y][x]][m.comp[z][x]]:
                    return ("join-right", m.elements[x], m.elements[y], m.elements[z])
    return None


def _first_converse_violation(m: AbstractModel) -> tuple[str, ...] | None:
    n = len(m.elements)
    if m.conv[m.ident] != m.ident:
        return ("identity", m.elements[m.ident])
    for x in range(n):
        if m.conv[m.conv[x]] != x:
            return ("involution", m.elements[x])
        for y in range(n):
            if m.leq[x][y] and not m.leq[m.conv[x]][m.conv[y]]:
                return ("monotonic", m.elements[x], m.elements[y])
            if m.conv[m.comp[x][y]] != m.comp[m.conv[y]][m.conv[x]]:
                return ("contravariance", m.elements[x], m.elements[y])
    return None


def _dedekind_holds(m: AbstractModel, r: int, s: int, t: int) -> bool:
    lhs = m.meets[m.comp[r][s]][t]
    rhs = m.comp[r][m.meets[s][m.comp[m.conv[r]][t]]]
    if not m.leq[lhs][rhs]:
        return False
    rhs2 = m.comp[m.meets[r][m.comp[t][m.conv[s]]]][s]
    return m.leq[lhs][rhs2]


def _first_dedekind_violation(m: AbstractModel) -> tuple[str, ...] | None:
    n = len(m.elements)
    for r in range(n):
        for s in range(n):
            for t in range(n):
                if not _dedekind_holds(m, r, s, t):
                    return (m.elements[r], m.elements[s], m.elements[t])
    return None


def _cone_holds(m: AbstractModel, r: int) -> bool:
    return r == m.bot or m.comp[m.comp[m.top][r]][m.top] == m.top


def _aon_holds(m: AbstractModel, a: int, b: int, r: int) -> bool:
    squeezed = m.comp[m.comp[a][r]][b]
    return squeezed == m.bot or squeezed == m.comp[m.comp[a][m.top]][b]


def _extensional_holds(m: AbstractModel, p: int) -> bool:
    return p == m.join_all(q for q in m.points() if m.leq[q][p])


def _universal_choice_holds(m: AbstractModel, r: int) -> bool:
    n = len(m.elements)
    for f in range(n):
        if (
            m.leq[f][r]
            and m.leq[m.comp[f][m.conv[f]]][m.ident]
            and m.rdom(f) == m.rdom(r)
        ):
            return True
    return False


def check_axioms(m: AbstractModel) -> AxiomReport:
    n = len(m.elements)
    flags: dict[str, bool] = {}
    ces: dict[str, tuple[str, ...]] = {}

    for axiom, finder in (
        ("lattice", _first_lattice_violation),
        ("monoid", _first_monoid_violation),
        ("converse", _first_converse_violation),
        ("dedekind", _first_dedekind_violation),
    ):
        ce = finder(m)
        flags[axiom] = ce is None
        if ce is not None:
            ces[axiom] = ce

    flags["cone"] = True
    for r in range(n):
        if not _cone_holds(m, r):
            flags["cone"] = False
            ces["cone"] = (m.elements[r],)
            break

    flags["choice"] = True
    for p in m.pers():
        if m.index_of_per(p) is None:
            flags["choice"] = False
            ces["choice"] = (m.elements[p],)
            break

    flags["all_or_nothing"] = True
    pts = m.points()
    for a in pts:
        for b in pts:
            for r in range(n):
                if not _aon_holds(m, a, b, r):
                    flags["all_or_nothing"] = False
                    ces["all_or_nothing"] = (m.elements[a], m.elements[b], m.elements[r])
                    break
            if "all_or_nothing" in ces:
                break
        if "all_or_nothing" in ces:
            break

    flags["extensional"] = True
    for p in m.coreflexives():
        if not _extensional_holds(m, p):
            flags["extensional"] = False
            ces["extensional"] = (m.elements[p],)
            break

    flags["universal_choice"] = True
    for r in range(n):
        if not _universal_choice_holds(m, r):
            flags["universal_choice"] = False
            ces["universal_choice"] = (m.elements[r],)
            break

    return AxiomReport(counterexamples=ces, **flags)


def recheck(m: AbstractModel, axiom: str, counterexample: tuple[str, ...]) -> bool:
    """True iff the stored counterexample still refutes the axiom on this model."""
    if axiom in ("lattice", "monoid", "converse"):
        tag, *names = counterexample
        xs = [m.idx(x) for x in names]
        if axiom == "lattice":
            if tag == "bounds":
                (x,) = xs
                return not (m.leq[m.bot][x] and m.leq[x][m.top])
            x, y, z = xs
            return m.meets[x][m.joins[y][z]] != m.joins[m.meets[x][y]][m.meets[x][z]]
        if axiom == "monoid":
            if tag == "unit":
                (x,) = xs
                return m.comp[m.ident][x] != x or m.comp[x][m.ident] != x
            if tag == "zero":
                (x,) = xs
                return m.comp[m.bot][x] != m.bot or m.comp[x][m.bot] != m.bot
            x, y, z = xs
            if tag == "assoc":
                return m.comp[m.comp[x][y]][z] != m.comp[x][m.comp[y][z]]
            if tag == "join-left":
                return m.comp[x][m.joins[y][z]] != m.joins[m.comp[x][y]][m.comp[x][z]]
            return m.comp[m.joins[y][z]][x] != m.joins[m.comp[y][x]][m.comp[z][x]]
        if tag == "identity":
            return m.conv[m.ident] != m.ident
        if tag == "involution":
            (x,) = xs
            return m.conv[m.conv[x]] != x
        x, y = xs
        if tag == "monotonic":
            return m.leq[x][y] and not m.leq[m.conv[x]][m.conv[y]]
        return m.conv[m.comp[x][y]] != m.comp[m.conv[y]][m.conv[x]]

    xs = [m.idx(x) for x in counterexample]
    if axiom == "dedekind":
        return not _dedekind_holds(m, *xs)
    if axiom == "cone":
        return not _cone_holds(m, xs[0])
    if axiom == "choice":
        return m.index_of_per(xs[0]) is None
    if axiom == "all_or_nothing":
        return not _aon_holds(m, *xs)
    if axiom == "extensional":
        return not _extensional_holds(m, xs[0])
    if axiom == "universal_choice":
        return not _universal_choice_holds(m, xs[0])
    raise ValueError(f"unknown axiom {axiom!r}")


# -- bundled models --------------------------------------------------------------


@dataclass(frozen=True)
class BundledModel:
    name: str
    model: AbstractModel
    expected: AxiomReport


# Expected verdicts for the models shipped in relalg/data. The flag values and
# counterexamples were computed by check_axioms itself and then frozen here, so
# any behavioral drift in the checker (or a corrupted data file) shows up as a
# mismatch. See tests/test_models.py for the independent reconstruction of the
# thirteen-element table.
_EXPECTED: dict[str, dict] = {
    "one_element": dict(
        flags=dict(lattice=True, monoid=True, converse=True, dedekind=True, cone=True,
                   choice=True, all_or_nothing=True, extensional=True, universal_choice=True),
        counterexamples={},
    ),
    "two_element": dict(
        flags=dict(lattice=True, monoid=True, converse=True, dedekind=True, cone=True,
                   choice=True, all_or_nothing=True, extensional=True, universal_choice=True),
        counterexamples={},
    ),
    "three_element": dict(
        flags=dict(lattice=True, monoid=True, converse=True, dedekind=True, cone=True,
                   choice=False, all_or_nothing=False, extensional=True, universal_choice=True),
        counterexamples={"choice": ("top",), "all_or_nothing": ("id", "id", "id")},
    ),
    "three_element_unit_top": dict(
        flags=dict(lattice=True, monoid=True, converse=True, dedekind=True, cone=False,
                   choice=True, all_or_nothing=True, extensional=False, universal_choice=True),
        counterexamples={"cone": ("a",), "extensional": ("id",)},
    ),
    "four_element_point": dict(
        flags=dict(lattice=True, monoid=True, converse=True, dedekind=True, cone=False,
                   choice=False, all_or_nothing=True, extensional=False, universal_choice=True),
        counterexamples={"cone": ("a",), "choice": ("top",), "extensional": ("id",)},
    ),
    "desharnais13": dict(
        flags=dict(lattice=True, monoid=True, converse=True, dedekind=True, cone=True,
                   choice=False, all_or_nothing=True, extensional=False, universal_choice=True),
        counterexamples={"choice": ("E",), "extensional": ("id",)},
    ),
}

BUNDLED_NAMES = tuple(_EXPECTED)


def _data_path(name: str):
    return resources.files("relalg").joinpath(f"data/{name}.json")


def load_bundled(name: str) -> AbstractModel:
    if name not in _EXPECTED and name != "product_two_two":
        raise KeyError(f"no bundled model {name!r}; have {', '.join(BUNDLED_NAMES)} and product_two_two")
    with resources.as_file(_data_path(name)) as path:
        return load_model(path, name=name)


def bundled_models() -> list[BundledModel]:
    out = []
    for name, exp in _EXPECTED.items():
        model = load_bundled(name)
        expected = AxiomReport(counterexamples=dict(exp["counterexamples"]), **exp["flags"])
        out.append(BundledModel(name=name, model=model, expected=expected))
    return out


def model_to_dict(m: AbstractModel) -> dict:
    """The JSON shape load_model accepts, with leq listed in index order."""
    n = len(m.elements)
    return {
        "elements": list(m.elements),
        "leq": [[m.elements[i], m.elements[j]] for i in range(n) for j in range(n) if m.leq[i][j]],
        "compose": [[m.elements[m.comp[i][j]] for j in range(n)] for i in range(n)],
        "converse": [m.elements[m.conv[i]] for i in range(n)],
        "identity": m.elements[m.ident],
        "top": m.elements[m.top],
        "bottom": m.elements[m.bot],
    }


def product_model(m1: AbstractModel, m2: AbstractModel, name: str | None = None) -> AbstractModel:
    """Componentwise product of two models (as a plain data construction).

    Products preserve the equational laws but break the cone rule as soon as
    both factors are nontrivial: (⊤,⊥) is neither ⊥ nor cone-full.
    """
    names = [f"{a}|{b}" for a in m1.elements for b in m2.elements]
    n2 = len(m2.elements)

    def pack(i: int, j: int) -> int:
        return i * n2 + j

    pairs = [(i, j) for i in range(len(m1.elements)) for j in range(n2)]
    leq = [
        [m1.leq[i][k] and m2.leq[j][l] for (k, l) in pairs]
        for (i, j) in pairs
    ]
    comp = [
        [names[pack(m1.comp[i][k], m2.comp[j][l])] for (k, l) in pairs]
        for (i, j) in pairs
    ]
    conv = [names[pack(m1.conv[i], m2.conv[j])] for (i, j) in pairs]
    data = {
        "elements": names,
        "leq": [[names[a], names[b]] for a in range(len(names)) for b in range(len(names)) if leq[a][b]],
        "compose": comp,
        "converse": conv,
        "identity": names[pack(m1.ident, m2.ident)],
        "top": names[pack(m1.top, m2.top)],
        "bottom": names[pack(m1.bot, m2.bot)],
    }
    return load_model(data, name=name or f"{m1.name}x{m2.name}")
