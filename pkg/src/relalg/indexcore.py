"""Indexes and cores of finite relations.

A relation J is an *index* of R when

    (a) J ⊆ R
    (b) R≺∘J∘R≻ = R
    (c) J<∘R≺∘J< = J<
    (d) J>∘R≻∘J> = J>

— one witnessing pair per block of R, with domains that pick exactly one
element from each per-domain class. Every finite relation has one: choose a
representative of each R≺-class and each R≻-class (per_index below) and
sandwich, J = J_l∘R∘J_r. All indexes of R are isomorphic to each other.

A *core* of R is any C = λ∘R∘ρ° where λ°∘λ = R≺, λ∘λ° = λ<, ρ°∘ρ = R≻ and
ρ∘ρ° = ρ<; same-type cores land on an index itself, quotient-mode cores land
on fresh carriers whose elements are the per-domain classes.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from . import factors
from .domains import (
    is_core_relation,
    is_difunctional,
    is_per,
    ldom,
    per_ldom,
    per_rdom,
    rdom,
)
from .isomorph import IsoWitness, verify_witness
from .rel import (
    Carrier,
    EnumerationLimit,
    Relation,
    compose,
    converse,
    coreflexive,
    from_pairs,
    is_subset,
)

POLICIES = ("min", "max", "random")
CORE_MODES = ("same-type", "quotient")


def _representative(members: tuple[int, ...], policy: str, rng: random.Random | None) -> int:
    if policy == "min":
        return members[0]
    if policy == "max":
        return members[-1]
    assert policy == "random" and rng is not None
    return rng.choice(members)


def _per_classes(p: Relation) -> list[tuple[int, ...]]:
    """Equivalence classes of a per on its domain, ordered by smallest member."""
    seen = 0
    classes = []
    for i, row in enumerate(p.rows):
        if row and not seen >> i & 1:
            members = tuple(j for j in range(p.src.size) if row >> j & 1)
            classes.append(members)
            seen |= row
    return classes


def _check_per(p: Relation, who: str) -> None:
    if p.src != p.dst:
        raise ValueError(f"{who}: needs a homogeneous relation, got {p.src.name}~{p.dst.name}")
    if converse(p) != p:
        bad = next((i, j) for i, j in p.pairs() if (j, i) not in p)
        raise ValueError(f"{who}: not a per — not symmetric, {bad} present without its converse")
    sq = compose(p, p)
    if not is_subset(sq, p):
        bad = next(pair for pair in sq.pairs() if pair not in p)
        raise ValueError(f"{who}: not a per — not transitive, composition adds {bad}")


def per_index(p: Relation, policy: str = "min", seed: int = 0) -> Relation:
    """A coreflexive index of a per: one representative per equivalence class.

    The result J satisfies J ⊆ P<, J∘P∘J = J and P∘J∘P = P (equivalently, it
    is an index in the general sense). Policy picks the representative:
    smallest member, largest member, or seeded-random choice.
    """
    _check_per(p, "per_index")
    if policy not in POLICIES:
        raise ValueError(f"unknown policy {policy!r}, expected one of {POLICIES}")
    rng = random.Random(f"{seed}:{p.src.name}:{p.src.size}") if policy == "random" else None
    reps = [_representative(members, policy, rng) for members in _per_classes(p)]
    return coreflexive(p.src, reps)


@dataclass(frozen=True)
class IndexCertificate:
    relation: Relation
    index: Relation
    checks: dict[str, bool] = field(compare=False)

    @property
    def ok(self) -> bool:
        return all(self.checks.values())


def verify_index(r: Relation, j: Relation) -> IndexCertificate:
    """Evaluate the four defining conditions; .ok iff J really indexes R."""
    if j.src != r.src or j.dst != r.dst:
        raise ValueError(
            f"index candidate has type {j.src.name}~{j.dst.name}, relation has {r.src.name}~{r.dst.name}"
        )
    lpd, rpd = per_ldom(r), per_rdom(r)
    checks = {
        "J ⊆ R": is_subset(j, r),
        "R≺∘J∘R≻ = R": compose(compose(lpd, j), rpd) == r,
        "J<∘R≺∘J< = J<": compose(compose(ldom(j), lpd), ldom(j)) == ldom(j),
        "J>∘R≻∘J> = J>": compose(compose(rdom(j), rpd), rdom(j)) == rdom(j),
    }
    return IndexCertificate(relation=r, index=j, checks=checks)


def relation_index(r: Relation, policy: str = "min", seed: int = 0) -> IndexCertificate:
    """Construct an index of R by sandwiching between per-domain representatives.

    J = J_l∘R∘J_r where J_l, J_r are coreflexive indexes of R≺ and R≻. The
    certificate is verified before being returned; failure would be a bug,
    not an input condition, hence the hard assert.
    """
    jl = per_index(per_ldom(r), policy, seed)
    jr = per_index(per_rdom(r), policy, seed)
    j = compose(compose(jl, r), jr)
    cert = verify_index(r, j)
    assert cert.ok, f"constructed index failed verification: {cert.checks}"
    return cert


def candidate_indexes(r: Relation, max_bits: int = 12) -> list[Relation]:
    """Every subset of R that verifies as an index, in little-endian subset order.

    Exponential in R's pair count; refuses relations with more than max_bits
    pairs. This is the package-side enumerator used by the law suite (the test
    suite cross-checks it against an independently coded oracle).
    """
    pairs = list(r.pairs())
    if len(pairs) > max_bits:
        raise EnumerationLimit(f"relation has {len(pairs)} pairs; refusing 2**{len(pairs)} subsets")
    found = []
    for mask in range(1 << len(pairs)):
        chosen = [pairs[k] for k in range(len(pairs)) if mask >> k & 1]
        j = from_pairs(r.src, r.dst, chosen)
        if verify_index(r, j).ok:
            found.append(j)
    return found


def splitting(p: Relation, policy: str = "min", seed: int = 0) -> Relation:
    """A functional f with f°∘f = P and f∘f° the chosen coreflexive index.

    f = J∘P maps every element of P's domain onto its class representative
    (on the left), exhibiting the per as "function composed with own converse".
    """
    j = per_index(p, policy, seed)
    return compose(j, p)


@dataclass(frozen=True)
class CoreDecomposition:
    relation: Relation
    lam: Relation
    rho: Relation
    core: Relation
    mode: str

    def verify(self) -> dict[str, bool]:
        r, lam, rho, c = self.relation, self.lam, self.rho, self.core
        return {
            "λ°∘λ = R≺": compose(converse(lam), lam) == per_ldom(r),
            "λ∘λ° = λ<": compose(lam, converse(lam)) == ldom(lam),
            "ρ°∘ρ = R≻": compose(converse(rho), rho) == per_rdom(r),
            "ρ∘ρ° = ρ<": compose(rho, converse(rho)) == ldom(rho),
            "C = λ∘R∘ρ°": c == compose(compose(lam, r), converse(rho)),
            "C is a core relation": is_core_relation(c),
            "λ> = R<": rdom(lam) == ldom(r),
            "C< = λ<": ldom(c) == ldom(lam),
            "ρ> = R>": rdom(rho) == rdom(r),
            "C> = ρ<": rdom(c) == ldom(rho),
        }


def _quotient_leg(per: Relation, carrier_name: str) -> Relation:
    """λ : X~A with X the classes of a per on A, row x = the class's members."""
    classes = _per_classes(per)
    src_labels = per.src.labels
    labels = ["{" + ",".join(src_labels[i] for i in members) + "}" for members in classes]
    x = Carrier(carrier_name, len(classes), labels)
    rows = []
    for members in classes:
        row = 0
        for i in members:
            row |= 1 << i
        rows.append(row)
    return Relation(x, per.src, rows)


def core_of(r: Relation, mode: str = "same-type", policy: str = "min", seed: int = 0) -> CoreDecomposition:
    """A core of R: C = λ∘R∘ρ° together with the legs.

    mode "same-type" keeps the original carriers (C is then itself an index of
    R); mode "quotient" builds fresh carriers whose elements are the per-domain
    classes, so C is a genuine quotient with full domains on the fresh side.
    """
    if mode == "same-type":
        cert = relation_index(r, policy, seed)
        j = cert.index
        lam = compose(ldom(j), per_ldom(r))
        rho = compose(rdom(j), per_rdom(r))
    elif mode == "quotient":
        lam = _quotient_leg(per_ldom(r), f"X({r.src.name},left)")
        rho = _quotient_leg(per_rdom(r), f"X({r.dst.name},right)")
    else:
        raise ValueError(f"unknown mode {mode!r}, expected one of {CORE_MODES}")
    core = compose(compose(lam, r), converse(rho))
    dec = CoreDecomposition(relation=r, lam=lam, rho=rho, core=core, mode=mode)
    bad = [k for k, v in dec.verify().items() if not v]
    assert not bad, f"core decomposition failed its own equations: {bad}"
    return dec


# -- bundled theorem probes ----------------------------------------------------


def core_theorem_suite(r: Relation, policy: str = "min", seed: int = 0, enumerate_all: bool | None = None) -> dict[str, bool]:
    """Evaluate the index/core theorems on one relation.

    With enumerate_all (default: auto, on for relations with ≤ 12 pairs) the
    suite also quantifies over *every* index of R — uniqueness-by-domains and
    pairwise isomorphism — which is exponential in the pair count.
    """
    cert = relation_index(r, policy, seed)
    j = cert.index
    lpd, rpd = per_ldom(r), per_rdom(r)
    jl, jr = ldom(j), rdom(j)
    sandwich = compose(compose(lpd, jl), lpd)

    out: dict[str, bool] = {}
    out["constructed index verifies"] = cert.ok
    out["index is its own index"] = verify_index(j, j).ok
    out["index is a core relation"] = is_core_relation(j)
    out["J≺ ⊆ R≺ and J≻ ⊆ R≻"] = is_subset(per_ldom(j), lpd) and is_subset(per_rdom(j), rpd)
    out["J = J<∘R∘J>"] = j == compose(compose(jl, r), jr)
    out["R∘J°∘R = R∘R°∘R"] = compose(compose(r, converse(j)), r) == compose(compose(r, converse(r)), r)
    out["R≺∘J<∘R≺ = R≺"] = sandwich == lpd
    out["R≺∘J<∘R≺ is a per"] = is_per(sandwich)
    out["(R≺∘J<∘R≺)< = R<"] = ldom(sandwich) == ldom(r)
    out["J< indexes R≺"] = verify_index(lpd, jl).ok
    out["J> indexes R≻"] = verify_index(rpd, jr).ok

    dec = core_of(r, "same-type", policy, seed)
    out["same-type core equals the index"] = dec.core == j
    out["same-type decomposition verifies"] = all(dec.verify().values())
    quot = core_of(r, "quotient", policy, seed)
    out["quotient decomposition verifies"] = all(quot.verify().values())
    out["quotient core isomorphic to index"] = verify_witness(
        quot.core, j, IsoWitness(compose(quot.lam, jl), compose(quot.rho, jr))
    )

    if enumerate_all is None:
        enumerate_all = r.bit_count() <= 12
    if enumerate_all:
        all_idx = candidate_indexes(r)
        out["at least one index exists"] = bool(all_idx)
        out["indexes determined by their domains"] = all(
            (a == b) == (ldom(a) == ldom(b) and rdom(a) == rdom(b))
            for a in all_idx
            for b in all_idx
        )
        out["all indexes pairwise isomorphic"] = all(
            verify_witness(a, b, IsoWitness(compose(compose(ldom(a), lpd), ldom(b)),
                                            compose(compose(rdom(a), rpd), rdom(b))))
            for a in all_idx
            for b in all_idx
        )
    return out


def difunction_index_suite(r: Relation, policy: str = "min", seed: int = 0) -> dict[str, bool]:
    """Evaluate the difunction/index theorems on one relation.

    Implications guarded by difunctionality are vacuously true for
    non-difunctional input; the equivalences are checked on everything.
    """
    cert = relation_index(r, policy, seed)
    j = cert.index
    d = is_difunctional(r)
    rc = converse(r)
    out: dict[str, bool] = {}
    out["R difunctional ≡ index difunctional"] = d == is_difunctional(j)
    out["R∘J°∘R = R ≡ R difunctional"] = (compose(compose(r, converse(j)), r) == r) == d
    if d:
        out["index is a bijection"] = (
            compose(j, converse(j)) == ldom(j) and compose(converse(j), j) == rdom(j)
        )
        out["J ⊆ R"] = is_subset(j, r)
        out["R∘J°∘R = R"] = compose(compose(r, converse(j)), r) == r
        out["J<∘R∘R°∘J< = J<"] = compose(compose(ldom(j), compose(r, rc)), ldom(j)) == ldom(j)
        out["J>∘R°∘R∘J> = J>"] = compose(compose(rdom(j), compose(rc, r)), rdom(j)) == rdom(j)
        out["R≻ = R>∘(R\\R)"] = per_rdom(r) == compose(rdom(r), factors.left_residual(r, r))
        out["R≺ = (R/R)∘R<"] = per_ldom(r) == compose(factors.right_residual(r, r), ldom(r))
    else:
        out["index is a bijection"] = True
        out["J ⊆ R"] = is_subset(j, r)
    return out
