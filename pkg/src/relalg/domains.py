"""Domain operators and the predicate zoo built on them.

The coreflexive domains of R : A~B are
    R< = 𝕀 ∩ R∘R°   (left: the sources that R relates to anything)
    R> = 𝕀 ∩ R°∘R   (right: the targets hit by R)
and the per domains are
    R≺ = (R//R)∘R<  (relate a to a' when their R-rows are equal and nonempty)
    R≻ = R>∘(R\\\\R) (relate b to b' when their R-columns are equal and nonempty).

Both per domains are partial equivalence relations (pers): symmetric and
transitive but not necessarily reflexive. A relation equal to its own per
domains on both sides is a "core relation" — the shape that indexes and
cores single out.

Convention note: `functional` here means R∘R° ⊆ 𝕀 (each target has at most
one source; functions consume their argument on the right), and `injective`
means R°∘R ⊆ 𝕀.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator

from . import factors
from .rel import (
    Carrier,
    Relation,
    bottom,
    compose,
    converse,
    identity,
    intersect,
    is_coreflexive,
    is_subset,
    register_cache,
    top,
)


@register_cache
@lru_cache(maxsize=1 << 15)
def ldom(r: Relation) -> Relation:
    """R< : sub-identity on sources with nonempty row."""
    return Relation(r.src, r.src, tuple((1 << i) if row else 0 for i, row in enumerate(r.rows)))


@register_cache
@lru_cache(maxsize=1 << 15)
def rdom(r: Relation) -> Relation:
    """R> : sub-identity on targets with nonempty column."""
    mask = 0
    for row in r.rows:
        mask |= row
    return Relation(r.dst, r.dst, tuple(mask & (1 << j) for j in range(r.dst.size)))


@register_cache
@lru_cache(maxsize=1 << 15)
def per_ldom(r: Relation) -> Relation:
    """R≺ : relate two sources exactly when their rows agree and are nonempty."""
    n = r.src.size
    out = [0] * n
    for i, row in enumerate(r.rows):
        if not row:
            continue
        bits = 0
        for i2, row2 in enumerate(r.rows):
            if row2 == row:
                bits |= 1 << i2
        out[i] = bits
    return Relation(r.src, r.src, out)


@register_cache
@lru_cache(maxsize=1 << 15)
def per_rdom(r: Relation) -> Relation:
    """R≻ : relate two targets exactly when their columns agree and are nonempty."""
    return per_ldom(converse(r))


# -- predicates ---------------------------------------------------------------


def is_per(r: Relation) -> bool:
    """Symmetric and transitive (not necessarily reflexive)."""
    return (
        r.src == r.dst
        and converse(r) == r
        and is_subset(compose(r, r), r)
    )


def is_functional(r: Relation) -> bool:
    return all(row.bit_count() <= 1 for row in converse(r).rows)


def is_injective(r: Relation) -> bool:
    return all(row.bit_count() <= 1 for row in r.rows)


def is_bijection(r: Relation) -> bool:
    return is_functional(r) and is_injective(r)


def is_difunctional(r: Relation) -> bool:
    return is_subset(compose(compose(r, converse(r)), r), r)


def is_rectangle(r: Relation) -> bool:
    return compose(compose(r, top(r.dst, r.src)), r) == r


def is_square(r: Relation) -> bool:
    return r.src == r.dst and converse(r) == r and is_rectangle(r)


def is_core_relation(r: Relation) -> bool:
    return ldom(r) == per_ldom(r) and rdom(r) == per_rdom(r)


def per_characterizations(q: Relation) -> dict[str, bool]:
    """Four equivalent ways of being a per, reported separately.

    Any one of them decides the property; computing all four lets tests pin
    the equivalence itself.
    """
    if q.src != q.dst:
        raise ValueError(f"per_characterizations needs a homogeneous relation, got {q.src.name}~{q.dst.name}")
    return {
        "symmetric and transitive": converse(q) == q and is_subset(compose(q, q), q),
        "R = R°∘R": q == compose(converse(q), q),
        "R = R≺": q == per_ldom(q),
        "R = R≻": q == per_rdom(q),
    }


def difunctional_characterizations(r: Relation) -> dict[str, bool]:
    """The seven equivalent statements of difunctionality, reported separately."""
    rc = converse(r)
    rrc = compose(r, rc)  # R∘R°
    rcr = compose(rc, r)  # R°∘R
    under = factors.left_residual(r, r)
    over = factors.right_residual(r, r)
    return {
        "R∘R°∘R ⊆ R": is_subset(compose(rrc, r), r),
        "R = R∘R°∘R": r == compose(rrc, r),
        "R>∘(R\\R) = R°∘R": compose(rdom(r), under) == rcr,
        "R≻ = R°∘R": per_rdom(r) == rcr,
        "(R/R)∘R< = R∘R°": compose(over, ldom(r)) == rrc,
        "R≺ = R∘R°": per_ldom(r) == rrc,
        "R = R ∩ (R\\R/R)°": r == intersect(r, converse(factors.right_residual(under, r))),
    }


@dataclass(frozen=True)
class PredicateReport:
    """Structural classification of one relation.

    `checks` holds the witnessing sub-equalities the flags were derived from,
    keyed by formula, so a caller can see *why* a flag is set. Homogeneous-only
    formulas are omitted for heterogeneous relations (their flags are False).
    """

    coreflexive: bool
    functional: bool
    injective: bool
    bijection: bool
    per: bool
    difunctional: bool
    rectangle: bool
    square: bool
    core_relation: bool
    checks: dict[str, bool] = field(default_factory=dict, compare=False)


def classify(r: Relation) -> PredicateReport:
    homogeneous = r.src == r.dst
    checks = {
        "R∘R° = R<": compose(r, converse(r)) == ldom(r),
        "R°∘R = R>": compose(converse(r), r) == rdom(r),
        "R∘R°∘R ⊆ R": is_difunctional(r),
        "R = R∘⊤∘R": is_rectangle(r),
        "R< = R≺": ldom(r) == per_ldom(r),
        "R> = R≻": rdom(r) == per_rdom(r),
    }
    if homogeneous:
        checks["R = R°"] = converse(r) == r
        checks["R∘R ⊆ R"] = is_subset(compose(r, r), r)
        checks["R ⊆ 𝕀"] = is_subset(r, identity(r.src))
    rep = PredicateReport(
        coreflexive=is_coreflexive(r),
        functional=is_functional(r),
        injective=is_injective(r),
        bijection=is_bijection(r),
        per=is_per(r),
        difunctional=is_difunctional(r),
        rectangle=is_rectangle(r),
        square=is_square(r),
        core_relation=is_core_relation(r),
        checks=checks,
    )
    # structural sanity: these implications are theorems, not opinions
    assert not rep.square or rep.rectangle
    assert not rep.per or rep.difunctional
    assert rep.bijection == (rep.functional and rep.injective)
    assert not rep.coreflexive or rep.per
    return rep


# -- bundled single-instance law probes ---------------------------------------


def domain_law_suite(
    r: Relation,
    s: Relation | None = None,
    p: Relation | None = None,
) -> dict[str, bool]:
    """Evaluate the domain-operator laws on one instance.

    `s` must compose on the right of `r` (defaults to R°); `p` must be a
    coreflexive over R's target carrier (defaults to R>). Every value in a
    healthy algebra is True; the quantified versions live in the law suite.
    """
    if s is None:
        s = converse(r)
    if p is None:
        p = rdom(r)
    if r.dst != s.src:
        raise ValueError(f"s must have source carrier {r.dst.name!r}, got {s.src.name!r}")
    if not (p.src == p.dst == r.dst and is_coreflexive(p)):
        raise ValueError(f"p must be a coreflexive over {r.dst.name!r}")

    bot = bottom(r.src, r.dst)
    tp = top(r.dst, r.dst)
    lumped: dict[str, bool] = {}
    lumped["R<∘R = R"] = compose(ldom(r), r) == r
    lumped["R∘R> = R"] = compose(r, rdom(r)) == r
    lumped["(R°)> = R<"] = rdom(converse(r)) == ldom(r)
    lumped["(R°)< = R>"] = ldom(converse(r)) == rdom(r)
    lumped["(R< = ⊥) ≡ (R = ⊥) ≡ (R> = ⊥)"] = (
        (not ldom(r)) == (r == bot) == (not rdom(r))
    )
    lumped["R = R∘p ≡ R> = R>∘p"] = (r == compose(r, p)) == (rdom(r) == compose(rdom(r), p))
    lumped["R> ⊆ p ≡ R ⊆ ⊤∘p ≡ R ⊆ R∘p"] = (
        is_subset(rdom(r), p)
        == is_subset(r, compose(top(r.src, r.dst), p))
        == is_subset(r, compose(r, p))
    )
    lumped["⊤∘R> = ⊤∘R"] = compose(tp, rdom(r)) == compose(top(r.dst, r.src), r)
    lumped["(R∘S)> = (R>∘S)>"] = rdom(compose(r, s)) == rdom(compose(rdom(r), s))
    lumped["R≺∘R = R = R∘R≻"] = compose(per_ldom(r), r) == r == compose(r, per_rdom(r))
    lumped["R≻ = R>∘(R\\\\R)"] = per_rdom(r) == compose(rdom(r), factors.sym_right_div(r, r))
    lumped["R≻ = (R\\\\R)∘R>"] = per_rdom(r) == compose(factors.sym_right_div(r, r), rdom(r))
    lumped["(R≻)< = R> = (R≻)>"] = ldom(per_rdom(r)) == rdom(r) == rdom(per_rdom(r))
    lumped["R≻ is a per"] = is_per(per_rdom(r))
    lumped["R≺ is a per"] = is_per(per_ldom(r))
    return lumped


# -- typed enumeration helpers -------------------------------------------------


def enumerate_pers(carrier: Carrier) -> Iterator[Relation]:
    """All pers over the carrier, by enumerating symmetric relations and
    filtering for transitivity. Deterministic order."""
    n = carrier.size
    cells = [(i, j) for i in range(n) for j in range(i, n)]
    assert len(cells) <= 16, "per enumeration is meant for tiny carriers"
    for mask in range(1 << len(cells)):
        rows = [0] * n
        m = mask
        for i, j in cells:
            if m & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            m >>= 1
        q = Relation(carrier, carrier, rows)
        if is_subset(compose(q, q), q):
            yield q
