"""Isomorphism of relations, witnessed by a pair of domain bijections.

R : A~B and S : C~D are isomorphic when there are φ : A~C and ψ : B~D with

    φ∘φ° = R<    φ°∘φ = S<    ψ∘ψ° = R>    ψ°∘ψ = S>    R = φ∘S∘ψ°

(from which φ°∘R∘ψ = S follows, and conversely). Such φ, ψ are exactly the
bijections between the left domains and between the right domains along which
the two matrices agree, so the search below is a small backtracking matcher
over domain elements with degree pruning.
"""

from __future__ import annotations

from dataclasses import dataclass

from .domains import ldom, rdom
from .rel import CarrierMismatch, Relation, compose, converse, from_pairs


class SearchSpaceExceeded(ValueError):
    """An isomorphism search was refused because a domain is too large."""


@dataclass(frozen=True)
class IsoWitness:
    phi: Relation
    psi: Relation


def verify_witness(r: Relation, s: Relation, w: IsoWitness) -> bool:
    """Check all five defining equations plus the flipped one.

    Under the four domain conditions the two transport equations are
    equivalent; we assert that rather than trusting it.
    """
    phi, psi = w.phi, w.psi
    if phi.src != r.src or phi.dst != s.src or psi.src != r.dst or psi.dst != s.dst:
        raise CarrierMismatch(
            f"witness types {phi.src.name}~{phi.dst.name} / {psi.src.name}~{psi.dst.name} "
            f"do not bridge {r.src.name}~{r.dst.name} and {s.src.name}~{s.dst.name}"
        )
    domains_ok = (
        compose(phi, converse(phi)) == ldom(r)
        and compose(converse(phi), phi) == ldom(s)
        and compose(psi, converse(psi)) == rdom(r)
        and compose(converse(psi), psi) == rdom(s)
    )
    fwd = r == compose(compose(phi, s), converse(psi))
    bwd = compose(compose(converse(phi), r), psi) == s
    if domains_ok:
        assert fwd == bwd, "transport equations must co-vary once the domain conditions hold"
    return domains_ok and fwd and bwd


def _members(coref: Relation) -> list[int]:
    return [i for i, row in enumerate(coref.rows) if row]


def find_isomorphism(r: Relation, s: Relation, max_points: int = 8) -> IsoWitness | None:
    """Search for a witness; None means the relations are not isomorphic.

    Exhaustive over bijections of the left domains (with degree pruning), so
    the answer is definitive. Refuses relations whose left or right domain
    exceeds max_points elements.
    """
    if r == s:
        # a relation is isomorphic to itself via its own domains
        return IsoWitness(ldom(r), rdom(r))

    da, ea = _members(ldom(r)), _members(rdom(r))
    db, eb = _members(ldom(s)), _members(rdom(s))
    if len(da) != len(db) or len(ea) != len(eb):
        return None
    if max(len(da), len(ea)) > max_points:
        raise SearchSpaceExceeded(
            f"domains have {len(da)} and {len(ea)} points (limit {max_points})"
        )

    # columns as source-sets, rows as target-sets, restricted to the domains
    col_r = {b: frozenset(a for a in da if (a, b) in r) for b in ea}
    col_s = {c: frozenset(x for x in db if (x, c) in s) for c in eb}
    row_deg_r = {a: sum((a, b) in r for b in ea) for a in da}
    row_deg_s = {x: sum((x, c) in s for c in eb) for x in db}

    if sorted(row_deg_r.values()) != sorted(row_deg_s.values()):
        return None
    if sorted(len(v) for v in col_r.values()) != sorted(len(v) for v in col_s.values()):
        return None

    def match_columns(f: dict[int, int]) -> dict[int, int] | None:
        # once rows are paired, columns must match by translated source-set
        buckets: dict[frozenset, list[int]] = {}
        for c in eb:
            buckets.setdefault(col_s[c], []).append(c)
        g: dict[int, int] = {}
        for b in ea:
            want = frozenset(f[a] for a in col_r[b])
            avail = buckets.get(want)
            if not avail:
                return None
            g[b] = avail.pop()
        return g

    def backtrack(i: int, f: dict[int, int], used: set[int]) -> dict[int, int] | None:
        if i == len(da):
            return match_columns(f)
        a = da[i]
        for x in db:
            if x in used or row_deg_s[x] != row_deg_r[a]:
                continue
            f[a] = x
            used.add(x)
            g = backtrack(i + 1, f, used)
            if g is not None:
                return g
            del f[a]
            used.discard(x)
        return None

    f: dict[int, int] = {}
    g = backtrack(0, f, set())
    if g is None:
        return None
    phi = from_pairs(r.src, s.src, sorted(f.items()))
    psi = from_pairs(r.dst, s.dst, sorted(g.items()))
    w = IsoWitness(phi, psi)
    assert verify_witness(r, s, w), "search produced a witness that does not verify"
    return w
