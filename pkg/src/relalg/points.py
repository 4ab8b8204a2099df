"""Points, pairs, particles, and the all-or-nothing decomposition.

A *point* of a carrier is a proper atom of its coreflexive lattice — concretely
a single diagonal element, abstractly the algebraic stand-in for "an element".
A *pair* is a proper relation Z with Z = Z∘⊤∘Z, Z< = Z∘Z° and Z> = Z°∘Z
(concretely: exactly one matrix bit); a *particle* is a symmetric pair, and
particles coincide with points. Every relation is the union of the pairs
a∘⊤∘b it dominates, and squeezing by points is all-or-nothing: a∘R∘b is
either ⊥ or the whole of a∘⊤∘b.
"""

from __future__ import annotations

from functools import reduce
from typing import Iterable

from .domains import ldom, rdom
from .rel import (
    Carrier,
    Relation,
    bottom,
    compose,
    converse,
    coreflexive,
    is_coreflexive,
    is_subset,
    top,
)


def points(carrier: Carrier) -> list[Relation]:
    """The points of a carrier, one per element, in element order."""
    return [coreflexive(carrier, (i,)) for i in range(carrier.size)]


def is_atom(r: Relation, lattice: str = "relations") -> bool:
    """No element sits strictly between ⊥ and r (⊥ itself passes vacuously).

    lattice "relations" ranges q over all sub-relations, "coreflexives" over
    coreflexive ones only (and then r must be coreflexive). Anything with
    three or more bits has a two-bit strict sub-element either way, so only
    tiny inputs are actually enumerated.
    """
    if lattice not in ("relations", "coreflexives"):
        raise ValueError(f"unknown lattice {lattice!r}")
    if lattice == "coreflexives" and not is_coreflexive(r):
        raise ValueError("is_atom over the coreflexive lattice needs a coreflexive input")
    n = r.bit_count()
    if n > 2:
        return False
    pairs = list(r.pairs())
    for mask in range(1 << n):
        chosen = [pairs[k] for k in range(n) if mask >> k & 1]
        rows = [0] * r.src.size
        for i, j in chosen:
            rows[i] |= 1 << j
        q = Relation(r.src, r.dst, rows)
        if lattice == "coreflexives" and not is_coreflexive(q):
            continue
        if not (q == r or not q):
            return False
    return True


def is_point(p: Relation) -> bool:
    """Proper coreflexive atom. Heterogeneous input is a type error."""
    if p.src != p.dst:
        raise ValueError(f"a point must be homogeneous, got {p.src.name}~{p.dst.name}")
    return bool(p) and is_coreflexive(p) and is_atom(p, "coreflexives")


def is_pair(z: Relation) -> bool:
    """Z ≠ ⊥, Z = Z∘⊤∘Z, Z< = Z∘Z° and Z> = Z°∘Z, checked literally."""
    if not z:
        return False
    zc = converse(z)
    return (
        compose(compose(z, top(z.dst, z.src)), z) == z
        and compose(z, zc) == ldom(z)
        and compose(zc, z) == rdom(z)
    )


def is_particle(z: Relation) -> bool:
    if z.src != z.dst:
        raise ValueError(f"a particle must be homogeneous, got {z.src.name}~{z.dst.name}")
    return converse(z) == z and is_pair(z)


def pair_rel(a: Relation, b: Relation) -> Relation:
    """a∘⊤∘b for points a, b — the pair singling out one matrix cell."""
    _require_point(a, "a")
    _require_point(b, "b")
    return compose(compose(a, top(a.src, b.src)), b)


def _require_point(p: Relation, name: str) -> None:
    if p.src != p.dst or not is_point(p):
        raise ValueError(f"{name} must be a point, got {p!r}")


def all_or_nothing(r: Relation, a: Relation, b: Relation) -> str:
    """Squeeze r between two points: returns "bottom" or "full".

    "full" means a∘r∘b = a∘⊤∘b. No third outcome exists; that is the theorem,
    and the assert would trip if the algebra were broken.
    """
    _require_point(a, "a")
    _require_point(b, "b")
    if a.src != r.src or b.src != r.dst:
        raise ValueError(
            f"points over {a.src.name} and {b.src.name} do not frame a {r.src.name}~{r.dst.name} relation"
        )
    squeezed = compose(compose(a, r), b)
    if not squeezed:
        return "bottom"
    assert squeezed == pair_rel(a, b), "a∘R∘b must be ⊥ or the full pair"
    return "full"


def decompose_to_pairs(r: Relation) -> list[tuple[Relation, Relation]]:
    """The point pairs (a, b) with a∘⊤∘b ⊆ r, in row-major order.

    r is exactly the union of the pairs a∘⊤∘b over this list.
    """
    return [
        (coreflexive(r.src, (i,)), coreflexive(r.dst, (j,)))
        for i, j in r.pairs()
    ]


def union_all(rels: Iterable[Relation], src: Carrier, dst: Carrier) -> Relation:
    """Union of a (possibly empty) family; the empty union is ⊥."""
    return reduce(lambda x, y: x | y, rels, bottom(src, dst))


# -- carrier-level law probes --------------------------------------------------


def point_law_suite(carrier: Carrier) -> dict[str, bool]:
    """Point facts over one carrier; quantifies over coreflexives, so keep it small."""
    pts = points(carrier)
    ident_rows = tuple(1 << i for i in range(carrier.size))
    out: dict[str, bool] = {}
    out["every point passes is_point"] = all(is_point(a) for a in pts)
    out["point count is carrier size"] = len(pts) == carrier.size
    out["distinct points compose to ⊥"] = all(
        bool(compose(a, b)) == (a == b) for a in pts for b in pts
    )
    out["𝕀 is the union of all points"] = (
        union_all(pts, carrier, carrier).rows == ident_rows
    )
    sat = True
    for mask in range(1 << carrier.size):
        p = coreflexive(carrier, [i for i in range(carrier.size) if mask >> i & 1])
        below = [a for a in pts if is_subset(a, p)]
        if union_all(below, carrier, carrier) != p:
            sat = False
            break
    out["every coreflexive is the union of its points"] = sat
    return out


def particle_point_equivalence(carrier: Carrier) -> dict[str, bool]:
    """particle ≡ point ≡ symmetric pair, quantified over all homogeneous relations."""
    from .rel import enumerate_relations

    particle_iff_point = True
    particle_iff_sym_pair = True
    for z in enumerate_relations(carrier, carrier):
        part = is_particle(z)
        pt = bool(z) and is_coreflexive(z) and is_point(z)
        sym_pair = converse(z) == z and is_pair(z)
        particle_iff_point &= part == pt
        particle_iff_sym_pair &= part == sym_pair
    return {
        "particle ≡ point": particle_iff_point,
        "particle ≡ symmetric pair": particle_iff_sym_pair,
    }


def atom_pair_equivalence(src: Carrier, dst: Carrier) -> dict[str, bool]:
    """pair ≡ proper atom ≡ point sandwich, quantified over all src~dst relations."""
    from .rel import enumerate_relations

    pair_iff_atom = True
    pair_iff_sandwich = True
    pair_domains = True
    pts_a, pts_b = points(src), points(dst)
    for z in enumerate_relations(src, dst):
        pr = is_pair(z)
        pair_iff_atom &= pr == (bool(z) and is_atom(z, "relations"))
        sandwich = any(pair_rel(a, b) == z for a in pts_a for b in pts_b)
        pair_iff_sandwich &= pr == sandwich
        if pr:
            pair_domains &= is_particle(ldom(z)) and is_particle(rdom(z))
    return {
        "pair ≡ proper atom": pair_iff_atom,
        "pair ≡ a∘⊤∘b for some points": pair_iff_sandwich,
        "pair domains are particles": pair_domains,
    }
