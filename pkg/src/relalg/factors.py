"""Residuals (factors) and symmetric division.

left_residual(R, S)  is the largest T with R∘T ⊆ S   (written R\\S),
right_residual(R, S) is the largest T with T∘S ⊆ R   (written R/S).

Pointwise: (b,c) ∈ R\\S iff every a related by R to b is related by S to c,
and (a,c) ∈ R/S iff every b that S relates to c is related by R to a.
Symmetric division R\\\\S relates b to c exactly when b's R-column equals
c's S-column; R//S dually compares rows.
"""

from __future__ import annotations

from functools import lru_cache

from .rel import CarrierMismatch, Relation, converse, intersect, register_cache


@register_cache
@lru_cache(maxsize=1 << 16)
def left_residual(r: Relation, s: Relation) -> Relation:
    """R\\S : the b-row is the intersection of the S-rows of R's column at b."""
    if r.src != s.src:
        raise CarrierMismatch(
            f"left_residual: source carriers disagree ({r.src.name} vs {s.src.name})"
        )
    full = (1 << s.dst.size) - 1
    srows = s.rows
    out = []
    for b in range(r.dst.size):
        bit = 1 << b
        acc = full
        for a, row in enumerate(r.rows):
            if row & bit:
                acc &= srows[a]
        out.append(acc)
    return Relation(r.dst, s.dst, out)


@register_cache
@lru_cache(maxsize=1 << 16)
def right_residual(r: Relation, s: Relation) -> Relation:
    """R/S : (a,c) present iff S's row at c is contained in R's row at a."""
    if r.dst != s.dst:
        raise CarrierMismatch(
            f"right_residual: target carriers disagree ({r.dst.name} vs {s.dst.name})"
        )
    srows = s.rows
    out = []
    for row in r.rows:
        acc = 0
        bit = 1
        for c in range(s.src.size):
            if srows[c] & ~row == 0:
                acc |= bit
            bit <<= 1
        out.append(acc)
    return Relation(r.src, s.src, out)


@register_cache
@lru_cache(maxsize=1 << 15)
def sym_right_div(r: Relation, s: Relation) -> Relation:
    """R\\\\S = R\\S ∩ (S\\R)° : relate b to c when column_R(b) = column_S(c)."""
    return intersect(left_residual(r, s), converse(left_residual(s, r)))


@register_cache
@lru_cache(maxsize=1 << 15)
def sym_left_div(r: Relation, s: Relation) -> Relation:
    """R//S = R/S ∩ (S/R)° : relate a to c when row_R(a) = row_S(c)."""
    return intersect(right_residual(r, s), converse(right_residual(s, r)))
