"""Finite binary relations as packed bit matrices.

A Relation is an immutable boolean matrix between two named finite carriers.
Row ``i`` is a Python int whose bit ``j`` is the entry ``(i, j)``; operations
are mostly word-parallel bit fiddling, which is what makes exhaustive law
sweeps over all relations of small carriers affordable.

Enumeration order is little-endian: relation number ``n`` over carriers of
sizes ``m`` and ``k`` has pair ``(i, j)`` present iff bit ``i*k + j`` of ``n``
is set. Carrier equality is nominal (name and size); labels are presentation
only and never participate in equality or hashing.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Iterator


class CarrierMismatch(TypeError):
    """An operation was applied to relations over incompatible carriers."""


class EnumerationLimit(ValueError):
    """An enumeration request would exceed the configured size bound."""


class RelationFormatError(ValueError):
    """A relation description (JSON dict) is malformed; .field says where."""

    def __init__(self, field: str, message: str):
        super().__init__(f"{field}: {message}")
        self.field = field


#: enumerate_relations refuses carriers with more than this many matrix bits.
DEFAULT_ENUM_BITS = 12


class Carrier:
    """A named finite type.

    Two carriers are interchangeable iff they agree on name and size; this is
    deliberate so that relations loaded from different files compose exactly
    when their endpoint declarations match.
    """

    __slots__ = ("name", "size", "labels", "_hash")

    def __init__(self, name: str, size: int, labels: Iterable[str] | None = None):
        if not isinstance(size, int) or size < 0:
            raise ValueError(f"carrier {name!r}: size must be a non-negative int, got {size!r}")
        if labels is None:
            labels = tuple(str(i) for i in range(size))
        else:
            labels = tuple(labels)
            if len(labels) != size:
                raise ValueError(f"carrier {name!r}: {len(labels)} labels for size {size}")
            if len(set(labels)) != len(labels):
                raise ValueError(f"carrier {name!r}: labels must be pairwise distinct")
        self.name = str(name)
        self.size = size
        self.labels = labels
        self._hash = hash((self.name, size))

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Carrier)
            and self.name == other.name
            and self.size == other.size
        )

    def __ne__(self, other: object) -> bool:
        return not self.__eq__(other)

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Carrier({self.name!r}, {self.size})"


class Relation:
    """An immutable relation between two carriers, stored as packed bit rows."""

    __slots__ = ("src", "dst", "rows", "_hash")

    def __init__(self, src: Carrier, dst: Carrier, rows: Iterable[int]):
        rows = tuple(rows)
        # internal constructor: callers are trusted, malformed input is a bug
        assert len(rows) == src.size, (len(rows), src)
        full = (1 << dst.size) - 1
        assert all(0 <= r <= full for r in rows), rows
        self.src = src
        self.dst = dst
        self.rows = rows
        self._hash = hash((src._hash, dst._hash, rows))

    # -- identity ---------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Relation)
            and self.rows == other.rows
            and self.src == other.src
            and self.dst == other.dst
        )

    def __ne__(self, other: object) -> bool:
        return not self.__eq__(other)

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        pts = ",".join(f"({i},{j})" for i, j in self.pairs())
        return f"<{self.src.name}~{self.dst.name} {{{pts}}}>"

    # -- queries ----------------------------------------------------------

    def pairs(self) -> Iterator[tuple[int, int]]:
        for i, row in enumerate(self.rows):
            while row:
                low = row & -row
                yield i, low.bit_length() - 1
                row ^= low

    def __contains__(self, pair: tuple[int, int]) -> bool:
        i, j = pair
        return 0 <= i < self.src.size and 0 <= j < self.dst.size and bool(self.rows[i] >> j & 1)

    def __bool__(self) -> bool:
        return any(self.rows)

    def bit_count(self) -> int:
        return sum(r.bit_count() for r in self.rows)

    def is_homogeneous(self) -> bool:
        return self.src == self.dst

    # -- operator sugar (delegates to the module-level functions) ----------

    def __matmul__(self, other: "Relation") -> "Relation":
        return compose(self, other)

    def __and__(self, other: "Relation") -> "Relation":
        return intersect(self, other)

    def __or__(self, other: "Relation") -> "Relation":
        return union(self, other)

    def __invert__(self) -> "Relation":
        return complement(self)

    def __le__(self, other: "Relation") -> bool:
        return is_subset(self, other)

    def __lt__(self, other: "Relation") -> bool:
        return is_subset(self, other) and self.rows != other.rows

    def __ge__(self, other: "Relation") -> bool:
        return is_subset(other, self)

    def __gt__(self, other: "Relation") -> bool:
        return is_subset(other, self) and self.rows != other.rows

    @property
    def conv(self) -> "Relation":
        return converse(self)


# -- constructors -----------------------------------------------------------


def bottom(src: Carrier, dst: Carrier) -> Relation:
    return Relation(src, dst, (0,) * src.size)


def top(src: Carrier, dst: Carrier) -> Relation:
    full = (1 << dst.size) - 1
    return Relation(src, dst, (full,) * src.size)


def identity(carrier: Carrier) -> Relation:
    return Relation(carrier, carrier, tuple(1 << i for i in range(carrier.size)))


def from_pairs(src: Carrier, dst: Carrier, pairs: Iterable[tuple[int, int]]) -> Relation:
    """Validating constructor: pairs must be in range and duplicate-free."""
    rows = [0] * src.size
    for n, pair in enumerate(pairs):
        try:
            i, j = pair
        except (TypeError, ValueError):
            raise RelationFormatError(f"pairs[{n}]", f"expected an [i, j] pair, got {pair!r}") from None
        if not (isinstance(i, int) and 0 <= i < src.size):
            raise RelationFormatError(
                f"pairs[{n}]", f"source index {i!r} out of range for carrier {src.name!r} of size {src.size}"
            )
        if not (isinstance(j, int) and 0 <= j < dst.size):
            raise RelationFormatError(
                f"pairs[{n}]", f"target index {j!r} out of range for carrier {dst.name!r} of size {dst.size}"
            )
        if rows[i] >> j & 1:
            raise RelationFormatError(f"pairs[{n}]", f"duplicate pair [{i}, {j}]")
        rows[i] |= 1 << j
    return Relation(src, dst, rows)


def coreflexive(carrier: Carrier, members: Iterable[int]) -> Relation:
    """The sub-identity with the given diagonal members."""
    rows = [0] * carrier.size
    for i in members:
        if not 0 <= i < carrier.size:
            raise ValueError(f"member {i} out of range for carrier {carrier.name!r} of size {carrier.size}")
        rows[i] = 1 << i
    return Relation(carrier, carrier, rows)


def relation_code(r: Relation) -> int:
    """Little-endian integer code of a relation (inverse of relation_at)."""
    k = r.dst.size
    n = 0
    for i, row in enumerate(r.rows):
        n |= row << (i * k)
    return n


def relation_at(src: Carrier, dst: Carrier, code: int) -> Relation:
    k = dst.size
    full = (1 << k) - 1
    assert 0 <= code < 1 << (src.size * k), code
    return Relation(src, dst, tuple(code >> (i * k) & full for i in range(src.size)))


def enumerate_relations(src: Carrier, dst: Carrier, max_bits: int = DEFAULT_ENUM_BITS) -> Iterator[Relation]:
    """All relations src~dst in little-endian order.

    Refuses (rather than hangs) when the matrix has more than max_bits cells.
    """
    bits = src.size * dst.size
    if bits > max_bits:
        raise EnumerationLimit(
            f"{src.size}x{dst.size} carrier pair has {bits} matrix bits; "
            f"refusing to enumerate 2**{bits} relations (limit {max_bits} bits)"
        )
    for code in range(1 << bits):
        yield relation_at(src, dst, code)


def enumerate_coreflexives(carrier: Carrier, max_bits: int = DEFAULT_ENUM_BITS) -> Iterator[Relation]:
    """All sub-identities over the carrier, in little-endian order of the diagonal."""
    n = carrier.size
    if n > max_bits:
        raise EnumerationLimit(f"carrier {carrier.name!r} has {n} diagonal bits (limit {max_bits})")
    for mask in range(1 << n):
        yield Relation(carrier, carrier, tuple((mask >> i & 1) << i for i in range(n)))


# -- lattice and monoid operations -------------------------------------------

_CACHES: list = []


def register_cache(fn):
    """Register an lru_cache'd operation so cache_clear can reach it."""
    _CACHES.append(fn)
    return fn


def cache_clear() -> None:
    """Drop all memoized operation results (tests use this between phases)."""
    for fn in _CACHES:
        fn.cache_clear()


def _require_same_type(r: Relation, s: Relation, what: str) -> None:
    if r.src != s.src or r.dst != s.dst:
        raise CarrierMismatch(
            f"{what}: operands have types {r.src.name}~{r.dst.name} and {s.src.name}~{s.dst.name}"
        )


@register_cache
@lru_cache(maxsize=1 << 17)
def compose(r: Relation, s: Relation) -> Relation:
    if r.dst != s.src:
        raise CarrierMismatch(
            f"compose: middle carriers disagree ({r.src.name}~{r.dst.name} then {s.src.name}~{s.dst.name})"
        )
    srows = s.rows
    out = []
    for row in r.rows:
        acc = 0
        while row:
            low = row & -row
            acc |= srows[low.bit_length() - 1]
            row ^= low
        out.append(acc)
    return Relation(r.src, s.dst, out)


@register_cache
@lru_cache(maxsize=1 << 15)
def converse(r: Relation) -> Relation:
    out = [0] * r.dst.size
    for i, row in enumerate(r.rows):
        bit = 1 << i
        while row:
            low = row & -row
            out[low.bit_length() - 1] |= bit
            row ^= low
    return Relation(r.dst, r.src, out)


def union(r: Relation, s: Relation) -> Relation:
    _require_same_type(r, s, "union")
    return Relation(r.src, r.dst, tuple(a | b for a, b in zip(r.rows, s.rows)))


def intersect(r: Relation, s: Relation) -> Relation:
    _require_same_type(r, s, "intersect")
    return Relation(r.src, r.dst, tuple(a & b for a, b in zip(r.rows, s.rows)))


@register_cache
@lru_cache(maxsize=1 << 15)
def complement(r: Relation) -> Relation:
    full = (1 << r.dst.size) - 1
    return Relation(r.src, r.dst, tuple(row ^ full for row in r.rows))


def is_subset(r: Relation, s: Relation) -> bool:
    _require_same_type(r, s, "is_subset")
    return all(a & ~b == 0 for a, b in zip(r.rows, s.rows))


def equals(r: Relation, s: Relation) -> bool:
    _require_same_type(r, s, "equals")
    return r.rows == s.rows


def is_coreflexive(r: Relation) -> bool:
    return r.src == r.dst and all(row & ~(1 << i) == 0 for i, row in enumerate(r.rows))


# -- the two axioms that distinguish relation algebras from lattices ---------


def dedekind_check(r: Relation, s: Relation, t: Relation) -> tuple[bool, bool]:
    """Truth of the modular law and its dual on a typed triple.

    For r : A~B, s : B~C, t : A~C, checks
        r∘s ∩ t  ⊆  r∘(s ∩ r°∘t)       and
        r∘s ∩ t  ⊆  (r ∩ t∘s°)∘s.
    """
    lhs = intersect(compose(r, s), t)
    first = is_subset(lhs, compose(r, intersect(s, compose(converse(r), t))))
    second = is_subset(lhs, compose(intersect(r, compose(t, converse(s))), s))
    return first, second


def cone_check(r: Relation) -> bool:
    """⊤∘r∘⊤ = ⊤  or  r = ⊥ (always true concretely; false in some abstract models)."""
    if not r:
        return True
    return compose(compose(top(r.src, r.src), r), top(r.dst, r.dst)) == top(r.src, r.dst)


# -- JSON form ----------------------------------------------------------------


def carrier_to_dict(c: Carrier) -> dict:
    return {"name": c.name, "size": c.size, "labels": list(c.labels)}


def _carrier_from_dict(d: object, field: str) -> Carrier:
    if not isinstance(d, dict):
        raise RelationFormatError(field, f"expected an object, got {type(d).__name__}")
    if "name" not in d or "size" not in d:
        raise RelationFormatError(field, "carrier needs 'name' and 'size'")
    name, size = d["name"], d["size"]
    if not isinstance(name, str):
        raise RelationFormatError(f"{field}.name", f"expected a string, got {name!r}")
    if not isinstance(size, int) or isinstance(size, bool) or size < 0:
        raise RelationFormatError(f"{field}.size", f"expected a non-negative int, got {size!r}")
    labels = d.get("labels")
    if labels is not None:
        if not isinstance(labels, list) or not all(isinstance(x, str) for x in labels):
            raise RelationFormatError(f"{field}.labels", "expected a list of strings")
    try:
        return Carrier(name, size, labels)
    except ValueError as e:
        raise RelationFormatError(field, str(e)) from None


def to_dict(r: Relation) -> dict:
    return {
        "src": carrier_to_dict(r.src),
        "dst": carrier_to_dict(r.dst),
        "pairs": [[i, j] for i, j in r.pairs()],
    }


def from_dict(d: object) -> Relation:
    if not isinstance(d, dict):
        raise RelationFormatError("$", f"expected a JSON object, got {type(d).__name__}")
    for key in ("src", "dst", "pairs"):
        if key not in d:
            raise RelationFormatError(key, "missing")
    src = _carrier_from_dict(d["src"], "src")
    dst = _carrier_from_dict(d["dst"], "dst")
    pairs = d["pairs"]
    if not isinstance(pairs, list):
        raise RelationFormatError("pairs", f"expected a list, got {type(pairs).__name__}")
    checked = []
    for n, p in enumerate(pairs):
        if not (isinstance(p, list) and len(p) == 2 and all(isinstance(x, int) and not isinstance(x, bool) for x in p)):
            raise RelationFormatError(f"pairs[{n}]", f"expected a two-int list, got {p!r}")
        checked.append((p[0], p[1]))
    return from_pairs(src, dst, checked)
