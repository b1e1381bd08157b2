"""Finitely representable subsets of w^n and their copy calculus.

A subset of w^n is stored column-first: a dimension-n cube set is an
eventually periodic stream of dimension-(n-1) cube sets, given by a finite
``prefix`` and a nonempty ``cycle``; column ``i`` is ``prefix[i]`` for
``i < len(prefix)`` and ``cycle[(i - len(prefix)) % len(cycle)]`` beyond.
A dimension-0 cube set is a single bit (the one-point order is in or out).

The class is closed under Boolean operations and supports exact queries:
lexicographic order type, membership in the n-fold Fubini power of the
finite ideal, canonical enumeration, and copy detection.  Construction
canonicalizes (minimal cycle, shortest prefix), so structural equality is
semantic equality and hashing is consistent.

JSON schema: ``{"dim": n, "prefix": [child...], "cycle": [child...]}`` with
dimension-0 children serialized as ``0``/``1``.  Points are arrays of
naturals, most significant coordinate first.
"""

from __future__ import annotations

from functools import lru_cache
from math import lcm
from typing import Iterable, Sequence, Tuple

from . import config
from .errors import CapError, DimensionError, RangeError, SchemaError
from .ordinals import (
    EQ,
    GT,
    LT,
    ONE,
    ZERO,
    Ordinal,
    OrdinalLike,
    left_difference,
    omega_power,
    ord_add,
    ord_cmp,
    ord_mul,
)

Point = Tuple[int, ...]


class CubeSet:
    """An eventually periodic subset of w^dim.  Immutable and canonical."""

    __slots__ = ("dim", "bit", "prefix", "cycle", "_hash")

    def __init__(self, *args, **kwargs):
        raise TypeError("use CubeSet.leaf or CubeSet.node")

    @classmethod
    def _raw(cls, dim, bit, prefix, cycle) -> "CubeSet":
        self = object.__new__(cls)
        self.dim = dim
        self.bit = bit
        self.prefix = prefix
        self.cycle = cycle
        self._hash = None
        return self

    @classmethod
    def leaf(cls, bit) -> "CubeSet":
        return _LEAF_TRUE if bit else _LEAF_FALSE

    @classmethod
    def node(cls, prefix: Iterable["CubeSet"], cycle: Iterable["CubeSet"]) -> "CubeSet":
        prefix = tuple(prefix)
        cycle = tuple(cycle)
        if not cycle:
            raise SchemaError("cycle must be nonempty")
        child_dim = cycle[0].dim
        for child in prefix + cycle:
            if not isinstance(child, CubeSet):
                raise SchemaError("cube-set children must be cube sets")
            if child.dim != child_dim:
                raise DimensionError("all children must share a dimension")
        dim = child_dim + 1
        if dim > config.dim_cap():
            raise CapError(f"dimension {dim} exceeds the cap {config.dim_cap()}")
        # Minimal period: the shortest divisor-length pattern generating the cycle.
        n = len(cycle)
        for period in range(1, n + 1):
            if n % period == 0 and all(cycle[i] == cycle[i % period] for i in range(n)):
                cycle = cycle[:period]
                break
        # Shortest prefix: fold trailing columns that already match the cycle.
        prefix = list(prefix)
        while prefix and prefix[-1] == cycle[-1]:
            prefix.pop()
            cycle = (cycle[-1],) + cycle[:-1]
        return cls._raw(dim, None, tuple(prefix), cycle)

    def column(self, i: int) -> "CubeSet":
        if self.dim == 0:
            raise DimensionError("a dimension-0 set has no columns")
        if i < len(self.prefix):
            return self.prefix[i]
        return self.cycle[(i - len(self.prefix)) % len(self.cycle)]

    def __eq__(self, other) -> bool:
        if not isinstance(other, CubeSet):
            return NotImplemented
        if self is other:
            return True
        return (
            self.dim == other.dim
            and self.bit == other.bit
            and self.prefix == other.prefix
            and self.cycle == other.cycle
        )

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.dim, self.bit, self.prefix, self.cycle))
        return self._hash

    def __repr__(self) -> str:
        if self.dim == 0:
            return f"CubeSet.leaf({int(self.bit)})"
        return f"<CubeSet dim={self.dim} prefix={len(self.prefix)} cycle={len(self.cycle)}>"

    def __or__(self, other):
        return cs_union(self, other)

    def __and__(self, other):
        return cs_inter(self, other)

    def __sub__(self, other):
        return cs_diff(self, other)

    def __invert__(self):
        return cs_complement(self)


_LEAF_FALSE = CubeSet._raw(0, False, (), ())
_LEAF_TRUE = CubeSet._raw(0, True, (), ())


@lru_cache(maxsize=None)
def cs_empty(dim: int) -> CubeSet:
    if dim == 0:
        return _LEAF_FALSE
    return CubeSet.node((), (cs_empty(dim - 1),))


@lru_cache(maxsize=None)
def cs_full(dim: int) -> CubeSet:
    if dim == 0:
        return _LEAF_TRUE
    return CubeSet.node((), (cs_full(dim - 1),))


def cs_is_empty(a: CubeSet) -> bool:
    return a == cs_empty(a.dim)


def cs_is_full(a: CubeSet) -> bool:
    return a == cs_full(a.dim)


def _check_point(a: CubeSet, point: Sequence[int]) -> Point:
    point = tuple(point)
    if len(point) != a.dim:
        raise DimensionError(f"point of length {len(point)} in a dimension-{a.dim} set")
    for coord in point:
        if not isinstance(coord, int) or isinstance(coord, bool) or coord < 0:
            raise RangeError(f"coordinates must be naturals, got {coord!r}")
    return point


def cs_member(a: CubeSet, point: Sequence[int]) -> bool:
    """Membership under the column decomposition."""
    point = _check_point(a, point)
    while point:
        a = a.column(point[0])
        point = point[1:]
    return bool(a.bit)


def _same_dim(a: CubeSet, b: CubeSet) -> None:
    if a.dim != b.dim:
        raise DimensionError(f"dimension mismatch: {a.dim} vs {b.dim}")


def _zip_cols(a: CubeSet, b: CubeSet, op) -> CubeSet:
    explicit = max(len(a.prefix), len(b.prefix))
    period = lcm(len(a.cycle), len(b.cycle))
    prefix = (op(a.column(i), b.column(i)) for i in range(explicit))
    cycle = (op(a.column(explicit + j), b.column(explicit + j)) for j in range(period))
    return CubeSet.node(prefix, cycle)


def cs_union(a: CubeSet, b: CubeSet) -> CubeSet:
    _same_dim(a, b)
    if a.dim == 0:
        return CubeSet.leaf(a.bit or b.bit)
    return _zip_cols(a, b, cs_union)


def cs_inter(a: CubeSet, b: CubeSet) -> CubeSet:
    _same_dim(a, b)
    if a.dim == 0:
        return CubeSet.leaf(a.bit and b.bit)
    return _zip_cols(a, b, cs_inter)


def cs_diff(a: CubeSet, b: CubeSet) -> CubeSet:
    _same_dim(a, b)
    if a.dim == 0:
        return CubeSet.leaf(a.bit and not b.bit)
    return _zip_cols(a, b, cs_diff)


def cs_complement(a: CubeSet) -> CubeSet:
    if a.dim == 0:
        return CubeSet.leaf(not a.bit)
    return CubeSet.node(
        (cs_complement(c) for c in a.prefix), (cs_complement(c) for c in a.cycle)
    )


def cs_bool(op: str, a: CubeSet, b: CubeSet = None) -> CubeSet:
    """Boolean combination; ``op`` is union, inter, diff or complement."""
    if op == "complement":
        if b is not None:
            raise DimensionError("complement takes a single operand")
        return cs_complement(a)
    if b is None:
        raise DimensionError(f"{op} needs two operands")
    try:
        fn = {"union": cs_union, "inter": cs_inter, "diff": cs_diff}[op]
    except KeyError:
        raise SchemaError(f"unknown Boolean operation {op!r}") from None
    return fn(a, b)


def cs_order_type(a: CubeSet) -> Ordinal:
    """The order type of the set under the lexicographic order.

    Column types are summed in order.  The periodic part contributes the
    limit of repeated block sums: for block sum c > 0 with leading exponent
    e this is w^(e+1).
    """
    if a.dim == 0:
        return ONE if a.bit else ZERO
    total = ZERO
    for col in a.prefix:
        total = ord_add(total, cs_order_type(col))
    block = ZERO
    for col in a.cycle:
        block = ord_add(block, cs_order_type(col))
    if block.is_zero():
        return total
    limit = omega_power(ord_add(block.leading_exponent(), ONE))
    return ord_add(total, limit)


def cs_fubini_positive(a: CubeSet) -> bool:
    """True iff the set is positive for the n-fold Fubini power of Fin.

    Positivity asks for cofinally many positive columns, which for an
    eventually periodic stream means a positive column inside the cycle.
    At dimension 0 the single point must be present; at dimension 1 this is
    plain infinitude.
    """
    if a.dim == 0:
        return bool(a.bit)
    return any(cs_fubini_positive(col) for col in a.cycle)


def _block_type(a: CubeSet) -> Ordinal:
    block = ZERO
    for col in a.cycle:
        block = ord_add(block, cs_order_type(col))
    return block


def _whole_blocks(block: Ordinal, xi: Ordinal) -> int:
    """Largest q with block * q <= xi (finite because xi < block * w)."""
    if ord_cmp(xi, block) == LT:
        return 0
    hi = 1
    while ord_cmp(ord_mul(block, hi), xi) != GT:
        hi <<= 1
    lo = hi >> 1
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if ord_cmp(ord_mul(block, mid), xi) != GT:
            lo = mid
        else:
            hi = mid
    return lo


def _select(a: CubeSet, xi: Ordinal) -> Point:
    if a.dim == 0:
        return ()
    for i, col in enumerate(a.prefix):
        t = cs_order_type(col)
        if ord_cmp(xi, t) == LT:
            return (i,) + _select(col, xi)
        xi = left_difference(t, xi)
    block = _block_type(a)
    skipped = _whole_blocks(block, xi)
    xi = left_difference(ord_mul(block, skipped), xi)
    base = len(a.prefix) + skipped * len(a.cycle)
    for j, col in enumerate(a.cycle):
        t = cs_order_type(col)
        if ord_cmp(xi, t) == LT:
            return (base + j,) + _select(col, xi)
        xi = left_difference(t, xi)
    raise AssertionError("selection walked past its bound")


def cs_select(a: CubeSet, xi: OrdinalLike) -> Point:
    """The xi-th element of the set in lexicographic order.

    The map xi -> cs_select(a, xi) is the canonical isomorphism from the
    order type onto the set.
    """
    xi = Ordinal(xi)
    if ord_cmp(xi, cs_order_type(a)) != LT:
        raise RangeError(f"index {xi} is not below the order type")
    return _select(a, xi)


def cs_rank(a: CubeSet, point: Sequence[int]) -> Ordinal:
    """Position of a member in the enumeration; inverse of cs_select."""
    point = _check_point(a, point)
    if not cs_member(a, point):
        raise RangeError(f"point {point} is not a member")
    return _rank(a, point)


def _rank(a: CubeSet, point: Point) -> Ordinal:
    if a.dim == 0:
        return ZERO
    i = point[0]
    explicit = len(a.prefix)
    total = ZERO
    for col in a.prefix[: min(i, explicit)]:
        total = ord_add(total, cs_order_type(col))
    if i > explicit:
        whole, partial = divmod(i - explicit, len(a.cycle))
        total = ord_add(total, ord_mul(_block_type(a), whole))
        for j in range(partial):
            total = ord_add(total, cs_order_type(a.cycle[j]))
    return ord_add(total, _rank(a.column(i), point[1:]))


def point_to_ord(point: Sequence[int]) -> Ordinal:
    """Order-preserving code of a point: w^(n-1)*p_1 + ... + p_n."""
    point = tuple(point)
    n = len(point)
    terms = []
    for j, coord in enumerate(point):
        if not isinstance(coord, int) or isinstance(coord, bool) or coord < 0:
            raise RangeError(f"coordinates must be naturals, got {coord!r}")
        if coord:
            terms.append((Ordinal(n - 1 - j), coord))
    return Ordinal.from_terms(terms)


def ord_to_point(n: int, xi: OrdinalLike) -> Point:
    """Inverse of point_to_ord inside w^n."""
    xi = Ordinal(xi)
    if ord_cmp(xi, omega_power(n)) != LT:
        raise RangeError(f"{xi} is not below w^({n})")
    coords = [0] * n
    for exponent, coeff in xi.terms:
        coords[n - 1 - int(exponent)] = coeff
    return tuple(coords)


def initial_segment(n: int, alpha: OrdinalLike) -> CubeSet:
    """The points of w^n whose code is below alpha, for alpha <= w^n."""
    alpha = Ordinal(alpha)
    cmp_full = ord_cmp(alpha, omega_power(n))
    if cmp_full == GT:
        raise RangeError(f"{alpha} exceeds the ambient w^({n})")
    if n == 0:
        return CubeSet.leaf(alpha == ONE)
    if cmp_full == EQ:
        return cs_full(n)
    whole = 0
    rest = alpha
    if alpha.terms and alpha.terms[0][0] == Ordinal(n - 1):
        whole = alpha.terms[0][1]
        rest = Ordinal._make(alpha.terms[1:])
    prefix = [cs_full(n - 1)] * whole
    if not rest.is_zero():
        prefix.append(initial_segment(n - 1, rest))
    return CubeSet.node(prefix, (cs_empty(n - 1),))


def cs_is_copy(a: CubeSet, alpha: OrdinalLike) -> bool:
    """True iff the part of the set inside the coded segment of alpha has
    order type exactly alpha, i.e. is a copy of alpha."""
    alpha = Ordinal(alpha)
    if ord_cmp(alpha, omega_power(a.dim)) == GT:
        raise RangeError(f"{alpha} exceeds the ambient w^({a.dim})")
    inside = cs_inter(a, initial_segment(a.dim, alpha))
    return cs_order_type(inside) == alpha


def cs_product(a: CubeSet, b: CubeSet) -> CubeSet:
    """Concatenation product: pairs (p, q) with p in a, q in b.

    The lexicographic order on the concatenated coordinates is the
    lexicographic order on pairs, so the order type realizes the ordinal
    product cs_order_type(b) * cs_order_type(a) ... with the first factor
    ranging slowest.
    """
    if a.dim == 0:
        return b if a.bit else cs_empty(b.dim)
    return CubeSet.node(
        (cs_product(c, b) for c in a.prefix), (cs_product(c, b) for c in a.cycle)
    )


# -- JSON --------------------------------------------------------------------


def cube_to_json(a: CubeSet):
    if a.dim == 0:
        return int(a.bit)
    return {
        "dim": a.dim,
        "prefix": [cube_to_json(c) for c in a.prefix],
        "cycle": [cube_to_json(c) for c in a.cycle],
    }


def cube_from_json(obj) -> CubeSet:
    if isinstance(obj, bool):
        raise SchemaError("dimension-0 sets are 0 or 1, not booleans")
    if isinstance(obj, int):
        if obj not in (0, 1):
            raise SchemaError(f"dimension-0 sets are 0 or 1, got {obj}")
        return CubeSet.leaf(obj)
    if not isinstance(obj, dict):
        raise SchemaError(f"expected a cube-set object, got {type(obj).__name__}")
    try:
        dim = obj["dim"]
        prefix = obj["prefix"]
        cycle = obj["cycle"]
    except KeyError as missing:
        raise SchemaError(f"cube-set object lacks key {missing}") from None
    if not isinstance(dim, int) or dim < 1:
        raise SchemaError(f"dim must be a positive integer, got {dim!r}")
    if not isinstance(prefix, list) or not isinstance(cycle, list):
        raise SchemaError("prefix and cycle must be arrays")
    result = CubeSet.node(
        (cube_from_json(c) for c in prefix), (cube_from_json(c) for c in cycle)
    )
    if result.dim != dim:
        raise DimensionError(f"declared dim {dim} but children have dim {result.dim - 1}")
    return result
