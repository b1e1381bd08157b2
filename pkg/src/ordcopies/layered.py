"""Layered sets: subsets of the tower L = L_0 + L_1 + ... with L_n = w^(n+1).

A layered set stores a finite ``prefix`` of explicit columns followed by a
cyclic ``tail`` pattern.  Column n is either a cube set of dimension n+1 or
one of the two dimension-free uniform values empty/full (plain booleans
internally).  The tail is a nonempty cyclic tuple of such booleans, so a set
can be uniformly empty or full beyond its prefix ("empty"/"full") or follow
a periodic empty/full pattern (needed to close the fusion operation under
periodic index sets).

Level sets S^m (columns whose order type reaches w^(m+1)) and supports are
exact.  They are finite or cofinite whenever the tail is uniform and are
returned as :class:`FinCof`; for properly periodic tails the exact answer is
returned as a dimension-1 cube set instead.

JSON schema: ``{"prefix": [column...], "tail": "empty"|"full"}`` where a
column is a cube-set object of dimension n+1 or the strings "empty"/"full";
a cyclic tail may be given as a list of those strings.  FinCof values are
``{"kind": "finite"|"cofinite", "exceptions": [...]}``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import lcm
from typing import Iterable, List, Optional, Sequence, Union

from . import config
from .errors import (
    CapError,
    DimensionError,
    FusionPreconditionError,
    IdealError,
    RangeError,
    SchemaError,
)
from .cubesets import (
    CubeSet,
    cs_complement,
    cs_diff,
    cs_fubini_positive,
    cs_inter,
    cs_is_empty,
    cs_is_full,
    cs_order_type,
    cs_union,
    cube_from_json,
    cube_to_json,
)
from .ordinals import LT, ZERO, OMEGA_OMEGA, Ordinal, omega_power, ord_add, ord_cmp

Column = Union[CubeSet, bool]


# -- finite/cofinite subsets of w ---------------------------------------------


@dataclass(frozen=True)
class FinCof:
    """A finite or cofinite subset of the naturals.

    ``exceptions`` lists the members for the finite kind and the missing
    elements for the cofinite kind, matching the wire format.  Complement
    flips the kind and keeps the exceptions.
    """

    kind: str
    exceptions: frozenset

    def __post_init__(self):
        if self.kind not in ("finite", "cofinite"):
            raise SchemaError(f"kind must be finite or cofinite, got {self.kind!r}")
        object.__setattr__(self, "exceptions", frozenset(self.exceptions))
        for n in self.exceptions:
            if not isinstance(n, int) or isinstance(n, bool) or n < 0:
                raise SchemaError(f"exceptions must be naturals, got {n!r}")

    @classmethod
    def finite(cls, members: Iterable[int] = ()) -> "FinCof":
        return cls("finite", frozenset(members))

    @classmethod
    def cofinite(cls, missing: Iterable[int] = ()) -> "FinCof":
        return cls("cofinite", frozenset(missing))

    def __contains__(self, n: int) -> bool:
        return (n in self.exceptions) == (self.kind == "finite")

    def is_finite(self) -> bool:
        return self.kind == "finite"

    def is_empty(self) -> bool:
        return self.kind == "finite" and not self.exceptions

    def complement(self) -> "FinCof":
        other = "cofinite" if self.kind == "finite" else "finite"
        return FinCof(other, self.exceptions)

    def union(self, other: "FinCof") -> "FinCof":
        if self.kind == "finite" and other.kind == "finite":
            return FinCof.finite(self.exceptions | other.exceptions)
        if self.kind == "cofinite" and other.kind == "cofinite":
            return FinCof.cofinite(self.exceptions & other.exceptions)
        fin, cof = (self, other) if self.kind == "finite" else (other, self)
        return FinCof.cofinite(cof.exceptions - fin.exceptions)

    def inter(self, other: "FinCof") -> "FinCof":
        return self.complement().union(other.complement()).complement()

    def diff(self, other: "FinCof") -> "FinCof":
        return self.inter(other.complement())

    def subset(self, other: "FinCof") -> bool:
        return self.diff(other).is_empty()

    def subset_star(self, other: "FinCof") -> bool:
        """Almost-inclusion: the difference is finite."""
        return self.diff(other).is_finite()

    def minus_initial(self, m: int) -> "FinCof":
        return self.diff(FinCof.finite(range(m)))

    def to_natset(self) -> CubeSet:
        bound = max(self.exceptions, default=-1) + 1
        bits = [n in self for n in range(bound)]
        return natset(bits, (self.kind == "cofinite",))

    def to_json(self):
        return {"kind": self.kind, "exceptions": sorted(self.exceptions)}

    @classmethod
    def from_json(cls, obj) -> "FinCof":
        if not isinstance(obj, dict) or set(obj) != {"kind", "exceptions"}:
            raise SchemaError("expected {kind, exceptions}")
        if not isinstance(obj["exceptions"], list):
            raise SchemaError("exceptions must be an array")
        return cls(obj["kind"], frozenset(obj["exceptions"]))


# -- eventually periodic subsets of w, as dimension-1 cube sets ---------------


def natset(prefix_bits: Iterable[bool], cycle_bits: Iterable[bool] = (False,)) -> CubeSet:
    """Build a dimension-1 cube set from bit patterns."""
    return CubeSet.node(
        (CubeSet.leaf(b) for b in prefix_bits),
        (CubeSet.leaf(b) for b in cycle_bits),
    )


def as_natset(s: Union[FinCof, CubeSet]) -> CubeSet:
    if isinstance(s, FinCof):
        return s.to_natset()
    if isinstance(s, CubeSet):
        if s.dim != 1:
            raise DimensionError("an index set must have dimension 1")
        return s
    raise SchemaError(f"not an index set: {type(s).__name__}")


def natset_to_fincof(s: CubeSet) -> Optional[FinCof]:
    """Exact conversion when the set is finite or cofinite, else None."""
    bits = [bool(c.bit) for c in s.cycle]
    if not any(bits):
        return FinCof.finite(i for i, c in enumerate(s.prefix) if c.bit)
    if all(bits):
        return FinCof.cofinite(i for i, c in enumerate(s.prefix) if not c.bit)
    return None


# -- layered sets --------------------------------------------------------------


def _as_flag(value) -> Optional[bool]:
    if isinstance(value, bool):
        return value
    if value == "empty":
        return False
    if value == "full":
        return True
    return None


class LayeredSet:
    """A subset of the layer tower; immutable and canonical."""

    __slots__ = ("prefix", "tail", "_hash")

    def __init__(self, *args, **kwargs):
        raise TypeError("use LayeredSet.make")

    @classmethod
    def _raw(cls, prefix, tail) -> "LayeredSet":
        self = object.__new__(cls)
        self.prefix = prefix
        self.tail = tail
        self._hash = None
        return self

    @classmethod
    def make(cls, prefix: Sequence = (), tail="empty") -> "LayeredSet":
        flag = _as_flag(tail)
        if flag is not None:
            tail = (flag,)
        else:
            tail = tuple(_as_flag(t) for t in tail)
            if not tail or any(t is None for t in tail):
                raise SchemaError("tail must be empty/full or a pattern of them")
        cols: List[Column] = []
        for n, col in enumerate(prefix):
            flag = _as_flag(col)
            if flag is not None:
                cols.append(flag)
                continue
            if not isinstance(col, CubeSet):
                raise SchemaError(f"column {n} is not a cube set or empty/full")
            if col.dim != n + 1:
                raise DimensionError(f"column {n} must have dimension {n + 1}, got {col.dim}")
            if cs_is_empty(col):
                cols.append(False)
            elif cs_is_full(col):
                cols.append(True)
            else:
                cols.append(col)
        if len(cols) > config.prefix_cap():
            raise CapError(f"prefix length {len(cols)} exceeds the cap {config.prefix_cap()}")
        return cls._raw(*_canonical(cols, tail))

    @classmethod
    def empty(cls) -> "LayeredSet":
        return cls.make((), "empty")

    @classmethod
    def full(cls) -> "LayeredSet":
        return cls.make((), "full")

    def column(self, n: int) -> Column:
        if n < len(self.prefix):
            return self.prefix[n]
        return self.tail[(n - len(self.prefix)) % len(self.tail)]

    def column_type(self, n: int) -> Ordinal:
        col = self.column(n)
        if isinstance(col, bool):
            return omega_power(n + 1) if col else ZERO
        return cs_order_type(col)

    def column_nonempty(self, n: int) -> bool:
        col = self.column(n)
        if isinstance(col, bool):
            return col
        return not cs_is_empty(col)

    def __eq__(self, other) -> bool:
        if not isinstance(other, LayeredSet):
            return NotImplemented
        return self.prefix == other.prefix and self.tail == other.tail

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.prefix, self.tail))
        return self._hash

    def __repr__(self) -> str:
        return f"<LayeredSet prefix={len(self.prefix)} tail={self.tail}>"


# -- column algebra (never materializes a flag as a cube set) ------------------


def _col_union(a: Column, b: Column) -> Column:
    if a is True or b is True:
        return True
    if a is False:
        return b
    if b is False:
        return a
    return cs_union(a, b)


def _col_inter(a: Column, b: Column) -> Column:
    if a is False or b is False:
        return False
    if a is True:
        return b
    if b is True:
        return a
    return cs_inter(a, b)


def _col_diff(a: Column, b: Column) -> Column:
    if a is False or b is True:
        return False
    if b is False:
        return a
    if a is True:
        return cs_complement(b)
    return cs_diff(a, b)


def _combine(a: LayeredSet, b: LayeredSet, col_op, bit_op) -> LayeredSet:
    ka, kb = len(a.prefix), len(b.prefix)
    explicit = max(ka, kb)
    period = lcm(len(a.tail), len(b.tail))
    prefix = [col_op(a.column(n), b.column(n)) for n in range(explicit)]
    tail = tuple(
        bit_op(
            a.tail[(explicit - ka + i) % len(a.tail)],
            b.tail[(explicit - kb + i) % len(b.tail)],
        )
        for i in range(period)
    )
    return LayeredSet._raw(*_canonical(prefix, tail))


def _canonical(prefix, tail):
    n = len(tail)
    for period in range(1, n + 1):
        if n % period == 0 and all(tail[i] == tail[i % period] for i in range(n)):
            tail = tail[:period]
            break
    prefix = list(prefix)
    while prefix and isinstance(prefix[-1], bool) and prefix[-1] == tail[-1]:
        prefix.pop()
        tail = (tail[-1],) + tail[:-1]
    return tuple(prefix), tail


def ls_union(a: LayeredSet, b: LayeredSet) -> LayeredSet:
    return _combine(a, b, _col_union, lambda x, y: x or y)


def ls_inter(a: LayeredSet, b: LayeredSet) -> LayeredSet:
    return _combine(a, b, _col_inter, lambda x, y: x and y)


def ls_diff(a: LayeredSet, b: LayeredSet) -> LayeredSet:
    return _combine(a, b, _col_diff, lambda x, y: x and not y)


# -- level sets, support, ideal membership -------------------------------------


def s_set_natset(a: LayeredSet, m: int) -> CubeSet:
    """Exact S^m as a dimension-1 cube set: columns of type >= w^(m+1)."""
    if m < 0:
        raise RangeError("the level must be a natural number")
    k = len(a.prefix)
    explicit = max(k, m)
    threshold = omega_power(m + 1)
    bits = []
    for n in range(explicit):
        col = a.column(n)
        if isinstance(col, bool):
            bits.append(col and n >= m)
        else:
            bits.append(ord_cmp(cs_order_type(col), threshold) != LT)
    period = len(a.tail)
    cycle = [a.tail[(explicit - k + i) % period] for i in range(period)]
    return natset(bits, cycle)


def supp_natset(a: LayeredSet) -> CubeSet:
    """Exact support as a dimension-1 cube set."""
    bits = [a.column_nonempty(n) for n in range(len(a.prefix))]
    return natset(bits, a.tail)


def ls_s_set(a: LayeredSet, m: int) -> Union[FinCof, CubeSet]:
    """S^m, as a FinCof when finite or cofinite (always so for uniform
    tails), otherwise as the exact dimension-1 cube set."""
    s = s_set_natset(a, m)
    fincof = natset_to_fincof(s)
    return s if fincof is None else fincof


def ls_supp(a: LayeredSet) -> Union[FinCof, CubeSet]:
    """The set of layer indices the set meets; FinCof when possible."""
    s = supp_natset(a)
    fincof = natset_to_fincof(s)
    return s if fincof is None else fincof


def ls_in_ideal(a: LayeredSet) -> bool:
    """True iff the set fails to contain a copy of the whole tower.

    Equivalent to some S^m being empty; beyond the prefix the tail is
    periodic, so levels up to the prefix length + 1 decide it.
    """
    for m in range(len(a.prefix) + 2):
        s = s_set_natset(a, m)
        if not any(c.bit for c in s.prefix) and not any(c.bit for c in s.cycle):
            return True
    return False


def ls_subset_ideal(a: LayeredSet, b: LayeredSet) -> bool:
    """Inclusion modulo the ideal: the difference lies in the ideal."""
    return ls_in_ideal(ls_diff(a, b))


def ls_order_type(a: LayeredSet) -> Ordinal:
    """Order type of the set: the column types summed along the tower.

    Any full tail column pattern contributes cofinally many columns of
    unbounded type, so the total collapses to w^w; otherwise the finite
    prefix sum remains.
    """
    total = ZERO
    for n in range(len(a.prefix)):
        total = ord_add(total, a.column_type(n))
    if any(a.tail):
        total = ord_add(total, OMEGA_OMEGA)
    return total


# -- reductions and fusion ------------------------------------------------------


def ls_is_reduction(s: Union[FinCof, CubeSet], a: LayeredSet, m_max: int) -> bool:
    """Truncated reduction test: s is almost contained in S^m for m <= m_max.

    Tail periodicity makes each S^m differ from the tail support only
    finitely, so the truncated test is exact for represented sets.
    """
    if ls_in_ideal(a):
        raise IdealError("reduction is only defined against a positive set")
    index = as_natset(s)
    for m in range(m_max + 1):
        if cs_fubini_positive(cs_diff(index, s_set_natset(a, m))):
            return False
    return True


def ls_fusion(a_list: Sequence[LayeredSet], s: Union[FinCof, CubeSet]) -> LayeredSet:
    """The fused set: the last input restricted to the surviving columns.

    With r the last index, the surviving columns are the members of s that
    lie in every S^m of every input for m, n <= r.  Preconditions: every
    input is positive, s is infinite, and s is almost contained in every
    such S^m; violations name the failing (m, n).
    """
    if not a_list:
        raise RangeError("fusion needs at least one layered set")
    r = len(a_list) - 1
    index = as_natset(s)
    if not cs_fubini_positive(index):
        raise IdealError("fusion requires an infinite index set")
    surviving = index
    for n, a in enumerate(a_list):
        if ls_in_ideal(a):
            raise FusionPreconditionError(f"input {n} lies in the ideal", n=n)
        for m in range(r + 1):
            s_m = s_set_natset(a, m)
            if cs_fubini_positive(cs_diff(index, s_m)):
                raise FusionPreconditionError(
                    f"index set is not almost contained in S^{m} of input {n}",
                    m=m,
                    n=n,
                )
            surviving = cs_inter(surviving, s_m)
    last = a_list[r]
    k = len(last.prefix)
    ks = len(surviving.prefix)
    explicit = max(k, ks)
    period = lcm(len(last.tail), len(surviving.cycle))
    prefix = [
        last.column(n) if surviving.column(n).bit else False for n in range(explicit)
    ]
    tail = tuple(
        last.tail[(explicit - k + i) % len(last.tail)]
        and bool(surviving.column(explicit + i).bit)
        for i in range(period)
    )
    return LayeredSet._raw(*_canonical(prefix, tail))


# -- JSON -----------------------------------------------------------------------


def layered_to_json(a: LayeredSet):
    prefix = []
    for col in a.prefix:
        if isinstance(col, bool):
            prefix.append("full" if col else "empty")
        else:
            prefix.append(cube_to_json(col))
    if len(a.tail) == 1:
        tail = "full" if a.tail[0] else "empty"
    else:
        tail = ["full" if t else "empty" for t in a.tail]
    return {"prefix": prefix, "tail": tail}


def layered_from_json(obj) -> LayeredSet:
    if not isinstance(obj, dict) or set(obj) != {"prefix", "tail"}:
        raise SchemaError("expected {prefix, tail}")
    if not isinstance(obj["prefix"], list):
        raise SchemaError("prefix must be an array")
    prefix = []
    for col in obj["prefix"]:
        if col in ("empty", "full"):
            prefix.append(col)
        else:
            prefix.append(cube_from_json(col))
    return LayeredSet.make(prefix, obj["tail"])
