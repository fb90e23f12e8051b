"""Radius-one balls, reversible sets and ball intersections.

Out-balls come from gathering a permutation through every distinct operation
order (see :func:`tdrl.perm.op_orders`).  In-balls are built from the
split/interleave characterization: rho produces p iff rho is a riffle merge of
a prefix of p with the remaining suffix (reversed, for mirror operations).
A brute-force inverse search is kept alongside as an oracle.
"""

from __future__ import annotations

import enum
import os
from dataclasses import dataclass, field
from itertools import combinations, permutations

from tdrl._backend import kernels
from tdrl.perm import (
    OpKind,
    Pattern,
    Permutation,
    TDRLError,
    WindowedOp,
    _trusted,
    canonical_pattern,
    op_orders,
    pattern_order,
    relabel,
)

BALL_GUARD = int(os.environ.get("TDRL_MAX_N", "20"))
IN_SEARCH_GUARD = 10
PAIRWISE_GUARD = 7


class GuardExceeded(TDRLError):
    """Requested size is above an enumeration guard."""

    def __init__(self, what: str, n: int, limit: int):
        super().__init__(
            f"n={n} exceeds the {what} guard (n <= {limit}); pass --max-n-override to raise it"
        )
        self.what = what
        self.n = n
        self.limit = limit


def check_guard(what: str, n: int, limit: int, override: int | None = None) -> None:
    bound = limit if override is None else override
    if n > bound:
        raise GuardExceeded(what, n, bound)


class Direction(enum.Enum):
    OUT = "out"
    IN = "in"
    REVERSIBLE = "reversible"


class Family(enum.Enum):
    CYCLIC_SHIFT = "cyclic-shift"
    ADJACENT_TRANSPOSITION = "adjacent-transposition"
    SWAP_LAST_TWO = "swap-last-two"


@dataclass(frozen=True)
class NeighborSet:
    """Deduplicated set of equal-length permutations, iterated in lexicographic order."""

    n: int
    perms: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        perms = frozenset(tuple(p) for p in self.perms)
        if any(len(p) != self.n for p in perms):
            raise TDRLError(f"all permutations in the set must have length {self.n}")
        object.__setattr__(self, "perms", perms)

    def __len__(self) -> int:
        return len(self.perms)

    def __iter__(self):
        return (_trusted(p) for p in sorted(self.perms))

    def __contains__(self, p) -> bool:
        return tuple(p) in self.perms

    def __and__(self, other: NeighborSet) -> NeighborSet:
        return NeighborSet(self.n, self.perms & other.perms)

    def __le__(self, other: NeighborSet) -> bool:
        return self.perms <= other.perms

    def sorted(self) -> list[Permutation]:
        return list(self)

    def relabel(self, sigma: Permutation) -> NeighborSet:
        return NeighborSet(self.n, frozenset(relabel(sigma, _trusted(p)) for p in self.perms))

    def to_text(self) -> str:
        return "".join(f"{p}\n" for p in self)


def _resolve(p, kind, k):
    p = p if isinstance(p, Permutation) else Permutation(p)
    kind = OpKind.parse(kind)
    k = len(p) if k is None else k
    if not 1 <= k <= len(p):
        raise TDRLError(f"window width {k} outside 1..{len(p)}")
    return p, kind, k


def ball_out(p, kind=OpKind.TDRL, k: int | None = None, max_n: int | None = None) -> NeighborSet:
    """Every permutation reachable from ``p`` by one operation on one width-k window."""
    p, kind, k = _resolve(p, kind, k)
    check_guard("single-ball", len(p), BALL_GUARD, max_n)
    return NeighborSet(len(p), frozenset(kernels.gather(p, op_orders(len(p), kind, k))))


def ball_out_witnessed(p, kind=OpKind.TDRL, k: int | None = None, max_n: int | None = None):
    """Map each element of the out-ball to one operation producing it.

    The witness is the first hit scanning window starts upwards and canonical
    patterns in ascending lexicographic order.
    """
    p, kind, k = _resolve(p, kind, k)
    check_guard("single-ball", len(p), BALL_GUARD, max_n)
    mirror = kind is OpKind.MTDRL
    seen: dict[Permutation, WindowedOp] = {}
    patterns = sorted({canonical_pattern(b, kind) for b in Pattern.all_patterns(k)})
    for start in range(1, len(p) - k + 2):
        lo = start - 1
        segment = p[lo:lo + k]
        for b in patterns:
            rho = _trusted(p[:lo] + tuple(segment[i] for i in pattern_order(b, mirror)) + p[lo + k:])
            if rho not in seen:
                seen[rho] = WindowedOp(kind, start, b)
    return dict(sorted(seen.items()))


def interleavings(a, b):
    """All riffle merges of ``a`` and ``b`` (each keeps its internal order)."""
    a, b = tuple(a), tuple(b)
    m = len(a) + len(b)
    out = []
    for slots in combinations(range(m), len(a)):
        merged = [None] * m
        taken = set(slots)
        for pos, x in zip(slots, a):
            merged[pos] = x
        rest = iter(b)
        for pos in range(m):
            if pos not in taken:
                merged[pos] = next(rest)
        out.append(tuple(merged))
    return out


def _segment_in(seg, mirror: bool) -> set:
    result = set()
    for j in range(len(seg) + 1):
        tail = seg[j:][::-1] if mirror else seg[j:]
        result.update(interleavings(seg[:j], tail))
    return result


def ball_in(p, kind=OpKind.TDRL, k: int | None = None, max_n: int | None = None) -> NeighborSet:
    """Every permutation that produces ``p`` by one operation on one width-k window."""
    p, kind, k = _resolve(p, kind, k)
    check_guard("single-ball", len(p), BALL_GUARD, max_n)
    mirror = kind is OpKind.MTDRL
    result = set()
    for lo in range(len(p) - k + 1):
        head, tail = p[:lo], p[lo + k:]
        for seg in _segment_in(p[lo:lo + k], mirror):
            result.add(head + seg + tail)
    return NeighborSet(len(p), frozenset(result))


def ball_in_search(p, kind=OpKind.TDRL, k: int | None = None, max_n: int | None = None) -> NeighborSet:
    """Oracle for :func:`ball_in`: test every rho in Pi(n) for ``p in ball_out(rho)``."""
    p, kind, k = _resolve(p, kind, k)
    check_guard("in-ball search", len(p), IN_SEARCH_GUARD, max_n)
    orders = op_orders(len(p), kind, k)
    target = tuple(p)
    found = frozenset(
        rho for rho in permutations(range(1, len(p) + 1)) if target in kernels.gather(rho, orders)
    )
    return NeighborSet(len(p), found)


def reversible_set(p, kind=OpKind.TDRL, k: int | None = None, max_n: int | None = None) -> NeighborSet:
    return ball_out(p, kind, k, max_n) & ball_in(p, kind, k, max_n)


def intersect_out(p, q, kind=OpKind.TDRL, k: int | None = None, max_n: int | None = None) -> NeighborSet:
    p, q = Permutation(p), Permutation(q)
    if len(p) != len(q):
        raise TDRLError(f"cannot intersect balls of lengths {len(p)} and {len(q)}")
    return ball_out(p, kind, k, max_n) & ball_out(q, kind, k, max_n)


@dataclass(frozen=True)
class MaxIntersection:
    n: int
    kind: OpKind
    value: int
    witnesses: tuple[Permutation, Permutation]
    # Every q with |ball(id) & ball(q)| == value; filled when n <= 5.
    attaining: tuple[Permutation, ...] = ()


def max_intersection(n: int, kind=OpKind.TDRL, exhaustive: bool = False, max_n: int | None = None) -> MaxIntersection:
    """Largest ``|ball_out(p) & ball_out(q)|`` over distinct p, q in Pi(n).

    By relabeling invariance one argument may be fixed to the identity; that
    reduced scan is the default.  ``exhaustive=True`` searches all unordered
    pairs instead.
    """
    kind = OpKind.parse(kind)
    if n < 2:
        raise TDRLError("the maximum is over distinct pairs, so n >= 2 is required")
    check_guard("pairwise", n, PAIRWISE_GUARD, max_n)
    orders = op_orders(n, kind)
    ident = Permutation.identity(n)
    if exhaustive:
        value, i, j = kernels.pairwise_max(n, orders)
        perms = list(permutations(range(1, n + 1)))
        return MaxIntersection(n, kind, value, (_trusted(perms[i]), _trusted(perms[j])))
    sizes = kernels.overlap_scan(n, orders, ident)
    # Rank 0 is the identity itself.
    value = max(sizes[1:])
    perms = permutations(range(1, n + 1))
    attaining = tuple(_trusted(q) for q, s in zip(perms, sizes) if s == value and q != ident)
    return MaxIntersection(n, kind, value, (ident, attaining[0]), attaining if n <= 5 else ())


def witness_pair(n: int, family: Family | str) -> tuple[Permutation, Permutation]:
    """The identity paired with its image under a named construction."""
    if n < 2:
        raise TDRLError("witness pairs need n >= 2")
    family = Family(family)
    ident = Permutation.identity(n)
    if family is Family.CYCLIC_SHIFT:
        other = ident[1:] + ident[:1]
    elif family is Family.ADJACENT_TRANSPOSITION:
        other = (2, 1) + ident[2:]
    else:
        other = ident[:-2] + (n, n - 1)
    return ident, _trusted(other)


def family_fits(family: Family, kind: OpKind) -> bool:
    """Whether the construction is the one used for claims about ``kind``."""
    if Family(family) is Family.SWAP_LAST_TWO:
        return OpKind.parse(kind) is OpKind.MTDRL
    return OpKind.parse(kind) is OpKind.TDRL
