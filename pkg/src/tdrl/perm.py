"""Permutations, binary patterns and the TDRL / mirror-TDRL operations.

A pattern bit equal to 1 means the symbol at that position survives in the
first copy; every other symbol survives in the second copy.  Positions and
window starts are 1-based on the public surface.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import product


class TDRLError(ValueError):
    """Domain error raised by operations on permutations and patterns."""


class ParseError(TDRLError):
    """Malformed textual input."""


class OpKind(enum.Enum):
    TDRL = "tdrl"
    MTDRL = "mtdrl"

    @classmethod
    def parse(cls, text: str | OpKind) -> OpKind:
        if isinstance(text, cls):
            return text
        try:
            return cls(str(text).strip().lower())
        except ValueError:
            raise ParseError(f"unknown operation kind {text!r}") from None


class Permutation(tuple):
    """A permutation of ``{1, ..., n}`` in one-line notation.

    Behaves as a plain tuple (hashing, ordering and equality included), so
    sets of permutations and sets of raw tuples interoperate.
    """

    __slots__ = ()

    def __new__(cls, elements=()):
        self = super().__new__(cls, (int(x) for x in elements))
        n = len(self)
        if n < 1:
            raise TDRLError("a permutation needs at least one symbol")
        if sorted(self) != list(range(1, n + 1)):
            raise TDRLError(f"{tuple(self)} is not a permutation of 1..{n}")
        return self

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(range(1, n + 1))

    @classmethod
    def parse(cls, text: str) -> Permutation:
        tokens = text.replace(",", " ").split()
        if not tokens or not all(re.fullmatch(r"[+-]?\d+", t) for t in tokens):
            raise ParseError(f"malformed permutation {text!r}")
        try:
            return cls(int(t) for t in tokens)
        except TDRLError as exc:
            raise ParseError(str(exc)) from None

    @property
    def n(self) -> int:
        return len(self)

    def __str__(self) -> str:
        return " ".join(map(str, self))

    def __repr__(self) -> str:
        return f"Permutation({str(self)!r})"


def _trusted(seq) -> Permutation:
    # Skips validation; only for outputs of validity-preserving operations.
    return tuple.__new__(Permutation, seq)


class Pattern(tuple):
    """A binary pattern; element 0 is position 1 of the segment."""

    __slots__ = ()

    def __new__(cls, bits=()):
        if isinstance(bits, str):
            return cls.parse(bits)
        self = super().__new__(cls, (int(b) for b in bits))
        if not self:
            raise TDRLError("a pattern needs at least one bit")
        if any(b not in (0, 1) for b in self):
            raise TDRLError(f"pattern bits must be 0 or 1, got {tuple(self)}")
        return self

    @classmethod
    def parse(cls, text: str) -> Pattern:
        s = text.strip()
        if not re.fullmatch(r"[01]+", s):
            raise ParseError(f"malformed pattern {text!r}")
        return tuple.__new__(cls, (int(c) for c in s))

    @classmethod
    def all_patterns(cls, m: int) -> list[Pattern]:
        """All ``2**m`` patterns in descending lexicographic order (all-ones first)."""
        return [tuple.__new__(cls, bits) for bits in product((1, 0), repeat=m)]

    def __str__(self) -> str:
        return "".join(map(str, self))

    def __repr__(self) -> str:
        return f"Pattern({str(self)!r})"


@dataclass(frozen=True)
class WindowedOp:
    kind: OpKind
    start: int
    pattern: Pattern

    def __post_init__(self):
        object.__setattr__(self, "kind", OpKind.parse(self.kind))
        if not isinstance(self.pattern, Pattern):
            object.__setattr__(self, "pattern", Pattern(self.pattern))

    @property
    def k(self) -> int:
        return len(self.pattern)

    def check(self, n: int) -> None:
        if not 1 <= self.k <= n:
            raise TDRLError(f"window width {self.k} outside 1..{n}")
        if not 1 <= self.start <= n - self.k + 1:
            raise TDRLError(
                f"window start {self.start} outside 1..{n - self.k + 1} for n={n}, k={self.k}"
            )


def pattern_order(bits, mirror: bool) -> tuple[int, ...]:
    """0-based source positions, in output order, of the operation ``bits``."""
    kept = [i for i, b in enumerate(bits) if b]
    rest = [i for i, b in enumerate(bits) if not b]
    if mirror:
        rest.reverse()
    return tuple(kept + rest)


def _check_lengths(p, b) -> None:
    if len(p) != len(b):
        raise TDRLError(f"pattern length {len(b)} does not match permutation length {len(p)}")


def apply_tdrl(p: Permutation, b: Pattern) -> Permutation:
    _check_lengths(p, b)
    return _trusted(p[i] for i in pattern_order(b, False))


def apply_mtdrl(p: Permutation, b: Pattern) -> Permutation:
    _check_lengths(p, b)
    return _trusted(p[i] for i in pattern_order(b, True))


def apply(p: Permutation, b: Pattern, kind: OpKind) -> Permutation:
    if OpKind.parse(kind) is OpKind.MTDRL:
        return apply_mtdrl(p, b)
    return apply_tdrl(p, b)


def apply_windowed(p: Permutation, op: WindowedOp) -> Permutation:
    op.check(len(p))
    lo, hi = op.start - 1, op.start - 1 + op.k
    segment = p[lo:hi]
    mirror = op.kind is OpKind.MTDRL
    return _trusted(p[:lo] + tuple(segment[i] for i in pattern_order(op.pattern, mirror)) + p[hi:])


def canonical_pattern(b: Pattern, kind: OpKind) -> Pattern:
    """Representative pattern of the operation induced by ``b``.

    TDRL: the ``n + 1`` prefix-block patterns ``1^r 0^(n-r)`` all act as the
    identity and map to all-zeros.  MTDRL: the last bit is irrelevant and is
    forced to 1.
    """
    kind = OpKind.parse(kind)
    if kind is OpKind.MTDRL:
        return tuple.__new__(Pattern, b[:-1] + (1,))
    r = 0
    while r < len(b) and b[r]:
        r += 1
    if not any(b[r:]):
        return tuple.__new__(Pattern, (0,) * len(b))
    return Pattern(b)


def _blocks(b) -> list[tuple[int, int]]:
    """Run-length encoding as (bit, length) pairs."""
    runs: list[tuple[int, int]] = []
    for bit in b:
        if runs and runs[-1][0] == bit:
            runs[-1] = (bit, runs[-1][1] + 1)
        else:
            runs.append((bit, 1))
    return runs


def _split_rsut(b) -> tuple[int, int, int, int] | None:
    # Block lengths (r, s, t, u) of b = 1^r 0^s 1^t 0^u, or None.
    runs = _blocks(b)
    if runs and runs[0][0] == 0:
        runs.insert(0, (1, 0))
    lengths = [length for _, length in runs]
    if len(lengths) > 4:
        return None
    if len(lengths) <= 2:
        # 1^r 0^z: read the zeros as the trailing block so the inverse is b itself.
        return (lengths[0], 0, 0, lengths[1] if len(lengths) == 2 else 0)
    lengths += [0] * (4 - len(lengths))
    return tuple(lengths)  # type: ignore[return-value]


def is_reversible_pattern(b: Pattern) -> bool:
    return _split_rsut(b) is not None


def inverse_reversible_pattern(b: Pattern) -> Pattern:
    """Pattern ``1^r 0^t 1^s 0^u`` undoing the TDRL operation ``1^r 0^s 1^t 0^u``."""
    split = _split_rsut(b)
    if split is None:
        raise TDRLError(f"pattern {b} is not of the form 1^r 0^s 1^t 0^u")
    r, s, t, u = split
    return tuple.__new__(Pattern, (1,) * r + (0,) * t + (1,) * s + (0,) * u)


def relabel(sigma: Permutation, p: Permutation) -> Permutation:
    """Symbol-wise composition: element i of the result is ``sigma[p[i]]``."""
    if len(sigma) != len(p):
        raise TDRLError(f"cannot relabel a length-{len(p)} permutation with a length-{len(sigma)} one")
    return _trusted(sigma[x - 1] for x in p)


@lru_cache(maxsize=256)
def op_orders(n: int, kind: OpKind, k: int | None = None) -> tuple[tuple[int, ...], ...]:
    """Distinct full-length gather orders for every windowed operation.

    Because the symbols of a permutation are distinct, two operations give the
    same output on one permutation iff they have the same gather order, so this
    table is the operation set modulo equality of the induced maps.  Sorted for
    determinism.
    """
    kind = OpKind.parse(kind)
    k = n if k is None else k
    if not 1 <= k <= n:
        raise TDRLError(f"window width {k} outside 1..{n}")
    mirror = kind is OpKind.MTDRL
    seen = set()
    for bits in product((0, 1), repeat=k):
        local = pattern_order(bits, mirror)
        for s in range(n - k + 1):
            seen.add(tuple(range(s)) + tuple(s + i for i in local) + tuple(range(s + k, n)))
    return tuple(sorted(seen))
