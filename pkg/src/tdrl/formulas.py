"""Closed-form ball sizes, reversible counts, reconstruction numbers and
sphere-packing bounds.  Integer arithmetic throughout."""

from __future__ import annotations

import enum
from fractions import Fraction
from math import comb, factorial

from tdrl.perm import OpKind, TDRLError

MAX_FORMULA_N = 10_000


class Quantity(enum.Enum):
    S_OUT = "sout"
    S_IN = "sin"
    S_REV = "srev"
    N_MAX = "nmax"

    @classmethod
    def parse(cls, text) -> Quantity:
        if isinstance(text, cls):
            return text
        key = str(text).strip().lower().replace("_", "")
        for q in cls:
            if q.value == key:
                return q
        raise TDRLError(f"unknown quantity {text!r}")


def _check(n: int, k: int | None) -> None:
    if not 1 <= n <= MAX_FORMULA_N:
        raise TDRLError(f"n={n} outside 1..{MAX_FORMULA_N}")
    if k is not None and not 1 <= k <= n:
        raise TDRLError(f"window width k={k} outside 1..{n}")


def closed_form(quantity, kind, n: int, k: int | None = None) -> int:
    """Exact value of a counted quantity; ``k=None`` is the unbounded model."""
    quantity, kind = Quantity.parse(quantity), OpKind.parse(kind)
    _check(n, k)
    if quantity is Quantity.N_MAX:
        if k is not None:
            raise TDRLError("no reconstruction number is defined for windowed operations")
        if n < 2:
            raise TDRLError("the reconstruction number needs n >= 2")
        return 2 ** (n - 1)
    if k is None:
        k = n
    if quantity in (Quantity.S_OUT, Quantity.S_IN):
        if kind is OpKind.TDRL:
            return (n - k + 2) * (2 ** (k - 1) - 1) - k + 2
        return (n - k + 1) * (2 ** (k - 1) - 1) + 1
    if kind is OpKind.TDRL:
        return (n - k + 1) * comb(k, 2) + comb(k, 3) + 1
    return (n - k + 1) * (k - 1) + 1


def sphere_packing_bound(n: int, k: int, kind=OpKind.TDRL) -> int:
    """Floor of ``n! / ball size``: no code correcting one width-k error is larger."""
    if not 2 <= k <= n:
        raise TDRLError(f"sphere-packing bound needs 2 <= k <= n, got n={n}, k={k}")
    return factorial(n) // closed_form(Quantity.S_OUT, kind, n, k)


def sphere_packing_ratio(n: int, k: int, kind=OpKind.TDRL) -> Fraction:
    """The unfloored bound as an exact rational."""
    if not 2 <= k <= n:
        raise TDRLError(f"sphere-packing bound needs 2 <= k <= n, got n={n}, k={k}")
    return Fraction(factorial(n), closed_form(Quantity.S_OUT, kind, n, k))


def reversible_fraction(n: int, kind=OpKind.TDRL) -> Fraction:
    return Fraction(closed_form(Quantity.S_REV, kind, n), closed_form(Quantity.S_OUT, kind, n))
