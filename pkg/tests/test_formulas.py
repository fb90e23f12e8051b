from fractions import Fraction
from math import comb, factorial

import pytest
from hypothesis import given, strategies as st

from tdrl.formulas import Quantity, closed_form, reversible_fraction, sphere_packing_bound, sphere_packing_ratio
from tdrl.perm import OpKind, TDRLError

from oracles import in_ball, out_ball

TDRL, MTDRL = OpKind.TDRL, OpKind.MTDRL


@pytest.mark.parametrize(
    "quantity, kind, n, k, expected",
    [
        (Quantity.S_OUT, TDRL, 5, None, 27),
        (Quantity.S_IN, TDRL, 5, None, 27),
        (Quantity.S_REV, TDRL, 5, None, 21),
        (Quantity.S_OUT, TDRL, 5, 3, 11),
        (Quantity.S_OUT, MTDRL, 4, None, 8),
        (Quantity.S_REV, MTDRL, 4, None, 4),
        (Quantity.S_OUT, MTDRL, 6, 3, 13),
        (Quantity.S_REV, MTDRL, 6, 2, 6),
        (Quantity.N_MAX, TDRL, 4, None, 8),
        (Quantity.N_MAX, MTDRL, 6, None, 32),
    ],
)
def test_examples(quantity, kind, n, k, expected):
    assert closed_form(quantity, kind, n, k) == expected


@pytest.mark.parametrize("n", range(2, 40))
def test_k2_gives_n(n):
    assert closed_form("sout", TDRL, n, 2) == n
    assert sphere_packing_bound(n, 2, TDRL) == factorial(n - 1)


@pytest.mark.parametrize("kind", [TDRL, MTDRL])
@pytest.mark.parametrize("quantity", [Quantity.S_OUT, Quantity.S_REV])
def test_full_window_degenerates(kind, quantity):
    for n in range(1, 60):
        assert closed_form(quantity, kind, n, n) == closed_form(quantity, kind, n)


@pytest.mark.parametrize("kind", [TDRL, MTDRL])
def test_width_one_is_identity_only(kind):
    for n in range(1, 20):
        assert closed_form("sout", kind, n, 1) == 1
        assert closed_form("srev", kind, n, 1) == 1


@pytest.mark.parametrize("kind", [TDRL, MTDRL])
def test_against_literal_enumeration(kind):
    mirror = kind is MTDRL
    for n in range(1, 7):
        ident = tuple(range(1, n + 1))
        for k in range(1, n + 1):
            out, inn = out_ball(ident, mirror, k), in_ball(ident, mirror, k)
            assert closed_form("sout", kind, n, k) == len(out)
            assert closed_form("sin", kind, n, k) == len(inn)
            assert closed_form("srev", kind, n, k) == len(out & inn)


def test_unbounded_expressions():
    for n in range(1, 200):
        assert closed_form("sout", TDRL, n) == 2**n - n
        assert closed_form("srev", TDRL, n) == 1 + comb(n, 2) + comb(n, 3)
        assert closed_form("sout", MTDRL, n) == 2 ** (n - 1)
        assert closed_form("srev", MTDRL, n) == n


def test_big_values_are_exact():
    value = closed_form("sout", TDRL, 10_000)
    assert value == 2**10_000 - 10_000
    assert isinstance(value, int)


@pytest.mark.parametrize(
    "args, kwargs",
    [(("sout", TDRL, 3, 4), {}), (("nmax", TDRL, 4, 2), {}), (("nmax", TDRL, 1), {}), (("sout", TDRL, 0), {})],
)
def test_errors(args, kwargs):
    with pytest.raises(TDRLError):
        closed_form(*args, **kwargs)


def test_sphere_packing_examples():
    assert sphere_packing_bound(4, 2, TDRL) == 6
    assert sphere_packing_bound(5, 5, TDRL) == 4
    assert sphere_packing_bound(5, 5, MTDRL) == 7
    assert sphere_packing_ratio(5, 5, TDRL) == Fraction(120, 27)
    with pytest.raises(TDRLError):
        sphere_packing_bound(4, 1, TDRL)
    with pytest.raises(TDRLError):
        sphere_packing_bound(4, 5, TDRL)


@given(st.integers(2, 300), st.data())
def test_bound_is_floor(n, data):
    k = data.draw(st.integers(2, n))
    for kind in (TDRL, MTDRL):
        b = sphere_packing_bound(n, k, kind)
        ball = closed_form("sout", kind, n, k)
        assert b * ball <= factorial(n) < (b + 1) * ball


def test_reversible_fraction():
    assert reversible_fraction(2, TDRL) == 1
    assert reversible_fraction(5, TDRL) == Fraction(21, 27)
    assert reversible_fraction(4, MTDRL) == Fraction(4, 8)
    values = [reversible_fraction(n, TDRL) for n in range(3, 21)]
    assert all(a > b for a, b in zip(values, values[1:]))
    assert reversible_fraction(10, TDRL) == Fraction(83, 507)
    # First drops below one tenth at n = 12.
    assert reversible_fraction(11, TDRL) > Fraction(1, 10) > reversible_fraction(12, TDRL)


def test_quantity_parse():
    assert Quantity.parse("S_OUT") is Quantity.S_OUT
    assert Quantity.parse("nmax") is Quantity.N_MAX
    with pytest.raises(TDRLError):
        Quantity.parse("volume")
