"""Both kernel backends against each other and against the literal oracle."""

from itertools import permutations

import pytest

from tdrl import _backend, _purepy
from tdrl.perm import OpKind, op_orders

from conftest import BACKENDS
from oracles import out_ball


def test_backend_is_selected():
    assert _backend.BACKEND in {m.NAME for m in BACKENDS}


@pytest.mark.parametrize("kind", list(OpKind))
def test_gather_matches_oracle(backend, kind):
    for n in range(1, 7):
        for k in range(1, n + 1):
            orders = op_orders(n, kind, k)
            for p in [tuple(range(1, n + 1)), tuple(range(n, 0, -1))]:
                assert backend.gather(p, orders) == out_ball(p, kind is OpKind.MTDRL, k)


@pytest.mark.parametrize("kind", list(OpKind))
def test_overlap_scan_matches_sets(backend, kind):
    n = 5
    orders = op_orders(n, kind)
    ref = (3, 1, 4, 5, 2)
    target = out_ball(ref, kind is OpKind.MTDRL)
    expected = [len(target & out_ball(q, kind is OpKind.MTDRL)) for q in permutations(range(1, n + 1))]
    assert backend.overlap_scan(n, orders, ref) == expected


@pytest.mark.parametrize("kind", list(OpKind))
@pytest.mark.parametrize("n", [2, 3, 4])
def test_pairwise_max_matches_sets(backend, kind, n):
    perms = list(permutations(range(1, n + 1)))
    balls = [out_ball(q, kind is OpKind.MTDRL) for q in perms]
    best = max(len(balls[i] & balls[j]) for i in range(len(perms)) for j in range(i + 1, len(perms)))
    value, i, j = backend.pairwise_max(n, op_orders(n, kind))
    assert value == best
    assert i < j and len(balls[i] & balls[j]) == best


@pytest.mark.parametrize("kind", list(OpKind))
def test_backends_agree(kind):
    if len(BACKENDS) < 2:
        pytest.skip("compiled kernels not built")
    compiled = BACKENDS[1]
    for n in range(2, 7):
        for k in range(2, n + 1):
            orders = op_orders(n, kind, k)
            assert compiled.greedy_pack(n, orders) == _purepy.greedy_pack(n, orders)
            assert compiled.overlap_scan(n, orders, tuple(range(n, 0, -1))) == _purepy.overlap_scan(
                n, orders, tuple(range(n, 0, -1))
            )
        if n <= 5:
            assert compiled.pairwise_max(n, op_orders(n, kind)) == _purepy.pairwise_max(n, op_orders(n, kind))


def test_gather_n1(backend):
    assert backend.gather((1,), op_orders(1, OpKind.TDRL)) == {(1,)}
