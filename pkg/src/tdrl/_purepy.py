"""Pure-Python enumeration kernels (fallback for the compiled ``_kernels``).

``orders`` is always a tuple of equal-length 0-based gather orders as built
by :func:`tdrl.perm.op_orders`; ``gather(seq, orders)`` is the ball of radius
one around ``seq``.
"""

from itertools import permutations
from operator import itemgetter

NAME = "python"

_getter_cache: dict[int, tuple] = {}


def _getters(orders):
    hit = _getter_cache.get(id(orders))
    if hit is not None and hit[0] is orders:
        return hit[1]
    if orders and len(orders[0]) == 1:
        getters = [lambda seq: (seq[0],)]
    else:
        getters = [itemgetter(*o) for o in orders]
    if len(_getter_cache) > 64:
        _getter_cache.clear()
    _getter_cache[id(orders)] = (orders, getters)
    return getters


def gather(seq, orders):
    """Set of ``seq`` rearranged by every order."""
    seq = tuple(seq)
    return {g(seq) for g in _getters(orders)}


def overlap_scan(n, orders, ref):
    """``|ball(ref) & ball(q)|`` for every q of Pi(n), in lexicographic order of q."""
    getters = _getters(orders)
    target = {g(tuple(ref)) for g in getters}
    return [sum(g(q) in target for g in getters) for q in permutations(range(1, n + 1))]


def pairwise_max(n, orders):
    """Largest ball overlap over unordered pairs of distinct permutations.

    Returns ``(size, i, j)`` with i < j the lexicographic ranks of the first
    pair (in scan order) attaining the maximum.
    """
    getters = _getters(orders)
    balls = [frozenset(g(q) for g in getters) for q in permutations(range(1, n + 1))]
    best, bi, bj = -1, -1, -1
    for i, a in enumerate(balls):
        for j in range(i + 1, len(balls)):
            size = len(a & balls[j])
            if size > best:
                best, bi, bj = size, i, j
    return best, bi, bj


def greedy_pack(n, orders):
    """Lexicographic greedy packing of pairwise-disjoint balls."""
    getters = _getters(orders)
    covered = set()
    words = []
    for q in permutations(range(1, n + 1)):
        ball = {g(q) for g in getters}
        if covered.isdisjoint(ball):
            covered |= ball
            words.append(q)
    return words
