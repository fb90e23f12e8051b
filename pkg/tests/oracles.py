"""Brute-force reference implementations used only by the tests.

These follow the literal definitions (duplicate, optionally mirror, then
delete one copy of every symbol) and never touch the library's gather
orders or compiled kernels.
"""

from itertools import permutations, product


def duplicate_and_delete(seq, bits, mirror=False):
    seq = list(seq)
    copy = seq[::-1] if mirror else list(seq)
    keep_first = {x for x, b in zip(seq, bits) if b}
    doubled = [(x, True) for x in seq] + [(x, False) for x in copy]
    return tuple(x for x, first in doubled if (x in keep_first) == first)


def windowed(seq, start, bits, mirror=False):
    lo = start - 1
    hi = lo + len(bits)
    return tuple(seq[:lo]) + duplicate_and_delete(seq[lo:hi], bits, mirror) + tuple(seq[hi:])


def out_ball(seq, mirror=False, k=None):
    n = len(seq)
    k = n if k is None else k
    return {
        windowed(seq, s, bits, mirror)
        for s in range(1, n - k + 2)
        for bits in product((0, 1), repeat=k)
    }


def in_ball(seq, mirror=False, k=None):
    seq = tuple(seq)
    return {rho for rho in permutations(sorted(seq)) if seq in out_ball(rho, mirror, k)}


def all_perms(n):
    return list(permutations(range(1, n + 1)))


def unimodal(seq):
    peak = seq.index(max(seq))
    up, down = seq[: peak + 1], seq[peak:]
    return all(a < b for a, b in zip(up, up[1:])) and all(a > b for a, b in zip(down, down[1:]))
