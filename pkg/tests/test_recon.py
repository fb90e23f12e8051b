import json
import random
from itertools import combinations, permutations

import pytest

from tdrl import neighborhood as nb
from tdrl.perm import OpKind, Permutation, TDRLError
from tdrl.recon import (
    IMPOSSIBLE,
    ObservationSet,
    UnsupportedConfiguration,
    candidates,
    guaranteed_threshold,
    reconstruct,
)

from oracles import out_ball

TDRL, MTDRL = OpKind.TDRL, OpKind.MTDRL


def ident(n):
    return Permutation.identity(n)


def scan_sources(obs, kind):
    n = len(next(iter(obs)))
    return {p for p in permutations(range(1, n + 1)) if set(obs) <= out_ball(p, kind is MTDRL)}


class TestObservationSet:
    def test_dedup(self):
        o = ObservationSet([(1, 2, 3), (1, 2, 3), (2, 1, 3)])
        assert len(o) == 2 and o.n == 3

    def test_errors(self):
        with pytest.raises(TDRLError):
            ObservationSet([])
        with pytest.raises(TDRLError):
            ObservationSet([(1, 2), (1, 2, 3)])

    def test_parse_file(self, tmp_path):
        path = tmp_path / "obs.txt"
        path.write_text("# header\n1 2 3\n\n2 1 3  # comment\n1 2 3\n")
        o = ObservationSet.read(path)
        assert sorted(o) == [(1, 2, 3), (2, 1, 3)]


class TestCandidates:
    def test_full_ball_n3(self):
        assert candidates(nb.ball_out(ident(3), TDRL).perms, TDRL).sorted() == [ident(3)]

    def test_two_observations(self):
        c = candidates([(1, 2, 3), (2, 1, 3)], TDRL)
        assert (1, 2, 3) in c and (2, 1, 3) in c

    @pytest.mark.parametrize("kind", [TDRL, MTDRL])
    def test_single_observation(self, kind):
        p = Permutation.parse("3 1 4 2")
        assert p in candidates([p], kind)

    @pytest.mark.parametrize("kind", [TDRL, MTDRL])
    @pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
    def test_sound_and_complete(self, n, kind):
        rng = random.Random(100 + n)
        perms = list(permutations(range(1, n + 1)))
        for _ in range(8):
            source = rng.choice(perms)
            ball = sorted(out_ball(source, kind is MTDRL))
            obs = rng.sample(ball, rng.randint(1, min(4, len(ball))))
            got = candidates(obs, kind)
            assert source in got
            assert got.perms == scan_sources(obs, kind)

    def test_windowed_rejected(self):
        with pytest.raises(UnsupportedConfiguration):
            reconstruct([(1, 2, 3)], TDRL, k=2)


class TestReconstruct:
    def test_threshold(self):
        assert guaranteed_threshold(2, TDRL) == IMPOSSIBLE
        assert guaranteed_threshold(3, TDRL) == 5
        assert guaranteed_threshold(6, TDRL) == 33
        assert guaranteed_threshold(5, MTDRL) == IMPOSSIBLE

    @pytest.mark.parametrize("n", [3, 4])
    def test_corollary_exhaustive(self, n):
        size = 2 ** (n - 1) + 1
        for source in permutations(range(1, n + 1)):
            ball = sorted(nb.ball_out(source, TDRL).perms)
            for obs in combinations(ball, size):
                result = reconstruct(obs, TDRL)
                assert result.unique and result.candidates.sorted() == [source]

    @pytest.mark.parametrize("n", [3, 4, 5])
    def test_sharpness(self, n):
        p, q = nb.witness_pair(n, nb.Family.CYCLIC_SHIFT)
        shared = nb.intersect_out(p, q, TDRL)
        assert len(shared) == 2 ** (n - 1)
        result = reconstruct(shared.perms, TDRL)
        assert not result.unique and {p, q} <= set(result.candidates)

    @pytest.mark.parametrize("n", range(2, 7))
    def test_mirror_impossible(self, n):
        result = reconstruct(nb.ball_out(ident(n), MTDRL).perms, MTDRL)
        assert len(result.candidates) >= 2
        assert result.guaranteed_threshold == IMPOSSIBLE

    def test_mirror_n4(self):
        result = reconstruct(nb.ball_out(ident(4), MTDRL).perms, MTDRL)
        assert not result.unique
        assert ident(4) in result.candidates and (1, 2, 4, 3) in result.candidates

    def test_pi2(self):
        result = reconstruct([(1, 2), (2, 1)], TDRL)
        assert result.candidates.sorted() == [(1, 2), (2, 1)]
        assert not result.unique and result.guaranteed_threshold == IMPOSSIBLE

    def test_json(self):
        result = reconstruct(nb.ball_out(ident(3), TDRL).perms, TDRL)
        doc = json.loads(result.to_json())
        assert doc == {"candidates": ["1 2 3"], "unique": True, "guaranteed_threshold": "5"}
