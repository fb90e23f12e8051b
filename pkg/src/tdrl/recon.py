"""Sequence reconstruction from distinct one-operation noisy copies."""

from __future__ import annotations

import json
from dataclasses import dataclass

from tdrl import neighborhood as nb
from tdrl.formulas import Quantity, closed_form
from tdrl.perm import OpKind, Permutation, TDRLError

IMPOSSIBLE = "IMPOSSIBLE"


class UnsupportedConfiguration(TDRLError):
    pass


@dataclass(frozen=True)
class ObservationSet:
    """Distinct observations of equal length; duplicates collapse on construction."""

    obs: frozenset

    def __init__(self, observations):
        perms = frozenset(p if isinstance(p, Permutation) else Permutation(p) for p in observations)
        if not perms:
            raise TDRLError("at least one observation is required")
        lengths = {len(p) for p in perms}
        if len(lengths) > 1:
            raise TDRLError(f"observations have mixed lengths {sorted(lengths)}")
        object.__setattr__(self, "obs", perms)

    @property
    def n(self) -> int:
        return len(next(iter(self.obs)))

    def __len__(self) -> int:
        return len(self.obs)

    def __iter__(self):
        return iter(sorted(self.obs))

    @classmethod
    def parse(cls, text: str) -> ObservationSet:
        """One permutation per line; blank lines and ``#`` comments are skipped."""
        rows = []
        for line in text.splitlines():
            line = line.split("#", 1)[0].strip()
            if line:
                rows.append(Permutation.parse(line))
        return cls(rows)

    @classmethod
    def read(cls, path) -> ObservationSet:
        with open(path, encoding="utf-8") as fh:
            return cls.parse(fh.read())


@dataclass(frozen=True)
class ReconstructionResult:
    candidates: nb.NeighborSet
    guaranteed_threshold: int | str

    @property
    def unique(self) -> bool:
        return len(self.candidates) == 1

    def to_dict(self) -> dict:
        threshold = self.guaranteed_threshold
        return {
            "candidates": [str(p) for p in self.candidates],
            "unique": self.unique,
            "guaranteed_threshold": threshold if threshold == IMPOSSIBLE else str(threshold),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"


def _no_windows(k):
    if k is not None:
        raise UnsupportedConfiguration("reconstruction is only defined for unbounded operations")


def candidates(o: ObservationSet, kind=OpKind.TDRL, k: int | None = None, max_n: int | None = None) -> nb.NeighborSet:
    """Every source whose out-ball contains all observations."""
    _no_windows(k)
    if not isinstance(o, ObservationSet):
        o = ObservationSet(o)
    kind = OpKind.parse(kind)
    result = None
    for p in o:
        cand = nb.ball_in(p, kind, max_n=max_n)
        result = cand if result is None else result & cand
        if not result:
            break
    return result


def guaranteed_threshold(n: int, kind=OpKind.TDRL) -> int | str:
    """Observation count that always forces a unique source, or IMPOSSIBLE.

    TDRL balls exceed the reconstruction number only from n = 3 on; mirror
    balls never do.
    """
    kind = OpKind.parse(kind)
    if kind is OpKind.MTDRL or n < 3:
        return IMPOSSIBLE
    return closed_form(Quantity.N_MAX, kind, n) + 1


def reconstruct(o: ObservationSet, kind=OpKind.TDRL, k: int | None = None, max_n: int | None = None) -> ReconstructionResult:
    if not isinstance(o, ObservationSet):
        o = ObservationSet(o)
    cands = candidates(o, kind, k, max_n)
    return ReconstructionResult(cands, guaranteed_threshold(o.n, kind))
