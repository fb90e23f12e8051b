"""Single-error-correcting permutation codes under windowed operations.

A code corrects one width-k operation iff the out-balls of its words are
pairwise disjoint.  Balls contain the word itself, so disjointness also keeps
an error-free word apart from every corrupted one.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from tdrl._backend import kernels
from tdrl.formulas import sphere_packing_bound
from tdrl.neighborhood import check_guard
from tdrl.perm import OpKind, ParseError, Permutation, TDRLError, _trusted, op_orders

CODE_GUARD = 8


@dataclass(frozen=True)
class Code:
    n: int
    k: int
    kind: OpKind
    words: tuple[Permutation, ...]

    def __post_init__(self):
        object.__setattr__(self, "kind", OpKind.parse(self.kind))
        words = tuple(sorted({w if isinstance(w, Permutation) else Permutation(w) for w in self.words}))
        if any(len(w) != self.n for w in words):
            raise TDRLError(f"every codeword must have length {self.n}")
        if not 1 <= self.k <= self.n:
            raise TDRLError(f"window width {self.k} outside 1..{self.n}")
        object.__setattr__(self, "words", words)

    def __len__(self) -> int:
        return len(self.words)

    def to_text(self) -> str:
        lines = [f"{self.n} {self.k} {self.kind.value}"]
        lines += [str(w) for w in self.words]
        return "\n".join(lines) + "\n"

    @classmethod
    def parse(cls, text: str) -> Code:
        lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
        if not lines:
            raise ParseError("empty code file")
        header = lines[0].split()
        if len(header) != 3:
            raise ParseError(f"code header must be 'n k kind', got {lines[0]!r}")
        try:
            n, k = int(header[0]), int(header[1])
        except ValueError:
            raise ParseError(f"code header must be 'n k kind', got {lines[0]!r}") from None
        return cls(n, k, OpKind.parse(header[2]), tuple(Permutation.parse(ln) for ln in lines[1:]))


def verify_code(c: Code, max_n: int | None = None) -> bool:
    """True iff the width-k out-balls of distinct words are pairwise disjoint."""
    check_guard("code", c.n, CODE_GUARD, max_n)
    orders = op_orders(c.n, c.kind, c.k)
    balls = [kernels.gather(w, orders) for w in c.words]
    return all(a.isdisjoint(b) for a, b in combinations(balls, 2))


def greedy_code(n: int, k: int, kind=OpKind.TDRL, max_n: int | None = None) -> Code:
    """Lexicographic greedy code: keep a word iff its ball misses all earlier balls."""
    kind = OpKind.parse(kind)
    if not 2 <= k <= n:
        raise TDRLError(f"greedy code needs 2 <= k <= n, got n={n}, k={k}")
    check_guard("code", n, CODE_GUARD, max_n)
    words = kernels.greedy_pack(n, op_orders(n, kind, k))
    return Code(n, k, kind, tuple(_trusted(w) for w in words))


@dataclass(frozen=True)
class CodeReport:
    n: int
    k: int
    kind: OpKind
    size: int
    bound: int

    @property
    def ratio(self) -> Fraction:
        return Fraction(self.size, self.bound)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "kind": self.kind.value,
            "size": str(self.size),
            "bound": str(self.bound),
            "ratio": str(self.ratio),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"


def code_report(c: Code) -> CodeReport:
    return CodeReport(c.n, c.k, c.kind, len(c), sphere_packing_bound(c.n, c.k, c.kind))
