"""Formula-versus-enumeration reports."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass

from tdrl import neighborhood as nb
from tdrl.formulas import Quantity, closed_form
from tdrl.perm import OpKind, Permutation, TDRLError

FIELDS = ("quantity", "kind", "n", "k", "formula_value", "enumerated_value", "match")


@dataclass(frozen=True)
class CountReport:
    quantity: Quantity
    kind: OpKind
    n: int
    k: int | None
    formula_value: int
    enumerated_value: int | None = None

    @property
    def match(self) -> bool | None:
        if self.enumerated_value is None:
            return None
        return self.formula_value == self.enumerated_value

    def to_dict(self) -> dict:
        return {
            "quantity": self.quantity.value,
            "kind": self.kind.value,
            "n": self.n,
            "k": self.k,
            "formula_value": str(self.formula_value),
            "enumerated_value": None if self.enumerated_value is None else str(self.enumerated_value),
            "match": self.match,
        }

    @classmethod
    def from_dict(cls, d: dict) -> CountReport:
        enum_value = d.get("enumerated_value")
        return cls(
            Quantity.parse(d["quantity"]),
            OpKind.parse(d["kind"]),
            int(d["n"]),
            None if d.get("k") is None else int(d["k"]),
            int(d["formula_value"]),
            None if enum_value is None else int(enum_value),
        )


def enumerated_count(quantity, kind, n: int, k: int | None = None, max_n: int | None = None) -> int:
    """The quantity measured by brute-force enumeration around the identity."""
    quantity, kind = Quantity.parse(quantity), OpKind.parse(kind)
    ident = Permutation.identity(n)
    if quantity is Quantity.N_MAX:
        if k is not None:
            raise TDRLError("no reconstruction number is defined for windowed operations")
        return nb.max_intersection(n, kind, max_n=max_n).value
    if quantity is Quantity.S_OUT:
        return len(nb.ball_out(ident, kind, k, max_n))
    if quantity is Quantity.S_IN:
        return len(nb.ball_in(ident, kind, k, max_n))
    return len(nb.reversible_set(ident, kind, k, max_n))


def count(quantity, kind, n: int, k: int | None = None, mode: str = "formula", max_n: int | None = None) -> CountReport:
    """Build a report; ``mode`` is ``formula``, ``enumerate`` or ``both``."""
    quantity, kind = Quantity.parse(quantity), OpKind.parse(kind)
    mode = mode.lower()
    if mode not in ("formula", "enumerate", "both"):
        raise TDRLError(f"unknown mode {mode!r}")
    value = closed_form(quantity, kind, n, k)
    enumerated = enumerated_count(quantity, kind, n, k, max_n) if mode != "formula" else None
    return CountReport(quantity, kind, n, k, value, enumerated)


def verification_matrix(n_max: int, kinds=None, quantities=None, max_n: int | None = None) -> list[CountReport]:
    """Compare every formula with enumeration for all n <= n_max and all window widths.

    Reconstruction numbers stop at the pairwise guard unless ``max_n`` raises it.
    """
    kinds = [OpKind.parse(x) for x in (kinds or OpKind)]
    quantities = [Quantity.parse(x) for x in (quantities or Quantity)]
    reports = []
    for quantity in quantities:
        for kind in kinds:
            if quantity is Quantity.N_MAX:
                top = min(n_max, nb.PAIRWISE_GUARD if max_n is None else max_n)
                for n in range(2, top + 1):
                    reports.append(count(quantity, kind, n, None, "both", max_n))
                continue
            for n in range(1, n_max + 1):
                for k in [None, *range(1, n + 1)]:
                    reports.append(count(quantity, kind, n, k, "both", max_n))
    return reports


def render(reports, fmt: str = "table", single: bool = False) -> str:
    """Render reports; ``single`` emits one JSON object instead of a list."""
    rows = [r.to_dict() for r in reports]
    if fmt == "json":
        return json.dumps(rows[0] if single else rows, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=FIELDS, lineterminator="\n")
        writer.writeheader()
        for row in rows:
            writer.writerow({key: _csv_cell(v) for key, v in row.items()})
        return buf.getvalue()
    table = [["quantity", "kind", "n", "k", "formula", "enumerated", "status"]]
    for row in rows:
        status = {True: "PASS", False: "FAIL", None: "-"}[row["match"]]
        table.append([
            row["quantity"], row["kind"], str(row["n"]),
            "-" if row["k"] is None else str(row["k"]),
            row["formula_value"], row["enumerated_value"] or "-", status,
        ])
    return format_table(table)


def _csv_cell(v) -> str:
    if v is None:
        return ""
    return str(v).lower() if isinstance(v, bool) else str(v)


def format_table(rows: list[list[str]]) -> str:
    widths = [max(len(r[i]) for r in rows) for i in range(len(rows[0]))]
    return "".join("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() + "\n" for r in rows)
