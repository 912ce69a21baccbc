"""Check reports: stable axiom identifiers, witnesses, deterministic output.

Every verification routine in the workbench produces a CheckReport, an
ordered list of (axiom id, status, witness) entries.  The machine rendering
is byte-deterministic: same input structure, same report bytes.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field as dc_field

from .field import format_scalar
from .linalg import Vector

PASS = "pass"
FAIL = "fail"
SKIPPED = "skipped"

# Stable catalogue of axiom identifiers, in canonical report order.
AXIOM_ORDER = [
    "ALG-ASSOC", "ALG-UNIT",
    "COALG-COASSOC", "COALG-COUNIT",
    "HOPF-DELTA-MULT", "HOPF-EPS-MULT", "HOPF-DELTA-UNIT", "HOPF-EPS-UNIT",
    "HOPF-ANTIPODE",
    "P-COALG", "P-S", "P-DOT", "P-ASSOC", "P-CONV", "P-DELTA", "P-ANTI",
    "P-MP5",
    "L-U", "L-1ACT", "L-SLIN", "L-BETA", "L-DA", "L-DB", "L-MA", "L-MB",
    "L-ANTI2",
    "YD-MODULE", "YD-MODALG", "YD-MODCOALG", "YD-COMPAT", "YD-BRAIDMULT",
    "YD-COLINEAR",
    "HB-HOPF", "HB-COMPAT", "HB-YD", "HB-MP5",
    "MP-MODC", "MP-1", "MP-2", "MP-3", "MP-4", "MP-BC", "MP-5",
    "RB-SPACES", "RB-COALG", "RB-1", "RB-2", "RB-BIMON", "RB-3",
    "RBM-F", "RBM-G", "RBM-COMM", "RBM-ACT",
    "PL-SKEW", "PL-JAC", "PL-1", "PL-2", "PL-SUB",
    "GRB-GROUP-G", "GRB-GROUP-H", "GRB-ACTION", "GRB-W1",
    "LRB-LIE-G", "LRB-LIE-H", "LRB-ACTION", "LRB-W1", "LRB-POSTLIE",
]

_AXIOMS = set(AXIOM_ORDER)


def vector_text(v: Vector) -> str:
    if v.is_zero():
        return "0"
    return ",".join(f"{i}:{format_scalar(c)}" for i, c in v.items_sorted())


def pairs_text(entries: dict, dim2: int | None = None) -> str:
    """Canonical text for a raw sparse dict keyed by int or tuple."""
    if not entries:
        return "0"
    parts = []
    for k in sorted(entries):
        key = ",".join(str(x) for x in k) if isinstance(k, tuple) else str(k)
        parts.append(f"({key}):{format_scalar(entries[k])}")
    return ";".join(parts)


@dataclass
class Witness:
    """First failing tuple with both sides rendered canonically."""

    where: tuple
    lhs: str
    rhs: str

    def text(self) -> str:
        idx = ",".join(str(i) for i in self.where)
        return f"at=({idx}) lhs=[{self.lhs}] rhs=[{self.rhs}]"


@dataclass
class CheckEntry:
    axiom: str
    status: str
    witness: Witness | None = None
    checked: int = 0
    failures: int = 0
    seconds: float = 0.0

    def __post_init__(self):
        if self.axiom not in _AXIOMS:
            raise ValueError(f"unknown axiom id {self.axiom!r}")


@dataclass
class CheckReport:
    entries: list[CheckEntry] = dc_field(default_factory=list)

    def add(self, entry: CheckEntry) -> None:
        self.entries.append(entry)

    def entry(self, axiom: str) -> CheckEntry:
        for e in self.entries:
            if e.axiom == axiom:
                return e
        raise KeyError(axiom)

    def status(self, axiom: str) -> str:
        return self.entry(axiom).status

    def all_pass(self) -> bool:
        return all(e.status == PASS for e in self.entries)

    def failed(self) -> list[CheckEntry]:
        return [e for e in self.entries if e.status == FAIL]

    def extend(self, other: "CheckReport") -> None:
        self.entries.extend(other.entries)

    def machine_text(self) -> str:
        lines = []
        for e in self.entries:
            if e.witness is not None and e.status == FAIL:
                lines.append(f"{e.axiom} {e.status} {e.witness.text()}")
            else:
                lines.append(f"{e.axiom} {e.status}")
        return "\n".join(lines) + "\n"

    def text(self) -> str:
        width = max((len(e.axiom) for e in self.entries), default=8)
        lines = []
        for e in self.entries:
            line = f"{e.axiom:<{width}}  {e.status:<7} checked={e.checked}"
            if e.failures:
                line += f" failures={e.failures}"
            line += f" time={e.seconds * 1000:.1f}ms"
            if e.witness is not None and e.status == FAIL:
                line += f"\n{'':<{width}}  first failure {e.witness.text()}"
            lines.append(line)
        verdict = "ALL PASS" if self.all_pass() else "FAILURES PRESENT"
        lines.append(verdict)
        return "\n".join(lines) + "\n"


class Checker:
    """Accumulates verdicts for one axiom while scanning basis tuples."""

    def __init__(self, axiom: str):
        self.axiom = axiom
        self.witness: Witness | None = None
        self.checked = 0
        self.failures = 0
        self._t0 = time.perf_counter()

    def record(self, where: tuple, ok: bool, lhs="", rhs="") -> bool:
        self.checked += 1
        if not ok:
            self.failures += 1
            if self.witness is None:
                self.witness = Witness(where, str(lhs), str(rhs))
        return ok

    def compare(self, where: tuple, lhs, rhs, render=str) -> bool:
        self.checked += 1
        if lhs != rhs:
            self.failures += 1
            if self.witness is None:
                self.witness = Witness(where, render(lhs), render(rhs))
            return False
        return True

    def entry(self) -> CheckEntry:
        status = PASS if self.failures == 0 else FAIL
        return CheckEntry(
            self.axiom,
            status,
            self.witness,
            self.checked,
            self.failures,
            time.perf_counter() - self._t0,
        )


def skipped_entry(axiom: str) -> CheckEntry:
    return CheckEntry(axiom, SKIPPED)
