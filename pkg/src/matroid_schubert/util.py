"""Shared helpers: bitmask iteration, canonical ordering, check reports."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction


def bits(mask: int):
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(indices) -> int:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


def canonical_key(obj):
    """Total-order key usable across the heterogeneous labels in this package.

    Cell and sign-vector types expose ``sort_key``; containers recurse; atoms
    are tagged by type name so mixed collections still sort deterministically.
    """
    sk = getattr(obj, "sort_key", None)
    if sk is not None:
        return sk()
    if isinstance(obj, (frozenset, set)):
        return ("set", tuple(sorted(canonical_key(x) for x in obj)))
    if isinstance(obj, (tuple, list)):
        return ("tuple", tuple(canonical_key(x) for x in obj))
    if isinstance(obj, Fraction):
        return ("frac", obj)
    return (type(obj).__name__, obj)


def canonical_sorted(items):
    return sorted(items, key=canonical_key)


@dataclass(frozen=True)
class CheckRecord:
    """One verification outcome: which check, on what, pass/fail, and why."""

    check: str
    subject: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        status = "ok" if self.passed else "FAIL"
        tail = f" ({self.detail})" if self.detail else ""
        return f"[{status}] {self.check}: {self.subject}{tail}"


@dataclass(frozen=True)
class Report:
    """An ordered bundle of check records."""

    records: tuple[CheckRecord, ...] = field(default_factory=tuple)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.records)

    @property
    def failures(self) -> tuple[CheckRecord, ...]:
        return tuple(r for r in self.records if not r.passed)

    def lines(self) -> list[str]:
        return [r.line() for r in self.records]

    def merged(self, other: "Report") -> "Report":
        return Report(self.records + other.records)
