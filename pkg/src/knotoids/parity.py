"""Odd writhe: the signed count of odd crossings."""

from __future__ import annotations

from dataclasses import dataclass

from .codes import KnotoidCode, ODD, classify_crossings


@dataclass(frozen=True)
class OddWritheReport:
    odd_crossings: frozenset[str]
    value: int


def odd_writhe(code: KnotoidCode) -> OddWritheReport:
    """Sum of signs over odd self-crossings (link crossings contribute 0)."""
    odd = [info for info in classify_crossings(code) if info.parity == ODD]
    return OddWritheReport(
        odd_crossings=frozenset(info.label for info in odd),
        value=sum(info.sign for info in odd),
    )
