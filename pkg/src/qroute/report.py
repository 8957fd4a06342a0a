"""Cost reporting shared by the hash and QFT front ends."""
from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class CostReport:
    total_cnots: int
    breakdown: tuple[tuple[str, int], ...]
    baseline_cnots: int | None = None
    ratio: float | None = None

    def __post_init__(self):
        if self.total_cnots != sum(c for _, c in self.breakdown):
            raise ValueError("total does not match the breakdown sum")
