"""Default size bounds for the enumeration- and verification-heavy paths."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Bounds:
    """Conservative defaults keep the full default suite under a minute."""

    composition_enum: int = 8
    cells: int = 6
    primitive_part: int = 5
    dynkin_rank: int = 5
    exhaustive_n: int = 4
    series_order: int = 4


DEFAULT_BOUNDS = Bounds()
