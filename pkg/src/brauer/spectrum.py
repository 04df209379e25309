"""Spectra as multisets of complex eigenvalues.

Equality of spectra is never exact in floating point; compare with
``brauer.oracle.match_multisets``. The canonical ordering (modulus
descending, then phase ascending) exists so printed spectra are
deterministic.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from typing import Iterable, Iterator


@dataclass(frozen=True)
class Spectrum:
    """A multiset of eigenvalues, listed with multiplicity."""

    values: tuple[complex, ...]

    @classmethod
    def of(cls, values: Iterable[complex]) -> "Spectrum":
        return cls(tuple(complex(v) for v in values))

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self) -> Iterator[complex]:
        return iter(self.values)

    def __getitem__(self, i: int) -> complex:
        return self.values[i]

    def canonical(self) -> tuple[complex, ...]:
        """Values sorted by modulus descending, then phase ascending."""
        return tuple(sorted(self.values, key=lambda z: (-abs(z), cmath.phase(z))))
