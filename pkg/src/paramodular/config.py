"""Run configurations for the sweep scripts."""

from __future__ import annotations

from dataclasses import asdict, dataclass


@dataclass(frozen=True)
class TreeCensusConfig:
    primes: tuple[int, ...] = (2, 3, 5)
    max_radius: int = 4
    root_kinds: tuple[str, ...] = ("first", "second")

    def __post_init__(self):
        if self.max_radius < 0:
            raise ValueError("max_radius must be nonnegative")


@dataclass(frozen=True)
class LedgerSweepConfig:
    prime_p: int = 3
    prime_ell: int = 7
    coefficient_weights: tuple[int, ...] = (0, 1, 2)
    max_multiplicity: int = 2
    sigma_size: int = 6
    types: tuple[str, ...] = ("IIa", "IVc", "Vb", "Vc", "VIc")

    def to_dict(self) -> dict:
        return asdict(self)
