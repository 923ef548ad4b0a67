"""Run configuration shared by the numerical layers.

All tolerances live here; nothing numeric is hard-coded at call sites.
The JSON form accepts the documented keys

    {"schedule": [16, 32, 64], "K0": 8, "tol_in": 1e-8, "tol_out": 0.1}

plus the optional extras below.  Truncation schedules are chosen per mode
count so that multi-mode Hilbert spaces stay at desk scale.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Optional

ENV_CONFIG = "RESOLVALG_CONFIG"

_DEFAULT_SCHEDULES: dict[int, tuple[int, ...]] = {
    0: (1,),
    1: (16, 32, 64),
    2: (8, 16, 24),
    3: (4, 6, 8),
}
_FALLBACK_SCHEDULE: tuple[int, ...] = (3, 4, 5)


@dataclass(frozen=True)
class RunConfig:
    dim: int = 2
    schedule: Optional[tuple[int, ...]] = None  # explicit override for any mode count
    k0: int = 8
    tol_in: float = 1e-8
    tol_out: float = 0.1
    tol_relation_single: float = 1e-6
    tol_relation_multi: float = 1e-5
    seed: int = 0
    budget: int = 400
    degree_cap: int = 6
    # float-rounding slack for the non-increasing residual check
    monotone_rel: float = 1e-6
    monotone_abs: float = 1e-12
    exact_zero: float = 1e-12

    def __post_init__(self):
        if self.dim % 2 != 0 or not 2 <= self.dim <= 8:
            raise ValueError("dimension must be even and between 2 and 8")
        if self.schedule is not None:
            sched = tuple(int(n) for n in self.schedule)
            if any(b <= a for a, b in zip(sched, sched[1:])):
                raise ValueError("schedule must be strictly increasing")
            if any(n < 2 for n in sched):
                raise ValueError("truncation levels must be at least 2")
            object.__setattr__(self, "schedule", sched)

    def schedule_for_modes(self, modes: int) -> tuple[int, ...]:
        if self.schedule is not None:
            return self.schedule
        return _DEFAULT_SCHEDULES.get(modes, _FALLBACK_SCHEDULE)

    def relation_tol(self, modes: int) -> float:
        return self.tol_relation_single if modes <= 1 else self.tol_relation_multi

    def non_increasing(self, residuals) -> bool:
        return all(
            b <= a * (1 + self.monotone_rel) + self.monotone_abs
            for a, b in zip(residuals, residuals[1:])
        )

    def with_dim(self, dim: int) -> "RunConfig":
        return replace(self, dim=dim)

    def to_json(self) -> dict:
        data = {
            "dim": self.dim,
            "K0": self.k0,
            "tol_in": self.tol_in,
            "tol_out": self.tol_out,
            "tol_relation_single": self.tol_relation_single,
            "tol_relation_multi": self.tol_relation_multi,
            "seed": self.seed,
            "budget": self.budget,
            "degree_cap": self.degree_cap,
        }
        if self.schedule is not None:
            data["schedule"] = list(self.schedule)
        return data

    @staticmethod
    def from_json(data: dict) -> "RunConfig":
        kwargs = {}
        mapping = {
            "dim": "dim",
            "schedule": "schedule",
            "K0": "k0",
            "k0": "k0",
            "tol_in": "tol_in",
            "tol_out": "tol_out",
            "tol_relation_single": "tol_relation_single",
            "tol_relation_multi": "tol_relation_multi",
            "seed": "seed",
            "budget": "budget",
            "degree_cap": "degree_cap",
        }
        for key, attr in mapping.items():
            if key in data:
                kwargs[attr] = data[key]
        if "schedule" in kwargs and kwargs["schedule"] is not None:
            kwargs["schedule"] = tuple(kwargs["schedule"])
        return RunConfig(**kwargs)


def load_config(path: Optional[str] = None) -> RunConfig:
    """Load configuration from a JSON file, the environment, or defaults."""
    if path is None:
        path = os.environ.get(ENV_CONFIG)
    if path is None:
        return RunConfig()
    return RunConfig.from_json(json.loads(Path(path).read_text()))
