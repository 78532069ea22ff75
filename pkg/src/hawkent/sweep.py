"""Parameter sweeps over the three-mode model, with CSV/JSON emission.

A sweep varies exactly one of (alpha, omega, temperature) over an
ascending grid while the other two stay fixed.  Each grid point yields
one row of twelve measures (four per mode pair), computed from the
closed forms.  In verify mode every row is recomputed through the
spectral pipeline (partial trace + eigensolver) and the run aborts on
any disagreement beyond 1e-9, so emitted numbers are never untested.

Numbers are rendered with 12 significant digits in both formats; JSON
values are rounded to the same digits, so the two emissions of one run
agree to better than 1e-12.
"""

from __future__ import annotations

import json
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass
from typing import IO

import numpy as np

from .measures import measure_set
from .model import (
    ModelParams,
    ModePair,
    closed_form_concurrence,
    closed_form_eof,
    closed_form_min_pt_eigenvalue,
    closed_form_mutual_information,
    reduced_density,
)

__all__ = [
    "CSV_COLUMNS",
    "VERIFY_ATOL",
    "VerificationError",
    "SweepSpec",
    "RunConfig",
    "SweepRow",
    "format_number",
    "grid_values",
    "evaluate_point",
    "run_sweep",
    "emit_csv",
    "emit_json",
]

VERIFY_ATOL = 1e-9

CSV_COLUMNS = (
    "alpha",
    "omega",
    "temperature",
    "C_A_I",
    "C_A_II",
    "C_I_II",
    "EoF_A_I",
    "EoF_A_II",
    "EoF_I_II",
    "MI_A_I",
    "MI_A_II",
    "MI_I_II",
    "minPT_A_I",
    "minPT_A_II",
    "minPT_I_II",
)

_PAIRS = (ModePair.A_I, ModePair.A_II, ModePair.I_II)
_VARIABLES = ("alpha", "omega", "temperature")


class VerificationError(RuntimeError):
    """Closed-form and spectral values disagreed beyond tolerance."""


@dataclass(frozen=True)
class SweepSpec:
    """One varied parameter on an ascending grid, two held fixed.

    The field named by ``vary`` must be None; the other two must carry
    valid fixed values.
    """

    vary: str
    min: float
    max: float
    steps: int
    scale: str = "linear"
    alpha: float | None = None
    omega: float | None = None
    temperature: float | None = None

    def __post_init__(self):
        if self.vary not in _VARIABLES:
            raise ValueError(f"vary must be one of {_VARIABLES}, got {self.vary!r}")
        if not (math.isfinite(self.min) and math.isfinite(self.max) and self.min < self.max):
            raise ValueError(f"need min < max, got [{self.min!r}, {self.max!r}]")
        if int(self.steps) != self.steps or self.steps < 2:
            raise ValueError(f"steps must be an integer >= 2, got {self.steps!r}")
        if self.scale not in ("linear", "log"):
            raise ValueError(f"scale must be 'linear' or 'log', got {self.scale!r}")
        if self.scale == "log" and self.min <= 0.0:
            raise ValueError(f"log scale needs min > 0, got {self.min!r}")
        if getattr(self, self.vary) is not None:
            raise ValueError(f"{self.vary} is the varied parameter and cannot also be fixed")
        bounds = {
            "alpha": (0.0 < self.min and self.max < 1.0, "inside (0, 1)"),
            "omega": (self.min > 0.0, "positive"),
            "temperature": (self.min >= 0.0, "non-negative"),
        }
        ok, req = bounds[self.vary]
        if not ok:
            raise ValueError(f"{self.vary} grid must stay {req}, got [{self.min!r}, {self.max!r}]")
        for name in _VARIABLES:
            if name == self.vary:
                continue
            value = getattr(self, name)
            if value is None:
                raise ValueError(f"fixed parameter {name} is required when varying {self.vary}")
            if name == "alpha" and not (math.isfinite(value) and 0.0 < value < 1.0):
                raise ValueError(f"alpha must lie strictly in (0, 1), got {value!r}")
            if name == "omega" and not (math.isfinite(value) and value > 0.0):
                raise ValueError(f"omega must be positive, got {value!r}")
            if name == "temperature" and not (math.isfinite(value) and value >= 0.0):
                raise ValueError(f"temperature must be non-negative, got {value!r}")


@dataclass(frozen=True)
class RunConfig:
    """A sweep plus emission settings.

    ``mass`` records the black-hole mass when the fixed temperature was
    derived from one; it is informational and echoed into JSON output.
    """

    sweep: SweepSpec
    output_format: str = "csv"
    out: str | None = None
    verify: bool = True
    mass: float | None = None

    def __post_init__(self):
        if self.output_format not in ("csv", "json"):
            raise ValueError(f"output_format must be 'csv' or 'json', got {self.output_format!r}")


@dataclass(frozen=True)
class SweepRow:
    """One parameter point and its twelve measures, in column order."""

    alpha: float
    omega: float
    temperature: float
    c_a_i: float
    c_a_ii: float
    c_i_ii: float
    eof_a_i: float
    eof_a_ii: float
    eof_i_ii: float
    mi_a_i: float
    mi_a_ii: float
    mi_i_ii: float
    min_pt_a_i: float
    min_pt_a_ii: float
    min_pt_i_ii: float

    def as_tuple(self) -> tuple[float, ...]:
        return (
            self.alpha,
            self.omega,
            self.temperature,
            self.c_a_i,
            self.c_a_ii,
            self.c_i_ii,
            self.eof_a_i,
            self.eof_a_ii,
            self.eof_i_ii,
            self.mi_a_i,
            self.mi_a_ii,
            self.mi_i_ii,
            self.min_pt_a_i,
            self.min_pt_a_ii,
            self.min_pt_i_ii,
        )


def format_number(x: float) -> str:
    """Render a float with 12 significant digits."""
    if x == 0.0:
        x = 0.0  # fold -0.0 into 0.0
    return format(x, "#.12g")


def grid_values(spec: SweepSpec) -> np.ndarray:
    """Ascending grid of the varied parameter."""
    if spec.scale == "log":
        return np.geomspace(spec.min, spec.max, spec.steps)
    return np.linspace(spec.min, spec.max, spec.steps)


def evaluate_point(
    alpha: float, omega: float, temperature: float, verify: bool = True
) -> SweepRow:
    """Closed-form measures at one point, optionally cross-checked.

    With ``verify`` on, every measure is recomputed via partial trace
    and eigendecomposition; a gap above ``VERIFY_ATOL`` raises
    :class:`VerificationError` naming the point and the measure.
    """
    params = ModelParams(alpha=alpha, omega=omega, temperature=temperature)
    closed = {
        pair: (
            closed_form_concurrence(params, pair),
            closed_form_eof(params, pair),
            closed_form_mutual_information(params, pair),
            closed_form_min_pt_eigenvalue(params, pair),
        )
        for pair in _PAIRS
    }
    if verify:
        for pair in _PAIRS:
            spectral = measure_set(reduced_density(params, pair))
            comparisons = (
                ("concurrence", closed[pair][0], spectral.concurrence),
                ("EoF", closed[pair][1], spectral.eof),
                ("mutual information", closed[pair][2], spectral.mutual_information),
                ("min PT eigenvalue", closed[pair][3], spectral.min_pt_eigenvalue),
            )
            for name, want, got in comparisons:
                if abs(want - got) > VERIFY_ATOL:
                    raise VerificationError(
                        f"closed-form vs spectral mismatch at alpha={alpha:.12g}, "
                        f"omega={omega:.12g}, temperature={temperature:.12g}: "
                        f"{pair.value} {name}: {want:.15g} vs {got:.15g}"
                    )
    ai, aii, iii = (closed[pair] for pair in _PAIRS)
    return SweepRow(
        alpha=alpha,
        omega=omega,
        temperature=temperature,
        c_a_i=ai[0],
        c_a_ii=aii[0],
        c_i_ii=iii[0],
        eof_a_i=ai[1],
        eof_a_ii=aii[1],
        eof_i_ii=iii[1],
        mi_a_i=ai[2],
        mi_a_ii=aii[2],
        mi_i_ii=iii[2],
        min_pt_a_i=ai[3],
        min_pt_a_ii=aii[3],
        min_pt_i_ii=iii[3],
    )


def run_sweep(config: RunConfig, workers: int = 1) -> list[SweepRow]:
    """Evaluate the sweep grid in ascending order.

    ``workers`` > 1 distributes points over a thread pool; the result
    order (and therefore any emitted output) is identical for every
    worker count.
    """
    spec = config.sweep

    def point(value: float) -> SweepRow:
        fixed = {name: getattr(spec, name) for name in _VARIABLES}
        fixed[spec.vary] = float(value)
        return evaluate_point(verify=config.verify, **fixed)

    values = grid_values(spec)
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(point, values))
    return [point(v) for v in values]


def emit_csv(rows: list[SweepRow], stream: IO[str]) -> None:
    """Write the fixed 15-column schema with 12-digit values."""
    stream.write(",".join(CSV_COLUMNS) + "\n")
    for row in rows:
        stream.write(",".join(format_number(v) for v in row.as_tuple()) + "\n")


def emit_json(rows: list[SweepRow], stream: IO[str], config: RunConfig | None = None) -> None:
    """Write a top-level object with a config echo and a rows array.

    Row values are rounded to the same 12 significant digits as the CSV
    rendering, so the two formats agree numerically.
    """
    payload = {
        "config": None if config is None else {**asdict(config.sweep), **{
            "format": config.output_format,
            "out": config.out,
            "verify": config.verify,
            "mass": config.mass,
        }},
        "rows": [
            {name: float(format_number(v)) for name, v in zip(CSV_COLUMNS, row.as_tuple())}
            for row in rows
        ],
    }
    json.dump(payload, stream, indent=1)
    stream.write("\n")
