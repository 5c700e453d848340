"""Parameter-sweep engine: evaluate channel families over (gamma, q_r[, F]) grids.

Grid points are independent and may be evaluated in parallel; records are
always assembled in the canonical order (family, region, gamma index,
q_r index, f index), so repeated runs are bitwise identical no matter how
many threads were used.  The ``UNRUH_LAB_THREADS`` environment variable
caps parallelism (0 or unset means automatic).
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from enum import Enum
from typing import Iterator

from .errors import DomainError, SweepPointError, UnruhLabError
from .measures import (
    JOINT_TRIPARTITE,
    region_split,
    strong_additivity,
    subsystem_entropies,
)
from .states import (
    GAMMA_MAX,
    AccelerationParams,
    BobRegion,
    ChannelFamily,
    ChannelSpec,
    build_joint,
    reduce_to_region,
)

THREADS_ENV_VAR = "UNRUH_LAB_THREADS"


class Measure(Enum):
    MUTUAL_INFORMATION = "mutual_info"
    CONDITIONAL_ENTROPY = "cond_entropy"
    STRONG_ADDITIVITY = "ssa_value"


def _check_grid(name: str, grid: tuple[float, ...], low: float, high: float) -> None:
    if not grid:
        raise DomainError(name, "must not be empty")
    for value in grid:
        if not (low <= value <= high):
            raise DomainError(name, f"value {value} outside [{low}, {high}]")
    ascending = all(a < b for a, b in zip(grid, grid[1:]))
    descending = all(a > b for a, b in zip(grid, grid[1:]))
    if len(grid) > 1 and not (ascending or descending):
        raise DomainError(name, "must be strictly monotone")


@dataclass(frozen=True)
class SweepSpec:
    """Which families to evaluate, over which grids, and what to report."""

    families: tuple[ChannelFamily, ...]
    gamma_grid: tuple[float, ...]
    q_r_grid: tuple[float, ...]
    alpha: float = math.pi / 4
    f_grid: tuple[float, ...] = ()
    regions: tuple[BobRegion, ...] = (BobRegion.I, BobRegion.II)
    measures: frozenset[Measure] = frozenset(
        {Measure.MUTUAL_INFORMATION, Measure.CONDITIONAL_ENTROPY}
    )

    def __post_init__(self):
        object.__setattr__(self, "families", tuple(self.families))
        object.__setattr__(self, "gamma_grid", tuple(float(g) for g in self.gamma_grid))
        object.__setattr__(self, "q_r_grid", tuple(float(q) for q in self.q_r_grid))
        object.__setattr__(self, "f_grid", tuple(float(f) for f in self.f_grid))
        object.__setattr__(self, "regions", tuple(self.regions))
        object.__setattr__(self, "measures", frozenset(self.measures))
        if not self.families:
            raise DomainError("families", "must not be empty")
        if not self.regions:
            raise DomainError("regions", "must not be empty")
        _check_grid("gamma_grid", self.gamma_grid, 0.0, GAMMA_MAX)
        _check_grid("q_r_grid", self.q_r_grid, 0.0, 1.0)
        if ChannelFamily.WERNER in self.families:
            _check_grid("f_grid", self.f_grid, 0.0, 1.0)
        elif self.f_grid:
            raise DomainError("f_grid", "only meaningful when the werner family is swept")


@dataclass(frozen=True)
class SweepRecord:
    """One evaluated grid point; entropies and measures are in bits."""

    family: ChannelFamily
    region: BobRegion
    gamma: float
    q_r: float
    alpha: float
    f: float | None
    s_a: float
    s_b: float
    s_ab: float
    mutual_info: float
    cond_entropy: float
    ssa_value: float | None


def evaluate_point(
    family: ChannelFamily,
    region: BobRegion,
    gamma: float,
    q_r: float,
    alpha: float = math.pi / 4,
    f: float | None = None,
    *,
    with_ssa: bool = False,
) -> SweepRecord:
    """Build the channel at one grid point and compute its measures."""
    spec = ChannelSpec(
        family, AccelerationParams(gamma, q_r), alpha=alpha, fidelity_f=f
    )
    joint = build_joint(spec)
    reduced = reduce_to_region(joint, region)
    s_a, s_b, s_ab = subsystem_entropies(reduced, region_split(region))
    ssa = strong_additivity(joint, JOINT_TRIPARTITE) if with_ssa else None
    return SweepRecord(
        family=family,
        region=region,
        gamma=gamma,
        q_r=q_r,
        alpha=alpha,
        f=f,
        s_a=s_a,
        s_b=s_b,
        s_ab=s_ab,
        mutual_info=s_a + s_b - s_ab,
        cond_entropy=s_ab - s_b,
        ssa_value=ssa,
    )


def _grid_points(spec: SweepSpec) -> Iterator[tuple]:
    for family in spec.families:
        f_values = spec.f_grid if family is ChannelFamily.WERNER else (None,)
        for region in spec.regions:
            for gamma in spec.gamma_grid:
                for q_r in spec.q_r_grid:
                    for f in f_values:
                        yield family, region, gamma, q_r, f


def resolve_threads(threads: int | None = None) -> int:
    """Worker count: explicit argument, else the environment cap, else auto."""
    if threads is None:
        raw = os.environ.get(THREADS_ENV_VAR, "0")
        try:
            threads = int(raw)
        except ValueError:
            raise DomainError(THREADS_ENV_VAR, f"not an integer: {raw!r}") from None
    if threads < 0:
        raise DomainError("threads", f"must be >= 0, got {threads}")
    if threads == 0:
        threads = min(8, os.cpu_count() or 1)
    return threads


def run_sweep(spec: SweepSpec, *, threads: int | None = None) -> list[SweepRecord]:
    """Evaluate every grid point; the result order is canonical and deterministic."""
    with_ssa = Measure.STRONG_ADDITIVITY in spec.measures

    def evaluate(point: tuple) -> SweepRecord:
        family, region, gamma, q_r, f = point
        try:
            return evaluate_point(
                family, region, gamma, q_r, spec.alpha, f, with_ssa=with_ssa
            )
        except UnruhLabError as exc:
            raise SweepPointError(
                f"sweep aborted at family={family.value} region={region.value} "
                f"gamma={gamma!r} q_r={q_r!r} f={f!r}: {exc}"
            ) from exc

    points = list(_grid_points(spec))
    workers = resolve_threads(threads)
    if workers <= 1 or len(points) <= 1:
        return [evaluate(point) for point in points]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(evaluate, points))


class FigurePreset(Enum):
    FIG1 = "fig1"
    FIG2 = "fig2"
    FIG3 = "fig3"
    FIG4 = "fig4"


def default_gamma_grid(points: int = 101) -> tuple[float, ...]:
    """Uniform gamma grid over [0, pi/4] including both endpoints."""
    if points < 2:
        raise DomainError("points", f"need at least 2 grid points, got {points}")
    step = GAMMA_MAX / (points - 1)
    return tuple(i * step for i in range(points - 1)) + (GAMMA_MAX,)

QR_GRID_MIXING = (1.0, 0.9, 0.8, 1.0 / math.sqrt(2.0))
QR_GRID_WERNER = (1.0, 0.75, 0.5, 0.25)
F_GRID_WERNER = (0.95, 0.70, 0.50, 0.33)


def figure_preset(which: FigurePreset | str) -> SweepSpec:
    """The sweep configuration behind each bundled figure dataset.

    fig1: mutual information of the two pure-state channels, both wedges.
    fig2: mutual information of the two classical channels, both wedges.
    fig3: conditional entropy of all four, both wedges.
    fig4: the strong-additivity combination for the Werner family, wedge I.
    All use alpha = pi/4 and a 101-point gamma grid.
    """
    which = FigurePreset(which) if not isinstance(which, FigurePreset) else which
    gamma_grid = default_gamma_grid()
    if which is FigurePreset.FIG1:
        return SweepSpec(
            families=(ChannelFamily.QUANTUM_SINGLE_RAIL, ChannelFamily.QUANTUM_DUAL_RAIL),
            gamma_grid=gamma_grid,
            q_r_grid=QR_GRID_MIXING,
            measures=frozenset({Measure.MUTUAL_INFORMATION}),
        )
    if which is FigurePreset.FIG2:
        return SweepSpec(
            families=(
                ChannelFamily.CLASSICAL_SINGLE_RAIL,
                ChannelFamily.CLASSICAL_DUAL_RAIL,
            ),
            gamma_grid=gamma_grid,
            q_r_grid=QR_GRID_MIXING,
            measures=frozenset({Measure.MUTUAL_INFORMATION}),
        )
    if which is FigurePreset.FIG3:
        return SweepSpec(
            families=(
                ChannelFamily.CLASSICAL_SINGLE_RAIL,
                ChannelFamily.CLASSICAL_DUAL_RAIL,
                ChannelFamily.QUANTUM_SINGLE_RAIL,
                ChannelFamily.QUANTUM_DUAL_RAIL,
            ),
            gamma_grid=gamma_grid,
            q_r_grid=QR_GRID_MIXING,
            measures=frozenset({Measure.CONDITIONAL_ENTROPY}),
        )
    return SweepSpec(
        families=(ChannelFamily.WERNER,),
        gamma_grid=gamma_grid,
        q_r_grid=QR_GRID_WERNER,
        f_grid=F_GRID_WERNER,
        regions=(BobRegion.I,),
        measures=frozenset({Measure.STRONG_ADDITIVITY}),
    )
