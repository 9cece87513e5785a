"""Particle-number growth driven by sqrt(N) fluctuations.

The growth law is ``dN/dt = sqrt(N) / tau`` with ``tau = hbar / (m c^2)``.
Its closed form is ``sqrt(N(t)) = sqrt(N0) + t / (2 tau)``. Every trajectory
point also carries the radius ``R = G m N / c^2`` and the local expansion
rate ``H_local = (dN/dt) / N = 1 / (tau sqrt(N))``.

Three ways to produce a trajectory are offered: the closed form, a
fixed-step RK4 integration, and a seeded Monte Carlo ensemble whose
per-step increments are Poisson with mean ``sqrt(N) dt / tau``.
"""

from __future__ import annotations

import csv
import enum
import io
import math
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence, Union

import numpy as np

from .constants import Registry, default_registry
from .errors import IntegrationError, StabilityError
from .quantity import DIMENSIONLESS, MASS, TIME, Quantity

__all__ = [
    "Mode",
    "GrowthParams",
    "TrajectoryPoint",
    "StochasticEnsemble",
    "fluctuation_time",
    "exact_root_n",
    "integrate",
    "simulate_stochastic",
    "check_acceleration",
    "trajectory_csv",
    "write_trajectory_csv",
]

GAUSSIAN_SWITCHOVER = 1e6
MAX_STEP_FRACTION = 0.1
MAX_STEPS = 10_000_000

TimeLike = Union[float, Quantity]


class Mode(str, enum.Enum):
    EXACT = "exact"
    RK4 = "rk4"
    STOCHASTIC = "stochastic"


def _seconds(x: TimeLike, what: str) -> float:
    if isinstance(x, Quantity):
        return x.require(TIME, what).value
    return float(x)


@dataclass(frozen=True)
class GrowthParams:
    m: Quantity
    N0: float
    t_end: TimeLike
    dt: TimeLike
    mode: Mode = Mode.EXACT
    seed: int = 0
    ensemble_size: int = 1
    stride: int = 1

    def __post_init__(self):
        self.m.require(MASS, "mass")
        object.__setattr__(self, "mode", Mode(self.mode))
        t_end, dt = _seconds(self.t_end, "t_end"), _seconds(self.dt, "dt")
        object.__setattr__(self, "t_end", t_end)
        object.__setattr__(self, "dt", dt)
        if not self.m.value > 0:
            raise ValueError("mass must be positive")
        if not (math.isfinite(dt) and dt > 0):
            raise ValueError(f"dt must be positive, got {dt!r}")
        if not (math.isfinite(t_end) and t_end >= dt):
            raise ValueError(f"t_end must be >= dt, got t_end={t_end!r}, dt={dt!r}")
        if not (math.isfinite(self.N0) and self.N0 >= 0):
            raise ValueError(f"N0 must be a non-negative number, got {self.N0!r}")
        if self.mode is not Mode.EXACT and self.N0 < 1:
            # sqrt(N) is not Lipschitz at 0; only the closed form starts there
            raise ValueError(f"{self.mode.value} mode needs N0 >= 1, got {self.N0!r}")
        if self.ensemble_size < 1:
            raise ValueError("ensemble_size must be >= 1")
        if self.stride < 1:
            raise ValueError("stride must be >= 1")
        if self.n_steps > MAX_STEPS:
            raise ValueError(f"{self.n_steps} steps requested, limit is {MAX_STEPS}")

    @property
    def n_steps(self) -> int:
        # tolerate t_end/dt landing a rounding error above an integer
        return max(1, math.ceil(self.t_end / self.dt - 1e-9))

    def step_times(self) -> np.ndarray:
        t = np.arange(self.n_steps + 1, dtype=float) * self.dt
        t[-1] = self.t_end
        return t

    def stored_indices(self) -> np.ndarray:
        idx = np.arange(0, self.n_steps + 1, self.stride)
        if idx[-1] != self.n_steps:
            idx = np.append(idx, self.n_steps)
        return idx


@dataclass(frozen=True)
class TrajectoryPoint:
    t: float
    N: float
    R: float
    H_local: float


def fluctuation_time(m: Quantity, reg: Optional[Registry] = None) -> float:
    """tau = hbar / (m c^2) in seconds."""
    reg = reg or default_registry()
    m.require(MASS, "mass")
    return (reg.value("hbar") / (m * reg.value("c") ** 2)).require(TIME).value


def exact_root_n(t: TimeLike, m: Quantity, reg: Optional[Registry] = None, N0: float = 0.0) -> Quantity:
    """sqrt(N) at time t for the closed-form solution (default start N=0)."""
    ts = _seconds(t, "t")
    if ts < 0:
        raise ValueError(f"t must be non-negative, got {ts!r}")
    tau = fluctuation_time(m, reg)
    return Quantity(math.sqrt(N0) + ts / (2 * tau), DIMENSIONLESS)


def _radius_factor(m: Quantity, reg: Registry) -> float:
    return (reg.value("G") * m / reg.value("c") ** 2).value


def _points(t: np.ndarray, N: np.ndarray, tau: float, rfac: float) -> list[TrajectoryPoint]:
    out = []
    for ti, ni in zip(t.tolist(), N.tolist()):
        if ni <= 0:
            continue  # singular start: H_local undefined at N = 0
        out.append(TrajectoryPoint(ti, ni, rfac * ni, 1.0 / (tau * math.sqrt(ni))))
    return out


def _rk4(n0: float, times: np.ndarray, tau: float) -> np.ndarray:
    def f(n):
        return math.sqrt(n) / tau

    out = np.empty_like(times)
    out[0] = n = n0
    for k in range(1, len(times)):
        h = times[k] - times[k - 1]
        k1 = f(n)
        k2 = f(n + 0.5 * h * k1)
        k3 = f(n + 0.5 * h * k2)
        k4 = f(n + h * k3)
        n = n + h * (k1 + 2 * k2 + 2 * k3 + k4) / 6
        if not math.isfinite(n):
            raise IntegrationError(f"non-finite N at step {k} (t={times[k]:.6g} s)")
        out[k] = n
    return out


def integrate(params: GrowthParams, reg: Optional[Registry] = None) -> list[TrajectoryPoint]:
    """Deterministic trajectory: closed form (``exact``) or fixed-step ``rk4``."""
    reg = reg or default_registry()
    if params.mode is Mode.STOCHASTIC:
        raise ValueError("integrate handles exact and rk4 modes; use simulate_stochastic")
    tau = fluctuation_time(params.m, reg)
    times = params.step_times()
    if params.mode is Mode.EXACT:
        N = (math.sqrt(params.N0) + times / (2 * tau)) ** 2
        if not np.all(np.isfinite(N)):
            bad = int(np.argmin(np.isfinite(N)))
            raise IntegrationError(f"non-finite N at step {bad} (t={times[bad]:.6g} s)")
    else:
        N = _rk4(params.N0, times, tau)
    idx = params.stored_indices()
    return _points(times[idx], N[idx], tau, _radius_factor(params.m, reg))


@dataclass
class StochasticEnsemble:
    """Stored times and per-member counts, shape ``(members, points)``."""

    times: np.ndarray
    counts: np.ndarray
    tau: float
    radius_factor: float
    params: GrowthParams = field(repr=False)

    @property
    def size(self) -> int:
        return self.counts.shape[0]

    def root_n(self) -> np.ndarray:
        return np.sqrt(self.counts)

    def mean_root_n(self) -> np.ndarray:
        return self.root_n().mean(axis=0)

    def sem_root_n(self) -> np.ndarray:
        if self.size < 2:
            return np.full(self.times.shape, np.inf)
        return self.root_n().std(axis=0, ddof=1) / math.sqrt(self.size)

    def mean_n(self) -> np.ndarray:
        return self.counts.mean(axis=0)

    def var_n(self) -> np.ndarray:
        ddof = 1 if self.size > 1 else 0
        return self.counts.var(axis=0, ddof=ddof)

    def trajectory(self, member: int) -> list[TrajectoryPoint]:
        return _points(self.times, self.counts[member], self.tau, self.radius_factor)

    def mean_trajectory(self) -> list[TrajectoryPoint]:
        return _points(self.times, self.mean_n(), self.tau, self.radius_factor)

    def summary(self) -> dict[str, float]:
        return {
            "ensemble_size": self.size,
            "t_end": float(self.times[-1]),
            "mean_N": float(self.mean_n()[-1]),
            "std_N": float(math.sqrt(self.var_n()[-1])),
            "mean_sqrt_N": float(self.mean_root_n()[-1]),
            "sem_sqrt_N": float(self.sem_root_n()[-1]),
        }


def _draw_member(rng: np.random.Generator, n0: float, times: np.ndarray, tau: float) -> np.ndarray:
    out = np.empty_like(times)
    out[0] = n = n0
    for k in range(1, len(times)):
        h = times[k] - times[k - 1]
        mean = math.sqrt(n) * h / tau
        if mean > MAX_STEP_FRACTION * n:
            raise StabilityError(
                f"mean increment {mean:.4g} exceeds {MAX_STEP_FRACTION} * N = {MAX_STEP_FRACTION * n:.4g} "
                f"at step {k}; reduce dt below {MAX_STEP_FRACTION * math.sqrt(n) * tau:.4g} s"
            )
        if mean < GAUSSIAN_SWITCHOVER:
            n += float(rng.poisson(mean))
        else:
            n += max(0.0, rng.normal(mean, math.sqrt(mean)))
        out[k] = n
    return out


def simulate_stochastic(params: GrowthParams, reg: Optional[Registry] = None) -> StochasticEnsemble:
    """Monte Carlo ensemble; member ``i`` uses seed ``params.seed + i``."""
    reg = reg or default_registry()
    if params.mode is not Mode.STOCHASTIC:
        raise ValueError(f"simulate_stochastic needs stochastic mode, got {params.mode.value}")
    tau = fluctuation_time(params.m, reg)
    times = params.step_times()
    idx = params.stored_indices()
    counts = np.empty((params.ensemble_size, len(idx)))
    for i in range(params.ensemble_size):
        rng = np.random.default_rng(params.seed + i)
        counts[i] = _draw_member(rng, params.N0, times, tau)[idx]
    return StochasticEnsemble(times[idx], counts, tau, _radius_factor(params.m, reg), params)


def check_acceleration(trajectory: Sequence[TrajectoryPoint]) -> float:
    """Max relative deviation of d2R/dt2 from H_local^2 R / 2.

    The second derivative uses three-point differences on the stored
    (possibly uneven) grid, which are exact for quadratics.
    """
    if len(trajectory) < 3:
        raise ValueError(f"need at least 3 points, got {len(trajectory)}")
    t = np.array([p.t for p in trajectory])
    R = np.array([p.R for p in trajectory])
    H = np.array([p.H_local for p in trajectory])
    h1 = t[1:-1] - t[:-2]
    h2 = t[2:] - t[1:-1]
    rdd = 2 * ((R[2:] - R[1:-1]) / h2 - (R[1:-1] - R[:-2]) / h1) / (h1 + h2)
    expected = H[1:-1] ** 2 * R[1:-1] / 2
    return float(np.max(np.abs(rdd - expected) / expected))


def trajectory_csv(points: Iterable[TrajectoryPoint]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["t", "N", "R", "H_local"])
    for p in points:
        w.writerow([repr(p.t), repr(p.N), repr(p.R), repr(p.H_local)])
    return buf.getvalue()


def write_trajectory_csv(points: Iterable[TrajectoryPoint], path) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(trajectory_csv(points))
