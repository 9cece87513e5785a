"""Random-phase ensembles and fluctuation-count sampling.

A time average over phases is modelled as an average over independent
phase draws. Under that average the cross terms ``c_n c_m*`` of a coherent
superposition vanish, and the expectation of an operator reduces to the
incoherent weighted mean of its diagonal elements.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Optional, Sequence, Union

import numpy as np

from .errors import EmptyWindowError
from .constants import Registry, default_registry
from .quantity import INVERSE_TIME, MASS, Quantity

__all__ = [
    "EnsembleState",
    "CoarseGrainedState",
    "SamplerParams",
    "SamplerStats",
    "sample_phase_angles",
    "sample_phases",
    "phase_correlation",
    "coarse_grain",
    "expectation",
    "random_instance",
    "phase_averaged_expectation",
    "halfnormal_moments",
    "particlet_count_sampler",
    "histogram_csv",
    "ground_state_spread",
]

TWO_PI = 2 * math.pi


@dataclass(frozen=True)
class EnsembleState:
    amplitudes: np.ndarray
    energies: np.ndarray
    label: str = ""

    def __post_init__(self):
        amps = np.asarray(self.amplitudes, dtype=complex)
        energies = np.asarray(self.energies, dtype=float)
        if amps.ndim != 1 or amps.shape != energies.shape:
            raise ValueError(f"amplitudes {amps.shape} and energies {energies.shape} must be equal-length vectors")
        norm = float(np.sum(np.abs(amps) ** 2))
        if not norm > 0:
            raise ValueError("state has zero norm")
        object.__setattr__(self, "amplitudes", amps / math.sqrt(norm))
        object.__setattr__(self, "energies", energies)

    @property
    def weights(self) -> np.ndarray:
        return np.abs(self.amplitudes) ** 2


@dataclass(frozen=True)
class CoarseGrainedState:
    occupancy: np.ndarray  # |b_n|^2, each exactly 0.0 or 1.0
    window: tuple[float, float]


@dataclass(frozen=True)
class SamplerParams:
    mu: float
    seed: int = 0
    samples: int = 100_000
    integer: bool = False
    bins: int = 50

    def __post_init__(self):
        if not (math.isfinite(self.mu) and self.mu > 0):
            raise ValueError(f"mu must be positive, got {self.mu!r}")
        if self.samples < 1:
            raise ValueError("samples must be >= 1")
        if self.bins < 1:
            raise ValueError("bins must be >= 1")


def sample_phase_angles(count: int, seed: int) -> np.ndarray:
    """i.i.d. uniform angles on [0, 2 pi)."""
    if count < 1:
        raise ValueError("count must be >= 1")
    return np.random.default_rng(seed).uniform(0.0, TWO_PI, size=count)


def sample_phases(count: int, seed: int) -> np.ndarray:
    return np.exp(1j * sample_phase_angles(count, seed))


def phase_correlation(n_index: int, m_index: int, samples: int, seed: int) -> complex:
    """Average of ``c_n c_m*`` over ``samples`` independent phase draws.

    Computed from the phase difference, so ``n == m`` gives exactly 1.
    """
    if samples < 1:
        raise ValueError("samples must be >= 1")
    if n_index < 0 or m_index < 0:
        raise ValueError("indices must be non-negative")
    size = max(n_index, m_index) + 1
    angles = np.random.default_rng(seed).uniform(0.0, TWO_PI, size=(samples, size))
    diff = angles[:, n_index] - angles[:, m_index]
    return complex(np.mean(np.exp(1j * diff)))


def coarse_grain(state: Union[EnsembleState, Sequence[float]], E: float, delta: float) -> CoarseGrainedState:
    """Occupancy 1 for states with E < E_n < E + delta (strict), else 0."""
    if not delta > 0:
        raise ValueError(f"delta must be positive, got {delta!r}")
    energies = state.energies if isinstance(state, EnsembleState) else np.asarray(state, dtype=float)
    occ = ((energies > E) & (energies < E + delta)).astype(float)
    if not occ.any():
        raise EmptyWindowError(f"no energy in the open window ({E!r}, {E + delta!r})")
    return CoarseGrainedState(occ, (float(E), float(delta)))


def expectation(weights, diagonal: Sequence[float]) -> float:
    """Weighted mean sum_n w_n O_nn / sum_n w_n.

    ``weights`` may be a CoarseGrainedState (uses ``|b_n|^2``), an
    EnsembleState (uses ``|c_n|^2``) or a plain sequence.
    """
    if isinstance(weights, CoarseGrainedState):
        w = weights.occupancy
    elif isinstance(weights, EnsembleState):
        w = weights.weights
    else:
        w = np.asarray(weights, dtype=float)
    o = np.asarray(diagonal, dtype=float)
    if w.shape != o.shape:
        raise ValueError(f"weights {w.shape} and diagonal {o.shape} differ in length")
    total = float(np.sum(w))
    if total == 0:
        raise ValueError("all weights are zero")
    return float(np.dot(w, o) / total)


class Instance(NamedTuple):
    state: EnsembleState
    operator: np.ndarray  # Hermitian, full matrix


def random_instance(n_states: int, rng: np.random.Generator) -> Instance:
    """Random normalized state and random Hermitian operator."""
    amps = rng.uniform(0.2, 1.0, n_states) * np.exp(1j * rng.uniform(0, TWO_PI, n_states))
    energies = np.sort(rng.uniform(0.0, 10.0, n_states))
    a = rng.normal(size=(n_states, n_states)) + 1j * rng.normal(size=(n_states, n_states))
    op = (a + a.conj().T) / 2
    return Instance(EnsembleState(amps, energies, f"random-{n_states}"), op)


class PhaseAverage(NamedTuple):
    coherent_mean: float
    standard_error: float
    incoherent: float

    @property
    def z_score(self) -> float:
        if self.standard_error == 0:
            return 0.0 if self.coherent_mean == self.incoherent else math.inf
        return abs(self.coherent_mean - self.incoherent) / self.standard_error


def phase_averaged_expectation(instance: Instance, draws: int, seed: int) -> PhaseAverage:
    """Coherent <psi|O|psi> averaged over random phases vs the incoherent mean.

    Each draw keeps the moduli |c_n| and redraws every phase, so the full
    cross-term expansion sum_nm c_n* c_m O_nm is evaluated per draw.
    """
    if draws < 1:
        raise ValueError("draws must be >= 1")
    mod = np.abs(instance.state.amplitudes)
    angles = np.random.default_rng(seed).uniform(0.0, TWO_PI, size=(draws, mod.size))
    c = mod * np.exp(1j * angles)
    values = np.einsum("dn,nm,dm->d", c.conj(), instance.operator, c).real
    sem = float(values.std(ddof=1) / math.sqrt(draws)) if draws > 1 else math.inf
    incoherent = expectation(instance.state, np.diag(instance.operator).real)
    return PhaseAverage(float(values.mean()), sem, incoherent)


def halfnormal_moments(mu: float) -> dict[str, float]:
    """Moments of the density proportional to exp(-mu^2 N^2) on N >= 0."""
    sigma = 1.0 / (mu * math.sqrt(2.0))
    a2 = 2.0 / math.pi
    var = sigma**2 * (1 - a2)
    return {
        "sigma": sigma,
        "mean": sigma * math.sqrt(a2),
        "std": math.sqrt(var),
        "rms": sigma,
        "central4": sigma**4 * (3 - 2 * a2 - 3 * a2**2),
    }


@dataclass(frozen=True)
class SamplerStats:
    mean: float
    std: float
    rms: float
    samples: int
    edges: np.ndarray
    density: np.ndarray
    theory: dict

    @property
    def std_standard_error(self) -> float:
        """Large-sample standard error of the sample std, from theory moments."""
        var = self.theory["std"] ** 2
        return math.sqrt((self.theory["central4"] - var**2) / (4 * var * self.samples))

    @property
    def mean_standard_error(self) -> float:
        return self.theory["std"] / math.sqrt(self.samples)


def particlet_count_sampler(params: SamplerParams) -> SamplerStats:
    rng = np.random.default_rng(params.seed)
    sigma = 1.0 / (params.mu * math.sqrt(2.0))
    x = np.abs(rng.normal(0.0, sigma, size=params.samples))
    if params.integer:
        x = np.rint(x)
    density, edges = np.histogram(x, bins=params.bins, density=True)
    return SamplerStats(
        mean=float(x.mean()),
        std=float(x.std()),
        rms=float(math.sqrt(np.mean(x**2))),
        samples=params.samples,
        edges=edges,
        density=density,
        theory=halfnormal_moments(params.mu),
    )


def histogram_csv(stats: SamplerStats) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["bin_lo", "bin_hi", "density"])
    for lo, hi, d in zip(stats.edges[:-1].tolist(), stats.edges[1:].tolist(), stats.density.tolist()):
        w.writerow([repr(lo), repr(hi), repr(d)])
    return buf.getvalue()


def ground_state_spread(m: Quantity, omega: Quantity, reg: Optional[Registry] = None) -> Quantity:
    """Position spread sqrt(hbar / (m omega)) of an oscillator ground state."""
    m.require(MASS, "mass")
    omega.require(INVERSE_TIME, "angular frequency")
    if not (m.value > 0 and omega.value > 0):
        raise ValueError("mass and frequency must be positive")
    hbar = (reg or default_registry()).value("hbar")
    return (hbar / (m * omega)) ** Fraction(1, 2)
