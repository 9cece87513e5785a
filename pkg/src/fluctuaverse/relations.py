"""Closed-form relations of the fluctuation cosmology, checked in dex.

Every formula is a plain function of :class:`~fluctuaverse.quantity.Quantity`
arguments. Functions that correspond to an order-of-magnitude claim return a
:class:`RelationReport`; the rest return the bare quantity so they can be
chained.

Constants (G, c, hbar, e) are read from a :class:`Registry`; pass ``reg=`` to
use something other than the shipped defaults.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Mapping, NamedTuple, Optional

from .constants import Registry, default_registry
from .errors import ConfigError, DimensionError, QuantityError, RegimeError
from .quantity import (
    CHARGE,
    DIMENSIONLESS,
    INVERSE_TIME,
    LENGTH,
    MASS,
    TIME,
    Dimension,
    Quantity,
    dex_gap,
)

__all__ = [
    "Verdict",
    "RelationReport",
    "HorizonResult",
    "make_report",
    "compton_scales",
    "kerr_newman_horizon",
    "zitter_charge_energy",
    "em_grav_ratio",
    "space_levels",
    "zpf_energy_of_region",
    "mass_from_cutoff",
    "curvature_fluctuation",
    "universe_mass",
    "schwarzschild_radius",
    "eddington_length",
    "age_root_N",
    "hubble_from_pion",
    "pion_from_hubble",
    "cosmological_constant",
    "cmb_wavelength",
    "age_from_relation31",
    "thermal_spacing",
    "CATALOG",
    "DEFAULT_TOLERANCES",
    "run_all",
]

LARGE_NUMBER = 1e40
_HALF = Fraction(1, 2)
_THIRD = Fraction(1, 3)


class Verdict(str, enum.Enum):
    PASS = "pass"
    FAIL = "fail"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class RelationReport:
    relation_id: str
    lhs: Quantity
    rhs: Quantity
    gap_dex: float
    tolerance_dex: float
    verdict: Verdict
    paper_anchor: str

    @property
    def passed(self) -> bool:
        return self.verdict is Verdict.PASS


def make_report(relation_id: str, lhs: Quantity, rhs: Quantity, tolerance: float, anchor: str) -> RelationReport:
    if not tolerance > 0:
        raise ConfigError(f"tolerance for {relation_id!r} must be positive, got {tolerance!r}")
    gap = dex_gap(lhs, rhs)
    verdict = Verdict.PASS if gap <= tolerance else Verdict.FAIL
    return RelationReport(relation_id, lhs, rhs, gap, float(tolerance), verdict, anchor)


class HorizonResult(NamedTuple):
    real_part: Quantity
    imag_part: Quantity


def _reg(reg: Optional[Registry]) -> Registry:
    return reg if reg is not None else _DEFAULT


_DEFAULT = default_registry()


def _positive(q: Quantity, dim: Dimension, what: str) -> Quantity:
    q.require(dim, what)
    if not q.value > 0:
        raise QuantityError(f"{what} must be positive, got {q.value!r}")
    return q


def _consts(reg):
    r = _reg(reg)
    return r.value("G"), r.value("c"), r.value("hbar")


# -- Compton scale and the particle model ----------------------------------


def compton_scales(m: Quantity, reg: Optional[Registry] = None) -> tuple[Quantity, Quantity]:
    """Compton length hbar/mc and Compton time hbar/mc^2."""
    _positive(m, MASS, "mass")
    _, c, hbar = _consts(reg)
    length = hbar / (m * c)
    return length, length / c


def kerr_newman_horizon(M: Quantity, Q: Quantity, L: Quantity, reg: Optional[Registry] = None) -> HorizonResult:
    """Complex horizon ``GM/c^2 + i b`` for a naked Kerr-Newman singularity.

    ``b^2 = G Q^2 / c^4 + a^2 - G^2 M^2 / c^4`` with ``a = L / Mc``. A
    negative ``b^2`` is the ordinary black-hole regime and raises RegimeError.

    The charge term is the Gaussian-unit charge length squared; the form
    ``G^2 Q^2 / c^8`` is not an area and is rejected by the dimension check.
    """
    _positive(M, MASS, "mass")
    Q.require(CHARGE, "charge")
    L.require(M.dim * LENGTH**2 / TIME, "angular momentum")
    G, c, _ = _consts(reg)
    a = L / (M * c)
    charge_term = G * Q**2 / c**4
    mass_term = (G * M) ** 2 / c**4
    disc = charge_term + a**2 - mass_term
    if disc.value < 0:
        raise RegimeError(
            f"horizon discriminant is negative ({disc.value:.4g} cm^2): "
            "classical black hole, not a naked singularity"
        )
    return HorizonResult(G * M / c**2, disc ** _HALF)


def zitter_charge_energy(m: Quantity, tolerance: float = 0.5, reg: Optional[Registry] = None) -> RelationReport:
    """hbar/a0 against mc^2, where a0 = hbar/(2 m c^2).

    The literal formula yields 2mc^2, so the gap is log10(2) for every mass.
    """
    _positive(m, MASS, "mass")
    _, c, hbar = _consts(reg)
    a0 = hbar / (2 * m * c**2)
    return make_report("zitter_charge_energy", hbar / a0, m * c**2, tolerance, "Phi e = hbar/a0 = m c^2")


def em_grav_ratio(m1: Quantity, m2: Quantity, tolerance: float = 1.5, reg: Optional[Registry] = None) -> RelationReport:
    """Electric over gravitational attraction, e^2 / (G m1 m2), against 1e40."""
    _positive(m1, MASS, "m1")
    _positive(m2, MASS, "m2")
    r = _reg(reg)
    e, G = r.value("e"), r.value("G")
    ratio = e**2 / (G * m1 * m2)
    return make_report(
        "em_grav_ratio", ratio, Quantity.dimensionless(LARGE_NUMBER), tolerance, "e^2/(G m^2) ~ 1e40"
    )


def space_levels(m: Quantity, n: int, reg: Optional[Registry] = None) -> Quantity:
    """Oscillator levels of the squared position operator: (n + 1/2) (hbar/mc)^2.

    Uses frequency 2mc^2/hbar, which makes the spacing exactly (hbar/mc)^2.
    """
    if isinstance(n, bool) or not isinstance(n, int) or n < 0:
        raise ValueError(f"level index must be a non-negative int, got {n!r}")
    length, _ = compton_scales(m, reg)
    return (n + 0.5) * length**2


def zpf_energy_of_region(lam: Quantity, reg: Optional[Registry] = None) -> tuple[Quantity, Quantity]:
    """Zero-point magnetic energy B^2 lambda^3 in a region of size lambda.

    Returns ``(energy, mass)`` with energy = hbar c / lambda.
    """
    _positive(lam, LENGTH, "wavelength")
    _, c, hbar = _consts(reg)
    b_squared = hbar * c / lam**4
    energy = b_squared * lam**3
    return energy, energy / c**2


def mass_from_cutoff(lam: Quantity, reg: Optional[Registry] = None) -> Quantity:
    return zpf_energy_of_region(lam, reg)[1]


def curvature_fluctuation(l: Quantity, reg: Optional[Registry] = None) -> Quantity:
    """Curvature fluctuation L*/l^3 over a length l (units cm^-2)."""
    _positive(l, LENGTH, "length")
    return _reg(reg).value("L_star") / l**3


def thermal_spacing(m: Quantity, reg: Optional[Registry] = None) -> Quantity:
    """Interparticle spacing (V/N)^(1/3) of a classical gas whose mean speed is c.

    The thermal wavelength hbar / sqrt(m^2 <v^2>) with <v^2> = c^2.
    """
    _positive(m, MASS, "mass")
    _, c, hbar = _consts(reg)
    return hbar / (m**2 * c**2) ** _HALF


# -- cosmological chain ----------------------------------------------------


def universe_mass(N: Quantity, m: Quantity, tolerance: float = 1.0, reg: Optional[Registry] = None) -> RelationReport:
    _positive(N, DIMENSIONLESS, "particle count")
    _positive(m, MASS, "mass")
    M_obs = _reg(reg).value("M_obs")
    return make_report("universe_mass", N * m, M_obs, tolerance, "N m_pi = M, M ~ 1e56 g")


def schwarzschild_radius(M: Quantity, reg: Optional[Registry] = None) -> Quantity:
    """R = GM/c^2; linear in M."""
    _positive(M, MASS, "mass")
    G, c, _ = _consts(reg)
    return G * M / c**2


def eddington_length(R: Quantity, N: Quantity, tolerance: float = 1.5, reg: Optional[Registry] = None) -> RelationReport:
    _positive(R, LENGTH, "radius")
    _positive(N, DIMENSIONLESS, "particle count")
    r = _reg(reg)
    pion_length, _ = compton_scales(r.value("m_pi"), reg)
    return make_report("eddington_length", R / N**_HALF, pion_length, tolerance, "l_pi ~ R/sqrt(N)")


def age_root_N(T: Quantity, m: Quantity, tolerance: float = 1.0, reg: Optional[Registry] = None) -> RelationReport:
    """2 m c^2 T / hbar against sqrt(N_obs)."""
    _positive(T, TIME, "age")
    _positive(m, MASS, "mass")
    r = _reg(reg)
    _, c, hbar = _consts(reg)
    lhs = 2 * m * c**2 * T / hbar
    return make_report("age_root_N", lhs, r.value("N_obs") ** _HALF, tolerance, "sqrt(N) = (2 m_pi c^2/hbar) T")


def hubble_from_pion(m: Quantity, reg: Optional[Registry] = None) -> Quantity:
    """H = G m^3 c / hbar^2."""
    _positive(m, MASS, "mass")
    G, c, hbar = _consts(reg)
    return G * m**3 * c / hbar**2


def pion_from_hubble(H: Quantity, reg: Optional[Registry] = None) -> Quantity:
    """Inverse of :func:`hubble_from_pion`: (hbar^2 H / G c)^(1/3)."""
    _positive(H, INVERSE_TIME, "Hubble rate")
    G, c, hbar = _consts(reg)
    return (hbar**2 * H / (G * c)) ** _THIRD



def cosmological_constant(H: Quantity) -> Quantity:
    _positive(H, INVERSE_TIME, "Hubble rate")
    return H**2


def cmb_wavelength(tau: Quantity, reg: Optional[Registry] = None) -> Quantity:
    """Compton length c*tau of the particle whose Compton time is tau."""
    _positive(tau, TIME, "fluctuation time")
    return _reg(reg).value("c") * tau


def age_from_relation31(m: Quantity, reg: Optional[Registry] = None) -> Quantity:
    """Age T solving 2 G m^3 c / hbar^2 = 1/T."""
    _positive(m, MASS, "mass")
    G, c, hbar = _consts(reg)
    return hbar**2 / (2 * G * m**3 * c)


def repulsion_acceleration(m: Quantity, reg: Optional[Registry] = None) -> Quantity:
    """Constant d^2R/dt^2 = G m^3 c^2 / (2 hbar^2) of the sqrt(N) growth law."""
    _positive(m, MASS, "mass")
    G, c, hbar = _consts(reg)
    return G * m**3 * c**2 / (2 * hbar**2)


# -- catalog ---------------------------------------------------------------


def _horizon(reg: Registry, tol: float) -> RelationReport:
    m_e = reg.value("m_e")
    spin = reg.value("hbar") / 2
    h = kerr_newman_horizon(m_e, reg.value("e"), spin, reg)
    return make_report("kerr_newman_horizon", h.imag_part, spin / (m_e * reg.value("c")), tol, "b ~ hbar/(2 m c)")


def _compton_electron(reg: Registry, tol: float) -> RelationReport:
    length, _ = compton_scales(reg.value("m_e"), reg)
    return make_report("compton_electron", length, Quantity(1e-11, LENGTH), tol, "hbar/(m_e c) ~ 1e-11 cm")


def _space_levels(reg: Registry, tol: float) -> RelationReport:
    m = reg.value("m_e")
    spacing = space_levels(m, 1, reg) - space_levels(m, 0, reg)
    length, _ = compton_scales(m, reg)
    return make_report("space_levels", spacing, length**2, tol, "space levels in multiples of (hbar/mc)^2")


def _zpf_energy(reg: Registry, tol: float) -> RelationReport:
    m = reg.value("m_e")
    length, _ = compton_scales(m, reg)
    energy, _ = zpf_energy_of_region(length, reg)
    return make_report("zpf_energy", energy, m * reg.value("c") ** 2, tol, "hbar c/lambda = m c^2")


def _curvature(reg: Registry, tol: float) -> RelationReport:
    dR = curvature_fluctuation(Quantity(1e-11, LENGTH), reg)
    # unit curvature compared numerically, as the claim is a bare "~ 1"
    return make_report("curvature_fluctuation", dR, Quantity(1.0, dR.dim), tol, "Delta R ~ L*/l^3 ~ 1")


def _zpf_pion(reg: Registry, tol: float) -> RelationReport:
    m_pi = reg.value("m_pi")
    length, _ = compton_scales(m_pi, reg)
    return make_report("zpf_pion_mass", mass_from_cutoff(length, reg), m_pi, tol, "cutoff at pion Compton length recovers m_pi")


def _thermal(reg: Registry, tol: float) -> RelationReport:
    m = reg.value("m_e")
    length, _ = compton_scales(m, reg)
    return make_report("thermal_spacing", thermal_spacing(m, reg), length, tol, "(V/N)^(1/3) ~ hbar/(m c)")


def _radius(reg: Registry, tol: float) -> RelationReport:
    R = schwarzschild_radius(reg.value("M_obs"), reg)
    return make_report("schwarzschild_radius", R, reg.value("R_obs"), tol, "G M/c^2 = R")


def _age_exact(reg: Registry, tol: float) -> RelationReport:
    _, tau = compton_scales(reg.value("m_pi"), reg)
    root_n = reg.value("T_obs") / (2 * tau)
    return make_report(
        "age_exact_integral", root_n, reg.value("N_obs") ** _HALF, tol, "sqrt(N) = T/(2 tau) from dN/dt = sqrt(N)/tau"
    )


def _hubble(reg: Registry, tol: float) -> RelationReport:
    H = hubble_from_pion(reg.value("m_pi"), reg)
    return make_report("hubble_from_pion", H, reg.value("H_obs"), tol, "H = G m_pi^3 c/hbar^2")


def _pion(reg: Registry, tol: float) -> RelationReport:
    m = pion_from_hubble(reg.value("H_obs"), reg)
    return make_report("pion_from_hubble", m, reg.value("m_pi"), tol, "m_pi = (hbar^2 H/(G c))^(1/3)")


def _repulsion(reg: Registry, tol: float) -> RelationReport:
    # evaluated on the exact growth trajectory at the present age
    m, T = reg.value("m_pi"), reg.value("T_obs")
    _, tau = compton_scales(m, reg)
    G, c, _ = _consts(reg)
    N = (T / (2 * tau)) ** 2
    H = 2 / T
    R = G * m * N / c**2
    return make_report("cosmic_repulsion", repulsion_acceleration(m, reg), H**2 * R, tol, "d2R/dt2 = H^2 R")


def _lambda(reg: Registry, tol: float) -> RelationReport:
    derived = cosmological_constant(hubble_from_pion(reg.value("m_pi"), reg))
    observed = cosmological_constant(reg.value("H_obs"))
    return make_report("cosmological_constant", derived, observed, tol, "Lambda ~ H^2")


def _cmb(reg: Registry, tol: float) -> RelationReport:
    lam = cmb_wavelength(reg.value("tau_fluct"), reg)
    return make_report("cmb_wavelength", lam, reg.value("l_cmb"), tol, "hbar/(m c) ~ 0.3 cm for hbar/(m c^2) = 1e-11 s")


def _age31(reg: Registry, tol: float) -> RelationReport:
    T = age_from_relation31(reg.value("m_pi"), reg)
    return make_report("age_from_relation31", T, reg.value("T_obs"), tol, "2 G m_pi^3 c/hbar^2 = 1/T")


class CatalogEntry(NamedTuple):
    relation_id: str
    tolerance: float
    evaluate: Callable[[Registry, float], RelationReport]


# Ordered along the chain of derivation, particle scale to cosmic scale.
CATALOG: tuple[CatalogEntry, ...] = (
    CatalogEntry("kerr_newman_horizon", 0.5, _horizon),
    CatalogEntry("compton_electron", 1.0, _compton_electron),
    CatalogEntry("zitter_charge_energy", 0.5, lambda reg, tol: zitter_charge_energy(reg.value("m_e"), tol, reg)),
    CatalogEntry("em_grav_ratio", 1.5, lambda reg, tol: em_grav_ratio(reg.value("m_e"), reg.value("m_p"), tol, reg)),
    CatalogEntry("space_levels", 0.5, _space_levels),
    CatalogEntry("zpf_energy", 0.5, _zpf_energy),
    CatalogEntry("curvature_fluctuation", 2.0, _curvature),
    CatalogEntry("zpf_pion_mass", 0.5, _zpf_pion),
    CatalogEntry("universe_mass", 1.0, lambda reg, tol: universe_mass(reg.value("N_obs"), reg.value("m_pi"), tol, reg)),
    CatalogEntry("thermal_spacing", 0.5, _thermal),
    CatalogEntry("schwarzschild_radius", 0.5, _radius),
    CatalogEntry("age_root_N", 1.0, lambda reg, tol: age_root_N(reg.value("T_obs"), reg.value("m_pi"), tol, reg)),
    CatalogEntry("age_exact_integral", 0.1, _age_exact),
    CatalogEntry("hubble_from_pion", 1.5, _hubble),
    CatalogEntry("pion_from_hubble", 0.5, _pion),
    CatalogEntry("cosmic_repulsion", 0.5, _repulsion),
    CatalogEntry("cosmological_constant", 2.5, _lambda),
    CatalogEntry("cmb_wavelength", 0.1, _cmb),
    CatalogEntry("eddington_length", 1.5, lambda reg, tol: eddington_length(reg.value("R_obs"), reg.value("N_obs"), tol, reg)),
    CatalogEntry("age_from_relation31", 1.0, _age31),
)

DEFAULT_TOLERANCES: dict[str, float] = {e.relation_id: e.tolerance for e in CATALOG}


def run_all(tolerance_overrides: Optional[Mapping[str, float]] = None, reg: Optional[Registry] = None) -> list[RelationReport]:
    """Evaluate the whole catalog, in catalog order."""
    overrides = dict(tolerance_overrides or {})
    unknown = sorted(set(overrides) - set(DEFAULT_TOLERANCES))
    if unknown:
        raise ConfigError(f"unknown relation id(s) {', '.join(unknown)}; known: {', '.join(DEFAULT_TOLERANCES)}")
    for rid, tol in overrides.items():
        if not (isinstance(tol, (int, float)) and math.isfinite(tol) and tol > 0):
            raise ConfigError(f"tolerance for {rid!r} must be a positive number, got {tol!r}")
    reg = _reg(reg)
    reports = [entry.evaluate(reg, float(overrides.get(entry.relation_id, entry.tolerance))) for entry in CATALOG]
    for rep in reports:
        if rep.lhs.dim != rep.rhs.dim:  # pragma: no cover - guarded by dex_gap
            raise DimensionError(f"{rep.relation_id}: [{rep.lhs.dim}] vs [{rep.rhs.dim}]")
    return reports
