"""Relation engine. Expected numbers come from an mpmath evaluation (40
digits) of each formula on the shipped registry defaults, written out by
hand rather than through this package."""

import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from fluctuaverse import relations as rel
from fluctuaverse.errors import ConfigError, DimensionError, QuantityError, RegimeError
from fluctuaverse.quantity import (
    CHARGE,
    DIMENSIONLESS,
    INVERSE_TIME,
    LENGTH,
    MASS,
    TIME,
    Quantity,
    dex_gap,
)
from fluctuaverse.relations import Verdict

ORACLE = {
    "compton_e_len": 3.8632261226443567e-11,
    "compton_e_time": 1.2886011082869769e-21,
    "compton_pi_len": 1.414394162024415e-13,
    "compton_pi_time": 4.717792401682505e-24,
    "kn_real": 6.7638450094147711e-56,
    "kn_imag": 1.9316130613221783e-11,
    "two_me_c2": 1.63743456872e-6,
    "me_c2": 8.1871728436e-7,
    "em_ep": 2.268152901007048e39,
    "em_ee": 4.1657918579259978e42,
    "level0_e": 7.462258037340875e-22,
    "curv_1e-11": 1.616,
    "curv_Lstar": 3.8292814429957847e65,
    "N_mpi": 2.488e55,
    "rs_M_obs": 7.4254528591665068e27,
    "age_lhs": 4.2392708913744076e40,
    "H_pion": 2.7686243846203755e-17,
    "m_from_Hobs": 1.0808638250491155e-25,
    "lambda_obs": 5.1529e-36,
    "lambda_pion": 7.6652809831145529e-34,
    "cmb": 0.2998,
    "T31": 1.805951008657891e16,
}
TIGHT = 1e-12


def mass(v):
    return Quantity(v, MASS)


@pytest.fixture
def m_e(reg):
    return reg.value("m_e")


@pytest.fixture
def m_pi(reg):
    return reg.value("m_pi")


# -- compton / particle model ---------------------------------------------


def test_compton_scales(m_e, m_pi):
    length, time = rel.compton_scales(m_e)
    assert length.dim == LENGTH and time.dim == TIME
    assert length.value == pytest.approx(ORACLE["compton_e_len"], rel=TIGHT)
    assert time.value == pytest.approx(ORACLE["compton_e_time"], rel=TIGHT)
    length, time = rel.compton_scales(m_pi)
    assert length.value == pytest.approx(ORACLE["compton_pi_len"], rel=TIGHT)
    assert time.value == pytest.approx(ORACLE["compton_pi_time"], rel=TIGHT)


def test_compton_electron_near_quoted_magnitude(m_e):
    length, _ = rel.compton_scales(m_e)
    assert dex_gap(length, Quantity(1e-11, LENGTH)) <= 1.0


def test_compton_rejects_non_mass():
    with pytest.raises(DimensionError):
        rel.compton_scales(Quantity(1.0, LENGTH))


def test_horizon_electron(reg, m_e):
    hbar, c = reg.value("hbar"), reg.value("c")
    h = rel.kerr_newman_horizon(m_e, reg.value("e"), hbar / 2)
    assert h.real_part.dim == LENGTH == h.imag_part.dim
    assert h.real_part.value == pytest.approx(ORACLE["kn_real"], rel=TIGHT)
    assert h.imag_part.value == pytest.approx(ORACLE["kn_imag"], rel=1e-9)
    assert dex_gap(h.imag_part, hbar / (2 * m_e * c)) <= 0.5


def test_horizon_classical_regime_raises(reg):
    zero_q = Quantity(0.0, CHARGE)
    zero_l = Quantity(0.0, MASS * LENGTH**2 / TIME)
    for M in (1e-5, 1.0, 2e33):
        with pytest.raises(RegimeError, match="negative"):
            rel.kerr_newman_horizon(mass(M), zero_q, zero_l)


def test_horizon_imag_nonnegative(reg, m_e):
    spin = reg.value("hbar") / 2
    for factor in (1, 10, 1e-3):
        h = rel.kerr_newman_horizon(m_e * factor, reg.value("e"), spin)
        assert h.imag_part.value >= 0


def test_zitter_charge_energy(m_e, m_pi):
    r = rel.zitter_charge_energy(m_e)
    assert r.lhs.value == pytest.approx(ORACLE["two_me_c2"], rel=TIGHT)
    assert r.rhs.value == pytest.approx(ORACLE["me_c2"], rel=TIGHT)
    assert r.gap_dex == pytest.approx(math.log10(2), abs=1e-12)
    assert r.verdict is Verdict.PASS
    assert rel.zitter_charge_energy(m_pi).gap_dex == pytest.approx(math.log10(2), abs=1e-12)
    assert rel.zitter_charge_energy(m_e, tolerance=0.2).verdict is Verdict.FAIL


def test_em_grav_ratio(reg, m_e):
    r = rel.em_grav_ratio(m_e, reg.value("m_p"))
    assert r.lhs.dim == DIMENSIONLESS
    assert r.lhs.value == pytest.approx(ORACLE["em_ep"], rel=TIGHT)
    assert r.gap_dex == pytest.approx(0.64432767207835124, abs=1e-10)
    assert r.verdict is Verdict.PASS
    assert r.rhs.value == 1e40
    ee = rel.em_grav_ratio(m_e, m_e)
    assert ee.lhs.value == pytest.approx(ORACLE["em_ee"], rel=TIGHT)
    assert ee.gap_dex == pytest.approx(2.6196975668089362, abs=1e-10)
    assert ee.verdict is Verdict.FAIL


def test_space_levels(m_e):
    lvl0 = rel.space_levels(m_e, 0)
    assert lvl0.dim == LENGTH**2
    assert lvl0.value == pytest.approx(ORACLE["level0_e"], rel=TIGHT)
    for n in range(6):
        assert rel.space_levels(m_e, n).value / lvl0.value == pytest.approx(2 * n + 1, rel=1e-14)
    length, _ = rel.compton_scales(m_e)
    spacing = rel.space_levels(m_e, 3) - rel.space_levels(m_e, 2)
    assert spacing.value == pytest.approx(length.value**2, rel=1e-12)
    with pytest.raises(ValueError):
        rel.space_levels(m_e, -1)


def test_zpf_energy_round_trips(m_e, m_pi):
    length, _ = rel.compton_scales(m_pi)
    energy, m = rel.zpf_energy_of_region(length)
    assert m.dim == MASS
    assert m.value == pytest.approx(m_pi.value, rel=TIGHT)
    length, _ = rel.compton_scales(m_e)
    energy, _ = rel.zpf_energy_of_region(length)
    assert energy.value == pytest.approx(ORACLE["me_c2"], rel=TIGHT)


def test_curvature_fluctuation(reg):
    dr = rel.curvature_fluctuation(Quantity(1e-11, LENGTH))
    assert dr.dim == LENGTH**-2
    assert dr.value == pytest.approx(ORACLE["curv_1e-11"], rel=TIGHT)
    assert abs(math.log10(dr.value)) <= 2
    at_planck = rel.curvature_fluctuation(reg.value("L_star"))
    assert at_planck.value == pytest.approx(ORACLE["curv_Lstar"], rel=TIGHT)


def test_universe_mass(m_pi):
    r = rel.universe_mass(Quantity(1e80), m_pi)
    assert r.lhs.value == pytest.approx(ORACLE["N_mpi"], rel=TIGHT)
    assert r.rhs.value == 1e56
    assert r.gap_dex == pytest.approx(0.60414962398121891, abs=1e-10)
    assert r.verdict is Verdict.PASS
    with pytest.raises(QuantityError):
        rel.universe_mass(Quantity(0.0), m_pi)


def test_schwarzschild_radius():
    R = rel.schwarzschild_radius(mass(1e56))
    assert R.value == pytest.approx(ORACLE["rs_M_obs"], rel=TIGHT)
    assert dex_gap(R, Quantity(1e28, LENGTH)) == pytest.approx(0.12927705470574738, abs=1e-10)
    assert rel.schwarzschild_radius(mass(2e56)).value == 2 * R.value


def test_eddington_length():
    r = rel.eddington_length(Quantity(1e28, LENGTH), Quantity(1e80))
    assert r.lhs.value == pytest.approx(1e-12, rel=TIGHT)
    assert r.gap_dex == pytest.approx(0.84942954489733028, abs=1e-10)
    assert r.verdict is Verdict.PASS
    r4 = rel.eddington_length(Quantity(1e28, LENGTH), Quantity(4e80))
    assert r4.lhs.value == pytest.approx(r.lhs.value / 2, rel=1e-14)


def test_age_root_n(m_pi):
    T = Quantity(1e17, TIME)
    r = rel.age_root_N(T, m_pi)
    assert r.lhs.value == pytest.approx(ORACLE["age_lhs"], rel=TIGHT)
    assert r.rhs.value == pytest.approx(1e40, rel=1e-15)
    assert r.gap_dex == pytest.approx(0.62729116907357213, abs=1e-10)
    half = rel.age_root_N(Quantity(5e16, TIME), m_pi)
    assert r.lhs.value / half.lhs.value == pytest.approx(2, rel=1e-15)


def test_hubble_from_pion(reg, m_pi):
    H = rel.hubble_from_pion(m_pi)
    assert H.dim == INVERSE_TIME
    assert H.value == pytest.approx(ORACLE["H_pion"], rel=TIGHT)
    assert dex_gap(H, reg.value("H_obs")) == pytest.approx(1.0862381824268322, abs=1e-10)
    assert rel.hubble_from_pion(m_pi * 2).value == pytest.approx(8 * H.value, rel=1e-14)


def test_pion_from_hubble(reg, m_pi):
    m = rel.pion_from_hubble(Quantity(ORACLE["H_pion"], INVERSE_TIME))
    assert m.value == pytest.approx(m_pi.value, rel=1e-12)
    m_obs = rel.pion_from_hubble(reg.value("H_obs"))
    assert m_obs.value == pytest.approx(ORACLE["m_from_Hobs"], rel=1e-12)
    assert dex_gap(m_obs, m_pi) == pytest.approx(0.36207939414227741, abs=1e-10)


def test_cosmological_constant(reg, m_pi):
    lam = rel.cosmological_constant(reg.value("H_obs"))
    assert lam.dim == TIME**-2
    assert lam.value == pytest.approx(ORACLE["lambda_obs"], rel=TIGHT)
    lam25 = rel.cosmological_constant(rel.hubble_from_pion(m_pi))
    assert lam25.value == pytest.approx(ORACLE["lambda_pion"], rel=TIGHT)


def test_cmb_wavelength():
    lam = rel.cmb_wavelength(Quantity(1e-11, TIME))
    assert lam.value == pytest.approx(ORACLE["cmb"], rel=TIGHT)
    assert dex_gap(lam, Quantity(0.3, LENGTH)) <= 0.1


def test_age_from_relation31(m_pi):
    T = rel.age_from_relation31(m_pi)
    assert T.dim == TIME
    assert T.value == pytest.approx(ORACLE["T31"], rel=TIGHT)
    assert dex_gap(T, Quantity(1e17, TIME)) == pytest.approx(0.74329403528393614, abs=1e-10)
    H = rel.hubble_from_pion(m_pi)
    assert (T * 2 * H).value == pytest.approx(1.0, rel=1e-15)


def test_thermal_spacing_equals_compton(m_e):
    s = rel.thermal_spacing(m_e)
    assert s.value == pytest.approx(ORACLE["compton_e_len"], rel=TIGHT)
    assert s.value == pytest.approx(rel.compton_scales(m_e)[0].value, rel=1e-15)


@pytest.mark.parametrize(
    "computed, quoted",
    [
        (lambda r: rel.compton_scales(r.value("m_e"))[0].value, 3.861e-11),
        (lambda r: rel.compton_scales(r.value("m_pi"))[1].value, 4.718e-24),
        (lambda r: rel.space_levels(r.value("m_e"), 0).value, 7.45e-22),
        (lambda r: rel.hubble_from_pion(r.value("m_pi")).value, 2.77e-17),
        (lambda r: rel.age_from_relation31(r.value("m_pi")).value, 1.805e16),
        (lambda r: rel.pion_from_hubble(r.value("H_obs")).value, 1.08e-25),
    ],
)
def test_matches_rounded_quoted_values(reg, computed, quoted):
    # quoted figures carry 3-4 significant digits
    assert computed(reg) == pytest.approx(quoted, rel=2e-3)


# -- catalog ---------------------------------------------------------------


def test_run_all_defaults_pass(reg):
    reports = rel.run_all()
    assert len(reports) >= 14
    assert all(r.verdict is Verdict.PASS for r in reports), [r.relation_id for r in reports if not r.passed]
    assert len({r.relation_id for r in reports}) == len(reports)
    for r in reports:
        assert r.lhs.dim == r.rhs.dim
        assert r.paper_anchor
        assert (r.verdict is Verdict.PASS) == (r.gap_dex <= r.tolerance_dex)


def test_run_all_override_only_changes_target():
    base = rel.run_all()
    tweaked = rel.run_all({"em_grav_ratio": 0.1})
    for a, b in zip(base, tweaked):
        if a.relation_id == "em_grav_ratio":
            assert b.verdict is Verdict.FAIL and b.tolerance_dex == 0.1
        else:
            assert a == b


def test_run_all_empty_override_identical():
    assert rel.run_all({}) == rel.run_all()


@pytest.mark.parametrize("bad", [{"no_such": 1.0}, {"em_grav_ratio": 0.0}, {"em_grav_ratio": -1.0}])
def test_run_all_bad_overrides(bad):
    with pytest.raises(ConfigError):
        rel.run_all(bad)


def test_run_all_order_fixed():
    assert [r.relation_id for r in rel.run_all()] == [e.relation_id for e in rel.CATALOG]


def test_report_contains_both_cosmological_constants():
    (lam,) = [r for r in rel.run_all() if r.relation_id == "cosmological_constant"]
    assert lam.lhs.value == pytest.approx(ORACLE["lambda_pion"], rel=TIGHT)
    assert lam.rhs.value == pytest.approx(ORACLE["lambda_obs"], rel=TIGHT)


def test_consistency_chain(reg, m_pi):
    N = reg.value("N_obs")
    M = rel.universe_mass(N, m_pi).lhs
    length = rel.schwarzschild_radius(M) / N ** Fraction(1, 2)
    assert dex_gap(length, rel.compton_scales(m_pi)[0]) <= 1.5


# -- properties -------------------------------------------------------------

masses = st.floats(min_value=1e-30, max_value=1e-20)
rates = st.floats(min_value=1e-25, max_value=1e-10)


@given(masses)
def test_round_trip_property(m):
    back = rel.pion_from_hubble(rel.hubble_from_pion(mass(m)))
    assert back.value == pytest.approx(m, rel=1e-12)


@given(masses)
def test_relation31_identity_property(m):
    q = mass(m)
    product = rel.age_from_relation31(q) * 2 * rel.hubble_from_pion(q)
    assert product.dim == DIMENSIONLESS
    assert product.value == pytest.approx(1.0, rel=1e-14)


INCREASING = [
    (rel.schwarzschild_radius, MASS),
    (rel.hubble_from_pion, MASS),
    (rel.pion_from_hubble, INVERSE_TIME),
    (rel.cosmological_constant, INVERSE_TIME),
    (rel.cmb_wavelength, TIME),
]
DECREASING = [
    (lambda q: rel.compton_scales(q)[0], MASS),
    (rel.thermal_spacing, MASS),
    (rel.age_from_relation31, MASS),
    (rel.curvature_fluctuation, LENGTH),
    (rel.mass_from_cutoff, LENGTH),
]


@pytest.mark.parametrize("fn, dim", INCREASING + DECREASING)
@given(x=st.floats(min_value=1e-25, max_value=1e-12), factor=st.floats(min_value=1.001, max_value=100))
def test_monotone(fn, dim, x, factor):
    lo, hi = fn(Quantity(x, dim)).value, fn(Quantity(x * factor, dim)).value
    if (fn, dim) in INCREASING:
        assert hi > lo
    else:
        assert hi < lo
