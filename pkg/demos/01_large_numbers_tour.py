"""
A tour of the large-number relations
====================================

Quantities carry exact CGS exponents, so every comparison below is between
like dimensions. Gaps are in dex: |log10 a - log10 b|.
"""

from fluctuaverse import relations as rel
from fluctuaverse.constants import default_registry
from fluctuaverse.quantity import LENGTH, MASS, Quantity

reg = default_registry()
m_e, m_p, m_pi = reg.value("m_e"), reg.value("m_p"), reg.value("m_pi")

# Dimensions travel with the numbers. Charge is g^1/2 cm^3/2 s^-1.
e = reg.value("e")
print("e       =", e.value, f"[{e.dim}]")
print("e^2     =", (e**2).value, f"[{(e**2).dim}]")

# Electric over gravitational attraction of an electron and a proton.
r = rel.em_grav_ratio(m_e, m_p)
print(f"e^2/(G m_e m_p) = {r.lhs.value:.3e}   gap to 1e40: {r.gap_dex:.2f} dex")

# Mass and gravitational radius of a universe of 1e80 pions.
M = reg.value("N_obs") * m_pi
R = rel.schwarzschild_radius(Quantity(1e56, MASS))
print(f"N m_pi = {M.value:.3e} g,   G M/c^2 = {R.value:.3e} cm")

# The pion mass fixes a Hubble rate, and the rate fixes the mass back.
H = rel.hubble_from_pion(m_pi)
print(f"H(m_pi) = {H.value:.3e} s^-1  vs  H_obs = {reg.value('H_obs').value:.3e}")
print(f"m_pi from H_obs = {rel.pion_from_hubble(reg.value('H_obs')).value:.3e} g")
print(f"Lambda ~ H^2: {rel.cosmological_constant(H).value:.3e} and "
      f"{rel.cosmological_constant(reg.value('H_obs')).value:.3e} s^-2")

# A naked Kerr-Newman electron: the horizon is complex.
h = rel.kerr_newman_horizon(m_e, e, reg.value("hbar") / 2)
print(f"horizon = {h.real_part.value:.2e} + i {h.imag_part.value:.4e} cm")

# The whole catalog in one pass.
for rep in rel.run_all():
    print(f"  {rep.relation_id:24s} gap {rep.gap_dex:7.3f} <= {rep.tolerance_dex:<4} {rep.verdict}")
