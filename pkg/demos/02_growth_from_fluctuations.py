"""
Growth of the particle number by sqrt(N) fluctuations
=====================================================

dN/dt = sqrt(N)/tau, with tau the pion Compton time. The closed form is
sqrt(N) = sqrt(N0) + t/(2 tau); here it is compared with RK4 and with a
Poisson ensemble.
"""

import numpy as np

from fluctuaverse.constants import default_registry
from fluctuaverse.growth import (
    GrowthParams,
    Mode,
    check_acceleration,
    exact_root_n,
    fluctuation_time,
    integrate,
    simulate_stochastic,
)

reg = default_registry()
m = reg.value("m_pi")
tau = fluctuation_time(m, reg)
print(f"tau = {tau:.4e} s")

# After 1e17 s the closed form gives sqrt(N) ~ 1e40.
print(f"sqrt(N) at 1e17 s: {exact_root_n(1e17, m, reg).value:.4e}")

# RK4 against the closed form.
for dt in (4.0, 2.0, 1.0):
    last = integrate(GrowthParams(m, 1.0, 1e4 * tau, dt * tau, Mode.RK4, stride=10**6), reg)[-1]
    exact = (1 + 1e4 / 2) ** 2
    print(f"dt = {dt} tau   rel err {abs(last.N - exact) / exact:.2e}")

# The radius R = G m N / c^2 accelerates as H^2 R / 2.
pts = integrate(GrowthParams(m, 0.0, 1e17, 1e15), reg)
print(f"max |R'' - H^2 R/2| / (H^2 R/2) = {check_acceleration(pts):.1e}")
print(f"H_local today = {pts[-1].H_local:.3e} s^-1")

# A seeded Poisson ensemble fluctuates around the closed form.
ens = simulate_stochastic(
    GrowthParams(m, 1e4, 20 * tau, 0.1 * tau, Mode.STOCHASTIC, seed=3, ensemble_size=128, stride=20), reg
)
target = np.array([exact_root_n(t, m, reg, N0=1e4).value for t in ens.times])
# the first stored point is N0 for every member, so it has no spread
z = (ens.mean_root_n()[1:] - target[1:]) / ens.sem_root_n()[1:]
print("z-scores of the ensemble mean sqrt(N):", np.round(z, 2))
