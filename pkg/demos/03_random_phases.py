"""
Random phases and coarse graining
=================================

Averaging over independent phases kills the cross terms c_n c_m*, so a
coherent expectation value collapses to the weighted diagonal mean.
"""

import numpy as np

from fluctuaverse.ensemble import (
    SamplerParams,
    coarse_grain,
    expectation,
    particlet_count_sampler,
    phase_averaged_expectation,
    phase_correlation,
    random_instance,
)

S = 100_000
print("<c_2 c_2*> =", phase_correlation(2, 2, S, seed=0).real)
print(f"|<c_0 c_1*>| = {abs(phase_correlation(0, 1, S, seed=0)):.2e}  (1/sqrt(S) = {S ** -0.5:.2e})")

rng = np.random.default_rng(5)
for i in range(5):
    inst = random_instance(int(rng.integers(4, 9)), rng)
    avg = phase_averaged_expectation(inst, 20_000, seed=i)
    print(f"n={inst.state.energies.size}  coherent {avg.coherent_mean:+.4f} +- {avg.standard_error:.4f}"
          f"   incoherent {avg.incoherent:+.4f}   z={avg.z_score:.2f}")

# Coarse graining keeps only the states inside an energy window.
energies = np.linspace(0.5, 9.5, 10)
window = coarse_grain(energies, 2.0, 4.0)
print("occupancy:", window.occupancy)
print("mean energy in window:", expectation(window, energies))

# Counts distributed as exp(-mu^2 N^2) spread over about 1/mu.
for mu in (0.1, 1.0, 10.0):
    s = particlet_count_sampler(SamplerParams(mu=mu, seed=1))
    print(f"mu={mu:5}  rms*mu = {s.rms * mu:.3f}   std = {s.std:.4g} (theory {s.theory['std']:.4g})")
