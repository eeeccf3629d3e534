"""Thermal states, entropy and the variational role of the free energy.

Shows the building blocks behind the work quantifier: Gibbs states at several
temperatures, the T = 0 ground-projector limit, and the fact that the thermal
state minimizes F(rho, H) = Tr(H rho) - T S(rho) over all states.
"""
import numpy as np

from thermowork import (
    SIGMA_Z,
    Temperature,
    free_energy,
    gibbs_state,
    von_neumann_entropy,
)

h = 0.5 * SIGMA_Z

print("qubit H = sigma_z/2, populations and entropy vs temperature")
for t in (0.0, 0.5, 1.0, 10.0):
    rho = gibbs_state(h, Temperature(t)).state
    s = von_neumann_entropy(rho)
    print(f"  k_B T = {t:5.1f}: p_excited = {rho[0, 0].real:.5f}, S = {s:.5f} nats")

print("\nGibbs minimality at k_B T = 1 (random states never beat the thermal one)")
t = Temperature(1.0)
f_th = free_energy(gibbs_state(h, t).state, h, t)
rng = np.random.default_rng(1)
worst = np.inf
for _ in range(1000):
    m = rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2))
    rho = m @ m.conj().T
    rho /= np.trace(rho).real
    worst = min(worst, free_energy(rho, h, t) - f_th)
print(f"  F(thermal) = {f_th:.6f}, smallest excess over 1000 random states = {worst:.6f}")
