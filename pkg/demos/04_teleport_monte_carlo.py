"""
Average teleportation fidelity by sampling
==========================================

"""

import math

from noisy_teleport import analysis as an
from noisy_teleport.channels import big_xi, xi
from noisy_teleport.measures import fidelity_from_F, fidelity_from_G, singlet_fraction
from noisy_teleport.qmat import ket_to_dm
from noisy_teleport.states import haar_random_state
from noisy_teleport.teleport import avg_fidelity_mc, avg_fidelity_mc_T0, protocol_E0

# The full measure-and-correct protocol agrees with the channel picture.
alpha, beta, q = 0.1 * math.pi, 0.2, 0.25
Xi = big_xi(alpha, beta, q)
psi = haar_random_state(2, seed=1)
dist = protocol_E0(Xi, (alpha, beta), psi)
print("outcome probabilities:", dist.probabilities.round(4))
print("fidelity of the averaged output:", (psi.conj() @ dist.mixture() @ psi).real)

# Haar averages against the closed forms.
mean, err = avg_fidelity_mc(Xi, (alpha, beta), 100_000, seed=7)
print(f"two qubits: {mean:.5f} +/- {err:.5f}   closed {fidelity_from_G(an.gsf_xi_closed(q)):.5f}")
mean, err = avg_fidelity_mc_T0(xi(q), 100_000, seed=8)
print(f"one qubit:  {mean:.5f} +/- {err:.5f}   closed {fidelity_from_F(singlet_fraction(xi(q))):.5f}")
