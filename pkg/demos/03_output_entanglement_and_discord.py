"""
Entanglement and discord of a teleported two-qubit state
========================================================

"""

import math

import numpy as np

from noisy_teleport import analysis as an

alpha, q = 0.1 * math.pi, 0.01
angles = an.xi_prime_optimum(alpha, 0.0, q).angles

# Teleport cos(eps)|00> + sin(eps)|11> through both resources.
print("  eps     N[Xi]    N[Xi']   D[Xi]    D[Xi']")
for eps in np.linspace(0, math.pi / 4, 7):
    out = an.xi_output(alpha, 0.0, q, eps)
    out_p = an.xi_prime_output(alpha, 0.0, q, eps, angles)
    print(f"{eps:6.3f}  {an.output_negativity(out):.5f}  {an.output_negativity(out_p):.5f}"
          f"  {an.output_discord(out):.5f}  {an.output_discord(out_p):.5f}")

# Negativity never improves, but discord does for weakly entangled inputs.
print("discord gain vanishes at eps =", round(an.epsilon_threshold(alpha, q), 6))
