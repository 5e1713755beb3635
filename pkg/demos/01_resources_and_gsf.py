"""
Noisy four-qubit resources and their generalized singlet fraction
=================================================================

"""

import math

import numpy as np

from noisy_teleport import analysis as an
from noisy_teleport.channels import big_xi, big_xi_prime
from noisy_teleport.measures import fidelity_from_G, generalized_singlet_fraction

# The resource is labelled by two angle differences. Damping one pair with
# strength q gives Xi; damping the other pair as well gives Xi'.
alpha, beta = 0.1 * math.pi, 0.0

for q in (0.0, 0.01, 0.05, 0.25, 1.0):
    g = generalized_singlet_fraction(big_xi(alpha, beta, q), extra_starts=[(alpha, beta)])
    gp = generalized_singlet_fraction(big_xi_prime(alpha, beta, q))
    print(f"q = {q:5.2f}   G[Xi] = {g.value:.6f} (closed form {an.gsf_xi_closed(q):.6f})"
          f"   G[Xi'] = {gp.value:.6f}   fidelity {fidelity_from_G(g.value):.4f} -> {fidelity_from_G(gp.value):.4f}")

# The optimum for Xi sits at the resource's own angles; for Xi' it moves.
res = generalized_singlet_fraction(big_xi_prime(alpha, beta, 0.01))
print("optimal angles for Xi' (units of pi):", np.round(np.array(res.angles) / math.pi, 5))
