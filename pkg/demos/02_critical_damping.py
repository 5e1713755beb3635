"""
Where extra damping stops helping
=================================

"""

import math

from noisy_teleport import analysis as an

# For small q the second damping raises G. The crossing point is q_crit.
for frac in (0.0, 0.05, 0.1, 0.15):
    qc = an.q_crit(frac * math.pi)
    print(f"alpha = {frac:.2f} pi   q_crit = {qc:.7f}")

# At alpha = 0 the crossing solves (3 + sqrt q)^2 / 16 = (5 + 2q + q^2) / 8.
qc = an.q_crit(0.0)
print("closed forms at q_crit(0):", an.gsf_xi_closed(qc), an.gsf_xi_prime_closed(qc))

# Larger alpha leaves no crossing in (0, 0.5); that is reported as an error.
try:
    an.q_crit(0.3 * math.pi)
except ArithmeticError as exc:
    print("alpha = 0.3 pi:", exc)
