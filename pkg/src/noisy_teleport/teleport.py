"""Teleportation through mixed resources.

Two views of the same process are provided: the effective Pauli-mixture
channels (single-qubit and two-qubit) and an explicit simulation of the
two-qubit protocol, with the sender's 16-outcome measurement and the
receiver's correction. The explicit simulation is what the channel formula is
tested against.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .qmat import TOL, check_state_vector, dagger, ket_to_dm
from .states import bell, haar_random_state, pauli, pauli_pair, pi_basis, upsilon_basis

# Receiver's correction after outcome 4*mu + nu is U^{mu nu}. U and U^dagger
# differ by a global sign only, so this choice is unique up to phase; it is the
# one that returns the input exactly for the ideal resource.
RECOVERY = tuple(pauli_pair(mu, nu) for mu in range(4) for nu in range(4))
_PAULIS_1 = tuple(pauli(mu) for mu in range(4))


def bell_weights(chi: np.ndarray) -> np.ndarray:
    """<Psi^mu| chi |Psi^mu> for mu = 0..3."""
    chi = np.asarray(chi, dtype=complex)
    if chi.shape != (4, 4):
        raise ValueError(f"resource must be 4x4, got {chi.shape}")
    return np.array([np.real(bell(mu).conj() @ chi @ bell(mu)) for mu in range(4)])


def upsilon_weights(Xi: np.ndarray, angles) -> np.ndarray:
    """<Upsilon^{mu nu}| Xi |Upsilon^{mu nu}>, index 4*mu + nu."""
    Xi = np.asarray(Xi, dtype=complex)
    if Xi.shape != (16, 16):
        raise ValueError(f"resource must be 16x16, got {Xi.shape}")
    basis = upsilon_basis(angles)
    return np.real(np.einsum("ki,ij,kj->k", basis.conj(), Xi, basis))


def depolarizing_channel_T0(chi: np.ndarray, rho_in: np.ndarray) -> np.ndarray:
    """Standard one-qubit teleportation through the two-qubit resource ``chi``."""
    rho_in = np.asarray(rho_in, dtype=complex)
    if rho_in.shape != (2, 2):
        raise ValueError(f"input must be a 2x2 density matrix, got {rho_in.shape}")
    w = bell_weights(chi)
    return sum(w[mu] * dagger(u) @ rho_in @ u for mu, u in enumerate(_PAULIS_1))


def depolarizing_bichannel_E0(Xi: np.ndarray, angles, rho_in: np.ndarray) -> np.ndarray:
    """Two-qubit teleportation through ``Xi`` with the sender measuring at ``angles``."""
    rho_in = np.asarray(rho_in, dtype=complex)
    if rho_in.shape != (4, 4):
        raise ValueError(f"input must be a 4x4 density matrix, got {rho_in.shape}")
    w = upsilon_weights(Xi, angles)
    return sum(w[k] * dagger(U) @ rho_in @ U for k, U in enumerate(RECOVERY))


@dataclass(frozen=True)
class OutcomeDistribution:
    """Per-outcome probabilities and corrected receiver states (index 4*mu + nu).

    Outcomes with probability below ``TOL.probability`` carry a zero matrix.
    """

    probabilities: np.ndarray
    conditional_outputs: np.ndarray

    def mixture(self) -> np.ndarray:
        keep = self.probabilities >= TOL.probability
        return np.einsum("k,kij->ij", self.probabilities[keep], self.conditional_outputs[keep])


def protocol_E0(Xi: np.ndarray, angles, psi: np.ndarray) -> OutcomeDistribution:
    """Simulate the protocol on the joint state A1 A2 (input) A3 A4 B1 B2 (resource)."""
    Xi = np.asarray(Xi, dtype=complex)
    if Xi.shape != (16, 16):
        raise ValueError(f"resource must be 16x16, got {Xi.shape}")
    psi = check_state_vector(psi)
    if psi.shape != (4,):
        raise ValueError("input must be a two-qubit state vector")
    joint = np.kron(ket_to_dm(psi), Xi).reshape(16, 4, 16, 4)
    probs = np.zeros(16)
    outputs = np.zeros((16, 4, 4), dtype=complex)
    for k, v in enumerate(pi_basis(angles)):
        # (<Pi| (x) I) joint (|Pi> (x) I) on the receiver's pair.
        sigma = np.einsum("a,abcd,c->bd", v.conj(), joint, v)
        p = float(np.real(np.trace(sigma)))
        probs[k] = p
        if p >= TOL.probability:
            R = RECOVERY[k]
            outputs[k] = R @ sigma @ dagger(R) / p
    return OutcomeDistribution(probs, outputs)


def _mean_and_stderr(samples: np.ndarray) -> tuple[float, float]:
    n = samples.size
    return float(samples.mean()), float(samples.std(ddof=1) / np.sqrt(n))


def _pauli_mixture_fidelities(weights, unitaries, states) -> np.ndarray:
    """<psi| sum_k w_k U_k^dagger |psi><psi| U_k |psi> for each row of ``states``."""
    fid = np.zeros(states.shape[0])
    for w, U in zip(weights, unitaries):
        amp = np.einsum("ni,ij,nj->n", states.conj(), dagger(U), states)
        fid += w * np.abs(amp) ** 2
    return fid


def avg_fidelity_mc(Xi: np.ndarray, angles, n_samples: int, seed) -> tuple[float, float]:
    """Monte Carlo average fidelity of the two-qubit channel over Haar inputs.

    Returns ``(mean, standard_error)``. One PCG64 stream seeded by ``seed``
    produces all samples in index order.
    """
    if n_samples < 100:
        raise ValueError("n_samples must be at least 100")
    states = haar_random_state(2, seed, size=n_samples)
    return _mean_and_stderr(_pauli_mixture_fidelities(upsilon_weights(Xi, angles), RECOVERY, states))


def avg_fidelity_mc_T0(chi: np.ndarray, n_samples: int, seed) -> tuple[float, float]:
    """Monte Carlo average fidelity of one-qubit teleportation through ``chi``."""
    if n_samples < 100:
        raise ValueError("n_samples must be at least 100")
    states = haar_random_state(1, seed, size=n_samples)
    return _mean_and_stderr(_pauli_mixture_fidelities(bell_weights(chi), _PAULIS_1, states))
