"""Pure states and bases used by the two-qubit teleportation scheme.

Four-qubit vectors are laid out with the sender's pair first and the
receiver's pair last (A3 A4 B1 B2 for resource states).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .qmat import tensor

HALF_PI = math.pi / 2

_PAULI = (
    np.eye(2, dtype=complex),
    np.array([[0, 1], [1, 0]], dtype=complex),
    np.array([[0, 1], [-1, 0]], dtype=complex),  # i * sigma_y, kept real
    np.array([[1, 0], [0, -1]], dtype=complex),
)


@dataclass(frozen=True)
class AnglePair:
    """Angle differences (theta12, phi12) labelling a four-qubit resource state."""

    theta12: float
    phi12: float

    def __post_init__(self):
        for name in ("theta12", "phi12"):
            value = getattr(self, name)
            if not -HALF_PI < value < HALF_PI:
                raise ValueError(f"{name}={value!r} outside (-pi/2, pi/2)")

    def as_tuple(self) -> tuple[float, float]:
        return (self.theta12, self.phi12)


def _angles(angles) -> AnglePair:
    if isinstance(angles, AnglePair):
        return angles
    theta12, phi12 = angles
    return AnglePair(float(theta12), float(phi12))


def pauli(mu: int) -> np.ndarray:
    """u^mu: identity, sigma_x, i*sigma_y, sigma_z for mu = 0..3."""
    if mu not in (0, 1, 2, 3):
        raise IndexError(f"Pauli index must be 0..3, got {mu!r}")
    return _PAULI[mu].copy()


def pauli_pair(mu: int, nu: int) -> np.ndarray:
    """U^{mu nu} = u^mu (x) u^nu."""
    return tensor(pauli(mu), pauli(nu))


def bell(mu: int) -> np.ndarray:
    """Bell vector (u^mu (x) I)(|00> + |11>)/sqrt(2)."""
    phi_plus = np.array([1, 0, 0, 1], dtype=complex) / math.sqrt(2)
    return tensor(pauli(mu), np.eye(2)) @ phi_plus


def s_t_matrices(theta1: float, phi1: float, theta2: float, phi2: float) -> tuple[np.ndarray, np.ndarray]:
    """The real orthogonal 4x4 basis-change matrices S(theta1, phi1) and T(theta2, phi2)."""
    c1, s1 = math.cos(theta1), math.sin(theta1)
    cp1, sp1 = math.cos(phi1), math.sin(phi1)
    c2, s2 = math.cos(theta2), math.sin(theta2)
    cp2, sp2 = math.cos(phi2), math.sin(phi2)
    S = np.array([
        [c1, 0, 0, -s1],
        [0, cp1, -sp1, 0],
        [0, sp1, cp1, 0],
        [s1, 0, 0, c1],
    ])
    T = np.array([
        [c2, 0, 0, -s2],
        [0, sp2, cp2, 0],
        [0, cp2, -sp2, 0],
        [s2, 0, 0, c2],
    ])
    return S, T


def upsilon_from_bases(theta1: float, phi1: float, theta2: float, phi2: float) -> np.ndarray:
    """(1/2) sum_J S|J> (x) T|J> for explicit, ungauged angles."""
    S, T = s_t_matrices(theta1, phi1, theta2, phi2)
    # sum_J S[:, J] (x) T[:, J] reshaped is the matrix S T^T.
    return (S @ T.T).reshape(-1).astype(complex) / 2


def upsilon00(angles) -> np.ndarray:
    """Resource vector |Upsilon^00(theta12, phi12)> on A3 A4 B1 B2.

    Only angle differences matter, so the gauge theta2 = phi2 = 0 is used.
    """
    a = _angles(angles)
    return upsilon_from_bases(a.theta12, a.phi12, 0.0, 0.0)


def upsilon00_batch(theta12: np.ndarray, phi12: np.ndarray) -> np.ndarray:
    """Rows of |Upsilon^00> for arrays of angle differences (no range check)."""
    t = np.asarray(theta12, dtype=float)
    p = np.asarray(phi12, dtype=float)
    c, s, cp, sp = np.cos(t), np.sin(t), np.cos(p), np.sin(p)
    S = np.zeros(t.shape + (4, 4))
    S[..., 0, 0] = S[..., 3, 3] = c
    S[..., 0, 3], S[..., 3, 0] = -s, s
    S[..., 1, 1] = S[..., 2, 2] = cp
    S[..., 1, 2], S[..., 2, 1] = -sp, sp
    _, T0 = s_t_matrices(0.0, 0.0, 0.0, 0.0)
    return (S @ T0.T).reshape(t.shape + (16,)).astype(complex) / 2


def upsilon_munu(mu: int, nu: int, angles) -> np.ndarray:
    """(I (x) U^{mu nu}^dagger) |Upsilon^00>, the receiver pair rotated."""
    op = tensor(np.eye(4), pauli_pair(mu, nu).conj().T)
    return op @ upsilon00(angles)


def upsilon_basis(angles) -> np.ndarray:
    """All 16 vectors |Upsilon^{mu nu}> as rows, row index 4*mu + nu."""
    return np.array([upsilon_munu(mu, nu, angles) for mu in range(4) for nu in range(4)])


def pi_basis(angles) -> list[np.ndarray]:
    """Sender's 16-outcome measurement basis on A1 A2 A3 A4, index 4*mu + nu.

    |Pi^00> = (1/2) sum_K T|K>_{A1A2} (x) S|K>_{A3A4}, and
    |Pi^{mu nu}> = (U^{mu nu} (x) I)|Pi^00>.
    """
    a = _angles(angles)
    S, T = s_t_matrices(a.theta12, a.phi12, 0.0, 0.0)
    pi00 = (T @ S.T).reshape(-1).astype(complex) / 2
    return [tensor(pauli_pair(mu, nu), np.eye(4)) @ pi00 for mu in range(4) for nu in range(4)]


def input_state(epsilon: float) -> np.ndarray:
    """cos(eps)|00> + sin(eps)|11> for 0 <= eps <= pi/4."""
    if not 0.0 <= epsilon <= math.pi / 4 + 1e-15:
        raise ValueError(f"epsilon={epsilon!r} outside [0, pi/4]")
    return np.array([math.cos(epsilon), 0, 0, math.sin(epsilon)], dtype=complex)


def haar_random_state(n_qubits: int, seed=None, size: int | None = None) -> np.ndarray:
    """Haar-random pure state(s) on ``n_qubits`` qubits.

    ``seed`` is an int or a :class:`numpy.random.Generator` (PCG64 for ints).
    With ``size`` a batch of shape ``(size, 2**n_qubits)`` is returned.
    """
    if n_qubits < 1:
        raise ValueError("n_qubits must be >= 1")
    rng = np.random.default_rng(seed)
    dim = 2**n_qubits
    shape = (dim,) if size is None else (size, dim)
    z = rng.standard_normal(shape + (2,))
    psi = z[..., 0] + 1j * z[..., 1]
    return psi / np.linalg.norm(psi, axis=-1, keepdims=True)
