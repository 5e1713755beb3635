"""Figures of merit: entropies, negativity, singlet fractions, fidelities, discord.

All logarithms are base 2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple, Sequence

import numpy as np

from .optimize import AngleResult, grid_axis, maximize_angles
from .qmat import TOL, herm_eigenvalues, num_qubits, partial_trace, partial_transpose
from .states import HALF_PI, bell, upsilon00, upsilon00_batch

# Search box for the resource angles; the open interval is approached to within this margin.
ANGLE_MARGIN = 1e-6
G_GRID = 64
DISCORD_GRID = 48


def _xlogx(p: np.ndarray) -> np.ndarray:
    p = np.clip(np.asarray(p, dtype=float), 0.0, 1.0)
    out = np.zeros_like(p)
    nz = p > 0
    out[nz] = p[nz] * np.log2(p[nz])
    return out


def shannon(probs) -> float:
    return float(-_xlogx(probs).sum())


def entropy(rho: np.ndarray) -> float:
    """von Neumann entropy in bits; eigenvalues are clipped to [0, 1]."""
    return shannon(herm_eigenvalues(rho))


def _check_two_qubit(rho: np.ndarray, what: str = "state") -> np.ndarray:
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (4, 4):
        raise ValueError(f"{what} must be a 4x4 two-qubit matrix, got {rho.shape}")
    return rho


def _bipartition(n: int, part_a: Sequence[int] | None) -> tuple[list[int], list[int]]:
    if part_a is None:
        if n % 2:
            raise ValueError("default cut needs an even number of qubits")
        part_a = range(n // 2)
    a = sorted(set(part_a))
    if len(a) != len(list(part_a)) or not a or len(a) == n or a[0] < 0 or a[-1] >= n:
        raise ValueError(f"invalid bipartition {list(part_a)} of {n} qubits")
    return a, [i for i in range(n) if i not in a]


def mutual_information(rho: np.ndarray, part_a: Sequence[int] | None = None) -> float:
    """S[rho_A] + S[rho_B] - S[rho_AB]; ``part_a`` defaults to the first half of the qubits."""
    a, b = _bipartition(num_qubits(rho), part_a)
    return entropy(partial_trace(rho, a)) + entropy(partial_trace(rho, b)) - entropy(rho)


def negativity(rho: np.ndarray, part_a: Sequence[int] | None = None) -> float:
    """max(0, -2 * sum of negative eigenvalues of the partial transpose on side B)."""
    _, b = _bipartition(num_qubits(rho), part_a)
    ev = herm_eigenvalues(partial_transpose(rho, b))
    return max(0.0, -2.0 * float(ev[ev < 0].sum()))


def singlet_fraction(chi: np.ndarray) -> float:
    chi = _check_two_qubit(chi)
    phi = bell(0)
    return float(np.real(phi.conj() @ chi @ phi))


def su2(a: float, b: float, c: float) -> np.ndarray:
    """Rz(a) Ry(b) Rz(c)."""
    rz = lambda t: np.diag([np.exp(-0.5j * t), np.exp(0.5j * t)])
    ry = np.array([[math.cos(b / 2), -math.sin(b / 2)], [math.sin(b / 2), math.cos(b / 2)]])
    return rz(a) @ ry @ rz(c)


def max_singlet_fraction(chi: np.ndarray) -> AngleResult:
    """Singlet fraction maximized over a local unitary on the second qubit.

    The returned angles (a, b, c) give the optimal u = Rz(a) Ry(b) Rz(c).
    """
    chi = _check_two_qubit(chi)
    phi = bell(0)

    def objective(x):
        v = np.kron(np.eye(2), su2(*x).conj().T) @ phi
        return float(np.real(v.conj() @ chi @ v))

    two_pi = 2 * math.pi
    axes = [grid_axis(0, two_pi, 8, endpoint=False), grid_axis(0, two_pi, 8, endpoint=False),
            grid_axis(0, two_pi, 8, endpoint=False)]
    return maximize_angles(objective, axes, bounds=[(-two_pi, 2 * two_pi)] * 3)


def _check_fraction(x: float, name: str) -> float:
    if not -1e-12 <= x <= 1 + 1e-12:
        raise ValueError(f"{name}={x!r} outside [0, 1]")
    return x


def fidelity_from_F(F: float) -> float:
    """Average single-qubit teleportation fidelity 1/3 + 2F/3."""
    return 1 / 3 + 2 * _check_fraction(F, "F") / 3


def fidelity_from_G(G: float) -> float:
    """Average two-qubit teleportation fidelity 1/5 + 4G/5."""
    return 1 / 5 + 4 * _check_fraction(G, "G") / 5


def _check_four_qubit(Xi: np.ndarray) -> np.ndarray:
    Xi = np.asarray(Xi, dtype=complex)
    if Xi.shape != (16, 16):
        raise ValueError(f"resource must be a 16x16 four-qubit matrix, got {Xi.shape}")
    return Xi


def overlap_G(Xi: np.ndarray, angles) -> float:
    """<Upsilon^00(angles)| Xi |Upsilon^00(angles)>."""
    v = upsilon00(angles)
    return float(np.real(v.conj() @ _check_four_qubit(Xi) @ v))


def generalized_singlet_fraction(Xi: np.ndarray, extra_starts: Sequence[Sequence[float]] = ()) -> AngleResult:
    """Maximum of ``overlap_G`` over (theta12, phi12) in the open square (-pi/2, pi/2)^2.

    ``extra_starts`` adds refinement starting points (warm starts) to the grid seeds.
    """
    Xi = _check_four_qubit(Xi)
    lim = HALF_PI - ANGLE_MARGIN
    bounds = [(-lim, lim)] * 2

    def objective(x):
        v = upsilon00_batch(x[0], x[1])
        return float(np.real(v.conj() @ Xi @ v))

    def batch(pts):
        v = upsilon00_batch(pts[:, 0], pts[:, 1])
        return np.real(np.einsum("mi,ij,mj->m", v.conj(), Xi, v))

    axis = grid_axis(-lim, lim, G_GRID)
    return maximize_angles(objective, [axis, axis], bounds=bounds, batch_f=batch, extra_starts=extra_starts)


@dataclass(frozen=True)
class MeasurementAngles:
    """Projective measurement |pi0> = cos(theta)|0> + e^{i phi} sin(theta)|1>."""

    theta: float
    phi: float

    def __post_init__(self):
        if not -math.pi <= self.theta <= math.pi:
            raise ValueError(f"theta={self.theta!r} outside [-pi, pi]")
        if not 0.0 <= self.phi <= 2 * math.pi:
            raise ValueError(f"phi={self.phi!r} outside [0, 2pi]")


def measurement_vectors(theta, phi) -> tuple[np.ndarray, np.ndarray]:
    """|pi0>, |pi1> as arrays of shape (..., 2)."""
    theta, phi = np.asarray(theta, dtype=float), np.asarray(phi, dtype=float)
    e = np.exp(1j * phi)
    pi0 = np.stack([np.cos(theta) + 0j, e * np.sin(theta)], axis=-1)
    pi1 = np.stack([np.sin(theta) / e, -np.cos(theta) + 0j], axis=-1)
    return pi0, pi1


def _conditional_entropy_term(rho: np.ndarray, theta, phi) -> np.ndarray:
    """sum_m p_m S[rho_{A|m}] for measurements on qubit B, vectorized over angles."""
    r = rho.reshape(2, 2, 2, 2)  # a, b, a', b'
    total = 0.0
    for vec in measurement_vectors(theta, phi):
        # Unnormalized 2x2 state of A after projecting B onto vec.
        m = np.einsum("...b,abcd,...d->...ac", vec.conj(), r, vec)
        p = np.real(m[..., 0, 0] + m[..., 1, 1])
        det = np.real(m[..., 0, 0] * m[..., 1, 1] - m[..., 0, 1] * m[..., 1, 0])
        disc = np.sqrt(np.maximum(p * p - 4 * det, 0.0))
        lam = np.stack([(p + disc) / 2, (p - disc) / 2], axis=-1)
        # p_m S[rho/p_m] = -sum lam log lam + p_m log p_m
        term = -_xlogx(lam).sum(axis=-1) + _xlogx(p)
        total = total + np.where(p < TOL.probability, 0.0, term)
    return total


def discord(rho: np.ndarray, m) -> float:
    """Discord of ``rho`` for the projective measurement ``m`` on the second qubit."""
    rho = _check_two_qubit(rho)
    if not isinstance(m, MeasurementAngles):
        m = MeasurementAngles(*m)
    cond = float(_conditional_entropy_term(rho, m.theta, m.phi))
    return cond + entropy(partial_trace(rho, [1])) - entropy(rho)


def min_discord(rho: np.ndarray) -> AngleResult:
    """Discord minimized over projective measurements on the second qubit."""
    rho = _check_two_qubit(rho)
    offset = entropy(partial_trace(rho, [1])) - entropy(rho)

    def neg(x):
        return -(float(_conditional_entropy_term(rho, x[0], x[1])) + offset)

    def batch(pts):
        return -(_conditional_entropy_term(rho, pts[:, 0], pts[:, 1]) + offset)

    axes = [grid_axis(-math.pi, math.pi, DISCORD_GRID), grid_axis(0, 2 * math.pi, DISCORD_GRID)]
    res = maximize_angles(neg, axes, bounds=[(-math.pi, math.pi), (0, 2 * math.pi)], batch_f=batch)
    return AngleResult(-res.value, res.angles)


@dataclass(frozen=True)
class TauState:
    """Two-qubit state supported on span{|00>, |11>}.

    Only ``t00`` and ``t01`` are free; ``t11`` must equal ``1 - t00``.
    """

    t00: float
    t11: float
    t01: complex

    def __post_init__(self):
        if abs(self.t00 + self.t11 - 1) > TOL.trace or min(self.t00, self.t11) < -TOL.psd:
            raise ValueError(f"invalid diagonal ({self.t00}, {self.t11})")
        if abs(self.t01) ** 2 > self.t00 * self.t11 + 1e-12:
            raise ValueError("coherence |t01| too large for a positive state")

    @property
    def t10(self) -> complex:
        return complex(self.t01).conjugate()

    def matrix(self) -> np.ndarray:
        m = np.zeros((4, 4), dtype=complex)
        m[0, 0], m[3, 3] = self.t00, self.t11
        m[0, 3], m[3, 0] = self.t01, self.t10
        return m

    @classmethod
    def from_matrix(cls, rho: np.ndarray, atol: float = 1e-9) -> "TauState":
        rho = _check_two_qubit(rho)
        mask = np.ones((4, 4), dtype=bool)
        mask[np.ix_([0, 3], [0, 3])] = False
        if np.max(np.abs(rho[mask])) > atol:
            raise ValueError("matrix has support outside span{|00>, |11>}")
        return cls(float(rho[0, 0].real), float(rho[3, 3].real), complex(rho[0, 3]))

    def eigenvalues(self) -> tuple[float, float]:
        r = math.sqrt((self.t00 - self.t11) ** 2 + 4 * abs(self.t01) ** 2)
        return ((1 + r) / 2, (1 - r) / 2)


def discord_tau_closed(tau: TauState) -> float:
    """Closed-form minimum discord of a tau-form state.

    Equals H(t00, t11) - S[tau]: the Shannon entropy of the diagonal minus the
    entropy of the eigenvalues.
    """
    # Clamp round-off below zero; the exact value is never negative.
    return max(0.0, shannon([tau.t00, tau.t11]) - shannon(tau.eigenvalues()))


class CorrelationSplit(NamedTuple):
    total: float
    classical: float
    quantum: float


def correlation_split(tau: TauState) -> CorrelationSplit:
    """Total, classical (dephased) and quantum correlation of a tau-form state."""
    rho = tau.matrix()
    total = mutual_information(rho)
    classical = mutual_information(np.diag(np.diag(rho)))
    return CorrelationSplit(total, classical, total - classical)
