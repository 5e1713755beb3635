"""Dense linear algebra on multi-qubit operators.

Matrices are plain :class:`numpy.ndarray` objects. Qubits are indexed from 0
and qubit 0 is the most significant bit of a computational-basis index, so
``tensor(a, b)`` puts ``a`` on the lower-numbered qubits.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Sequence

import numpy as np


@dataclass(frozen=True)
class Tolerances:
    """Numerical tolerances shared across the package."""

    hermitian: float = 1e-10
    hermitian_input: float = 1e-8
    trace: float = 1e-10
    psd: float = 1e-9
    norm: float = 1e-10
    kraus: float = 1e-10
    probability: float = 1e-12


TOL = Tolerances()


def num_qubits(m: np.ndarray) -> int:
    """Number of qubits carried by a square matrix or a state vector."""
    dim = m.shape[0]
    n = dim.bit_length() - 1
    if dim < 1 or 2**n != dim or (m.ndim == 2 and m.shape[1] != dim):
        raise ValueError(f"shape {m.shape} is not a multi-qubit operator or state")
    return n


def tensor(*factors: np.ndarray) -> np.ndarray:
    """Kronecker product; the first factor is most significant."""
    if not factors:
        raise ValueError("tensor() needs at least one factor")
    return reduce(np.kron, factors)


def ket_to_dm(psi: np.ndarray) -> np.ndarray:
    psi = np.asarray(psi, dtype=complex)
    return np.outer(psi, psi.conj())


def dagger(m: np.ndarray) -> np.ndarray:
    return np.conj(m).T


def is_hermitian(m: np.ndarray, atol: float = TOL.hermitian) -> bool:
    return bool(np.max(np.abs(m - dagger(m)), initial=0.0) <= atol)


def check_state_vector(psi: np.ndarray, atol: float = TOL.norm) -> np.ndarray:
    psi = np.asarray(psi, dtype=complex)
    num_qubits(psi)
    if abs(np.linalg.norm(psi) - 1.0) > atol:
        raise ValueError(f"state vector has norm {np.linalg.norm(psi)!r}, expected 1")
    return psi


def check_density_matrix(rho: np.ndarray, tol: Tolerances = TOL) -> np.ndarray:
    """Validate Hermiticity, unit trace and positivity; return ``rho`` as complex."""
    rho = np.asarray(rho, dtype=complex)
    num_qubits(rho)
    if not is_hermitian(rho, tol.hermitian):
        raise ValueError("density matrix is not Hermitian")
    tr = np.trace(rho)
    if abs(tr - 1.0) > tol.trace:
        raise ValueError(f"density matrix has trace {tr!r}, expected 1")
    lo = herm_eigenvalues(rho)[0]
    if lo < -tol.psd:
        raise ValueError(f"density matrix has negative eigenvalue {lo!r}")
    return rho


def _qubit_list(indices: Iterable[int], n: int, what: str) -> list[int]:
    out = list(indices)
    for i in out:
        if not 0 <= i < n:
            raise IndexError(f"{what} index {i} out of range for {n} qubits")
    if len(set(out)) != len(out):
        raise ValueError(f"repeated {what} index in {out}")
    return out


def partial_trace(rho: np.ndarray, keep: Iterable[int]) -> np.ndarray:
    """Reduced matrix on the qubits in ``keep``.

    The kept qubits stay in ascending order regardless of the order given.
    """
    n = num_qubits(rho)
    keep = sorted(_qubit_list(keep, n, "keep"))
    if not keep:
        raise ValueError("keep must name at least one qubit")
    traced = [i for i in range(n) if i not in keep]
    t = np.asarray(rho).reshape((2,) * (2 * n))
    # Trace the highest index first so lower axis numbers stay valid.
    for k, i in enumerate(sorted(traced, reverse=True)):
        remaining = n - k
        t = np.trace(t, axis1=i, axis2=i + remaining)
    d = 2 ** len(keep)
    return t.reshape(d, d)


def partial_transpose(rho: np.ndarray, subsystem: Iterable[int]) -> np.ndarray:
    """Transpose only the tensor factors listed in ``subsystem``."""
    n = num_qubits(rho)
    sub = _qubit_list(subsystem, n, "subsystem")
    t = np.asarray(rho).reshape((2,) * (2 * n))
    axes = list(range(2 * n))
    for i in sub:
        axes[i], axes[n + i] = axes[n + i], axes[i]
    return t.transpose(axes).reshape(2**n, 2**n)


def permute_qubits(m: np.ndarray, order: Sequence[int]) -> np.ndarray:
    """Reorder the qubits of an operator or ket.

    Qubit ``order[k]`` of the input becomes qubit ``k`` of the output.
    """
    n = num_qubits(m)
    order = _qubit_list(order, n, "order")
    if len(order) != n:
        raise ValueError("order must be a permutation of all qubits")
    if m.ndim == 1:
        return m.reshape((2,) * n).transpose(order).reshape(-1)
    t = m.reshape((2,) * (2 * n))
    return t.transpose(order + [n + i for i in order]).reshape(2**n, 2**n)


def embed_operator(op: np.ndarray, targets: Sequence[int], n: int) -> np.ndarray:
    """Lift a k-qubit operator acting on ``targets`` to the full n-qubit space."""
    k = num_qubits(op)
    targets = _qubit_list(targets, n, "target")
    if len(targets) != k:
        raise ValueError(f"operator acts on {k} qubits but {len(targets)} targets given")
    rest = [i for i in range(n) if i not in targets]
    full = np.kron(op, np.eye(2 ** len(rest)))
    # full acts on qubit order targets + rest; undo that ordering.
    order = targets + rest
    inverse = [order.index(i) for i in range(n)]
    return permute_qubits(full, inverse)


def herm_eigenvalues(m: np.ndarray, atol: float = TOL.hermitian_input) -> np.ndarray:
    """Ascending real spectrum of a Hermitian matrix."""
    m = np.asarray(m)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    if not is_hermitian(m, atol):
        raise ValueError("matrix is not Hermitian within tolerance")
    return np.linalg.eigvalsh((m + dagger(m)) / 2)


def herm_eigh(m: np.ndarray, atol: float = TOL.hermitian_input) -> tuple[np.ndarray, np.ndarray]:
    """Ascending eigenvalues and column eigenvectors of a Hermitian matrix."""
    m = np.asarray(m)
    if not is_hermitian(m, atol):
        raise ValueError("matrix is not Hermitian within tolerance")
    return np.linalg.eigh((m + dagger(m)) / 2)
