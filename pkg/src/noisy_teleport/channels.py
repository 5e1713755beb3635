"""Kraus channels and the noisy resource states built from them.

Amplitude damping here follows the convention that |0> is the excited level
and |1> the ground level, so decay moves population from |0> to |1>. The
damping parameter ``q`` is the survival amplitude squared; ``1 - q`` is the
dissipation strength.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .qmat import TOL, dagger, embed_operator, ket_to_dm, num_qubits
from .states import bell, upsilon00


@dataclass(frozen=True)
class KrausChannel:
    """A trace-preserving channel given by its Kraus operators."""

    kraus_ops: tuple

    def __post_init__(self):
        ops = tuple(np.asarray(k, dtype=complex) for k in self.kraus_ops)
        if not ops:
            raise ValueError("a channel needs at least one Kraus operator")
        dim = ops[0].shape[0]
        for k in ops:
            if k.shape != (dim, dim):
                raise ValueError("Kraus operators must share one square shape")
        object.__setattr__(self, "kraus_ops", ops)
        err = self.completeness_error()
        if err > TOL.kraus:
            raise ValueError(f"Kraus operators are not trace preserving (error {err:.3g})")

    @property
    def dim(self) -> int:
        return self.kraus_ops[0].shape[0]

    @property
    def n_qubits(self) -> int:
        return num_qubits(self.kraus_ops[0])

    def completeness_error(self) -> float:
        total = sum(dagger(k) @ k for k in self.kraus_ops)
        return float(np.max(np.abs(total - np.eye(self.dim))))

    def __call__(self, rho: np.ndarray, targets: Sequence[int] | None = None) -> np.ndarray:
        return apply_channel(self, rho, targets)


def _check_q(q: float) -> float:
    q = float(q)
    if not 0.0 <= q <= 1.0:
        raise ValueError(f"damping parameter q={q!r} outside [0, 1]")
    return q


def amplitude_damping(q: float) -> KrausChannel:
    q = _check_q(q)
    k0 = np.array([[math.sqrt(q), 0], [0, 1]])
    k1 = np.array([[0, 0], [math.sqrt(1 - q), 0]])
    return KrausChannel((k0, k1))


def correlated_amplitude_damping(q: float) -> KrausChannel:
    """Two-qubit time-correlated damping: only the |00> amplitude decays, to |11>."""
    q = _check_q(q)
    k00 = np.diag([math.sqrt(q), 1.0, 1.0, 1.0])
    k11 = np.zeros((4, 4))
    k11[3, 0] = math.sqrt(1 - q)
    return KrausChannel((k00, k11))


def apply_channel(ch: KrausChannel, rho: np.ndarray, targets: Sequence[int] | None = None) -> np.ndarray:
    """Apply ``ch`` to the listed qubits of ``rho`` (all qubits if ``targets`` is None)."""
    rho = np.asarray(rho, dtype=complex)
    n = num_qubits(rho)
    if targets is None:
        targets = range(n)
    targets = list(targets)
    if len(targets) != ch.n_qubits:
        raise ValueError(f"channel acts on {ch.n_qubits} qubits, got {len(targets)} targets")
    out = np.zeros_like(rho)
    for k in ch.kraus_ops:
        full = embed_operator(k, targets, n)
        out += full @ rho @ dagger(full)
    return out


def xi(q: float) -> np.ndarray:
    """Bell state with the receiver's qubit sent through amplitude damping."""
    return apply_channel(amplitude_damping(q), ket_to_dm(bell(0)), [1])


def xi_prime(q: float) -> np.ndarray:
    """``xi(q)`` after the sender damps her own qubit with the same strength."""
    return apply_channel(amplitude_damping(q), xi(q), [0])


SENDER_PAIR = (0, 1)
RECEIVER_PAIR = (2, 3)
_PAIRS = {"sender": SENDER_PAIR, "receiver": RECEIVER_PAIR}


def _pair(damped_pair: str) -> tuple[int, int]:
    try:
        return _PAIRS[damped_pair]
    except KeyError:
        raise ValueError(f"damped_pair must be 'sender' or 'receiver', got {damped_pair!r}") from None


def big_xi(alpha: float, beta: float, q: float, damped_pair: str = "sender") -> np.ndarray:
    """Four-qubit resource |Upsilon^00(alpha, beta)> with one pair correlated-damped.

    ``damped_pair="sender"`` damps qubits 0, 1 (the pair the sender measures),
    ``"receiver"`` damps qubits 2, 3 (the pair the receiver corrects). The
    generalized singlet fraction is the same for both. The teleported output
    only depends on alpha in the sender layout: damping and Pauli corrections
    on the same maximally entangled half give alpha-independent channel weights.
    """
    pure = ket_to_dm(upsilon00((alpha, beta)))
    return apply_channel(correlated_amplitude_damping(q), pure, _pair(damped_pair))


def big_xi_prime(alpha: float, beta: float, q: float, damped_pair: str = "sender") -> np.ndarray:
    """``big_xi`` with the other pair damped at the same strength as well.

    Both pairs end up damped, so the result does not depend on ``damped_pair``.
    """
    other = RECEIVER_PAIR if _pair(damped_pair) == SENDER_PAIR else SENDER_PAIR
    return apply_channel(correlated_amplitude_damping(q), big_xi(alpha, beta, q, damped_pair), other)
