"""Scenario-level quantities: teleported output states, closed forms, thresholds.

The singly damped resource ``big_xi(alpha, beta, q)`` is measured at its own
angles (alpha, beta). The doubly damped resource ``big_xi_prime`` is measured
at the angles that maximize its generalized singlet fraction.
"""

from __future__ import annotations

import math

import numpy as np

from .channels import big_xi, big_xi_prime
from .measures import TauState, discord_tau_closed, generalized_singlet_fraction, negativity, shannon
from .optimize import AngleResult, bisect
from .qmat import ket_to_dm
from .states import input_state
from .teleport import depolarizing_bichannel_E0

QCRIT_BRACKET = (1e-6, 0.5)
EPS_BRACKET = (1e-4, math.pi / 4 - 1e-4)


# -- closed forms ---------------------------------------------------------

def gsf_xi_closed(q: float) -> float:
    return (3 + math.sqrt(q)) ** 2 / 16


def gsf_xi_prime_closed(q: float) -> float:
    """Generalized singlet fraction of the doubly damped resource at alpha = beta = 0."""
    return (5 + 2 * q + q * q) / 8


def _coherence_coeff(alpha: float, q: float) -> float:
    return 2 + math.sqrt(q) + q + (math.sqrt(q) - q) * math.cos(4 * alpha)


def negativity_xi_output_closed(alpha: float, q: float, epsilon: float) -> float:
    return _coherence_coeff(alpha, q) * math.sin(2 * epsilon) / 4


def xi_output_tau_closed(alpha: float, q: float, epsilon: float) -> TauState:
    """Singly damped channel output for the input cos(eps)|00> + sin(eps)|11>."""
    sq = math.sqrt(q)
    bias = (2 + sq + q - (sq - q) * math.cos(4 * alpha)) * math.cos(2 * epsilon)
    t01 = _coherence_coeff(alpha, q) * math.sin(2 * epsilon) / 8
    return TauState((4 + bias) / 8, (4 - bias) / 8, t01)


def discord_xi_output_closed(alpha: float, q: float, epsilon: float) -> float:
    """Minimum discord of the same output, written through its eigenvalues."""
    sq = math.sqrt(q)
    radicand = (
        8 + 8 * sq + 11 * q + 2 * q**1.5 + 3 * q * q
        + (1 - sq) ** 2 * q * math.cos(8 * alpha)
        - 4 * (2 * sq - q - q * q) * math.cos(4 * alpha) * math.cos(4 * epsilon)
    )
    r = math.sqrt(2) / 16 * math.sqrt(radicand)
    tau = xi_output_tau_closed(alpha, q, epsilon)
    return shannon([tau.t00, tau.t11]) - shannon([0.5 + r, 0.5 - r])


# Quoted coefficients of the doubly damped output at alpha = 0.1 pi, q = 0.01.
FIT_ALPHA, FIT_Q = 0.1 * math.pi, 0.01
FIT_EIG_SCALE, FIT_EIG_CONST, FIT_EIG_COS = 0.00272371, 20765.4, 12203.4
FIT_DIAG_HI, FIT_DIAG_LO = 0.994553, 0.00544741


def discord_xi_prime_output_fit(epsilon: float) -> float:
    """Minimum discord of the doubly damped output from the quoted coefficients.

    The diagonal entries are the Shannon term and the eigenvalues the entropy
    term, as for any tau-form state.
    """
    r = FIT_EIG_SCALE * math.sqrt(FIT_EIG_CONST + FIT_EIG_COS * math.cos(4 * epsilon))
    c2, s2 = math.cos(epsilon) ** 2, math.sin(epsilon) ** 2
    diag = [FIT_DIAG_HI * c2 + FIT_DIAG_LO * s2, FIT_DIAG_HI * s2 + FIT_DIAG_LO * c2]
    return shannon(diag) - shannon([0.5 + r, 0.5 - r])


# -- numerical outputs ----------------------------------------------------

def xi_output(alpha: float, beta: float, q: float, epsilon: float, damped_pair: str = "sender") -> np.ndarray:
    rho_in = ket_to_dm(input_state(epsilon))
    return depolarizing_bichannel_E0(big_xi(alpha, beta, q, damped_pair), (alpha, beta), rho_in)


def xi_prime_optimum(alpha: float, beta: float, q: float, extra_starts=()) -> AngleResult:
    return generalized_singlet_fraction(big_xi_prime(alpha, beta, q), extra_starts=extra_starts)


def xi_prime_output(alpha: float, beta: float, q: float, epsilon: float, angles=None) -> np.ndarray:
    """Output through the doubly damped resource, measured at its optimal angles by default."""
    if angles is None:
        angles = xi_prime_optimum(alpha, beta, q).angles
    rho_in = ket_to_dm(input_state(epsilon))
    return depolarizing_bichannel_E0(big_xi_prime(alpha, beta, q), angles, rho_in)


def output_discord(rho: np.ndarray) -> float:
    return discord_tau_closed(TauState.from_matrix(rho))


def output_negativity(rho: np.ndarray) -> float:
    return negativity(rho)


# -- thresholds -----------------------------------------------------------

def gsf_gap(alpha: float, q: float, beta: float = 0.0, extra_starts=()) -> tuple[float, AngleResult]:
    """G[doubly damped] - G[singly damped] and the optimum of the doubly damped resource."""
    damped = xi_prime_optimum(alpha, beta, q, extra_starts)
    plain = generalized_singlet_fraction(big_xi(alpha, beta, q), extra_starts=[(alpha, beta)])
    return damped.value - plain.value, damped


def q_crit(alpha: float, beta: float = 0.0, tol: float = 1e-7, bracket=QCRIT_BRACKET) -> float:
    """Largest q for which the second damping does not lower the generalized singlet fraction.

    Raises ``ArithmeticError`` if the gap does not change sign on ``bracket``.
    """
    if not abs(alpha) < math.pi / 2:
        raise ValueError("alpha must satisfy |alpha| < pi/2")
    warm: list[tuple[float, float]] = []

    def f(q):
        gap, best = gsf_gap(alpha, q, beta, extra_starts=warm[-1:])
        warm.append(best.angles)
        return gap

    return bisect(f, bracket[0], bracket[1], tol)


def discord_gap(alpha: float, q: float, epsilon: float, beta: float = 0.0, angles=None) -> float:
    """D_min of the doubly damped output minus D_min of the singly damped output."""
    return output_discord(xi_prime_output(alpha, beta, q, epsilon, angles)) - output_discord(
        xi_output(alpha, beta, q, epsilon)
    )


def epsilon_threshold(alpha: float, q: float, beta: float = 0.0, tol: float = 1e-6,
                      bracket=EPS_BRACKET) -> float:
    """Input-state angle where the discord gain from the second damping vanishes."""
    angles = xi_prime_optimum(alpha, beta, q).angles
    return bisect(lambda e: discord_gap(alpha, q, e, beta, angles), bracket[0], bracket[1], tol)
