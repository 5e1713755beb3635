"""Recompute the published numbers and compare them with the quoted values."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Iterator

import numpy as np

from . import analysis as an
from .channels import big_xi, big_xi_prime
from .measures import (
    TauState,
    correlation_split,
    discord_tau_closed,
    fidelity_from_G,
    generalized_singlet_fraction,
    min_discord,
)
from .teleport import avg_fidelity_mc

ALPHA = 0.1 * math.pi


@dataclass
class Check:
    name: str
    computed: float
    expected: float
    tol: float

    @property
    def passed(self) -> bool:
        return bool(np.isfinite(self.computed)) and abs(self.computed - self.expected) <= self.tol


def _gsf_checks() -> Iterator[Check]:
    for alpha, beta, q in [(0.0, 0.0, 0.01), (ALPHA, 0.2, 0.25), (0.3, 0.0, 1.0)]:
        g = generalized_singlet_fraction(big_xi(alpha, beta, q)).value
        yield Check(f"G[Xi] a={alpha:.4f} b={beta} q={q}", g, an.gsf_xi_closed(q), 1e-6)
    for q in (0.0, 0.02, 0.5, 1.0):
        g = generalized_singlet_fraction(big_xi_prime(0.0, 0.0, q)).value
        yield Check(f"G[Xi'] a=0 q={q}", g, an.gsf_xi_prime_closed(q), 1e-6)


def _qcrit_checks() -> Iterator[Check]:
    q0 = an.q_crit(0.0)
    q1 = an.q_crit(ALPHA)
    yield Check("q_crit(alpha=0)", q0, 0.0338454, 1e-4)
    yield Check("q_crit(alpha=0.1pi)", q1, 0.0209421, 1e-4)
    yield Check("q_crit shrinks with alpha (1 = yes)", float(q1 < q0), 1.0, 0.0)


def _output_checks() -> Iterator[Check]:
    q = 0.0209421
    eps = math.pi / 4
    neg = an.output_negativity(an.xi_output(ALPHA, 0.0, q, eps))
    yield Check("N[Xi out] / sin2eps at q_crit(0.1pi)", neg, 0.550976, 1e-5)

    angles = an.xi_prime_optimum(ALPHA, 0.0, q).angles
    out0 = an.xi_prime_output(ALPHA, 0.0, q, 0.0, angles)
    out45 = an.xi_prime_output(ALPHA, 0.0, q, eps, angles)
    yield Check("Xi' out t00 cos^2 coefficient", out0[0, 0].real, 0.988715, 1e-5)
    yield Check("Xi' out t00 sin^2 coefficient", out0[3, 3].real, 0.0112853, 1e-5)
    yield Check("Xi' out t01 coefficient", 2 * out45[0, 3].real, 0.508517, 1e-5)
    yield Check("N[Xi' out] / sin2eps", an.output_negativity(out45), 0.508517, 1e-5)

    worst = max(
        an.output_negativity(an.xi_prime_output(ALPHA, 0.0, q, e, angles))
        - an.output_negativity(an.xi_output(ALPHA, 0.0, q, e))
        for e in np.linspace(0.05, eps, 8)
    )
    yield Check("max N[Xi' out] - N[Xi out] <= 0 (1 = yes)", float(worst <= 1e-12), 1.0, 0.0)


def _discord_checks() -> Iterator[Check]:
    q = an.FIT_Q
    angles = an.xi_prime_optimum(ALPHA, 0.0, q).angles
    out0 = an.xi_prime_output(ALPHA, 0.0, q, 0.0, angles)
    yield Check("Lambda+ coefficient", out0[0, 0].real, an.FIT_DIAG_HI, 1e-6)
    yield Check("Lambda- coefficient", out0[3, 3].real, an.FIT_DIAG_LO, 1e-6)

    # Eigenvalue spread r(eps)^2 = A + B cos(4 eps); the quoted form scales A, B by k^2.
    def r2(e):
        tau = TauState.from_matrix(an.xi_prime_output(ALPHA, 0.0, q, e, angles))
        return ((tau.t00 - tau.t11) ** 2 + 4 * abs(tau.t01) ** 2) / 4

    a_plus_b, a_minus_b = r2(0.0), r2(math.pi / 4)
    k2 = an.FIT_EIG_SCALE**2
    yield Check("lambda radicand constant", (a_plus_b + a_minus_b) / 2 / k2, an.FIT_EIG_CONST, 0.5)
    yield Check("lambda radicand cos(4eps) term", (a_plus_b - a_minus_b) / 2 / k2, an.FIT_EIG_COS, 0.5)

    worst_xi = worst_fit = 0.0
    for e in np.linspace(0.0, math.pi / 4, 9):
        worst_xi = max(worst_xi, abs(an.output_discord(an.xi_output(ALPHA, 0.0, q, e))
                                     - an.discord_xi_output_closed(ALPHA, q, e)))
        worst_fit = max(worst_fit, abs(an.output_discord(an.xi_prime_output(ALPHA, 0.0, q, e, angles))
                                       - an.discord_xi_prime_output_fit(e)))
    yield Check("max |D[Xi out] - Gamma form|", worst_xi, 0.0, 1e-6)
    yield Check("max |D[Xi' out] - lambda/Lambda form|", worst_fit, 0.0, 1e-6)

    yield Check("epsilon threshold", an.epsilon_threshold(ALPHA, q), 0.459496, 1e-4)
    yield Check("discord gap > 0 at eps=0.2 (1 = yes)", float(an.discord_gap(ALPHA, q, 0.2) > 0), 1.0, 0.0)


def _theorem_checks() -> Iterator[Check]:
    rng = np.random.default_rng(2024)
    worst = 0.0
    for _ in range(5):
        t00 = rng.uniform(0.05, 0.95)
        t01 = rng.uniform(0, 1) * math.sqrt(t00 * (1 - t00)) * np.exp(1j * rng.uniform(0, 2 * math.pi))
        tau = TauState(t00, 1 - t00, t01)
        closed = discord_tau_closed(tau)
        worst = max(worst, abs(min_discord(tau.matrix()).value - closed),
                    abs(correlation_split(tau).quantum - closed))
    yield Check("min discord = closed form = quantum correlation", worst, 0.0, 1e-6)
    bell = TauState(0.5, 0.5, 0.5)
    split = correlation_split(bell)
    yield Check("Bell total correlation", split.total, 2.0, 1e-12)
    yield Check("Bell classical correlation", split.classical, 1.0, 1e-12)


def _fidelity_checks() -> Iterator[Check]:
    q = 0.25
    g = an.gsf_xi_closed(q)
    mean, err = avg_fidelity_mc(big_xi(ALPHA, 0.2, q), (ALPHA, 0.2), 100_000, seed=7)
    yield Check("MC fidelity vs 1/5 + 4G/5 (3 s.e.)", mean, fidelity_from_G(g), 3 * err)


SECTIONS: list[Callable[[], Iterator[Check]]] = [
    _gsf_checks,
    _qcrit_checks,
    _output_checks,
    _discord_checks,
    _theorem_checks,
    _fidelity_checks,
]


def run_checks() -> list[Check]:
    checks: list[Check] = []
    for section in SECTIONS:
        checks.extend(section())
    return checks


def format_report(checks: list[Check]) -> str:
    width = max(len(c.name) for c in checks)
    lines = [f"{'check':<{width}}  {'computed':>16}  {'expected':>16}  {'tol':>8}  result"]
    for c in checks:
        lines.append(
            f"{c.name:<{width}}  {c.computed:>16.10g}  {c.expected:>16.10g}  {c.tol:>8.1g}  "
            f"{'PASS' if c.passed else 'FAIL'}"
        )
    n_pass = sum(c.passed for c in checks)
    lines.append(f"{n_pass}/{len(checks)} checks passed")
    return "\n".join(lines)
