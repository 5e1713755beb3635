import math

import numpy as np
import pytest

from noisy_teleport.measures import TauState

ACCEPTANCE_LINES = []


def random_density_matrix(n_qubits, rng, rank=None):
    dim = 2**n_qubits
    rank = rank or dim
    g = rng.standard_normal((dim, rank)) + 1j * rng.standard_normal((dim, rank))
    rho = g @ g.conj().T
    return rho / np.trace(rho).real


def random_tau(rng):
    t00 = rng.uniform(0.02, 0.98)
    mag = rng.uniform(0, 1) * math.sqrt(t00 * (1 - t00))
    return TauState(t00, 1 - t00, mag * np.exp(1j * rng.uniform(0, 2 * math.pi)))


def random_unitary(dim, rng):
    z = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    q, r = np.linalg.qr(z)
    return q * (np.diag(r) / np.abs(np.diag(r)))


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


@pytest.fixture
def make_rho():
    return random_density_matrix


@pytest.fixture
def make_tau():
    return random_tau


@pytest.fixture
def make_unitary():
    return random_unitary


@pytest.fixture
def record_criterion():
    def record(number, passed, detail):
        ACCEPTANCE_LINES.append(f"criterion {number:>2}: {'PASS' if passed else 'FAIL'}  {detail}")
        return passed

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
