"""Noisy-resource teleportation: resource states, channels and figures of merit."""

from .analysis import epsilon_threshold, q_crit
from .channels import (
    KrausChannel,
    amplitude_damping,
    apply_channel,
    big_xi,
    big_xi_prime,
    correlated_amplitude_damping,
    xi,
    xi_prime,
)
from .measures import (
    MeasurementAngles,
    TauState,
    correlation_split,
    discord,
    discord_tau_closed,
    entropy,
    fidelity_from_F,
    fidelity_from_G,
    generalized_singlet_fraction,
    max_singlet_fraction,
    min_discord,
    mutual_information,
    negativity,
    overlap_G,
    singlet_fraction,
)
from .optimize import AngleResult
from .qmat import TOL, partial_trace, partial_transpose, tensor
from .states import AnglePair, bell, input_state, pauli, pi_basis, upsilon00, upsilon_munu
from .teleport import (
    OutcomeDistribution,
    avg_fidelity_mc,
    depolarizing_bichannel_E0,
    depolarizing_channel_T0,
    protocol_E0,
)

__version__ = "0.1.0"
