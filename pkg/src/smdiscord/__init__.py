"""Generalized quantum discord for two-qubit states.

Sharma-Mittal discord with its Renyi, Tsallis and von Neumann limits, in
closed form for Bell-diagonal, Werner, isotropic and pointer states, plus a
measurement-scan oracle and entanglement negativity.
"""

from .discord import (
    ConditionalEnsemble,
    DiscordResult,
    MeasurementDirection,
    conditional_ensemble,
    conditional_term_closed,
    discord_bell,
    discord_isotropic,
    discord_pointer,
    discord_werner,
    mutual_information,
    negativity,
    pure_state_discord,
    unitary_to_direction,
)
from .entropy import (
    EntropyParams,
    entropy,
    renyi_entropy,
    shannon_entropy,
    sharma_mittal_entropy,
    tsallis_entropy,
)
from .errors import DiscordError, InvalidStateError, NumericalDomainError, ValidationError
from .oracle import OracleScan, discord_oracle
from .states import (
    BellDiagonalParams,
    IsotropicParams,
    PointerParams,
    WernerParams,
    bell_diagonal_eigenvalues,
    bell_diagonal_matrix,
    classical_quantum_check,
    isotropic_matrix,
    isotropic_to_bell,
    parse_state_spec,
    pointer_matrix,
    pure_state_density,
    validate_bell_params,
    werner_matrix,
    werner_to_bell,
)
from .sweep import RootQuery, SweepAxis, SweepSpec, eval_point, find_zero_discord

__version__ = "0.1.0"
