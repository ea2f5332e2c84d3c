"""Closed-form generalized discord for Bell-diagonal states and their families.

The conditional term is the entropy of the post-measurement ensemble
evaluated at the optimal Bloch length theta = c = max|c_i|. Because binary
entropies of every kind are non-increasing in theta, this is the minimum of
the conditional entropy over projective measurements on party B.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import log2, sqrt
from typing import Optional

import numpy as np

from .entropy import EntropyParams, entropy, matrix_entropy
from .errors import ValidationError
from .linalg import (
    IDENTITY2,
    PAULIS,
    check_density_matrix,
    hermitian_eigenvalues,
    partial_trace_a,
    partial_trace_b,
    partial_transpose_b,
)
from .states import (
    BellDiagonalParams,
    IsotropicParams,
    PointerParams,
    WernerParams,
    bell_diagonal_eigenvalues,
    pointer_to_bell,
    pure_state_density,
)

UNIT_TOL = 1e-10
SPHERE_TOL = 1e-8


@dataclass(frozen=True)
class DiscordResult:
    signed: float
    absolute: float
    marginal_entropy: float
    conditional_term: float
    joint_entropy: float

    @classmethod
    def from_terms(
        cls, marginal: float, conditional: float, joint: float, signed: Optional[float] = None
    ) -> "DiscordResult":
        if signed is None:
            signed = marginal + conditional - joint
        signed = float(signed)
        return cls(signed, abs(signed), float(marginal), float(conditional), float(joint))

    def to_dict(self) -> dict:
        return {
            "signed": self.signed,
            "absolute": self.absolute,
            "marginal_entropy": self.marginal_entropy,
            "conditional_term": self.conditional_term,
            "joint_entropy": self.joint_entropy,
        }


@dataclass(frozen=True)
class MeasurementDirection:
    """Bloch direction z of the party-B projector V|0><0|V^dagger.

    ``unitary`` optionally records the (t, y1, y2, y3) parameters of
    V = t I + i(y1 s1 + y2 s2 + y3 s3) that produced z.
    """

    z: tuple[float, float, float]
    unitary: Optional[tuple[float, float, float, float]] = None

    def __post_init__(self):
        z = tuple(float(x) for x in self.z)
        if len(z) != 3:
            raise ValidationError(f"direction needs 3 components, got {len(z)}")
        norm = sqrt(sum(x * x for x in z))
        if abs(norm - 1.0) > UNIT_TOL:
            raise ValidationError(f"direction is not a unit vector (|z| = {norm!r})")
        object.__setattr__(self, "z", z)

    def projector(self, k: int) -> np.ndarray:
        """Rank-one projector for outcome k: (I + (-1)^k z.sigma) / 2."""
        sign = 1.0 if k == 0 else -1.0
        zs = sum(zi * s for zi, s in zip(self.z, PAULIS))
        return 0.5 * (IDENTITY2 + sign * zs)


def unitary_to_direction(t: float, y1: float, y2: float, y3: float) -> MeasurementDirection:
    norm = t * t + y1 * y1 + y2 * y2 + y3 * y3
    if abs(norm - 1.0) > SPHERE_TOL:
        raise ValidationError(f"(t, y1, y2, y3) must lie on the unit 3-sphere, got norm {norm!r}")
    z = (
        2 * (-t * y2 + y1 * y3),
        2 * (t * y1 + y2 * y3),
        t * t + y3 * y3 - y1 * y1 - y2 * y2,
    )
    # Renormalise away the 1e-8 slack allowed on the input.
    n = sqrt(sum(x * x for x in z))
    return MeasurementDirection(tuple(x / n for x in z), (t, y1, y2, y3))


@dataclass(frozen=True)
class ConditionalEnsemble:
    probabilities: tuple[float, float]
    states: tuple[np.ndarray, np.ndarray]
    theta: float


def conditional_ensemble(
    params: BellDiagonalParams, direction: MeasurementDirection
) -> ConditionalEnsemble:
    """Post-measurement ensemble for a projective measurement of B along z.

    Each outcome leaves A in (I +/- sum_i c_i z_i sigma_i)/2 and B in the
    measured projector; both outcomes occur with probability 1/2.
    """
    cz = [c * z for c, z in zip(params.coefficients, direction.z)]
    local = sum(x * s for x, s in zip(cz, PAULIS))
    states = tuple(
        np.kron(0.5 * (IDENTITY2 + sign * local), direction.projector(k))
        for k, sign in ((0, 1.0), (1, -1.0))
    )
    theta = sqrt(sum(x * x for x in cz))
    return ConditionalEnsemble((0.5, 0.5), states, theta)


def maximally_mixed_qubit_entropy(ent: EntropyParams) -> float:
    """Entropy of I/2 in closed form."""
    if ent.kind == "sharma_mittal":
        return (2 ** (1 - ent.r) - 1) / (1 - ent.r)
    if ent.kind == "tsallis":
        return (2 ** (1 - ent.q) - 1) / (1 - ent.q)
    return 1.0


def _xlog2x(x: float) -> float:
    return x * log2(x) if x > 0 else 0.0


def conditional_term_closed(c: float, ent: EntropyParams) -> float:
    """Optimal conditional entropy sum_k p_k H(rho^(k)) at theta = c."""
    c = float(c)
    if not (0.0 <= c <= 1.0 + 1e-12):
        raise ValidationError(f"c must lie in [0, 1], got {c}")
    c = min(c, 1.0)
    if ent.kind == "von_neumann":
        return 1.0 - 0.5 * (_xlog2x(1 + c) + _xlog2x(1 - c))
    q = ent.q
    s = ((1 + c) / 2) ** q + ((1 - c) / 2) ** q
    if ent.kind == "renyi":
        return log2(s) / (1 - q)
    if ent.kind == "tsallis":
        return (s - 1) / (1 - q)
    r = ent.r
    return (s ** ((1 - r) / (1 - q)) - 1) / (1 - r)


def discord_bell(params: BellDiagonalParams, ent: EntropyParams) -> DiscordResult:
    return DiscordResult.from_terms(
        maximally_mixed_qubit_entropy(ent),
        conditional_term_closed(params.c, ent),
        entropy(bell_diagonal_eigenvalues(params), ent),
    )


def _power_sum_terms(ent, cond_pair, joint_spectrum):
    """Marginal, conditional and joint terms from family eigenvalue formulas.

    ``joint_spectrum`` is a list of (multiplicity, eigenvalue) pairs.
    """
    marginal = maximally_mixed_qubit_entropy(ent)
    if ent.kind == "von_neumann":
        cond = -sum(_xlog2x(x) for x in cond_pair)
        joint = -sum(m * _xlog2x(x) for m, x in joint_spectrum)
        return marginal, cond, joint
    q = ent.q
    s_cond = sum(x**q if x > 0 else 0.0 for x in cond_pair)
    s_joint = sum(m * x**q if x > 0 else 0.0 for m, x in joint_spectrum)
    if ent.kind == "renyi":
        return marginal, log2(s_cond) / (1 - q), log2(s_joint) / (1 - q)
    if ent.kind == "tsallis":
        return marginal, (s_cond - 1) / (1 - q), (s_joint - 1) / (1 - q)
    a = (1 - ent.r) / (1 - q)
    k = 1 / (1 - ent.r)
    return marginal, k * (s_cond**a - 1), k * (s_joint**a - 1)


def _family_signed(ent, marginal, cond_pair, joint_spectrum):
    # Each kind written in the shape of its family corollary: the -1 offsets
    # of the conditional and joint terms cancel and are dropped.
    if ent.kind == "von_neumann":
        return (
            marginal
            - sum(_xlog2x(x) for x in cond_pair)
            + sum(m * _xlog2x(x) for m, x in joint_spectrum)
        )
    q = ent.q
    s_cond = sum(x**q if x > 0 else 0.0 for x in cond_pair)
    s_joint = sum(m * x**q if x > 0 else 0.0 for m, x in joint_spectrum)
    if ent.kind == "renyi":
        return 1 + (log2(s_cond) - log2(s_joint)) / (1 - q)
    if ent.kind == "tsallis":
        return (s_cond + 2 ** (1 - q) - 1 - s_joint) / (1 - q)
    a = (1 - ent.r) / (1 - q)
    return marginal + (s_cond**a - s_joint**a) / (1 - ent.r)


def _family_result(ent, cond_pair, joint_spectrum) -> DiscordResult:
    marginal, cond, joint = _power_sum_terms(ent, cond_pair, joint_spectrum)
    signed = _family_signed(ent, marginal, cond_pair, joint_spectrum)
    return DiscordResult.from_terms(marginal, cond, joint, signed)


def discord_werner(params: WernerParams, ent: EntropyParams) -> DiscordResult:
    """Werner-state discord from eigenvalues {1-p, p/3 (x3)} and c = |4p/3 - 1|."""
    p = params.p
    w = abs(4 * p - 3)
    cond_pair = ((3 + w) / 6, (3 - w) / 6)
    return _family_result(ent, cond_pair, [(1, 1 - p), (3, p / 3)])


def discord_isotropic(params: IsotropicParams, ent: EntropyParams) -> DiscordResult:
    """Isotropic-state discord from eigenvalues {F, (1-F)/3 (x3)} and c = |4F/3 - 1/3|."""
    F = params.F
    w = abs(4 * F - 1)
    cond_pair = ((3 + w) / 6, (3 - w) / 6)
    return _family_result(ent, cond_pair, [(1, F), (3, (1 - F) / 3)])


def discord_pointer(params: PointerParams, ent: EntropyParams) -> DiscordResult:
    """Pointer-state discord; eigenvalues (1 +/- C)/4, each twice.

    The Sharma-Mittal and Tsallis values use the factored form
    H(I/2) * [1 - 2^(-q a) ((1+C)^q + (1-C)^q)^a] with a = (1-r)/(1-q)
    (a = 1 for Tsallis). The von Neumann and Renyi values vanish identically.
    """
    C = params.C
    cond_pair = ((1 + C) / 2, (1 - C) / 2)
    joint_spectrum = [(2, (1 + C) / 4), (2, (1 - C) / 4)]
    marginal, cond, joint = _power_sum_terms(ent, cond_pair, joint_spectrum)
    if ent.kind in ("sharma_mittal", "tsallis"):
        q = ent.q
        a = 1.0 if ent.kind == "tsallis" else (1 - ent.r) / (1 - q)
        s = sum(x**q if x > 0 else 0.0 for x in (1 + C, 1 - C))
        signed = marginal * (1 - 2 ** (-q * a) * s**a)
    else:
        signed = _family_signed(ent, marginal, cond_pair, joint_spectrum)
    return DiscordResult.from_terms(marginal, cond, joint, signed)


def discord_pointer_via_bell(params: PointerParams, ent: EntropyParams) -> DiscordResult:
    return discord_bell(pointer_to_bell(params), ent)


def mutual_information(rho, dims: tuple[int, int], ent: EntropyParams) -> float:
    """H(rho_a) + H(rho_b) - H(rho) with numerically reduced marginals."""
    rho = check_density_matrix(rho)
    return (
        matrix_entropy(partial_trace_b(rho, dims), ent)
        + matrix_entropy(partial_trace_a(rho, dims), ent)
        - matrix_entropy(rho, ent)
    )


def negativity(rho, dims: tuple[int, int] = (2, 2)) -> float:
    """Negated sum of the negative eigenvalues of the partial transpose."""
    rho = check_density_matrix(rho)
    lam = hermitian_eigenvalues(partial_transpose_b(rho, dims))
    return float(np.sum(np.clip(-lam, 0.0, None)))


def pure_state_discord(amplitudes, ent: EntropyParams) -> float:
    """For a pure state the discord is the entropy of party B's reduced state."""
    rho = pure_state_density(amplitudes)
    return matrix_entropy(partial_trace_a(rho), ent)
