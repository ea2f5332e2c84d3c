"""Brute-force discord: scan projective measurements of party B over the sphere.

This path shares no algebra with the closed forms. It projects the full
4x4 state with I (x) V|k><k|V^dagger for every candidate direction, renormalises,
and takes spectra with the Jacobi solver.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .discord import DiscordResult, MeasurementDirection
from .entropy import EntropyParams, entropy, entropy_of_spectra
from .errors import ValidationError
from .linalg import (
    check_density_matrix,
    hermitian_eigenvalues,
    jacobi_eigenvalues,
    partial_trace_a,
    partial_trace_b,
)

MARGINAL_TOL = 1e-8
TIE_TOL = 1e-12
MIN_GRID = 100

AXIS_DIRECTIONS = np.array(
    [[1, 0, 0], [-1, 0, 0], [0, 1, 0], [0, -1, 0], [0, 0, 1], [0, 0, -1]], dtype=float
)


def fibonacci_sphere(n: int) -> np.ndarray:
    """``n`` near-uniform unit vectors on a golden-angle spiral, shape (n, 3)."""
    i = np.arange(n, dtype=float) + 0.5
    z = 1.0 - 2.0 * i / n
    rho = np.sqrt(np.clip(1.0 - z * z, 0.0, None))
    phi = np.pi * (3.0 - np.sqrt(5.0)) * i
    return np.column_stack([rho * np.cos(phi), rho * np.sin(phi), z])


def scan_directions(grid: int) -> np.ndarray:
    """The six axis directions followed by ``grid`` spiral points."""
    return np.vstack([AXIS_DIRECTIONS, fibonacci_sphere(grid)])


def measurement_unitaries(directions: np.ndarray) -> np.ndarray:
    """Unitaries V with V|0> having Bloch vector z, shape (m, 2, 2)."""
    z = np.asarray(directions, dtype=float)
    polar = np.arccos(np.clip(z[:, 2], -1.0, 1.0))
    azim = np.arctan2(z[:, 1], z[:, 0])
    cos_h, sin_h = np.cos(polar / 2), np.sin(polar / 2)
    eph = np.exp(1j * azim)
    v = np.empty((len(z), 2, 2), dtype=complex)
    v[:, 0, 0] = cos_h
    v[:, 1, 0] = eph * sin_h
    v[:, 0, 1] = -eph.conj() * sin_h
    v[:, 1, 1] = cos_h
    return v


def measure_party_b(rho, directions) -> tuple[np.ndarray, np.ndarray]:
    """Project party B of a two-qubit state along each direction.

    Returns
    -------
    probs : ndarray, shape (m, 2)
    states : ndarray, shape (m, 2, 4, 4)
        Renormalised post-measurement joint states rho^(k).
    """
    rho = np.asarray(rho, dtype=complex)
    v = measurement_unitaries(np.atleast_2d(directions))
    # B_k = V|k><k|V^dagger, column k of V times its conjugate.
    proj_b = np.einsum("mik,mjk->mkij", v, v.conj())
    eye = np.eye(2, dtype=complex)
    ops = np.einsum("ac,mkbd->mkabcd", eye, proj_b).reshape(-1, 2, 4, 4)
    projected = ops @ rho @ ops
    probs = np.real(np.trace(projected, axis1=2, axis2=3))
    safe = np.where(probs > 0, probs, 1.0)
    return probs, projected / safe[:, :, None, None]


@dataclass(frozen=True)
class OracleResult:
    result: DiscordResult
    direction: MeasurementDirection
    theta: float
    index: int
    n_directions: int


class OracleScan:
    """Spectral data for one state over a fixed direction set.

    The expensive part (projection and diagonalisation) is done once; the
    scan can then be evaluated for any number of entropy settings.
    """

    def __init__(self, rho, grid: int = 2000):
        if grid < MIN_GRID:
            raise ValidationError(f"oracle grid must be >= {MIN_GRID}, got {grid}")
        rho = check_density_matrix(rho)
        if rho.shape != (4, 4):
            raise ValidationError(f"oracle needs a 4x4 state, got {rho.shape}")
        half = np.eye(2) / 2
        for name, red in (("A", partial_trace_b(rho)), ("B", partial_trace_a(rho))):
            dev = np.max(np.abs(red - half))
            if dev > MARGINAL_TOL:
                raise ValidationError(
                    f"marginal of party {name} deviates from I/2 by {dev:.3e}; "
                    "the oracle only handles states with maximally mixed marginals"
                )
        self.rho = rho
        self.grid = grid
        self.directions = scan_directions(grid)
        self.probs, states = measure_party_b(rho, self.directions)
        self.spectra = jacobi_eigenvalues(states)
        self.marginal_spectrum = hermitian_eigenvalues(partial_trace_a(rho))
        self.joint_spectrum = hermitian_eigenvalues(rho)

    def conditional_terms(self, ent: EntropyParams) -> np.ndarray:
        h = entropy_of_spectra(self.spectra, ent)
        return np.sum(self.probs * h, axis=1)

    def evaluate(self, ent: EntropyParams) -> OracleResult:
        cond = self.conditional_terms(ent)
        best = cond.min()
        # Lowest index among near-ties keeps the choice deterministic.
        idx = int(np.flatnonzero(cond <= best + TIE_TOL * max(1.0, abs(best)))[0])
        top = self.spectra[idx, 0]
        theta = float(np.clip(top[0] - top[1], 0.0, 1.0))
        result = DiscordResult.from_terms(
            entropy(self.marginal_spectrum, ent),
            float(cond[idx]),
            entropy(self.joint_spectrum, ent),
        )
        z = self.directions[idx]
        direction = MeasurementDirection(tuple(z / np.linalg.norm(z)))
        return OracleResult(result, direction, theta, idx, len(self.directions))


def discord_oracle(rho, ent: EntropyParams, grid: int = 2000) -> OracleResult:
    return OracleScan(rho, grid).evaluate(ent)
