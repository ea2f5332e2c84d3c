"""Sharma-Mittal entropy and its Renyi, Tsallis and Shannon limits.

Logarithms are base 2. The two-parameter functional itself contains no
logarithm; callers pick a limit branch explicitly through ``EntropyParams``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import NumericalDomainError, ValidationError
from .linalg import hermitian_eigenvalues

SINGULAR_TOL = 1e-8
CLIP_TOL = 1e-10
SUM_TOL = 1e-8

KINDS = ("sharma_mittal", "renyi", "tsallis", "von_neumann")
KIND_ALIASES = {
    "sm": "sharma_mittal",
    "sharma_mittal": "sharma_mittal",
    "sharma-mittal": "sharma_mittal",
    "renyi": "renyi",
    "tsallis": "tsallis",
    "vn": "von_neumann",
    "von_neumann": "von_neumann",
    "shannon": "von_neumann",
}


def _check_q(q: float) -> float:
    q = float(q)
    if not np.isfinite(q) or q <= 0:
        raise NumericalDomainError(f"entropy order q must be > 0, got {q}")
    if abs(q - 1.0) < SINGULAR_TOL:
        raise NumericalDomainError(
            f"q={q} is within {SINGULAR_TOL} of 1; use kind='von_neumann' "
            "(or 'renyi' for r=1) instead"
        )
    return q


def _check_r(r: float) -> float:
    r = float(r)
    if not np.isfinite(r):
        raise NumericalDomainError(f"entropy parameter r must be finite, got {r}")
    if abs(r - 1.0) < SINGULAR_TOL:
        raise NumericalDomainError(
            f"r={r} is within {SINGULAR_TOL} of 1; use kind='renyi' instead"
        )
    return r


@dataclass(frozen=True)
class EntropyParams:
    """Selects one member of the entropy family.

    ``q`` is required for every kind except ``von_neumann``; ``r`` only for
    ``sharma_mittal``.
    """

    kind: str
    q: Optional[float] = None
    r: Optional[float] = None

    def __post_init__(self):
        kind = KIND_ALIASES.get(str(self.kind).lower())
        if kind is None:
            raise ValidationError(
                f"unknown entropy kind {self.kind!r}; expected one of {KINDS}"
            )
        object.__setattr__(self, "kind", kind)
        if kind == "von_neumann":
            object.__setattr__(self, "q", None)
            object.__setattr__(self, "r", None)
            return
        if self.q is None:
            raise ValidationError(f"entropy kind {kind!r} requires q")
        object.__setattr__(self, "q", _check_q(self.q))
        if kind == "sharma_mittal":
            if self.r is None:
                raise ValidationError("entropy kind 'sharma_mittal' requires r")
            object.__setattr__(self, "r", _check_r(self.r))
        else:
            object.__setattr__(self, "r", None)

    @classmethod
    def sharma_mittal(cls, q: float, r: float) -> "EntropyParams":
        return cls("sharma_mittal", q, r)

    @classmethod
    def renyi(cls, q: float) -> "EntropyParams":
        return cls("renyi", q)

    @classmethod
    def tsallis(cls, q: float) -> "EntropyParams":
        return cls("tsallis", q)

    @classmethod
    def von_neumann(cls) -> "EntropyParams":
        return cls("von_neumann")

    @property
    def label(self) -> str:
        if self.kind == "sharma_mittal":
            return f"sharma_mittal(q={self.q:g},r={self.r:g})"
        if self.kind == "von_neumann":
            return "von_neumann"
        return f"{self.kind}(q={self.q:g})"

    def to_dict(self) -> dict:
        return {"kind": self.kind, "q": self.q, "r": self.r}


def probability_vector(p) -> np.ndarray:
    """Validate a distribution, clipping tiny negatives from eigen-solver rounding."""
    a = np.asarray(p, dtype=float).ravel()
    if a.size == 0:
        raise ValidationError("empty probability vector")
    if not np.all(np.isfinite(a)):
        raise ValidationError("probability vector has non-finite entries")
    if np.any(a < -CLIP_TOL):
        raise ValidationError(f"negative probability {a.min():.3e} below -{CLIP_TOL}")
    a = np.clip(a, 0.0, None)
    if np.any(a > 1.0 + SUM_TOL):
        raise ValidationError("probability exceeds 1")
    total = a.sum()
    if abs(total - 1.0) > SUM_TOL:
        raise ValidationError(f"probabilities sum to {total!r}, expected 1")
    return a


def _power_sum(p: np.ndarray, q: float) -> float:
    # 0**q == 0 for q > 0; masking keeps that explicit.
    nz = p[p > 0]
    return float(np.sum(nz**q))


def sharma_mittal_entropy(p, q: float, r: float) -> float:
    q, r = _check_q(q), _check_r(r)
    p = probability_vector(p)
    s = _power_sum(p, q)
    return (s ** ((1.0 - r) / (1.0 - q)) - 1.0) / (1.0 - r)


def renyi_entropy(p, q: float) -> float:
    q = _check_q(q)
    p = probability_vector(p)
    return float(np.log2(_power_sum(p, q)) / (1.0 - q))


def tsallis_entropy(p, q: float) -> float:
    q = _check_q(q)
    p = probability_vector(p)
    return (_power_sum(p, q) - 1.0) / (1.0 - q)


def shannon_entropy(p) -> float:
    p = probability_vector(p)
    nz = p[p > 0]
    h = float(-np.sum(nz * np.log2(nz)))
    return abs(h) if h == 0.0 else h


def entropy(p, params: EntropyParams) -> float:
    """Evaluate the entropy selected by ``params`` on a distribution."""
    if params.kind == "sharma_mittal":
        return sharma_mittal_entropy(p, params.q, params.r)
    if params.kind == "renyi":
        return renyi_entropy(p, params.q)
    if params.kind == "tsallis":
        return tsallis_entropy(p, params.q)
    return shannon_entropy(p)


def matrix_entropy(rho, params: EntropyParams) -> float:
    """Entropy of a density matrix, evaluated on its spectrum."""
    return entropy(hermitian_eigenvalues(rho), params)


def binary_entropy(theta: float, params: EntropyParams) -> float:
    """Entropy of the two-outcome distribution ((1+theta)/2, (1-theta)/2)."""
    return entropy([(1.0 + theta) / 2.0, (1.0 - theta) / 2.0], params)


def entropy_of_spectra(spectra, params: EntropyParams) -> np.ndarray:
    """Vectorised entropy of many spectra, shape (m, n) -> (m,).

    Entries in [-CLIP_TOL, 0) are clipped to 0; rows are not renormalised.
    """
    w = np.asarray(spectra, dtype=float)
    if np.any(w < -CLIP_TOL):
        raise ValidationError(f"negative probability {w.min():.3e} below -{CLIP_TOL}")
    w = np.clip(w, 0.0, None)
    pos = w > 0
    if params.kind == "von_neumann":
        logs = np.log2(np.where(pos, w, 1.0))
        return -np.sum(w * logs, axis=-1)
    q = params.q
    s = np.sum(np.where(pos, w, 0.0) ** q, axis=-1)
    if params.kind == "renyi":
        return np.log2(s) / (1.0 - q)
    if params.kind == "tsallis":
        return (s - 1.0) / (1.0 - q)
    r = params.r
    return (s ** ((1.0 - r) / (1.0 - q)) - 1.0) / (1.0 - r)
