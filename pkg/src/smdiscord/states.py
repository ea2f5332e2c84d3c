"""Two-qubit state families: Bell-diagonal, Werner, isotropic, pointer, pure.

Every family here has maximally mixed marginals except general pure states.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from .errors import InvalidStateError, ValidationError
from .linalg import (
    PAULIS,
    as_matrix,
    projectors_sym_antisym,
    read_density_matrix,
)

PSD_TOL = 1e-10
BLOCK_TOL = 1e-9
BELL_FIT_TOL = 1e-8
# Rounding floor of (1 +/- c1 +/- c2 +/- c3)/4; smaller magnitudes are zeros.
EIGEN_SNAP = 1e-15

_I4 = np.eye(4, dtype=complex)
_CORRELATORS = tuple(np.kron(s, s) for s in PAULIS)


@dataclass(frozen=True)
class BellDiagonalParams:
    c1: float
    c2: float
    c3: float

    def __post_init__(self):
        for name in ("c1", "c2", "c3"):
            object.__setattr__(self, name, float(getattr(self, name)))
        report = validate_bell_params(self.c1, self.c2, self.c3)
        if not report.valid:
            raise InvalidStateError(report.reason)

    @property
    def coefficients(self) -> tuple[float, float, float]:
        return (self.c1, self.c2, self.c3)

    @property
    def c(self) -> float:
        """Largest correlation magnitude, max |c_i|."""
        return max(abs(self.c1), abs(self.c2), abs(self.c3))


@dataclass(frozen=True)
class WernerParams:
    p: float

    def __post_init__(self):
        object.__setattr__(self, "p", _unit_interval("p", self.p))


@dataclass(frozen=True)
class IsotropicParams:
    F: float

    def __post_init__(self):
        object.__setattr__(self, "F", _unit_interval("F", self.F))


@dataclass(frozen=True)
class PointerParams:
    C: float
    axis: int = 3

    def __post_init__(self):
        C = float(self.C)
        if not (-1.0 <= C <= 1.0):
            raise InvalidStateError(f"pointer parameter C must lie in [-1, 1], got {C}")
        if self.axis not in (1, 2, 3):
            raise ValidationError(f"pointer axis must be 1, 2 or 3, got {self.axis!r}")
        object.__setattr__(self, "C", C)


def _unit_interval(name: str, x) -> float:
    x = float(x)
    if not (0.0 <= x <= 1.0):
        raise InvalidStateError(f"{name} must lie in [0, 1], got {x}")
    return x


@dataclass(frozen=True)
class BellValidity:
    """Outcome of the positivity check for a Bell-diagonal triple."""

    valid: bool
    eigenvalues: tuple[float, float, float, float]
    coefficients_in_range: bool
    sum_at_most_one: bool
    reason: str = field(default="")

    @property
    def necessary_conditions(self) -> bool:
        return self.coefficients_in_range and self.sum_at_most_one

    def to_dict(self) -> dict:
        return {
            "valid": self.valid,
            "eigenvalues": list(self.eigenvalues),
            "coefficients_in_range": self.coefficients_in_range,
            "sum_at_most_one": self.sum_at_most_one,
            "reason": self.reason,
        }


def bell_eigenvalues_raw(c1: float, c2: float, c3: float) -> tuple[float, ...]:
    """The four eigenvalues of a Bell-diagonal matrix, unclipped."""
    return (
        (1 - c1 - c2 - c3) / 4,
        (1 - c1 + c2 + c3) / 4,
        (1 + c1 - c2 + c3) / 4,
        (1 + c1 + c2 - c3) / 4,
    )


def validate_bell_params(c1: float, c2: float, c3: float) -> BellValidity:
    lam = tuple(float(x) for x in bell_eigenvalues_raw(c1, c2, c3))
    in_range = all(-1.0 <= c <= 1.0 for c in (c1, c2, c3))
    sum_ok = c1 + c2 + c3 <= 1.0
    bad = [i for i, x in enumerate(lam) if x < -PSD_TOL]
    reason = ""
    if bad:
        reason = "; ".join(f"lambda_{i} = {lam[i]:.6g} < 0" for i in bad)
        reason = f"(c1, c2, c3) = ({c1}, {c2}, {c3}) is not a state: {reason}"
    return BellValidity(not bad, lam, in_range, sum_ok, reason)


def bell_diagonal_matrix(params: BellDiagonalParams) -> np.ndarray:
    rho = _I4.copy()
    for c, corr in zip(params.coefficients, _CORRELATORS):
        rho = rho + c * corr
    return rho / 4


def bell_diagonal_eigenvalues(params: BellDiagonalParams) -> np.ndarray:
    lam = np.array(bell_eigenvalues_raw(*params.coefficients))
    # Low-order entropies amplify rounding noise on zero eigenvalues (1e-17 ** 0.05 ~ 0.14).
    lam[lam <= EIGEN_SNAP] = 0.0
    return lam / lam.sum()


def bell_params_from_matrix(rho, tol: float = BELL_FIT_TOL) -> BellDiagonalParams:
    """Recover (c1, c2, c3) from a 4x4 matrix, requiring it to be Bell-diagonal."""
    rho = as_matrix(rho)
    if rho.shape != (4, 4):
        raise ValidationError(f"expected a 4x4 matrix, got {rho.shape}")
    cs = [float(np.trace(rho @ corr).real) for corr in _CORRELATORS]
    params = BellDiagonalParams(*cs)
    resid = np.max(np.abs(bell_diagonal_matrix(params) - rho))
    if resid > tol:
        raise ValidationError(
            f"matrix is not Bell-diagonal (max deviation {resid:.3e} from the "
            "fitted (c1, c2, c3) form)"
        )
    return params


def werner_to_bell(params: WernerParams) -> BellDiagonalParams:
    c = 4 * params.p / 3 - 1
    return BellDiagonalParams(c, c, c)


def isotropic_to_bell(params: IsotropicParams) -> BellDiagonalParams:
    c = 4 * params.F / 3 - 1 / 3
    return BellDiagonalParams(c, -c, c)


def pointer_to_bell(params: PointerParams) -> BellDiagonalParams:
    cs = [0.0, 0.0, 0.0]
    cs[params.axis - 1] = params.C
    return BellDiagonalParams(*cs)


def werner_matrix(params: WernerParams) -> np.ndarray:
    """Two-qubit Werner state written out entry by entry."""
    p = params.p
    d, o = 0.5 - p / 3, 2 * p / 3 - 0.5
    return np.array(
        [
            [p / 3, 0, 0, 0],
            [0, d, o, 0],
            [0, o, d, 0],
            [0, 0, 0, p / 3],
        ],
        dtype=complex,
    )


def werner_matrix_d(p: float, d: int) -> np.ndarray:
    """Werner state on C^d (x) C^d from the symmetric/antisymmetric projectors."""
    p = _unit_interval("p", p)
    p_sym, p_ass = projectors_sym_antisym(d)
    return 2 * p / (d * d + d) * p_sym + 2 * (1 - p) / (d * d - d) * p_ass


def isotropic_matrix(params: IsotropicParams) -> np.ndarray:
    F = params.F
    a, b, o = F / 3 + 1 / 6, 1 / 3 - F / 3, 2 * F / 3 - 1 / 6
    return np.array(
        [
            [a, 0, 0, o],
            [0, b, 0, 0],
            [0, 0, b, 0],
            [o, 0, 0, a],
        ],
        dtype=complex,
    )


def isotropic_matrix_d(F: float, d: int) -> np.ndarray:
    """Isotropic state on C^d (x) C^d: mixture of noise and |phi+><phi+|."""
    F = _unit_interval("F", F)
    if d < 2:
        raise ValidationError(f"local dimension must be >= 2, got {d}")
    phi = np.zeros(d * d, dtype=complex)
    phi[[j * d + j for j in range(d)]] = 1 / np.sqrt(d)
    proj = np.outer(phi, phi.conj())
    n = d * d
    return n / (n - 1) * ((1 - F) * np.eye(n) / n + (F - 1 / n) * proj)


def pointer_matrix(params: PointerParams) -> np.ndarray:
    return bell_diagonal_matrix(pointer_to_bell(params))


def pure_state_density(amplitudes, tol: float = 1e-8) -> np.ndarray:
    psi = np.asarray(amplitudes, dtype=complex).ravel()
    if psi.size != 4:
        raise ValidationError(f"expected 4 amplitudes, got {psi.size}")
    norm = np.vdot(psi, psi).real
    if abs(norm - 1.0) > tol:
        raise InvalidStateError(f"amplitudes are not normalised (|psi|^2 = {norm!r})")
    return np.outer(psi, psi.conj())


@dataclass(frozen=True)
class BlockTestResult:
    """Result of the commuting-normal-blocks test for zero von Neumann discord."""

    passed: bool
    witness: str | None
    residual: float

    def __bool__(self) -> bool:
        return self.passed


_BLOCK_NAMES = ("B11", "B12", "B21", "B22")


def classical_quantum_check(rho, tol: float = BLOCK_TOL) -> BlockTestResult:
    """Test whether the four 2x2 blocks of ``rho`` are normal and commute.

    The ten conditions are checked in a fixed order (four normality
    equations, then the six pairwise commutators); the witness names the
    first one violated beyond ``tol``.
    """
    rho = as_matrix(rho)
    if rho.shape != (4, 4):
        raise ValidationError(f"expected a 4x4 matrix, got {rho.shape}")
    blocks = dict(
        zip(_BLOCK_NAMES, (rho[:2, :2], rho[:2, 2:], rho[2:, :2], rho[2:, 2:]))
    )
    checks = []
    for name, b in blocks.items():
        h = b.conj().T
        checks.append((f"{name} {name}^dag = {name}^dag {name}", b @ h - h @ b))
    for (n1, b1), (n2, b2) in combinations(blocks.items(), 2):
        checks.append((f"{n1} {n2} = {n2} {n1}", b1 @ b2 - b2 @ b1))
    worst = 0.0
    for label, resid in checks:
        err = float(np.max(np.abs(resid)))
        worst = max(worst, err)
        if err > tol:
            return BlockTestResult(False, label, err)
    return BlockTestResult(True, None, worst)


def _kv(body: str) -> dict[str, str]:
    out = {}
    for item in filter(None, (s.strip() for s in body.split(","))):
        key, sep, value = item.partition("=")
        if not sep:
            raise ValidationError(f"expected key=value, got {item!r}")
        out[key.strip()] = value.strip()
    return out


def _num(kv: dict[str, str], key: str) -> float:
    try:
        return float(kv.pop(key))
    except KeyError:
        raise ValidationError(f"missing parameter {key!r}") from None
    except ValueError:
        raise ValidationError(f"parameter {key!r} is not a number") from None


@dataclass(frozen=True)
class StateSpec:
    """A parsed ``family:key=value,...`` state description."""

    family: str
    params: object
    text: str

    @property
    def bell(self) -> BellDiagonalParams:
        if self.family == "werner":
            return werner_to_bell(self.params)
        if self.family == "isotropic":
            return isotropic_to_bell(self.params)
        if self.family == "pointer":
            return pointer_to_bell(self.params)
        return self.params

    def matrix(self) -> np.ndarray:
        if self.family == "werner":
            return werner_matrix(self.params)
        if self.family == "isotropic":
            return isotropic_matrix(self.params)
        return bell_diagonal_matrix(self.bell)


def parse_state_spec(text: str) -> StateSpec:
    """Parse ``werner:p=..``, ``isotropic:F=..``, ``pointer:C=..[,axis=..]``,
    ``bell:c1=..,c2=..,c3=..`` or ``file:<path.json>``."""
    family, sep, body = text.partition(":")
    family = family.strip().lower()
    if not sep:
        raise ValidationError(f"state spec {text!r} lacks a 'family:' prefix")
    if family == "file":
        rho = read_density_matrix(body.strip())
        return StateSpec("bell", bell_params_from_matrix(rho), text)
    kv = _kv(body)
    if family == "werner":
        params = WernerParams(_num(kv, "p"))
    elif family == "isotropic":
        params = IsotropicParams(_num(kv, "F"))
    elif family == "pointer":
        C = _num(kv, "C")
        axis = kv.pop("axis", "3")
        if axis not in ("1", "2", "3"):
            raise ValidationError(f"pointer axis must be 1, 2 or 3, got {axis!r}")
        params = PointerParams(C, int(axis))
    elif family == "bell":
        params = BellDiagonalParams(_num(kv, "c1"), _num(kv, "c2"), _num(kv, "c3"))
    else:
        raise ValidationError(f"unknown state family {family!r}")
    if kv:
        raise ValidationError(f"unexpected parameters for {family}: {sorted(kv)}")
    return StateSpec(family, params, text)
