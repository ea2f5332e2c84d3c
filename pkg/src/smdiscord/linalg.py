"""Dense complex matrix primitives for small bipartite systems.

Matrices are plain ``numpy`` arrays of dtype ``complex128``. Basis ordering of
a two-qubit space is ``|00>, |01>, |10>, |11>`` (first factor is party A).
"""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from .errors import InvalidStateError, ValidationError

HERMITIAN_TOL = 1e-10
TRACE_TOL = 1e-8
PSD_TOL = 1e-8

IDENTITY2 = np.eye(2, dtype=complex)
SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)
PAULIS = (SIGMA_X, SIGMA_Y, SIGMA_Z)


def as_matrix(m) -> np.ndarray:
    """Coerce ``m`` to a square, finite complex matrix."""
    a = np.asarray(m, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValidationError(f"expected a square matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise ValidationError("matrix has non-finite entries")
    return a


def _check_dims(rho: np.ndarray, dims: tuple[int, int]) -> tuple[int, int]:
    da, db = (int(d) for d in dims)
    if da < 1 or db < 1 or rho.shape[0] != da * db:
        raise ValidationError(
            f"dimension mismatch: matrix is {rho.shape[0]}x{rho.shape[0]}, dims={dims}"
        )
    return da, db


def tensor_product(a, b) -> np.ndarray:
    return np.kron(as_matrix(a), as_matrix(b))


def partial_trace_b(rho, dims: tuple[int, int] = (2, 2)) -> np.ndarray:
    """Trace out the second factor, returning the reduced state of party A."""
    rho = as_matrix(rho)
    da, db = _check_dims(rho, dims)
    return np.einsum("ijkj->ik", rho.reshape(da, db, da, db))


def partial_trace_a(rho, dims: tuple[int, int] = (2, 2)) -> np.ndarray:
    """Trace out the first factor, returning the reduced state of party B."""
    rho = as_matrix(rho)
    da, db = _check_dims(rho, dims)
    return np.einsum("ijik->jk", rho.reshape(da, db, da, db))


def partial_transpose_b(rho, dims: tuple[int, int] = (2, 2)) -> np.ndarray:
    """Transpose the second tensor factor: <i j|rho^T_B|k l> = <i l|rho|k j>."""
    rho = as_matrix(rho)
    da, db = _check_dims(rho, dims)
    return (
        rho.reshape(da, db, da, db).transpose(0, 3, 2, 1).reshape(da * db, da * db)
    )


def hermiticity_error(m) -> float:
    a = np.asarray(m)
    return float(np.max(np.abs(a - a.conj().T))) if a.size else 0.0


def jacobi_eigenvalues(stack, tol: float = 1e-15, max_sweeps: int = 60) -> np.ndarray:
    """Eigenvalues of a stack of Hermitian matrices by cyclic Jacobi rotations.

    Parameters
    ----------
    stack : array_like, shape (..., n, n)
        Hermitian matrices. Only the upper triangle drives the rotations, so
        the caller is responsible for Hermiticity.
    tol : float
        Sweeps stop once the off-diagonal Frobenius norm of every matrix is
        below ``tol`` times its full Frobenius norm.
    max_sweeps : int
        Hard cap on cyclic sweeps.

    Returns
    -------
    ndarray, shape (..., n)
        Real eigenvalues sorted in descending order.
    """
    a = np.array(stack, dtype=complex, copy=True)
    if a.ndim < 2 or a.shape[-1] != a.shape[-2]:
        raise ValidationError(f"expected (..., n, n) stack, got shape {a.shape}")
    lead = a.shape[:-2]
    n = a.shape[-1]
    a = a.reshape(-1, n, n)
    # Symmetrize so rounding asymmetry in the input cannot bias the rotations.
    a = 0.5 * (a + a.conj().transpose(0, 2, 1))
    scale = np.sqrt(np.sum(np.abs(a) ** 2, axis=(1, 2)))
    scale = np.where(scale > 0, scale, 1.0)
    pairs = [(p, q) for p in range(n - 1) for q in range(p + 1, n)]
    off_mask = ~np.eye(n, dtype=bool)

    for _ in range(max_sweeps):
        off = np.sqrt(np.sum(np.abs(a[:, off_mask]) ** 2, axis=1))
        if np.all(off <= tol * scale):
            break
        for p, q in pairs:
            apq = a[:, p, q]
            g = np.abs(apq)
            active = g > 1e-300
            if not np.any(active):
                continue
            app = a[:, p, p].real
            aqq = a[:, q, q].real
            safe_g = np.where(active, g, 1.0)
            phase = np.where(active, apq / safe_g, 1.0)
            tau = (aqq - app) / (2.0 * safe_g)
            t = np.where(tau >= 0, 1.0, -1.0) / (np.abs(tau) + np.hypot(1.0, tau))
            t = np.where(active, t, 0.0)
            c = 1.0 / np.sqrt(1.0 + t * t)
            s = t * c
            ph = phase.conj()  # e^{-i phi}
            # Columns: A <- A G with G = [[c, s], [-s e^{-i phi}, c e^{-i phi}]].
            col_p = a[:, :, p].copy()
            col_q = a[:, :, q].copy()
            a[:, :, p] = c[:, None] * col_p - (s * ph)[:, None] * col_q
            a[:, :, q] = s[:, None] * col_p + (c * ph)[:, None] * col_q
            # Rows: A <- G^dagger A.
            row_p = a[:, p, :].copy()
            row_q = a[:, q, :].copy()
            a[:, p, :] = c[:, None] * row_p - (s * phase)[:, None] * row_q
            a[:, q, :] = s[:, None] * row_p + (c * phase)[:, None] * row_q
            a[:, p, q] = 0.0
            a[:, q, p] = 0.0

    w = np.real(np.diagonal(a, axis1=1, axis2=2))
    w = -np.sort(-w, axis=1)
    return w.reshape(*lead, n)


def hermitian_eigenvalues(m, tol: float = HERMITIAN_TOL) -> np.ndarray:
    """Descending real spectrum of a Hermitian matrix.

    Raises ValidationError when ``max|m - m^dagger| > tol``.
    """
    m = as_matrix(m)
    err = hermiticity_error(m)
    if err > tol:
        raise ValidationError(f"matrix is not Hermitian (max |m - m^H| = {err:.3e})")
    return jacobi_eigenvalues(m)


def swap_operator(d: int) -> np.ndarray:
    """The flip operator sum_ij |i><j| (x) |j><i| on C^d (x) C^d."""
    p = np.zeros((d * d, d * d), dtype=complex)
    for i in range(d):
        for j in range(d):
            p[i * d + j, j * d + i] = 1.0
    return p


def projectors_sym_antisym(d: int) -> tuple[np.ndarray, np.ndarray]:
    """Projectors onto the symmetric and antisymmetric subspaces of C^d (x) C^d."""
    if d < 2:
        raise ValidationError(f"local dimension must be >= 2, got {d}")
    flip = swap_operator(d)
    ident = np.eye(d * d, dtype=complex)
    return 0.5 * (ident + flip), 0.5 * (ident - flip)


def check_density_matrix(rho, tol_trace: float = TRACE_TOL, tol_psd: float = PSD_TOL):
    """Validate Hermiticity, unit trace and positivity; return the matrix."""
    rho = as_matrix(rho)
    err = hermiticity_error(rho)
    if err > HERMITIAN_TOL:
        raise InvalidStateError(f"density matrix is not Hermitian (error {err:.3e})")
    tr = np.trace(rho).real
    if abs(tr - 1.0) > tol_trace:
        raise InvalidStateError(f"density matrix has trace {tr!r}, expected 1")
    lam_min = hermitian_eigenvalues(rho)[-1]
    if lam_min < -tol_psd:
        raise InvalidStateError(
            f"density matrix is not positive semidefinite (min eigenvalue {lam_min:.3e})"
        )
    return rho


def read_density_matrix(path) -> np.ndarray:
    """Load ``{"dim": n, "re": [[...]], "im": [[...]]}`` and validate it."""
    try:
        data = json.loads(Path(path).read_text())
        dim = int(data["dim"])
        re = np.asarray(data["re"], dtype=float)
        im = np.asarray(data.get("im", np.zeros_like(re)), dtype=float)
    except (OSError, ValueError, KeyError, TypeError) as exc:
        raise ValidationError(f"cannot read density matrix from {path}: {exc}") from exc
    if re.shape != (dim, dim) or im.shape != (dim, dim):
        raise ValidationError(
            f"{path}: re/im must be {dim}x{dim}, got {re.shape} and {im.shape}"
        )
    return check_density_matrix(re + 1j * im)


def write_density_matrix(path, rho) -> None:
    rho = as_matrix(rho)
    payload = {
        "dim": rho.shape[0],
        "re": rho.real.tolist(),
        "im": rho.imag.tolist(),
    }
    Path(path).write_text(json.dumps(payload, indent=2) + "\n")
