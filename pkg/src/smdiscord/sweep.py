"""Single-point evaluation, CSV parameter sweeps and zero-discord bisection."""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional

import numpy as np

from .discord import (
    DiscordResult,
    discord_bell,
    discord_isotropic,
    discord_pointer,
    discord_werner,
    negativity,
)
from .entropy import EntropyParams
from .errors import NumericalDomainError, ValidationError
from .linalg import hermitian_eigenvalues
from .states import (
    BellDiagonalParams,
    IsotropicParams,
    PointerParams,
    StateSpec,
    WernerParams,
    bell_diagonal_matrix,
    isotropic_matrix,
    parse_state_spec,
    pointer_matrix,
    validate_bell_params,
    werner_matrix,
)

FAMILIES = ("werner", "isotropic", "pointer", "bell")
STATE_PARAM = {"werner": "p", "isotropic": "F", "pointer": "C"}
PARAM_DOMAIN = {
    "p": (0.0, 1.0),
    "F": (0.0, 1.0),
    "C": (-1.0, 1.0),
    "q": (0.0, np.inf),
    "r": (-np.inf, np.inf),
}
SINGULAR_SKIP = 1e-6
CONSISTENCY_TOL = 1e-9
DIGITS = 12
COMPARE_KINDS = ("sharma_mittal", "renyi", "tsallis", "von_neumann")


def fmt(x: float) -> str:
    return f"{x:.{DIGITS}g}"


@dataclass(frozen=True)
class SweepAxis:
    name: str
    lo: float
    hi: float
    steps: int

    def __post_init__(self):
        if self.name not in PARAM_DOMAIN:
            raise ValidationError(f"cannot sweep {self.name!r}; choose from {sorted(PARAM_DOMAIN)}")
        if self.steps < 2:
            raise ValidationError(f"sweep over {self.name} needs >= 2 steps, got {self.steps}")
        lo, hi = PARAM_DOMAIN[self.name]
        if not (lo <= self.lo <= hi and lo <= self.hi <= hi) or self.lo >= self.hi:
            raise ValidationError(
                f"sweep range [{self.lo}, {self.hi}] for {self.name} is empty or outside [{lo}, {hi}]"
            )
        if self.name == "q" and self.lo <= 0:
            raise ValidationError("q sweeps must start above 0")

    @classmethod
    def parse(cls, text: str) -> "SweepAxis":
        """Parse ``name:lo:hi:steps``."""
        parts = text.split(":")
        if len(parts) != 4:
            raise ValidationError(f"sweep spec {text!r} must look like param:lo:hi:steps")
        try:
            return cls(parts[0], float(parts[1]), float(parts[2]), int(parts[3]))
        except ValueError as exc:
            raise ValidationError(f"bad sweep spec {text!r}: {exc}") from None

    def values(self) -> np.ndarray:
        v = np.linspace(self.lo, self.hi, self.steps)
        if self.name in ("q", "r"):
            v = v[np.abs(v - 1.0) > SINGULAR_SKIP]
        return v


@dataclass(frozen=True)
class SweepSpec:
    family: str
    axes: tuple[SweepAxis, ...]
    kind: str
    fixed: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValidationError(f"unknown state family {self.family!r}")
        if not 1 <= len(self.axes) <= 2:
            raise ValidationError("a sweep needs one or two swept parameters")
        names = [a.name for a in self.axes]
        if len(set(names)) != len(names):
            raise ValidationError(f"parameter swept twice: {names}")
        allowed = {"q", "r"} | ({STATE_PARAM[self.family]} if self.family in STATE_PARAM else set())
        for n in names:
            if n not in allowed:
                raise ValidationError(f"{self.family} sweeps accept {sorted(allowed)}, not {n!r}")
        if self.kind == "von_neumann" and ({"q", "r"} & set(names)):
            raise ValidationError("von_neumann entropy has no q or r to sweep")
        if self.kind in ("renyi", "tsallis") and "r" in names:
            raise ValidationError(f"{self.kind} entropy has no r parameter to sweep")


def family_discord(family: str, value, ent: EntropyParams, axis: int = 3) -> DiscordResult:
    """Closed-form discord for one family member; ``value`` is p, F, C or a Bell triple."""
    if family == "werner":
        return discord_werner(WernerParams(value), ent)
    if family == "isotropic":
        return discord_isotropic(IsotropicParams(value), ent)
    if family == "pointer":
        return discord_pointer(PointerParams(value, axis), ent)
    if family == "bell":
        return discord_bell(value, ent)
    raise ValidationError(f"unknown state family {family!r}")


def family_negativity(family: str, value, axis: int = 3) -> float:
    if family == "werner":
        rho = werner_matrix(WernerParams(value))
    elif family == "isotropic":
        rho = isotropic_matrix(IsotropicParams(value))
    elif family == "pointer":
        rho = pointer_matrix(PointerParams(value, axis))
    else:
        rho = bell_diagonal_matrix(value)
    return negativity(rho)


def _entropy(kind: str, q: Optional[float], r: Optional[float]) -> EntropyParams:
    if kind == "von_neumann":
        return EntropyParams.von_neumann()
    if kind == "sharma_mittal":
        return EntropyParams.sharma_mittal(q, r)
    return EntropyParams(kind, q)


def eval_point(state, ent: EntropyParams) -> dict:
    """Discord, negativity, spectrum and validity for one state."""
    spec = parse_state_spec(state) if isinstance(state, str) else state
    if not isinstance(spec, StateSpec):
        raise ValidationError(f"expected a state spec, got {state!r}")
    bell = spec.bell
    if spec.family in STATE_PARAM:
        value = getattr(spec.params, STATE_PARAM[spec.family])
        res = family_discord(spec.family, value, ent, getattr(spec.params, "axis", 3))
    else:
        res = discord_bell(bell, ent)
    rho = spec.matrix()
    record = {
        "state": spec.text,
        "family": spec.family,
        "c": list(bell.coefficients),
        "entropy": ent.to_dict(),
        **res.to_dict(),
        "negativity": negativity(rho),
        "eigenvalues": hermitian_eigenvalues(rho).tolist(),
        "validity": validate_bell_params(*bell.coefficients).to_dict(),
    }
    return record


def _fixed(spec: SweepSpec, name: str, default=None):
    v = spec.fixed.get(name, default)
    if v is None:
        raise ValidationError(f"{spec.family} sweep needs a fixed value for {name!r}")
    return v


def sweep_rows(spec: SweepSpec) -> Iterator[list]:
    """Yield rows in row-major grid order (last axis varies fastest)."""
    grids = [a.values() for a in spec.axes]
    names = [a.name for a in spec.axes]
    axis = int(spec.fixed.get("axis", 3))
    state_name = STATE_PARAM.get(spec.family)
    # Negativity depends on the state only, not on q or r.
    neg_cache: dict = {}
    for point in _product(grids):
        values = dict(zip(names, point))
        q = values.get("q", spec.fixed.get("q"))
        r = values.get("r", spec.fixed.get("r"))
        ent = _entropy(spec.kind, q, r)
        if spec.family == "bell":
            state = BellDiagonalParams(
                _fixed(spec, "c1"), _fixed(spec, "c2"), _fixed(spec, "c3")
            )
        else:
            state = values.get(state_name, spec.fixed.get(state_name))
            if state is None:
                raise ValidationError(f"{spec.family} sweep needs {state_name!r}")
        res = family_discord(spec.family, state, ent, axis)
        check_row(res)
        key = state if spec.family != "bell" else state.coefficients
        if key not in neg_cache:
            neg_cache[key] = family_negativity(spec.family, state, axis)
        yield [*point, res.signed, res.absolute, res.marginal_entropy,
               res.conditional_term, res.joint_entropy, neg_cache[key]]


def _product(grids) -> Iterator[tuple]:
    if len(grids) == 1:
        for x in grids[0]:
            yield (float(x),)
    else:
        for x in grids[0]:
            for y in grids[1]:
                yield (float(x), float(y))


def check_row(res: DiscordResult) -> None:
    gap = abs(res.signed - (res.marginal_entropy + res.conditional_term - res.joint_entropy))
    if gap > CONSISTENCY_TOL:
        raise NumericalDomainError(f"discord terms inconsistent by {gap:.3e}")


SWEEP_COLUMNS = ["signed", "absolute", "marginal_entropy", "conditional_term",
                 "joint_entropy", "negativity"]


def write_sweep_csv(spec: SweepSpec, fh) -> int:
    writer = csv.writer(fh, lineterminator="\n")
    writer.writerow([a.name for a in spec.axes] + SWEEP_COLUMNS)
    n = 0
    for row in sweep_rows(spec):
        writer.writerow([fmt(x) for x in row])
        n += 1
    return n


def compare_rows(
    family: str, values: Iterable[float], q: float, r: float, absolute: bool = False, axis: int = 3
) -> Iterator[list]:
    """All four discords and the negativity along a state-parameter grid."""
    ents = [_entropy(k, q, r) for k in COMPARE_KINDS]
    for v in values:
        row = [float(v)]
        for ent in ents:
            res = family_discord(family, float(v), ent, axis)
            check_row(res)
            row.append(res.absolute if absolute else res.signed)
        row.append(family_negativity(family, float(v), axis))
        yield row


def write_compare_csv(family: str, values, q: float, r: float, fh,
                      absolute: bool = False, axis: int = 3) -> int:
    writer = csv.writer(fh, lineterminator="\n")
    writer.writerow([STATE_PARAM[family], *COMPARE_KINDS, "negativity"])
    n = 0
    for row in compare_rows(family, values, q, r, absolute, axis):
        writer.writerow([fmt(x) for x in row])
        n += 1
    return n


def sweep_to_string(spec: SweepSpec) -> str:
    buf = io.StringIO()
    write_sweep_csv(spec, buf)
    return buf.getvalue()


@dataclass(frozen=True)
class RootQuery:
    family: str
    ent: EntropyParams
    lo: float
    hi: float
    tol: float = 1e-8
    axis: int = 3

    def __post_init__(self):
        if self.family not in STATE_PARAM:
            raise ValidationError(
                f"root finding needs a one-parameter family {sorted(STATE_PARAM)}, got {self.family!r}"
            )
        if not self.lo < self.hi:
            raise ValidationError(f"bracket ({self.lo}, {self.hi}) is empty")
        if not self.tol > 0:
            raise ValidationError("tolerance must be positive")


@dataclass(frozen=True)
class RootResult:
    root: float
    lo: float
    hi: float
    value: float
    iterations: int

    def to_dict(self) -> dict:
        return {"root": self.root, "lo": self.lo, "hi": self.hi,
                "signed_discord_at_root": self.value, "iterations": self.iterations}


def find_zero_discord(query: RootQuery) -> RootResult:
    """Bisect the signed discord along the state parameter.

    Stops when the bracket is no wider than ``query.tol`` and returns its
    midpoint; the final bracket always straddles the sign change.
    """
    def f(x: float) -> float:
        return family_discord(query.family, x, query.ent, query.axis).signed

    lo, hi = query.lo, query.hi
    f_lo, f_hi = f(lo), f(hi)
    if f_lo == 0.0:
        return RootResult(lo, lo, lo, 0.0, 0)
    if f_hi == 0.0:
        return RootResult(hi, hi, hi, 0.0, 0)
    if f_lo * f_hi > 0:
        raise NumericalDomainError(
            f"signed discord has no sign change on [{lo}, {hi}] "
            f"(values {f_lo:.6g}, {f_hi:.6g})"
        )
    it = 0
    while hi - lo > query.tol:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        f_mid = f(mid)
        it += 1
        if f_mid == 0.0:
            lo = hi = mid
            break
        if (f_mid < 0) == (f_lo < 0):
            lo, f_lo = mid, f_mid
        else:
            hi = mid
    root = 0.5 * (lo + hi)
    return RootResult(root, lo, hi, f(root), it)
