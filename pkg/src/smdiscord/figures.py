"""Batch CSV data for every discord figure: surfaces and comparison curves."""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from .sweep import (
    STATE_PARAM,
    SweepAxis,
    SweepSpec,
    write_compare_csv,
    write_sweep_csv,
)

STATE_RANGES = {"werner": (0.0, 1.0), "isotropic": (0.0, 1.0), "pointer": (-1.0, 1.0)}
STATE_STEPS = 51
ENTROPY_RANGE = (0.05, 5.0)
ENTROPY_STEPS = 100
SURFACE_FIXED = 5.0
COMPARE_Q, COMPARE_R = 0.5, 0.4
COMPARE_STEPS = 101


def surface_specs() -> dict[str, SweepSpec]:
    """Four surfaces per family: SM over (state, q) at r=5, SM over (state, r) at
    q=5, and the Renyi and Tsallis surfaces over (state, q)."""
    specs = {}
    for family, (lo, hi) in STATE_RANGES.items():
        state_axis = SweepAxis(STATE_PARAM[family], lo, hi, STATE_STEPS)
        q_axis = SweepAxis("q", *ENTROPY_RANGE, ENTROPY_STEPS)
        r_axis = SweepAxis("r", *ENTROPY_RANGE, ENTROPY_STEPS)
        specs[f"fig_{family}_sm_q.csv"] = SweepSpec(
            family, (state_axis, q_axis), "sharma_mittal", {"r": SURFACE_FIXED})
        specs[f"fig_{family}_sm_r.csv"] = SweepSpec(
            family, (state_axis, r_axis), "sharma_mittal", {"q": SURFACE_FIXED})
        specs[f"fig_{family}_renyi.csv"] = SweepSpec(family, (state_axis, q_axis), "renyi")
        specs[f"fig_{family}_tsallis.csv"] = SweepSpec(family, (state_axis, q_axis), "tsallis")
    return specs


def _axis_dict(a: SweepAxis) -> dict:
    return {"name": a.name, "lo": a.lo, "hi": a.hi, "steps": a.steps}


def reproduce_figures(outdir, absolute: bool = False) -> list[Path]:
    """Write all figure CSVs and ``manifest.json`` into ``outdir``."""
    out = Path(outdir)
    out.mkdir(parents=True, exist_ok=True)
    written = []
    entries = []
    for name, spec in surface_specs().items():
        path = out / name
        with path.open("w", newline="") as fh:
            rows = write_sweep_csv(spec, fh)
        written.append(path)
        entries.append({
            "file": name,
            "kind": "surface",
            "family": spec.family,
            "entropy": spec.kind,
            "axes": [_axis_dict(a) for a in spec.axes],
            "fixed": spec.fixed,
            "rows": rows,
        })
    for family, (lo, hi) in STATE_RANGES.items():
        name = f"fig_compare_{family}.csv"
        path = out / name
        grid = np.linspace(lo, hi, COMPARE_STEPS)
        with path.open("w", newline="") as fh:
            rows = write_compare_csv(family, grid, COMPARE_Q, COMPARE_R, fh, absolute)
        written.append(path)
        entries.append({
            "file": name,
            "kind": "comparison",
            "family": family,
            "axes": [{"name": STATE_PARAM[family], "lo": lo, "hi": hi, "steps": COMPARE_STEPS}],
            "fixed": {"q": COMPARE_Q, "r": COMPARE_R},
            "values": "absolute" if absolute else "signed",
            "rows": rows,
        })
    manifest = {
        "figures": entries,
        "notes": [
            "q and r ranges [0.05, 5] with 100 steps are a chosen default; grid "
            "points within 1e-6 of 1 are skipped.",
            "surface CSVs carry signed and absolute discord; comparison CSVs carry "
            + ("absolute" if absolute else "signed") + " values.",
        ],
    }
    (out / "manifest.json").write_text(json.dumps(manifest, indent=2, sort_keys=True) + "\n")
    return written
