"""Acceptance suite: one PASS/FAIL line per criterion at its stated tolerance."""

import csv
import time

import numpy as np
import pytest

from smdiscord.cli import main
from smdiscord.discord import discord_bell, discord_pointer, negativity
from smdiscord.entropy import EntropyParams
from smdiscord.linalg import hermitian_eigenvalues
from smdiscord.oracle import OracleScan
from smdiscord.states import (
    BellDiagonalParams,
    IsotropicParams,
    PointerParams,
    WernerParams,
    bell_diagonal_eigenvalues,
    bell_diagonal_matrix,
    classical_quantum_check,
    isotropic_matrix,
    pointer_matrix,
    pointer_to_bell,
    validate_bell_params,
    werner_matrix,
    werner_to_bell,
)
from smdiscord.sweep import RootQuery, find_zero_discord
from smdiscord.discord import discord_werner

from conftest import ORACLE_ENTROPIES, random_valid_bell, valid_bell_grid


@pytest.fixture
def report(capsys):
    def emit(n, ok, detail):
        with capsys.disabled():
            print(f"\n[ACCEPTANCE {n}] {'PASS' if ok else 'FAIL'}: {detail}")
    return emit


def test_criterion_1_anchor_values(report):
    t0 = time.perf_counter()
    w = werner_to_bell(WernerParams(0.6))
    sm = discord_bell(w, EntropyParams.sharma_mittal(0.5, 0.4)).signed
    ts = discord_bell(w, EntropyParams.tsallis(0.5)).signed
    dt = time.perf_counter() - t0
    ok = abs(sm + 0.3992) <= 1e-3 and abs(ts + 0.3057) <= 1e-3 and dt < 1
    report(1, ok, f"SM(.5,.4) = {sm:.6f} (target -0.3992), Tsallis(.5) = {ts:.6f} "
                  f"(target -0.3057), {dt * 1e3:.1f} ms")
    assert ok


def test_criterion_2_zero_discord_roots(report):
    out = []
    ok = True
    for ent, lo, hi in [(EntropyParams.tsallis(0.5), 0.2546, 0.2547),
                        (EntropyParams.sharma_mittal(0.5, 0.4), 0.2293, 0.2294)]:
        t0 = time.perf_counter()
        root = find_zero_discord(RootQuery("werner", ent, 0.2, 0.3)).root
        dt = time.perf_counter() - t0
        ok &= lo < root < hi and dt < 1
        out.append(f"{ent.label} root {root:.10f} in ({lo}, {hi}), {dt * 1e3:.1f} ms")
    report(2, ok, "; ".join(out))
    assert ok


def test_criterion_3_oracle_equivalence(report):
    t0 = time.perf_counter()
    states = valid_bell_grid(0.25)
    worst, where = 0.0, None
    for params in states:
        scan = OracleScan(bell_diagonal_matrix(params), grid=2000)
        for ent in ORACLE_ENTROPIES:
            gap = abs(scan.evaluate(ent).result.signed - discord_bell(params, ent).signed)
            if gap > worst:
                worst, where = gap, (params.coefficients, ent.label)
    dt = time.perf_counter() - t0
    ok = worst <= 1e-6 and dt < 60
    report(3, ok, f"{len(states)} states x {len(ORACLE_ENTROPIES)} entropies, "
                  f"max |oracle - closed| = {worst:.2e} at {where}, {dt:.1f} s")
    assert ok


def test_criterion_4_limit_ladder(report, rng):
    t0 = time.perf_counter()
    eps = 1e-4
    states = random_valid_bell(rng, 20)
    gaps = {"renyi": 0.0, "tsallis": 0.0, "von_neumann": 0.0}
    for params in states:
        for q in (0.5, 2.0):
            ren = discord_bell(params, EntropyParams.renyi(q)).signed
            tsa = discord_bell(params, EntropyParams.tsallis(q)).signed
            for s in (1, -1):
                sm_r1 = discord_bell(params, EntropyParams.sharma_mittal(q, 1 + s * eps)).signed
                sm_rq = discord_bell(params, EntropyParams.sharma_mittal(q, q + s * eps)).signed
                gaps["renyi"] = max(gaps["renyi"], abs(sm_r1 - ren))
                gaps["tsallis"] = max(gaps["tsallis"], abs(sm_rq - tsa))
        vn = discord_bell(params, EntropyParams.von_neumann()).signed
        for s in (1, -1):
            sm_11 = discord_bell(params, EntropyParams.sharma_mittal(1 + s * eps, 1 + s * eps)).signed
            gaps["von_neumann"] = max(gaps["von_neumann"], abs(sm_11 - vn))
    dt = time.perf_counter() - t0
    rungs = {k: v <= 1e-3 for k, v in gaps.items()}
    ok = all(rungs.values()) and dt < 5
    detail = ", ".join(f"SM->{k} gap {v:.2e} {'ok' if rungs[k] else 'FAIL'}"
                       for k, v in gaps.items())
    report(4, ok, f"{detail}; {dt:.2f} s")
    assert ok


def test_criterion_5_pointer_family(report):
    ents = [EntropyParams.sharma_mittal(0.5, 0.4), EntropyParams.sharma_mittal(2.0, 3.0),
            EntropyParams.renyi(0.5), EntropyParams.renyi(2.0),
            EntropyParams.tsallis(0.5), EntropyParams.tsallis(2.0)]
    vn_worst, cq_all, form_worst = 0.0, True, 0.0
    for C in np.linspace(-1, 1, 201):
        pp = PointerParams(float(C))
        vn_worst = max(vn_worst, abs(discord_pointer(pp, EntropyParams.von_neumann()).signed))
        cq_all &= bool(classical_quantum_check(pointer_matrix(pp)))
        for ent in ents:
            gap = abs(discord_pointer(pp, ent).signed - discord_bell(pointer_to_bell(pp), ent).signed)
            form_worst = max(form_worst, gap)
    ok = vn_worst <= 1e-9 and cq_all and form_worst <= 1e-12
    report(5, ok, f"max |vN| = {vn_worst:.1e}, block test all true = {cq_all}, "
                  f"max closed-form gap = {form_worst:.1e}")
    assert ok


def test_criterion_6_negativity(report):
    grid = np.linspace(0, 1, 201)
    w_gap = max(abs(negativity(werner_matrix(WernerParams(p)))
                    - 0.5 * (abs(p - 0.5) - (p - 0.5))) for p in grid)
    i_gap = max(abs(negativity(isotropic_matrix(IsotropicParams(F)))
                    - 0.5 * (abs(0.5 - F) - (0.5 - F))) for F in grid)
    upper = grid[grid >= 0.5]
    neg_zero = max(negativity(werner_matrix(WernerParams(p))) for p in upper)
    vn = EntropyParams.von_neumann()
    band = grid[(grid >= 0.5) & (grid < 0.75)]
    vn_min = min(discord_werner(WernerParams(p), vn).signed for p in band)
    ok = w_gap <= 1e-12 and i_gap <= 1e-12 and neg_zero <= 1e-12 and vn_min > 0
    report(6, ok, f"Werner gap {w_gap:.1e}, isotropic gap {i_gap:.1e}, max N(p>=.5) "
                  f"{neg_zero:.1e}, min vN discord on [.5,.75) {vn_min:.3e}")
    assert ok


def test_criterion_7_spectra_and_validity(report):
    eig_gap = 0.0
    for params in valid_bell_grid(0.1):
        closed = np.sort(bell_diagonal_eigenvalues(params))[::-1]
        eig_gap = max(eig_gap, np.max(np.abs(closed - hermitian_eigenvalues(
            bell_diagonal_matrix(params)))))
    mismatches, range_bad, accepted = 0, 0, 0
    axis = np.linspace(-1.25, 1.25, 21)
    for c1 in axis:
        for c2 in axis:
            for c3 in axis:
                rep = validate_bell_params(c1, c2, c3)
                c = np.array([c1, c2, c3])
                rho = 0.25 * np.array([[1 + c3, 0, 0, c1 - c2], [0, 1 - c3, c1 + c2, 0],
                                       [0, c1 + c2, 1 - c3, 0], [c1 - c2, 0, 0, 1 + c3]])
                psd = hermitian_eigenvalues(rho)[-1] >= -1e-10
                mismatches += rep.valid != psd
                if rep.valid:
                    accepted += 1
                    range_bad += not (np.all(np.abs(c) <= 1) and c.sum() <= 1)
    ok = eig_gap <= 1e-10 and mismatches == 0 and range_bad == 0
    report(7, ok, f"max eigenvalue gap {eig_gap:.1e}, validity/PSD mismatches {mismatches}, "
                  f"{accepted} accepted points, range or sum violations {range_bad}")
    assert ok


def _read(path):
    with open(path) as fh:
        rows = list(csv.reader(fh))
    return rows[0], np.array(rows[1:], dtype=float)


def test_criterion_8_figures(report, tmp_path, capsys):
    dirs = [tmp_path / "run1", tmp_path / "run2"]
    codes = [main(["figures", "--out", str(d)]) for d in dirs]
    capsys.readouterr()
    csvs = sorted(p.name for p in dirs[0].glob("*.csv"))
    surfaces = [n for n in csvs if not n.startswith("fig_compare_")]
    identical = all((dirs[0] / n).read_bytes() == (dirs[1] / n).read_bytes()
                    for n in csvs + ["manifest.json"])
    header, data = _read(dirs[0] / "fig_compare_werner.csv")
    col = {name: i for i, name in enumerate(header)}
    discords = ["sharma_mittal", "renyi", "tsallis", "von_neumann"]
    positive = np.all(data[:, [col[k] for k in discords]] > 0, axis=1)
    ren = data[positive, col["renyi"]]
    beaten = {k: int(np.sum(data[positive, col[k]] > ren)) for k in discords if k != "renyi"}
    renyi_top = all(v == 0 for v in beaten.values())
    ok = codes == [0, 0] and len(surfaces) == 12 and identical and renyi_top
    losing = ", ".join(f"{k} > renyi at {v}" for k, v in beaten.items())
    report(8, ok, f"{len(surfaces)} surface CSVs (+{len(csvs) - len(surfaces)} comparison), "
                  f"byte-identical reruns = {identical}; Werner comparison: {positive.sum()} "
                  f"points with all discords positive, {losing}")
    assert ok
