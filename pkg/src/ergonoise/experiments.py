"""Parameter sweeps reproducing the figure-level results: single-qubit
noise curves, Bell-diagonal work vs correlations, enhancement grids for
locally coherent states, multipartite scaling, a randomized separable
census, Lindblad/Kraus consistency, and the entangled example.

Every run returns a ``SweepResult`` whose columns serialize to CSV and
whose metadata (including the dephasing convention and any seed) lands
in a JSON sidecar, so identical configurations give byte-identical
files.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import channels as ch
from . import workx
from .qstate import (
    Hamiltonian,
    apply_hadamard_pair,
    bloch_to_density,
    classical_quantum,
    density_to_bloch,
    entangled_theta,
    hamiltonian,
    make_bds,
    philox_stream,
    random_separable,
    symmetric_pair,
    symmetrized_multipartite,
)
from .correlations import bds_eigenvalues, correlation_work_check

DEFAULT_Q_POINTS = 101
AREA_Q_POINTS = 501
ENHANCEMENT_AREA_TOL = 1e-12


def q_grid_default(points: int = DEFAULT_Q_POINTS) -> np.ndarray:
    if points < 2:
        raise ValueError("grids need at least two points")
    return np.linspace(0.0, 1.0, points)


@dataclass
class SweepResult:
    """Column-oriented sweep records plus run metadata."""

    columns: dict[str, np.ndarray]
    metadata: dict = field(default_factory=dict)

    def __post_init__(self):
        lengths = {len(v) for v in self.columns.values()}
        if len(lengths) > 1:
            raise ValueError(f"ragged columns: lengths {sorted(lengths)}")

    def __len__(self):
        return 0 if not self.columns else len(next(iter(self.columns.values())))


@dataclass(frozen=True)
class EnhancementSummary:
    """Peak and integrated noise-induced gain of coherent work."""

    delta_wc_max: float
    argmax_q: float
    area_ap: float
    fraction_enhancing: float | None = None


def enhancement_summary(q_grid, delta_wc) -> EnhancementSummary:
    """Peak gain and the trapezoidal integral of its positive part."""
    q_grid = np.asarray(q_grid, dtype=float)
    delta_wc = np.asarray(delta_wc, dtype=float)
    if q_grid.size < 2:
        raise ValueError("enhancement summary needs at least two grid points")
    if q_grid.shape != delta_wc.shape:
        raise ValueError("grid and values must align")
    idx = int(delta_wc.argmax())
    area = float(np.trapezoid(np.clip(delta_wc, 0.0, None), q_grid))
    return EnhancementSummary(
        delta_wc_max=float(delta_wc[idx]),
        argmax_q=float(q_grid[idx]),
        area_ap=area,
    )


def _dephasing_label(h: Hamiltonian) -> str:
    if h.basis is not None:
        return "product_basis"
    if h.collective:
        return "collective"
    return "block"


def channel_hamiltonian(kind: str, n: int) -> Hamiltonian:
    """Per-channel energy choice used by the grid/census/scaling runs.

    The dephasing kinds only show enhancement against an x-aligned field,
    and depolarizing needs the interacting form; everything else uses the
    local excitation energy.
    """
    kind = ch.canonical_kind(kind)
    if kind in (ch.PHASE_FLIP, ch.PHASE_DAMPING):
        return hamiltonian("x_sum", n)
    if kind == ch.DEPOLARIZING:
        if n != 2:
            raise ValueError("the interacting Hamiltonian is two-qubit only")
        return hamiltonian("xx_interacting", 2, h=0.5, j=0.4)
    return hamiltonian("excitation", n)


# ---------------------------------------------------------------------------
# single qubit and Bell-diagonal sweeps
# ---------------------------------------------------------------------------


def sweep_single(kind, n, basis: str = "computational", q_grid=None) -> SweepResult:
    """Work split of one qubit along a noise-strength grid.

    Records the closed-form total/incoherent/coherent work and coherence
    per point, with the enhancement threshold (when the channel has one)
    and the amplitude-damping branch point in the metadata.
    """
    kind = ch.canonical_kind(kind)
    q_grid = q_grid_default() if q_grid is None else np.asarray(q_grid, dtype=float)
    n = np.asarray(n, dtype=float)
    norm = float(np.linalg.norm(n))
    if norm > 1.0 + 1e-12:
        raise ValueError(f"Bloch vector norm {norm} exceeds 1")
    rows = [workx.closed_form_single(kind, q, n, basis=basis) for q in q_grid]
    cols = {
        "q": q_grid,
        "W": np.array([r.total for r in rows]),
        "WI": np.array([r.incoherent for r in rows]),
        "WC": np.array([r.coherent for r in rows]),
        "C": np.array([r.l1_coherence for r in rows]),
    }
    meta = {
        "experiment": "single",
        "channel": kind,
        "basis": basis,
        "bloch": list(map(float, n)),
        "q_points": len(q_grid),
    }
    threshold_kind = {
        (ch.BIT_FLIP, "computational"): ch.BIT_FLIP,
        (ch.BIT_PHASE_FLIP, "computational"): ch.BIT_PHASE_FLIP,
        (ch.PHASE_FLIP, "x"): "phase_flip_x",
    }.get((kind, basis))
    if threshold_kind is not None:
        qb = workx.threshold_q(threshold_kind, n)
        meta["threshold_q"] = qb
        cols["threshold"] = np.full(len(q_grid), qb)
    if kind == ch.AMPLITUDE_DAMPING:
        meta["branch_q"] = abs(n[2]) / (1.0 + abs(n[2]))
    return SweepResult(cols, meta)


def _crossing_qs(c, spec_kind: str, both: bool, q_grid) -> list[float]:
    """Noise strengths where the largest closed-form eigenvalue changes slot."""

    def argmax_at(q):
        mapped = ch.bds_param_map(ch.ChannelSpec(spec_kind, q), c, both)
        return int(np.argmax(bds_eigenvalues(mapped)))

    crossings = []
    for q0, q1 in zip(q_grid[:-1], q_grid[1:]):
        i0, i1 = argmax_at(q0), argmax_at(q1)
        if i0 == i1:
            continue
        lo, hi = q0, q1
        # bisect on the gap between the two competing eigenvalues
        while hi - lo > 1e-9:
            mid = 0.5 * (lo + hi)
            mapped = ch.bds_param_map(ch.ChannelSpec(spec_kind, mid), c, both)
            lams = bds_eigenvalues(mapped)
            if lams[i0] >= lams[i1]:
                lo = mid
            else:
                hi = mid
        crossings.append(0.5 * (lo + hi))
    return crossings


def sweep_bds(c, kind, q_grid=None, both_qubits: bool = True) -> SweepResult:
    """Bell-diagonal work and correlations along a noise grid.

    Includes the identity residual per point and any eigenvalue-crossing
    strengths (located by bisection) in the metadata.
    """
    kind = ch.canonical_kind(kind)
    c = np.asarray(c, dtype=float)
    q_grid = q_grid_default() if q_grid is None else np.asarray(q_grid, dtype=float)
    h = hamiltonian("z_sum", 2)
    reports = [
        correlation_work_check(c, ch.ChannelSpec(kind, q), both_qubits, h) for q in q_grid
    ]
    rho0 = make_bds(c)
    wi = []
    wc = []
    for q in q_grid:
        targets = (0, 1) if both_qubits else (0,)
        evolved = ch.apply_local(rho0, ch.ChannelSpec(kind, q), targets)
        rep = workx.decompose(evolved, h)
        wi.append(rep.incoherent)
        wc.append(rep.coherent)
    cols = {
        "q": q_grid,
        "W": np.array([r.total_ergotropy for r in reports]),
        "WI": np.array(wi),
        "WC": np.array(wc),
        "gqc": np.array([r.gqc for r in reports]),
        "gcc": np.array([r.gcc for r in reports]),
        "avg": np.array([r.average for r in reports]),
        "residual": np.array([r.residual for r in reports]),
    }
    meta = {
        "experiment": "bds",
        "channel": kind,
        "c": list(map(float, c)),
        "both_qubits": both_qubits,
        "identity_valid": bool(reports[0].identity_valid),
        "dephasing": _dephasing_label(h),
        "q_points": len(q_grid),
    }
    if kind != ch.AMPLITUDE_DAMPING:
        meta["eigenvalue_crossings"] = _crossing_qs(c, kind, both_qubits, q_grid)
    return SweepResult(cols, meta)


# ---------------------------------------------------------------------------
# enhancement grids (locally coherent states)
# ---------------------------------------------------------------------------


def _delta_wc_curve(rho0, kind, h: Hamiltonian, q_grid) -> np.ndarray:
    wc0 = workx.decompose(rho0, h).coherent
    out = np.empty(len(q_grid))
    for i, q in enumerate(q_grid):
        evolved = ch.apply_local(rho0, ch.ChannelSpec(kind, q))
        out[i] = workx.decompose(evolved, h).coherent - wc0
    return out


def grid_delta_wc(family: str, kind, axis_grid, q_grid=None, *, p=0.5, a=0.1, c=0.3, d=0.2, h: Hamiltonian | None = None) -> SweepResult:
    """Coherent-work gain over (state parameter, q) for a two-qubit family.

    family "classical_quantum" sweeps the coherence c at fixed (p, a);
    family "symmetric_pair" sweeps the shared population a at fixed
    (p, c, d). Rows are emitted axis-major.
    """
    kind = ch.canonical_kind(kind)
    q_grid = q_grid_default() if q_grid is None else np.asarray(q_grid, dtype=float)
    axis_grid = np.asarray(axis_grid, dtype=float)
    if h is None:
        h = channel_hamiltonian(kind, 2)
    if family == "classical_quantum":
        builder = lambda v: classical_quantum(p, a, v)
        axis_name = "c"
    elif family == "symmetric_pair":
        builder = lambda v: symmetric_pair(p, v, c, d)
        axis_name = "a"
    else:
        raise ValueError(f"unknown state family {family!r}")
    axis_col, q_col, dwc_col, wc0_col = [], [], [], []
    for v in axis_grid:
        rho0 = builder(v)
        wc0 = workx.decompose(rho0, h).coherent
        curve = _delta_wc_curve(rho0, kind, h, q_grid)
        axis_col.extend([v] * len(q_grid))
        q_col.extend(q_grid)
        wc0_col.extend([wc0] * len(q_grid))
        dwc_col.extend(curve)
    cols = {
        axis_name: np.array(axis_col),
        "q": np.array(q_col),
        "WC0": np.array(wc0_col),
        "delta_WC": np.array(dwc_col),
    }
    meta = {
        "experiment": "grid",
        "family": family,
        "channel": kind,
        "p": p,
        "hamiltonian": h.kind,
        "dephasing": _dephasing_label(h),
        "axis": axis_name,
        "axis_points": len(axis_grid),
        "q_points": len(q_grid),
    }
    if family == "classical_quantum":
        meta["a"] = a
    else:
        meta["c"] = c
        meta["d"] = d
    return SweepResult(cols, meta)


# ---------------------------------------------------------------------------
# multipartite scaling
# ---------------------------------------------------------------------------


def scaling_run(
    kinds=(ch.BIT_FLIP, ch.PHASE_FLIP, ch.AMPLITUDE_DAMPING),
    n_values=range(2, 9),
    a: float = 0.2,
    c0: float = 0.1,
    delta: float = 0.02,
    q_points: int = AREA_Q_POINTS,
) -> SweepResult:
    """Peak and area of coherent-work gain versus register size.

    Local coherences follow c_i = c0 + i*delta for qubits i = 1..N; the
    channel acts on every qubit; each channel keeps its own energy choice
    (phase flip gets the collective x field).
    """
    kinds = [ch.canonical_kind(k) for k in kinds]
    n_values = sorted(set(int(n) for n in n_values))
    q_grid = q_grid_default(q_points)
    rows = {"channel": [], "N": [], "delta_wc_max": [], "argmax_q": [], "area_ap": []}
    for n in n_values:
        coherences = [c0 + delta * i for i in range(1, n + 1)]
        rho0 = symmetrized_multipartite(a, coherences)
        for kind in kinds:
            if kind == ch.DEPOLARIZING and n != 2:
                raise ValueError("depolarizing scaling is limited to two qubits")
            h = channel_hamiltonian(kind, n)
            if kind in (ch.PHASE_FLIP, ch.PHASE_DAMPING):
                # the collective-spin (symmetry-adapted) dephasing keeps
                # the scaling trends consistent with the two-qubit story
                h = Hamiltonian(h.matrix, h.kind, n, basis=None, collective=True)
            curve = _delta_wc_curve(rho0, kind, h, q_grid)
            summary = enhancement_summary(q_grid, curve)
            rows["channel"].append(kind)
            rows["N"].append(n)
            rows["delta_wc_max"].append(summary.delta_wc_max)
            rows["argmax_q"].append(summary.argmax_q)
            rows["area_ap"].append(summary.area_ap)
    cols = {k: np.array(v) for k, v in rows.items()}
    meta = {
        "experiment": "scaling",
        "channels": list(kinds),
        "n_values": n_values,
        "a": a,
        "c0": c0,
        "delta": delta,
        "q_points": q_points,
        "dephasing": {
            kind: ("collective" if kind in (ch.PHASE_FLIP, ch.PHASE_DAMPING) else "product_basis")
            for kind in kinds
        },
    }
    return SweepResult(cols, meta)


# ---------------------------------------------------------------------------
# randomized census
# ---------------------------------------------------------------------------


def census_random(kind, count: int = 1000, seed: int = 7, q_points: int = DEFAULT_Q_POINTS, num_terms: int = 2) -> SweepResult:
    """Enhancement statistics over random separable two-qubit states.

    Each sample draws from its own counter-based stream (seed, index), so
    results do not depend on evaluation order. A sample is "enhancing"
    when the positive area of its gain curve exceeds 1e-12.
    """
    kind = ch.canonical_kind(kind)
    if count < 1:
        raise ValueError("census needs at least one sample")
    q_grid = q_grid_default(q_points)
    h = channel_hamiltonian(kind, 2)
    rows = {"sample": [], "delta_wc_max": [], "argmax_q": [], "area_ap": []}
    enhancing = 0
    for i in range(count):
        rho0 = random_separable(philox_stream(seed, i), num_terms=num_terms)
        curve = _delta_wc_curve(rho0, kind, h, q_grid)
        summary = enhancement_summary(q_grid, curve)
        if summary.area_ap > ENHANCEMENT_AREA_TOL:
            enhancing += 1
        rows["sample"].append(i)
        rows["delta_wc_max"].append(summary.delta_wc_max)
        rows["argmax_q"].append(summary.argmax_q)
        rows["area_ap"].append(summary.area_ap)
    cols = {k: np.array(v) for k, v in rows.items()}
    meta = {
        "experiment": "census",
        "channel": kind,
        "count": count,
        "seed": seed,
        "num_terms": num_terms,
        "q_points": q_points,
        "hamiltonian": h.kind,
        "dephasing": _dephasing_label(h),
        "fraction_enhancing": enhancing / count,
    }
    return SweepResult(cols, meta)


# ---------------------------------------------------------------------------
# Lindblad consistency and the entangled example
# ---------------------------------------------------------------------------


def lindblad_consistency(kind, gamma: float, t_grid, n0) -> SweepResult:
    """RK4 master-equation evolution against the Kraus channel clock.

    Per time point: Bloch components from both routes and the coherent
    work from both routes, with the worst deviation in the metadata.
    """
    kind = ch.canonical_kind(kind)
    t_grid = np.asarray(t_grid, dtype=float)
    n0 = np.asarray(n0, dtype=float)
    jump = ch.jump_operator(kind)
    rho0 = bloch_to_density(n0)
    h = hamiltonian("excitation", 1)
    cols = {
        "t": t_grid,
        "q": np.array([ch.q_of_t(kind, gamma, t) for t in t_grid]),
    }
    rk4_bloch, kraus_bloch, wc_rk4, wc_kraus = [], [], [], []
    for t in t_grid:
        spec = ch.LindbladSpec((jump,), (gamma,), t)
        evolved = ch.lindblad_evolve(rho0, spec)
        q = ch.q_of_t(kind, gamma, t)
        rk4_bloch.append(density_to_bloch(evolved))
        kraus_bloch.append(ch.bloch_map(ch.ChannelSpec(kind, q), n0))
        wc_rk4.append(workx.decompose(evolved, h).coherent)
        wc_kraus.append(workx.closed_form_single(kind, q, n0).coherent)
    rk4_bloch = np.array(rk4_bloch)
    kraus_bloch = np.array(kraus_bloch)
    for i, name in enumerate(("n1", "n2", "n3")):
        cols[f"{name}_rk4"] = rk4_bloch[:, i]
        cols[f"{name}_kraus"] = kraus_bloch[:, i]
    cols["WC_rk4"] = np.array(wc_rk4)
    cols["WC_kraus"] = np.array(wc_kraus)
    max_dev = max(
        float(np.abs(rk4_bloch - kraus_bloch).max()),
        float(np.abs(cols["WC_rk4"] - cols["WC_kraus"]).max()),
    )
    meta = {
        "experiment": "lindblad_check",
        "channel": kind,
        "gamma": gamma,
        "bloch": list(map(float, n0)),
        "t_points": len(t_grid),
        "max_deviation": max_dev,
    }
    return SweepResult(cols, meta)


def entangled_example(theta_grid, q_grid=None, h: float = 0.5, j: float = 0.4, kind=ch.BIT_FLIP) -> SweepResult:
    """Coherent work and concurrence of the Hadamard-rotated pure state.

    Per (theta, q): the coherent work, its gain over the noiseless value,
    and the concurrence of the evolved state under per-qubit noise.
    """
    kind = ch.canonical_kind(kind)
    theta_grid = np.asarray(theta_grid, dtype=float)
    q_grid = q_grid_default() if q_grid is None else np.asarray(q_grid, dtype=float)
    ham = hamiltonian("z_plus_xx", 2, h=h, j=j)
    rows = {"theta": [], "q": [], "WC": [], "delta_WC": [], "concurrence": []}
    for theta in theta_grid:
        rho0 = apply_hadamard_pair(entangled_theta(theta))
        wc0 = workx.decompose(rho0, ham).coherent
        for q in q_grid:
            evolved = ch.apply_local(rho0, ch.ChannelSpec(kind, q))
            rep = workx.decompose(evolved, ham)
            rows["theta"].append(theta)
            rows["q"].append(q)
            rows["WC"].append(rep.coherent)
            rows["delta_WC"].append(rep.coherent - wc0)
            rows["concurrence"].append(workx.concurrence(evolved))
    cols = {k: np.array(v) for k, v in rows.items()}
    meta = {
        "experiment": "entangled",
        "channel": kind,
        "h": h,
        "j": j,
        "theta_points": len(theta_grid),
        "q_points": len(q_grid),
        "dephasing": "block",
    }
    return SweepResult(cols, meta)


def interacting_depolarizing(
    a_values=(0.1, 0.4),
    c: float = 0.3,
    d: float = 0.2,
    h: float = 0.5,
    j: float = 0.4,
    q_grid=None,
    fd_step: float = 1e-4,
) -> SweepResult:
    """Depolarizing noise against the interacting x-field Hamiltonian.

    Per (a, q): coherent work, its gain, the degenerate-level coherence,
    and central finite differences of both passive-state energies, whose
    slope crossover marks the enhancement window.
    """
    q_grid = q_grid_default() if q_grid is None else np.asarray(q_grid, dtype=float)
    ham = hamiltonian("xx_interacting", 2, h=h, j=j)
    rows = {
        "a": [],
        "q": [],
        "WC": [],
        "delta_WC": [],
        "coherence_degenerate": [],
        "dEp_dq": [],
        "dEpd_dq": [],
    }

    def passive_energies(rho0, q):
        q = min(max(q, 0.0), 1.0)
        evolved = ch.apply_local(rho0, ch.ChannelSpec(ch.DEPOLARIZING, q))
        rep = workx.decompose(evolved, ham)
        return rep.passive_energy, rep.dephased_passive_energy, rep

    for a in a_values:
        rho0 = symmetric_pair(0.5, a, c, d)
        wc0 = workx.decompose(rho0, ham).coherent
        for q in q_grid:
            _, _, rep = passive_energies(rho0, q)
            lo_q, hi_q = max(0.0, q - fd_step), min(1.0, q + fd_step)
            ep_lo, epd_lo, _ = passive_energies(rho0, lo_q)
            ep_hi, epd_hi, _ = passive_energies(rho0, hi_q)
            span = hi_q - lo_q
            evolved = ch.apply_local(rho0, ch.ChannelSpec(ch.DEPOLARIZING, q))
            rows["a"].append(a)
            rows["q"].append(q)
            rows["WC"].append(rep.coherent)
            rows["delta_WC"].append(rep.coherent - wc0)
            rows["coherence_degenerate"].append(workx.coherence_degenerate(evolved))
            rows["dEp_dq"].append((ep_hi - ep_lo) / span)
            rows["dEpd_dq"].append((epd_hi - epd_lo) / span)
    cols = {k: np.array(v) for k, v in rows.items()}
    meta = {
        "experiment": "appendix_d",
        "channel": ch.DEPOLARIZING,
        "a_values": list(map(float, a_values)),
        "c": c,
        "d": d,
        "h": h,
        "j": j,
        "q_points": len(q_grid),
        "fd_step": fd_step,
        "dephasing": _dephasing_label(ham),
    }
    return SweepResult(cols, meta)
