"""Passive states, ergotropy and its coherent/incoherent split, coherence
measures, enhancement thresholds, and two-qubit concurrence.

Energies are reported in units of the single-qubit gap (B = 1). The
split follows W = W_inc + W_coh with W_inc the ergotropy of the state
dephased in the energy eigenbasis; for degenerate Hamiltonians the
dephasing convention is explicit (see ``dephase``).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .matcore import (
    SIGMA_Y,
    as_matrix,
    herm_eig,
    kron,
    require_hermitian,
)
from . import channels as ch
from .qstate import Hamiltonian, total_spin_squared

DEGENERACY_TOL = 1e-9
# incommensurate weight mixing J^2 into the level structure so that
# (energy, spin) pairs never collide accidentally
COLLECTIVE_WEIGHT = math.sqrt(2.0)


def _h_matrix(h):
    if isinstance(h, Hamiltonian):
        return h.matrix
    return require_hermitian(h)


def passive_state(rho, h) -> np.ndarray:
    """Unitary image of rho with populations anti-ordered against energies.

    Descending state eigenvalues are paired with ascending energy levels;
    within a degenerate level the pairing order cannot change the energy,
    so the stable index order is used.
    """
    hm = _h_matrix(h)
    rho = as_matrix(rho)
    if rho.shape != hm.shape:
        raise ValueError(
            f"state dimension {rho.shape[0]} does not match Hamiltonian {hm.shape[0]}"
        )
    lam = np.linalg.eigvalsh(rho)[::-1]
    evals, evecs = herm_eig(hm)
    return (evecs * lam) @ evecs.conj().T


def passive_energy(rho, h) -> float:
    """Tr[H pi_rho] without building the passive state."""
    hm = _h_matrix(h)
    rho = as_matrix(rho)
    if rho.shape != hm.shape:
        raise ValueError(
            f"state dimension {rho.shape[0]} does not match Hamiltonian {hm.shape[0]}"
        )
    lam = np.linalg.eigvalsh(rho)[::-1]
    evals = np.linalg.eigvalsh(hm)
    return float(np.dot(lam, evals).real)


def ergotropy(rho, h) -> float:
    """Maximum unitarily extractable energy Tr[H (rho - pi_rho)]."""
    hm = _h_matrix(h)
    energy = float(np.trace(hm @ as_matrix(rho)).real)
    return energy - passive_energy(rho, h)


def dephase(rho, h, basis=None, collective=False) -> np.ndarray:
    """Strip coherences between distinct energy levels of h.

    With ``basis`` (columns forming an eigenbasis of h) every off-diagonal
    element in that basis is removed, which is the convention the closed
    forms for product Hamiltonians assume. Without it the map keeps all
    within-level blocks intact (basis-independent); ``collective`` further
    splits those blocks by total spin J^2, the symmetry-adapted choice for
    collective-field Hamiltonians.
    """
    rho = as_matrix(rho)
    hm = _h_matrix(h)
    if basis is not None:
        v = as_matrix(basis)
        a = v.conj().T @ rho @ v
        return v @ np.diag(np.diag(a)) @ v.conj().T
    if collective:
        hm = hm + COLLECTIVE_WEIGHT * total_spin_squared(hm.shape[0].bit_length() - 1)
    evals, evecs = herm_eig(hm)
    a = evecs.conj().T @ rho @ evecs
    same_level = np.abs(evals[:, None] - evals[None, :]) < DEGENERACY_TOL
    return evecs @ (a * same_level) @ evecs.conj().T


def l1_coherence(rho, basis) -> float:
    """Sum of off-diagonal magnitudes of rho in the given basis."""
    v = as_matrix(basis)
    a = v.conj().T @ as_matrix(rho) @ v
    return float(np.abs(a).sum() - np.abs(np.diag(a)).sum())


@dataclass(frozen=True)
class ErgotropyReport:
    """Work accounting for one (state, Hamiltonian) pair."""

    total: float
    incoherent: float
    coherent: float
    passive_energy: float
    dephased_passive_energy: float
    l1_coherence: float


def decompose(rho, h, basis=None, collective=False) -> ErgotropyReport:
    """Split the ergotropy of rho into incoherent and coherent parts.

    ``basis``/``collective`` select the dephasing convention; when a
    Hamiltonian object built by ``qstate.hamiltonian`` is passed, its
    attached convention is used automatically. The report's coherence is
    measured in the dephasing basis (or the eigenbasis when implicit).
    """
    if isinstance(h, Hamiltonian) and basis is None and not collective:
        basis = h.basis
        collective = h.collective
    hm = _h_matrix(h)
    rho = as_matrix(rho)
    if basis is not None:
        zeta = dephase(rho, hm, basis=basis)
        coherence_basis = as_matrix(basis)
    else:
        hm_eff = hm
        if collective:
            hm_eff = hm + COLLECTIVE_WEIGHT * total_spin_squared(
                hm.shape[0].bit_length() - 1
            )
        evals, coherence_basis = herm_eig(hm_eff)
        a = coherence_basis.conj().T @ rho @ coherence_basis
        same_level = np.abs(evals[:, None] - evals[None, :]) < DEGENERACY_TOL
        zeta = coherence_basis @ (a * same_level) @ coherence_basis.conj().T
    energy = float(np.trace(hm @ rho).real)
    e_passive = passive_energy(rho, hm)
    e_passive_deph = passive_energy(zeta, hm)
    total = energy - e_passive
    incoherent = energy - e_passive_deph
    return ErgotropyReport(
        total=total,
        incoherent=incoherent,
        coherent=total - incoherent,
        passive_energy=e_passive,
        dephased_passive_energy=e_passive_deph,
        l1_coherence=l1_coherence(rho, coherence_basis),
    )


# ---------------------------------------------------------------------------
# single-qubit closed forms
# ---------------------------------------------------------------------------

_SINGLE_KINDS = (
    ch.BIT_FLIP,
    ch.BIT_PHASE_FLIP,
    ch.PHASE_FLIP,
    ch.DEPOLARIZING,
    ch.AMPLITUDE_DAMPING,
    ch.PHASE_DAMPING,
)


def closed_form_single(kind: str, q: float, n, basis: str = "computational") -> ErgotropyReport:
    """Analytic work split for one qubit under a channel.

    In the computational basis (gap-1 Hamiltonian diag(0, 1)) every kind
    is supported; the x basis (Hamiltonian sigma_x, gap 2) is derived for
    the dephasing kinds only. Amplitude damping switches branch at
    q = |n3|/(1 + |n3|) and at the sign of n3.
    """
    kind = ch.canonical_kind(kind)
    spec = ch.ChannelSpec(kind, q)
    nq = ch.bloch_map(spec, n)
    n1, n2, n3 = nq
    norm = float(np.linalg.norm(nq))

    if basis == "computational":
        if kind not in _SINGLE_KINDS:
            raise ValueError(f"no computational-basis closed form for {kind!r}")
        coherence = math.hypot(n1, n2)
        if kind == ch.AMPLITUDE_DAMPING:
            n3_0 = float(np.asarray(n, dtype=float)[2])
            z = abs(n3_0) / (1.0 + abs(n3_0))
            if n3_0 < 0.0 and q < z:
                incoherent = abs(n3_0) - q * (1.0 + abs(n3_0))
                coherent = 0.5 * (norm - abs(n3_0) * (1.0 - q) + q)
            elif n3_0 < 0.0:
                incoherent = 0.0
                coherent = 0.5 * (norm + abs(n3_0) * (1.0 - q) - q)
            else:
                incoherent = 0.0
                coherent = 0.5 * (norm - n3_0 * (1.0 - q) - q)
        else:
            incoherent = max(0.0, -n3)
            coherent = 0.5 * (norm - abs(n3))
        total = incoherent + coherent
        # energies for diag(0, 1): E(rho) = (1 - n3)/2
        e_passive = 0.5 * (1.0 - norm)
        return ErgotropyReport(
            total=total,
            incoherent=incoherent,
            coherent=coherent,
            passive_energy=e_passive,
            dephased_passive_energy=e_passive + (total - incoherent),
            l1_coherence=coherence,
        )

    if basis == "x":
        if kind not in (ch.PHASE_FLIP, ch.PHASE_DAMPING):
            raise ValueError(f"no x-basis closed form for {kind!r}")
        coherence = math.hypot(n2, n3)
        incoherent = max(0.0, 2.0 * n1)
        coherent = norm - abs(n1)
        total = incoherent + coherent
        e_passive = -norm
        return ErgotropyReport(
            total=total,
            incoherent=incoherent,
            coherent=coherent,
            passive_energy=e_passive,
            dephased_passive_energy=e_passive + coherent,
            l1_coherence=coherence,
        )

    raise ValueError(f"unknown basis choice {basis!r}")


_THRESHOLD_COMPONENTS = {
    ch.BIT_FLIP: (1, 2),  # (n2, n3)
    ch.BIT_PHASE_FLIP: (0, 2),  # (n1, n3)
    "phase_flip_x": (1, 0),  # (n2, n1): x-basis role swap n3 -> n1
}


def threshold_q(kind: str, n) -> float:
    """Noise strength beyond which the coherent work meets its noiseless value.

    q_b = 2 (na^2 + nb^2 - |nb| ||n||) / na^2 with (na, nb) the decaying
    and surviving components of the relevant pair. Values below 0 mean
    every strength enhances; above 1, none does. A vanishing denominator
    means no finite threshold exists (returned as +inf).
    """
    if kind in ch.ALIASES:
        kind = ch.ALIASES[kind]
    if kind not in _THRESHOLD_COMPONENTS:
        raise ValueError(f"no enhancement threshold derived for {kind!r}")
    n = np.asarray(n, dtype=float)
    ia, ib = _THRESHOLD_COMPONENTS[kind]
    na, nb = n[ia], n[ib]
    if na == 0.0:
        return float("inf")
    norm = float(np.linalg.norm(n))
    return float(2.0 * (na**2 + nb**2 - abs(nb) * norm) / na**2)


# ---------------------------------------------------------------------------
# two-qubit diagnostics
# ---------------------------------------------------------------------------

_PSI_MINUS = np.array([0.0, 1.0, -1.0, 0.0], dtype=complex) / np.sqrt(2.0)
_PHI_MINUS = np.array([1.0, 0.0, 0.0, -1.0], dtype=complex) / np.sqrt(2.0)


def coherence_degenerate(rho) -> float:
    """Coherence carried by the degenerate level of the interacting Hamiltonian.

    Measured as the eigenvalue splitting of the 2x2 block of rho on
    span{(|ge>-|eg>)/sqrt2, (|gg>-|ee>)/sqrt2}. When the block populations
    balance this equals twice the off-diagonal magnitude between the two
    vectors; unbalanced populations expose the same coherence in a rotated
    intra-level basis.
    """
    rho = as_matrix(rho)
    if rho.shape != (4, 4):
        raise ValueError("expected a two-qubit state")
    block = np.array(
        [
            [_PSI_MINUS.conj() @ rho @ _PSI_MINUS, _PSI_MINUS.conj() @ rho @ _PHI_MINUS],
            [_PHI_MINUS.conj() @ rho @ _PSI_MINUS, _PHI_MINUS.conj() @ rho @ _PHI_MINUS],
        ]
    )
    vals = np.linalg.eigvalsh(block)
    return float(vals[-1] - vals[0])


def concurrence(rho) -> float:
    """Two-qubit entanglement via the spin-flip construction.

    max(0, l1 - l2 - l3 - l4) with l_i the descending square roots of the
    eigenvalues of rho (sy x sy) rho* (sy x sy). Those roots equal the
    singular values of sqrt(rho) (sy x sy) conj(sqrt(rho)), which avoids
    the sqrt-of-near-zero precision loss of the eigenvalue route.
    """
    rho = as_matrix(rho)
    if rho.shape != (4, 4):
        raise ValueError("expected a two-qubit state")
    vals, vecs = herm_eig(rho)
    root = (vecs * np.sqrt(np.clip(vals, 0.0, None))) @ vecs.conj().T
    yy = kron(SIGMA_Y, SIGMA_Y)
    sing = np.linalg.svd(root @ yy @ root.conj(), compute_uv=False)
    return float(max(0.0, sing[0] - sing[1] - sing[2] - sing[3]))
