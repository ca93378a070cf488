"""Markovian noise channels: Kraus sets, analytic parameter maps, local
application to multi-qubit states, and Lindblad time evolution.

All channels are parameterized by a strength q in [0, 1]. The flip
family and depolarizing are unital; amplitude damping drains population
toward |g> and is the one non-unital case. Phase damping shares the
phase-flip analytics with an effective strength 1 - sqrt(1-q).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .matcore import (
    IDENTITY_2,
    KET_E,
    KET_G,
    SIGMA_X,
    SIGMA_Y,
    SIGMA_Z,
    as_matrix,
    kron,
    num_qubits,
)

COMPLETENESS_TOL = 1e-12

BIT_FLIP = "bit_flip"
BIT_PHASE_FLIP = "bit_phase_flip"
PHASE_FLIP = "phase_flip"
DEPOLARIZING = "depolarizing"
AMPLITUDE_DAMPING = "amplitude_damping"
PHASE_DAMPING = "phase_damping"
CORRELATED_BIT_FLIP = "correlated_bit_flip"

KINDS = (
    BIT_FLIP,
    BIT_PHASE_FLIP,
    PHASE_FLIP,
    DEPOLARIZING,
    AMPLITUDE_DAMPING,
    PHASE_DAMPING,
    CORRELATED_BIT_FLIP,
)

ALIASES = {
    "bf": BIT_FLIP,
    "bpf": BIT_PHASE_FLIP,
    "pf": PHASE_FLIP,
    "dc": DEPOLARIZING,
    "ad": AMPLITUDE_DAMPING,
    "pd": PHASE_DAMPING,
    "cbf": CORRELATED_BIT_FLIP,
}

UNITAL_KINDS = (BIT_FLIP, BIT_PHASE_FLIP, PHASE_FLIP, DEPOLARIZING, PHASE_DAMPING)

# lowering operator |g><e|; drives amplitude damping
SIGMA_MINUS = np.outer(KET_G, KET_E.conj())


def canonical_kind(kind: str) -> str:
    kind = ALIASES.get(kind, kind)
    if kind not in KINDS:
        raise ValueError(f"unknown channel kind {kind!r}")
    return kind


@dataclass(frozen=True)
class ChannelSpec:
    """A channel kind plus its noise strength q in [0, 1]."""

    kind: str
    q: float

    def __post_init__(self):
        object.__setattr__(self, "kind", canonical_kind(self.kind))
        object.__setattr__(self, "q", float(self.q))
        if not 0.0 <= self.q <= 1.0:
            raise ValueError(f"noise strength q = {self.q} outside [0, 1]")


def kraus_set(spec: ChannelSpec) -> list[np.ndarray]:
    """Kraus operators of the channel; they satisfy sum K^dag K = I.

    Depolarizing uses sqrt(1 - 3q/4) on the identity term so that the
    set is complete and the Bloch vector contracts by exactly (1 - q).
    """
    q = spec.q
    if spec.kind == BIT_FLIP:
        return [np.sqrt(1.0 - q / 2.0) * IDENTITY_2, np.sqrt(q / 2.0) * SIGMA_X]
    if spec.kind == BIT_PHASE_FLIP:
        return [np.sqrt(1.0 - q / 2.0) * IDENTITY_2, np.sqrt(q / 2.0) * SIGMA_Y]
    if spec.kind == PHASE_FLIP:
        return [np.sqrt(1.0 - q / 2.0) * IDENTITY_2, np.sqrt(q / 2.0) * SIGMA_Z]
    if spec.kind == DEPOLARIZING:
        return [np.sqrt(1.0 - 3.0 * q / 4.0) * IDENTITY_2] + [
            np.sqrt(q / 4.0) * p for p in (SIGMA_X, SIGMA_Y, SIGMA_Z)
        ]
    if spec.kind == AMPLITUDE_DAMPING:
        k0 = np.outer(KET_G, KET_G.conj()) + np.sqrt(1.0 - q) * np.outer(
            KET_E, KET_E.conj()
        )
        return [k0, np.sqrt(q) * SIGMA_MINUS]
    if spec.kind == PHASE_DAMPING:
        k0 = np.outer(KET_G, KET_G.conj()) + np.sqrt(1.0 - q) * np.outer(
            KET_E, KET_E.conj()
        )
        return [k0, np.sqrt(q) * np.outer(KET_E, KET_E.conj())]
    if spec.kind == CORRELATED_BIT_FLIP:
        return [
            np.sqrt(1.0 - q / 2.0) * kron(IDENTITY_2, IDENTITY_2),
            np.sqrt(q / 2.0) * kron(SIGMA_X, SIGMA_X),
        ]
    raise ValueError(f"unknown channel kind {spec.kind!r}")


def _apply_one(rho: np.ndarray, kraus: Sequence[np.ndarray], target: int, n: int):
    left = 2**target
    right = 2 ** (n - 1 - target)
    tens = rho.reshape(left, 2, right, left, 2, right)
    out = np.zeros_like(tens)
    for k in kraus:
        out += np.einsum("ij,ajbAJB,IJ->aibAIB", k, tens, k.conj())
    return out.reshape(rho.shape)


def _apply_pair(rho: np.ndarray, kraus: Sequence[np.ndarray], pair, n: int):
    t0, t1 = sorted(pair)
    a, b, c = 2**t0, 2 ** (t1 - t0 - 1), 2 ** (n - 1 - t1)
    tens = rho.reshape(a, 2, b, 2, c, a, 2, b, 2, c)
    out = np.zeros_like(tens)
    for k in kraus:
        kt = k.reshape(2, 2, 2, 2)
        out += np.einsum(
            "ikjl,ajbldAJBLD,IKJL->aibkdAIBKD", kt, tens, kt.conj()
        )
    return out.reshape(rho.shape)


def apply_local(rho, spec: ChannelSpec, targets=None) -> np.ndarray:
    """Apply the channel to the listed qubits (all of them by default).

    Single-qubit kinds act on each target in ascending index order; the
    order is observationally irrelevant since the maps commute on
    distinct qubits. The correlated kind needs exactly one qubit pair.
    """
    rho = as_matrix(rho)
    n = num_qubits(rho)
    if targets is None:
        targets = range(2) if spec.kind == CORRELATED_BIT_FLIP and n == 2 else range(n)
    targets = sorted(set(int(t) for t in targets))
    if targets and (targets[0] < 0 or targets[-1] >= n):
        raise ValueError(f"targets {targets} out of range for {n} qubits")
    kraus = kraus_set(spec)
    if spec.kind == CORRELATED_BIT_FLIP:
        if len(targets) != 2:
            raise ValueError("correlated bit flip acts on exactly one qubit pair")
        return _apply_pair(rho, kraus, targets, n)
    out = rho
    for t in targets:
        out = _apply_one(out, kraus, t, n)
    return out


def bloch_map(spec: ChannelSpec, n) -> np.ndarray:
    """Closed-form image of a single-qubit Bloch vector under the channel."""
    n = np.asarray(n, dtype=float)
    q = spec.q
    n1, n2, n3 = n
    if spec.kind == BIT_FLIP:
        return np.array([n1, (1.0 - q) * n2, (1.0 - q) * n3])
    if spec.kind == BIT_PHASE_FLIP:
        return np.array([(1.0 - q) * n1, n2, (1.0 - q) * n3])
    if spec.kind == PHASE_FLIP:
        return np.array([(1.0 - q) * n1, (1.0 - q) * n2, n3])
    if spec.kind == DEPOLARIZING:
        return (1.0 - q) * n
    if spec.kind == AMPLITUDE_DAMPING:
        s = np.sqrt(1.0 - q)
        return np.array([s * n1, s * n2, (1.0 - q) * n3 + q])
    if spec.kind == PHASE_DAMPING:
        s = np.sqrt(1.0 - q)
        return np.array([s * n1, s * n2, n3])
    raise ValueError(f"no single-qubit Bloch map for {spec.kind!r}")


def bds_param_map(spec: ChannelSpec, c, both_qubits: bool = True) -> np.ndarray:
    """Closed-form image of Bell-diagonal parameters under a unital channel.

    Per noised qubit the untouched component keeps factor 1 (c1 for bit
    flip, c2 for bit-phase flip, c3 for phase flip) while the others pick
    up (1-q); depolarizing scales all three. Amplitude damping breaks
    the Bell-diagonal form and is rejected.
    """
    c = np.asarray(c, dtype=float)
    q = spec.q
    if spec.kind == AMPLITUDE_DAMPING:
        raise ValueError(
            "amplitude damping destroys the symmetry required to preserve "
            "the Bell-diagonal form; apply the Kraus set instead"
        )
    if spec.kind == CORRELATED_BIT_FLIP:
        return c.copy()
    factors = {
        BIT_FLIP: np.array([1.0, 1.0 - q, 1.0 - q]),
        BIT_PHASE_FLIP: np.array([1.0 - q, 1.0, 1.0 - q]),
        PHASE_FLIP: np.array([1.0 - q, 1.0 - q, 1.0]),
        DEPOLARIZING: np.array([1.0 - q] * 3),
        PHASE_DAMPING: np.array([np.sqrt(1.0 - q), np.sqrt(1.0 - q), 1.0]),
    }[spec.kind]
    if both_qubits:
        factors = factors**2
    return factors * c


@dataclass(frozen=True)
class LindbladSpec:
    """Jump operators, their rates, and the evolution duration."""

    jump_operators: tuple
    rates: tuple
    duration: float

    def __post_init__(self):
        object.__setattr__(
            self, "jump_operators", tuple(as_matrix(l) for l in self.jump_operators)
        )
        object.__setattr__(self, "rates", tuple(float(g) for g in self.rates))
        if len(self.jump_operators) != len(self.rates):
            raise ValueError("need one rate per jump operator")
        if any(g < 0 for g in self.rates):
            raise ValueError("rates must be nonnegative")
        if self.duration < 0:
            raise ValueError("duration must be nonnegative")


MAX_RK4_STEPS_DEFAULT = 10**6
RK4_HARD_STEP_LIMIT = 10**8


def _dissipator(rho, ops, rates):
    out = np.zeros_like(rho)
    for gamma, l in zip(rates, ops):
        ld = l.conj().T
        ldl = ld @ l
        out += gamma * (l @ rho @ ld - 0.5 * (ldl @ rho + rho @ ldl))
    return out


def lindblad_evolve(rho0, spec: LindbladSpec, max_steps: int = MAX_RK4_STEPS_DEFAULT):
    """Integrate the purely dissipative master equation with fixed-step RK4.

    The step targets max(rate)*dt <= 1e-3 and is capped at ``max_steps``;
    a run that would need more than 1e8 steps is rejected outright.
    """
    rho = as_matrix(rho0).copy()
    t = spec.duration
    if t == 0.0 or not spec.rates or max(spec.rates) == 0.0:
        return rho
    needed = max(1, math.ceil(t * max(spec.rates) / 1e-3))
    if needed > RK4_HARD_STEP_LIMIT:
        raise ValueError(
            f"step-size underflow: {needed} RK4 steps exceed the {RK4_HARD_STEP_LIMIT} limit"
        )
    steps = min(needed, max_steps)
    dt = t / steps
    ops, rates = spec.jump_operators, spec.rates
    for _ in range(steps):
        k1 = _dissipator(rho, ops, rates)
        k2 = _dissipator(rho + 0.5 * dt * k1, ops, rates)
        k3 = _dissipator(rho + 0.5 * dt * k2, ops, rates)
        k4 = _dissipator(rho + dt * k3, ops, rates)
        rho = rho + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
    return rho


def jump_operator(kind: str) -> np.ndarray:
    """Jump operator whose Lindblad flow matches the Kraus channel clock."""
    kind = canonical_kind(kind)
    if kind == BIT_FLIP:
        return SIGMA_X.copy()
    if kind == AMPLITUDE_DAMPING:
        return SIGMA_MINUS.copy()
    raise ValueError(f"no jump-operator clock derived for {kind!r}")


def q_of_t(kind: str, gamma: float, t: float) -> float:
    """Kraus strength reached after evolving for time t at rate gamma.

    Only the bit-flip and amplitude-damping clocks are defined:
    q = 1 - exp(-2 gamma t) and q = 1 - exp(-gamma t) respectively.
    """
    kind = canonical_kind(kind)
    if gamma < 0 or t < 0:
        raise ValueError("gamma and t must be nonnegative")
    if kind == BIT_FLIP:
        return 1.0 - math.exp(-2.0 * gamma * t)
    if kind == AMPLITUDE_DAMPING:
        return 1.0 - math.exp(-gamma * t)
    raise ValueError(f"no Kraus-equivalence clock for {kind!r}")
