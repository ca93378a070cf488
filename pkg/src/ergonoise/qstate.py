"""State and Hamiltonian constructors for small qubit registers.

Single qubits are handled both as Bloch vectors and as 2x2 matrices of
the form [[x, y], [conj(y), 1-x]]; two-qubit families cover Bell-diagonal
states, classical-quantum states, and symmetrized mixtures of locally
coherent qubits, extended up to eight qubits by explicit permutation
averaging.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

import numpy as np

from .matcore import (
    IDENTITY_2,
    KET_E,
    KET_G,
    PAULIS,
    SIGMA_X,
    SIGMA_Z,
    kron,
    require_hermitian,
)

BLOCH_TOL = 1e-12
PSD_TOL = 1e-12
MAX_SYMMETRIZED_QUBITS = 8

HADAMARD = np.array([[1.0, 1.0], [1.0, -1.0]], dtype=complex) / np.sqrt(2.0)

# x-basis kets, ordered so that |x+> plays the role of |g>
KET_XP = (KET_G + KET_E) / np.sqrt(2.0)
KET_XM = (KET_G - KET_E) / np.sqrt(2.0)


def philox_stream(seed: int, stream: int = 0) -> np.random.Generator:
    """Counter-based RNG stream derived from (seed, stream).

    Streams with distinct indices are statistically independent, so
    per-sample streams give the same draws no matter how samples are
    scheduled.
    """
    key = np.array([np.uint64(seed), np.uint64(stream)], dtype=np.uint64)
    return np.random.Generator(np.random.Philox(key=key))


def bloch_to_density(n) -> np.ndarray:
    """Single-qubit state (I + n.sigma)/2 from a Bloch vector."""
    n = np.asarray(n, dtype=float)
    if n.shape != (3,):
        raise ValueError("Bloch vector must have three components")
    norm = float(np.linalg.norm(n))
    if norm > 1.0 + BLOCH_TOL:
        raise ValueError(f"Bloch vector norm {norm} exceeds 1")
    rho = IDENTITY_2.copy() / 2.0
    for comp, pauli in zip(n, PAULIS):
        rho += 0.5 * comp * pauli
    return rho


def density_to_bloch(rho) -> np.ndarray:
    rho = require_hermitian(rho)
    if rho.shape != (2, 2):
        raise ValueError("expected a single-qubit state")
    return np.array([float(np.trace(rho @ p).real) for p in PAULIS])


def qubit_state(x: float, y: complex) -> np.ndarray:
    """Local qubit [[x, y], [conj(y), 1-x]] with population x, coherence y."""
    x = float(x)
    if not 0.0 <= x <= 1.0:
        raise ValueError(f"population {x} outside [0, 1]")
    if abs(y) ** 2 > x * (1.0 - x) + PSD_TOL:
        raise ValueError(
            f"coherence |{y}|^2 = {abs(y)**2:.6g} exceeds x(1-x) = {x*(1.0-x):.6g}"
        )
    return np.array([[x, y], [np.conj(y), 1.0 - x]], dtype=complex)


def bds_is_separable(c) -> bool:
    c = np.asarray(c, dtype=float)
    return float(np.abs(c).sum()) <= 1.0 + PSD_TOL


def make_bds(c) -> np.ndarray:
    """Bell-diagonal two-qubit state from its three correlation parameters.

    The four eigenvalues are (1 -+ c1 -+ c2 -+ c3)/4 over the sign
    patterns (---), (++-), (+-+), (-++); all must be nonnegative.
    """
    c = np.asarray(c, dtype=float)
    if c.shape != (3,):
        raise ValueError("Bell-diagonal parameters must be a real triple")
    signs = [(-1, -1, -1), (1, 1, -1), (1, -1, 1), (-1, 1, 1)]
    for s in signs:
        lam = (1.0 + s[0] * c[0] + s[1] * c[1] + s[2] * c[2]) / 4.0
        if lam < -PSD_TOL:
            raise ValueError(
                f"parameters {tuple(c)} give negative eigenvalue "
                f"(1 {s[0]:+d}c1 {s[1]:+d}c2 {s[2]:+d}c3)/4 = {lam:.6g}"
            )
    rho = kron(IDENTITY_2, IDENTITY_2) / 4.0
    for ci, pauli in zip(c, PAULIS):
        rho += 0.25 * ci * kron(pauli, pauli)
    return rho


def classical_quantum(p: float, a: float, c: complex) -> np.ndarray:
    """Mixture p |g><g| x rho(a,c) + (1-p) |e><e| x rho(a,0).

    The first qubit is classical; only one branch of the second carries
    coherence.
    """
    p = float(p)
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"mixing weight {p} outside [0, 1]")
    gg = np.outer(KET_G, KET_G.conj())
    ee = np.outer(KET_E, KET_E.conj())
    return p * kron(gg, qubit_state(a, c)) + (1.0 - p) * kron(ee, qubit_state(a, 0.0))


def symmetric_pair(p: float, a: float, c: complex, d: complex) -> np.ndarray:
    """Mixture p rho(a,c) x rho(a,d) + (1-p) rho(a,d) x rho(a,c)."""
    p = float(p)
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"mixing weight {p} outside [0, 1]")
    rc, rd = qubit_state(a, c), qubit_state(a, d)
    return p * kron(rc, rd) + (1.0 - p) * kron(rd, rc)


def symmetrized_multipartite(a: float, coherences) -> np.ndarray:
    """Equal-weight mixture of all N! orderings of local states rho(a, c_i).

    The explicit permutation loop matches the defining sum; N is capped
    at 8 to keep the 40320-term case affordable.
    """
    coherences = list(coherences)
    n = len(coherences)
    if n < 1:
        raise ValueError("need at least one local coherence")
    if n > MAX_SYMMETRIZED_QUBITS:
        raise ValueError(f"qubit count {n} exceeds cap {MAX_SYMMETRIZED_QUBITS}")
    locals_ = [qubit_state(a, c) for c in coherences]
    acc = np.zeros((2**n, 2**n), dtype=complex)
    count = 0
    for perm in permutations(range(n)):
        acc += kron(*[locals_[i] for i in perm])
        count += 1
    return acc / count


def random_separable(seed_or_rng, num_terms: int = 2) -> np.ndarray:
    """Random separable two-qubit state sum_i p_i rho_i^A x rho_i^B.

    Weights are a flat Dirichlet draw; each local population is uniform
    on [0,1] and each coherence uniform on [0, sqrt(a(1-a))], which keeps
    every factor PSD by construction.
    """
    if num_terms < 1:
        raise ValueError("num_terms must be at least 1")
    if isinstance(seed_or_rng, np.random.Generator):
        rng = seed_or_rng
    else:
        rng = philox_stream(int(seed_or_rng))
    weights = rng.dirichlet(np.ones(num_terms))
    rho = np.zeros((4, 4), dtype=complex)
    for w in weights:
        factors = []
        for _ in range(2):
            a = rng.uniform(0.0, 1.0)
            c = rng.uniform(0.0, np.sqrt(a * (1.0 - a)))
            factors.append(qubit_state(a, c))
        rho += w * kron(factors[0], factors[1])
    return rho


def entangled_theta(theta: float) -> np.ndarray:
    """Pure state cos(theta)|gg> + sin(theta)|ee> as a density matrix."""
    ket = np.zeros(4, dtype=complex)
    ket[0] = np.cos(theta)
    ket[3] = np.sin(theta)
    return np.outer(ket, ket.conj())


def apply_hadamard_pair(rho) -> np.ndarray:
    """Conjugate a two-qubit state by local Hadamards on both qubits."""
    u = kron(HADAMARD, HADAMARD)
    return u @ np.asarray(rho, dtype=complex) @ u.conj().T


def x_product_basis(n: int) -> np.ndarray:
    """Unitary whose columns are the |x+/-> product kets, row-major order."""
    cols = []
    for idx in range(2**n):
        vecs = []
        for k in range(n):
            bit = (idx >> (n - 1 - k)) & 1
            vecs.append(KET_XM if bit else KET_XP)
        ket = vecs[0]
        for v in vecs[1:]:
            ket = np.kron(ket, v)
        cols.append(ket)
    return np.stack(cols, axis=1)


def total_spin_squared(n: int) -> np.ndarray:
    """Collective J^2 = Jx^2 + Jy^2 + Jz^2 for n qubits."""
    dim = 2**n
    out = np.zeros((dim, dim), dtype=complex)
    for pauli in PAULIS:
        comp = np.zeros((dim, dim), dtype=complex)
        for t in range(n):
            comp += 0.5 * kron(*[pauli if i == t else IDENTITY_2 for i in range(n)])
        out += comp @ comp
    return out


@dataclass(frozen=True)
class Hamiltonian:
    """Hermitian observable plus the dephasing convention attached to it.

    ``basis`` columns, when present, give the canonical product eigenbasis
    used for full dephasing; ``collective`` requests block dephasing in
    the joint (H, J^2) eigenbasis instead. With neither, dephasing falls
    back to plain spectral blocks of the matrix.
    """

    matrix: np.ndarray
    kind: str
    n: int
    basis: np.ndarray | None = None
    collective: bool = False
    params: tuple = ()


def _sum_local(op: np.ndarray, n: int) -> np.ndarray:
    dim = 2**n
    out = np.zeros((dim, dim), dtype=complex)
    for t in range(n):
        out += kron(*[op if i == t else IDENTITY_2 for i in range(n)])
    return out


def hamiltonian(kind: str, n: int, h: float = 0.5, j: float = 0.4) -> Hamiltonian:
    """Build one of the named Hamiltonians on ``n`` qubits.

    kinds:
      excitation      sum_i |e><e|_i (energy gap 1 per qubit)
      z_sum           -(1/2) sum_i sigma_z_i (excitation shifted by -n/2)
      x_sum           sigma_x for n=1, else (1/2) sum_i sigma_x_i
      xx_interacting  h (sigma_x_1 + sigma_x_2) + j sigma_x x sigma_x, n=2
      z_plus_xx       h (sigma_z_1 + sigma_z_2) + j sigma_x x sigma_x, n=2
    """
    if n < 1:
        raise ValueError("need at least one qubit")
    if kind == "excitation":
        mat = _sum_local(np.outer(KET_E, KET_E.conj()), n)
        return Hamiltonian(mat, kind, n, basis=np.eye(2**n, dtype=complex))
    if kind == "z_sum":
        mat = -0.5 * _sum_local(SIGMA_Z, n)
        return Hamiltonian(mat, kind, n, basis=np.eye(2**n, dtype=complex))
    if kind == "x_sum":
        scale = 1.0 if n == 1 else 0.5
        mat = scale * _sum_local(SIGMA_X, n)
        return Hamiltonian(mat, kind, n, basis=x_product_basis(n))
    if kind == "xx_interacting":
        if n != 2:
            raise ValueError("xx_interacting is a two-qubit Hamiltonian")
        mat = h * _sum_local(SIGMA_X, 2) + j * kron(SIGMA_X, SIGMA_X)
        return Hamiltonian(mat, kind, n, collective=True, params=(h, j))
    if kind == "z_plus_xx":
        if n != 2:
            raise ValueError("z_plus_xx is a two-qubit Hamiltonian")
        # nondegenerate for generic (h, j): block dephasing is already exact
        mat = h * _sum_local(SIGMA_Z, 2) + j * kron(SIGMA_X, SIGMA_X)
        return Hamiltonian(mat, kind, n, params=(h, j))
    raise ValueError(f"unknown Hamiltonian kind {kind!r}")
