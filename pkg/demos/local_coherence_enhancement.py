"""Separable two-qubit states with local coherence: noise can raise the
coherent work for every channel, with a frozen band at balanced
populations.

Run:  python demos/local_coherence_enhancement.py
"""

import numpy as np

from ergonoise import grid_delta_wc

print("=== classical-quantum state, gain vs (c, q), p = 0.5, a = 0.1 ===")
c_grid = np.linspace(0.0, 0.3, 13)
q_grid = np.linspace(0, 1, 41)
for kind in ("bit_flip", "amplitude_damping", "phase_flip"):
    res = grid_delta_wc("classical_quantum", kind, c_grid, q_grid, p=0.5, a=0.1)
    gain = res.columns["delta_WC"]
    pos = gain > 1e-9
    print(
        f"  {kind:17s} (H = {res.metadata['hamiltonian']:6s}): max gain "
        f"{gain.max():.4f}, positive share of the grid {pos.mean():.0%}"
    )

print("\n=== symmetric pair, gain vs (a, q), p = 0.5, c = 0.3, d = 0.2 ===")
a_grid = np.linspace(0.1, 0.9, 17)
for kind in ("bit_flip", "amplitude_damping", "phase_flip"):
    res = grid_delta_wc("symmetric_pair", kind, a_grid, q_grid, p=0.5, c=0.3, d=0.2)
    gain = res.columns["delta_WC"]
    band = np.abs(gain[np.isclose(res.columns["a"], 0.5)]).max()
    print(
        f"  {kind:17s}: max gain {gain.max():.4f}; frozen band residual at "
        f"a = 0.5: {band:.1e}"
    )

print("\nbit flip reaches its ~0.36 peak away from the band; amplitude damping")
print("tops out near ~0.22 and only below a = 0.5 at moderate q.")
