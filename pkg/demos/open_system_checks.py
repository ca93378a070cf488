"""Two consistency checks on the channel layer: the RK4 master-equation
flow lands on the Kraus channel at the matching clock, and a randomized
census shows how often each channel helps a separable state.

Run:  python demos/open_system_checks.py
"""

import numpy as np

from ergonoise import census_random, lindblad_consistency

print("=== master equation vs Kraus clock ===")
res = lindblad_consistency("bit_flip", 0.5, np.linspace(0, np.log(2), 5), [0.6, 0.5, 0.4])
print("  bit flip, gamma = 0.5: q(t) = 1 - exp(-2 gamma t)")
print("  t        q        WC(rk4)   WC(closed)")
for i in range(len(res)):
    print(
        f"  {res.columns['t'][i]:.4f}  {res.columns['q'][i]:.4f}  "
        f"{res.columns['WC_rk4'][i]:.6f}  {res.columns['WC_kraus'][i]:.6f}"
    )
print(f"  max deviation across Bloch components and WC: {res.metadata['max_deviation']:.1e}")

res = lindblad_consistency("amplitude_damping", 1.0, np.linspace(0, 5, 6), [0.5, 0.3, -0.4])
print(f"\n  amplitude damping, gamma = 1, t to 5: max deviation "
      f"{res.metadata['max_deviation']:.1e}")

print("\n=== census over random separable states (200 samples per channel) ===")
for kind in ("bit_flip", "phase_flip", "amplitude_damping", "depolarizing"):
    res = census_random(kind, count=200, seed=7)
    print(
        f"  {kind:17s} (H = {res.metadata['hamiltonian']:14s}): enhancing fraction "
        f"{res.metadata['fraction_enhancing']:.2f}"
    )
print("\nbit flip helps essentially always; depolarizing only manages it against")
print("the interacting Hamiltonian, and then for roughly a third of the draws.")
