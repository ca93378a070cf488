"""Noise-assisted gain grows with register size: peak and area of the
coherent-work enhancement for symmetrized locally coherent states.

Uses a reduced grid so it finishes in ~a minute; the acceptance suite
runs the full N = 2..8 version.

Run:  python demos/multipartite_scaling.py
"""

from ergonoise import scaling_run

res = scaling_run(
    kinds=("bit_flip", "phase_flip", "amplitude_damping"),
    n_values=range(2, 7),
    q_points=201,
)

print("=== a = 0.2, coherences 0.1 + 0.02 i per qubit, channel on every qubit ===")
print("  N   channel             peak gain   area")
for i in range(len(res)):
    print(
        f"  {res.columns['N'][i]}   {res.columns['channel'][i]:18s}  "
        f"{res.columns['delta_wc_max'][i]:.4f}     {res.columns['area_ap'][i]:.4f}"
    )

print("\nbit flip climbs fastest; amplitude damping keeps its peak above phase")
print("flip throughout, while the phase-flip area overtakes amplitude damping")
print("around N = 4 (collective-basis dephasing, recorded in the metadata).")
print("dephasing per channel:", res.metadata["dephasing"])
