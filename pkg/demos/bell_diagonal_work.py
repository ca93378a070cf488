"""Bell-diagonal states: all extractable work is correlation work.

The total ergotropy of a noisy Bell-diagonal state equals the average of
its geometric quantum and classical correlations for every unital
channel - and visibly fails to under amplitude damping, which breaks the
Bell-diagonal form.

Run:  python demos/bell_diagonal_work.py
"""

import numpy as np

from ergonoise import (
    ChannelSpec,
    apply_local,
    correlation_work_check,
    ergotropy,
    hamiltonian,
    make_bds,
    partial_trace,
    sweep_bds,
)

C = [0.5, 0.3, 0.1]
H1 = np.diag([0.0, 1.0])

print("=== marginals of a Bell-diagonal state hold no work ===")
rho = make_bds(C)
for keep in ([0], [1]):
    print(f"  marginal {keep}: ergotropy = {ergotropy(partial_trace(rho, keep), H1):.2e}")

print("\n=== work vs correlation average along a bit-flip sweep ===")
print("  q      W        (gqc+gcc)/2   residual")
for q in np.linspace(0, 1, 6):
    rep = correlation_work_check(C, ChannelSpec("bit_flip", q), both_qubits=True)
    print(f"  {q:.1f}  {rep.total_ergotropy:.6f}  {rep.average:.6f}    {rep.residual:+.1e}")

print("\n=== amplitude damping breaks the identity ===")
for q in (0.25, 0.5, 0.75):
    rep = correlation_work_check(C, ChannelSpec("amplitude_damping", q), both_qubits=True)
    print(
        f"  q = {q:.2f}: W = {rep.total_ergotropy:.4f}, correlation average = "
        f"{rep.average:.4f}, residual {rep.residual:+.4f} (flagged invalid: {not rep.identity_valid})"
    )

print("\n=== eigenvalue crossing when the protected component starts lowest ===")
res = sweep_bds([0.1, 0.5, 0.3], "bit_flip")
print(f"  c = (0.1, 0.5, 0.3), bit flip: crossings at q = "
      f"{[round(x, 4) for x in res.metadata['eigenvalue_crossings']]}")
print(f"  residual work at q = 1: W = {res.columns['W'][-1]:.4f} (= c1/2, the protected share)")

res = sweep_bds(C, "phase_flip")
print(f"  c = (0.5, 0.3, 0.1), phase flip: WI frozen at {res.columns['WI'][0]:.4f} "
      f"for all q; at q = 1 the coherent share is {res.columns['WC'][-1]:.1e}")

print("\n=== a perfectly correlated flip pair leaves the state alone ===")
for q in (0.3, 0.9):
    out = apply_local(make_bds(C), ChannelSpec("correlated_bit_flip", q), (0, 1))
    print(f"  q = {q}: max |change| = {np.abs(out - make_bds(C)).max():.1e}")
