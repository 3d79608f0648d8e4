"""Sweep temperature and watch the two descriptions disagree.

The coupled pair has z = e^{3x} + 3 e^{-x}; treating the particles as
separable individuals gives z = e^{3x} + e^{-3x} + 2, which is larger at
every finite temperature.  The chemical potentials inherit the gap and
only meet at -1.5*alpha in the T -> 0 limit.  Defaults mirror a
realistic exchange-coupled double quantum dot: alpha = 0.05 meV around
0.2 K.
"""

from spinpair import CouplingParams, chemical_potential_lshv, chemical_potential_qsm
from spinpair.cli import RunConfig, run_sweep

ALPHA_MEV = 0.05

rows = run_sweep(RunConfig(alpha_mev=ALPHA_MEV, t_min_k=0.05, t_max_k=2.0, steps=10))

print("      T/K        x     ln z (pair)  ln z (separable)   mu_pair/meV   mu_sep/meV")
for row in rows:
    print(
        f"  {row.temperature_k:8.4f}  {row.x:7.3f}  {row.ln_z_qsm:11.6f}"
        f"  {row.ln_z_lshv:16.6f}  {row.mu_qsm_mev:12.8f}  {row.mu_lshv_mev:12.8f}"
    )
print()

limit = CouplingParams(alpha=ALPHA_MEV, quantum_limit=True)
print(f"T -> 0 limit, both models:  mu = {chemical_potential_qsm(limit):+.6f} meV "
      f"(= -1.5 * alpha), and indeed {chemical_potential_lshv(limit):+.6f} meV")
print()
print("the separable ln z sits above the coupled one at every row: the")
print("partition functions differ by e^{-3x} + 2 - 3e^{-x} > 0, which the")
print("log squeezes to about 2e^{-3x} once x is a few units.  at 0.2 K the")
print("chemical potentials still disagree by a couple of neV, and only the")
print("T -> 0 limit erases that.")
