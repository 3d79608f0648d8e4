"""Walk through the operator algebra behind the thermal state.

Two independent routes to exp(-x * C), C the exchange coupling operator:
a scaling-and-squaring Taylor series and the Pauli-algebra closed form.
The script prints their agreement, then follows the thermal state from
maximally mixed (x = 0) to the pure singlet (large x).
"""

import numpy as np

from spinpair import (
    bell_basis,
    density_matrix_qsm,
    entropy_over_k,
    exp_coupling_closed,
    heisenberg_coupling,
    matrix_exp_series,
    s_coefficient,
)

coupling = heisenberg_coupling()
singlet = bell_basis()[3]

print("exchange coupling eigenvalues:", np.round(np.linalg.eigvalsh(coupling), 12))
print()

print("closed form vs series exponential, max |difference|:")
for x in (0.25, 1.0, 2.5):
    closed = exp_coupling_closed(x)
    series = matrix_exp_series(-x * coupling, tol=1e-13)
    print(f"  x = {x:4.2f}: {np.max(np.abs(closed - series)):.3e}")
print()

print("thermal state along x = alpha*beta:")
print("   x      S(x)     p_singlet  p_triplet(each)  entropy/k  <singlet|rho|singlet>")
for x in (0.0, 0.5, 1.0, 2.0, 5.0, 20.0):
    rho = density_matrix_qsm(x)
    eigenvalues = np.linalg.eigvalsh(rho)
    fidelity = (singlet.conj() @ rho @ singlet).real
    print(
        f"  {x:4.1f}  {s_coefficient(x):8.5f}  {eigenvalues[-1]:9.6f}"
        f"  {eigenvalues[0]:15.6f}  {entropy_over_k(x):9.6f}  {fidelity:12.9f}"
    )
print()
print("x = 0 is the maximally mixed state (entropy ln 4 = 1.386294);")
print("large x pins the pair into the entangled singlet and the entropy dies.")
