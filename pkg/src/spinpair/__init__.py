"""Thermodynamics of an exchange-coupled spin-1/2 pair.

Two descriptions of the same physical pair are implemented side by side:
the coupled four-level system with a singlet ground state (QSM), and a
separable model in which each particle carries its own split levels and
all joint probabilities factorize (LSHV).  The package computes both
sets of partition functions, chemical potentials and level patterns,
and simulates the photon-absorption experiment whose line positions
(4*alpha versus 3*alpha and 6*alpha) tell the two apart.
"""

from .operators import (
    SPIN_AXES,
    X_MAX,
    bell_basis,
    eigensystem_hermitian,
    exp_coupling_closed,
    heisenberg_coupling,
    kron,
    matrix_exp_series,
    pauli,
    s_coefficient,
)
from .quantum import (
    CouplingParams,
    EnergyLevel,
    EnergyPattern,
    K_B_MEV_PER_K,
    chemical_potential_qsm,
    density_matrix_qsm,
    ensemble_log_partition,
    entropy_over_k,
    is_density_matrix,
    pair_partition_qsm,
    qsm_pattern,
    quantum_limit_density,
)
from .separable import (
    JointOutcomeTable,
    LevelAssignment,
    MeasurementAxes,
    assignment_log_partition,
    chemical_potential_lshv,
    default_assignment,
    individual_probability,
    joint_probability_table,
    lshv_pattern,
    pair_log_partition_lshv,
    sample_joint,
    single_particle_log_partition,
)
from .spectra import (
    AbsorptionOutcome,
    ComparisonReport,
    LinewidthTooLarge,
    TransitionLine,
    absorbs,
    boltzmann_populations,
    discriminating_energies,
    distinguish,
    simulate_photon_stream,
    transition_lines,
)

__version__ = "0.1.0"
