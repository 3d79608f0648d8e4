"""Thermodynamics of the coupled pair treated as one four-level system.

Everything here follows from the spectrum of the exchange coupling: a
singlet ground level at -3*alpha and a threefold triplet level at
+alpha, so the pair partition function is z = e^{3x} + 3 e^{-x} with
x = alpha*beta.  Partition functions are returned as ln z so sweeps
toward T -> 0 cannot overflow, and the T -> 0 limit itself is an
explicit flag with closed-form branches rather than a large float.

Energies are in meV, inverse temperatures in 1/meV.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .operators import X_MAX, heisenberg_coupling, s_coefficient

__all__ = [
    "K_B_MEV_PER_K",
    "CouplingParams",
    "EnergyLevel",
    "EnergyPattern",
    "s_coefficient",
    "pair_partition_qsm",
    "density_matrix_qsm",
    "quantum_limit_density",
    "is_density_matrix",
    "entropy_over_k",
    "chemical_potential_qsm",
    "ensemble_log_partition",
    "qsm_pattern",
]

#: Boltzmann constant in meV per kelvin (CODATA).
K_B_MEV_PER_K = 8.617333262e-2

_LN3 = math.log(3.0)


# ---------------------------------------------------------------------------
# parameter and level records
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CouplingParams:
    """Exchange coupling strength and inverse temperature.

    ``alpha`` is the coupling energy in meV, strictly positive.  ``beta``
    is 1/(k_B T) in 1/meV when finite.  The T -> 0 regime is requested
    with ``quantum_limit=True`` and no beta; passing both a finite beta
    and the flag is rejected.
    """

    alpha: float
    beta: float | None = None
    quantum_limit: bool = False

    def __post_init__(self) -> None:
        if not self.alpha > 0.0:
            raise ValueError(f"alpha must be positive, got {self.alpha}")
        if self.quantum_limit:
            if self.beta is not None:
                raise ValueError(
                    "beta must be omitted when quantum_limit is set; "
                    "the limit is a flag, not a large beta"
                )
        elif self.beta is None or not self.beta > 0.0:
            raise ValueError(f"beta must be positive, got {self.beta}")

    @property
    def x(self) -> float:
        """Dimensionless control alpha*beta; +inf in the quantum limit."""
        if self.quantum_limit:
            return math.inf
        return self.alpha * self.beta


@dataclass(frozen=True)
class EnergyLevel:
    """One degenerate level: energy in meV, state count, text tag."""

    energy: float
    degeneracy: int
    label: str

    def __post_init__(self) -> None:
        if self.degeneracy < 1:
            raise ValueError(f"degeneracy must be >= 1, got {self.degeneracy}")


@dataclass(frozen=True)
class EnergyPattern:
    """Level structure of the pair under one model.

    Levels are kept in strictly ascending energy order and their
    degeneracies must add up to 4, the dimension of the two-spin space.
    ``model`` tags which description produced the pattern.
    """

    levels: tuple[EnergyLevel, ...]
    model: str

    def __post_init__(self) -> None:
        object.__setattr__(self, "levels", tuple(self.levels))
        energies = [level.energy for level in self.levels]
        if any(b <= a for a, b in zip(energies, energies[1:])):
            raise ValueError("level energies must be strictly ascending")
        total = sum(level.degeneracy for level in self.levels)
        if total != 4:
            raise ValueError(f"degeneracies of a spin pair must sum to 4, got {total}")

    def energies(self) -> np.ndarray:
        return np.array([level.energy for level in self.levels], dtype=float)

    def degeneracies(self) -> np.ndarray:
        return np.array([level.degeneracy for level in self.levels], dtype=float)


# ---------------------------------------------------------------------------
# partition function and thermal state
# ---------------------------------------------------------------------------

def pair_partition_qsm(x: float) -> float:
    """ln z for the pair, z = e^{3x} + 3 e^{-x}.

    Evaluated as logaddexp(3x, ln 3 - x), which survives any finite x;
    exponentiation is left to callers that know z fits in a double.
    """
    x = float(x)
    if not math.isfinite(x):
        raise ValueError(f"x must be finite, got {x}")
    return float(np.logaddexp(3.0 * x, _LN3 - x))


def _check_dense_range(x: float) -> float:
    x = float(x)
    if not math.isfinite(x) or abs(x) > X_MAX:
        raise ValueError(
            f"x={x} is outside the dense-matrix guard |x| <= {X_MAX}; "
            "use the log-domain scalar functions instead"
        )
    return x


def density_matrix_qsm(x: float) -> np.ndarray:
    """Thermal state of the pair, rho = (1 - C*S(x)) / 4.

    C is the exchange coupling operator and S the interpolation
    coefficient from :func:`s_coefficient`.  Eigenvalues are e^{3x}/z on
    the singlet and e^{-x}/z on each triplet state, so x = 0 gives the
    maximally mixed state and x -> +inf the pure singlet.
    """
    x = _check_dense_range(x)
    return 0.25 * (np.eye(4, dtype=complex) - heisenberg_coupling() * s_coefficient(x))


def quantum_limit_density() -> np.ndarray:
    """T -> 0 state of the pair: the singlet projector (1 - C) / 4."""
    return 0.25 * (np.eye(4, dtype=complex) - heisenberg_coupling())


def is_density_matrix(m: np.ndarray, atol: float = 1e-12) -> bool:
    """True when ``m`` is trace-one, Hermitian and PSD within ``atol``."""
    m = np.asarray(m, dtype=complex)
    if m.shape != (4, 4) and m.shape != (2, 2):
        return False
    if abs(np.trace(m) - 1.0) > atol:
        return False
    if float(np.max(np.abs(m - m.conj().T))) > atol:
        return False
    return bool(np.min(np.linalg.eigvalsh(m)) >= -atol)


# ---------------------------------------------------------------------------
# entropy and chemical potential
# ---------------------------------------------------------------------------

def entropy_over_k(x: float) -> float:
    """Von Neumann entropy of the thermal state in units of k.

    Computed from the four eigenvalue populations {e^{3x}/z, e^{-x}/z x3}
    in the log domain, with 0*ln 0 = 0 handled by underflow.  Ranges from
    ln 4 at x = 0 down to 0 in the quantum limit.
    """
    x = _check_dense_range(x)
    ln_z = pair_partition_qsm(x)
    ln_p_singlet = 3.0 * x - ln_z
    ln_p_triplet = -x - ln_z
    return -(
        math.exp(ln_p_singlet) * ln_p_singlet
        + 3.0 * math.exp(ln_p_triplet) * ln_p_triplet
    )


def chemical_potential_qsm(params: CouplingParams) -> float:
    """Per-particle chemical potential of the coupled pair, in meV.

    mu = -ln z / (2 beta) = -1.5 alpha - ln(1 + 3 e^{-4x}) / (2 beta),
    identical for both particles.  The quantum-limit branch returns
    exactly -1.5 alpha, the ground energy shared between the two.
    """
    if params.quantum_limit:
        return -1.5 * params.alpha
    x = params.x
    return -1.5 * params.alpha - math.log1p(3.0 * math.exp(-4.0 * x)) / (2.0 * params.beta)


def ensemble_log_partition(ln_z: float, n_pairs: float) -> float:
    """ln Z for an ensemble of independent pairs, Z = z^N.

    ``n_pairs`` is treated as a continuous positive quantity so the
    chemical potential can be taken as a derivative with respect to the
    particle numbers, N = (N1 + N2) / 2.
    """
    if not n_pairs > 0.0:
        raise ValueError(f"n_pairs must be positive, got {n_pairs}")
    return float(n_pairs) * float(ln_z)


def qsm_pattern(alpha: float) -> EnergyPattern:
    """Level pattern of the coupled pair: singlet -3a below triplet +a."""
    alpha = float(alpha)
    if not alpha > 0.0:
        raise ValueError(f"alpha must be positive, got {alpha}")
    return EnergyPattern(
        levels=(
            EnergyLevel(energy=-3.0 * alpha, degeneracy=1, label="singlet"),
            EnergyLevel(energy=alpha, degeneracy=3, label="triplet"),
        ),
        model="QSM",
    )
