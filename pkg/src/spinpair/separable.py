"""Separable hidden-label model of the pair.

Each particle carries its own two energy levels at -1.5*alpha and
+1.5*alpha, and an opaque hidden label decides which measurement outcome
owns which level.  Joint outcome probabilities are products of the two
individual Boltzmann weights, so the particles stay statistically
independent at every temperature, the pair partition function is a
product of single-particle ones (z = e^{3x} + e^{-3x} + 2), and the pair
level pattern is the sum-set of the single-particle levels.  All
thermodynamic outputs are invariant under swapping which outcome owns
which level and under relabeling the measurement axes; both facts are
exercised by the test suite.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np

from .quantum import CouplingParams, EnergyLevel, EnergyPattern

__all__ = [
    "OUTCOMES",
    "CELLS",
    "LevelAssignment",
    "MeasurementAxes",
    "JointOutcomeTable",
    "default_assignment",
    "assignment_log_partition",
    "single_particle_log_partition",
    "chemical_potential_lshv",
    "individual_probability",
    "joint_probability_table",
    "pair_log_partition_lshv",
    "lshv_pattern",
    "sample_joint",
]

#: Measurement outcomes in fixed order.
OUTCOMES = (1, -1)

#: Joint outcome cells (r, q) in fixed order; r is particle 1's outcome.
CELLS = ((1, 1), (1, -1), (-1, 1), (-1, -1))


# ---------------------------------------------------------------------------
# records
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LevelAssignment:
    """Hidden-label assignment of one particle's split levels.

    ``eps_plus`` is the energy (meV) the +1 outcome would reveal and
    ``eps_minus`` the energy of the -1 outcome.  The split is symmetric
    about zero; which sign owns the lower level is exactly the freedom
    the hidden labels carry.
    """

    particle: int
    eps_plus: float
    eps_minus: float
    hidden_label_plus: str
    hidden_label_minus: str

    def __post_init__(self) -> None:
        if self.particle not in (1, 2):
            raise ValueError(f"particle must be 1 or 2, got {self.particle}")
        if self.eps_plus != -self.eps_minus:
            raise ValueError(
                f"levels must split symmetrically about zero, got "
                f"({self.eps_plus}, {self.eps_minus})"
            )
        if self.eps_plus == 0.0:
            raise ValueError("split levels must be distinct")

    def energy(self, outcome: int) -> float:
        """Energy revealed by ``outcome`` (+1 or -1)."""
        if outcome == 1:
            return self.eps_plus
        if outcome == -1:
            return self.eps_minus
        raise ValueError(f"outcome must be +1 or -1, got {outcome}")

    def hidden_label(self, outcome: int) -> str:
        if outcome == 1:
            return self.hidden_label_plus
        if outcome == -1:
            return self.hidden_label_minus
        raise ValueError(f"outcome must be +1 or -1, got {outcome}")

    def swapped(self) -> "LevelAssignment":
        """The same particle with the opposite outcome-to-level pairing."""
        return replace(
            self,
            eps_plus=self.eps_minus,
            eps_minus=self.eps_plus,
            hidden_label_plus=self.hidden_label_minus,
            hidden_label_minus=self.hidden_label_plus,
        )


@dataclass(frozen=True)
class MeasurementAxes:
    """Opaque axis labels for the two analyzers.

    Carried only so the joint probability keeps the conventional
    signature; no energy in this model depends on them.
    """

    a_hat: str
    b_hat: str

    def __post_init__(self) -> None:
        if not self.a_hat or not self.b_hat:
            raise ValueError("axis labels must be non-empty")


@dataclass(frozen=True)
class JointOutcomeTable:
    """Joint outcome probabilities p(r, q), r and q in {+1, -1}.

    Construction enforces normalization and the factorization
    p(r, q) = p(r) * p(q), which is what makes the model local: the
    joint distribution carries no correlation between the particles.
    """

    p_pp: float
    p_pm: float
    p_mp: float
    p_mm: float

    def __post_init__(self) -> None:
        values = (self.p_pp, self.p_pm, self.p_mp, self.p_mm)
        for v in values:
            if not 0.0 <= v <= 1.0:
                raise ValueError(f"probabilities must lie in [0, 1], got {v}")
        if abs(sum(values) - 1.0) > 1e-12:
            raise ValueError(f"probabilities must sum to 1, got {sum(values)!r}")
        for r, q in CELLS:
            joint = self.prob(r, q)
            product = self.marginal_first(r) * self.marginal_second(q)
            if abs(joint - product) > 1e-12:
                raise ValueError(
                    f"table does not factorize at ({r:+d}, {q:+d}): "
                    f"{joint!r} vs {product!r}"
                )

    def prob(self, r: int, q: int) -> float:
        try:
            return {
                (1, 1): self.p_pp,
                (1, -1): self.p_pm,
                (-1, 1): self.p_mp,
                (-1, -1): self.p_mm,
            }[(r, q)]
        except KeyError:
            raise ValueError(f"outcomes must be +1 or -1, got ({r}, {q})") from None

    def marginal_first(self, r: int) -> float:
        """Probability of particle 1 showing outcome ``r``."""
        return self.prob(r, 1) + self.prob(r, -1)

    def marginal_second(self, q: int) -> float:
        """Probability of particle 2 showing outcome ``q``."""
        return self.prob(1, q) + self.prob(-1, q)

    def covariance(self) -> float:
        """Cov(r, q); identically zero for a factorizing table."""
        e_rq = self.p_pp - self.p_pm - self.p_mp + self.p_mm
        e_r = self.marginal_first(1) - self.marginal_first(-1)
        e_q = self.marginal_second(1) - self.marginal_second(-1)
        return e_rq - e_r * e_q


# ---------------------------------------------------------------------------
# single-particle thermodynamics
# ---------------------------------------------------------------------------

def default_assignment(alpha: float, particle: int, swap: bool = False) -> LevelAssignment:
    """Standard hidden-label assignment: the +1 outcome owns -1.5*alpha.

    ``swap=True`` gives the opposite pairing, which leaves every
    thermodynamic output unchanged; only the opaque labels move.
    """
    alpha = float(alpha)
    if not alpha > 0.0:
        raise ValueError(f"alpha must be positive, got {alpha}")
    if particle not in (1, 2):
        raise ValueError(f"particle must be 1 or 2, got {particle}")
    assignment = LevelAssignment(
        particle=particle,
        eps_plus=-1.5 * alpha,
        eps_minus=1.5 * alpha,
        hidden_label_plus=f"lambda_plus_{particle}",
        hidden_label_minus=f"lambda_minus_{particle}",
    )
    return assignment.swapped() if swap else assignment


def assignment_log_partition(assignment: LevelAssignment, beta: float) -> float:
    """ln z for one particle's two levels under a concrete assignment."""
    if not beta > 0.0:
        raise ValueError(f"beta must be positive, got {beta}")
    return float(np.logaddexp(-beta * assignment.eps_plus, -beta * assignment.eps_minus))


def single_particle_log_partition(alpha: float, beta: float) -> float:
    """ln z for either particle, z = e^{1.5x} + e^{-1.5x}, x = alpha*beta.

    Identical for the two particles and for either hidden-label pairing,
    because the level set {-1.5a, +1.5a} is fixed.
    """
    if not alpha > 0.0:
        raise ValueError(f"alpha must be positive, got {alpha}")
    if not beta > 0.0:
        raise ValueError(f"beta must be positive, got {beta}")
    x = alpha * beta
    return float(np.logaddexp(1.5 * x, -1.5 * x))


def chemical_potential_lshv(params: CouplingParams) -> float:
    """Chemical potential of one particle in the separable model, meV.

    mu = -ln z1 / beta = -1.5 alpha - ln(1 + e^{-3x}) / beta for finite
    beta; the quantum-limit branch returns the occupied ground level
    -1.5 alpha exactly.
    """
    if params.quantum_limit:
        return -1.5 * params.alpha
    x = params.x
    return -1.5 * params.alpha - math.log1p(math.exp(-3.0 * x)) / params.beta


def individual_probability(assignment: LevelAssignment, beta: float, outcome: int) -> float:
    """Boltzmann probability that one particle shows ``outcome``.

    Equal to exp(-beta*eps_outcome) / z for that particle, evaluated in
    logistic form so no exponential can overflow.
    """
    if not beta > 0.0:
        raise ValueError(f"beta must be positive, got {beta}")
    own = assignment.energy(outcome)
    other = assignment.energy(-outcome)
    gap = beta * (other - own)
    if gap >= 0.0:
        return 1.0 / (1.0 + math.exp(-gap))
    e = math.exp(gap)
    return e / (1.0 + e)


def joint_probability_table(
    a1: LevelAssignment,
    a2: LevelAssignment,
    axes: MeasurementAxes,
    beta: float,
) -> JointOutcomeTable:
    """Joint outcome probabilities as products of individual ones.

    The axes enter only as labels; the numbers depend on the level
    assignments and temperature alone.
    """
    del axes  # thermodynamically inert by construction
    p1 = {r: individual_probability(a1, beta, r) for r in OUTCOMES}
    p2 = {q: individual_probability(a2, beta, q) for q in OUTCOMES}
    return JointOutcomeTable(
        p_pp=p1[1] * p2[1],
        p_pm=p1[1] * p2[-1],
        p_mp=p1[-1] * p2[1],
        p_mm=p1[-1] * p2[-1],
    )


def pair_log_partition_lshv(alpha: float, beta: float) -> float:
    """ln z for the pair as a product of single-particle partitions.

    z = z1 * z2 = e^{3x} + e^{-3x} + 2, always at least the coupled-pair
    value e^{3x} + 3 e^{-x}, with equality only at x = 0.
    """
    return 2.0 * single_particle_log_partition(alpha, beta)


def lshv_pattern(alpha: float) -> EnergyPattern:
    """Pair level pattern implied by separability: -3a, 0 (x2), +3a."""
    alpha = float(alpha)
    if not alpha > 0.0:
        raise ValueError(f"alpha must be positive, got {alpha}")
    return EnergyPattern(
        levels=(
            EnergyLevel(energy=-3.0 * alpha, degeneracy=1, label="both-ground"),
            EnergyLevel(energy=0.0, degeneracy=2, label="one-up-one-down"),
            EnergyLevel(energy=3.0 * alpha, degeneracy=1, label="both-excited"),
        ),
        model="LSHV",
    )


def sample_joint(table: JointOutcomeTable, n: int, seed: int) -> dict[tuple[int, int], int]:
    """Draw ``n`` joint outcomes and return counts per (r, q) cell.

    Inverse-CDF sampling from a seeded generator: deterministic for a
    fixed seed, counts sum to ``n``, and cells with probability zero
    never receive a count.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    probabilities = np.array([table.prob(r, q) for r, q in CELLS])
    edges = np.cumsum(probabilities)
    edges[-1] = 1.0
    draws = np.random.default_rng(seed).random(n)
    cells = np.searchsorted(edges, draws, side="right")
    counts = np.bincount(cells, minlength=len(CELLS))
    return {cell: int(count) for cell, count in zip(CELLS, counts)}
