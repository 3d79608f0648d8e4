"""Observable consequences of an energy pattern.

A level pattern fixes which photon energies can be absorbed: every
upward level gap is a candidate line, its strength at a given
temperature is the Boltzmann population of the lower level, and a
photon is considered resonant when it lands within a rectangular
linewidth window of a gap.  The coupled-pair pattern produces a single
line at 4*alpha while the separable pattern produces lines at 3*alpha
and 6*alpha, so the two are told apart by firing photons at those
energies and counting absorptions.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.special import logsumexp

from .quantum import EnergyPattern, qsm_pattern
from .separable import lshv_pattern

__all__ = [
    "TransitionLine",
    "AbsorptionOutcome",
    "ComparisonReport",
    "LinewidthTooLarge",
    "transition_lines",
    "boltzmann_populations",
    "absorbs",
    "simulate_photon_stream",
    "discriminating_energies",
    "distinguish",
]


class LinewidthTooLarge(ValueError):
    """Linewidth so wide that the two models' lines can no longer be told apart."""


# ---------------------------------------------------------------------------
# records
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TransitionLine:
    """One absorption line of a pattern.

    ``pairs`` lists the (lower, upper) level indices sharing this gap;
    ``multiplicity`` counts the ordered state pairs behind it, summed
    over merged level pairs.  Labels join the contributing level tags
    with ``|`` when a merge brings in more than one.
    """

    gap: float
    from_label: str
    to_label: str
    multiplicity: int
    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if not self.gap > 0.0:
            raise ValueError(f"gap must be positive, got {self.gap}")
        if self.multiplicity < 1:
            raise ValueError(f"multiplicity must be >= 1, got {self.multiplicity}")
        if not self.pairs:
            raise ValueError("a line needs at least one contributing level pair")


@dataclass(frozen=True)
class AbsorptionOutcome:
    """Result of firing a photon stream at one pattern.

    ``initial_population`` is the total population of the lower levels
    of all resonant lines, i.e. the per-photon absorption probability.
    """

    photons_fired: int
    photons_absorbed: int
    resonant: bool
    initial_population: float

    def __post_init__(self) -> None:
        if not 0 <= self.photons_absorbed <= self.photons_fired:
            raise ValueError(
                f"absorbed count {self.photons_absorbed} outside "
                f"[0, {self.photons_fired}]"
            )
        if not self.resonant and self.photons_absorbed != 0:
            raise ValueError("photons cannot be absorbed off resonance")
        if not 0.0 <= self.initial_population <= 1.0:
            raise ValueError(
                f"initial population must lie in [0, 1], got {self.initial_population}"
            )


@dataclass(frozen=True)
class ComparisonReport:
    """Side-by-side line lists of the two models and what separates them.

    ``discriminating_energies`` holds (photon energy, model) entries
    where only the named model absorbs; construction checks each energy
    really is resonant in exactly that model at the stored linewidth.
    """

    alpha: float
    beta: float | None
    quantum_limit: bool
    linewidth: float
    qsm_lines: tuple[TransitionLine, ...]
    lshv_lines: tuple[TransitionLine, ...]
    qsm_populations: tuple[float, ...]
    lshv_populations: tuple[float, ...]
    discriminating_energies: tuple[tuple[float, str], ...]

    def __post_init__(self) -> None:
        for energy, model in self.discriminating_energies:
            in_qsm = any(abs(line.gap - energy) <= self.linewidth for line in self.qsm_lines)
            in_lshv = any(abs(line.gap - energy) <= self.linewidth for line in self.lshv_lines)
            if in_qsm == in_lshv:
                raise ValueError(
                    f"energy {energy} does not single out one model "
                    f"(qsm={in_qsm}, lshv={in_lshv})"
                )
            expected = "QSM" if in_qsm else "LSHV"
            if model != expected:
                raise ValueError(f"energy {energy} is tagged {model} but absorbs in {expected}")


# ---------------------------------------------------------------------------
# lines and populations
# ---------------------------------------------------------------------------

def transition_lines(pattern: EnergyPattern) -> list[TransitionLine]:
    """All upward gaps of a pattern, merged when equal, sorted ascending.

    Gaps agreeing within 1e-12 of the pattern's energy scale are one
    line whose multiplicity sums deg_lower * deg_upper over the merged
    level pairs.  A single-level pattern has no lines.
    """
    levels = pattern.levels
    if len(levels) < 2:
        return []
    scale = max(abs(level.energy) for level in levels) or 1.0
    tol = 1e-12 * scale

    gaps = sorted(
        (levels[j].energy - levels[i].energy, i, j)
        for i in range(len(levels))
        for j in range(i + 1, len(levels))
    )
    lines: list[TransitionLine] = []
    group: list[tuple[float, int, int]] = []
    for entry in gaps:
        if group and entry[0] - group[0][0] > tol:
            lines.append(_merge_group(levels, group))
            group = []
        group.append(entry)
    lines.append(_merge_group(levels, group))
    return lines


def _merge_group(levels, group) -> TransitionLine:
    pairs = tuple((i, j) for _, i, j in group)
    multiplicity = sum(levels[i].degeneracy * levels[j].degeneracy for i, j in pairs)
    from_labels = list(dict.fromkeys(levels[i].label for i, _ in pairs))
    to_labels = list(dict.fromkeys(levels[j].label for _, j in pairs))
    return TransitionLine(
        gap=group[0][0],
        from_label="|".join(from_labels),
        to_label="|".join(to_labels),
        multiplicity=multiplicity,
        pairs=pairs,
    )


def boltzmann_populations(
    pattern: EnergyPattern,
    beta: float | None = None,
    *,
    quantum_limit: bool = False,
) -> np.ndarray:
    """Canonical per-level occupation probabilities of a pattern.

    p_level = deg * e^{-beta*E} / sum(deg * e^{-beta*E}), evaluated by
    log-sum-exp.  The quantum limit puts all probability on the lowest
    level regardless of degeneracies.
    """
    if quantum_limit:
        if beta is not None:
            raise ValueError("beta must be omitted when quantum_limit is set")
        populations = np.zeros(len(pattern.levels))
        populations[0] = 1.0
        return populations
    if beta is None or not beta > 0.0:
        raise ValueError(f"beta must be positive, got {beta}")
    log_weights = -beta * pattern.energies()
    ln_z = logsumexp(log_weights, b=pattern.degeneracies())
    return pattern.degeneracies() * np.exp(log_weights - ln_z)


# ---------------------------------------------------------------------------
# absorption
# ---------------------------------------------------------------------------

def absorbs(
    pattern: EnergyPattern,
    beta: float | None,
    photon_energy: float,
    linewidth: float,
    *,
    quantum_limit: bool = False,
) -> float:
    """Probability that one photon of the given energy is absorbed.

    Sums the lower-level populations of every line within ``linewidth``
    of the photon energy, capped at 1; zero when nothing is resonant.
    """
    if not photon_energy > 0.0:
        raise ValueError(f"photon energy must be positive, got {photon_energy}")
    if not linewidth > 0.0:
        raise ValueError(f"linewidth must be positive, got {linewidth}")
    populations = boltzmann_populations(pattern, beta, quantum_limit=quantum_limit)
    probability = 0.0
    for line in transition_lines(pattern):
        if abs(line.gap - photon_energy) <= linewidth:
            probability += sum(populations[i] for i, _ in line.pairs)
    return min(probability, 1.0)


def simulate_photon_stream(
    pattern: EnergyPattern,
    beta: float | None,
    photon_energy: float,
    linewidth: float,
    n: int,
    seed: int,
    *,
    quantum_limit: bool = False,
) -> AbsorptionOutcome:
    """Fire ``n`` photons and count absorptions.

    Each photon is absorbed independently with the :func:`absorbs`
    probability; a fixed seed gives identical counts on every run, and
    probabilities 0 and 1 produce exact counts for any n.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    probability = absorbs(
        pattern, beta, photon_energy, linewidth, quantum_limit=quantum_limit
    )
    resonant = any(
        abs(line.gap - photon_energy) <= linewidth for line in transition_lines(pattern)
    )
    draws = np.random.default_rng(seed).random(n)
    absorbed = int(np.count_nonzero(draws < probability))
    return AbsorptionOutcome(
        photons_fired=n,
        photons_absorbed=absorbed,
        resonant=resonant,
        initial_population=probability,
    )


def discriminating_energies(
    qsm_lines: list[TransitionLine] | tuple[TransitionLine, ...],
    lshv_lines: list[TransitionLine] | tuple[TransitionLine, ...],
    linewidth: float,
) -> list[tuple[float, str]]:
    """Photon energies absorbed by exactly one model, sorted ascending.

    A line position qualifies when no line of the other model lies
    within ``linewidth`` of it.  Identical line lists give an empty
    result.
    """
    found: list[tuple[float, str]] = []
    for line in qsm_lines:
        if all(abs(line.gap - other.gap) > linewidth for other in lshv_lines):
            found.append((line.gap, "QSM"))
    for line in lshv_lines:
        if all(abs(line.gap - other.gap) > linewidth for other in qsm_lines):
            found.append((line.gap, "LSHV"))
    return sorted(found)


def distinguish(
    alpha: float,
    beta: float | None = None,
    linewidth: float | None = None,
    *,
    quantum_limit: bool = False,
) -> ComparisonReport:
    """Full spectroscopic comparison of the two models at one temperature.

    With any linewidth below alpha/2 the line sets {4a} and {3a, 6a}
    stay disjoint, so the report lists 3a and 6a as separable-only
    absorption energies and 4a as coupled-pair-only.

    Raises
    ------
    LinewidthTooLarge
        If ``linewidth`` >= alpha/2, where the 3a and 4a lines blur
        together and the discrimination argument collapses.
    """
    alpha = float(alpha)
    if not alpha > 0.0:
        raise ValueError(f"alpha must be positive, got {alpha}")
    if linewidth is None:
        linewidth = 0.1 * alpha
    if not linewidth > 0.0:
        raise ValueError(f"linewidth must be positive, got {linewidth}")
    if linewidth >= 0.5 * alpha:
        raise LinewidthTooLarge(
            f"linewidth {linewidth} >= alpha/2 = {0.5 * alpha}: the 3a and 4a "
            "lines overlap and the models cannot be told apart"
        )

    qsm = qsm_pattern(alpha)
    lshv = lshv_pattern(alpha)
    qsm_lines = transition_lines(qsm)
    lshv_lines = transition_lines(lshv)
    qsm_pops = boltzmann_populations(qsm, beta, quantum_limit=quantum_limit)
    lshv_pops = boltzmann_populations(lshv, beta, quantum_limit=quantum_limit)
    return ComparisonReport(
        alpha=alpha,
        beta=beta,
        quantum_limit=quantum_limit,
        linewidth=float(linewidth),
        qsm_lines=tuple(qsm_lines),
        lshv_lines=tuple(lshv_lines),
        qsm_populations=tuple(float(p) for p in qsm_pops),
        lshv_populations=tuple(float(p) for p in lshv_pops),
        discriminating_energies=tuple(
            discriminating_energies(qsm_lines, lshv_lines, linewidth)
        ),
    )
