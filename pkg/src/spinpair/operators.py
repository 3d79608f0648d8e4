"""Exact operator algebra for a pair of spin-1/2 particles.

Pauli matrices, two-spin tensor products, the isotropic exchange coupling
operator C = sigma_x(x)sigma_x + sigma_y(x)sigma_y + sigma_z(x)sigma_z, its
eigensystem, and two independent routes to the operator exponential
exp(-x*C): a scaling-and-squaring Taylor series and the Pauli-algebra
closed form

    exp(-x*C) = (1/4) (e^{3x} + 3 e^{-x}) (1 - C * S(x)),
    S(x)      = (e^{2x} - e^{-2x}) / (e^{2x} + 3 e^{-2x}).

C has the triplet eigenvalue +1 (threefold) and the singlet eigenvalue -3.
The two-spin basis is ordered (|++>, |+->, |-+>, |-->), where |+>/|-> are
the sigma_z eigenstates of each particle.

All functions are pure and hold no shared state.
"""

from __future__ import annotations

import math

import numpy as np

#: Allowed spin-axis labels, in the conventional order.
SPIN_AXES = ("x", "y", "z")

#: Guard for dense exponentials: exp_coupling_closed refuses |x| > X_MAX.
#: Thermodynamic quantities beyond the guard are served by the log-domain
#: scalar functions in spinpair.quantum.
X_MAX = 300.0

_PAULI = {
    "x": np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex),
    "y": np.array([[0.0, -1.0j], [1.0j, 0.0]], dtype=complex),
    "z": np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex),
}


def pauli(axis: str) -> np.ndarray:
    """Return the 2x2 Pauli matrix for ``axis`` in {'x', 'y', 'z'}.

    The result is Hermitian, traceless and squares to the identity.
    """
    try:
        return _PAULI[axis].copy()
    except (KeyError, TypeError):
        raise ValueError(f"axis must be one of {SPIN_AXES}, got {axis!r}") from None


def kron(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Kronecker product of two single-spin (2x2) operators.

    The first factor acts on particle 1 and the second on particle 2; the
    product basis is ordered (|++>, |+->, |-+>, |-->).

    Raises
    ------
    ValueError
        If either input is not a 2x2 matrix.
    """
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    if a.shape != (2, 2) or b.shape != (2, 2):
        raise ValueError(f"kron expects two 2x2 matrices, got {a.shape} and {b.shape}")
    return np.kron(a, b)


def heisenberg_coupling() -> np.ndarray:
    """Dimensionless exchange coupling operator sigma1.sigma2.

    Sum over j in {x, y, z} of sigma_j (x) sigma_j.  Hermitian and
    traceless, with eigenvalue +1 on the triplet and -3 on the singlet.
    The energy scale alpha is applied by callers.
    """
    out = np.zeros((4, 4), dtype=complex)
    for axis in SPIN_AXES:
        p = pauli(axis)
        out += kron(p, p)
    return out


def bell_basis() -> list[np.ndarray]:
    """Orthonormal eigenbasis of the coupling operator.

    Returns the four states [|++>, |-->, (|+->+|-+>)/sqrt2,
    (|+->-|-+>)/sqrt2] as amplitude vectors over the product basis.  The
    first three span the triplet (eigenvalue +1); the last is the singlet
    (eigenvalue -3).
    """
    r = 1.0 / math.sqrt(2.0)
    return [
        np.array([1.0, 0.0, 0.0, 0.0], dtype=complex),
        np.array([0.0, 0.0, 0.0, 1.0], dtype=complex),
        np.array([0.0, r, r, 0.0], dtype=complex),
        np.array([0.0, r, -r, 0.0], dtype=complex),
    ]


def s_coefficient(x: float) -> float:
    """Thermal interpolation coefficient S(x) of the coupling exponential.

    S(x) = (e^{2x} - e^{-2x}) / (e^{2x} + 3 e^{-2x}), evaluated in a
    rearranged form that stays finite for any float ``x``:

        x >= 0:  (1 - e^{-4x}) / (1 + 3 e^{-4x})
        x <  0:  (e^{4x} - 1) / (e^{4x} + 3)

    S(0) = 0 and S -> 1 as x -> +inf (the quantum limit).
    """
    x = float(x)
    if not math.isfinite(x):
        raise ValueError(f"x must be finite, got {x}")
    if x >= 0.0:
        e = math.exp(-4.0 * x)
        return (1.0 - e) / (1.0 + 3.0 * e)
    e = math.exp(4.0 * x)
    return (e - 1.0) / (e + 3.0)


def matrix_exp_series(m: np.ndarray, tol: float = 1e-13) -> np.ndarray:
    """Matrix exponential by scaling and squaring of the Taylor series.

    The input is scaled by 2^-s until its largest entry is <= 0.5, the
    Taylor series is summed until the term's max-norm falls below ``tol``,
    and the result is squared s times.  Serves as an oracle independent
    of the closed-form route in :func:`exp_coupling_closed`.

    Parameters
    ----------
    m : ndarray
        Square matrix with finite entries.
    tol : float
        Positive truncation threshold on the max-norm of the Taylor term.
    """
    m = np.asarray(m, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"matrix must be square, got shape {m.shape}")
    if not np.all(np.isfinite(m.real)) or not np.all(np.isfinite(m.imag)):
        raise ValueError("matrix entries must be finite")
    if not tol > 0.0:
        raise ValueError(f"tol must be positive, got {tol}")

    n = m.shape[0]
    norm = float(np.max(np.abs(m)))
    squarings = 0 if norm <= 0.5 else int(math.ceil(math.log2(norm / 0.5)))
    a = m / (2.0 ** squarings)

    result = np.eye(n, dtype=complex)
    term = np.eye(n, dtype=complex)
    for k in range(1, 120):
        term = term @ a / k
        result = result + term
        if float(np.max(np.abs(term))) < tol:
            break
    else:  # pragma: no cover - unreachable with scaled norm <= 0.5
        raise ArithmeticError("Taylor series did not converge")

    for _ in range(squarings):
        result = result @ result
    return result


def exp_coupling_closed(x: float) -> np.ndarray:
    """Closed form of exp(-x * sigma1.sigma2) from the Pauli algebra.

    Equals (1/4)(e^{3x} + 3 e^{-x})(1 - C*S(x)).  Hermitian, positive
    definite, commutes with the coupling operator, and has trace
    e^{3x} + 3 e^{-x}.

    Raises
    ------
    ValueError
        If |x| exceeds the overflow guard (X_MAX, or earlier where
        e^{3|x|} leaves double range).  Use the log-domain partition and
        chemical-potential functions in spinpair.quantum instead.
    """
    x = float(x)
    if not math.isfinite(x) or abs(x) > X_MAX or 3.0 * abs(x) > 709.0:
        raise ValueError(
            f"x={x} is outside the dense-exponential guard (|x| <= {X_MAX}, "
            "e^(3|x|) representable); use the log-domain functions in "
            "spinpair.quantum for extreme arguments"
        )
    prefactor = 0.25 * (math.exp(3.0 * x) + 3.0 * math.exp(-x))
    return prefactor * (np.eye(4, dtype=complex) - heisenberg_coupling() * s_coefficient(x))


def eigensystem_hermitian(m: np.ndarray, atol: float = 1e-10) -> tuple[np.ndarray, np.ndarray]:
    """Eigenvalues and eigenvectors of a Hermitian matrix.

    Eigenvalues are returned ascending; eigenvectors are the orthonormal
    columns of the second array.  Each eigenvector's phase is fixed so
    that its first component of modulus > 1e-9 is real and positive,
    which makes the output deterministic; within a degenerate cluster the
    solver's discovery order is kept.

    Raises
    ------
    ValueError
        If ``m`` deviates from Hermiticity by more than ``atol`` in
        max-norm.
    """
    m = np.asarray(m, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"matrix must be square, got shape {m.shape}")
    deviation = float(np.max(np.abs(m - m.conj().T)))
    if deviation > atol:
        raise ValueError(f"matrix is not Hermitian within {atol} (deviation {deviation:.3e})")

    values, vectors = np.linalg.eigh(m)
    vectors = vectors.copy()
    for k in range(vectors.shape[1]):
        column = vectors[:, k]
        significant = np.abs(column) > 1e-9
        lead = column[int(np.argmax(significant))]
        vectors[:, k] = column * (lead.conjugate() / abs(lead))
    return values, vectors
