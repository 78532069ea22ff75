"""Bipartite density matrices and two-qubit correlation measures.

A ``DensityMatrix`` couples a validated matrix to its tensor split, so
every measure knows which cut it refers to.  All entropic quantities
are in bits (logarithms base 2).

The concurrence follows the spin-flip construction: with
``rho_tilde = (sy x sy) conj(rho) (sy x sy)`` and ``l1 >= ... >= l4``
the eigenvalues of ``rho @ rho_tilde``,

    C = max(0, sqrt(l1) - sqrt(l2) - sqrt(l3) - sqrt(l4)).

The product is not Hermitian, but with ``rho = L L^dagger`` it shares
its spectrum with the Hermitian matrix ``L^dagger rho_tilde L``, which
is what gets diagonalised here.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .linalg import (
    HERMITICITY_ATOL,
    PSD_ATOL,
    hermitian_eigenvalues,
    hermiticity_defect,
    partial_trace,
    partial_transpose,
    psd_square_root_factor,
)

__all__ = [
    "TRACE_ATOL",
    "DensityMatrix",
    "MeasureSet",
    "validate_density",
    "binary_entropy",
    "von_neumann_entropy",
    "spin_flip",
    "concurrence",
    "entanglement_of_formation",
    "mutual_information",
    "min_pt_eigenvalue",
    "one_to_rest_tangle",
    "measure_set",
]

TRACE_ATOL = 1e-12

# Spectrum of rho @ rho_tilde for rank-deficient states carries
# eigenvalue dust whose square root would dominate the concurrence
# error budget; anything this far below the top eigenvalue is noise.
_WOOTTERS_NOISE_FLOOR = 1e-13

_SIGMA_Y = np.array([[0.0, -1.0j], [1.0j, 0.0]])
_SPIN_FLIP_KERNEL = np.kron(_SIGMA_Y, _SIGMA_Y).real


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    """A validated density matrix with an explicit bipartition.

    Build instances through :func:`validate_density`; the constructor
    performs no checks of its own.
    """

    matrix: np.ndarray
    dims: tuple[int, int]

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]


@dataclass(frozen=True)
class MeasureSet:
    """The four pairwise measures evaluated on one state."""

    concurrence: float
    eof: float
    mutual_information: float
    min_pt_eigenvalue: float


def validate_density(matrix, dims) -> DensityMatrix:
    """Check the density-matrix axioms and attach the bipartition.

    Requirements: square and finite, ``dims[0] * dims[1]`` matches the
    matrix dimension, Hermitian within 1e-12 entrywise, unit trace
    within 1e-12, and no eigenvalue below -1e-10.

    Raises
    ------
    ValueError
        On any violated requirement, naming the offending quantity.
    """
    m = np.asarray(matrix, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    if not np.isfinite(m).all():
        raise ValueError("matrix contains non-finite entries")
    d1, d2 = (int(d) for d in dims)
    if d1 < 1 or d2 < 1 or d1 * d2 != m.shape[0]:
        raise ValueError(f"bipartition {(d1, d2)} does not factor matrix dimension {m.shape[0]}")
    defect = hermiticity_defect(m)
    if defect > HERMITICITY_ATOL:
        raise ValueError(f"matrix is not Hermitian: max |a - a^dagger| entry is {defect:.3e}")
    tr = m.trace()
    if abs(tr - 1.0) > TRACE_ATOL:
        raise ValueError(f"trace is {tr.real:.15g}, expected 1 within {TRACE_ATOL:g}")
    evals = np.linalg.eigvalsh(m)
    if evals[0] < -PSD_ATOL:
        raise ValueError(f"matrix is not positive semidefinite: eigenvalue {evals[0]:.3e}")
    return DensityMatrix(matrix=m, dims=(d1, d2))


def binary_entropy(p: float) -> float:
    """Shannon entropy of a biased coin, in bits."""
    if -TRACE_ATOL <= p < 0.0:
        p = 0.0
    elif 1.0 < p <= 1.0 + TRACE_ATOL:
        p = 1.0
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"probability {p!r} outside [0, 1]")
    out = 0.0
    for q in (p, 1.0 - p):
        if q > 0.0:
            out -= q * math.log2(q)
    return out


def _spectrum_entropy(matrix: np.ndarray) -> float:
    # eigenvalue dust in [-PSD_ATOL, 0) counts as an exact zero
    evals = hermitian_eigenvalues(matrix)
    if evals[0] < -PSD_ATOL:
        raise ValueError(f"matrix is not positive semidefinite: eigenvalue {evals[0]:.3e}")
    evals = evals[evals > 0.0]
    if evals.size == 0:
        return 0.0
    return float(-(evals * np.log2(evals)).sum())


def von_neumann_entropy(rho: DensityMatrix) -> float:
    """Entropy of the spectrum, in bits; 0 for pure states."""
    return _spectrum_entropy(rho.matrix)


def _require_two_qubits(rho: DensityMatrix) -> None:
    if rho.dims != (2, 2):
        raise ValueError(f"measure is defined for qubit pairs, got dims {rho.dims}")


def spin_flip(rho: DensityMatrix) -> np.ndarray:
    """``(sy x sy) conj(rho) (sy x sy)`` for a two-qubit state."""
    _require_two_qubits(rho)
    return _SPIN_FLIP_KERNEL @ rho.matrix.conj() @ _SPIN_FLIP_KERNEL


def concurrence(rho: DensityMatrix) -> float:
    """Wootters concurrence of a two-qubit state, in [0, 1]."""
    _require_two_qubits(rho)
    flipped = spin_flip(rho)
    factor = psd_square_root_factor(rho.matrix)
    herm = factor.conj().T @ flipped @ factor
    lams = hermitian_eigenvalues(herm)[::-1]
    lams = np.clip(lams, 0.0, None)
    lams[lams < lams[0] * _WOOTTERS_NOISE_FLOOR] = 0.0
    roots = np.sqrt(lams)
    return float(max(0.0, roots[0] - roots[1] - roots[2] - roots[3]))


def entanglement_of_formation(rho: DensityMatrix) -> float:
    """Binary entropy of (1 + sqrt(1 - C^2)) / 2; monotone in C."""
    c = concurrence(rho)
    return binary_entropy((1.0 + math.sqrt(max(0.0, 1.0 - c * c))) / 2.0)


def mutual_information(rho: DensityMatrix) -> float:
    """``S(rho_1) + S(rho_2) - S(rho_12)`` in bits.

    Non-negative; at most ``2 log2 d`` for equal factor dimensions d.
    """
    first = partial_trace(rho.matrix, rho.dims, keep="first")
    second = partial_trace(rho.matrix, rho.dims, keep="second")
    return (
        _spectrum_entropy(first)
        + _spectrum_entropy(second)
        - _spectrum_entropy(rho.matrix)
    )


def min_pt_eigenvalue(rho: DensityMatrix) -> float:
    """Smallest eigenvalue after transposing one factor.

    The partial-transpose spectrum is the same whichever factor is
    transposed.  For qubit pairs a negative value is equivalent to
    entanglement.
    """
    return float(hermitian_eigenvalues(partial_transpose(rho.matrix, rho.dims, "first"))[0])


def one_to_rest_tangle(rho_single) -> float:
    """``4 det(rho)`` of a single-qubit reduced state, clamped to [0, 1].

    For a pure global state this equals the tangle between the qubit
    and everything else.
    """
    if isinstance(rho_single, DensityMatrix):
        m = rho_single.matrix
    else:
        m = np.asarray(rho_single, dtype=complex)
    if m.shape != (2, 2):
        raise ValueError(f"expected a 2x2 matrix, got shape {m.shape}")
    defect = hermiticity_defect(m)
    if defect > HERMITICITY_ATOL:
        raise ValueError(f"matrix is not Hermitian: max |a - a^dagger| entry is {defect:.3e}")
    if abs(m.trace() - 1.0) > TRACE_ATOL:
        raise ValueError(f"trace is {m.trace().real:.15g}, expected 1 within {TRACE_ATOL:g}")
    evals = np.linalg.eigvalsh(m)
    if evals[0] < -PSD_ATOL:
        raise ValueError(f"matrix is not positive semidefinite: eigenvalue {evals[0]:.3e}")
    det = float(np.linalg.det(m).real)
    return min(1.0, max(0.0, 4.0 * det))


def measure_set(rho: DensityMatrix) -> MeasureSet:
    """All four pairwise measures of one two-qubit state."""
    _require_two_qubits(rho)
    return MeasureSet(
        concurrence=concurrence(rho),
        eof=entanglement_of_formation(rho),
        mutual_information=mutual_information(rho),
        min_pt_eigenvalue=min_pt_eigenvalue(rho),
    )
