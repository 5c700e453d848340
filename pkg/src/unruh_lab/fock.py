"""Dense tensor-product linear algebra over labeled two-level factors.

Layouts name an ordered set of two-level subsystems; factor 0 is the most
significant bit of a basis index, so a basis ket reads left to right in the
written mode order.  On top of the layouts sit unit state vectors, density
matrices, isometric embeddings, the partial trace, and a cyclic Jacobi
eigensolver for Hermitian matrices.  Everything is small (at most 32x32),
immutable, and safe to share between threads.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence, Union

import numpy as np

from .errors import (
    ConvergenceError,
    DomainError,
    LayoutError,
    NormalizationError,
    ShapeError,
    SymmetryError,
)

HERMITIAN_TOL = 1e-12
TRACE_TOL = 1e-12
NORM_TOL = 1e-12
ISOMETRY_TOL = 1e-12
JACOBI_OFF_NORM_TOL = 1e-12
PSD_TOL = 1e-8


class Subsystem(Enum):
    """Labels for the two-level factors handled by this package.

    ``BOB`` is Bob's mode while still inertial; lifting through an encoding
    isometry replaces it with the four Rindler-wedge modes.
    """

    ALICE = "alice"
    BOB = "bob"
    REGION_I_PARTICLE = "region_i_particle"
    REGION_II_ANTIPARTICLE = "region_ii_antiparticle"
    REGION_I_ANTIPARTICLE = "region_i_antiparticle"
    REGION_II_PARTICLE = "region_ii_particle"

    def __repr__(self) -> str:  # keep error messages short
        return self.name


@dataclass(frozen=True)
class SubsystemLayout:
    """Ordered collection of distinct two-level factors."""

    factors: tuple[Subsystem, ...]

    def __post_init__(self):
        factors = tuple(self.factors)
        object.__setattr__(self, "factors", factors)
        if not factors:
            raise LayoutError("a layout needs at least one factor")
        if len(set(factors)) != len(factors):
            raise LayoutError(f"duplicate subsystem labels in {factors}")

    @property
    def dim(self) -> int:
        return 2 ** len(self.factors)

    def __len__(self) -> int:
        return len(self.factors)

    def __contains__(self, label: Subsystem) -> bool:
        return label in self.factors

    def position(self, label: Subsystem) -> int:
        try:
            return self.factors.index(label)
        except ValueError:
            raise LayoutError(f"{label!r} is not a factor of {self.factors}") from None

    def index_of(self, occupations: Sequence[int]) -> int:
        """Basis index of an occupation pattern, factor 0 as the MSB."""
        if len(occupations) != len(self.factors):
            raise ShapeError(
                f"expected {len(self.factors)} occupation bits, got {len(occupations)}"
            )
        index = 0
        for bit in occupations:
            if bit not in (0, 1):
                raise DomainError("occupations", f"bits must be 0 or 1, got {bit}")
            index = (index << 1) | bit
        return index


@dataclass(frozen=True)
class StateVector:
    """Unit-norm complex amplitude vector over a layout's basis."""

    layout: SubsystemLayout
    amplitudes: np.ndarray

    def __post_init__(self):
        amps = np.array(self.amplitudes, dtype=complex).reshape(-1)
        if amps.shape != (self.layout.dim,):
            raise ShapeError(
                f"amplitude vector of length {amps.size} does not fit a "
                f"{self.layout.dim}-dimensional layout"
            )
        norm = float(np.linalg.norm(amps))
        if abs(norm - 1.0) > NORM_TOL:
            raise NormalizationError(f"state norm is {norm!r}, expected 1")
        amps.flags.writeable = False
        object.__setattr__(self, "amplitudes", amps)

    @property
    def dim(self) -> int:
        return self.layout.dim


@dataclass(frozen=True)
class DensityMatrix:
    """Hermitian, unit-trace matrix over a layout.

    Hermiticity and trace are checked at construction; positivity is
    enforced wherever eigenvalues are actually computed (a value below
    ``-PSD_TOL`` raises there, see :func:`unruh_lab.measures.von_neumann_entropy`).
    """

    layout: SubsystemLayout
    entries: np.ndarray

    def __post_init__(self):
        m = np.array(self.entries, dtype=complex)
        dim = self.layout.dim
        if m.shape != (dim, dim):
            raise ShapeError(f"matrix of shape {m.shape} does not fit dimension {dim}")
        defect = float(np.abs(m - m.conj().T).max())
        if defect > HERMITIAN_TOL:
            raise SymmetryError(f"Hermiticity defect {defect:.3e} exceeds {HERMITIAN_TOL}")
        trace = complex(np.trace(m))
        if abs(trace - 1.0) > TRACE_TOL:
            raise NormalizationError(f"trace is {trace!r}, expected 1")
        m.flags.writeable = False
        object.__setattr__(self, "entries", m)

    @property
    def dim(self) -> int:
        return self.layout.dim

    def trace(self) -> float:
        return float(np.trace(self.entries).real)

    def purity(self) -> float:
        """tr(rho^2); 1 for pure states."""
        return float(np.einsum("ij,ji->", self.entries, self.entries).real)


@dataclass(frozen=True)
class Isometry:
    """Norm-preserving embedding of a small space into a labeled layout.

    Columns are the images of the source basis states and must be
    orthonormal (V^dagger V = identity within ``ISOMETRY_TOL``).
    """

    source_dim: int
    target_layout: SubsystemLayout
    matrix: np.ndarray

    def __post_init__(self):
        m = np.array(self.matrix, dtype=complex)
        if m.shape != (self.target_layout.dim, self.source_dim):
            raise ShapeError(
                f"isometry matrix of shape {m.shape} does not map "
                f"{self.source_dim} -> {self.target_layout.dim}"
            )
        gram = m.conj().T @ m
        defect = float(np.abs(gram - np.eye(self.source_dim)).max())
        if defect > ISOMETRY_TOL:
            raise NormalizationError(
                f"columns are not orthonormal (defect {defect:.3e})"
            )
        m.flags.writeable = False
        object.__setattr__(self, "matrix", m)


def basis_state(layout: SubsystemLayout, occupations: Sequence[int]) -> StateVector:
    """The computational basis ket with the given occupation bits."""
    amps = np.zeros(layout.dim, dtype=complex)
    amps[layout.index_of(occupations)] = 1.0
    return StateVector(layout, amps)


def tensor_product(a: StateVector, b: StateVector) -> StateVector:
    """Kronecker product of two states; layouts are concatenated."""
    shared = set(a.layout.factors) & set(b.layout.factors)
    if shared:
        raise LayoutError(f"operand layouts share labels {sorted(s.name for s in shared)}")
    layout = SubsystemLayout(a.layout.factors + b.layout.factors)
    return StateVector(layout, np.kron(a.amplitudes, b.amplitudes))


def outer_product(v: StateVector) -> DensityMatrix:
    """Rank-1 projector |v><v| as a density matrix."""
    return DensityMatrix(v.layout, np.outer(v.amplitudes, v.amplitudes.conj()))


def apply_isometry(rho: DensityMatrix, which_factor: Subsystem, v: Isometry) -> DensityMatrix:
    """Replace one two-level factor of ``rho`` by its isometric image.

    Returns (I (x) V (x) I) rho (I (x) V (x) I)^dagger with ``which_factor``
    substituted by the isometry's target factors; trace and spectrum are
    preserved.
    """
    pos = rho.layout.position(which_factor)
    if v.source_dim != 2:
        raise ShapeError(
            f"isometry source dimension {v.source_dim} does not match a two-level factor"
        )
    before = rho.layout.factors[:pos]
    after = rho.layout.factors[pos + 1 :]
    clash = (set(before) | set(after)) & set(v.target_layout.factors)
    if clash:
        raise LayoutError(
            f"isometry target labels {sorted(s.name for s in clash)} already present"
        )
    lift = v.matrix
    if before:
        lift = np.kron(np.eye(2 ** len(before)), lift)
    if after:
        lift = np.kron(lift, np.eye(2 ** len(after)))
    layout = SubsystemLayout(before + v.target_layout.factors + after)
    return DensityMatrix(layout, lift @ rho.entries @ lift.conj().T)


def partial_trace(rho: DensityMatrix, discard: Iterable[Subsystem]) -> DensityMatrix:
    """Trace out the given factors; remaining factors keep their order."""
    discard = frozenset(discard)
    labels = set(rho.layout.factors)
    unknown = discard - labels
    if unknown:
        raise LayoutError(f"unknown labels {sorted(s.name for s in unknown)}")
    if discard == labels:
        raise DomainError("discard", "cannot trace out every factor")
    if not discard:
        return rho
    n = len(rho.layout)
    keep = [i for i, f in enumerate(rho.layout.factors) if f not in discard]
    tensor = rho.entries.reshape((2,) * (2 * n))
    row_ids = list(range(n))
    col_ids = [i if rho.layout.factors[i] in discard else n + i for i in range(n)]
    out_ids = [i for i in keep] + [n + i for i in keep]
    reduced = np.einsum(tensor, row_ids + col_ids, out_ids)
    kept_layout = SubsystemLayout(tuple(rho.layout.factors[i] for i in keep))
    return DensityMatrix(kept_layout, reduced.reshape(kept_layout.dim, kept_layout.dim))


def _off_diagonal_norm_sq(a: np.ndarray) -> float:
    mags = np.abs(a) ** 2
    np.fill_diagonal(mags, 0.0)
    return float(mags.sum())


def eigvals_hermitian(
    matrix: Union[DensityMatrix, np.ndarray],
    *,
    off_norm_tol: float = JACOBI_OFF_NORM_TOL,
    hermitian_tol: float = HERMITIAN_TOL,
    max_sweeps: int = 100,
) -> np.ndarray:
    """All eigenvalues of a Hermitian matrix, descending.

    Cyclic Jacobi: unitary two-sided rotations annihilate one off-diagonal
    pair at a time, swept in row order until the off-diagonal Frobenius
    norm drops below ``off_norm_tol``.  The eigenvalue sum equals the trace
    to the same accuracy.
    """
    if isinstance(matrix, DensityMatrix):
        matrix = matrix.entries
    a = np.array(matrix, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ShapeError(f"expected a square matrix, got shape {a.shape}")
    defect = float(np.abs(a - a.conj().T).max())
    if defect > hermitian_tol:
        raise SymmetryError(f"Hermiticity defect {defect:.3e} exceeds {hermitian_tol}")
    a = (a + a.conj().T) / 2.0
    n = a.shape[0]
    if n == 1:
        return np.array([a[0, 0].real])

    skip_below = off_norm_tol / (100.0 * n)
    for _ in range(max_sweeps):
        if _off_diagonal_norm_sq(a) <= off_norm_tol**2:
            break
        for k in range(n - 1):
            for l in range(k + 1, n):
                _jacobi_rotate(a, k, l, skip_below)
    else:
        raise ConvergenceError(
            f"off-diagonal norm still {math.sqrt(_off_diagonal_norm_sq(a)):.3e} "
            f"after {max_sweeps} sweeps"
        )
    eigs = np.sort(np.diag(a).real)
    return eigs[::-1]


def _jacobi_rotate(a: np.ndarray, k: int, l: int, skip_below: float) -> None:
    """Annihilate a[k, l] (and a[l, k]) by a unitary plane rotation, in place."""
    pivot = a[k, l]
    beta = abs(pivot)
    if beta == 0.0:
        return
    if beta < skip_below:
        # negligible against the convergence tolerance; drop it outright
        a[k, l] = 0.0
        a[l, k] = 0.0
        return
    akk = a[k, k].real
    all_ = a[l, l].real
    phase = pivot / beta
    tau = (all_ - akk) / (2.0 * beta)
    t = (-1.0 if tau >= 0.0 else 1.0) / (abs(tau) + math.hypot(tau, 1.0))
    c = 1.0 / math.sqrt(1.0 + t * t)
    s = t * c
    new_kk = akk * c * c + 2.0 * beta * c * s + all_ * s * s
    new_ll = akk * s * s - 2.0 * beta * c * s + all_ * c * c

    col_k = a[:, k].copy()
    col_l = a[:, l].copy()
    a[:, k] = c * col_k + (s * np.conj(phase)) * col_l
    a[:, l] = (-s * phase) * col_k + c * col_l
    row_k = a[k, :].copy()
    row_l = a[l, :].copy()
    a[k, :] = c * row_k + (s * phase) * row_l
    a[l, :] = (-s * np.conj(phase)) * row_k + c * row_l

    a[k, k] = new_kk
    a[l, l] = new_ll
    a[k, l] = 0.0
    a[l, k] = 0.0
