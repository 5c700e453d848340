"""Unruh-mode states, Bob's encoding isometries, and channel builders.

A uniformly accelerated observer sees the inertial vacuum and one-particle
states as entangled states of four Rindler modes (region-I particle,
region-II antiparticle, region-I antiparticle, region-II particle, in that
order).  The acceleration enters through a mixing angle ``gamma`` in
[0, pi/4], with pi/4 the infinite-acceleration limit; ``q_r`` in [0, 1]
interpolates between right- and left-wedge Unruh operators (``q_r = 1`` is
the single-mode approximation).

Channels are prepared in the inertial frame on Alice (x) Bob, then Bob's
factor is lifted through an encoding isometry into the 16-dimensional
Rindler space, and either wedge is obtained by tracing out the other.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import DomainError, LayoutError
from .fock import (
    DensityMatrix,
    Isometry,
    StateVector,
    Subsystem,
    SubsystemLayout,
    apply_isometry,
    outer_product,
    partial_trace,
)

GAMMA_MAX = math.pi / 4
BELL_ALPHA = math.pi / 4

RINDLER_FACTORS = (
    Subsystem.REGION_I_PARTICLE,
    Subsystem.REGION_II_ANTIPARTICLE,
    Subsystem.REGION_I_ANTIPARTICLE,
    Subsystem.REGION_II_PARTICLE,
)
RINDLER_LAYOUT = SubsystemLayout(RINDLER_FACTORS)
INERTIAL_LAYOUT = SubsystemLayout((Subsystem.ALICE, Subsystem.BOB))
JOINT_FACTORS = (Subsystem.ALICE,) + RINDLER_FACTORS
JOINT_LAYOUT = SubsystemLayout(JOINT_FACTORS)

REGION_I_FACTORS = frozenset(
    {Subsystem.REGION_I_PARTICLE, Subsystem.REGION_I_ANTIPARTICLE}
)
REGION_II_FACTORS = frozenset(
    {Subsystem.REGION_II_ANTIPARTICLE, Subsystem.REGION_II_PARTICLE}
)


@dataclass(frozen=True)
class AccelerationParams:
    """Acceleration mixing angle and right-wedge weight.

    ``gamma`` is in radians within [0, pi/4]; pi/4 represents infinite
    acceleration.  ``q_r`` is in [0, 1]; the left weight ``q_l`` is derived
    as sqrt(1 - q_r**2) so the two always satisfy q_r**2 + q_l**2 = 1.
    """

    gamma: float
    q_r: float = 1.0

    def __post_init__(self):
        if not (0.0 <= self.gamma <= GAMMA_MAX):
            raise DomainError("gamma", f"must be within [0, pi/4], got {self.gamma}")
        if not (0.0 <= self.q_r <= 1.0):
            raise DomainError("q_r", f"must be within [0, 1], got {self.q_r}")

    @property
    def q_l(self) -> float:
        return math.sqrt(max(0.0, 1.0 - self.q_r * self.q_r))


def gamma_from_acceleration(omega: float, acceleration: float, light_speed: float) -> float:
    """Mixing angle for a mode of frequency ``omega`` at a given proper acceleration.

    cos(gamma) = (exp(-2 pi omega c / a) + 1)^(-1/2); the result grows from 0
    (inertial) towards pi/4 (infinite acceleration).
    """
    if omega <= 0.0:
        raise DomainError("omega", f"must be positive, got {omega}")
    if acceleration <= 0.0:
        raise DomainError("acceleration", f"must be positive, got {acceleration}")
    if light_speed <= 0.0:
        raise DomainError("light_speed", f"must be positive, got {light_speed}")
    exponent = -2.0 * math.pi * omega * light_speed / acceleration
    return math.acos((math.exp(exponent) + 1.0) ** -0.5)


def unruh_vacuum(accel: AccelerationParams) -> StateVector:
    """Vacuum as seen in the four Rindler modes; independent of ``q_r``."""
    c = math.cos(accel.gamma)
    s = math.sin(accel.gamma)
    amps = np.zeros(16, dtype=complex)
    amps[0b0000] = c * c
    amps[0b0011] = -s * c
    amps[0b1100] = s * c
    amps[0b1111] = -s * s
    return StateVector(RINDLER_LAYOUT, amps)


def unruh_particle(accel: AccelerationParams) -> StateVector:
    """One-particle excitation over the Rindler modes."""
    c = math.cos(accel.gamma)
    s = math.sin(accel.gamma)
    amps = np.zeros(16, dtype=complex)
    amps[0b1000] = accel.q_r * c
    amps[0b1011] = -accel.q_r * s
    amps[0b1101] = accel.q_l * s
    amps[0b0001] = accel.q_l * c
    return StateVector(RINDLER_LAYOUT, amps)


def unruh_antiparticle(accel: AccelerationParams) -> StateVector:
    """One-antiparticle excitation over the Rindler modes."""
    c = math.cos(accel.gamma)
    s = math.sin(accel.gamma)
    amps = np.zeros(16, dtype=complex)
    amps[0b0100] = accel.q_l * c
    amps[0b0111] = -accel.q_l * s
    amps[0b1110] = accel.q_r * s
    amps[0b0010] = accel.q_r * c
    return StateVector(RINDLER_LAYOUT, amps)


class Encoding(Enum):
    """How Bob's logical qubit is carried by the field modes."""

    SINGLE_RAIL = "single-rail"  # vacuum vs one particle
    DUAL_RAIL = "dual-rail"  # particle vs antiparticle


def bob_isometry(encoding: Encoding, accel: AccelerationParams) -> Isometry:
    """Embedding of Bob's inertial qubit basis into the Rindler space."""
    if encoding is Encoding.SINGLE_RAIL:
        columns = (unruh_vacuum(accel), unruh_particle(accel))
    elif encoding is Encoding.DUAL_RAIL:
        columns = (unruh_particle(accel), unruh_antiparticle(accel))
    else:
        raise DomainError("encoding", f"unknown encoding {encoding!r}")
    matrix = np.column_stack([col.amplitudes for col in columns])
    return Isometry(2, RINDLER_LAYOUT, matrix)


class ChannelFamily(Enum):
    """The five channel preparations this package models.

    Enum values double as the command-line tokens.
    """

    QUANTUM_SINGLE_RAIL = "quantum-single"
    QUANTUM_DUAL_RAIL = "quantum-dual"
    CLASSICAL_SINGLE_RAIL = "classical-single"
    CLASSICAL_DUAL_RAIL = "classical-dual"
    WERNER = "werner"

    @property
    def encoding(self) -> Encoding:
        if self in (ChannelFamily.QUANTUM_DUAL_RAIL, ChannelFamily.CLASSICAL_DUAL_RAIL):
            return Encoding.DUAL_RAIL
        return Encoding.SINGLE_RAIL

    @property
    def is_classical(self) -> bool:
        return self in (
            ChannelFamily.CLASSICAL_SINGLE_RAIL,
            ChannelFamily.CLASSICAL_DUAL_RAIL,
        )

    @property
    def is_quantum(self) -> bool:
        return self in (
            ChannelFamily.QUANTUM_SINGLE_RAIL,
            ChannelFamily.QUANTUM_DUAL_RAIL,
        )


@dataclass(frozen=True)
class ChannelSpec:
    """One fully parameterized channel preparation.

    ``alpha`` weights the two branches of the prepared state and is fixed at
    pi/4 for the Werner family; ``fidelity_f`` is the Werner mixing weight
    and is meaningless for the other families.
    """

    family: ChannelFamily
    accel: AccelerationParams
    alpha: float = BELL_ALPHA
    fidelity_f: float | None = None

    def __post_init__(self):
        if not math.isfinite(self.alpha):
            raise DomainError("alpha", f"must be finite, got {self.alpha}")
        if self.family is ChannelFamily.WERNER:
            if self.fidelity_f is None:
                raise DomainError("f", "required for the werner family")
            if not (0.0 <= self.fidelity_f <= 1.0):
                raise DomainError("f", f"must be within [0, 1], got {self.fidelity_f}")
            if self.alpha != BELL_ALPHA:
                raise DomainError("alpha", "fixed at pi/4 for the werner family")
        elif self.fidelity_f is not None:
            raise DomainError("f", "only meaningful for the werner family")


def _bell_pair() -> StateVector:
    amps = np.zeros(4, dtype=complex)
    amps[0b00] = amps[0b11] = math.sqrt(0.5)
    return StateVector(INERTIAL_LAYOUT, amps)


def build_inertial(spec: ChannelSpec, *, classical_weights: str = "squared") -> DensityMatrix:
    """The prepared Alice (x) Bob state before Bob accelerates.

    Quantum families give the pure superposition cos(alpha)|00> +
    sin(alpha)|11>; classical families give the diagonal mixture with
    weights cos^2(alpha), sin^2(alpha); Werner mixes the alpha = pi/4 pure
    state with white noise.

    ``classical_weights="raw"`` uses the unsquared weights cos(alpha),
    sin(alpha) instead.  Those only sum to one at isolated alpha values, so
    away from them the construction fails the unit-trace check; the option
    exists to demonstrate why the squared convention is used.
    """
    if classical_weights not in ("squared", "raw"):
        raise DomainError(
            "classical_weights", f"must be 'squared' or 'raw', got {classical_weights!r}"
        )
    family = spec.family
    if family.is_quantum:
        amps = np.zeros(4, dtype=complex)
        amps[0b00] = math.cos(spec.alpha)
        amps[0b11] = math.sin(spec.alpha)
        return outer_product(StateVector(INERTIAL_LAYOUT, amps))
    if family.is_classical:
        if classical_weights == "squared":
            w0 = math.cos(spec.alpha) ** 2
            w1 = math.sin(spec.alpha) ** 2
        else:
            w0 = math.cos(spec.alpha)
            w1 = math.sin(spec.alpha)
        entries = np.zeros((4, 4), dtype=complex)
        entries[0b00, 0b00] = w0
        entries[0b11, 0b11] = w1
        return DensityMatrix(INERTIAL_LAYOUT, entries)
    # Werner: fidelity-weighted mixture of the Bell projector and white noise
    bell = _bell_pair()
    f = spec.fidelity_f
    entries = f * np.outer(bell.amplitudes, bell.amplitudes.conj())
    entries += (1.0 - f) / 4.0 * np.eye(4)
    return DensityMatrix(INERTIAL_LAYOUT, entries)


def build_joint(spec: ChannelSpec, *, classical_weights: str = "squared") -> DensityMatrix:
    """The shared state after Bob accelerates: Alice plus four Rindler modes."""
    inertial = build_inertial(spec, classical_weights=classical_weights)
    lift = bob_isometry(spec.family.encoding, spec.accel)
    return apply_isometry(inertial, Subsystem.BOB, lift)


class BobRegion(Enum):
    """Which Rindler wedge the receiver occupies.

    Enum values double as the command-line tokens.
    """

    I = "bob-i"
    II = "bob-ii"

    @property
    def kept_factors(self) -> frozenset[Subsystem]:
        return REGION_I_FACTORS if self is BobRegion.I else REGION_II_FACTORS

    @property
    def traced_factors(self) -> frozenset[Subsystem]:
        return REGION_II_FACTORS if self is BobRegion.I else REGION_I_FACTORS


def reduce_to_region(joint: DensityMatrix, region: BobRegion) -> DensityMatrix:
    """Trace out the wedge the receiver cannot access.

    Both modes of the kept wedge (particle and antiparticle) are retained:
    the receiver's detector does not distinguish them.
    """
    if joint.layout != JOINT_LAYOUT:
        raise LayoutError(
            f"expected the five-factor joint layout {JOINT_FACTORS}, "
            f"got {joint.layout.factors}"
        )
    return partial_trace(joint, region.traced_factors)
