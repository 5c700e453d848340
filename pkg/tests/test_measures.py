import math

import numpy as np
import pytest

from unruh_lab import (
    AccelerationParams,
    BipartiteSplit,
    BobRegion,
    ChannelFamily,
    ChannelSpec,
    DensityMatrix,
    JOINT_TRIPARTITE,
    LayoutError,
    SpectrumError,
    Subsystem,
    SubsystemLayout,
    TripartiteSplit,
    bob_isometry,
    build_inertial,
    build_joint,
    conditional_entropy,
    entropy_from_eigenvalues,
    mutual_information,
    outer_product,
    partial_trace,
    reduce_to_region,
    region_split,
    strong_additivity,
    strong_additivity_swapped,
    subsystem_entropies,
    von_neumann_entropy,
)
from unruh_lab import crosscheck

from helpers import TWO_QUBITS, bell_state, random_density, random_state

PI4 = math.pi / 4
ALICE = Subsystem.ALICE
BOB = Subsystem.BOB
SPLIT_AB = BipartiteSplit({ALICE}, {BOB})

# frozen oracle values; see test_frozen_values_match_oracle for their recomputation
MUTUAL_INFO_INFINITE_ACCEL = 1.0
WERNER_SSA_F95 = 0.272208547829
WERNER_SSA_SWAPPED_F95 = 0.857558347950


class TestVonNeumannEntropy:
    def test_pure_state_is_zero(self):
        rng = np.random.default_rng(3)
        rho = outer_product(random_state(rng, TWO_QUBITS))
        assert abs(von_neumann_entropy(rho)) < 1e-9

    def test_maximally_mixed_qubit(self):
        rho = DensityMatrix(SubsystemLayout((ALICE,)), np.eye(2) / 2)
        assert abs(von_neumann_entropy(rho) - 1.0) < 1e-12

    def test_three_quarters_closed_form(self):
        rho = DensityMatrix(SubsystemLayout((ALICE,)), np.diag([0.75, 0.25]))
        expected = 2.0 - 0.75 * math.log2(3.0)
        assert abs(von_neumann_entropy(rho) - expected) < 1e-12
        assert abs(expected - 0.8112781245) < 1e-9

    def test_clamps_small_negatives(self):
        assert entropy_from_eigenvalues([1.0, -1e-10]) == 0.0
        # an eigenvalue a hair above 1 may push the result a hair below 0
        assert abs(entropy_from_eigenvalues([1.0 + 1e-10, -1e-10])) < 1e-9

    def test_rejects_psd_violations(self):
        with pytest.raises(SpectrumError):
            entropy_from_eigenvalues([1.1, -0.1])


class TestMutualInformation:
    def test_bell_pair_two_bits(self):
        rho = outer_product(bell_state())
        assert abs(mutual_information(rho, SPLIT_AB) - 2.0) < 1e-12

    def test_product_state_zero(self):
        rng = np.random.default_rng(7)
        a = random_density(rng, SubsystemLayout((ALICE,)))
        b = random_density(rng, SubsystemLayout((BOB,)))
        rho = DensityMatrix(TWO_QUBITS, np.kron(a.entries, b.entries))
        assert abs(mutual_information(rho, SPLIT_AB)) < 1e-9

    def test_infinite_acceleration_value_frozen(self):
        spec = ChannelSpec(
            ChannelFamily.QUANTUM_SINGLE_RAIL, AccelerationParams(PI4, 1.0), alpha=PI4
        )
        near = reduce_to_region(build_joint(spec), BobRegion.I)
        single = mutual_information(near, region_split(BobRegion.I))
        assert abs(single - MUTUAL_INFO_INFINITE_ACCEL) < 1e-9
        dual_spec = ChannelSpec(
            ChannelFamily.QUANTUM_DUAL_RAIL, AccelerationParams(PI4, 1.0), alpha=PI4
        )
        dual = mutual_information(
            reduce_to_region(build_joint(dual_spec), BobRegion.I),
            region_split(BobRegion.I),
        )
        assert abs(single - dual) < 1e-9

    def test_split_must_cover_layout(self):
        rho = outer_product(bell_state())
        with pytest.raises(LayoutError):
            mutual_information(rho, BipartiteSplit({ALICE}, {Subsystem.REGION_I_PARTICLE}))


class TestConditionalEntropy:
    def test_bell_pair_minus_one(self):
        rho = outer_product(bell_state())
        assert abs(conditional_entropy(rho, SPLIT_AB) + 1.0) < 1e-12

    def test_classically_correlated_zero(self):
        rho = DensityMatrix(TWO_QUBITS, np.diag([0.5, 0.0, 0.0, 0.5]))
        assert abs(conditional_entropy(rho, SPLIT_AB)) < 1e-12

    def test_two_qubit_white_noise_one_bit(self):
        rho = DensityMatrix(TWO_QUBITS, np.eye(4) / 4)
        assert abs(conditional_entropy(rho, SPLIT_AB) - 1.0) < 1e-12


GHZ_LAYOUT = SubsystemLayout((ALICE, BOB, Subsystem.REGION_I_PARTICLE))
GHZ_SPLIT = TripartiteSplit({ALICE}, {BOB}, {Subsystem.REGION_I_PARTICLE})


class TestStrongAdditivity:
    def test_pure_product_is_zero(self):
        rng = np.random.default_rng(11)
        amps = np.ones(1, dtype=complex)
        state = None
        for label in GHZ_LAYOUT.factors:
            factor = random_state(rng, SubsystemLayout((label,)))
            amps = np.kron(amps, factor.amplitudes)
        rho = DensityMatrix(GHZ_LAYOUT, np.outer(amps, amps.conj()))
        assert abs(strong_additivity(rho, GHZ_SPLIT)) < 1e-9

    def test_ghz_is_zero(self):
        amps = np.zeros(8, dtype=complex)
        amps[0] = amps[7] = math.sqrt(0.5)
        rho = DensityMatrix(GHZ_LAYOUT, np.outer(amps, amps.conj()))
        assert abs(strong_additivity(rho, GHZ_SPLIT)) < 1e-12
        assert abs(strong_additivity_swapped(rho, GHZ_SPLIT)) < 1e-12

    def test_werner_value_frozen(self):
        spec = ChannelSpec(
            ChannelFamily.WERNER, AccelerationParams(math.pi / 8, 1.0), fidelity_f=0.95
        )
        joint = build_joint(spec)
        assert abs(strong_additivity(joint, JOINT_TRIPARTITE) - WERNER_SSA_F95) < 1e-9
        assert (
            abs(strong_additivity_swapped(joint, JOINT_TRIPARTITE) - WERNER_SSA_SWAPPED_F95)
            < 1e-9
        )

    def test_frozen_values_match_oracle(self):
        parts = crosscheck.brute_tripartite_entropies(
            ChannelFamily.WERNER, math.pi / 8, 1.0, fidelity_f=0.95
        )
        oracle = parts["s_ab"] - parts["s_b"] + parts["s_ac"] - parts["s_c"]
        oracle_swapped = parts["s_ab"] - parts["s_a"] + parts["s_ac"] - parts["s_c"]
        assert abs(oracle - WERNER_SSA_F95) < 1e-9
        assert abs(oracle_swapped - WERNER_SSA_SWAPPED_F95) < 1e-9
        oracle_mi = crosscheck.brute_mutual_information(
            ChannelFamily.QUANTUM_SINGLE_RAIL, BobRegion.I, PI4, 1.0
        )
        assert abs(oracle_mi - MUTUAL_INFO_INFINITE_ACCEL) < 1e-9

    def test_swapped_variant_goes_negative_where_reported_does_not(self):
        spec = ChannelSpec(
            ChannelFamily.WERNER, AccelerationParams(0.0, 0.25), fidelity_f=0.95
        )
        joint = build_joint(spec)
        assert strong_additivity(joint, JOINT_TRIPARTITE) >= -1e-9
        assert strong_additivity_swapped(joint, JOINT_TRIPARTITE) < -0.5


class TestMeasureProperties:
    def channel_states(self):
        rng = np.random.default_rng(19)
        for _ in range(12):
            family = list(ChannelFamily)[int(rng.integers(5))]
            f = float(rng.uniform()) if family is ChannelFamily.WERNER else None
            spec = ChannelSpec(
                family,
                AccelerationParams(float(rng.uniform(0, PI4)), float(rng.uniform())),
                fidelity_f=f,
            )
            joint = build_joint(spec)
            region = BobRegion.I if rng.uniform() < 0.5 else BobRegion.II
            yield reduce_to_region(joint, region), region_split(region)

    def test_mutual_information_bounds(self):
        for rho, split in self.channel_states():
            s_a, s_b, s_ab = subsystem_entropies(rho, split)
            mi = s_a + s_b - s_ab
            assert mi >= -1e-9
            assert mi <= 2.0 * min(s_a, s_b) + 1e-9

    def test_conditional_entropy_lower_bound(self):
        for rho, split in self.channel_states():
            s_a, _, _ = subsystem_entropies(rho, split)
            assert conditional_entropy(rho, split) >= -s_a - 1e-9

    def test_pure_state_identities(self):
        rng = np.random.default_rng(23)
        for _ in range(8):
            rho = outer_product(random_state(rng, TWO_QUBITS))
            s_a, _, _ = subsystem_entropies(rho, SPLIT_AB)
            assert abs(conditional_entropy(rho, SPLIT_AB) + s_a) < 1e-9
            assert abs(mutual_information(rho, SPLIT_AB) - 2.0 * s_a) < 1e-9

    def test_entropy_invariant_under_isometry(self):
        rng = np.random.default_rng(29)
        for _ in range(6):
            family = list(ChannelFamily)[int(rng.integers(5))]
            f = float(rng.uniform()) if family is ChannelFamily.WERNER else None
            spec = ChannelSpec(
                family,
                AccelerationParams(float(rng.uniform(0, PI4)), float(rng.uniform())),
                fidelity_f=f,
            )
            inertial = build_inertial(spec)
            lifted = build_joint(spec)
            assert (
                abs(von_neumann_entropy(inertial) - von_neumann_entropy(lifted)) < 1e-9
            )

    def test_jacobi_agrees_with_two_level_closed_form(self):
        # rank <= 2 reductions: Alice marginals plus classical reductions at gamma = 0
        def binary_entropy_from_purity(trace, purity):
            gap = math.sqrt(max(0.0, 2.0 * purity - trace * trace))
            lam = ((trace + gap) / 2.0, (trace - gap) / 2.0)
            return entropy_from_eigenvalues(lam)

        rng = np.random.default_rng(31)
        cases = []
        for _ in range(10):
            family = list(ChannelFamily)[int(rng.integers(5))]
            f = float(rng.uniform()) if family is ChannelFamily.WERNER else None
            spec = ChannelSpec(
                family,
                AccelerationParams(float(rng.uniform(0, PI4)), float(rng.uniform())),
                fidelity_f=f,
            )
            reduced = reduce_to_region(build_joint(spec), BobRegion.I)
            cases.append(partial_trace(reduced, BobRegion.I.kept_factors))
        for family in (ChannelFamily.CLASSICAL_SINGLE_RAIL, ChannelFamily.CLASSICAL_DUAL_RAIL):
            # at gamma = 0, q_r = 1 the classical reductions are exactly rank 2
            spec = ChannelSpec(family, AccelerationParams(0.0, 1.0))
            cases.append(reduce_to_region(build_joint(spec), BobRegion.I))
        for rho in cases:
            closed = binary_entropy_from_purity(rho.trace(), rho.purity())
            assert abs(von_neumann_entropy(rho) - closed) < 1e-9


class TestBobIsometryEntropyConsistency:
    def test_encoded_basis_reaches_both_wedges(self):
        from unruh_lab import Encoding

        # at gamma = pi/4 every encoding spreads weight over both wedges
        iso = bob_isometry(Encoding.SINGLE_RAIL, AccelerationParams(PI4, 0.8))
        weights = np.abs(iso.matrix) ** 2
        assert weights[:8].sum() > 0 and weights[8:].sum() > 0
