#!/usr/bin/env python3
"""
Tests for rotation covers of frame kernels and the perturbed-coefficient experiment
"""
import math

import numpy as np
import pytest

from framewigner.errors import InputError, RotationCoverError, UnsupportedDimensionError
from framewigner.frames import rotation_matrix, standard_frame, tetrahedron_rotations
from framewigner.linalg import dagger, random_density_matrix
from framewigner.opframes import build_hermitian_frame
from framewigner.tomo import kernel_identities, noise_experiment, rotation_cover, trial_generator

from reference_matrices import TETRAHEDRON_RELATIONS


def _find(cover, target, source, R):
    return [r for r in cover.relations
            if r.target == target and r.source == source and np.allclose(r.rotation, R, atol=1e-12)]


@pytest.fixture
def triangle_group():
    return [rotation_matrix(a) for a in (math.pi / 3, -math.pi / 3, 2 * math.pi / 3, -2 * math.pi / 3)]


def test_triangle_cover(triangle, W_triangle, triangle_group):
    cover = rotation_cover(triangle, triangle_group, W_triangle)
    assert cover.num_setups == 3
    assert cover.representatives == ((0, 0), (0, 1), (1, 0))

    plus, minus = rotation_matrix(math.pi / 3), rotation_matrix(-math.pi / 3)
    for target, source, R in (((1, 1), (0, 0), minus), ((0, 1), (1, 2), plus),
                              ((2, 2), (0, 0), plus), ((0, 2), (1, 2), minus)):
        found = _find(cover, target, source, R)
        assert found and all(r.sign == 1 for r in found)

    for relation in cover.relations:
        assert relation.deviation(W_triangle) <= 1e-12


def test_triangle_kernel_identities(W_triangle):
    identities = kernel_identities(W_triangle)
    assert ((1, 0), (2, 0), -1) in identities
    assert ((1, 0), (2, 1), 1) in identities
    assert ((2, 0), (2, 1), -1) in identities
    assert len(identities) == 3


def test_tetrahedron_cover(tetrahedron, W_tetrahedron):
    rotations = tetrahedron_rotations()
    cover = rotation_cover(tetrahedron, rotations, W_tetrahedron)
    assert cover.num_setups == 3
    for target, source, index, inverse in TETRAHEDRON_RELATIONS:
        R = dagger(rotations[index]) if inverse else rotations[index]
        found = _find(cover, target, source, R)
        assert found, f"W{target} = R W{source} R^dagger"
        assert all(r.sign == 1 for r in found)
    assert all(r.deviation(W_tetrahedron) <= 1e-12 for r in cover.relations)


@pytest.mark.parametrize("m", [3, 4, 5, 6, 8, 9])
def test_polygon_cover(m):
    frame = standard_frame("polygon", m)
    R = rotation_matrix(2 * math.pi / m)
    cover = rotation_cover(frame, [R])
    assert cover.num_setups == 1 + 2 * (m // 2)
    # W_jk = R^j W_{0, k-j} R^-j
    for j in range(m):
        for k in range(j + 1, m):
            assert cover.orbits[(j, k)] == cover.orbits[(0, k - j)]
            assert cover.orbits[(k, j)] == cover.orbits[(k - j, 0)]


def test_cover_rejects_element_outside_symmetry_group(triangle, triangle_group):
    group = triangle_group + [rotation_matrix(math.pi / 5)]
    with pytest.raises(RotationCoverError) as excinfo:
        rotation_cover(triangle, group)
    assert excinfo.value.element_index == 4


def test_cover_rejects_non_unitary(triangle):
    with pytest.raises(RotationCoverError) as excinfo:
        rotation_cover(triangle, [np.eye(2), 2 * np.eye(2)])
    assert excinfo.value.element_index == 1


def test_identity_group_gives_no_relations(triangle):
    cover = rotation_cover(triangle, [np.eye(2)])
    assert cover.relations == []
    assert cover.num_setups == 9


def test_trial_generator_is_counter_based():
    a = trial_generator(5, 17).uniform(size=4)
    b = trial_generator(5, 17).uniform(size=4)
    c = trial_generator(5, 18).uniform(size=4)
    assert np.array_equal(a, b)
    assert not np.array_equal(a, c)


@pytest.fixture
def W_icosahedron(icosahedron):
    return build_hermitian_frame(icosahedron)


def test_vanishing_noise(W_icosahedron):
    report = noise_experiment(np.eye(3) / 3, W_icosahedron, 1e-12, 50, seed=1)
    assert max(report.frame_errors) <= 1e-9
    assert max(report.basis_errors) <= 1e-9


def test_forced_zero_noise(W_icosahedron, rng):
    rho = random_density_matrix(rng, 3)
    report = noise_experiment(rho, W_icosahedron, 0.01, 20, seed=1, frame_noise=False, basis_noise=False)
    assert max(report.frame_errors) <= 1e-12
    assert max(report.basis_errors) <= 1e-12


def test_noise_experiment_is_reproducible(W_icosahedron):
    first = noise_experiment(np.eye(3) / 3, W_icosahedron, 0.01, 200, seed=3)
    second = noise_experiment(np.eye(3) / 3, W_icosahedron, 0.01, 200, seed=3, workers=4)
    assert first.frame_errors == second.frame_errors
    assert first.basis_errors == second.basis_errors
    assert first.summary() == second.summary()

    other = noise_experiment(np.eye(3) / 3, W_icosahedron, 0.01, 200, seed=4)
    assert other.frame_errors != first.frame_errors


def test_switching_off_one_noise_keeps_the_other_stream(W_icosahedron):
    both = noise_experiment(np.eye(3) / 3, W_icosahedron, 0.01, 30, seed=9)
    basis_only = noise_experiment(np.eye(3) / 3, W_icosahedron, 0.01, 30, seed=9, frame_noise=False)
    assert basis_only.basis_errors == both.basis_errors
    assert max(basis_only.frame_errors) <= 1e-12


def test_redundant_frame_beats_parity_basis(W_icosahedron):
    report = noise_experiment(np.eye(3) / 3, W_icosahedron, 0.01, 2000, seed=0)
    assert len(report.frame_errors) == report.trials == 2000
    assert report.mean_frame == pytest.approx(np.mean(report.frame_errors))
    assert report.mean_frame + 3 * report.stderr_frame < report.mean_basis - 3 * report.stderr_basis
    # E|err|^2 is 3 eps^2 through the frame and 9 eps^2 through the basis
    assert np.mean(np.square(report.frame_errors)) == pytest.approx(3e-4, rel=0.1)
    assert np.mean(np.square(report.basis_errors)) == pytest.approx(9e-4, rel=0.1)


def test_noise_experiment_needs_odd_dimension(W_triangle):
    with pytest.raises(UnsupportedDimensionError):
        noise_experiment(np.eye(2) / 2, W_triangle, 0.01, 10, seed=0)


@pytest.mark.parametrize("epsilon,trials", [(0, 10), (-0.1, 10), (0.01, 0)])
def test_noise_experiment_rejects_bad_parameters(W_icosahedron, epsilon, trials):
    with pytest.raises(InputError):
        noise_experiment(np.eye(3) / 3, W_icosahedron, epsilon, trials, seed=0)
