#!/usr/bin/env python3
"""
Tests for the qubit-as-projected-qutrit construction
"""
import numpy as np
import pytest

from framewigner.errors import InputError
from framewigner.linalg import random_density_matrix, random_hermitian
from framewigner.opframes import wigner
from framewigner.projection import (
    hermitian_basis,
    image_dimension,
    project_operator,
    projection_pair,
    wigner_of_projection,
)

from reference_matrices import PROJECTION_L, PROJECTION_P, QUBIT_E, QUTRIT_E, TRIANGLE_W


@pytest.fixture
def pair():
    return projection_pair()


@pytest.mark.parametrize("d,listing", [(2, QUBIT_E), (3, QUTRIT_E)])
def test_hermitian_basis_matches_listing(d, listing):
    E = hermitian_basis(d).reshape(d, d, d, d)
    for jk, expected in listing.items():
        assert np.max(np.abs(E[jk] - expected)) <= 1e-14


@pytest.mark.parametrize("d", [1, 2, 3, 4])
def test_hermitian_basis_is_trace_orthonormal(d):
    E = hermitian_basis(d)
    assert E.shape == (d * d, d, d)
    gram = np.einsum("pab,qba->pq", E, E)
    assert np.max(np.abs(gram - np.eye(d * d))) <= 1e-14
    assert np.max(np.abs(E - E.conj().transpose(0, 2, 1))) == 0


def test_projection_pair_matches_listing(pair):
    assert np.max(np.abs(pair.L - PROJECTION_L)) <= 1e-14
    assert np.max(np.abs(pair.P - PROJECTION_P)) <= 1e-14
    assert np.allclose(np.diag(pair.P), 2 / 3, atol=1e-15)
    assert pair.defect() <= 1e-14


def test_projected_matrix_units_are_triangle_kernel(pair):
    E = hermitian_basis(3).reshape(3, 3, 3, 3)
    for jk, expected in TRIANGLE_W.items():
        assert np.max(np.abs(project_operator(E[jk], pair) - expected)) <= 1e-12


def test_project_operator_examples(pair):
    assert np.max(np.abs(project_operator(np.eye(3), pair) - np.eye(2))) <= 1e-14
    w0 = pair.L[0]
    assert np.max(np.abs(project_operator(np.outer(w0, w0), pair) - np.diag([1, 0]))) <= 1e-14


def test_projection_is_positive(pair, rng):
    for _ in range(100):
        rank = int(rng.integers(1, 4))
        rho = random_density_matrix(rng, 3, rank)
        assert np.linalg.eigvalsh(project_operator(rho, pair))[0] >= -1e-10


def test_projection_is_not_injective(pair):
    complement = np.eye(3) - pair.P
    assert np.max(np.abs(complement)) > 0.1
    assert np.max(np.abs(project_operator(complement, pair))) <= 1e-14
    assert np.max(np.abs(wigner_of_projection(complement, pair).values)) <= 1e-14


def test_projection_is_surjective(pair):
    assert image_dimension(pair) == 4


def test_wigner_of_projection_agrees_with_projected_table(pair, W_triangle, rng):
    for a in [np.eye(3)] + [random_hermitian(rng, 3) for _ in range(20)]:
        direct = wigner(project_operator(a, pair), W_triangle).values
        assert np.max(np.abs(wigner_of_projection(a, pair).values - direct)) <= 1e-12


def test_project_operator_rejects_bad_input():
    with pytest.raises(InputError):
        project_operator(np.eye(2))
    with pytest.raises(InputError):
        project_operator(np.triu(np.ones((3, 3))))
