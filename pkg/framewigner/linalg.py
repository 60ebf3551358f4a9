"""
Dense complex linear-algebra helpers shared by the frame modules
"""
from typing import Optional, Sequence, Tuple

import numpy as np

from .config import resolve
from .errors import InputError, NotAFrameError


def as_vector(x, dim: Optional[int] = None, name: str = "vector") -> np.ndarray:
    """Coerce to a 1-D complex array, optionally checking its length"""
    arr = np.asarray(x, dtype=np.complex128)
    if arr.ndim != 1:
        raise InputError(f"{name} must be one-dimensional, got shape {arr.shape}")
    if dim is not None and arr.shape[0] != dim:
        raise InputError(f"{name} has dimension {arr.shape[0]}, expected {dim}")
    return arr


def as_matrix(a, dim: Optional[int] = None, name: str = "matrix") -> np.ndarray:
    """Coerce to a square complex matrix, optionally checking its size"""
    arr = np.asarray(a, dtype=np.complex128)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise InputError(f"{name} must be a square matrix, got shape {arr.shape}")
    if dim is not None and arr.shape[0] != dim:
        raise InputError(f"{name} is {arr.shape[0]}x{arr.shape[0]}, expected {dim}x{dim}")
    return arr


def dagger(a: np.ndarray) -> np.ndarray:
    return np.conj(np.swapaxes(a, -1, -2))


def max_abs(a) -> float:
    arr = np.asarray(a)
    if arr.size == 0:
        return 0.0
    return float(np.max(np.abs(arr)))


def ensure_hermitian(a, dim: Optional[int] = None, tol: Optional[float] = None,
                     name: str = "operator") -> np.ndarray:
    """Validate hermiticity within tol and return the symmetrized matrix (A + A†)/2"""
    arr = as_matrix(a, dim, name)
    tol = resolve(tol, "hermitian_tol")
    deviation = max_abs(arr - dagger(arr))
    if deviation > tol:
        raise InputError(f"{name} is not Hermitian (max|A - A†| = {deviation:.3e})")
    return (arr + dagger(arr)) / 2


def ensure_unitary(u, dim: Optional[int] = None, tol: Optional[float] = None,
                   name: str = "unitary") -> np.ndarray:
    arr = as_matrix(u, dim, name)
    tol = resolve(tol, "unitary_tol")
    deviation = max_abs(arr @ dagger(arr) - np.eye(arr.shape[0]))
    if deviation > tol:
        raise InputError(f"{name} is not unitary (max|UU† - I| = {deviation:.3e})")
    return arr


def hs_norm(a: np.ndarray) -> float:
    return float(np.linalg.norm(a))


def eigh_descending(a: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """Eigen-decomposition of a Hermitian matrix with eigenvalues in descending order"""
    values, vectors = np.linalg.eigh(a)
    order = np.argsort(values)[::-1]
    return values[order], vectors[:, order]


def inverse_sqrt_psd(s: np.ndarray, floor: Optional[float] = None) -> np.ndarray:
    """
    S^{-1/2} of a Hermitian positive-definite matrix.

    Eigenvalues below floor mean S is singular; the family behind it does not span.
    """
    floor = resolve(floor, "eigen_floor")
    values, vectors = np.linalg.eigh(s)
    if values[0] <= floor:
        raise NotAFrameError(
            f"frame operator is singular (smallest eigenvalue {values[0]:.3e} <= {floor:.1e})"
        )
    return (vectors * (1.0 / np.sqrt(values))) @ dagger(vectors)


def null_space(a: np.ndarray, rtol: float = 1e-10) -> np.ndarray:
    """Orthonormal basis (as columns) of the kernel of a"""
    _, singular, vh = np.linalg.svd(a)
    if singular.size:
        cutoff = rtol * max(singular[0], 1.0)
        rank = int(np.sum(singular > cutoff))
    else:
        rank = 0
    return dagger(vh[rank:])


def partial_trace(a: np.ndarray, dims: Sequence[int], keep: int) -> np.ndarray:
    """Partial trace of a bipartite operator; keep=0 keeps the first factor, keep=1 the second"""
    d1, d2 = dims
    arr = as_matrix(a, d1 * d2, "bipartite operator")
    reshaped = arr.reshape(d1, d2, d1, d2)
    if keep == 0:
        return np.trace(reshaped, axis1=1, axis2=3)
    if keep == 1:
        return np.trace(reshaped, axis1=0, axis2=2)
    raise InputError(f"keep must be 0 or 1, got {keep}")


def random_hermitian(rng: np.random.Generator, dim: int) -> np.ndarray:
    g = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    return (g + dagger(g)) / 2


def random_density_matrix(rng: np.random.Generator, dim: int, rank: Optional[int] = None) -> np.ndarray:
    rank = dim if rank is None else rank
    g = rng.normal(size=(dim, rank)) + 1j * rng.normal(size=(dim, rank))
    rho = g @ dagger(g)
    return rho / np.trace(rho).real


def random_unitary(rng: np.random.Generator, dim: int) -> np.ndarray:
    g = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    q, r = np.linalg.qr(g)
    phases = np.diag(r) / np.abs(np.diag(r))
    return q * phases
