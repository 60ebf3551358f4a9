"""
Operator frames lifted from a tight frame of H, and the frame Wigner / characteristic tables.

Index convention for W_jk (also the wire order of every table):
    j == k : W_jj = V_jj
    j <  k : W_jk = (V_jk + V_kj) / sqrt(2)
    j >  k : W_jk = i (V_kj - V_jk) / sqrt(2)
"""
import logging
import math
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from .errors import InputError
from .frames import Frame
from .linalg import as_matrix, dagger, ensure_hermitian, ensure_unitary, max_abs, null_space

logger = logging.getLogger(__name__)

SQRT2 = math.sqrt(2)


@dataclass(frozen=True, eq=False)
class OperatorFrame:
    """V_jk = |v_j><v_k|, stored as an (n, n, d, d) array"""
    frame: Frame
    V: np.ndarray

    @property
    def d(self) -> int:
        return self.frame.d

    @property
    def count(self) -> int:
        return self.frame.count


@dataclass(frozen=True, eq=False)
class HermitianFrame:
    """The self-adjoint W_jk, stored as an (n, n, d, d) array"""
    frame: Frame
    W: np.ndarray

    @property
    def d(self) -> int:
        return self.frame.d

    @property
    def count(self) -> int:
        return self.frame.count

    def operator(self, j: int, k: int) -> np.ndarray:
        return self.W[j, k]


@dataclass(frozen=True, eq=False)
class WignerTable:
    """Real (n, n) grid of Wigner values; labels name the grid points (positions 0..n-1 by default)"""
    values: np.ndarray
    labels: Tuple[int, ...] = ()

    def __post_init__(self):
        values = np.array(self.values, dtype=float)
        if values.ndim != 2 or values.shape[0] != values.shape[1]:
            raise InputError(f"Wigner table must be square, got shape {values.shape}")
        values.setflags(write=False)
        object.__setattr__(self, "values", values)
        if not self.labels:
            object.__setattr__(self, "labels", tuple(range(values.shape[0])))

    @property
    def count(self) -> int:
        return self.values.shape[0]

    def diagonal_sum(self) -> float:
        return float(np.trace(self.values))

    def purity(self) -> float:
        """sum of squares, which is Tr(rho^2) for a tight-frame table of rho"""
        return float(np.sum(self.values ** 2))


@dataclass(frozen=True, eq=False)
class CharTable:
    """Complex (n, n) grid of characteristic-function values"""
    values: np.ndarray
    labels: Tuple[int, ...] = ()

    def __post_init__(self):
        values = np.array(self.values, dtype=np.complex128)
        values.setflags(write=False)
        object.__setattr__(self, "values", values)
        if not self.labels:
            object.__setattr__(self, "labels", tuple(range(values.shape[0])))

    @property
    def count(self) -> int:
        return self.values.shape[0]


def _hermitian_combinations(V: np.ndarray) -> np.ndarray:
    n = V.shape[0]
    W = np.empty_like(V)
    for j in range(n):
        W[j, j] = V[j, j]
        for k in range(j + 1, n):
            W[j, k] = (V[j, k] + V[k, j]) / SQRT2
            W[k, j] = 1j * (V[j, k] - V[k, j]) / SQRT2
    return W


def build_operator_frame(frame: Frame) -> OperatorFrame:
    frame.require_tight("build_operator_frame")
    v = frame.vectors
    V = np.einsum("ja,kb->jkab", v, v.conj())
    V.setflags(write=False)
    return OperatorFrame(frame=frame, V=V)


def build_hermitian_frame(frame: Frame) -> HermitianFrame:
    frame.require_tight("build_hermitian_frame")
    V = build_operator_frame(frame).V
    W = _hermitian_combinations(V)
    W.setflags(write=False)
    logger.debug(f"Built Hermitian frame from '{frame.name}': {frame.count ** 2} operators")
    return HermitianFrame(frame=frame, W=W)


def _matrix_elements(frame: Frame, a: np.ndarray) -> np.ndarray:
    """M[j, k] = <v_j|A|v_k>"""
    v = frame.vectors
    return v.conj() @ a @ v.T


def wigner(a, W: HermitianFrame) -> WignerTable:
    """W_A(j, k) = Tr(A W_jk), evaluated through the explicit matrix-element form"""
    a = ensure_hermitian(a, W.d, name="A")
    # N[j, k] = <v_k|A|v_j>
    N = _matrix_elements(W.frame, a).T
    values = (np.diag(np.diag(N).real)
              + SQRT2 * np.triu(N.real, 1)
              + SQRT2 * np.tril(N.imag, -1))
    return WignerTable(values)


def char_function(a, V: OperatorFrame) -> CharTable:
    """chi_A(j, k) = Tr(A V_jk^dagger) = <v_j|A|v_k>"""
    a = as_matrix(a, V.d, "A")
    return CharTable(_matrix_elements(V.frame, a))


def reconstruct(table: WignerTable, W: HermitianFrame) -> np.ndarray:
    """sum_jk W_A(j, k) W_jk"""
    if table.count != W.count:
        raise InputError(f"table has {table.count} points per axis, frame has {W.count}")
    a = np.einsum("jk,jkab->ab", table.values, W.W)
    return (a + dagger(a)) / 2


def reconstruct_operator(table: CharTable, V: OperatorFrame) -> np.ndarray:
    """sum_jk chi_A(j, k) V_jk"""
    if table.count != V.count:
        raise InputError(f"table has {table.count} points per axis, frame has {V.count}")
    return np.einsum("jk,jkab->ab", table.values, V.V)


def trace_pairing(tA: WignerTable, tB: WignerTable) -> float:
    """sum_jk W_A W_B, equal to Tr(AB)"""
    if tA.count != tB.count:
        raise InputError(f"tables differ in size: {tA.count} vs {tB.count}")
    return float(np.sum(tA.values * tB.values))


def char_trace_pairing(tA: CharTable, tB: CharTable) -> complex:
    """sum_jk conj(chi_A) chi_B, equal to Tr(A^dagger B)"""
    if tA.count != tB.count:
        raise InputError(f"tables differ in size: {tA.count} vs {tB.count}")
    return complex(np.vdot(tA.values, tB.values))


def conjugate_frame(W: HermitianFrame, U, tol: Optional[float] = None) -> HermitianFrame:
    """W'_jk = U W_jk U^dagger, the kernel of the rotated frame U v_j"""
    U = ensure_unitary(U, W.d, tol)
    rotated = Frame(W.frame.vectors @ U.T, tight_tol=W.frame.tight_tol,
                    name=f"rotated({W.frame.name})", order=W.frame.order)
    Wp = np.einsum("ab,jkbc,dc->jkad", U, W.W, U.conj())
    Wp.setflags(write=False)
    return HermitianFrame(frame=rotated, W=Wp)


def _matrix_units(d: int) -> np.ndarray:
    return np.eye(d * d, dtype=np.complex128).reshape(d, d, d, d)


def operator_resolution_defect(V: OperatorFrame) -> float:
    """max deviation of sum_jk |V_jk>><<V_jk| from the identity, by action on the E_nm basis"""
    E = _matrix_units(V.d)
    coeffs = np.einsum("jkab,nmab->nmjk", V.V.conj(), E)
    images = np.einsum("nmjk,jkab->nmab", coeffs, V.V)
    return max_abs(images - E)


def hermitian_resolution_defect(W: HermitianFrame) -> float:
    """max deviation of sum_jk |W_jk>><<W_jk| from the identity on the Hermitian operators"""
    from .projection import hermitian_basis

    E = np.array(hermitian_basis(W.d))
    coeffs = np.einsum("jkba,nab->njk", W.W, E).real
    images = np.einsum("njk,jkab->nab", coeffs, W.W)
    return max_abs(images - E)


def kernel_sum(W: HermitianFrame) -> np.ndarray:
    """sum_jk W_jk; not the identity in general"""
    return W.W.sum(axis=(0, 1))


def synthesis_kernel(W: HermitianFrame) -> np.ndarray:
    """
    Real coefficient tables alpha (flattened row-major, as columns) with sum alpha_jk W_jk = 0.
    """
    n = W.count
    flat = W.W.reshape(n * n, -1).T
    real_map = np.vstack([flat.real, flat.imag])
    return null_space(real_map).real
