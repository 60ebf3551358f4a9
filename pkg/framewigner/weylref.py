"""
Weyl machinery for odd d = 2s + 1 on the index set {-s..s}: displacements, displaced parities,
the discrete Gaussian and Fourier transform, coherent states, plus the Wootters-Feynman qubit
kernel. Used as an independent reference next to the frame representation.
"""
import logging
import math
from dataclasses import dataclass, field
from typing import Optional, Tuple, Union

import numpy as np

from .config import resolve
from .errors import InputError, UnsupportedDimensionError
from .frames import Frame
from .linalg import as_matrix, dagger, ensure_hermitian, max_abs
from .opframes import CharTable, WignerTable

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class OddDimension:
    d: int
    s: int = field(init=False)

    def __post_init__(self):
        if isinstance(self.d, bool) or not isinstance(self.d, (int, np.integer)):
            raise InputError(f"dimension must be an integer, got {self.d!r}")
        if self.d < 3 or self.d % 2 == 0:
            raise UnsupportedDimensionError(f"Weyl machinery needs odd d >= 3, got d={self.d}")
        object.__setattr__(self, "s", (self.d - 1) // 2)

    @property
    def indices(self) -> np.ndarray:
        return np.arange(-self.s, self.s + 1)

    def position(self, n: int) -> int:
        """Array position of index n, after reduction into {-s..s}"""
        return (n + self.s) % self.d


DimensionLike = Union[int, OddDimension]


def _dim(dim: DimensionLike) -> OddDimension:
    return dim if isinstance(dim, OddDimension) else OddDimension(int(dim))


def displacement(dim: DimensionLike, j: int, k: int) -> np.ndarray:
    """
    D(j,k) psi(n) = e^{-pi i kj/d} e^{2 pi i kn/d} psi(n - j).

    The phases are evaluated on j, k as given; only the shift n - j wraps around.
    """
    dim = _dim(dim)
    d, n = dim.d, dim.indices
    rows = np.arange(d)
    cols = np.mod(rows - j, d)
    D = np.zeros((d, d), dtype=np.complex128)
    D[rows, cols] = np.exp(-1j * math.pi * k * j / d) * np.exp(2j * math.pi * k * n / d)
    return D


def parity_operator(dim: DimensionLike) -> np.ndarray:
    """Pi psi(n) = psi(-n)"""
    dim = _dim(dim)
    return np.fliplr(np.eye(dim.d, dtype=np.complex128))


def displaced_parity(dim: DimensionLike, j: int, k: int) -> np.ndarray:
    dim = _dim(dim)
    D = displacement(dim, j, k)
    return D @ parity_operator(dim) @ dagger(D)


@dataclass(frozen=True, eq=False)
class PhaseSpaceBasis:
    """
    Orthogonal Hermitian operator basis K_jk with <<K_jk, K_nm>> = delta / scale.

    W_A(j, k) = scale * Tr(A K_jk) and A = sum W_A(j, k) K_jk.
    """
    operators: np.ndarray
    scale: float
    labels: Tuple[int, ...]

    @property
    def dim(self) -> int:
        return self.operators.shape[-1]

    def operator(self, j: int, k: int) -> np.ndarray:
        return self.operators[self.labels.index(j), self.labels.index(k)]

    def wigner(self, a) -> WignerTable:
        a = ensure_hermitian(a, self.dim, name="A")
        values = self.scale * np.einsum("ab,jkba->jk", a, self.operators)
        return WignerTable(values.real, labels=self.labels)

    def reconstruct(self, table: WignerTable) -> np.ndarray:
        if table.count != len(self.labels):
            raise InputError(f"table has {table.count} points per axis, basis has {len(self.labels)}")
        return np.einsum("jk,jkab->ab", table.values, self.operators)

    def trace_pairing(self, tA: WignerTable, tB: WignerTable) -> float:
        """Tr(AB) = (1/scale) sum W_A W_B"""
        return float(np.sum(tA.values * tB.values)) / self.scale

    def gram(self) -> np.ndarray:
        flat = self.operators.reshape(-1, self.dim, self.dim)
        return np.einsum("pab,qab->pq", flat.conj(), flat)


@dataclass(frozen=True, eq=False)
class PhasePointOperators:
    """D and Pi over the full grid, indexed by array position (j + s, k + s)"""
    dim: OddDimension
    D: np.ndarray
    Pi: np.ndarray

    def displacement(self, j: int, k: int) -> np.ndarray:
        return self.D[self.dim.position(j), self.dim.position(k)]

    def parity(self, j: int, k: int) -> np.ndarray:
        return self.Pi[self.dim.position(j), self.dim.position(k)]

    def basis(self) -> PhaseSpaceBasis:
        return PhaseSpaceBasis(self.Pi, 1.0 / self.dim.d, tuple(int(n) for n in self.dim.indices))


def phase_point_operators(dim: DimensionLike) -> PhasePointOperators:
    dim = _dim(dim)
    idx = dim.indices
    D = np.stack([np.stack([displacement(dim, j, k) for k in idx]) for j in idx])
    P = parity_operator(dim)
    Pi = np.einsum("jkab,bc,jkdc->jkad", D, P, D.conj())
    logger.debug(f"Built phase-point operators for d={dim.d}")
    return PhasePointOperators(dim=dim, D=D, Pi=Pi)


def weyl_char(a, dim: DimensionLike) -> CharTable:
    """chi_A(j, k) = (1/d) Tr(A D(j,k)^dagger), any square A"""
    ops = phase_point_operators(dim)
    a = as_matrix(a, ops.dim.d, "A")
    values = np.einsum("ab,jkab->jk", a, ops.D.conj()) / ops.dim.d
    return CharTable(values, labels=tuple(int(n) for n in ops.dim.indices))


def weyl_wigner(a, dim: DimensionLike) -> Tuple[CharTable, WignerTable]:
    """The Weyl characteristic function and the Wigner function (1/d) Tr(A Pi(j,k))"""
    ops = phase_point_operators(dim)
    a = ensure_hermitian(a, ops.dim.d, name="A")
    return weyl_char(a, ops.dim), ops.basis().wigner(a)


def weyl_reconstruct(table: Union[CharTable, WignerTable], dim: DimensionLike) -> np.ndarray:
    """A = sum chi D = sum W Pi"""
    ops = phase_point_operators(dim)
    if isinstance(table, CharTable):
        if table.count != ops.dim.d:
            raise InputError(f"table has {table.count} points per axis, expected {ops.dim.d}")
        return np.einsum("jk,jkab->ab", table.values, ops.D)
    return ops.basis().reconstruct(table)


def weyl_trace_pairing(tA: WignerTable, tB: WignerTable, dim: DimensionLike) -> float:
    """Tr(AB) = d sum W_A W_B"""
    return _dim(dim).d * float(np.sum(tA.values * tB.values))


def discrete_gaussian(dim: DimensionLike, kappa: float, cutoff: Optional[float] = None) -> np.ndarray:
    """g_kappa(n) = sum_m e^{-(kappa pi/d)(n + md)^2}, the wrap sum truncated below cutoff"""
    dim = _dim(dim)
    if not kappa > 0:
        raise InputError(f"kappa must be positive, got {kappa}")
    cutoff = resolve(cutoff, "gaussian_cutoff")
    d, n = dim.d, dim.indices.astype(float)
    g = np.exp(-kappa * math.pi / d * n ** 2)
    m = 1
    while True:
        terms = (np.exp(-kappa * math.pi / d * (n + m * d) ** 2)
                 + np.exp(-kappa * math.pi / d * (n - m * d) ** 2))
        if np.max(terms) < cutoff:
            break
        g = g + terms
        m += 1
    return g.astype(np.complex128)


def fourier_matrix(dim: DimensionLike) -> np.ndarray:
    """F[k, n] = e^{-2 pi i kn/d} / sqrt(d), normalized to be unitary"""
    dim = _dim(dim)
    n = dim.indices
    return np.exp(-2j * math.pi * np.outer(n, n) / dim.d) / math.sqrt(dim.d)


def vacuum_state(dim: DimensionLike) -> np.ndarray:
    """|0,0>: the normalized g_1, fixed by the Fourier transform"""
    g = discrete_gaussian(dim, 1.0)
    return g / np.linalg.norm(g)


def coherent_states(dim: DimensionLike) -> Frame:
    """
    The d^2 unit vectors |j,k> = D(j,k)|0,0>, ordered lexicographically in (j, k).

    (1/d) sum |j,k><j,k| = I, so the family has frame bounds (d, d).
    """
    dim = _dim(dim)
    vac = vacuum_state(dim)
    idx = [int(n) for n in dim.indices]
    states = [displacement(dim, j, k) @ vac for j in idx for k in idx]
    return Frame(np.stack(states), tight_tol=resolve(None, "tight_tol"), name=f"coherent:{dim.d}")


_PAULI = {
    "x": np.array([[0, 1], [1, 0]], dtype=np.complex128),
    "y": np.array([[0, -1j], [1j, 0]], dtype=np.complex128),
    "z": np.array([[1, 0], [0, -1]], dtype=np.complex128),
}


def wootters_feynman_kernel() -> PhaseSpaceBasis:
    """K_jk = (I + (-1)^k sx + (-1)^(j+k) sy + (-1)^j sz) / 2 on the 2x2 grid, with scale 1/2"""
    K = np.empty((2, 2, 2, 2), dtype=np.complex128)
    for j in range(2):
        for k in range(2):
            K[j, k] = 0.5 * (np.eye(2)
                             + (-1) ** k * _PAULI["x"]
                             + (-1) ** (j + k) * _PAULI["y"]
                             + (-1) ** j * _PAULI["z"])
    return PhaseSpaceBasis(K, 0.5, (0, 1))


def orthogonality_defect(basis: PhaseSpaceBasis) -> float:
    """max |<<K_p, K_q>> - delta_pq / scale|"""
    gram = basis.gram()
    return max_abs(gram - np.eye(gram.shape[0]) / basis.scale)
