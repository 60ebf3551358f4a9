"""
Bipartite systems: tensor-product Hermitian frames and 4-index Wigner tables W_A(j, l, k, m)
with (j, k) on the first factor and (l, m) on the second.
"""
import logging
import math
from dataclasses import dataclass
from typing import Optional, Tuple, Union

import numpy as np

from .errors import InputError
from .linalg import as_matrix, dagger, ensure_hermitian
from .models import TraceOut
from .opframes import HermitianFrame, WignerTable

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class CompositeWignerTable:
    """Real grid indexed (j, l, k, m)"""
    values: np.ndarray

    def __post_init__(self):
        values = np.array(self.values, dtype=float)
        if values.ndim != 4 or values.shape[:2] != values.shape[2:]:
            raise InputError(f"composite table must have shape (n1, n2, n1, n2), got {values.shape}")
        values.setflags(write=False)
        object.__setattr__(self, "values", values)

    @property
    def counts(self) -> Tuple[int, int]:
        return self.values.shape[0], self.values.shape[1]

    def double_diagonal_sum(self) -> float:
        """sum_{j,l} W(j, l, j, l), equal to Tr A"""
        return float(np.einsum("jljl->", self.values))


@dataclass(frozen=True, eq=False)
class TensorHermitianFrame:
    """The family W1_jk (x) W2_lm; operators are formed on demand"""
    first: HermitianFrame
    second: HermitianFrame

    @property
    def dims(self) -> Tuple[int, int]:
        return self.first.d, self.second.d

    @property
    def counts(self) -> Tuple[int, int]:
        return self.first.count, self.second.count

    @property
    def size(self) -> int:
        n1, n2 = self.counts
        return (n1 * n2) ** 2

    def operator(self, j: int, l: int, k: int, m: int) -> np.ndarray:
        return np.kron(self.first.W[j, k], self.second.W[l, m])

    def operators(self) -> np.ndarray:
        """All operators as an (n1, n2, n1, n2, D, D) array, D = d1 d2"""
        (d1, d2), (n1, n2) = self.dims, self.counts
        full = np.einsum("jkac,lmbe->jlkmabce", self.first.W, self.second.W)
        return full.reshape(n1, n2, n1, n2, d1 * d2, d1 * d2)


def tensor_hermitian_frame(W1: HermitianFrame, W2: HermitianFrame) -> TensorHermitianFrame:
    frame = TensorHermitianFrame(first=W1, second=W2)
    logger.debug(f"Tensor frame {W1.frame.name} (x) {W2.frame.name}: {frame.size} operators")
    return frame


def _frames(W1: Union[HermitianFrame, TensorHermitianFrame],
            W2: Optional[HermitianFrame] = None) -> Tuple[HermitianFrame, HermitianFrame]:
    if isinstance(W1, TensorHermitianFrame):
        return W1.first, W1.second
    if W2 is None:
        raise InputError("need the Hermitian frames of both factors")
    return W1, W2


def _blocks(a, W1: HermitianFrame, W2: HermitianFrame) -> np.ndarray:
    d1, d2 = W1.d, W2.d
    a = ensure_hermitian(a, d1 * d2, name="A")
    # A4[a, b, c, e] = <a b|A|c e>
    return a.reshape(d1, d2, d1, d2)


def wigner_composite(a, W1, W2: Optional[HermitianFrame] = None) -> CompositeWignerTable:
    """W_A(j, l, k, m) = Tr(A (W1_jk (x) W2_lm))"""
    W1, W2 = _frames(W1, W2)
    A4 = _blocks(a, W1, W2)
    values = np.einsum("abce,jkca,lmeb->jlkm", A4, W1.W, W2.W, optimize=True)
    return CompositeWignerTable(values.real)


def reconstruct_composite(table: CompositeWignerTable, W1, W2: Optional[HermitianFrame] = None) -> np.ndarray:
    W1, W2 = _frames(W1, W2)
    if table.counts != (W1.count, W2.count):
        raise InputError(f"table counts {table.counts} do not match frames ({W1.count}, {W2.count})")
    d1, d2 = W1.d, W2.d
    A4 = np.einsum("jlkm,jkac,lmbe->abce", table.values, W1.W, W2.W, optimize=True)
    a = A4.reshape(d1 * d2, d1 * d2)
    return (a + dagger(a)) / 2


def partial_trace_wigner(table: CompositeWignerTable, which: Union[TraceOut, str]) -> WignerTable:
    """Wigner table of the reduced operator, summing out the named factor"""
    try:
        which = TraceOut(which)
    except ValueError:
        raise InputError(f"which must be 'first' or 'second', got '{which}'") from None
    if which == TraceOut.FIRST:
        return WignerTable(np.einsum("jljm->lm", table.values))
    return WignerTable(np.einsum("jlkl->jk", table.values))


def equal_coordinate_slice(table: CompositeWignerTable) -> WignerTable:
    """slice(j, k) = W(j, j, k, k)"""
    n1, n2 = table.counts
    if n1 != n2:
        raise InputError(f"equal-coordinate slice needs equal counts, got ({n1}, {n2})")
    return WignerTable(np.einsum("jjkk->jk", table.values))


def equal_coordinate_slice_of(a, W1: HermitianFrame, W2: Optional[HermitianFrame] = None) -> WignerTable:
    """The slice of wigner_composite(A) without forming the full n^4 table"""
    W2 = W1 if W2 is None else W2
    if W1.count != W2.count:
        raise InputError(f"equal-coordinate slice needs equal counts, got ({W1.count}, {W2.count})")
    A4 = _blocks(a, W1, W2)
    values = np.einsum("abce,jkca,jkeb->jk", A4, W1.W, W2.W, optimize=True)
    return WignerTable(values.real)


def bell_state() -> np.ndarray:
    """(|01> + |10>)/sqrt(2) as a density matrix"""
    psi = np.array([0, 1, 1, 0], dtype=np.complex128) / math.sqrt(2)
    return np.outer(psi, psi.conj())


def product_state(rho1, rho2) -> np.ndarray:
    return np.kron(as_matrix(rho1, name="rho1"), as_matrix(rho2, name="rho2"))
