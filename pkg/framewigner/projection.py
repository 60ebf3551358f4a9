"""
The qubit as an orthogonal projection of the qutrit through the mercedes frame.
"""
import logging
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .frames import naimark_embedding, standard_frame
from .linalg import ensure_hermitian, max_abs
from .models import FrameKind
from .opframes import WignerTable, build_hermitian_frame

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class ProjectionPair:
    """L (2x3) with L L^T = I_2 and L^T L = P"""
    L: np.ndarray
    P: np.ndarray

    def defect(self) -> float:
        """Largest deviation among the three defining identities"""
        L, P = self.L, self.P
        return max(
            max_abs(L @ L.T - np.eye(L.shape[0])),
            max_abs(L.T @ L - P),
            max_abs(P @ P - P),
        )


def hermitian_basis(d: int) -> np.ndarray:
    """
    The d^2 trace-orthonormal Hermitian matrices E_jk, flattened row-major in (j, k).

    Same combination rule as the Hermitian frame built on the canonical basis.
    """
    W = build_hermitian_frame(standard_frame(FrameKind.ORTHONORMAL, d)).W
    return np.array(W.reshape(d * d, d, d))


def projection_pair() -> ProjectionPair:
    embedding = naimark_embedding(standard_frame(FrameKind.MERCEDES))
    L = embedding.isometry.T.real.copy()
    P = embedding.projector.real.copy()
    for arr in (L, P):
        arr.setflags(write=False)
    return ProjectionPair(L=L, P=P)


def project_operator(a, pair: Optional[ProjectionPair] = None) -> np.ndarray:
    """A -> L P A P L^T"""
    pair = projection_pair() if pair is None else pair
    a = ensure_hermitian(a, 3, name="A")
    L, P = pair.L, pair.P
    return L @ P @ a @ P @ L.T


def wigner_of_projection(a, pair: Optional[ProjectionPair] = None) -> WignerTable:
    """W(j, k) = Tr(E_jk P A P), the mercedes-frame table of the projected operator"""
    pair = projection_pair() if pair is None else pair
    a = ensure_hermitian(a, 3, name="A")
    E = hermitian_basis(3).reshape(3, 3, 3, 3)
    PAP = pair.P @ a @ pair.P
    values = np.einsum("jkab,ba->jk", E, PAP)
    return WignerTable(values.real)


def image_dimension(pair: Optional[ProjectionPair] = None, rtol: float = 1e-10) -> int:
    """Real dimension spanned by the projected E_jk; 4 means every 2x2 Hermitian matrix is reached"""
    images = np.array([project_operator(e, pair) for e in hermitian_basis(3)])
    flat = images.reshape(len(images), -1)
    real = np.hstack([flat.real, flat.imag])
    singular = np.linalg.svd(real, compute_uv=False)
    rank = int(np.sum(singular > rtol * singular[0]))
    logger.debug(f"Projected E_jk span a space of dimension {rank}")
    return rank
