"""
Finite frames of complex Hilbert spaces: construction, tightening and the Naimark embedding
"""
import logging
import math
from dataclasses import dataclass, field
from typing import NamedTuple, Optional, Sequence, Tuple, Union

import numpy as np

from .config import resolve
from .errors import InputError, PreconditionError
from .linalg import as_vector, dagger, inverse_sqrt_psd, max_abs, null_space
from .models import FrameKind

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class Frame:
    """
    Ordered family of vectors v_0..v_r of C^d, stored row-wise in a (count, d) array.

    `tight` means Parseval: sum_k |v_k><v_k| = I_d within tight_tol.
    """
    vectors: np.ndarray
    tight_tol: Optional[float] = None
    name: str = "custom"
    order: Tuple[int, ...] = ()
    tight: bool = field(init=False)

    def __post_init__(self):
        vectors = np.array(self.vectors, dtype=np.complex128)
        if vectors.ndim != 2 or vectors.shape[0] == 0 or vectors.shape[1] == 0:
            raise InputError(f"frame needs a nonempty (count, d) array, got shape {vectors.shape}")
        vectors.setflags(write=False)
        object.__setattr__(self, "vectors", vectors)
        object.__setattr__(self, "tight_tol", resolve(self.tight_tol, "tight_tol"))
        if not self.order:
            object.__setattr__(self, "order", tuple(range(vectors.shape[0])))
        elif len(self.order) != vectors.shape[0]:
            raise InputError(f"order has {len(self.order)} entries for {vectors.shape[0]} vectors")
        s = vectors.T @ vectors.conj()
        object.__setattr__(self, "tight", max_abs(s - np.eye(vectors.shape[1])) <= self.tight_tol)

    @classmethod
    def from_vectors(cls, vectors: Sequence[Sequence[complex]], tight_tol: Optional[float] = None,
                     name: str = "custom") -> "Frame":
        """Build a frame from a list of vectors, rejecting mixed dimensions"""
        rows = [as_vector(v, name=f"vector {k}") for k, v in enumerate(vectors)]
        if not rows:
            raise InputError("frame needs at least one vector")
        dims = {r.shape[0] for r in rows}
        if len(dims) != 1:
            raise InputError(f"frame vectors have mixed dimensions {sorted(dims)}")
        return cls(np.stack(rows), tight_tol=tight_tol, name=name)

    @property
    def d(self) -> int:
        return self.vectors.shape[1]

    @property
    def count(self) -> int:
        return self.vectors.shape[0]

    def vector(self, k: int) -> np.ndarray:
        return self.vectors[k]

    def gram(self) -> np.ndarray:
        """G[j, k] = <v_j|v_k>"""
        return self.vectors.conj() @ self.vectors.T

    def require_tight(self, operation: str):
        if not self.tight:
            raise PreconditionError(f"{operation} needs a tight frame; '{self.name}' is not tight")


class FrameBounds(NamedTuple):
    alpha: float
    beta: float


@dataclass(frozen=True, eq=False)
class NaimarkEmbedding:
    """Isometry C^d -> C^{m+1} whose columns are w_0..w_{d-1}, and the projector P onto its range"""
    isometry: np.ndarray
    projector: np.ndarray

    @property
    def w(self) -> np.ndarray:
        return self.isometry.T

    def embed(self, x) -> np.ndarray:
        return self.isometry @ as_vector(x, self.isometry.shape[1], "x")


def frame_operator(frame: Frame) -> np.ndarray:
    """S = sum_k |v_k><v_k|"""
    return frame.vectors.T @ frame.vectors.conj()


def frame_bounds(frame: Frame) -> FrameBounds:
    values = np.linalg.eigvalsh(frame_operator(frame))
    return FrameBounds(float(values[0]), float(values[-1]))


def is_tight(frame: Frame, tol: Optional[float] = None) -> bool:
    tol = resolve(tol, "tight_tol")
    return max_abs(frame_operator(frame) - np.eye(frame.d)) <= tol


def canonical_tight_frame(frame: Frame, floor: Optional[float] = None) -> Frame:
    """u_k -> S^{-1/2} u_k"""
    root = inverse_sqrt_psd(frame_operator(frame), floor)
    tightened = frame.vectors @ root.T
    logger.debug(f"Tightened frame '{frame.name}' ({frame.count} vectors in C^{frame.d})")
    return Frame(tightened, tight_tol=frame.tight_tol, name=f"canonical({frame.name})",
                 order=frame.order)


def analyze(frame: Frame, x) -> np.ndarray:
    """Analysis coefficients c_k = <v_k|x>"""
    frame.require_tight("analyze")
    return frame.vectors.conj() @ as_vector(x, frame.d, "x")


def synthesize(frame: Frame, coeffs) -> np.ndarray:
    """sum_k c_k v_k"""
    return frame.vectors.T @ as_vector(coeffs, frame.count, "coefficients")


def synthesis_kernel(frame: Frame) -> np.ndarray:
    """Columns span the coefficient vectors c with sum_k c_k v_k = 0"""
    return null_space(frame.vectors.T)


def naimark_embedding(frame: Frame) -> NaimarkEmbedding:
    frame.require_tight("naimark_embedding")
    # w_k = (<u_0|e_k>, ..., <u_m|e_k>)^T
    isometry = frame.vectors.conj()
    projector = isometry @ dagger(isometry)
    return NaimarkEmbedding(isometry=isometry, projector=projector)


def rotation_matrix(alpha: float) -> np.ndarray:
    """Planar rotation R_alpha acting on C^2"""
    c, s = math.cos(alpha), math.sin(alpha)
    return np.array([[c, -s], [s, c]], dtype=np.complex128)


def tetrahedron_rotations() -> Tuple[np.ndarray, ...]:
    """The rotations R_0..R_4 permuting the tetrahedral frame"""
    mats = [
        [[-1, 0, 0], [0, 1, 0], [0, 0, -1]],
        [[0, 1, 0], [0, 0, 1], [1, 0, 0]],
        [[0, 1, 0], [0, 0, -1], [-1, 0, 0]],
        [[0, 0, -1], [-1, 0, 0], [0, 1, 0]],
        [[0, 0, 1], [-1, 0, 0], [0, -1, 0]],
    ]
    return tuple(np.array(m, dtype=np.complex128) for m in mats)


def _polygon(m: int) -> np.ndarray:
    angles = 2 * np.pi * np.arange(m) / m
    return math.sqrt(2 / m) * np.stack([np.cos(angles), np.sin(angles)], axis=1)


def _mercedes() -> np.ndarray:
    return np.array([
        [math.sqrt(2 / 3), 0.0],
        [-1 / math.sqrt(6), 1 / math.sqrt(2)],
        [-1 / math.sqrt(6), -1 / math.sqrt(2)],
    ])


def _tetrahedron() -> np.ndarray:
    return 0.5 * np.array([
        [-1, 1, 1],
        [1, -1, 1],
        [1, 1, -1],
        [-1, -1, -1],
    ], dtype=float)


def _icosahedron() -> np.ndarray:
    tau = (1 + math.sqrt(5)) / 2
    points = np.array([
        [1, tau, 0],
        [-1, tau, 0],
        [-tau, 0, 1],
        [0, -1, tau],
        [tau, 0, 1],
        [0, 1, tau],
    ])
    return points / math.sqrt(5 + math.sqrt(5))


def standard_frame(kind: Union[FrameKind, str], param: Optional[int] = None) -> Frame:
    """The named frames: regular polygons, mercedes, tetrahedron, icosahedron, orthonormal bases"""
    try:
        kind = FrameKind(kind)
    except ValueError:
        raise InputError(f"unknown frame kind '{kind}'") from None

    if kind == FrameKind.POLYGON:
        if param is None or param < 3:
            raise InputError(f"polygon frame needs m >= 3, got {param}")
        vectors, name = _polygon(param), f"polygon:{param}"
    elif kind == FrameKind.MERCEDES:
        vectors, name = _mercedes(), "mercedes"
    elif kind == FrameKind.TETRAHEDRON:
        vectors, name = _tetrahedron(), "tetrahedron"
    elif kind == FrameKind.ICOSAHEDRON:
        vectors, name = _icosahedron(), "icosahedron"
    else:
        if param is None or param < 1:
            raise InputError(f"orthonormal frame needs a dimension >= 1, got {param}")
        vectors, name = np.eye(param), f"orthonormal:{param}"

    frame = Frame(vectors, tight_tol=resolve(None, "tight_tol"), name=name)
    logger.debug(f"Built {name} frame: {frame.count} vectors in C^{frame.d}")
    return frame
