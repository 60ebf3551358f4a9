"""
State functionals on Wigner tables: negativity, frame coherence, their behaviour as the
polygon frame is refined, and Gaussian qubit states synthesized from a discrete 2-D Gaussian.
"""
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Sequence, Tuple, Union

import numpy as np

from .composite import bell_state
from .config import config_manager, resolve
from .errors import GaussianConstructionError, InputError, NumericalError
from .frames import standard_frame
from .linalg import as_vector, eigh_descending, ensure_hermitian
from .models import ConvergenceRecord, FrameKind, StatePreset
from .opframes import HermitianFrame, WignerTable, build_hermitian_frame, wigner

logger = logging.getLogger(__name__)

# spreads above this are logged as not yet converged
SPREAD_WARNING = 1e-2


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    """Hermitian, unit trace, positive semidefinite"""
    matrix: np.ndarray

    def __post_init__(self):
        rho = ensure_hermitian(self.matrix, name="density matrix")
        trace = float(np.trace(rho).real)
        if abs(trace - 1) > resolve(None, "trace_tol"):
            raise InputError(f"density matrix has trace {trace:.12g}, expected 1")
        lowest = float(np.linalg.eigvalsh(rho)[0])
        if lowest < -resolve(None, "psd_tol"):
            raise InputError(f"density matrix has negative eigenvalue {lowest:.3e}")
        rho.setflags(write=False)
        object.__setattr__(self, "matrix", rho)

    @classmethod
    def from_ket(cls, psi) -> "DensityMatrix":
        psi = as_vector(psi, name="ket")
        norm = np.linalg.norm(psi)
        if norm == 0:
            raise InputError("ket is the zero vector")
        psi = psi / norm
        return cls(np.outer(psi, psi.conj()))

    @classmethod
    def from_matrix(cls, a) -> "DensityMatrix":
        return cls(a)

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    def purity(self) -> float:
        return float(np.trace(self.matrix @ self.matrix).real)


def preset_state(name: Union[StatePreset, str]) -> DensityMatrix:
    """pure1 = (1, -i)/sqrt(2), mixed1 = (1/3)[[1, i], [-i, 2]], bell = (|01> + |10>)/sqrt(2)"""
    try:
        preset = StatePreset(name)
    except ValueError:
        raise InputError(f"unknown state preset '{name}'") from None
    if preset == StatePreset.PURE1:
        return DensityMatrix.from_ket([1, -1j])
    if preset == StatePreset.MIXED1:
        return DensityMatrix(np.array([[1, 1j], [-1j, 2]]) / 3)
    return DensityMatrix(bell_state())


def negativity(table: WignerTable) -> float:
    """N_m = sum(|W| - W) / (2 m^2 max|W|)"""
    values = table.values
    peak = float(np.max(np.abs(values)))
    if peak == 0:
        raise NumericalError("negativity is undefined for an all-zero table")
    m = table.count
    return float(np.sum(np.abs(values) - values)) / (2 * m * m * peak)


def coherence(table: WignerTable) -> float:
    """C_m = (1/m) sum_{j != k} |W(j, k)|"""
    values = np.abs(table.values)
    return float(np.sum(values) - np.trace(values)) / table.count


def _polygon_tables(rho: DensityMatrix, m: int) -> Tuple[int, float, float]:
    table = wigner(rho.matrix, build_hermitian_frame(standard_frame(FrameKind.POLYGON, m)))
    return m, negativity(table), coherence(table)


def _tail_spread(values: Sequence[float]) -> float:
    tail = values[-3:]
    return float(max(tail) - min(tail))


def convergence_scan(rho: DensityMatrix, m_list: Optional[Sequence[int]] = None,
                     workers: Optional[int] = None) -> ConvergenceRecord:
    """
    N_m and C_m of a qubit state over polygon frames.

    The limits are the values at the largest m; spreads are max - min over the last
    three entries. Distinct m may be evaluated on a thread pool.
    """
    if rho.dim != 2:
        raise InputError(f"convergence scan needs a qubit state, got dimension {rho.dim}")
    m_list = list(m_list) if m_list is not None else config_manager.get_numerics().table1_m_values
    if not m_list:
        raise InputError("m_list is empty")
    if any(m < 3 for m in m_list):
        raise InputError(f"every m must be >= 3, got {m_list}")
    if any(b <= a for a, b in zip(m_list, m_list[1:])):
        raise InputError(f"m_list must be strictly ascending, got {m_list}")

    logger.info(f"Convergence scan over {len(m_list)} polygon frames (m up to {m_list[-1]})")
    if workers and workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(lambda m: _polygon_tables(rho, m), m_list))
    else:
        rows = [_polygon_tables(rho, m) for m in m_list]

    N_values = [n for _, n, _ in rows]
    C_values = [c for _, _, c in rows]
    N_spread, C_spread = _tail_spread(N_values), _tail_spread(C_values)
    record = ConvergenceRecord(
        m_values=m_list,
        N_values=N_values,
        C_values=C_values,
        N_limit=N_values[-1],
        C_limit=C_values[-1],
        N_spread=N_spread,
        C_spread=C_spread,
        limit_spread=max(N_spread, C_spread),
    )
    if record.limit_spread > SPREAD_WARNING:
        logger.warning(f"Scan not settled: spread {record.limit_spread:.3e} over the last m values")
    return record


def _centered_odd(m: int) -> int:
    if m < 3 or m % 2 == 0:
        raise InputError(f"m must be odd and >= 3, got {m}")
    return (m - 1) // 2


def gaussian_2d(m: int, kappa: float) -> np.ndarray:
    """f(j, k) = e^{-kappa (j^2 + k^2)} for j, k in {-l..l}, array position (j + l, k + l)"""
    ell = _centered_odd(m)
    if not kappa > 0:
        raise InputError(f"kappa must be positive, got {kappa}")
    idx = np.arange(-ell, ell + 1)
    return np.exp(-kappa * (idx[:, None] ** 2 + idx[None, :] ** 2))


@dataclass(frozen=True, eq=False)
class GaussianState:
    """Normalized Gaussian candidate; unpacks as (operator, spectrum)"""
    operator: np.ndarray
    spectrum: np.ndarray
    positive: bool
    raw_trace: float

    def __iter__(self) -> Iterator:
        return iter((self.operator, self.spectrum))


def gaussian_state(m: int, kappa: float, W: Optional[HermitianFrame] = None) -> GaussianState:
    """
    rho ~ sum_{j,k=-l..l} e^{-kappa (j^2 + k^2)} W_{j mod m, k mod m} over the polygon frame.

    Positivity is reported on the record, never enforced.
    """
    f = gaussian_2d(m, kappa)
    if W is None:
        W = build_hermitian_frame(standard_frame(FrameKind.POLYGON, m))
    elif W.count != m:
        raise InputError(f"frame has {W.count} vectors, expected m={m}")
    ell = (m - 1) // 2
    wrapped = np.mod(np.arange(-ell, ell + 1), m)
    coeffs = np.zeros((m, m))
    coeffs[np.ix_(wrapped, wrapped)] = f

    a = np.einsum("jk,jkab->ab", coeffs, W.W)
    trace = float(np.trace(a).real)
    if trace <= 0:
        raise GaussianConstructionError(f"Gaussian sum has trace {trace:.3e} for m={m}, kappa={kappa}")
    rho = a / trace
    values = spectrum(rho)
    positive = bool(values[-1] >= -resolve(None, "psd_tol"))
    if not positive:
        logger.warning(f"Gaussian candidate m={m}, kappa={kappa} is not positive: {values[-1]:.3e}")
    return GaussianState(operator=rho, spectrum=values, positive=positive, raw_trace=trace)


def spectrum(a) -> np.ndarray:
    """Real eigenvalues of a Hermitian matrix, descending"""
    values, _ = eigh_descending(ensure_hermitian(a, name="A"))
    return values


def table1_rows(m_values: Optional[Sequence[int]] = None,
                workers: Optional[int] = None) -> List[Dict[str, float]]:
    """Rows (state_id, m, N_m, C_m) for the two qubit presets"""
    rows = []
    for preset in (StatePreset.PURE1, StatePreset.MIXED1):
        record = convergence_scan(preset_state(preset), m_values, workers=workers)
        for m, n, c in zip(record.m_values, record.N_values, record.C_values):
            rows.append({"state_id": preset.value, "m": m, "N_m": n, "C_m": c})
    return rows


def table2_rows(kappas: Optional[Sequence[float]] = None,
                m_values: Optional[Sequence[int]] = None) -> List[Dict[str, float]]:
    """Rows (kappa, m, lambda1, lambda2) of the Gaussian-state spectra"""
    numerics = config_manager.get_numerics()
    kappas = numerics.table2_kappas if kappas is None else kappas
    m_values = numerics.table2_m_values if m_values is None else m_values
    rows = []
    for kappa in kappas:
        for m in m_values:
            state = gaussian_state(m, kappa)
            rows.append({"kappa": kappa, "m": m,
                         "lambda1": float(state.spectrum[0]), "lambda2": float(state.spectrum[1])})
    return rows
