"""
Rotation orbits of frame kernels and the perturbed-coefficient reconstruction experiment.

A unitary R permuting the frame up to sign, R v_j = s_j v_p(j), maps every W_jk onto
+-W_pq. The orbits of these maps over the index pairs are the measurement setups needed
when only W_00 and one member of each other orbit can be realized directly.
"""
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
from numpy.random import PCG64, Generator, SeedSequence

from .analysis import DensityMatrix
from .config import resolve
from .errors import InputError, RotationCoverError
from .frames import Frame
from .linalg import dagger, ensure_unitary, hs_norm, max_abs
from .models import NoiseExperimentReport
from .opframes import HermitianFrame, build_hermitian_frame, wigner
from .weylref import OddDimension, phase_point_operators

logger = logging.getLogger(__name__)

IndexPair = Tuple[int, int]


@dataclass(frozen=True, eq=False)
class RotationRelation:
    """W_target = sign * R W_source R^dagger"""
    target: IndexPair
    source: IndexPair
    rotation: np.ndarray
    sign: int
    element: int  # position of the generator in the supplied group

    def deviation(self, W: HermitianFrame) -> float:
        R = self.rotation
        image = R @ W.W[self.source] @ dagger(R)
        return max_abs(W.W[self.target] - self.sign * image)


@dataclass(frozen=True, eq=False)
class RotationCover:
    relations: List[RotationRelation]
    num_setups: int
    representatives: Tuple[IndexPair, ...]
    orbits: Dict[IndexPair, IndexPair]  # index pair -> its representative


def _signed_permutation(frame: Frame, R: np.ndarray, element: int, tol: float) -> List[Tuple[int, int]]:
    """(p(j), s_j) for each j with R v_j = s_j v_p(j), s_j in {+1, -1}"""
    images = frame.vectors @ R.T
    result = []
    for j, image in enumerate(images):
        match = None
        # unsigned matches first: antipodal frames have v_q = -v_p as well
        for s in (1, -1):
            for p, v in enumerate(frame.vectors):
                if max_abs(image - s * v) <= tol:
                    match = (p, s)
                    break
            if match:
                break
        if match is None:
            raise RotationCoverError(
                f"group element {element} maps v_{j} outside the frame up to sign", element_index=element
            )
        result.append(match)
    if len({p for p, _ in result}) != len(result):
        raise RotationCoverError(f"group element {element} does not permute the frame", element_index=element)
    return result


def _image_pair(j: int, k: int, perm: List[Tuple[int, int]]) -> Tuple[IndexPair, int]:
    (p, sp), (q, sq) = perm[j], perm[k]
    sign = sp * sq
    if j == k:
        return (p, p), 1
    if j < k:
        return (min(p, q), max(p, q)), sign
    # antisymmetric combination flips sign when the order of the pair reverses
    if p > q:
        return (p, q), sign
    return (q, p), -sign


class _UnionFind:
    def __init__(self, items: Sequence[IndexPair]):
        self.parent = {item: item for item in items}

    def find(self, item: IndexPair) -> IndexPair:
        root = item
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[item] != root:
            self.parent[item], item = root, self.parent[item]
        return root

    def union(self, a: IndexPair, b: IndexPair):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            # smallest pair represents the class
            self.parent[max(ra, rb)] = min(ra, rb)


def rotation_cover(frame: Frame, group: Sequence, W: Optional[HermitianFrame] = None,
                   tol: Optional[float] = None, relation_tol: float = 1e-12) -> RotationCover:
    """
    Relations W_target = +-R W_source R^dagger from the supplied group elements and their
    inverses, and the orbit representatives of the index pairs.
    """
    tol = resolve(tol, "permutation_tol")
    W = build_hermitian_frame(frame) if W is None else W
    n = frame.count
    pairs = [(j, k) for j in range(n) for k in range(n)]
    forest = _UnionFind(pairs)
    relations: List[RotationRelation] = []

    for element, g in enumerate(group):
        try:
            g = ensure_unitary(g, frame.d, name=f"group element {element}")
        except InputError as e:
            raise RotationCoverError(str(e), element_index=element) from None
        for R in (g, dagger(g)):
            if max_abs(R - np.eye(frame.d)) <= tol:
                continue
            perm = _signed_permutation(frame, R, element, tol)
            for source in pairs:
                target, sign = _image_pair(*source, perm)
                forest.union(source, target)
                if target == source and sign == 1:
                    continue
                relation = RotationRelation(target=target, source=source, rotation=R, sign=sign,
                                            element=element)
                deviation = relation.deviation(W)
                if deviation > relation_tol:
                    raise RotationCoverError(
                        f"relation W{target} = {sign:+d} R W{source} R^dagger fails by {deviation:.3e}",
                        element_index=element,
                    )
                relations.append(relation)

    orbits = {pair: forest.find(pair) for pair in pairs}
    representatives = tuple(sorted(set(orbits.values())))
    logger.info(f"Rotation cover of '{frame.name}': {len(relations)} relations, "
                f"{len(representatives)} setups")
    return RotationCover(relations=relations, num_setups=len(representatives),
                         representatives=representatives, orbits=orbits)


def kernel_identities(W: HermitianFrame, tol: float = 1e-12) -> List[Tuple[IndexPair, IndexPair, int]]:
    """Pairs a < b (row-major) with W_a = sign * W_b"""
    n = W.count
    pairs = [(j, k) for j in range(n) for k in range(n)]
    found = []
    for i, a in enumerate(pairs):
        for b in pairs[i + 1:]:
            for sign in (1, -1):
                if max_abs(W.W[a] - sign * W.W[b]) <= tol:
                    found.append((a, b, sign))
                    break
    return found


def trial_generator(seed: int, trial: int) -> Generator:
    """Counter-based stream: trial t always draws from SeedSequence(seed, spawn_key=(t,))"""
    return Generator(PCG64(SeedSequence(seed, spawn_key=(trial,))))


def noise_experiment(rho, W: HermitianFrame, epsilon: float, trials: int, seed: int,
                     frame_noise: bool = True, basis_noise: bool = True,
                     workers: Optional[int] = None) -> NoiseExperimentReport:
    """
    Reconstruct rho from coefficients perturbed by independent U(-eps, eps) noise, once through
    the frame W and once through the displaced-parity basis of the same odd dimension.

    Errors are Hilbert-Schmidt norms. Each trial draws the n^2 frame offsets, then the d^2
    basis offsets, whether or not the noise is applied.
    """
    if not epsilon > 0:
        raise InputError(f"epsilon must be positive, got {epsilon}")
    if trials < 1:
        raise InputError(f"trials must be at least 1, got {trials}")
    dim = OddDimension(W.d)
    rho = rho if isinstance(rho, DensityMatrix) else DensityMatrix(rho)
    if rho.dim != W.d:
        raise InputError(f"state has dimension {rho.dim}, frame has {W.d}")

    n, d = W.count, dim.d
    frame_table = wigner(rho.matrix, W).values
    parity = phase_point_operators(dim).Pi
    basis_table = np.einsum("ab,jkba->jk", rho.matrix, parity).real / d

    def run(trial: int) -> Tuple[float, float]:
        rng = trial_generator(seed, trial)
        lam = rng.uniform(-epsilon, epsilon, size=(n, n))
        mu = rng.uniform(-epsilon, epsilon, size=(d, d))
        if not frame_noise:
            lam = np.zeros_like(lam)
        if not basis_noise:
            mu = np.zeros_like(mu)
        frame_rec = np.einsum("jk,jkab->ab", frame_table + lam, W.W)
        basis_rec = np.einsum("jk,jkab->ab", basis_table + mu, parity)
        return hs_norm(rho.matrix - frame_rec), hs_norm(rho.matrix - basis_rec)

    logger.info(f"Noise experiment: {trials} trials, eps={epsilon}, frame '{W.frame.name}' vs d={d} parity basis")
    if workers and workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(run, range(trials)))
    else:
        results = [run(t) for t in range(trials)]

    frame_errors = np.array([f for f, _ in results])
    basis_errors = np.array([b for _, b in results])
    return NoiseExperimentReport(
        epsilon=epsilon,
        trials=trials,
        seed=seed,
        frame_errors=frame_errors.tolist(),
        basis_errors=basis_errors.tolist(),
        mean_frame=float(frame_errors.mean()),
        mean_basis=float(basis_errors.mean()),
        stderr_frame=_stderr(frame_errors),
        stderr_basis=_stderr(basis_errors),
    )


def _stderr(values: np.ndarray) -> float:
    if values.size < 2:
        return 0.0
    return float(values.std(ddof=1) / np.sqrt(values.size))
