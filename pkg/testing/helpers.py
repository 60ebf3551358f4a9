"""
Frame and state generators shared by the tests
"""
from typing import List

import numpy as np

from framewigner.frames import Frame, canonical_tight_frame, standard_frame


def random_tight_frame(rng: np.random.Generator, d: int, count: int) -> Frame:
    """Canonical tight version of a Gaussian random spanning family"""
    g = rng.normal(size=(count, d)) + 1j * rng.normal(size=(count, d))
    return canonical_tight_frame(Frame(g, name=f"random:{d}x{count}"))


def builtin_tight_frames() -> List[Frame]:
    return [
        standard_frame("polygon", 3),
        standard_frame("polygon", 4),
        standard_frame("polygon", 5),
        standard_frame("polygon", 7),
        standard_frame("mercedes"),
        standard_frame("tetrahedron"),
        standard_frame("icosahedron"),
        standard_frame("orthonormal", 2),
        standard_frame("orthonormal", 3),
    ]


def seeded_random_tight_frames(count: int = 20, seed: int = 7) -> List[Frame]:
    rng = np.random.default_rng(seed)
    frames = []
    for i in range(count):
        d = (2, 3, 4)[i % 3]
        frames.append(random_tight_frame(rng, d, d + 1 + i % 3))
    return frames


def all_test_frames() -> List[Frame]:
    return builtin_tight_frames() + seeded_random_tight_frames()


def frame_id(frame: Frame) -> str:
    return frame.name
