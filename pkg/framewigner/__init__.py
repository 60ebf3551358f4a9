"""framewigner: frame representations and discrete Wigner functions of qudits."""
from .errors import (
    FrameWignerError,
    GaussianConstructionError,
    InputError,
    NotAFrameError,
    NumericalError,
    PreconditionError,
    RotationCoverError,
    UnsupportedDimensionError,
)
from .frames import Frame, canonical_tight_frame, frame_bounds, frame_operator, standard_frame
from .opframes import (
    CharTable,
    HermitianFrame,
    OperatorFrame,
    WignerTable,
    build_hermitian_frame,
    build_operator_frame,
    char_function,
    reconstruct,
    wigner,
)

__version__ = "0.1.0"
