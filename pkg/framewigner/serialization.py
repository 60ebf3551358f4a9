"""
Readers and writers: frame/matrix/table JSON, Wigner and composite CSV, PGM heatmaps and
the experiment CSVs. Tables are written on array positions 0..n-1; floats use 17
significant digits so files re-read bit-exactly.
"""
import csv
import json
import logging
from pathlib import Path
from typing import Dict, Iterable, List, Sequence, Union

import numpy as np
from pydantic import ValidationError

from .composite import CompositeWignerTable
from .errors import InputError
from .frames import Frame
from .models import FrameDocument, MatrixDocument, NoiseExperimentReport, WignerDocument
from .opframes import WignerTable

logger = logging.getLogger(__name__)

PathLike = Union[str, Path]


def _fmt(value: float) -> str:
    return f"{float(value):.17g}"


def _pairs(values: np.ndarray) -> List:
    return [[[float(z.real), float(z.imag)] for z in row] for row in values]


def _complex(pairs) -> np.ndarray:
    arr = np.array(pairs, dtype=float)
    return arr[..., 0] + 1j * arr[..., 1]


def _load_json(path: PathLike) -> dict:
    try:
        with open(path, "r") as f:
            return json.load(f)
    except FileNotFoundError:
        raise InputError(f"file not found: {path}") from None
    except json.JSONDecodeError as e:
        raise InputError(f"{path} is not valid JSON: {e}") from None


def save_json(path: PathLike, data: dict):
    Path(path).parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w") as f:
        json.dump(data, f, indent=2)
        f.write("\n")


# Frames and matrices

def frame_to_document(frame: Frame) -> FrameDocument:
    return FrameDocument(d=frame.d, vectors=_pairs(frame.vectors))


def frame_from_document(doc: FrameDocument, name: str = "custom") -> Frame:
    if not doc.vectors:
        raise InputError("frame document has no vectors")
    return Frame.from_vectors(list(_complex(doc.vectors)), name=name)


def write_frame_json(frame: Frame, path: PathLike):
    save_json(path, frame_to_document(frame).model_dump())
    logger.debug(f"Wrote frame '{frame.name}' to {path}")


def read_frame_json(path: PathLike) -> Frame:
    try:
        doc = FrameDocument(**_load_json(path))
    except ValidationError as e:
        raise InputError(f"{path}: invalid frame document: {e}") from None
    return frame_from_document(doc, name=Path(path).stem)


def matrix_to_document(a: np.ndarray) -> MatrixDocument:
    a = np.asarray(a, dtype=np.complex128)
    return MatrixDocument(rows=a.shape[0], cols=a.shape[1], entries=_pairs(a))


def matrix_from_document(doc: MatrixDocument) -> np.ndarray:
    if doc.rows == 0 or doc.cols == 0:
        return np.zeros((doc.rows, doc.cols), dtype=np.complex128)
    return _complex(doc.entries)


def write_matrix_json(a: np.ndarray, path: PathLike):
    save_json(path, matrix_to_document(a).model_dump())


def read_matrix_json(path: PathLike) -> np.ndarray:
    try:
        doc = MatrixDocument(**_load_json(path))
    except ValidationError as e:
        raise InputError(f"{path}: invalid matrix document: {e}") from None
    return matrix_from_document(doc)


# Wigner tables

def write_wigner_csv(table: WignerTable, path: PathLike):
    Path(path).parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", newline="") as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(["j", "k", "value"])
        for (j, k), value in np.ndenumerate(table.values):
            writer.writerow([j, k, _fmt(value)])


def read_wigner_csv(path: PathLike) -> WignerTable:
    try:
        with open(path, "r", newline="") as f:
            rows = list(csv.DictReader(f))
    except FileNotFoundError:
        raise InputError(f"file not found: {path}") from None
    if not rows or set(rows[0]) != {"j", "k", "value"}:
        raise InputError(f"{path}: expected a 'j,k,value' table")
    n = int(round(len(rows) ** 0.5))
    if n * n != len(rows):
        raise InputError(f"{path}: {len(rows)} entries do not form a square grid")
    values = np.full((n, n), np.nan)
    for line, row in enumerate(rows, start=2):
        try:
            j, k, value = int(row["j"]), int(row["k"]), float(row["value"])
        except (TypeError, ValueError):
            raise InputError(f"{path}:{line}: unreadable entry {row}") from None
        if not (0 <= j < n and 0 <= k < n):
            raise InputError(f"{path}:{line}: index ({j}, {k}) outside the {n}x{n} grid")
        values[j, k] = value
    if np.isnan(values).any():
        raise InputError(f"{path}: grid has missing entries")
    return WignerTable(values)


def write_wigner_json(table: WignerTable, path: PathLike):
    doc = WignerDocument(count=table.count, values=table.values.tolist())
    save_json(path, doc.model_dump())


def write_wigner_pgm(table: WignerTable, path: PathLike):
    """
    Plain (P2) grayscale heatmap, row j top to bottom; values mapped affinely from
    [min, max] to [0, 255], with min and max kept in a header comment.
    """
    values = table.values
    lo, hi = float(values.min()), float(values.max())
    if hi > lo:
        gray = np.rint((values - lo) / (hi - lo) * 255).astype(int)
    else:
        gray = np.zeros(values.shape, dtype=int)
    Path(path).parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w") as f:
        f.write("P2\n")
        f.write(f"# min={_fmt(lo)} max={_fmt(hi)}\n")
        f.write(f"{values.shape[1]} {values.shape[0]}\n255\n")
        for row in gray:
            f.write(" ".join(str(v) for v in row) + "\n")


def write_composite_csv(table: CompositeWignerTable, path: PathLike):
    Path(path).parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", newline="") as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(["j", "l", "k", "m", "value"])
        for (j, l, k, m), value in np.ndenumerate(table.values):
            writer.writerow([j, l, k, m, _fmt(value)])


# Experiment outputs

def write_rows_csv(rows: Iterable[Dict], fieldnames: Sequence[str], path: PathLike):
    Path(path).parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", newline="") as f:
        writer = csv.DictWriter(f, fieldnames=list(fieldnames), lineterminator="\n")
        writer.writeheader()
        for row in rows:
            writer.writerow({key: _fmt(v) if isinstance(v, float) else v for key, v in row.items()})


def write_report_json(report: NoiseExperimentReport, path: PathLike):
    save_json(path, report.summary())
