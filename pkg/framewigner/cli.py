"""
Command-line entry point: reproduce the tables, export Wigner grids, run the noise
experiment and write frames and kernels.
"""
import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional

import numpy as np
from pydantic import ValidationError

from .analysis import preset_state, table1_rows, table2_rows
from .composite import equal_coordinate_slice_of
from .config import config_manager
from .errors import FrameWignerError, InputError, NumericalError
from .frames import Frame, standard_frame
from .models import CommandConfig, FrameSpec, OutputFormat, StatePreset
from .opframes import build_hermitian_frame, wigner
from .serialization import (
    matrix_to_document,
    read_matrix_json,
    write_frame_json,
    write_report_json,
    write_rows_csv,
    write_wigner_csv,
    write_wigner_json,
    write_wigner_pgm,
    save_json,
)
from .tomo import noise_experiment

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_NUMERICAL = 3

TABLE1_FIELDS = ("state_id", "m", "N_m", "C_m")
TABLE2_FIELDS = ("kappa", "m", "lambda1", "lambda2")


def _frame(spec: FrameSpec) -> Frame:
    return standard_frame(spec.kind, spec.param)


def _load_state(state: str) -> np.ndarray:
    """A preset name, or a path to a matrix JSON document"""
    if state in {p.value for p in StatePreset}:
        return preset_state(state).matrix
    path = Path(state)
    if not path.exists():
        raise InputError(f"'{state}' is neither a preset ({', '.join(p.value for p in StatePreset)}) nor a file")
    return read_matrix_json(path)


def cmd_tables(args) -> int:
    out_dir = Path(args.out_dir)
    try:
        out_dir.mkdir(parents=True, exist_ok=True)
    except OSError as e:
        raise InputError(f"cannot create output directory {out_dir}: {e}") from None

    rows1 = table1_rows(workers=args.workers)
    write_rows_csv(rows1, TABLE1_FIELDS, out_dir / "table1.csv")
    print(f"✓ table1.csv: {len(rows1)} rows")

    rows2 = table2_rows()
    write_rows_csv(rows2, TABLE2_FIELDS, out_dir / "table2.csv")
    print(f"✓ table2.csv: {len(rows2)} rows")
    return EXIT_OK


def cmd_wigner(args) -> int:
    config = CommandConfig(command="wigner", frame=FrameSpec.parse(args.frame), state=args.state,
                           output=args.out, format=args.format)
    W = build_hermitian_frame(_frame(config.frame))
    a = _load_state(config.state)

    if a.shape[0] == W.d:
        table = wigner(a, W)
    elif a.shape[0] == W.d ** 2:
        # bipartite input on the same frame: equal-coordinate slice
        table = equal_coordinate_slice_of(a, W)
    else:
        raise InputError(f"state has dimension {a.shape[0]}, frame '{config.frame}' has d={W.d}")

    writers = {
        OutputFormat.CSV: write_wigner_csv,
        OutputFormat.PGM: write_wigner_pgm,
        OutputFormat.JSON: write_wigner_json,
    }
    writers[config.format](table, config.output)
    print(f"✓ Wigner table {table.count}x{table.count} written to {config.output}")
    return EXIT_OK


def cmd_tomo(args) -> int:
    config = CommandConfig(command="tomo", frame=FrameSpec.parse(args.frame), state=args.state,
                           output=args.out, epsilon=args.epsilon, trials=args.trials, seed=args.seed)
    W = build_hermitian_frame(_frame(config.frame))
    rho = np.eye(W.d) / W.d if config.state is None else _load_state(config.state)
    report = noise_experiment(rho, W, config.epsilon, config.trials, config.seed, workers=args.workers)
    write_report_json(report, config.output)
    print(f"✓ mean_frame={report.mean_frame:.6g} mean_basis={report.mean_basis:.6g} -> {config.output}")
    return EXIT_OK


def cmd_frame_gen(args) -> int:
    frame = standard_frame(args.kind, args.m)
    write_frame_json(frame, args.out)
    print(f"✓ {frame.name}: {frame.count} vectors in C^{frame.d} -> {args.out}")
    return EXIT_OK


def cmd_frame_kernel(args) -> int:
    W = build_hermitian_frame(standard_frame(args.kind, args.m))
    doc = {
        "d": W.d,
        "count": W.count,
        "operators": [matrix_to_document(W.W[j, k]).model_dump()
                      for j in range(W.count) for k in range(W.count)],
    }
    save_json(args.out, doc)
    print(f"✓ {W.count ** 2} kernel operators of {W.frame.name} -> {args.out}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="framewigner",
        description="Frame representations of qudits: Wigner tables, Gaussian states, noise experiments",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  python run-framewigner.py tables --out-dir results
  python run-framewigner.py wigner --state pure1 --frame polygon:30 --format pgm --out pure1.pgm
  python run-framewigner.py wigner --state bell --frame polygon:30 --out bell.csv
  python run-framewigner.py tomo --frame icosahedron --epsilon 0.01 --trials 2000 --seed 0 --out tomo.json
  python run-framewigner.py frame gen --kind polygon --m 5 --out pentagon.json
        """,
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="Debug logging")
    sub = parser.add_subparsers(dest="command", required=True)
    numerics = config_manager.get_numerics()

    tables = sub.add_parser("tables", help="Write table1.csv (N_m, C_m) and table2.csv (Gaussian spectra)")
    tables.add_argument("--out-dir", default=".", help="Output directory (default: .)")
    tables.add_argument("--workers", type=int, default=None, help="Threads for the m scan")
    tables.set_defaults(handler=cmd_tables)

    wig = sub.add_parser("wigner", help="Wigner table of a state on a polygon frame")
    wig.add_argument("--state", required=True, help="Preset (pure1, mixed1, bell) or matrix JSON file")
    wig.add_argument("--frame", required=True, help="Frame spec, e.g. polygon:30")
    wig.add_argument("--format", default="csv", choices=[f.value for f in OutputFormat])
    wig.add_argument("--out", required=True, help="Output file")
    wig.set_defaults(handler=cmd_wigner)

    tomo = sub.add_parser("tomo", help="Perturbed-coefficient reconstruction: frame vs parity basis")
    tomo.add_argument("--frame", required=True, help="Frame spec of odd dimension, e.g. icosahedron")
    tomo.add_argument("--state", default=None, help="Preset or matrix JSON file (default: I/d)")
    tomo.add_argument("--epsilon", type=float, default=numerics.noise_epsilon)
    tomo.add_argument("--trials", type=int, default=numerics.noise_trials)
    tomo.add_argument("--seed", type=int, default=numerics.seed)
    tomo.add_argument("--workers", type=int, default=None, help="Threads for the trials")
    tomo.add_argument("--out", required=True, help="Report JSON file")
    tomo.set_defaults(handler=cmd_tomo)

    frame = sub.add_parser("frame", help="Export standard frames and their kernels")
    frame_sub = frame.add_subparsers(dest="frame_command", required=True)
    for name, handler, text in (
        ("gen", cmd_frame_gen, "Write the frame vectors as JSON"),
        ("kernel", cmd_frame_kernel, "Write the Hermitian kernel W_jk as JSON"),
    ):
        p = frame_sub.add_parser(name, help=text)
        p.add_argument("--kind", required=True, help="polygon, mercedes, tetrahedron, icosahedron, orthonormal")
        p.add_argument("--m", type=int, default=None, help="Polygon size, or dimension for orthonormal")
        p.add_argument("--out", required=True, help="Output file")
        p.set_defaults(handler=handler)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.INFO,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )
    try:
        return args.handler(args)
    except NumericalError as e:
        logger.error(f"Numerical failure: {e}")
        print(f"✗ {e}", file=sys.stderr)
        return EXIT_NUMERICAL
    except (FrameWignerError, ValidationError, ValueError, OSError) as e:
        logger.error(f"Invalid input: {e}")
        print(f"✗ {e}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
