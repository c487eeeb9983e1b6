"""Batch command line: delimited time series in, IMF matrix as CSV out.

Exit statuses are a stable scripting contract: 0 on success, 1 for runtime
or data errors, 2 for usage errors (including parameter bundles that fail
validation before any data is read).
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass

import numpy as np

from .core import (DecompositionError, DecompositionParams, NonFinite,
                   validate_params)
from .ensemble import ceemdan, eemd
from .sifter import emd

__all__ = ["CliConfig", "parse_config", "run", "main"]

_METHODS = ("emd", "eemd", "ceemdan")


@dataclass(frozen=True)
class CliConfig:
    input_path: str
    output_path: str
    method: str
    column: int
    has_header: bool
    params: DecompositionParams
    threads: int


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="emdkit",
        description="Decompose a 1-D time series into intrinsic mode functions "
                    "plus a residual trend.",
    )
    p.add_argument("-i", "--input", required=True,
                   help="delimited text file holding the time series")
    p.add_argument("-o", "--output", default="-",
                   help="output file; '-' writes to standard output (default)")
    p.add_argument("--method", choices=_METHODS, default="eemd",
                   help="decomposition method (default: eemd)")
    p.add_argument("--column", type=int, default=0,
                   help="zero-based input column (default: 0)")
    p.add_argument("--header", action="store_true",
                   help="skip the first input line")
    p.add_argument("--num-imfs", type=int, default=None,
                   help="total output rows including the residual "
                        "(default: max(2, floor(log2(N))))")
    p.add_argument("--s-number", type=int, default=4,
                   help="S-number stopping criterion, 0 disables (default: 4)")
    p.add_argument("--num-siftings", type=int, default=50,
                   help="sifting cap per IMF, 0 disables (default: 50)")
    p.add_argument("--ensemble-size", type=int, default=None,
                   help="ensemble members (default: 250; emd forces 1)")
    p.add_argument("--noise-strength", type=float, default=None,
                   help="noise std relative to the signal std "
                        "(default: 0.2; emd forces 0)")
    p.add_argument("--seed", type=int, default=0,
                   help="RNG seed; 0 seeds from entropy (default: 0)")
    p.add_argument("--threads", type=int, default=0,
                   help="ensemble worker count; 0 picks the hardware "
                        "parallelism (default: 0)")
    return p


def parse_config(argv) -> CliConfig:
    """Parse argv into a validated CliConfig; usage errors exit with status 2."""
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.column < 0:
        parser.error(f"--column must be >= 0, got {args.column}")
    if args.method == "emd":
        ensemble_size, noise_strength = 1, 0.0
    else:
        ensemble_size = 250 if args.ensemble_size is None else args.ensemble_size
        noise_strength = 0.2 if args.noise_strength is None else args.noise_strength
    params = DecompositionParams(
        num_imfs=args.num_imfs,
        s_number=args.s_number,
        num_siftings=args.num_siftings,
        ensemble_size=ensemble_size,
        noise_strength=noise_strength,
        rng_seed=args.seed,
    )
    try:
        validate_params(params)
    except DecompositionError as exc:
        parser.error(f"{type(exc).__name__}: {exc}")
    return CliConfig(
        input_path=args.input,
        output_path=args.output,
        method=args.method,
        column=args.column,
        has_header=args.header,
        params=params,
        threads=args.threads,
    )


def _split_fields(line: str, delimiter: str | None) -> list[str]:
    return line.split(delimiter) if delimiter else line.split()


def _detect_delimiter(line: str) -> str | None:
    if "," in line:
        return ","
    if "\t" in line:
        return "\t"
    return None  # any whitespace


def read_column(path: str, column: int, has_header: bool) -> np.ndarray:
    """Read one column of reals from a comma/tab/whitespace delimited file."""
    values: list[float] = []
    delimiter: str | None = None
    first_data_line = True
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            if has_header and lineno == 1:
                continue
            line = raw.strip()
            if not line:
                continue
            if first_data_line:
                delimiter = _detect_delimiter(line)
                first_data_line = False
            fields = _split_fields(line, delimiter)
            if column >= len(fields):
                raise DecompositionError(
                    f"{path}:{lineno}: column {column} missing "
                    f"(line has {len(fields)} fields)")
            try:
                values.append(float(fields[column]))
            except ValueError:
                raise DecompositionError(
                    f"{path}:{lineno}: non-numeric value {fields[column]!r}") from None
    if not values:
        raise DecompositionError(f"{path}: no data rows")
    return np.asarray(values, dtype=np.float64)


def write_matrix(path: str, imfs: np.ndarray) -> None:
    """Write the matrix column-per-IMF with a header, 17 significant digits."""
    m = imfs.shape[0]
    names = [f"imf{k}" for k in range(1, m)] + ["residual"]
    lines = [",".join(names)]
    for row in imfs.T:
        lines.append(",".join(f"{v:.17g}" for v in row))
    text = "\n".join(lines) + "\n"
    if path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def run(config: CliConfig) -> int:
    """Execute one decomposition; returns the process exit status."""
    try:
        x = read_column(config.input_path, config.column, config.has_header)
        if not np.isfinite(x).all():
            raise NonFinite(f"{config.input_path}: input contains NaN or infinity")
        workers = config.threads if config.threads > 0 else None
        if config.method == "emd":
            imfs = emd(x, config.params)
        elif config.method == "eemd":
            imfs = eemd(x, config.params, workers=workers)
        else:
            imfs = ceemdan(x, config.params, workers=workers)
        write_matrix(config.output_path, imfs)
    except (DecompositionError, OSError) as exc:
        print(f"emdkit: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    return 0


def main(argv=None) -> int:
    return run(parse_config(argv))


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    sys.exit(main())
