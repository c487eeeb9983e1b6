/**
 * Node binding for the emdkit decomposition engine.
 *
 * Exposes emd/eemd/ceemdan over in-memory numeric arrays by driving the
 * `emdkit` command line in a child process: the input is written to a
 * temporary file, the CLI decomposes it, and its CSV output (one column
 * per IMF, 17 significant digits, bit-faithful round trip) is parsed back
 * and transposed into rows. Results are therefore bit-identical to the
 * core library's output for the same parameters and seed.
 *
 * The decomposition runs outside the Node process, so the event loop
 * stays free and concurrent calls parallelize naturally.
 */

import { execFile } from "node:child_process";
import { mkdtemp, readFile, rm, writeFile } from "node:fs/promises";
import { tmpdir } from "node:os";
import { join } from "node:path";

/** Keyword parameters, named exactly like the engine's. */
export interface DecompositionOptions {
  /** Total output rows including the residual; default max(2, floor(log2 N)). */
  num_imfs?: number;
  /** S-number stopping criterion; 0 disables. Default 4. */
  S_number?: number;
  /** Sifting cap per IMF; 0 disables. Default 50. */
  num_siftings?: number;
  /** Ensemble members; default 250 (plain emd always uses 1). */
  ensemble_size?: number;
  /** Noise std relative to the signal std; default 0.2 (plain emd uses 0). */
  noise_strength?: number;
  /** RNG seed; 0 (default) seeds from OS entropy. */
  rng_seed?: number;
  /** Ensemble worker count; 0 (default) uses the hardware parallelism. */
  threads?: number;
}

/** A parameter bundle the engine rejected (its ValueError family). */
export class ValidationError extends RangeError {
  constructor(message: string) {
    super(message);
    this.name = "ValidationError";
  }
}

/** The child process failed for a non-validation reason. */
export class EngineError extends Error {
  constructor(message: string) {
    super(message);
    this.name = "EngineError";
  }
}

const ENGINE_ERRORS = [
  "NoStoppingRule",
  "NoiseMismatch",
  "SignalTooShort",
  "NonFinite",
  "InvalidParameter",
  "DegenerateKnots",
  "DomainMismatch",
  "DecompositionError",
];

function engineCommand(): string[] {
  const cmd = process.env.EMDKIT_CLI;
  if (cmd && cmd.length > 0) return cmd.split(" ");
  const python = process.env.EMDKIT_PYTHON ?? "python3";
  return [python, "-m", "emdkit.cli"];
}

function toSamples(input: ArrayLike<number> | Iterable<number>): number[] {
  const arr = Array.from(input as Iterable<number>);
  if (arr.length === 0) throw new ValidationError("input signal is empty");
  for (let i = 0; i < arr.length; i++) {
    const v = arr[i];
    if (typeof v !== "number") {
      throw new TypeError(`input sample ${i} is not a number (got ${typeof v})`);
    }
    if (!Number.isFinite(v)) {
      throw new ValidationError(`input sample ${i} is not finite`);
    }
  }
  return arr;
}

function optionFlags(options: DecompositionOptions): string[] {
  const flags: string[] = [];
  const push = (flag: string, v: number | undefined) => {
    if (v !== undefined) flags.push(flag, String(v));
  };
  push("--num-imfs", options.num_imfs);
  push("--s-number", options.S_number);
  push("--num-siftings", options.num_siftings);
  push("--ensemble-size", options.ensemble_size);
  push("--noise-strength", options.noise_strength);
  push("--seed", options.rng_seed);
  push("--threads", options.threads);
  return flags;
}

function runEngine(args: string[]): Promise<void> {
  const [cmd, ...prefix] = engineCommand();
  return new Promise((resolve, reject) => {
    execFile(cmd, [...prefix, ...args], { maxBuffer: 1 << 28 }, (error, _stdout, stderr) => {
      if (!error) return resolve();
      const detail = (stderr || error.message).trim();
      if (ENGINE_ERRORS.some((name) => detail.includes(name))) {
        return reject(new ValidationError(detail));
      }
      return reject(new EngineError(detail));
    });
  });
}

/** Parse the CLI's column-per-IMF CSV and transpose it into rows. */
export function parseMatrixCsv(text: string): Float64Array[] {
  const lines = text.trim().split("\n");
  const m = lines[0].split(",").length;
  const n = lines.length - 1;
  const rows = Array.from({ length: m }, () => new Float64Array(n));
  for (let i = 0; i < n; i++) {
    const fields = lines[i + 1].split(",");
    if (fields.length !== m) {
      throw new EngineError(`row ${i} has ${fields.length} fields, expected ${m}`);
    }
    for (let k = 0; k < m; k++) {
      rows[k][i] = Number(fields[k]);
    }
  }
  return rows;
}

async function decompose(
  method: "emd" | "eemd" | "ceemdan",
  samples: number[],
  options: DecompositionOptions,
): Promise<Float64Array[]> {
  const dir = await mkdtemp(join(tmpdir(), "emdkit-"));
  const inPath = join(dir, "in.csv");
  const outPath = join(dir, "out.csv");
  try {
    await writeFile(inPath, samples.map((v) => String(v)).join("\n") + "\n");
    await runEngine(["-i", inPath, "-o", outPath, "--method", method, ...optionFlags(options)]);
    return parseMatrixCsv(await readFile(outPath, "utf8"));
  } finally {
    await rm(dir, { recursive: true, force: true });
  }
}

/**
 * Plain empirical mode decomposition. Returns M rows of length N with the
 * residual last; rows sum to the input up to numerical precision.
 * Argument validation is synchronous; the decomposition itself is not.
 */
export function emd(
  input: ArrayLike<number> | Iterable<number>,
  options: DecompositionOptions = {},
): Promise<Float64Array[]> {
  return decompose("emd", toSamples(input), options);
}

/** Ensemble EMD: averaged decompositions of noise-perturbed copies. */
export function eemd(
  input: ArrayLike<number> | Iterable<number>,
  options: DecompositionOptions = {},
): Promise<Float64Array[]> {
  return decompose("eemd", toSamples(input), options);
}

/** Complete ensemble EMD with adaptive noise; rows sum back to the input. */
export function ceemdan(
  input: ArrayLike<number> | Iterable<number>,
  options: DecompositionOptions = {},
): Promise<Float64Array[]> {
  return decompose("ceemdan", toSamples(input), options);
}
