"""Timing comparison of the gmpy2 and mpmath arithmetic backends.

Two layers are measured:

* raw backend operations (make / add / mul / div / exp and a decimal
  round-trip), driven directly through the backend interface so both
  implementations see identical call sequences;
* end-to-end library work (a dense determinant and a moment evaluation
  with its enumeration oracle), run in a subprocess per backend because
  the active backend is fixed at import time via ACUE_LAB_BACKEND.

Usage:
    python3 benchmarks/backend_bench.py [--bits 256] [--ops 20000] [--size 8]
"""

from __future__ import annotations

import argparse
import os
import random
import subprocess
import sys
import time
from pathlib import Path

SRC = Path(__file__).resolve().parent.parent / "src"
sys.path.insert(0, str(SRC))

from acue_lab._backends import available_backends, load_backend  # noqa: E402

END_TO_END_SNIPPET = """
import time
from acue_lab._backends import BACKEND
from acue_lab.numeric import ComplexMatrix, as_value
from acue_lab.ensembles import acue_expect
from acue_lab.formulas import MomentSpec, acue_moment
from acue_lab.verify import moment_observable
import random

bits = {bits}
size = {size}

rng = random.Random(99)
rows = [[as_value(complex(rng.uniform(-1, 1), rng.uniform(-1, 1)), bits)
         for _ in range(size)] for _ in range(size)]
matrix = ComplexMatrix(rows)
t0 = time.perf_counter()
for _ in range(20):
    matrix.det()
det_s = (time.perf_counter() - t0) / 20

shifts = tuple(as_value(v, bits) for v in (0.4 + 0.1j, 0.7, 1.3, 0.2 - 0.5j))
spec = MomentSpec(n=3, k=2, l=2, shifts=shifts, precision_bits=bits)
t0 = time.perf_counter()
formula = acue_moment(spec)
formula_s = time.perf_counter() - t0
t0 = time.perf_counter()
oracle = acue_expect(3, moment_observable(shifts, 2), precision_bits=bits)
oracle_s = time.perf_counter() - t0
print(f"{{BACKEND.name}} {{det_s:.6f}} {{formula_s:.6f}} {{oracle_s:.6f}}")
"""


def bench_scalar(name: str, bits: int, ops: int) -> dict[str, float]:
    backend = load_backend(name)
    rng = random.Random(20260819)
    values = [
        backend.make(rng.uniform(-2, 2), rng.uniform(-2, 2), bits)
        for _ in range(64)
    ]
    timings: dict[str, float] = {}

    t0 = time.perf_counter()
    for i in range(ops):
        backend.make(1.25, -0.5, bits)
    timings["make"] = time.perf_counter() - t0

    for op_name in ("add", "mul", "div"):
        op = getattr(backend, op_name)
        t0 = time.perf_counter()
        for i in range(ops):
            op(values[i % 64], values[(i + 7) % 64], bits)
        timings[op_name] = time.perf_counter() - t0

    t0 = time.perf_counter()
    for i in range(ops // 10):
        backend.exp(values[i % 64], bits)
    timings["exp"] = (time.perf_counter() - t0) * 10

    t0 = time.perf_counter()
    for i in range(ops // 10):
        re_s, im_s = backend.to_decimal(values[i % 64], bits)
        backend.from_decimal(re_s, im_s, bits)
    timings["decimal_rt"] = (time.perf_counter() - t0) * 10

    return timings


def bench_end_to_end(name: str, bits: int, size: int) -> tuple[float, float, float]:
    snippet = END_TO_END_SNIPPET.format(bits=bits, size=size)
    env = dict(os.environ)
    env["ACUE_LAB_BACKEND"] = name
    env["PYTHONPATH"] = str(SRC)
    proc = subprocess.run(
        [sys.executable, "-c", snippet], env=env, capture_output=True, text=True,
    )
    if proc.returncode != 0:
        raise RuntimeError(f"end-to-end run failed for {name}:\n{proc.stderr}")
    fields = proc.stdout.split()
    assert fields[0] == name, proc.stdout
    return float(fields[1]), float(fields[2]), float(fields[3])


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--bits", type=int, default=256)
    parser.add_argument("--ops", type=int, default=20000,
                        help="scalar operations per timing loop")
    parser.add_argument("--size", type=int, default=8,
                        help="matrix size for the determinant timing")
    args = parser.parse_args()

    names = available_backends()
    if not names:
        print("no arithmetic backend importable", file=sys.stderr)
        return 1
    print(f"backends: {', '.join(names)}   bits={args.bits}   ops={args.ops}")

    scalar = {name: bench_scalar(name, args.bits, args.ops) for name in names}
    op_names = ["make", "add", "mul", "div", "exp", "decimal_rt"]
    header = "scalar op      " + "".join(f"{name:>12}" for name in names)
    if len(names) == 2:
        header += "       ratio"
    print()
    print(header)
    for op_name in op_names:
        row = f"{op_name:<15}"
        for name in names:
            row += f"{scalar[name][op_name] * 1e6 / args.ops:>10.2f}us"
        if len(names) == 2:
            a, b = (scalar[name][op_name] for name in names)
            row += f"{b / a:>11.1f}x"
        print(row)

    print()
    print(f"end to end (det {args.size}x{args.size} avg of 20; moment n=3 k=l=2)")
    print("backend         det        formula      oracle")
    for name in names:
        det_s, formula_s, oracle_s = bench_end_to_end(name, args.bits, args.size)
        print(f"{name:<12}{det_s:>9.4f}s{formula_s:>11.4f}s{oracle_s:>11.4f}s")
    return 0


if __name__ == "__main__":
    sys.exit(main())
