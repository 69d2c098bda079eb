#!/usr/bin/env python3
"""Benchmark the numba kernels against the pure-numpy fallback.

Times every kernel in corrqec.kernels.IMPLEMENTATIONS on dense n-qubit
inputs (dim = 2**n), checks that both backends agree numerically, then
times an end-to-end conjugation sweep (all three identity residuals for
every encoder P_2 .. P_max) under each backend.

Usage:
    python benchmarks/bench_kernels.py [--n N] [--iters I] [--sweep-max M]
"""

from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path

import numpy as np

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from corrqec import kernels
from corrqec.encoder import build_pn, conjugation_report
from corrqec.kernels import HAS_NUMBA, IMPLEMENTATIONS, parity_signs

KERNELS = (
    "gather_conjugate",
    "hadamard_conjugate",
    "pauli_channel_apply",
    "span_conjugate",
    "ptrace_leading",
    "ptrace_trailing",
    "frob_dist",
)


def make_inputs(n: int, rng: np.random.Generator) -> dict[str, tuple]:
    """Random dense inputs sized for an n-qubit register."""
    dim = 1 << n
    m = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    m = np.ascontiguousarray(m, dtype=np.complex128)
    rho = np.ascontiguousarray((m + m.conj().T) * 0.5)
    perm = np.ascontiguousarray(rng.permutation(dim), dtype=np.int64)
    fd = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
    fa = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
    fd = np.ascontiguousarray(fd, dtype=np.complex128)
    fa = np.ascontiguousarray(fa, dtype=np.complex128)
    other = np.ascontiguousarray(m[::-1, ::-1])
    return {
        "gather_conjugate": (m, perm),
        "hadamard_conjugate": (m, n // 2),
        "pauli_channel_apply": (rho, parity_signs(n), 0.4, 0.3, 0.2, 0.1),
        "span_conjugate": (m, fd, fa),
        "ptrace_leading": (m, dim // 2),
        "ptrace_trailing": (m, dim // 2),
        "frob_dist": (m, other),
    }


def bench(fn, args: tuple, iters: int) -> float:
    """Median wall-clock seconds per call."""
    times = []
    for _ in range(iters):
        t0 = time.perf_counter()
        fn(*args)
        times.append(time.perf_counter() - t0)
    return float(np.median(times))


def run_kernel_benchmarks(n: int, iters: int, rng: np.random.Generator) -> None:
    inputs = make_inputs(n, rng)
    backends = [b for b in ("numpy", "numba") if b in IMPLEMENTATIONS]

    print(f"Per-kernel timing at n={n} qubits (dim={1 << n}), "
          f"median of {iters} runs:")
    header = f"{'kernel':<22s}" + "".join(f"{b + ' (ms)':>14s}" for b in backends)
    if len(backends) == 2:
        header += f"{'speedup':>10s}"
    print(header)
    print("-" * len(header))

    for name in KERNELS:
        args = inputs[name]
        medians = {}
        for backend in backends:
            fn = IMPLEMENTATIONS[backend][name]
            fn(*args)  # first numba call pays JIT compilation here, not in the timing
            medians[backend] = bench(fn, args, iters)
        row = f"{name:<22s}"
        for backend in backends:
            row += f"{medians[backend] * 1000:>14.3f}"
        if len(backends) == 2:
            ratio = medians["numpy"] / medians["numba"] if medians["numba"] > 0 else float("inf")
            row += f"{ratio:>9.2f}x"
        print(row)


def check_agreement(n: int, rng: np.random.Generator) -> bool:
    """Max elementwise difference between backends on shared random inputs."""
    inputs = make_inputs(n, rng)
    print(f"Backend agreement at n={n}:")
    worst = 0.0
    for name in KERNELS:
        args = inputs[name]
        got_np = np.asarray(IMPLEMENTATIONS["numpy"][name](*args))
        got_nb = np.asarray(IMPLEMENTATIONS["numba"][name](*args))
        diff = float(np.max(np.abs(got_np - got_nb)))
        print(f"  {name:<22s} max |delta| = {diff:.2e}")
        worst = max(worst, diff)
    ok = worst < 1e-10
    print(f"  agreement: {'PASS' if ok else 'FAIL'} (worst {worst:.2e})")
    return ok


def time_sweep(backend: str, max_n: int) -> float:
    """Wall-clock seconds for conjugation_report over P_2 .. P_max_n."""
    previous = kernels._BACKEND
    kernels._BACKEND = backend  # route the encoder code path through `backend`
    try:
        for n in range(2, max_n + 1):  # prime caches and JIT outside the timing
            conjugation_report(build_pn(n))
        t0 = time.perf_counter()
        for n in range(2, max_n + 1):
            conjugation_report(build_pn(n))
        return time.perf_counter() - t0
    finally:
        kernels._BACKEND = previous


def run_sweep_benchmarks(max_n: int) -> None:
    backends = [b for b in ("numpy", "numba") if b in IMPLEMENTATIONS]
    print(f"End-to-end conjugation sweep, n = 2 .. {max_n} "
          f"(three identity residuals per encoder):")
    totals = {}
    for backend in backends:
        totals[backend] = time_sweep(backend, max_n)
        print(f"  {backend:<8s} {totals[backend]:>8.3f} s")
    if len(backends) == 2 and totals["numba"] > 0:
        print(f"  speedup  {totals['numpy'] / totals['numba']:>7.2f}x")


def main() -> None:
    parser = argparse.ArgumentParser(
        description="Benchmark numba kernels against the pure-numpy fallback"
    )
    parser.add_argument("--n", type=int, default=12,
                        help="qubit count for per-kernel inputs (default: 12)")
    parser.add_argument("--iters", type=int, default=5,
                        help="timed iterations per kernel (default: 5)")
    parser.add_argument("--sweep-max", type=int, default=12,
                        help="largest encoder in the end-to-end sweep, 0 skips it "
                             "(default: 12)")
    parser.add_argument("--seed", type=int, default=0,
                        help="rng seed for the benchmark inputs (default: 0)")
    args = parser.parse_args()

    if not HAS_NUMBA:
        print("numba is not importable; benchmarking the numpy backend only")
    print()

    rng = np.random.default_rng(args.seed)
    run_kernel_benchmarks(args.n, args.iters, rng)
    print()

    if HAS_NUMBA:
        check_agreement(min(args.n, 8), rng)
        print()

    if args.sweep_max >= 2:
        run_sweep_benchmarks(args.sweep_max)


if __name__ == "__main__":
    main()
