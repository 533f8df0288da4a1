"""Timing comparison of the compiled kernels against the numpy fallback.

Run as: python benchmarks/bench_kernels.py
"""

import time

import numpy as np

from screwsr import _kernels
from screwsr._kernels import fallback
from screwsr.groups import CompactGroupId, random_algebra_element
from screwsr.linalg import embed_complex
from screwsr.screws import ScrewSystem


def _time(fn, repeats=5):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def bench_expm(impl, sizes=(6, 10, 16, 24), loops=200):
    rows = []
    for n in sizes:
        rng = np.random.Generator(np.random.PCG64(n))
        a = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
        a = 0.5 * (a - a.conj().T)

        def run():
            for _ in range(loops):
                impl.expm(a)

        rows.append((n, _time(run) / loops))
    return rows


def bench_scan(impl, loops=20):
    gid = CompactGroupId("SO", 4)
    system = ScrewSystem(gid, 1, 0.5)
    x = embed_complex(random_algebra_element(gid, 1))
    y = embed_complex(random_algebra_element(gid, 2))
    from screwsr.geodesics import GeodesicSpec

    spec = GeodesicSpec(system, x, y)

    def run():
        for _ in range(loops):
            impl.geodesic_scan(
                spec.a_block, spec.b_block, system.m, system.lam,
                0.05, 100, spec.speed)

    return _time(run) / loops


def main():
    impls = [("fallback", fallback)]
    try:
        from screwsr._kernels import _native

        impls.append(("native", _native))
    except ImportError:
        print("compiled kernel not built; benchmarking fallback only")

    print(f"active kernel at import: {_kernels.IMPLEMENTATION}\n")
    print("expm (seconds per call)")
    print(f"{'n':>4}  " + "  ".join(f"{name:>12}" for name, _ in impls))
    tables = [dict() for _ in impls]
    for idx, (name, impl) in enumerate(impls):
        for n, per_call in bench_expm(impl):
            tables[idx][n] = per_call
    for n in sorted(tables[0]):
        cells = "  ".join(f"{tables[i][n]:12.3e}" for i in range(len(impls)))
        print(f"{n:>4}  {cells}")

    print("\ngeodesic_scan, 8x8 blocks, 101 samples (seconds per call)")
    for name, impl in impls:
        print(f"{name:>12}  {bench_scan(impl):.3e}")


if __name__ == "__main__":
    main()
