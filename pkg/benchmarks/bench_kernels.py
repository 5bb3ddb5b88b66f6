"""Compare the compiled line kernels with the pure-Python ones.

    python benchmarks/bench_kernels.py [--cases 20000] [--seed 1]

Both backends run the same random single-line workload; results are checked
for agreement before timing.
"""

from __future__ import annotations

import argparse
import random
import time

from glbranch import _lines

try:
    from glbranch import _ckernels
except ImportError:  # pragma: no cover
    _ckernels = None

KERNELS = ("derivative_right", "integral_right", "mw_dual", "hd_right_z", "ul", "is_generic")


def random_case(rng: random.Random) -> tuple:
    n = rng.randint(0, 7)
    segs = tuple(sorted((x, x + rng.randint(0, 4)) for x in (rng.randint(-4, 4) for _ in range(n))))
    a = rng.randint(-4, 4)
    return segs, a, a + rng.randint(0, 4)


def _call(mod, name: str, case: tuple):
    segs, a, b = case
    args = (segs, a, b) if name in ("derivative_right", "integral_right") else (segs,)
    try:
        return getattr(mod, name)(*args)
    except AssertionError:
        return "assertion"


def time_backend(mod, cases: list, name: str) -> float:
    t0 = time.perf_counter()
    for case in cases:
        _call(mod, name, case)
    return time.perf_counter() - t0


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--cases", type=int, default=20000)
    ap.add_argument("--seed", type=int, default=1)
    args = ap.parse_args()
    if _ckernels is None:
        raise SystemExit("compiled kernels are not built; run `pip install -e . --no-build-isolation`")
    rng = random.Random(args.seed)
    cases = [random_case(rng) for _ in range(args.cases)]
    for name in KERNELS:
        bad = sum(_call(_lines, name, c) != _call(_ckernels, name, c) for c in cases)
        if bad:
            raise SystemExit(f"{name}: {bad} disagreements between backends")
    print(f"{'kernel':<18}{'python s':>10}{'cython s':>10}{'speedup':>9}")
    tot_p = tot_c = 0.0
    for name in KERNELS:
        tp, tc = time_backend(_lines, cases, name), time_backend(_ckernels, cases, name)
        tot_p, tot_c = tot_p + tp, tot_c + tc
        print(f"{name:<18}{tp:>10.3f}{tc:>10.3f}{tp / tc:>8.1f}x")
    print(f"{'total':<18}{tot_p:>10.3f}{tot_c:>10.3f}{tot_p / tot_c:>8.1f}x")


if __name__ == "__main__":
    main()
