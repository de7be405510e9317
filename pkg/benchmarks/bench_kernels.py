"""Compare the compiled and pure-Python subset-product kernels.

Runs ``min_subset_weight`` on reduction instances of growing size (2n
generators, 4**n products) and prints one row per instance.

    python benchmarks/bench_kernels.py --max-vars 9 --clauses 4
"""

import argparse
import random
import time

from permcodes import _kernels_py
from permcodes.group import transposition_lists
from permcodes.naesat import random_formula
from permcodes.reduction import build_generators

try:
    from permcodes import _speedups
except ImportError:
    _speedups = None


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        result = fn()
        times.append(time.perf_counter() - t)
    return min(times), result


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--min-vars", type=int, default=3)
    ap.add_argument("--max-vars", type=int, default=8)
    ap.add_argument("--clauses", type=int, default=4)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--python-limit", type=int, default=8,
                    help="skip the pure-Python kernel above this many variables")
    args = ap.parse_args()

    if _speedups is None:
        print("compiled kernels not built; only the pure-Python timings are shown")
    rng = random.Random(args.seed)
    print(f"{'n':>3} {'m':>3} {'degree':>6} {'products':>10} {'python s':>10} {'cython s':>10} {'speedup':>8}")
    for n in range(args.min_vars, args.max_vars + 1):
        r = build_generators(random_formula(rng, n, args.clauses))
        swaps = transposition_lists(r.generators)
        py_t = cy_t = None
        results = set()
        if n <= args.python_limit:
            py_t, res = best_of(lambda: _kernels_py.min_subset_weight(swaps, r.degree), args.repeat)
            results.add(res)
        if _speedups is not None:
            cy_t, res = best_of(lambda: _speedups.min_subset_weight(swaps, r.degree), args.repeat)
            results.add(res)
        assert len(results) == 1, f"backends disagree: {results}"
        fmt = lambda t: f"{t:10.4f}" if t is not None else f"{'-':>10}"
        speed = f"{py_t / cy_t:7.1f}x" if py_t and cy_t else f"{'-':>8}"
        print(f"{n:>3} {args.clauses:>3} {r.degree:>6} {4 ** n:>10} {fmt(py_t)} {fmt(cy_t)} {speed}")


if __name__ == "__main__":
    main()
