"""Time the compiled state-sum kernel against the pure-Python fallback.

    python3 benchmarks/bench_kernel.py [--sizes 6 8 10 12] [--repeat 3]
"""

import argparse
import random
import timeit

from arrowpoly import arrow
from arrowpoly.moves import random_code


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--sizes", type=int, nargs="+", default=[6, 8, 10, 12, 14])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    kernels = ["python"]
    if arrow._compiled_state_counts is not None:
        kernels.insert(0, "compiled")
    rng = random.Random(args.seed)
    print(f"{'n':>3}  " + "  ".join(f"{k:>10}" for k in kernels) + "   speedup")
    for n in args.sizes:
        code = random_code(rng, n)
        times = {}
        for k in kernels:
            t = timeit.repeat(lambda: arrow.state_counts(code, k), number=1, repeat=args.repeat)
            times[k] = min(t)
        if len(kernels) == 2:
            assert arrow.state_counts(code, "compiled") == arrow.state_counts(code, "python")
            ratio = f"{times['python'] / times['compiled']:8.1f}x"
        else:
            ratio = "       -"
        print(f"{n:>3}  " + "  ".join(f"{times[k]:10.4f}" for k in kernels) + f"  {ratio}")


if __name__ == "__main__":
    main()
