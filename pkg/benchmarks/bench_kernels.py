"""Time the compiled kernels against the pure-Python fallback.

Run with ``python benchmarks/bench_kernels.py``; the compiled rows are
skipped when the extension has not been built.
"""
import argparse
import random
import timeit

from lambdaring import _kernels_py
from lambdaring.oracle import young_symmetrizer
from lambdaring.partitions import partitions_of

try:
    from lambdaring import _kernels
except ImportError:
    _kernels = None


def workloads(rng):
    shapes12 = list(partitions_of(12))
    dense = [[rng.randint(-9, 9) for _ in range(60)] for _ in range(60)]
    low = [[sum(rng.randint(-3, 3) * rng.randint(-3, 3) for _ in range(5)) for _ in range(80)] for _ in range(80)]
    perms = [[x - 1 for x in perm] for perm in young_symmetrizer((3, 2)).terms]
    return {
        "mn_table n=12": lambda k: k.mn_table(shapes12, shapes12),
        "bareiss 60x60": lambda k: k.bareiss_rank(dense),
        "bareiss 80x80 low rank": lambda k: k.bareiss_rank(low),
        "place_permutation S5, d=4": lambda k: [k.place_permutation(p, 4) for p in perms],
    }


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    rng = random.Random(0)
    print(f"{'kernel':<28}{'python (s)':>12}{'cython (s)':>12}{'speedup':>10}")
    for name, job in workloads(rng).items():
        py = min(timeit.repeat(lambda: job(_kernels_py), number=1, repeat=args.repeat))
        if _kernels is None:
            print(f"{name:<28}{py:>12.4f}{'n/a':>12}{'':>10}")
            continue
        cy = min(timeit.repeat(lambda: job(_kernels), number=1, repeat=args.repeat))
        print(f"{name:<28}{py:>12.4f}{cy:>12.4f}{py / cy:>9.1f}x")


if __name__ == "__main__":
    main()
