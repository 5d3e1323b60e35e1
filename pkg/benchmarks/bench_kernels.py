"""Compare the compiled and pure-Python edit-distance kernels.

    python benchmarks/bench_kernels.py [--pairs 300] [--length 120]

Inputs are random sentence-length strings mixing Latin and Devanagari
scalars, so the Unicode path is exercised.
"""

import argparse
import importlib
import random
import timeit

KERNELS = ("levenshtein", "osa", "hamming", "gestalt_matches")
ALPHABET = "abcdefghij klmn" + "कखगघचछजझ"


def make_pairs(n, length, seed=0):
    rng = random.Random(seed)
    pairs = []
    for _ in range(n):
        a = "".join(rng.choice(ALPHABET) for _ in range(length))
        b = list(a)
        for _ in range(length // 4):
            b[rng.randrange(length)] = rng.choice(ALPHABET)
        pairs.append((a, "".join(b)))
    return pairs


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--pairs", type=int, default=300)
    parser.add_argument("--length", type=int, default=120)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    backends = {"python": importlib.import_module("newsbitext._pykernels")}
    try:
        backends["cython"] = importlib.import_module("newsbitext._ckernels")
    except ImportError:
        print("compiled kernels not built; timing the pure-Python fallback only")

    pairs = make_pairs(args.pairs, args.length)
    print(f"{args.pairs} pairs of length {args.length}, best of {args.repeat}")
    print(f"{'kernel':<16}" + "".join(f"{name:>12}" for name in backends) + ("     speedup" if len(backends) > 1 else ""))
    for kernel in KERNELS:
        times = {}
        for name, mod in backends.items():
            fn = getattr(mod, kernel)
            times[name] = min(timeit.repeat(lambda: [fn(a, b) for a, b in pairs], number=1, repeat=args.repeat))
        row = f"{kernel:<16}" + "".join(f"{t * 1000:>10.1f}ms" for t in times.values())
        if len(times) > 1:
            row += f"{times['python'] / times['cython']:>11.1f}x"
        print(row)


if __name__ == "__main__":
    main()
