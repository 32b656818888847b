"""Time the compiled kernels against the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat 3]
"""
import argparse
import random
import time

from dualfsig import kernels
from dualfsig.determinantal import build_band_matrix
from dualfsig.exactalg import Polynomial, monomials_of_degree


def surjectivity_matrix(n, k, j):
    band = build_band_matrix(n, k)
    target = monomials_of_degree(n, j)
    index = {(row, m): row * len(target) + t for row in range(k) for t, m in enumerate(target)}
    cols = []
    for c in range(band.ncols):
        for u in monomials_of_degree(n, j - 1):
            col = [0] * (k * len(target))
            for row in range(k):
                for mono, coeff in (band.entries[row][c] * Polynomial.monomial(u)).items():
                    col[index[(row, mono)]] += int(coeff)
            cols.append(col)
    return [list(r) for r in zip(*cols)]


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn()
        times.append(time.perf_counter() - t0)
    return min(times), result


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    rng = random.Random(0)
    dense = [[rng.randint(-9, 9) for _ in range(40)] for _ in range(40)]
    dense[-1] = [a + b for a, b in zip(dense[0], dense[1])]  # force the exact path
    psi = surjectivity_matrix(4, 4, 6)
    cases = [
        ("enum_sum_histogram n=3 q=100 d=5", lambda m: m.enum_sum_histogram(3, 100, 5)),
        ("enum_sum_histogram n=4 q=32 d=7", lambda m: m.enum_sum_histogram(4, 32, 7)),
        (f"rank_mod_prime Psi(4,4) deg 6 ({len(psi)}x{len(psi[0])})", lambda m: m.rank_mod_prime(psi, kernels.RANK_PRIME)),
        ("bareiss_rank 40x40 rank-deficient", lambda m: m.bareiss_rank(dense)),
    ]
    backends = kernels.available_backends()
    print(f"active backend: {kernels.BACKEND}")
    header = f"{'kernel':48s}" + "".join(f"{name:>12s}" for name in backends) + f"{'speedup':>10s}"
    print(header)
    for label, fn in cases:
        timings, results = {}, set()
        for name, mod in backends.items():
            timings[name], res = best_of(lambda: fn(mod), args.repeat)
            results.add(repr(res))
        assert len(results) == 1, f"backends disagree on {label}"
        speedup = timings["python"] / timings["cython"] if "cython" in timings else float("nan")
        print(f"{label:48s}" + "".join(f"{t:11.4f}s" for t in timings.values()) + f"{speedup:9.1f}x")


if __name__ == "__main__":
    main()
