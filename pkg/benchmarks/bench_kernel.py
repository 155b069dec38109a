#!/usr/bin/env python3
"""Benchmark the compiled term kernel against the pure-Python fallback.

Runs the same workloads on both backends and prints a timing table:

  * dense-ish polynomial multiplication,
  * a Groebner-heavy multidegree computation (standard Cremona cubic on P^3),
  * the full verification-sized cuspidal-cubic pipeline.

Usage: python benchmarks/bench_kernel.py [--repeat N]
"""

import argparse
import random
import time

from toricpolar._kernel import available_backends
from toricpolar.field import PrimeField
from toricpolar.maps import RandomizationConfig, multidegrees, toric_polar_map
from toricpolar.parse import parse_polynomial
from toricpolar.poly import Polynomial


def random_poly(field, rng, arity, degree, terms):
    out = {}
    while len(out) < terms:
        e = [0] * arity
        for _ in range(degree):
            e[rng.randrange(arity)] += 1
        out[tuple(e)] = rng.randrange(1, field.p)
    return Polynomial(field, arity, out)


def bench_multiplication(field, repeat):
    rng = random.Random(0)
    pairs = [(random_poly(field, rng, 4, 6, 25), random_poly(field, rng, 4, 6, 25))
             for _ in range(8)]
    start = time.perf_counter()
    for _ in range(repeat):
        for f, g in pairs:
            _ = f * g
    return time.perf_counter() - start


def bench_cremona_multidegrees(field, repeat):
    text = "x1*x2*x3 + x0*x2*x3 + x0*x1*x3 + x0*x1*x2"
    f = parse_polynomial(text, ("x0", "x1", "x2", "x3"), field)
    cfg = RandomizationConfig(prime=field.p, seed=1, trials=2)
    start = time.perf_counter()
    for _ in range(repeat):
        values = multidegrees(toric_polar_map(f), cfg).values
        assert values == (1, 3, 3, 1)
    return time.perf_counter() - start


def bench_cuspidal_pipeline(field, repeat):
    from toricpolar.curves import plane_degree_formula
    text = "4*x1^3 - x0*x1^2 - 18*x0*x1*x2 + 27*x0*x2^2 + 4*x0^2*x2"
    f = parse_polynomial(text, ("x0", "x1", "x2"), field)
    cfg = RandomizationConfig(prime=field.p, seed=1, trials=2)
    start = time.perf_counter()
    for _ in range(repeat):
        md = multidegrees(toric_polar_map(f), cfg)
        rep = plane_degree_formula(f)
        assert md.topological_degree == rep.degree_formula == 2
    return time.perf_counter() - start


BENCHMARKS = [
    ("polynomial multiplication (8 pairs, 25 terms, deg 6)", bench_multiplication),
    ("multidegrees of the Cremona cubic on P^3", bench_cremona_multidegrees),
    ("cuspidal cubic: multidegrees + curve report", bench_cuspidal_pipeline),
]


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()

    backends = available_backends()
    print(f"available backends: {', '.join(backends)}")
    if "cython" not in backends:
        print("compiled kernel not built; benchmarking pure Python only")

    width = max(len(name) for name, _ in BENCHMARKS)
    header = f"{'benchmark':<{width}}  " + "".join(f"{b:>12}" for b in backends)
    print(header)
    print("-" * len(header))
    for name, fn in BENCHMARKS:
        times = {}
        for backend in backends:
            field = PrimeField(backend=backend)
            fn(field, 1)  # warm up
            times[backend] = fn(field, args.repeat) / args.repeat
        row = f"{name:<{width}}  " + "".join(
            f"{times[b] * 1000:>10.1f}ms" for b in backends)
        if len(times) == 2 and times.get("cython"):
            row += f"   ({times['python'] / times['cython']:.1f}x)"
        print(row)


if __name__ == "__main__":
    main()
