"""Benchmark the compiled matching kernels against their pure-Python twins.

The two backends expose identical functions (``compose_partners``,
``closure_cycles``); this script times both on the same randomized
workloads and prints a speedup table.  Run from the repository root:

    python3 benchmarks/bench_backends.py
    python3 benchmarks/bench_backends.py --sizes 8,16,32 --iterations 2000
"""

import argparse
import random
import sys
import timeit

from brauer import _matchops

try:
    from brauer import _speedups
except ImportError:
    _speedups = None


def random_partner(nodes, rng):
    """Partner array of a uniform perfect matching on ``nodes`` points."""
    order = list(range(nodes))
    rng.shuffle(order)
    partner = [0] * nodes
    for i in range(0, nodes, 2):
        a, b = order[i], order[i + 1]
        partner[a] = b
        partner[b] = a
    return partner


def compose_workload(size, count, rng):
    """Pairs of stacked matchings with k = mid = top = size."""
    jobs = []
    for _ in range(count):
        lower = random_partner(2 * size, rng)
        upper = random_partner(2 * size, rng)
        jobs.append((lower, upper))
    return jobs


def closure_workload(size, count, rng):
    return [random_partner(2 * size, rng) for _ in range(count)]


def time_backend(module, compose_jobs, closure_jobs, size, iterations):
    def run_compose():
        for lower, upper in compose_jobs:
            module.compose_partners(lower, size, size, upper, size)

    def run_closure():
        for partner in closure_jobs:
            module.closure_cycles(partner, size)

    compose_s = min(timeit.repeat(run_compose, number=iterations, repeat=3))
    closure_s = min(timeit.repeat(run_closure, number=iterations, repeat=3))
    return compose_s, closure_s


def check_agreement(compose_jobs, closure_jobs, size):
    """The two backends must produce identical results on the workload."""
    for lower, upper in compose_jobs:
        a = _matchops.compose_partners(lower, size, size, upper, size)
        b = _speedups.compose_partners(lower, size, size, upper, size)
        if (a[0], list(a[1])) != (b[0], list(b[1])):
            raise SystemExit("backend disagreement on compose_partners")
    for partner in closure_jobs:
        if _matchops.closure_cycles(partner, size) != _speedups.closure_cycles(
            partner, size
        ):
            raise SystemExit("backend disagreement on closure_cycles")


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--sizes", default="4,8,16,32",
                        help="comma-separated strand counts (default 4,8,16,32)")
    parser.add_argument("--count", type=int, default=50,
                        help="matchings per workload (default 50)")
    parser.add_argument("--iterations", type=int, default=200,
                        help="timing loop repetitions (default 200)")
    parser.add_argument("--seed", type=int, default=20260818)
    args = parser.parse_args(argv)

    if _speedups is None:
        print("compiled backend not built; timing the pure-Python kernels only")

    sizes = [int(s) for s in args.sizes.split(",")]
    rng = random.Random(args.seed)
    header = "%6s  %-10s  %12s  %12s  %8s" % (
        "size", "kernel", "python (s)", "compiled (s)", "speedup")
    print(header)
    print("-" * len(header))
    for size in sizes:
        compose_jobs = compose_workload(size, args.count, rng)
        closure_jobs = closure_workload(size, args.count, rng)
        if _speedups is not None:
            check_agreement(compose_jobs, closure_jobs, size)
        py_c, py_z = time_backend(_matchops, compose_jobs, closure_jobs,
                                  size, args.iterations)
        if _speedups is None:
            print("%6d  %-10s  %12.4f  %12s  %8s" % (size, "compose", py_c, "-", "-"))
            print("%6d  %-10s  %12.4f  %12s  %8s" % (size, "closure", py_z, "-", "-"))
            continue
        cy_c, cy_z = time_backend(_speedups, compose_jobs, closure_jobs,
                                  size, args.iterations)
        print("%6d  %-10s  %12.4f  %12.4f  %7.1fx" % (
            size, "compose", py_c, cy_c, py_c / cy_c))
        print("%6d  %-10s  %12.4f  %12.4f  %7.1fx" % (
            size, "closure", py_z, cy_z, py_z / cy_z))
    return 0


if __name__ == "__main__":
    sys.exit(main())
