"""Time each search kernel under the compiled and pure-Python backends.

    python benchmarks/bench_kernels.py [--graphs 200] [--n 14] [--repeat 3]

Both backends run on the same random graphs; their outputs are compared
before any timing is reported.
"""

import argparse
import random
import time

from zagrebcheck import _pykernels
from zagrebcheck.constructors import random_graph

try:
    from zagrebcheck import _kernels
except ImportError:
    _kernels = None

KERNELS = (
    "is_connected",
    "max_independent_set",
    "vertex_connectivity",
    "hamiltonian_cycle",
    "hamiltonian_path",
    "longest_cycle",
)


def workload(count, n, seed):
    rng = random.Random(seed)
    return [random_graph(n, rng.choice(["1/4", "2/5", "1/2", "3/5"]), rng.randrange(1 << 32))
            for _ in range(count)]


def call(mod, name, g):
    fn = getattr(mod, name)
    if name == "longest_cycle":
        return fn(g.n, g.adj, g.n)
    return fn(g.n, g.adj)


def best_time(mod, name, graphs, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        for g in graphs:
            call(mod, name, g)
        best = min(best, time.perf_counter() - t0)
    return best


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--graphs", type=int, default=200)
    parser.add_argument("--n", type=int, default=14)
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--seed", type=int, default=1)
    args = parser.parse_args(argv)

    graphs = workload(args.graphs, args.n, args.seed)
    if _kernels is None:
        print("compiled extension not built; timing the python backend only")
    else:
        for name in KERNELS:
            for g in graphs:
                assert call(_kernels, name, g) == call(_pykernels, name, g), (name, g)

    print(f"{args.graphs} random graphs on {args.n} vertices, best of {args.repeat}")
    print(f"{'kernel':<22} {'python s':>10} {'cython s':>10} {'speedup':>9}")
    for name in KERNELS:
        py = best_time(_pykernels, name, graphs, args.repeat)
        if _kernels is None:
            print(f"{name:<22} {py:>10.4f} {'-':>10} {'-':>9}")
            continue
        cy = best_time(_kernels, name, graphs, args.repeat)
        print(f"{name:<22} {py:>10.4f} {cy:>10.4f} {py / cy:>8.1f}x")


if __name__ == "__main__":
    main()
