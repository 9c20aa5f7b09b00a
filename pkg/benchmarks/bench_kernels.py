"""Time the compiled kernels against the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--repeat N] [--seed S]

Both backends get identical inputs; results are compared before timing.
"""

import argparse
import random
import sys
import timeit
from itertools import combinations

from graftkl import _pykernels

try:
    from graftkl import _ckernels
except ImportError:
    _ckernels = None


def random_graph(rng, n, p):
    pairs = [(u, v) for u, v in combinations(range(n), 2) if rng.random() < p]
    return n, [u for u, _ in pairs], [v for _, v in pairs]


def cases(seed):
    rng = random.Random(seed)
    n, tails, heads = random_graph(rng, 60, 0.1)
    dist = _pykernels.all_pairs_bfs(n, tails, heads)
    terms = sorted(rng.sample(range(n), 16))
    small = random_graph(rng, 9, 0.45)
    weights = [rng.choice((-1, 1)) for _ in small[1]]
    table_graph = random_graph(rng, 10, 0.35)
    target = (1 << 0) | (1 << 3)
    return {
        "all_pairs_bfs n=60": lambda k: k.all_pairs_bfs(n, tails, heads),
        "pair_matching 16 terminals": lambda k: k.pair_matching(dist, terms),
        "join_size_table n=10": lambda k: k.join_size_table(*table_graph),
        "scan_joins n=9": lambda k: k.scan_joins(*small, target),
        "path_minima n=9": lambda k: k.path_minima(*small, weights, 0),
        "min_circuit n=9": lambda k: k.min_circuit(*small, weights),
    }


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)
    if _ckernels is None:
        print("compiled extension not built; nothing to compare", file=sys.stderr)
        return 1
    print(f"{'kernel':30} {'python s':>10} {'cython s':>10} {'speedup':>8}")
    for name, call in cases(args.seed).items():
        if call(_pykernels) != call(_ckernels):
            print(f"{name}: backends disagree", file=sys.stderr)
            return 1
        py = min(timeit.repeat(lambda: call(_pykernels), number=1, repeat=args.repeat))
        cy = min(timeit.repeat(lambda: call(_ckernels), number=1, repeat=args.repeat))
        print(f"{name:30} {py:10.4f} {cy:10.4f} {py / cy:8.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
