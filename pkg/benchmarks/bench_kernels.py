"""Compare the compiled and pure-Python kernels on fixed workloads.

    python3 benchmarks/bench_kernels.py [--repeat 3] [--json]
"""

import argparse
import json
import random
import statistics
import time

from elimdist import _purekernels as pure
from elimdist.canon import graphs_up_to
from elimdist.graph import Graph, complete_graph

try:
    from elimdist import _speedups as fast
except ImportError:
    fast = None


def random_graph(rng, n, p):
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph.from_edges(n, edges)


def workloads(seed):
    rng = random.Random(seed)
    small = list(graphs_up_to(7))
    medium = [random_graph(rng, 12, 0.35) for _ in range(40)]
    hosts = [random_graph(rng, 9, 0.4) for _ in range(30)]
    k4, k5 = complete_graph(4), complete_graph(5)

    def canon(mod):
        for g in small:
            mod.canonical_labeling(list(g.adj), [-1] * g.n)

    def treedepth(mod):
        for g in medium:
            mod.treedepth(list(g.adj), g.mask, g.n, {})

    def subsets(mod):
        for g in hosts:
            mod.connected_subsets(list(g.adj), -1)

    prepared = []
    for g in hosts:
        subs = pure.connected_subsets(list(g.adj), -1)
        masks, nbrs = [s[0] for s in subs], [s[1] for s in subs]
        for h in (k4, k5):
            order = sorted(range(h.n), key=lambda v: (-h.degree(v), v))
            prepared.append((list(h.adj), order, masks, nbrs, g.mask))

    def minors(mod):
        for args in prepared:
            mod.minor_search(*args, 10 ** 9)

    return {
        "canonical labeling, all 1253 graphs <= 7 vertices": canon,
        "tree-depth, 40 random G(12, 0.35)": treedepth,
        "connected subsets, 30 random G(9, 0.4)": subsets,
        "K_4 / K_5 minor search, 30 random G(9, 0.4)": minors,
    }


def timed(fn, mod, repeat):
    runs = []
    for _ in range(repeat):
        start = time.perf_counter()
        fn(mod)
        runs.append(time.perf_counter() - start)
    return statistics.median(runs)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args()
    if fast is None:
        raise SystemExit("compiled extension not built; run `pip install -e . --no-build-isolation`")
    rows = []
    for name, fn in workloads(args.seed).items():
        t_pure = timed(fn, pure, args.repeat)
        t_fast = timed(fn, fast, args.repeat)
        rows.append({"workload": name, "python_s": round(t_pure, 4), "cython_s": round(t_fast, 4),
                     "speedup": round(t_pure / t_fast, 1) if t_fast else None})
    if args.json:
        for r in rows:
            print(json.dumps(r))
        return
    width = max(len(r["workload"]) for r in rows)
    print(f"{'workload':<{width}}  {'python s':>9}  {'cython s':>9}  {'speedup':>7}")
    for r in rows:
        print(f"{r['workload']:<{width}}  {r['python_s']:>9.4f}  {r['cython_s']:>9.4f}  {r['speedup']:>6}x")


if __name__ == "__main__":
    main()
