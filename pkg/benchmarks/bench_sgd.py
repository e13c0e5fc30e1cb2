#!/usr/bin/env python3
"""Compare the compiled and pure-Python SGD kernels.

Both kernels run the same epochs on the same Swiss-roll graphs; the script
reports edge events per second and checks that the final coordinates are
bit-identical.

    python benchmarks/bench_sgd.py --n 2000 --epochs 20
"""

import argparse
import time

import numpy as np

from mane import _backend
from mane import datasets as dsm
from mane.embed import init_projection
from mane.graph import build_fuzzy_graph
from mane.initialization import project_init
from mane.kernel import fit_ab
from mane.optimize import OptimizerConfig, build_edge_schedule, optimize


def run(backend, emb, graphs, cfg, params):
    work = emb.copy()
    start = time.perf_counter()
    optimize(work, graphs, cfg, params, backend=backend)
    return work, time.perf_counter() - start


def main():
    parser = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument("--n", type=int, default=2000, help="Swiss roll points")
    parser.add_argument("--n-shared", type=int, default=400)
    parser.add_argument("--epochs", type=int, default=20)
    parser.add_argument("--repeats", type=int, default=3, help="timed runs of the compiled kernel")
    args = parser.parse_args()

    data = dsm.gen_swiss_roll(args.n, rng_seed=0)
    sets = dsm.extend_all(data, dsm.split_shared(data, args.n_shared, 2, 0))
    cfg = OptimizerConfig(n_epochs=args.epochs)
    graphs = [build_fuzzy_graph(ds.points, cfg.n_neighbors) for ds in sets]
    emb = project_init(sets, init_projection(sets))
    params = fit_ab(cfg.min_dist)
    events = int(build_edge_schedule(graphs, cfg.n_epochs).total_samples().sum())
    print(f"{args.n} points, {args.epochs} epochs, {events} positive events "
          f"({int(np.ceil(cfg.negative_sample_rate))} negative each)")

    py_coords, py_time = run("python", emb, graphs, cfg, params)
    print(f"python : {py_time:8.3f} s  {events / py_time:12.0f} events/s")
    if _backend.BACKEND != "cython":
        print("cython : not built")
        return
    times = []
    for _ in range(args.repeats):
        cy_coords, t = run("cython", emb, graphs, cfg, params)
        times.append(t)
    best = min(times)
    print(f"cython : {best:8.3f} s  {events / best:12.0f} events/s  (best of {args.repeats})")
    print(f"speedup: {py_time / best:.1f}x")
    same = np.array_equal(py_coords.coords, cy_coords.coords)
    print(f"identical coordinates: {same}")
    if not same:
        raise SystemExit(1)


if __name__ == "__main__":
    main()
