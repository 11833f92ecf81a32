"""Benchmark the compiled kernels against the pure-Python fallback.

Usage: python benchmarks/bench_kernels.py [--repeat N]

Workloads mirror what the acceptance suite leans on: exhaustive barrier
scans, toughness scans, deficiency scans, and blossom matching on 2-factor
gadgets.
"""

import argparse
import random
import time

from toughfactor import kernels
from toughfactor.generators import apollonian, connected_graph_catalog
from toughfactor.twofactor import _gadget


def _random_masks(rng, n, p):
    masks = [0] * n
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                masks[u] |= 1 << v
                masks[v] |= 1 << u
    return masks


def _workloads():
    rng = random.Random(12345)
    catalog7 = [g.adjacency_masks() for g in connected_graph_catalog(7)]
    randoms11 = [_random_masks(rng, 11, 0.4) for _ in range(30)]
    tri13 = [apollonian(13, s)[0].adjacency_masks() for s in range(20)]
    gadgets = []
    for s in range(15):
        g, _ = apollonian(14, 100 + s)
        nodes, adj, _ = _gadget(g)
        gadgets.append((nodes, adj))
    return {
        "min_delta catalog n=7 (853x)": (
            lambda impl: [impl.min_tutte_delta(m) for m in catalog7]
        ),
        "min_delta random n=11 (30x)": (
            lambda impl: [impl.min_tutte_delta(m) for m in randoms11]
        ),
        "biased_barrier random n=11 (30x)": (
            lambda impl: [impl.best_biased_barrier(m) for m in randoms11]
        ),
        "toughness apollonian n=13 (20x)": (
            lambda impl: [impl.toughness_scan(m) for m in tri13]
        ),
        "deficiency random n=11 (30x)": (
            lambda impl: [impl.deficiency_scan(m) for m in randoms11]
        ),
        "blossom 2-factor gadgets n=14 (15x)": (
            lambda impl: [impl.blossom_matching(nn, adj) for nn, adj in gadgets]
        ),
    }


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    backends = kernels.backends()
    if "compiled" not in backends:
        print("compiled extension not available; benchmarking pure only")
    workloads = _workloads()

    print(f"{'workload':<38} " + " ".join(f"{name:>12}" for name in backends) + "   speedup")
    for label, run in workloads.items():
        times = {}
        results = {}
        for name, impl in backends.items():
            best = float("inf")
            for _ in range(args.repeat):
                t0 = time.perf_counter()
                out = run(impl)
                best = min(best, time.perf_counter() - t0)
            times[name] = best
            results[name] = out
        if len(results) == 2:
            a, b = results["pure"], results["compiled"]
            agree = "ok" if _comparable(a) == _comparable(b) else "MISMATCH"
        else:
            agree = "-"
        cols = " ".join(f"{times[name] * 1e3:>10.1f}ms" for name in backends)
        speed = (
            f"{times['pure'] / times['compiled']:>7.1f}x  [{agree}]"
            if "compiled" in times
            else ""
        )
        print(f"{label:<38} {cols} {speed}")


def _comparable(out):
    # blossom mate arrays may differ between equally-sized matchings
    if out and isinstance(out[0], list):
        return [sum(1 for i, j in enumerate(m) if j > i) for m in out]
    return out


if __name__ == "__main__":
    main()
