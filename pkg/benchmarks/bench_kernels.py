"""Compare the compiled and pure-Python kernels on the hot paths.

    python benchmarks/bench_kernels.py [--repeat 5]
"""
import argparse
import timeit

from modcong import _pykernels
from modcong.congruence import relation_set
from modcong.sl2zmod import cayley_table, gamma1, gamma_full

try:
    from modcong import _ckernels
except ImportError:
    _ckernels = None


def cases():
    big = gamma_full(24)
    odd = gamma1(12)
    rels = [[(0 if g == "L" else 1, e) for g, e in w] for _, w in relation_set(48).relators]
    table = cayley_table(48)

    def words(k):
        return lambda: [k.word_images(f, big.sigma_l.images, big.sigma_r.images) for f in rels]

    def relabel(k):
        return lambda: k.bfs_relabel(big.sigma_l.images, big.sigma_r.images)

    def oracle(k):
        return lambda: k.labels_consistent(table, odd.sigma_l.images, odd.sigma_r.images)

    return [
        (f"7 relators of N=48 on Gamma(24), degree {big.degree}", words),
        (f"canonical BFS relabel, degree {big.degree}", relabel),
        (f"oracle sweep |SL2(Z/48)|={len(table)}, degree {odd.degree}", oracle),
    ]


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    backends = [("python", _pykernels)] + ([("cython", _ckernels)] if _ckernels else [])
    print(f"{'case':58s} " + " ".join(f"{name:>10s}" for name, _ in backends) + "   speedup")
    for label, make in cases():
        times = []
        for _, k in backends:
            fn = make(k)
            fn()
            times.append(min(timeit.repeat(fn, number=1, repeat=args.repeat)))
        row = " ".join(f"{t * 1e3:8.1f}ms" for t in times)
        speed = f"{times[0] / times[-1]:8.1f}x" if len(times) > 1 else ""
        print(f"{label:58s} {row} {speed}")


if __name__ == "__main__":
    main()
