"""Benchmark: compiled vs pure-Python interval-partition kernel.

Run with:  python3 benchmarks/bench_intervals.py
"""

import time

from stanleydec import _intervals_py, ring, solver
from stanleydec.ring import MonomialIdeal, RingContext

try:
    from stanleydec import _intervals_cy
except ImportError:
    _intervals_cy = None


def instances():
    ctx3 = RingContext(3)
    yield "maximal ideal, n=3, g=(2,2,2)", ring.ideal(
        ctx3, (2, 0, 0), (0, 2, 0), (0, 0, 2), (1, 1, 0), (0, 1, 1), (1, 0, 1)
    ), MonomialIdeal(ctx3)
    yield "squarefree, n=4", ring.ideal(
        RingContext(4), (1, 1, 0, 0), (0, 1, 1, 0), (0, 0, 1, 1), (1, 0, 0, 1)
    ), MonomialIdeal(RingContext(4))
    ctx4 = RingContext(4)
    yield "mixed degrees, n=4", ring.ideal(
        ctx4, (2, 1, 0, 0), (0, 2, 1, 0), (0, 0, 2, 1), (1, 0, 0, 2)
    ), ring.ideal(ctx4, (2, 2, 2, 2))


def run(kernel, poset):
    best = None
    t0 = time.perf_counter()
    for k in range(poset.context.n, -1, -1):
        status, intervals, _ = kernel.find_partition(
            list(poset.elements), poset.bound, k, 10**9
        )
        if status == "found":
            best = (k, intervals)
            break
    return time.perf_counter() - t0, best


def main():
    print(f"{'instance':36s} {'elems':>5s} {'py (s)':>10s} {'cy (s)':>10s} {'speedup':>8s}")
    for name, I, J in instances():
        poset = solver.build_characteristic_poset(I, J)
        t_py, res_py = run(_intervals_py, poset)
        if _intervals_cy is None:
            print(f"{name:36s} {len(poset.elements):5d} {t_py:10.4f} {'n/a':>10s}")
            continue
        t_cy, res_cy = run(_intervals_cy, poset)
        assert res_py == res_cy, "kernels disagree on %s" % name
        print(
            f"{name:36s} {len(poset.elements):5d} {t_py:10.4f} {t_cy:10.4f} "
            f"{t_py / t_cy:7.1f}x"
        )


if __name__ == "__main__":
    main()
