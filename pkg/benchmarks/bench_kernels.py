"""Compare the compiled subset-scan kernels against the pure-Python
mirror on the operations that dominate analysis time.

Run directly: python benchmarks/bench_kernels.py [--n 18]
"""

from __future__ import annotations

import argparse
import time

from lrcmat._kernels import _pure

try:
    from lrcmat._kernels import _fast
except ImportError:
    _fast = None


def sample_flats(n: int):
    """Cyclic flats of a disjoint-atom matroid covering n elements."""
    from lrcmat import AtomSpec, theorem9

    groups = n // 4
    if groups < 2:
        raise SystemExit("need n >= 8")
    sizes = [4] * groups
    for i in range(n % 4):
        sizes[i % groups] += 1
    atoms = []
    cursor = 0
    for size in sizes:
        atoms.append(AtomSpec(((1 << size) - 1) << cursor, size - 1))
        cursor += size
    ranks_sorted = sorted(a.rank for a in atoms)
    k = ranks_sorted[0] + ranks_sorted[1]  # pairs span, singletons do not
    built = theorem9(n, atoms, k)
    flats = built.lattice.flats
    return [m for m, _ in flats], [r for _, r in flats]


def timed(fn, *args, repeat: int = 3):
    best = None
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn(*args)
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return out, best


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--n", type=int, default=18,
                        help="ground-set size (table has 2**n entries)")
    args = parser.parse_args()
    n = args.n
    masks, ranks = sample_flats(n)
    print(f"n = {n}, {len(masks)} flats, table size {1 << n}")

    rows = []
    table_pure, t_pure = timed(_pure.rank_table_from_flats, n, masks, ranks)
    rows.append(("rank_table_from_flats", t_pure, None))
    if _fast is not None:
        table_fast, t_fast = timed(_fast.rank_table_from_flats, n, masks, ranks)
        assert list(table_fast) == list(table_pure)
        rows[-1] = ("rank_table_from_flats", t_pure, t_fast)

    independent = frozenset(
        x for x in range(1 << n)
        if table_pure[x] == bin(x).count("1"))
    ind_pure, t_pure = timed(_pure.rank_table_from_independent, n, independent)
    assert list(ind_pure) == list(table_pure)
    rows.append(("rank_table_from_independent", t_pure, None))
    if _fast is not None:
        ind_fast, t_fast = timed(_fast.rank_table_from_independent, n, independent)
        assert list(ind_fast) == list(table_pure)
        rows[-1] = ("rank_table_from_independent", t_pure, t_fast)

    out_pure, t_pure = timed(_pure.max_deficient_size, table_pure, n)
    rows.append(("max_deficient_size", t_pure, None))
    if _fast is not None:
        out_fast, t_fast = timed(_fast.max_deficient_size, list(table_pure), n)
        assert out_fast == out_pure
        rows[-1] = ("max_deficient_size", t_pure, t_fast)

    print(f"{'kernel':32} {'pure (s)':>10} {'compiled (s)':>13} {'speedup':>8}")
    for name, tp, tf in rows:
        if tf is None:
            print(f"{name:32} {tp:10.4f} {'n/a':>13} {'n/a':>8}")
        else:
            print(f"{name:32} {tp:10.4f} {tf:13.4f} {tp / tf:7.1f}x")


if __name__ == "__main__":
    main()
