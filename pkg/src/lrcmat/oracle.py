"""Brute-force reference implementations.

Everything here recomputes its answer from first principles with plain
scans, deliberately sharing no logic with the formula-based code it is
used to check. Ranks are recovered from an independence family; for a
cyclic-flat matroid that family is derived from the defining property
that a set is independent exactly when no flat captures too much of it.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .bitset import (full_mask, indices_of, iter_subsets, masks_of_size,
                     popcount)
from .errors import BadParams, RankZero, TooLarge
from .matroid import CYCLIC_FLATS, INDEPENDENT_SETS, Matroid

MAX_D_N = 20
MAX_LOCALITY_N = 16
MAX_LAYOUT_N = 10


@dataclass(frozen=True)
class OracleVerdict:
    """Outcome of checking one claimed value against brute force."""

    subject: str
    expected: object
    actual: object
    witness: tuple = ()

    @property
    def ok(self) -> bool:
        return self.expected == self.actual

    def to_dict(self) -> dict:
        return {"subject": self.subject, "ok": self.ok,
                "expected": self.expected, "actual": self.actual,
                "witness": list(self.witness)}


def independence_family(matroid: Matroid) -> frozenset[int]:
    """The independent sets, recomputed without the rank machinery.

    For a cyclic-flat matroid, X is independent iff every flat Z has
    |X & Z| <= rank(Z). For a rank-table matroid the table itself is
    the primitive datum and is read directly.
    """
    n = matroid.n
    if matroid.repr_kind == INDEPENDENT_SETS:
        return matroid.repr_data  # type: ignore[return-value]
    if matroid.repr_kind == CYCLIC_FLATS:
        flats = list(matroid.repr_data.flats)  # type: ignore[union-attr]
        out = []
        for x in range(1 << n):
            if all(popcount(x & z) <= zr for z, zr in flats):
                out.append(x)
        return frozenset(out)
    table = matroid.repr_data
    return frozenset(x for x in range(1 << n) if table[x] == popcount(x))


def family_rank(family: frozenset[int], x: int) -> int:
    """Largest independent subset of x, found by direct scan."""
    best = 0
    for y in iter_subsets(x):
        if y in family and popcount(y) > best:
            best = popcount(y)
    return best


def oracle_d(matroid: Matroid) -> int:
    """Minimum distance by scanning erasure sets in increasing size.

    d is the size of the smallest set hitting every basis: once every
    maximum independent set loses an element, the rest cannot span.
    """
    if matroid.n > MAX_D_N:
        raise TooLarge(f"distance oracle is limited to n <= {MAX_D_N}")
    family = independence_family(matroid)
    k = max(popcount(y) for y in family)
    if k == 0:
        raise RankZero("distance is undefined for a rank-0 matroid")
    bases = [y for y in family if popcount(y) == k]
    n = matroid.n
    for size in range(1, n + 1):
        for x in masks_of_size(n, size):
            if not any(b & x == 0 for b in bases):
                return size
    raise AssertionError("unreachable: the full ground set hits every basis")


def oracle_locality(matroid: Matroid, r: int, delta: int) -> bool:
    """Exhaustive locality verdict: every element must lie in a small
    cyclic set whose restriction tolerates delta - 1 erasures."""
    if matroid.n > MAX_LOCALITY_N:
        raise TooLarge(f"locality oracle is limited to n <= {MAX_LOCALITY_N}")
    if r < 1 or delta < 2:
        raise BadParams("locality needs r >= 1 and delta >= 2")
    family = independence_family(matroid)
    n = matroid.n

    def covered(x: int) -> bool:
        for size in range(1, min(r + delta - 1, n) + 1):
            for s in masks_of_size(n, size):
                if not s & (1 << x):
                    continue
                rs = family_rank(family, s)
                if any(family_rank(family, s ^ (1 << e)) < rs
                       for e in indices_of(s)):
                    continue  # not cyclic
                if rs == 0:
                    return True
                # restriction tolerates any delta - 1 losses
                ok = all(family_rank(family, s & ~y) == rs
                         for dsize in range(1, delta)
                         for y in masks_of_size(n, dsize) if y & s == y)
                if ok:
                    return True
        return False

    return all(covered(x) for x in range(n))


# -- exhaustive layout search ----------------------------------------


@dataclass(frozen=True)
class LayoutResult:
    """Best distance over all admissible atom layouts."""

    n: int
    k: int
    r: int
    delta: int
    m: int
    best_d: int
    layout: tuple[tuple[tuple[int, ...], int], ...]  # (atom indices, rank) per atom
    layouts_tried: int

    def to_dict(self) -> dict:
        return {"n": self.n, "k": self.k, "r": self.r, "delta": self.delta,
                "m": self.m, "best_d": self.best_d,
                "layout": [{"atom": list(ixs), "rank": rk} for ixs, rk in self.layout],
                "layouts_tried": self.layouts_tried}


def _cell_compositions(total: int, cells: int, minima):
    """All ways to put ``total`` items into ``cells`` ordered cells with
    per-cell minima."""
    if cells == 1:
        if total >= minima[0]:
            yield (total,)
        return
    for first in range(minima[0], total + 1):
        for rest in _cell_compositions(total - first, cells - 1, minima[1:]):
            yield (first,) + rest


def _canonical_layout(cells: dict[frozenset[int], int], ranks: tuple[int, ...], m: int):
    """Layout key invariant under atom relabeling: minimum over all
    atom permutations of the (cell counts, ranks) signature."""
    from itertools import permutations

    best = None
    subsets = [frozenset(t) for size in range(1, m + 1)
               for t in combinations(range(m), size)]
    for perm in permutations(range(m)):
        sig = tuple(cells.get(frozenset(perm[i] for i in t), 0) for t in subsets) \
            + tuple(ranks[perm[i]] for i in range(m))
        if best is None or sig < best:
            best = sig
    return best


def exhaust_theorem9_layouts(n: int, k: int, r: int, delta: int, m: int) -> LayoutResult:
    """Try every atom layout with m atoms, up to relabeling of both
    elements and atoms, and report the largest distance any valid
    layout reaches.

    A layout is described by how many elements fall in each exact
    overlap cell (one cell per nonempty atom subset) plus each atom's
    rank; element labels are then assigned cell by cell, which covers
    every layout up to ground-set relabeling.
    """
    from .constructions import AtomSpec, theorem9
    from .errors import ConditionViolated

    if n > MAX_LAYOUT_N:
        raise TooLarge(f"layout search is limited to n <= {MAX_LAYOUT_N}")
    if m < 1 or k < 1 or r < 1 or delta < 2:
        raise BadParams("layout search needs m, k, r >= 1 and delta >= 2")

    subsets = [frozenset(t) for size in range(1, m + 1)
               for t in combinations(range(m), size)]
    # every atom needs rank-many private elements plus nullity >= delta - 1,
    # so singleton cells hold at least 1 element; other cells may be empty
    minima = [1 if len(t) == 1 else 0 for t in subsets]

    best_d = -1
    best_layout = ()
    tried = 0
    seen = set()
    for counts in _cell_compositions(n, len(subsets), minima):
        cells = {t: c for t, c in zip(subsets, counts)}
        sizes = [sum(c for t, c in cells.items() if i in t) for i in range(m)]
        if any(sz < delta for sz in sizes):
            continue
        rank_ranges = []
        for sz in sizes:
            lo, hi = 1, min(r, sz - (delta - 1))
            if hi < lo:
                break
            rank_ranges.append(range(lo, hi + 1))
        if len(rank_ranges) < m:
            continue
        from itertools import product
        for ranks in product(*rank_ranges):
            key = _canonical_layout(cells, ranks, m)
            if key in seen:
                continue
            seen.add(key)
            masks = [0] * m
            cursor = 0
            for t in subsets:
                block = ((1 << cells[t]) - 1) << cursor
                cursor += cells[t]
                for i in t:
                    masks[i] |= block
            try:
                built = theorem9(n, tuple(AtomSpec(masks[i], ranks[i])
                                          for i in range(m)), k)
            except (ConditionViolated, BadParams):
                continue
            tried += 1
            d = oracle_d(built)
            if d > best_d:
                best_d = d
                best_layout = tuple((indices_of(masks[i]), ranks[i]) for i in range(m))
    if best_d < 0:
        raise BadParams(f"no valid layout with m={m} atoms exists for "
                        f"(n={n}, k={k}, r={r}, delta={delta})")
    return LayoutResult(n, k, r, delta, m, best_d, best_layout, tried)


def verify_matroid(matroid: Matroid, r: int | None = None,
                   delta: int | None = None) -> list[OracleVerdict]:
    """Cross-check the formula-based answers against brute force."""
    from .analysis import d_from_cyclic_flats, has_locality, params_from_matroid

    verdicts = []
    _n, _k, d_claimed = params_from_matroid(matroid)
    verdicts.append(OracleVerdict("d", oracle_d(matroid), d_claimed))
    if matroid.repr_kind == CYCLIC_FLATS:
        verdicts.append(OracleVerdict(
            "d_from_cyclic_flats", oracle_d(matroid),
            d_from_cyclic_flats(matroid.repr_data)))  # type: ignore[arg-type]
    if r is not None and delta is not None:
        claimed, _cover = has_locality(matroid, r, delta)
        verdicts.append(OracleVerdict(
            f"locality(r={r}, delta={delta})",
            oracle_locality(matroid, r, delta), claimed))
    return verdicts
