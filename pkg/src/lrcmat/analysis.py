"""LRC parameters as matroid invariants, locality discovery, and the
generalized Singleton bound with its structure-theorem consequences."""

from __future__ import annotations

from dataclasses import dataclass

from .bitset import full_mask, indices_of, iter_elements, masks_of_size, popcount
from .errors import (BadParams, ChainStalled, NoLocality, RankZero, TopNotE)
from .lattice import CyclicFlatLattice
from .matroid import Matroid, restricted_distance
from .report import ConditionResult, StructureReport


def ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def validate_params(n: int, k: int, r: int, delta: int) -> bool:
    """Admissibility of an (n, k, r, delta) tuple.

    Requires delta >= 2, 0 < r <= k, and enough room in the ground set:
    k <= n - ceil(k/r) * (delta - 1).
    """
    if n < 1 or k < 1 or r < 1 or delta < 2:
        return False
    if r > k:
        return False
    return k <= n - ceil_div(k, r) * (delta - 1)


def singleton_bound(n: int, k: int, r: int, delta: int) -> int:
    """The locality-aware upper bound on the minimum distance."""
    if not validate_params(n, k, r, delta):
        raise BadParams(f"invalid parameter tuple (n={n}, k={k}, r={r}, delta={delta})")
    return n - k + 1 - (ceil_div(k, r) - 1) * (delta - 1)


@dataclass(frozen=True)
class LrcParams:
    """The invariant tuple plus the slack constants derived from it."""

    n: int
    k: int
    d: int
    r: int
    delta: int

    def __post_init__(self):
        if not validate_params(self.n, self.k, self.r, self.delta):
            raise BadParams(f"invalid parameter tuple {self}")

    @property
    def a(self) -> int:
        """Rank slack of a union of ceil(k/r) largest-rank locality sets."""
        return ceil_div(self.k, self.r) * self.r - self.k

    @property
    def b(self) -> int:
        """Size slack against a matroid of disjoint full-size locality sets."""
        s = self.r + self.delta - 1
        return ceil_div(self.n, s) * s - self.n

    @property
    def k_max(self) -> int:
        return ceil_div(self.k, self.r) * self.r

    @property
    def n_max(self) -> int:
        s = self.r + self.delta - 1
        return ceil_div(self.n, s) * s

    def to_dict(self) -> dict:
        return {"n": self.n, "k": self.k, "d": self.d, "r": self.r,
                "delta": self.delta, "a": self.a, "b": self.b,
                "k_max": self.k_max, "n_max": self.n_max}


def params_from_matroid(matroid: Matroid) -> tuple[int, int, int]:
    """(n, k, d) of a matroid: size, full rank, smallest rank-dropping set."""
    n = matroid.n
    k = matroid.k
    if k == 0:
        raise RankZero("parameters are undefined for a rank-0 matroid")
    full = matroid.full
    for size in range(1, n + 1):
        for x in masks_of_size(n, size):
            if matroid.rank(full ^ x) < k:
                return n, k, size
    raise AssertionError("unreachable: positive-rank matroid has a spanning complement gap")


def d_from_cyclic_flats(lattice: CyclicFlatLattice) -> int:
    """Minimum distance from the lattice: n - k + 1 minus the largest
    coatom nullity."""
    n = lattice.n
    top = lattice.top
    if top != full_mask(n):
        raise TopNotE("the greatest cyclic flat must be the full ground set")
    k = lattice.rank_of(top)
    if k == 0:
        raise RankZero("distance is undefined for a rank-0 matroid")
    coatoms = [m for m in lattice.masks
               if m != top and not any(m & o == m and o & top == o and o != top and o != m
                                       for o in lattice.masks)]
    worst = max((popcount(m) - lattice.rank_of(m) for m in coatoms), default=0)
    return n - k + 1 - worst


@dataclass(frozen=True)
class LocalityCover:
    """A chosen locality set for every ground element."""

    r: int
    delta: int
    sets: dict[int, int]  # element -> cyclic-set mask containing it

    def distinct_sets(self) -> tuple[int, ...]:
        return tuple(sorted(set(self.sets.values()), key=lambda m: (popcount(m), indices_of(m))))

    def to_dict(self) -> dict:
        return {"r": self.r, "delta": self.delta,
                "sets": {str(x): list(indices_of(m)) for x, m in sorted(self.sets.items())}}


def _qualifying_sets(matroid: Matroid, r: int, delta: int):
    """Cyclic sets of size <= r + delta - 1 with restricted distance >= delta,
    ordered smallest-first then lexicographically."""
    out = []
    for size in range(1, r + delta):
        if size > matroid.n:
            break
        for s in masks_of_size(matroid.n, size):
            if matroid.is_cyclic(s) and restricted_distance(matroid, s) >= delta:
                out.append(s)
    return out


def has_locality(matroid: Matroid, r: int, delta: int) -> tuple[bool, LocalityCover | None]:
    """Whether every element sits in a small cyclic set of distance >= delta.

    Candidate sets are scanned by increasing size and each element gets
    the first one containing it, so covers are reproducible.
    """
    if delta < 2 or r < 1:
        raise BadParams("locality needs r >= 1 and delta >= 2")
    chosen: dict[int, int] = {}
    for s in _qualifying_sets(matroid, r, delta):
        for x in iter_elements(s):
            chosen.setdefault(x, s)
        if len(chosen) == matroid.n:
            break
    if len(chosen) < matroid.n:
        return False, None
    return True, LocalityCover(r, delta, chosen)


def achieves_bound(matroid: Matroid, r: int, delta: int) -> bool:
    """True iff the matroid has (r, delta) locality and its distance
    meets the bound exactly."""
    ok, _ = has_locality(matroid, r, delta)
    if not ok:
        raise NoLocality(f"matroid has no ({r}, {delta}) locality")
    n, k, d = params_from_matroid(matroid)
    return d == singleton_bound(n, k, r, delta)


# -- structure theorem ------------------------------------------------


def _has_nontrivial_union(sets: tuple[int, ...]) -> bool:
    for i, s in enumerate(sets):
        rest = 0
        for j, t in enumerate(sets):
            if i != j:
                rest |= t
        if s & ~rest == 0:
            return False
    return True


def check_structure_theorem(matroid: Matroid, cover: LocalityCover) -> StructureReport:
    """Evaluate every necessary condition for meeting the bound with r < k.

    Collections of cover sets are scanned up to size ceil(k/r); that
    size is the representative case for the conditions' large-j branch.
    """
    from itertools import combinations

    r, delta = cover.r, cover.delta
    n, k, _d = params_from_matroid(matroid)
    if r >= k:
        raise BadParams("the structure conditions apply only when r < k")
    ckr = ceil_div(k, r)
    results: list[ConditionResult] = []

    lattice = matroid.cyclic_flats()
    bottom = lattice.bottom
    results.append(ConditionResult("i", bottom == 0, (bottom,),
                                   "least cyclic flat must be empty"))

    distinct = cover.distinct_sets()
    ok_a, wit_a = True, ()
    ok_b, wit_b = True, ()
    for s in distinct:
        if matroid.nullity(s) != delta - 1:
            ok_a, wit_a = False, (s,)
        inner = frozenset(m for m in lattice.masks if m & s == m)
        if s not in lattice or inner != {0, s}:
            ok_b, wit_b = False, (s,)
    results.append(ConditionResult("ii.a", ok_a, wit_a,
                                   "every locality set has nullity delta - 1"))
    results.append(ConditionResult("ii.b", ok_b, wit_b,
                                   "every locality set is a cyclic flat with a trivial interior"))

    checks = {"iii.c": (True, ()), "iii.d": (True, ()), "iii.e": (True, ()),
              "iii.f": (True, ())}

    def fail(label: str, witness: tuple) -> None:
        if checks[label][0]:
            checks[label] = (False, witness)

    for j in range(1, ckr + 1):
        for combo in combinations(distinct, j):
            if not _has_nontrivial_union(combo):
                continue
            union = 0
            for s in combo:
                union |= s
            join = matroid.closure(union)
            eta = matroid.nullity(join)
            if j < ckr:
                if eta != j * (delta - 1):
                    fail("iii.c", combo)
                if join != union:
                    fail("iii.d", combo)
                if matroid.rank(join) != popcount(union) - j * (delta - 1):
                    fail("iii.e", combo)
            else:
                if eta != n - k or n - k < ckr * (delta - 1):
                    fail("iii.c", combo)
                if join != matroid.full:
                    fail("iii.d", combo)
                if matroid.rank(join) != k:
                    fail("iii.e", combo)
            # last-set overlap bound, checked with every member as the last
            for i, s in enumerate(combo):
                rest = 0
                for t in combo[:i] + combo[i + 1:]:
                    rest |= t
                if popcount(s & rest) > popcount(s) - delta:
                    fail("iii.f", combo)

    for label in ("iii.c", "iii.d", "iii.e", "iii.f"):
        ok, wit = checks[label]
        results.append(ConditionResult(label, ok, wit))
    return StructureReport(tuple(results))


# -- chains -----------------------------------------------------------


@dataclass(frozen=True)
class FlatChain:
    """An increasing chain of cyclic flats built from locality sets."""

    r: int
    delta: int
    ys: tuple[int, ...]       # Y_0 strictly increasing to the full set
    sets: tuple[int, ...]     # the locality set used at each step

    @property
    def m(self) -> int:
        return len(self.sets)

    def to_dict(self) -> dict:
        return {"r": self.r, "delta": self.delta,
                "flats": [list(indices_of(y)) for y in self.ys],
                "sets": [list(indices_of(s)) for s in self.sets]}


def find_locality_chain(matroid: Matroid, cover: LocalityCover) -> FlatChain:
    """Greedy chain: repeatedly close the union with the first cover set
    not already inside the current flat."""
    y = matroid.closure(0)  # least cyclic flat: the loops
    ys = [y]
    used = []
    candidates = cover.distinct_sets()
    while y != matroid.full:
        step = next((s for s in candidates if s & ~y), None)
        if step is None:
            raise ChainStalled("no locality set extends the chain; cover does not span")
        y = matroid.closure(y | step)
        ys.append(y)
        used.append(step)
    return FlatChain(cover.r, cover.delta, tuple(ys), tuple(used))


def check_chain_inequalities(matroid: Matroid, chain: FlatChain) -> bool:
    """The two chain consequences: d <= n - k + 1 - nullity(Y_{m-1})
    and m >= ceil(k/r)."""
    n, k, d = params_from_matroid(matroid)
    if chain.m < 1:
        return k == 0
    eta_pre_top = matroid.nullity(chain.ys[-2])
    return d <= n - k + 1 - eta_pre_top and chain.m >= ceil_div(k, chain.r)
