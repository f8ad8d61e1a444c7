"""Explicit matroid builders from prescribed locality-set atoms.

All builders produce an :class:`AtomicMatroid`: a cyclic-flat matroid
that remembers the atom list it was built from, so optimality checks
and nullity redistribution can reason about the atoms directly.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .analysis import LrcParams, ceil_div, d_from_cyclic_flats, validate_params
from .bitset import check_ground_set, full_mask, indices_of, popcount
from .errors import BadParams, ConditionViolated, PreconditionFailed
from .lattice import CyclicFlatLattice
from .matroid import Matroid


@dataclass(frozen=True)
class AtomSpec:
    """A named subset with a prescribed rank (hence nullity)."""

    mask: int
    rank: int

    def __post_init__(self):
        if not 0 < self.rank < popcount(self.mask):
            raise BadParams(
                f"atom {indices_of(self.mask)} needs 0 < rank < size, got rank {self.rank}")

    @property
    def size(self) -> int:
        return popcount(self.mask)

    @property
    def nullity(self) -> int:
        return self.size - self.rank


class AtomicMatroid(Matroid):
    """A cyclic-flat matroid carrying the atoms that generated it."""

    atoms: tuple[AtomSpec, ...]

    def __init__(self, n: int, lattice: CyclicFlatLattice, atoms: tuple[AtomSpec, ...]):
        Matroid.__init__(self, n, "cyclic_flats", lattice)
        object.__setattr__(self, "atoms", tuple(atoms))

    @property
    def lattice(self) -> CyclicFlatLattice:
        return self.repr_data  # type: ignore[return-value]

    @property
    def max_atom_rank(self) -> int:
        return max(a.rank for a in self.atoms)

    @property
    def min_atom_nullity(self) -> int:
        return min(a.nullity for a in self.atoms)


def _union(atoms, index_set) -> int:
    u = 0
    for i in index_set:
        u |= atoms[i].mask
    return u


def _reduced_rank(atoms, index_set) -> int:
    """|F_I| minus the summed atom nullities."""
    return popcount(_union(atoms, index_set)) - sum(atoms[i].nullity for i in index_set)


def _small_rank_index_sets(atoms, k) -> list[frozenset[int]]:
    """Index sets whose every subset has reduced rank below k."""
    m = len(atoms)
    good: set[frozenset[int]] = set()
    for size in range(m + 1):
        for combo in combinations(range(m), size):
            fs = frozenset(combo)
            if _reduced_rank(atoms, fs) >= k:
                continue
            if all(fs - {i} in good for i in fs):
                good.add(fs)
    return sorted(good, key=lambda fs: (len(fs), sorted(fs)))


def construction1(n: int, atoms, k: int) -> AtomicMatroid:
    """Build the matroid whose cyclic flats are the small-rank atom
    unions together with the full set.

    The five input conditions are validated first and every violated
    one is reported (not just the first).
    """
    check_ground_set(n)
    atoms = tuple(atoms)
    m = len(atoms)
    if m == 0 or k < 1:
        raise BadParams("need at least one atom and a positive k")
    full = full_mask(n)
    violations: list[tuple[str, str]] = []

    for i, atom in enumerate(atoms):
        if atom.mask & ~full:
            raise BadParams(f"atom {i} extends outside the ground set")

    everything = _union(atoms, range(m))
    nontrivial = all(atoms[i].mask & ~_union(atoms, [j for j in range(m) if j != i])
                     for i in range(m))
    if everything != full or not nontrivial:
        violations.append(("i", "atoms must cover the ground set with a nontrivial union"))
    # (ii) is enforced by AtomSpec itself
    if all(_reduced_rank(atoms, combo) < k
           for size in range(m + 1) for combo in combinations(range(m), size)):
        violations.append(("iii", f"no atom union reaches reduced rank {k}"))

    small = set(_small_rank_index_sets(atoms, k))
    for fs in small:
        for j in range(m):
            if j not in fs:
                overlap = popcount(_union(atoms, fs) & atoms[j].mask)
                if overlap >= atoms[j].rank:
                    violations.append(
                        ("iv", f"atom {j} overlaps small-rank union {sorted(fs)} "
                               f"by {overlap} >= its rank"))
    for fs in small:
        for gs in small:
            merged = fs | gs
            if merged not in small and _reduced_rank(atoms, merged) < k:
                violations.append(
                    ("v", f"union of small-rank sets {sorted(fs)}, {sorted(gs)} "
                          f"escapes the family with reduced rank below {k}"))
    if violations:
        raise ConditionViolated(sorted(set(violations)))

    flats = [(_union(atoms, fs), _reduced_rank(atoms, fs)) for fs in small]
    flats.append((full, k))
    lattice = CyclicFlatLattice(n, flats)
    return AtomicMatroid(n, lattice, atoms)


def theorem9(n: int, atoms, k: int) -> AtomicMatroid:
    """The simpler four-condition builder; its instances always satisfy
    the five-condition form, so building is delegated there."""
    check_ground_set(n)
    atoms = tuple(atoms)
    m = len(atoms)
    if m == 0 or k < 1:
        raise BadParams("need at least one atom and a positive k")
    violations: list[tuple[str, str]] = []
    # (i) is enforced by AtomSpec
    if _union(atoms, range(m)) != full_mask(n):
        violations.append(("ii", "atoms must cover the ground set"))
    if _reduced_rank(atoms, range(m)) < k:
        violations.append(("iii", f"full union has reduced rank below {k}"))
    for j in range(m):
        rest = _union(atoms, [i for i in range(m) if i != j])
        if popcount(rest & atoms[j].mask) >= atoms[j].rank:
            violations.append(
                ("iv", f"atom {j} lacks rank-many elements of its own"))
    if violations:
        raise ConditionViolated(violations)
    return construction1(n, atoms, k)


@dataclass(frozen=True)
class ConstructionGraph:
    """Weighted 3-cycle-free graph describing how atoms share elements."""

    m: int
    edges: dict[frozenset[int], int]  # {i, j} -> shared-element count
    alpha: tuple[int, ...]            # per-vertex rank reduction
    beta: tuple[int, ...]             # per-vertex nullity surplus
    k: int
    r: int
    delta: int

    def __init__(self, m, edges, alpha, beta, k, r, delta):
        object.__setattr__(self, "m", int(m))
        norm = {}
        for e, g in dict(edges).items():
            pair = frozenset(int(v) for v in e)
            if len(pair) != 2 or not all(0 <= v < m for v in pair):
                raise BadParams(f"edge {sorted(e)} is not a pair of distinct vertices in range")
            norm[pair] = int(g)
        object.__setattr__(self, "edges", norm)
        object.__setattr__(self, "alpha", tuple(int(v) for v in alpha))
        object.__setattr__(self, "beta", tuple(int(v) for v in beta))
        object.__setattr__(self, "k", int(k))
        object.__setattr__(self, "r", int(r))
        object.__setattr__(self, "delta", int(delta))
        if len(self.alpha) != self.m or len(self.beta) != self.m:
            raise BadParams("alpha and beta must assign a value to every vertex")


def _graph_violations(g: ConstructionGraph) -> list[tuple[str, str]]:
    out = []
    if not (0 < g.r < g.k and g.delta >= 2):
        out.append(("params", "need 0 < r < k and delta >= 2"))
    for trio in combinations(range(g.m), 3):
        if all(frozenset(p) in g.edges for p in combinations(trio, 2)):
            out.append(("i", f"3-cycle on vertices {list(trio)}"))
    for i in range(g.m):
        if not 0 <= g.alpha[i] <= g.r - 1:
            out.append(("ii", f"alpha({i}) outside [0, r-1]"))
        if g.beta[i] < 0:
            out.append(("iii", f"beta({i}) negative"))
    for e, gamma in g.edges.items():
        if gamma < 1:
            out.append(("iv", f"edge {sorted(e)} has weight below 1"))
    if g.k > g.r * g.m - sum(g.alpha) - sum(g.edges.values()):
        out.append(("v", "k exceeds the total reduced rank"))
    for i in range(g.m):
        incident = sum(gamma for e, gamma in g.edges.items() if i in e)
        if g.r - g.alpha[i] <= incident:
            out.append(("vi", f"vertex {i} shares at least its whole rank"))
    return out


def graph_construction(g: ConstructionGraph) -> tuple[AtomicMatroid, LrcParams]:
    """Realize the graph as atoms and build the matroid.

    Shared blocks are allocated first (edges in sorted order), then
    each atom claims fresh indices in atom order, so the ground set is
    reproducible byte-for-byte. The closed-form size and distance are
    recomputed from the built matroid and must agree.
    """
    violations = _graph_violations(g)
    if violations:
        raise ConditionViolated(violations)

    sizes = [(g.r - g.alpha[i]) + (g.delta - 1 + g.beta[i]) for i in range(g.m)]
    atom_masks = [0] * g.m
    cursor = 0
    for e in sorted(g.edges, key=sorted):
        block = ((1 << g.edges[e]) - 1) << cursor
        cursor += g.edges[e]
        for v in e:
            atom_masks[v] |= block
    for i in range(g.m):
        need = sizes[i] - popcount(atom_masks[i])
        atom_masks[i] |= ((1 << need) - 1) << cursor
        cursor += need
    n = cursor

    atoms = tuple(AtomSpec(atom_masks[i], g.r - g.alpha[i]) for i in range(g.m))
    built = theorem9(n, atoms, g.k)

    n_formula = ((g.r + g.delta - 1) * g.m - sum(g.alpha) + sum(g.beta)
                 - sum(g.edges.values()))
    if n != n_formula:
        raise AssertionError(f"allocated {n} elements but the closed form gives {n_formula}")

    worst = 0
    for size in range(g.m + 1):
        for combo in combinations(range(g.m), size):
            inner = sum(gamma for e, gamma in g.edges.items() if e <= set(combo))
            if g.r * size - sum(g.alpha[i] for i in combo) - inner < g.k:
                penalty = (g.delta - 1) * size + sum(g.beta[i] for i in combo)
                worst = max(worst, penalty)
    d_formula = n - g.k + 1 - worst
    d_built = d_from_cyclic_flats(built.lattice)
    if d_built != d_formula:
        raise AssertionError(f"built distance {d_built} disagrees with closed form {d_formula}")
    return built, LrcParams(n, g.k, d_formula, g.r, g.delta)


def theorem11_construction(n: int, k: int, r: int, delta: int) -> AtomicMatroid:
    """Shared-core construction achieving the bound when ceil(k/r) = 2.

    Full-size atoms of rank r overlap only inside a core of size a; the
    first ceil(b/a) atoms contain the core entirely, the next one takes
    the leftover b - (ceil(b/a) - 1) * a core elements, and the rest
    are disjoint from it.
    """
    if not validate_params(n, k, r, delta):
        raise PreconditionFailed(f"invalid parameter tuple (n={n}, k={k}, r={r}, delta={delta})")
    s = r + delta - 1
    a = ceil_div(k, r) * r - k
    b = ceil_div(n, s) * s - n
    if ceil_div(k, r) != 2:
        raise PreconditionFailed(f"needs ceil(k/r) = 2, got {ceil_div(k, r)}")
    if not b > a:
        raise PreconditionFailed(f"needs b > a, got b={b}, a={a}")
    if not a >= ceil_div(k, r) - 1:
        raise PreconditionFailed(f"needs a >= ceil(k/r) - 1, got a={a}")
    groups = ceil_div(n, s)
    if groups < ceil_div(b, a) + 1:
        raise PreconditionFailed(
            f"needs ceil(n/(r+delta-1)) >= ceil(b/a) + 1, got {groups} < {ceil_div(b, a) + 1}")

    core = (1 << a) - 1
    cursor = a
    masks = []
    covered = ceil_div(b, a)
    partial = b - (covered - 1) * a
    for i in range(groups):
        if i < covered:
            shared = core
        elif i == covered:
            shared = (1 << partial) - 1
        else:
            shared = 0
        fresh = s - popcount(shared)
        masks.append(shared | (((1 << fresh) - 1) << cursor))
        cursor += fresh
    if cursor != n:
        raise AssertionError(f"allocated {cursor} elements for a ground set of {n}")
    atoms = tuple(AtomSpec(mk, r) for mk in masks)
    built = theorem9(n, atoms, k)
    d = d_from_cyclic_flats(built.lattice)
    want = n - k + 1 - (ceil_div(k, r) - 1) * (delta - 1)
    if d != want:
        raise AssertionError(f"construction distance {d} misses the bound {want}")
    return built


def is_optimal_theorem9(matroid: AtomicMatroid) -> bool:
    """Optimality test for an atom-built matroid: unions of ceil(k/r)
    atoms stay large and every atom's nullity is exactly delta - 1."""
    atoms = matroid.atoms
    k = matroid.k
    r = matroid.max_atom_rank
    delta = matroid.min_atom_nullity + 1
    ckr = ceil_div(k, r)
    a = ckr * r - k
    if any(atom.nullity != delta - 1 for atom in atoms):
        return False
    for combo in combinations(range(len(atoms)), ckr):
        if popcount(_union(atoms, combo)) < ckr * (r + delta - 1) - a:
            return False
    return True
