"""Lower bounds on the best achievable distance, the even-split graph
instance realizing the improved bound, nullity redistribution, and the
achievability classifier."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .analysis import (ceil_div, d_from_cyclic_flats, singleton_bound,
                       validate_params)
from .bitset import indices_of, iter_elements, popcount
from .constructions import (AtomicMatroid, AtomSpec, ConstructionGraph,
                            _reduced_rank, _small_rank_index_sets, _union,
                            graph_construction, is_optimal_theorem9, theorem9,
                            theorem11_construction)
from .errors import (BadParams, NoDonorPair, NoExcessNullity,
                     PreconditionFailed)
from .matroid import Matroid


def const_a(k: int, r: int) -> int:
    return ceil_div(k, r) * r - k


def const_b(n: int, r: int, delta: int) -> int:
    s = r + delta - 1
    return ceil_div(n, s) * s - n


def _require_excess(n, k, r, delta):
    if not validate_params(n, k, r, delta):
        raise BadParams(f"invalid parameter tuple (n={n}, k={k}, r={r}, delta={delta})")
    if const_b(n, r, delta) <= const_a(k, r):
        raise BadParams("these lower bounds apply only when b > a")


def old_lower_bound(n: int, k: int, r: int, delta: int) -> int:
    """The earlier two-case lower bound (extra nullity piled on one atom)."""
    _require_excess(n, k, r, delta)
    b = const_b(n, r, delta)
    base = n - k + 1 - ceil_div(k, r) * (delta - 1)
    return base if b <= r - 1 else base + (b - r)


def improved_bound_value(n: int, k: int, r: int, delta: int) -> int:
    """The even-split expression: what spreading the extra nullity over
    all atoms yields, regardless of which branch applies."""
    b = const_b(n, r, delta)
    ckr = ceil_div(k, r)
    m = ceil_div(n, r + delta - 1) - 1
    q, v = divmod(r + delta - 1 - b, m)
    return n - k + 1 - (ckr - 1) * (q + delta - 1) - min(v, ckr - 1)


@dataclass(frozen=True)
class ImprovedBound:
    """Branch and value of the improved lower bound."""

    value: int
    branch: str          # "delta_covered" or "delta_excess"
    even_split: int      # the split-expression value (what the graph instance realizes)
    m: int
    v: int


def theorem14_lower_bound(n: int, k: int, r: int, delta: int) -> ImprovedBound:
    """Improved lower bound for b > a and r < k.

    When delta - 1 is covered by the per-coatom share of redistributed
    nullity, the simpler n - k + 1 - ceil(k/r)(delta - 1) applies;
    otherwise the even-split expression does. The reported value is the
    stronger of the two.
    """
    _require_excess(n, k, r, delta)
    if r >= k:
        raise BadParams("the improved bound needs r < k")
    b = const_b(n, r, delta)
    ckr = ceil_div(k, r)
    m = ceil_div(n, r + delta - 1) - 1
    q, v = divmod(r + delta - 1 - b, m)
    even = improved_bound_value(n, k, r, delta)
    if delta - 1 <= (ckr - 1) * q + min(v, ckr - 1):
        return ImprovedBound(n - k + 1 - ckr * (delta - 1), "delta_covered", even, m, v)
    return ImprovedBound(even, "delta_excess", even, m, v)


def theorem14_construction(n: int, k: int, r: int, delta: int) -> tuple[AtomicMatroid, int]:
    """The even-split graph instance: one fewer atom than the disjoint
    layout, no shared elements, surplus nullity split as evenly as
    possible. Its distance equals the even-split expression exactly."""
    _require_excess(n, k, r, delta)
    if r >= k:
        raise BadParams("the construction needs r < k")
    b = const_b(n, r, delta)
    m = ceil_div(n, r + delta - 1) - 1
    q, v = divmod(r + delta - 1 - b, m)
    beta = tuple(q + 1 if i < v else q for i in range(m))
    graph = ConstructionGraph(m, {}, (0,) * m, beta, k, r, delta)
    built, params = graph_construction(graph)
    if params.n != n:
        raise AssertionError(f"graph instance has {params.n} elements, wanted {n}")
    expected = improved_bound_value(n, k, r, delta)
    if params.d != expected:
        raise AssertionError(
            f"graph instance distance {params.d} misses the even-split value {expected}")
    return built, params.d


# -- nullity redistribution -------------------------------------------


def _max_small_union(matroid: AtomicMatroid) -> int:
    sets = _small_rank_index_sets(matroid.atoms, matroid.k)
    return max(len(fs) for fs in sets)


def redistribute_nullity(matroid: AtomicMatroid, delta: int | None = None) -> AtomicMatroid:
    """One redistribution step: move a surplus-nullity element out of
    its atom, keeping the ground set and the small-union ceiling fixed.

    Deterministic choices: the lowest-indexed atom with surplus
    nullity donates its lowest-indexed non-shared element; an
    under-rank atom absorbs it if one exists, otherwise the first
    intersecting atom pair frees a slot.
    """
    atoms = list(matroid.atoms)
    m = len(atoms)
    k = matroid.k
    r = matroid.max_atom_rank
    if delta is None:
        delta = matroid.min_atom_nullity + 1
    target = delta - 1

    ckr = ceil_div(k, r)
    if _max_small_union(matroid) != ckr - 1:
        raise PreconditionFailed("largest small-rank atom union must have ceil(k/r) - 1 atoms")
    if m < ceil_div(matroid.n, r + delta - 1):
        raise PreconditionFailed("needs at least ceil(n / (r + delta - 1)) atoms")

    u = next((i for i, a in enumerate(atoms) if a.nullity > target), None)
    if u is None:
        raise NoExcessNullity("every atom already has the minimum nullity")

    others = _union(atoms, [i for i in range(m) if i != u])
    x = next((e for e in iter_elements(atoms[u].mask) if not others & (1 << e)), None)
    if x is None:
        raise AssertionError("atom with surplus nullity has no private element")
    atoms[u] = AtomSpec(atoms[u].mask ^ (1 << x), atoms[u].rank)

    j = next((i for i, a in enumerate(atoms) if a.rank < r), None)
    if j is not None:
        atoms[j] = AtomSpec(atoms[j].mask | (1 << x), atoms[j].rank + 1)
    else:
        pair = next((p for p in combinations(range(m), 2)
                     if atoms[p[0]].mask & atoms[p[1]].mask), None)
        if pair is None:
            raise NoDonorPair("no intersecting atom pair; a precondition must be broken")
        p, q = pair
        y = min(iter_elements(atoms[p].mask & atoms[q].mask))
        atoms[p] = AtomSpec((atoms[p].mask ^ (1 << y)) | (1 << x), atoms[p].rank)

    return theorem9(matroid.n, tuple(atoms), k)


def equalize_nullity(matroid: AtomicMatroid, delta: int | None = None) -> AtomicMatroid:
    """Apply redistribution steps until every atom's nullity is minimal."""
    if delta is None:
        delta = matroid.min_atom_nullity + 1
    current = matroid
    while any(a.nullity > delta - 1 for a in current.atoms):
        current = redistribute_nullity(current, delta)
    return current


# -- achievability ----------------------------------------------------


@dataclass(frozen=True)
class BoundReport:
    """Everything known about the best distance at one parameter tuple."""

    n: int
    k: int
    r: int
    delta: int
    singleton: int
    old_lower: int | None
    new_lower: int | None
    verdict: str                 # "yes" or "unknown"
    witness: str | None = None   # construction id backing a yes
    matroid: Matroid | None = None
    reason: str = ""

    def to_dict(self) -> dict:
        return {
            "n": self.n, "k": self.k, "r": self.r, "delta": self.delta,
            "a": const_a(self.k, self.r), "b": const_b(self.n, self.r, self.delta),
            "singleton": self.singleton,
            "old_lower": self.old_lower, "new_lower": self.new_lower,
            "verdict": self.verdict, "witness": self.witness, "reason": self.reason,
        }


def _disjoint_witness(n: int, k: int, r: int, delta: int) -> AtomicMatroid:
    """Disjoint atoms with minimal nullity, sizes as equal as possible."""
    groups = ceil_div(n, r + delta - 1)
    base, extra = divmod(n, groups)
    sizes = [base + 1 if i < extra else base for i in range(groups)]
    cursor = 0
    atoms = []
    for size in sizes:
        atoms.append(AtomSpec(((1 << size) - 1) << cursor, size - (delta - 1)))
        cursor += size
    return theorem9(n, tuple(atoms), k)


def classify_achievability(n: int, k: int, r: int, delta: int) -> BoundReport:
    """Decide whether the bound is attainable at this tuple.

    A "yes" always carries a verified witness matroid. "No" is never
    claimed: the known non-achievability arguments are not reproduced
    here, so everything else is reported as unknown with both lower
    bounds attached.
    """
    if not validate_params(n, k, r, delta):
        raise BadParams(f"invalid parameter tuple (n={n}, k={k}, r={r}, delta={delta})")
    bound = singleton_bound(n, k, r, delta)
    a, b = const_a(k, r), const_b(n, r, delta)

    def verified(witness_id: str, matroid: Matroid) -> BoundReport:
        d = d_from_cyclic_flats(matroid.cyclic_flats())
        if d != bound:
            raise AssertionError(f"{witness_id} witness has distance {d}, bound is {bound}")
        return BoundReport(n, k, r, delta, bound, None, None, "yes", witness_id, matroid)

    if r == k:
        # uniform witness straight from its lattice {empty, E}; a full
        # rank table would cost 2**n for sweep-sized n
        from .bitset import full_mask
        from .lattice import CyclicFlatLattice
        lattice = CyclicFlatLattice(n, [(0, 0), (full_mask(n), k)])
        return verified("uniform", Matroid.from_cyclic_flats(n, lattice, validate=False))
    if a >= b:
        matroid = _disjoint_witness(n, k, r, delta)
        if not is_optimal_theorem9(matroid):
            raise AssertionError("disjoint witness unexpectedly fails the optimality test")
        return verified("disjoint", matroid)
    try:
        return verified("shared_core", theorem11_construction(n, k, r, delta))
    except PreconditionFailed:
        pass
    old = old_lower_bound(n, k, r, delta)
    new = theorem14_lower_bound(n, k, r, delta).value
    return BoundReport(n, k, r, delta, bound, old, new, "unknown",
                       reason="no known construction reaches the bound here")
