"""Cyclic-flat lattices: the (set, rank) pairs that determine a matroid."""

from __future__ import annotations

from dataclasses import dataclass, field

from .bitset import check_ground_set, indices_of, popcount
from .errors import BadParams, NotInLattice
from .report import AxiomReport


@dataclass(frozen=True)
class CyclicFlatLattice:
    """A family of subsets with prescribed ranks, ordered by inclusion.

    Stored canonically: members sorted by (size, index tuple). Whether
    the family actually satisfies the cyclic-flat axioms is checked by
    :func:`check_cyclic_flat_axioms`; construction only rejects
    duplicates and out-of-range data.
    """

    n: int
    flats: tuple[tuple[int, int], ...]  # (mask, rank) pairs
    _rank_of: dict = field(init=False, repr=False, compare=False, hash=False)

    def __init__(self, n: int, flats):
        check_ground_set(n)
        items = sorted(set((int(m), int(r)) for m, r in flats),
                       key=lambda p: (popcount(p[0]), indices_of(p[0])))
        if not items:
            raise BadParams("lattice must have at least one member")
        masks = [m for m, _ in items]
        if len(set(masks)) != len(masks):
            raise BadParams("duplicate set with conflicting ranks in lattice")
        for m, r in items:
            if m >> n:
                raise BadParams(f"lattice member {indices_of(m)} outside ground set of size {n}")
            if r < 0:
                raise BadParams("negative rank in lattice")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "flats", tuple(items))
        object.__setattr__(self, "_rank_of", dict(items))

    @property
    def masks(self) -> tuple[int, ...]:
        return tuple(m for m, _ in self.flats)

    def __contains__(self, mask: int) -> bool:
        return mask in self._rank_of

    def rank_of(self, mask: int) -> int:
        try:
            return self._rank_of[mask]
        except KeyError:
            raise NotInLattice(f"{indices_of(mask)} is not a member of the lattice") from None

    @property
    def bottom(self) -> int:
        """Least member; raises if the inclusion order has no unique minimum."""
        cands = [m for m in self.masks if all(m & o == m for o in self.masks)]
        if not cands:
            raise NotInLattice("lattice has no least element")
        return cands[0]

    @property
    def top(self) -> int:
        cands = [m for m in self.masks if all(m & o == o for o in self.masks)]
        if not cands:
            raise NotInLattice("lattice has no greatest element")
        return cands[0]

    def meet(self, x: int, y: int) -> int:
        """Greatest lower bound of two members, inside the lattice."""
        if x not in self or y not in self:
            raise NotInLattice("meet arguments must be lattice members")
        lower = [m for m in self.masks if m & x == m and m & y == m]
        for g in lower:
            if all(m & g == m for m in lower):
                return g
        raise NotInLattice(f"no meet of {indices_of(x)} and {indices_of(y)} in the lattice")

    def join(self, x: int, y: int) -> int:
        """Least upper bound of two members, inside the lattice."""
        if x not in self or y not in self:
            raise NotInLattice("join arguments must be lattice members")
        upper = [m for m in self.masks if m & x == x and m & y == y]
        for g in upper:
            if all(m & g == g for m in upper):
                return g
        raise NotInLattice(f"no join of {indices_of(x)} and {indices_of(y)} in the lattice")


def lattice_meet(lattice: CyclicFlatLattice, x: int, y: int) -> int:
    return lattice.meet(x, y)


def lattice_join(lattice: CyclicFlatLattice, x: int, y: int) -> int:
    return lattice.join(x, y)


def check_cyclic_flat_axioms(lattice: CyclicFlatLattice) -> AxiomReport:
    """Check the four lattice axioms that characterize cyclic flats.

    (Z0) closure under meet and join (every pair has a glb and lub in
    the family), (Z1) the least member has rank 0, (Z2) rank strictly
    increases and nullity strictly increases along proper inclusions,
    (Z3) a strengthened semimodular inequality over all pairs.
    """
    masks = lattice.masks
    meets = {}
    joins = {}
    for x in masks:
        for y in masks:
            try:
                meets[x, y] = lattice.meet(x, y)
                joins[x, y] = lattice.join(x, y)
            except NotInLattice:
                return AxiomReport(False, "Z0", (x, y), "pair has no meet or join in the family")
    try:
        bottom = lattice.bottom
    except NotInLattice:
        return AxiomReport(False, "Z0", (), "no least element")
    if lattice.rank_of(bottom) != 0:
        return AxiomReport(False, "Z1", (bottom,), "least element has nonzero rank")
    for x in masks:
        for y in masks:
            if x & y == x and x != y:  # x a proper subset of y
                dr = lattice.rank_of(y) - lattice.rank_of(x)
                dsz = popcount(y) - popcount(x)
                if not (0 < dr < dsz):
                    return AxiomReport(False, "Z2", (x, y),
                                       "rank step not strictly between 0 and the size step")
    for x in masks:
        for y in masks:
            lhs = lattice.rank_of(x) + lattice.rank_of(y)
            wedge = meets[x, y]
            rhs = (lattice.rank_of(joins[x, y]) + lattice.rank_of(wedge)
                   + popcount((x & y) & ~wedge))
            if lhs < rhs:
                return AxiomReport(False, "Z3", (x, y), "strengthened semimodularity fails")
    return AxiomReport(True)
