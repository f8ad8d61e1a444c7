"""Matroids over small ground sets, in any of three representations.

A matroid is held as its ground-set size plus one of: the family of
independent sets, a full rank table, or a cyclic-flat lattice. Rank
queries are representation-independent; whole-powerset operators
(circuits, flats, dual, ...) materialize a full rank table and are
therefore limited to ground sets where 2**n stays affordable.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import _kernels
from .bitset import (check_ground_set, full_mask, indices_of, iter_elements,
                     iter_subsets, popcount)
from .errors import BadParams, MissingSubset, TooLarge
from .lattice import CyclicFlatLattice, check_cyclic_flat_axioms
from .report import AxiomReport

INDEPENDENT_SETS = "independent_sets"
RANK_TABLE = "rank_table"
CYCLIC_FLATS = "cyclic_flats"

# 2**22 ints is the largest table we are willing to materialize.
MAX_TABLE_N = 22


def check_independence_axioms(n: int, family) -> AxiomReport:
    """Check the three independent-set axioms for a subset family.

    (i) the empty set belongs to the family, (ii) the family is closed
    under taking subsets, (iii) the exchange property.
    """
    check_ground_set(n)
    members = frozenset(int(m) for m in family)
    for m in members:
        if m >> n:
            return AxiomReport(False, "domain", (m,), "member outside the ground set")
    if 0 not in members:
        return AxiomReport(False, "i", (), "empty set missing from the family")
    for m in members:
        for x in iter_elements(m):
            if m ^ (1 << x) not in members:
                return AxiomReport(False, "ii", (m, m ^ (1 << x)),
                                   "family not closed under subsets")
    by_size: dict[int, list[int]] = {}
    for m in members:
        by_size.setdefault(popcount(m), []).append(m)
    for sx, xs in by_size.items():
        for sy, ys in by_size.items():
            if sx <= sy:
                continue
            for x in xs:
                for y in ys:
                    if not any(y | (1 << e) in members for e in iter_elements(x & ~y)):
                        return AxiomReport(False, "iii", (x, y), "exchange property fails")
    return AxiomReport(True)


def check_rank_axioms(n: int, table) -> AxiomReport:
    """Check bounds, monotonicity and semimodularity of a full rank table.

    ``table`` maps every subset mask to an integer (a sequence of
    length 2**n or a mapping). Raises :class:`MissingSubset` if any
    subset is absent. The semimodular scan is over all pairs, so keep
    n at hand-checkable scale.
    """
    check_ground_set(n)
    size = 1 << n
    if hasattr(table, "keys"):
        missing = [x for x in range(size) if x not in table]
        if missing:
            raise MissingSubset(f"rank table missing subset {indices_of(missing[0])}")
        tab = [table[x] for x in range(size)]
    else:
        if len(table) != size:
            raise MissingSubset(f"rank table has {len(table)} entries, expected {size}")
        tab = list(table)
    for x in range(size):
        if not 0 <= tab[x] <= popcount(x):
            return AxiomReport(False, "i", (x,), "rank outside [0, |X|]")
    for x in range(size):
        for e in range(n):
            if not x & (1 << e) and tab[x] > tab[x | (1 << e)]:
                return AxiomReport(False, "ii", (x, x | (1 << e)), "rank not monotone")
    for x in range(size):
        for y in range(x, size):
            if tab[x] + tab[y] < tab[x | y] + tab[x & y]:
                return AxiomReport(False, "iii", (x, y), "semimodular inequality fails")
    return AxiomReport(True)


@dataclass(frozen=True)
class Matroid:
    """Immutable matroid; all operations are pure queries."""

    n: int
    repr_kind: str
    repr_data: object

    # -- constructors -------------------------------------------------

    @classmethod
    def from_independent_sets(cls, n: int, family, validate: bool = True) -> "Matroid":
        check_ground_set(n)
        members = frozenset(int(m) for m in family)
        if validate:
            rep = check_independence_axioms(n, members)
            if not rep:
                raise BadParams(f"independent-set axioms fail: ({rep.axiom}) {rep.message}")
        m = cls(n, INDEPENDENT_SETS, members)
        return m

    @classmethod
    def from_rank_table(cls, n: int, table, validate: bool = True) -> "Matroid":
        check_ground_set(n)
        if hasattr(table, "keys"):
            table = [table[x] for x in range(1 << n)]
        tab = tuple(int(v) for v in table)
        if len(tab) != 1 << n:
            raise MissingSubset(f"rank table has {len(tab)} entries, expected {1 << n}")
        if validate:
            rep = check_rank_axioms(n, tab)
            if not rep:
                raise BadParams(f"rank axioms fail: ({rep.axiom}) {rep.message}")
        m = cls(n, RANK_TABLE, tab)
        object.__setattr__(m, "_table", tab)
        return m

    @classmethod
    def from_cyclic_flats(cls, n: int, lattice: CyclicFlatLattice, validate: bool = True) -> "Matroid":
        check_ground_set(n)
        if lattice.n != n:
            raise BadParams("lattice ground-set size disagrees with n")
        if validate:
            rep = check_cyclic_flat_axioms(lattice)
            if not rep:
                raise BadParams(f"cyclic-flat axioms fail: ({rep.axiom}) {rep.message}")
        return cls(n, CYCLIC_FLATS, lattice)

    @classmethod
    def uniform(cls, n: int, k: int) -> "Matroid":
        """The matroid whose independent sets are all sets of size <= k."""
        check_ground_set(n)
        if not 0 <= k <= n:
            raise BadParams(f"uniform matroid needs 0 <= k <= n, got k={k}, n={n}")
        table = tuple(min(popcount(x), k) for x in range(1 << n))
        return cls.from_rank_table(n, table, validate=False)

    # -- rank queries -------------------------------------------------

    @property
    def full(self) -> int:
        return full_mask(self.n)

    @property
    def k(self) -> int:
        return self.rank(self.full)

    def rank(self, x: int) -> int:
        if x & ~self.full:
            raise BadParams(f"subset {indices_of(x)} outside ground set of size {self.n}")
        if self.repr_kind == CYCLIC_FLATS:
            lat: CyclicFlatLattice = self.repr_data  # type: ignore[assignment]
            best = popcount(x)
            for zmask, zrank in lat.flats:
                val = zrank + popcount(x & ~zmask)
                if val < best:
                    best = val
            return best
        return self.rank_table()[x]

    def rank_table(self) -> tuple[int, ...]:
        """Full rank table (cached); requires an affordable 2**n."""
        table = getattr(self, "_table", None)
        if table is None:
            if self.n > MAX_TABLE_N:
                raise TooLarge(f"cannot materialize a rank table for n={self.n}")
            if self.repr_kind == INDEPENDENT_SETS:
                table = tuple(_kernels.rank_table_from_independent(self.n, self.repr_data))
            elif self.repr_kind == CYCLIC_FLATS:
                lat: CyclicFlatLattice = self.repr_data  # type: ignore[assignment]
                masks = [m for m, _ in lat.flats]
                ranks = [r for _, r in lat.flats]
                table = tuple(_kernels.rank_table_from_flats(self.n, masks, ranks))
            else:
                table = tuple(self.repr_data)  # type: ignore[arg-type]
            object.__setattr__(self, "_table", table)
        return table

    def nullity(self, x: int) -> int:
        return popcount(x) - self.rank(x)

    def is_independent(self, x: int) -> bool:
        return self.rank(x) == popcount(x)

    def closure(self, x: int) -> int:
        """All elements whose addition leaves the rank unchanged."""
        r = self.rank(x)
        out = x
        for e in range(self.n):
            if not x & (1 << e) and self.rank(x | (1 << e)) == r:
                out |= 1 << e
        return out

    # -- derived families ---------------------------------------------

    def independent_sets(self) -> frozenset[int]:
        if self.repr_kind == INDEPENDENT_SETS:
            return self.repr_data  # type: ignore[return-value]
        table = self.rank_table()
        return frozenset(x for x in range(1 << self.n) if table[x] == popcount(x))

    def is_circuit(self, x: int) -> bool:
        if x == 0 or self.rank(x) != popcount(x) - 1:
            return False
        return all(self.rank(x ^ (1 << e)) == popcount(x) - 1 for e in iter_elements(x))

    def circuits(self) -> frozenset[int]:
        """All minimal dependent sets."""
        table = self.rank_table()
        out = []
        for x in range(1, 1 << self.n):
            if table[x] == popcount(x) - 1 and all(
                    table[x ^ (1 << e)] == popcount(x) - 1 for e in iter_elements(x)):
                out.append(x)
        return frozenset(out)

    def is_cyclic(self, x: int) -> bool:
        r = self.rank(x)
        return all(self.rank(x ^ (1 << e)) == r for e in iter_elements(x))

    def cyclic_sets(self) -> frozenset[int]:
        """All unions of circuits (sets with no rank-dropping element)."""
        table = self.rank_table()
        return frozenset(
            x for x in range(1 << self.n)
            if all(table[x ^ (1 << e)] == table[x] for e in iter_elements(x)))

    def flats(self) -> frozenset[int]:
        return frozenset(x for x in range(1 << self.n) if self.closure(x) == x)

    def cyclic_flats(self) -> CyclicFlatLattice:
        members = self.cyclic_sets() & self.flats()
        return CyclicFlatLattice(self.n, [(m, self.rank(m)) for m in members])

    # -- operators ----------------------------------------------------

    def dual(self) -> "Matroid":
        """Matroid with rank(X) = rank(E \\ X) + |X| - rank(E)."""
        table = self.rank_table()
        k = table[self.full]
        dual_table = tuple(table[self.full ^ x] + popcount(x) - k
                           for x in range(1 << self.n))
        return Matroid.from_rank_table(self.n, dual_table, validate=False)

    def restriction(self, x: int) -> "Matroid":
        """Restriction to ``x``, re-indexed onto {0..|x|-1} in sorted order."""
        if x & ~self.full:
            raise BadParams("restriction target outside ground set")
        elems = indices_of(x)
        sub_n = len(elems)
        table = []
        for sub in range(1 << sub_n):
            mask = 0
            for j in range(sub_n):
                if sub & (1 << j):
                    mask |= 1 << elems[j]
            table.append(self.rank(mask))
        return Matroid.from_rank_table(sub_n, tuple(table), validate=False)

    def rank_table_agrees(self, other: "Matroid") -> bool:
        return self.n == other.n and self.rank_table() == other.rank_table()


def restricted_distance(matroid: Matroid, s: int) -> int:
    """Minimum distance of the restriction to ``s``.

    The smallest |X|, X inside ``s``, whose removal drops the rank of
    ``s``. Returns |s| + 1 when the restriction has rank 0 (no removal
    can drop the rank; every symbol is trivially recoverable).
    """
    r = matroid.rank(s)
    if r == 0:
        return popcount(s) + 1
    size = popcount(s)
    best = size  # removing all of s always drops positive rank
    for x in iter_subsets(s):
        if 0 < popcount(x) < best and matroid.rank(s & ~x) < r:
            best = popcount(x)
    return best
