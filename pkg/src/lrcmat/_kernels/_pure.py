"""Pure-Python subset-scan kernels.

Reference implementations of the hot loops; the compiled module in
``_fast.pyx`` mirrors these signatures exactly. Everything here works
on full tables indexed by bitmask, so callers must keep n small enough
that a list of length 2**n is affordable.
"""

BACKEND = "pure"


def rank_table_from_flats(n, flat_masks, flat_ranks):
    """Rank of every subset from a cyclic-flat list.

    Uses the extension rule rank(X) = min over flats Z of
    rank(Z) + |X \\ Z|.
    """
    size = 1 << n
    table = [0] * size
    pairs = list(zip(flat_masks, flat_ranks))
    for x in range(size):
        best = x.bit_count()  # empty flat is not always present; |X| caps rank anyway
        for zmask, zrank in pairs:
            val = zrank + (x & ~zmask).bit_count()
            if val < best:
                best = val
        table[x] = best
    return table


def rank_table_from_independent(n, independent):
    """Rank of every subset given the family of independent masks.

    DP over masks: a dependent set's rank is the max over one-element
    deletions, which is exact because the family is hereditary.
    """
    size = 1 << n
    table = [0] * size
    indep = frozenset(independent)
    for x in range(1, size):
        if x in indep:
            table[x] = x.bit_count()
            continue
        best = 0
        rest = x
        while rest:
            low = rest & -rest
            val = table[x ^ low]
            if val > best:
                best = val
            rest ^= low
        table[x] = best
    return table


def max_deficient_size(table, n):
    """Largest |Y| with rank(Y) below the full rank, or -1 if none."""
    full = (1 << n) - 1
    k = table[full]
    best = -1
    for y in range(full + 1):
        if table[y] < k:
            c = y.bit_count()
            if c > best:
                best = c
    return best
