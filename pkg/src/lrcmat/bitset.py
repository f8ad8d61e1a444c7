"""Subsets of {0, ..., n-1} as integer bitmasks.

All combinatorial code in this package passes subsets around as plain
ints. The helpers here convert between masks and index sequences and
iterate over subset families. Ground sets larger than MAX_GROUND_SET
are rejected up front so every mask fits in a machine word.
"""

from itertools import combinations
from typing import Iterable, Iterator

from .errors import BadParams

MAX_GROUND_SET = 64


def check_ground_set(n: int) -> None:
    if not isinstance(n, int) or n < 0:
        raise BadParams(f"ground set size must be a non-negative integer, got {n!r}")
    if n > MAX_GROUND_SET:
        raise BadParams(f"ground set size {n} exceeds the supported maximum {MAX_GROUND_SET}")


def full_mask(n: int) -> int:
    return (1 << n) - 1


def mask_of(indices: Iterable[int], n: int | None = None) -> int:
    """Build a mask from element indices, optionally range-checked against n."""
    mask = 0
    for i in indices:
        if i < 0 or (n is not None and i >= n):
            raise BadParams(f"element {i} outside ground set of size {n}")
        mask |= 1 << i
    return mask


def indices_of(mask: int) -> tuple[int, ...]:
    """Sorted element indices of a mask."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


def iter_elements(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def iter_subsets(mask: int) -> Iterator[int]:
    """All submasks of ``mask``, including 0 and ``mask`` itself."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def masks_of_size(n: int, size: int) -> Iterator[int]:
    """All masks over {0..n-1} with exactly ``size`` bits, ascending order."""
    for combo in combinations(range(n), size):
        yield mask_of(combo)


def popcount(mask: int) -> int:
    return mask.bit_count()
