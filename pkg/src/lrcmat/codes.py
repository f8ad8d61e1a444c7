"""Explicit block codes and the matroid they induce.

Codes are stored as explicit codeword sets so that projections of
arbitrary almost-affine codes are available; there is no generator
matrix compression. Alphabet-size integrality is tested with exact
integer arithmetic, never floating-point logarithms.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bitset import check_ground_set, full_mask, indices_of, popcount
from .errors import BadParams, NotAlmostAffine, SingletonCode
from .matroid import Matroid, restricted_distance


@dataclass(frozen=True)
class BlockCode:
    """A set of equal-length words over the alphabet {0..s-1}."""

    s: int
    n: int
    codewords: frozenset[tuple[int, ...]]

    def __init__(self, s: int, n: int, codewords):
        if s < 2:
            raise BadParams(f"alphabet size must be at least 2, got {s}")
        check_ground_set(n)
        words = frozenset(tuple(int(c) for c in w) for w in codewords)
        if not words:
            raise BadParams("a code needs at least one codeword")
        for w in words:
            if len(w) != n:
                raise BadParams(f"codeword {w} does not have length {n}")
            if any(not 0 <= c < s for c in w):
                raise BadParams(f"codeword {w} has symbols outside 0..{s - 1}")
        object.__setattr__(self, "s", s)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "codewords", words)

    def __len__(self) -> int:
        return len(self.codewords)


def project(code: BlockCode, x: int) -> BlockCode:
    """Projection onto the coordinates in ``x``, duplicates collapsed."""
    if x & ~full_mask(code.n):
        raise BadParams("projection coordinates outside the code length")
    cols = indices_of(x)
    words = {tuple(w[i] for i in cols) for w in code.codewords}
    return BlockCode(code.s, len(cols), words)


def _log_exact(value: int, base: int) -> int | None:
    """log_base(value) if it is a non-negative integer, else None."""
    e = 0
    while value > 1 and value % base == 0:
        value //= base
        e += 1
    return e if value == 1 else None


def is_almost_affine(code: BlockCode) -> bool:
    """True iff every projection's size is an integer power of s."""
    for x in range(1 << code.n):
        if _log_exact(len(project(code, x)), code.s) is None:
            return False
    return True


def induce_matroid(code: BlockCode) -> Matroid:
    """The matroid with rank(X) = log_s |C_X|."""
    table = []
    for x in range(1 << code.n):
        r = _log_exact(len(project(code, x)), code.s)
        if r is None:
            raise NotAlmostAffine(
                f"projection onto {indices_of(x)} has size {len(project(code, x))}, "
                f"not a power of {code.s}")
        table.append(r)
    return Matroid.from_rank_table(code.n, tuple(table), validate=False)


def hamming_distance(a: tuple[int, ...], b: tuple[int, ...]) -> int:
    return sum(1 for u, v in zip(a, b) if u != v)


def code_min_distance(code: BlockCode) -> int:
    """Minimum pairwise Hamming distance; needs at least two words."""
    words = sorted(code.codewords)
    if len(words) < 2:
        raise SingletonCode("minimum distance needs at least two codewords")
    return min(hamming_distance(a, b)
               for i, a in enumerate(words) for b in words[i + 1:])


def is_locality_set_of_code(code: BlockCode, s_mask: int, r: int, delta: int) -> bool:
    """Locality-set test: bounded size and projected distance at least delta.

    A projection with a single word trivially satisfies the distance
    requirement (every symbol is constant, hence recoverable).
    """
    if r < 1 or delta < 2:
        raise BadParams("locality needs r >= 1 and delta >= 2")
    if popcount(s_mask) > r + delta - 1:
        return False
    proj = project(code, s_mask)
    if len(proj) == 1:
        return True
    return code_min_distance(proj) >= delta


def projected_distance_via_matroid(code: BlockCode, s_mask: int) -> int:
    """Projected minimum distance computed from the induced matroid."""
    return restricted_distance(induce_matroid(code), s_mask)
