"""Shared fixtures: reference matroids, GF(2) linear-code helpers and a
deterministic corpus of constructed instances reused across suites."""

from __future__ import annotations

import itertools

import pytest

import lrcmat as L


# -- GF(2) helpers ----------------------------------------------------


def gf2_column_rank(columns: list[int]) -> int:
    """Rank of a set of GF(2) column vectors (ints, bit = row entry),
    by plain elimination."""
    pivots: list[int] = []
    for col in columns:
        v = col
        for p in pivots:
            v = min(v, v ^ p)
        if v:
            pivots.append(v)
    return len(pivots)


def gf2_code_from_rows(rows: list[int], n: int) -> L.BlockCode:
    """The binary linear code spanned by generator rows (ints, bit j =
    coordinate j)."""
    words = set()
    k = len(rows)
    for combo in range(1 << k):
        w = 0
        for i in range(k):
            if combo & (1 << i):
                w ^= rows[i]
        words.add(tuple((w >> j) & 1 for j in range(n)))
    return L.BlockCode(2, n, words)


def gf2_columns_of_rows(rows: list[int], n: int) -> list[int]:
    """Column vectors of the generator matrix whose rows are given."""
    return [sum(((rows[i] >> j) & 1) << i for i in range(len(rows)))
            for j in range(n)]


# -- reference matroids -----------------------------------------------


@pytest.fixture(scope="session")
def u42():
    return L.Matroid.uniform(4, 2)


@pytest.fixture(scope="session")
def two_atom():
    """Two disjoint atoms of size 3 and rank 2 with k=4: the smallest
    nontrivial optimal construction, an (n,k,d,r,delta) = (6,4,2,2,2)."""
    atoms = (L.AtomSpec(0b000111, 2), L.AtomSpec(0b111000, 2))
    return L.theorem9(6, atoms, 4)


@pytest.fixture(scope="session")
def t11_10_5():
    return L.theorem11_construction(10, 5, 3, 2)


@pytest.fixture(scope="session")
def t14_7_4():
    built, _d = L.theorem14_construction(7, 4, 2, 2)
    return built


# -- deterministic construction corpus --------------------------------


def _disjoint_theorem9_instances(limit: int):
    """Disjoint-atom builds from a fixed grid, first ``limit`` valid."""
    out = []
    for m in (2, 3):
        for sizes in itertools.product((3, 4, 5), repeat=m):
            n = sum(sizes)
            if n > 12:
                continue
            for ranks in itertools.product(*(range(1, s) for s in sizes)):
                masks = []
                cursor = 0
                for s in sizes:
                    masks.append(((1 << s) - 1) << cursor)
                    cursor += s
                atoms = tuple(L.AtomSpec(mk, rk) for mk, rk in zip(masks, ranks))
                for k in range(2, sum(ranks) + 1):
                    try:
                        built = L.theorem9(n, atoms, k)
                    except (L.ConditionViolated, L.BadParams):
                        continue
                    out.append(("theorem9", built, None))
                    if len(out) >= limit:
                        return out
    return out


def _graph_instances(limit: int):
    """Graph builds (overlapping atoms) from a fixed grid."""
    out = []
    edge_options = {
        2: ({}, {frozenset((0, 1)): 1}, {frozenset((0, 1)): 2}),
        3: ({}, {frozenset((0, 1)): 1}, {frozenset((0, 1)): 1, frozenset((1, 2)): 1}),
    }
    for m in (2, 3):
        for edges in edge_options[m]:
            for r in (2, 3):
                for delta in (2, 3):
                    for alpha in itertools.product((0, 1), repeat=m):
                        for beta in itertools.product((0, 1), repeat=m):
                            for k in range(r + 1, r * m + 1):
                                try:
                                    g = L.ConstructionGraph(m, edges, alpha, beta,
                                                            k, r, delta)
                                    built, params = L.graph_construction(g)
                                except (L.ConditionViolated, L.BadParams):
                                    continue
                                if params.n > 12:
                                    continue
                                out.append(("graph", built, params))
                                if len(out) >= limit:
                                    return out
    return out


def build_corpus():
    """At least 200 constructed instances with n <= 12, reproducible
    run to run: (kind, matroid, params-or-None) triples."""
    return _disjoint_theorem9_instances(130) + _graph_instances(120)


@pytest.fixture(scope="session")
def corpus():
    instances = build_corpus()
    assert len(instances) >= 200
    return instances
