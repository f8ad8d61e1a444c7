"""Atom-based matroid builders: condition validation, built invariants
and the optimality predicate."""

import pytest

import lrcmat as L
from lrcmat.bitset import popcount
from lrcmat.constructions import _reduced_rank, _small_rank_index_sets


class TestAtomSpec:
    def test_rank_bounds_enforced(self):
        with pytest.raises(L.BadParams):
            L.AtomSpec(0b111, 0)
        with pytest.raises(L.BadParams):
            L.AtomSpec(0b111, 3)
        atom = L.AtomSpec(0b111, 2)
        assert atom.size == 3 and atom.nullity == 1


class TestConstruction1:
    def test_two_atom_example(self, two_atom):
        assert L.params_from_matroid(two_atom) == (6, 4, 2)
        assert set(two_atom.lattice.masks) == {0, 0b000111, 0b111000, 0b111111}

    def test_single_atom_spanning_ground_set(self):
        # the only small-rank union is empty, so this collapses to U(4,2)
        built = L.construction1(4, [L.AtomSpec(0b1111, 2)], 2)
        assert L.params_from_matroid(built) == (4, 2, 3)
        assert built.rank_table_agrees(L.Matroid.uniform(4, 2))

    def test_condition_i_cover(self):
        # atoms do not cover element 5
        atoms = [L.AtomSpec(0b000111, 2), L.AtomSpec(0b011000, 1)]
        with pytest.raises(L.ConditionViolated) as err:
            L.construction1(6, atoms, 3)
        assert any(label == "i" for label, _ in err.value.violations)

    def test_condition_i_trivial_union(self):
        # second atom adds nothing new
        atoms = [L.AtomSpec(0b0111, 2), L.AtomSpec(0b0011, 1), L.AtomSpec(0b1100, 1)]
        with pytest.raises(L.ConditionViolated) as err:
            L.construction1(4, atoms, 3)
        assert any(label == "i" for label, _ in err.value.violations)

    def test_condition_iii_rank_never_reached(self):
        atoms = [L.AtomSpec(0b000111, 2), L.AtomSpec(0b111000, 2)]
        with pytest.raises(L.ConditionViolated) as err:
            L.construction1(6, atoms, 5)
        assert any(label == "iii" for label, _ in err.value.violations)

    def test_condition_iv_overlap(self):
        # second atom overlaps the first in rank-many elements
        atoms = [L.AtomSpec(0b0111, 2), L.AtomSpec(0b1110, 2)]
        with pytest.raises(L.ConditionViolated) as err:
            L.construction1(4, atoms, 3)
        assert any(label == "iv" for label, _ in err.value.violations)

    def test_all_violations_reported(self):
        # misses condition (i) and (iii) at once
        atoms = [L.AtomSpec(0b000111, 2)]
        with pytest.raises(L.ConditionViolated) as err:
            L.construction1(6, atoms, 5)
        labels = {label for label, _ in err.value.violations}
        assert {"i", "iii"} <= labels

    def test_small_rank_sets_hereditary(self, t11_10_5):
        small = _small_rank_index_sets(t11_10_5.atoms, t11_10_5.k)
        family = set(small)
        for fs in small:
            for i in fs:
                assert fs - {i} in family


class TestTheorem9:
    def test_atom_covered_by_others(self):
        atoms = [L.AtomSpec(0b00111, 2), L.AtomSpec(0b11100, 2),
                 L.AtomSpec(0b01110, 2)]
        with pytest.raises(L.ConditionViolated) as err:
            L.theorem9(5, atoms, 4)
        assert any(label == "iv" for label, _ in err.value.violations)

    def test_reduced_rank_monotone_on_corpus(self, corpus):
        # strict growth of reduced rank along atom-set inclusion
        from itertools import combinations
        for _kind, m, _params in corpus[:60]:
            atoms = m.atoms
            idx = range(len(atoms))
            for size in range(len(atoms)):
                for small in combinations(idx, size):
                    for extra in idx:
                        if extra in small:
                            continue
                        bigger = tuple(sorted(small + (extra,)))
                        assert (_reduced_rank(atoms, small)
                                < _reduced_rank(atoms, bigger))


class TestGraphConstruction:
    def test_disjoint_pair_example(self):
        g = L.ConstructionGraph(2, {}, (0, 0), (0, 0), 4, 2, 2)
        built, params = L.graph_construction(g)
        assert (params.n, params.k, params.d) == (6, 4, 2)

    def test_three_cycle_rejected(self):
        edges = {frozenset((0, 1)): 1, frozenset((1, 2)): 1, frozenset((0, 2)): 1}
        g = L.ConstructionGraph(3, edges, (0, 0, 0), (0, 0, 0), 5, 3, 2)
        with pytest.raises(L.ConditionViolated) as err:
            L.graph_construction(g)
        assert any(label == "i" for label, _ in err.value.violations)

    def test_condition_vi_overshared(self):
        g = L.ConstructionGraph(2, {frozenset((0, 1)): 2}, (0, 0), (0, 0), 3, 2, 2)
        with pytest.raises(L.ConditionViolated) as err:
            L.graph_construction(g)
        assert any(label == "vi" for label, _ in err.value.violations)

    def test_formulas_against_oracle_on_corpus(self, corpus):
        for kind, m, params in corpus:
            if kind != "graph":
                continue
            assert params.n == m.n
            assert params.d == L.oracle_d(m)

    def test_shared_block_placement(self):
        g = L.ConstructionGraph(2, {frozenset((0, 1)): 1}, (0, 0), (0, 0), 4, 3, 2)
        built, params = L.graph_construction(g)
        assert params.n == 7
        assert popcount(built.atoms[0].mask & built.atoms[1].mask) == 1


class TestTheorem11:
    def test_10_5_3_2(self, t11_10_5):
        assert L.params_from_matroid(t11_10_5) == (10, 5, 5)
        # three atoms of size 4 sharing a single core element
        assert [a.size for a in t11_10_5.atoms] == [4, 4, 4]
        shared = (t11_10_5.atoms[0].mask & t11_10_5.atoms[1].mask)
        assert popcount(shared) == 1

    def test_achieves_bound_sweep(self):
        # every admissible tuple with n <= 14 builds and hits the bound
        count = 0
        for n in range(4, 15):
            for k in range(2, n):
                for r in range(1, k):
                    for delta in range(2, n):
                        if not L.validate_params(n, k, r, delta):
                            continue
                        if L.ceil_div(k, r) != 2:
                            continue
                        a = L.const_a(k, r)
                        b = L.const_b(n, r, delta)
                        if not (b > a >= 1):
                            continue
                        if L.ceil_div(n, r + delta - 1) < L.ceil_div(b, a) + 1:
                            continue
                        built = L.theorem11_construction(n, k, r, delta)
                        _, _, d = L.params_from_matroid(built)
                        assert d == L.singleton_bound(n, k, r, delta)
                        count += 1
        assert count > 0

    def test_b_not_above_a_rejected(self):
        with pytest.raises(L.PreconditionFailed):
            L.theorem11_construction(11, 5, 3, 2)  # a = b = 1

    def test_wrong_kr_rejected(self):
        with pytest.raises(L.PreconditionFailed):
            L.theorem11_construction(12, 7, 2, 2)  # ceil(k/r) = 4


class TestOptimalityPredicate:
    def test_matches_achieves_bound(self, two_atom, t11_10_5, t14_7_4):
        for m in (two_atom, t11_10_5, t14_7_4):
            r = m.max_atom_rank
            delta = m.min_atom_nullity + 1
            assert L.is_optimal_theorem9(m) == L.achieves_bound(m, r, delta)

    def test_broad_matroid_optimal(self):
        atoms = [L.AtomSpec(0b00001111, 3), L.AtomSpec(0b11110000, 3)]
        built = L.theorem9(8, atoms, 6)
        assert L.is_optimal_theorem9(built)

    def test_matches_achieves_bound_on_corpus(self, corpus):
        for _kind, m, _params in corpus[:80]:
            r = m.max_atom_rank
            delta = m.min_atom_nullity + 1
            # the equivalence leans on the structure conditions, so r < k
            if r >= m.k or not L.validate_params(m.n, m.k, r, delta):
                continue
            ok, _cover = L.has_locality(m, r, delta)
            if not ok:
                continue
            assert L.is_optimal_theorem9(m) == L.achieves_bound(m, r, delta)


class TestLocalitySubsetsOfAtoms:
    def test_atom_subsets_are_locality_sets(self, corpus):
        # every subset of an atom of size rank + delta - 1 qualifies
        for _kind, m, _params in corpus:
            if m.n > 10:
                continue
            delta = m.min_atom_nullity + 1
            for atom in m.atoms:
                target = atom.rank + delta - 1
                if target > atom.size:
                    continue
                from itertools import combinations
                from lrcmat.bitset import indices_of, mask_of
                for combo in combinations(indices_of(atom.mask), target):
                    s = mask_of(combo)
                    assert m.is_cyclic(s)
                    assert L.restricted_distance(m, s) >= delta
