"""Distance lower bounds, the even-split instance, nullity
redistribution and the achievability classifier."""

import pytest

import lrcmat as L
from lrcmat.bounds import _max_small_union


def valid_excess_tuples(nmax):
    """Every valid tuple with b > a and r < k up to nmax."""
    for n in range(4, nmax + 1):
        for k in range(2, n):
            for r in range(1, k):
                for delta in range(2, n + 1):
                    if not L.validate_params(n, k, r, delta):
                        continue
                    if L.const_b(n, r, delta) > L.const_a(k, r):
                        yield n, k, r, delta


class TestOldBound:
    def test_known_values(self):
        assert L.old_lower_bound(7, 4, 2, 2) == 2
        assert L.old_lower_bound(10, 5, 3, 2) == 4

    def test_requires_excess(self):
        with pytest.raises(L.BadParams):
            L.old_lower_bound(9, 4, 2, 2)  # b = 0
        with pytest.raises(L.BadParams):
            L.old_lower_bound(6, 4, 2, 3)  # invalid tuple


class TestImprovedBound:
    def test_known_values(self):
        b = L.theorem14_lower_bound(7, 4, 2, 2)
        assert b.value == 2 and b.branch == "delta_covered"
        assert b.m == 2 and b.v == 1

    def test_branches_cover_both_cases(self):
        branches = {L.theorem14_lower_bound(n, k, r, delta).branch
                    for n, k, r, delta in valid_excess_tuples(16)}
        assert branches == {"delta_covered", "delta_excess"}

    def test_new_at_least_old_expression(self):
        # against the flat-excess-on-one-atom expression, all n <= 20
        count = 0
        for n, k, r, delta in valid_excess_tuples(20):
            b = L.const_b(n, r, delta)
            d_old = n - k + 1 - L.ceil_div(k, r) * (delta - 1) + (b - r)
            d_new = L.improved_bound_value(n, k, r, delta)
            m = L.ceil_div(n, r + delta - 1) - 1
            q = (r + delta - 1 - b) // m
            gap = q * (m - L.ceil_div(k, r) + 1)
            assert d_new - d_old >= gap >= 0
            assert L.theorem14_lower_bound(n, k, r, delta).value >= d_new
            count += 1
        assert count > 100

    def test_bound_never_exceeds_singleton(self):
        for n, k, r, delta in valid_excess_tuples(18):
            bound = L.theorem14_lower_bound(n, k, r, delta).value
            assert bound <= L.singleton_bound(n, k, r, delta)


class TestTheorem14Construction:
    def test_7_4_2_2_shape(self, t14_7_4):
        assert t14_7_4.n == 7
        assert sorted(a.size for a in t14_7_4.atoms) == [3, 4]
        assert L.params_from_matroid(t14_7_4) == (7, 4, 2)

    def test_10_5_3_2(self):
        built, d = L.theorem14_construction(10, 5, 3, 2)
        assert built.n == 10
        assert [a.size for a in built.atoms] == [5, 5]
        assert d == L.improved_bound_value(10, 5, 3, 2)

    def test_realizes_even_split_value_small_sweep(self):
        for n, k, r, delta in valid_excess_tuples(12):
            built, d = L.theorem14_construction(n, k, r, delta)
            assert built.n == n
            assert d == L.improved_bound_value(n, k, r, delta)
            assert d == L.oracle_d(built)

    def test_invalid_params_rejected(self):
        with pytest.raises(L.BadParams):
            L.theorem14_construction(9, 4, 2, 2)


class TestRedistribution:
    def make_lopsided(self):
        # 4 disjoint atoms of size 3; the first hoards the extra nullity
        atoms = tuple(L.AtomSpec(0b111 << (3 * i), r)
                      for i, r in enumerate((1, 2, 2, 2)))
        return L.theorem9(12, atoms, 3)

    def test_single_step_drops_one_excess(self):
        m0 = self.make_lopsided()
        m1 = L.redistribute_nullity(m0, 2)
        assert m1.n == m0.n and m1.k == m0.k
        excess0 = sum(max(a.nullity - 1, 0) for a in m0.atoms)
        excess1 = sum(max(a.nullity - 1, 0) for a in m1.atoms)
        assert excess1 == excess0 - 1

    def test_small_union_ceiling_preserved(self):
        m0 = self.make_lopsided()
        ceiling = _max_small_union(m0)
        m1 = L.redistribute_nullity(m0, 2)
        assert _max_small_union(m1) == ceiling

    def test_terminates_at_even_nullity(self):
        m0 = self.make_lopsided()
        final = L.equalize_nullity(m0, 2)
        assert all(a.nullity == 1 for a in final.atoms)
        assert L.d_from_cyclic_flats(final.lattice) == 9
        assert L.is_optimal_theorem9(final)

    def test_no_excess_raises(self):
        final = L.equalize_nullity(self.make_lopsided(), 2)
        with pytest.raises(L.NoExcessNullity):
            L.redistribute_nullity(final, 2)

    def test_step_count_is_total_excess(self):
        m0 = self.make_lopsided()
        steps = 0
        current = m0
        while True:
            try:
                current = L.redistribute_nullity(current, 2)
            except L.NoExcessNullity:
                break
            steps += 1
        assert steps == sum(a.nullity - 1 for a in m0.atoms)

    def test_overlapping_donor_pair_path(self):
        # no atom is below rank r, so a shared element must make room
        atoms = (L.AtomSpec(0b000001111, 2), L.AtomSpec(0b001110000, 2),
                 L.AtomSpec(0b111000000, 2))
        m0 = L.theorem9(9, atoms, 3)
        m1 = L.redistribute_nullity(m0, 2)
        assert m1.n == 9 and m1.k == 3
        assert max(a.nullity for a in m1.atoms) == 1

    def test_bad_precondition_small_union_ceiling(self):
        # the first two atoms together still fall short of k
        atoms = (L.AtomSpec(0b0000000111, 2), L.AtomSpec(0b0000111000, 2),
                 L.AtomSpec(0b1111000000, 3))
        m0 = L.theorem9(10, atoms, 5)
        with pytest.raises(L.PreconditionFailed):
            L.redistribute_nullity(m0, 2)

    def test_bad_precondition_too_few_atoms(self):
        m0 = L.theorem9(4, [L.AtomSpec(0b1111, 2)], 2)
        with pytest.raises(L.PreconditionFailed):
            L.redistribute_nullity(m0, 2)


class TestClassifier:
    def test_uniform_case(self):
        rep = L.classify_achievability(4, 2, 2, 2)
        assert rep.verdict == "yes" and rep.witness == "uniform"
        assert rep.singleton == 3

    def test_disjoint_case(self):
        rep = L.classify_achievability(6, 4, 2, 2)
        assert rep.verdict == "yes" and rep.witness == "disjoint"

    def test_shared_core_case(self):
        rep = L.classify_achievability(10, 5, 3, 2)
        assert rep.verdict == "yes" and rep.witness == "shared_core"

    def test_unknown_case(self):
        rep = L.classify_achievability(7, 4, 2, 2)
        assert rep.verdict == "unknown"
        assert rep.old_lower == 2 and rep.new_lower == 2
        assert rep.singleton == 3

    def test_never_no(self):
        for n in range(4, 14):
            for k in range(2, n):
                for r in range(1, k + 1):
                    for delta in range(2, n):
                        if not L.validate_params(n, k, r, delta):
                            continue
                        rep = L.classify_achievability(n, k, r, delta)
                        assert rep.verdict in ("yes", "unknown")
                        if rep.verdict == "yes":
                            m = rep.matroid
                            d = L.d_from_cyclic_flats(m.cyclic_flats())
                            assert d == rep.singleton

    def test_invalid_params(self):
        with pytest.raises(L.BadParams):
            L.classify_achievability(6, 4, 5, 2)


class TestLemma6Thresholds:
    def test_thresholds_hold_for_all_valid_tuples(self):
        for n in range(2, 21):
            for k in range(1, n):
                for r in range(1, k + 1):
                    for delta in range(2, n + 1):
                        if not L.validate_params(n, k, r, delta):
                            continue
                        groups = L.ceil_div(n, r + delta - 1)
                        ckr = L.ceil_div(k, r)
                        if L.const_b(n, r, delta) <= L.const_a(k, r):
                            assert groups >= ckr
                        else:
                            assert groups >= ckr + 1
