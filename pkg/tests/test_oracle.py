from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from glbranch.core import EMPTY, GL0, IrrRep, Multisegment
from glbranch.derivative import Side, derivative_multi
from glbranch.oracle import (
    SearchBounds,
    brute_force_relevant,
    derivative_table,
    enumerate_multisegments,
    line_representations,
)
from glbranch.rdli import strong_rdli
from glbranch.relevance import certify, decide_relevant

from support import HALF, R, S2, L, ms

F = Fraction

EX1 = (L((HALF, F(9, 2)), (F(7, 2), F(13, 2))), L((0, 3), (3, 6)))
EX3 = (L((-HALF, F(5, 2)), (F(5, 2), F(11, 2)), (F(9, 2), F(11, 2))), L((0, 1), (1, 4), (7, 9)))
EX4 = (L((HALF, F(9, 2)), (F(7, 2), F(13, 2)), (F(11, 2), F(13, 2))), L((0, 3), (1, 2), (3, 6)))


class TestEnumeration:
    def test_single_point(self):
        got = list(enumerate_multisegments(SearchBounds(1, (0, 0), (R,))))
        assert sorted(got, key=lambda m: m.abs_length) == [EMPTY, ms((0, 0))]

    def test_two_points(self):
        got = set(enumerate_multisegments(SearchBounds(2, (0, 1), (R,))))
        expected = {EMPTY, ms((0, 0)), ms((1, 1)), ms((0, 1)), ms((0, 0), (0, 0)), ms((0, 0), (1, 1)), ms((1, 1), (1, 1))}
        assert got == expected

    def test_half_integer_window(self):
        got = set(enumerate_multisegments(SearchBounds(1, (-HALF, HALF), (R,))))
        assert got == {EMPTY, ms((-HALF, -HALF)), ms((HALF, HALF))}

    def test_both_residues(self):
        b = SearchBounds(1, (0, 1), (R,), (F(0), HALF))
        assert set(enumerate_multisegments(b)) == {EMPTY, ms((0, 0)), ms((1, 1)), ms((HALF, HALF))}

    def test_dimension_counts_against_budget(self):
        got = list(enumerate_multisegments(SearchBounds(2, (0, 1), (S2,))))
        assert len(got) == 3

    @pytest.mark.parametrize("budget, lo, hi", [(3, -1, 1), (4, 0, 2), (3, -HALF, F(3, 2))])
    def test_duplicate_free_and_bounded(self, budget, lo, hi):
        got = list(enumerate_multisegments(SearchBounds(budget, (lo, hi), (R, S2))))
        assert len(got) == len(set(got))
        for m in got:
            assert m.abs_length <= budget
            assert all(F(lo) <= s.a and s.b <= F(hi) for s in m)

    def test_line_representations(self):
        reps = line_representations(R, 0, 1, 0, 2)
        assert len(reps) == 7 and IrrRep(EMPTY) in reps


class TestDerivativeTable:
    def test_keys_are_derivatives(self):
        pi = L((0, 1), (1, 2))
        for side in Side:
            for tau, ms_ in derivative_table(pi, side).items():
                for m in ms_:
                    assert derivative_multi(pi, m, side) == IrrRep(tau)

    def test_identity_entry(self):
        pi = L((0, 2))
        assert derivative_table(pi, Side.R)[pi.m] == [EMPTY]


class TestBruteForce:
    def test_positive_example(self):
        pi, pi2 = EX1
        w = brute_force_relevant(pi, pi2)
        assert w is not None
        assert certify(pi, pi2, *w)
        assert decide_relevant(pi, pi2).relevant

    @pytest.mark.parametrize("pair", [EX3, EX4])
    def test_negative_examples(self, pair):
        assert brute_force_relevant(*pair) is None
        assert not decide_relevant(*pair).relevant

    def test_trivial(self):
        assert brute_force_relevant(GL0, GL0) == (EMPTY, EMPTY)

    def test_bounds_restrict_the_search(self):
        pi, pi2 = EX1
        tight = SearchBounds(6, (0, 7), (R,))
        w = brute_force_relevant(pi, pi2, tight)
        assert w is not None and w[0].abs_length <= 6 and w[1].abs_length <= 6
        assert brute_force_relevant(pi, pi2, SearchBounds(1, (0, 7), (R,))) is None

    @settings(max_examples=150, deadline=None)
    @given(
        st.lists(st.tuples(st.integers(-2, 2), st.integers(0, 2)), max_size=3),
        st.lists(st.tuples(st.integers(-2, 2), st.integers(0, 2)), max_size=3),
        st.sampled_from([F(0), HALF]),
    )
    def test_witness_lengths_match(self, a, b, shift):
        pi = IrrRep(Multisegment.of(ms((x + shift, x + shift + k)).segments[0] for x, k in a))
        pi2 = IrrRep(Multisegment.of(ms((x, x + k)).segments[0] for x, k in b))
        w = brute_force_relevant(pi, pi2)
        if w is None:
            return
        m, n = w
        c = pi.degree - m.abs_length
        assert c == pi2.degree - n.abs_length >= 0
        assert strong_rdli(m, n, pi.twist(HALF)).commutes
        assert derivative_multi(pi.twist(HALF), m, Side.R) == derivative_multi(pi2, n, Side.L)
