from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from glbranch.core import GL0, CuspidalLabel, IrrRep
from glbranch.dsl import (
    DSLError,
    Session,
    format_value,
    parse_input,
    parse_multisegment,
    parse_rep,
    parse_segment,
    parse_statement,
    parse_unitary,
    parse_value,
)
from glbranch.unitary import SpehFactor, UnitaryRep

from support import HALF, R, S2, T, U, L, ms, multisegments, seg

PREAMBLE = """
rho R dim=1
rho S dim=2
rho T
rho U unitary
"""


@pytest.fixture
def session() -> Session:
    return parse_input(PREAMBLE)


def fresh() -> Session:
    return parse_input(PREAMBLE)


def test_binding_example(session):
    parse_statement("pi = L([1/2,9/2]@R + [7/2,13/2]@R)", session)
    assert session.bindings == {"pi": L((HALF, Fraction(9, 2)), (Fraction(7, 2), Fraction(13, 2)))}


def test_reversed_segment_reports_position(session):
    with pytest.raises(DSLError) as e:
        parse_segment("[3,1]@R", session)
    assert "b - a must be a non-negative integer" in str(e.value)
    assert e.value.column == 1


def test_z_tag_goes_through_involution(session):
    assert parse_rep("Z([0,1]@R)", session) == L((0, 0), (1, 1))


def test_point_shorthand(session):
    assert parse_segment("[5/2]@R", session) == seg(Fraction(5, 2), Fraction(5, 2))


@pytest.mark.parametrize("text", ["GL0", "L(0)", "L(GL0)"])
def test_trivial_representation(session, text):
    assert parse_rep(text, session) == GL0


def test_bare_multisegment_is_langlands(session):
    assert parse_rep("[0,1]@R + [1,2]@R", session) == L((0, 1), (1, 2))


def test_comments_and_blank_lines():
    s = parse_input("# header\n\nrho R  # a line\nx = L([0]@R)\n")
    assert s.bindings["x"] == L((0, 0))


class TestErrors:
    def test_undeclared_label(self, session):
        with pytest.raises(DSLError, match="undeclared label Q") as e:
            parse_segment("[0,1]@Q", session)
        assert e.value.column == 7

    def test_duplicate_label(self):
        with pytest.raises(DSLError, match="declared twice") as e:
            parse_input("rho R\nrho R dim=2")
        assert e.value.line == 2

    def test_duplicate_binding(self, session):
        parse_statement("x = GL0", session)
        with pytest.raises(DSLError, match="bound twice"):
            parse_statement("x = GL0", session)

    def test_syntax_error_position(self, session):
        with pytest.raises(DSLError) as e:
            parse_input("rho Q\npi = L([0,1]@R +)", session)
        assert (e.value.line, e.value.column) == (2, 17)
        assert "expected '['" in e.value.message

    def test_unexpected_character(self, session):
        with pytest.raises(DSLError, match="unexpected character '\\$'") as e:
            parse_rep("L([0,1]@R $)", session)
        assert e.value.column == 11

    def test_non_unitary_speh(self, session):
        with pytest.raises(DSLError, match="not unitary"):
            parse_unitary("speh(R, u=1, v=1)", session)

    def test_speh_needs_u_and_v(self, session):
        with pytest.raises(DSLError, match="needs u= and v="):
            parse_unitary("speh(U, u=1)", session)

    def test_bad_dim(self):
        with pytest.raises(DSLError, match="dim must be a positive integer"):
            parse_input("rho R dim=0")

    @pytest.mark.parametrize("text", ["rho P dual=Q\nrho Q dual=X", "rho P dual=Q\nrho Q dim=2 dual=P"])
    def test_inconsistent_dual(self, text):
        with pytest.raises(DSLError, match="inconsistent"):
            parse_input(text)

    def test_dual_may_be_declared_once_explicitly(self):
        s = parse_input("rho P dual=Q\nrho Q dual=P")
        assert s.labels["Q"].dual == s.labels["P"]
        with pytest.raises(DSLError, match="declared twice"):
            parse_statement("rho Q dual=P", s)

    def test_trailing_tokens(self, session):
        with pytest.raises(DSLError, match="expected end of input"):
            parse_multisegment("[0,1]@R [2]@R", session)


def test_dual_label_declared_implicitly():
    s = parse_input("rho P dim=2 dual=Q")
    assert s.labels["Q"] == CuspidalLabel("Q", 2, "P")
    assert parse_segment("[1,3]@P", s).theta() == parse_segment("[-3,-1]@Q", s)


def test_unitary_factors(session):
    u = parse_unitary("speh(U, u=2, v=1, alpha=1/4) x speh(U, u=1, v=3)", session)
    assert u == UnitaryRep.of([SpehFactor(U, 1, 3), SpehFactor(U, 2, 1, Fraction(1, 4))])
    assert parse_rep("speh(U, u=2, v=1)", session) == L((-HALF, HALF), label=U)


# -- round trips ---------------------------------------------------------------
@given(multisegments((R, S2, T), max_size=6))
def test_multisegment_round_trip(m):
    s = fresh()
    assert parse_multisegment(format_value(m), s) == m
    assert parse_value(format_value(IrrRep(m)), s) == IrrRep(m)


factors = st.builds(
    SpehFactor,
    st.just(U),
    st.integers(1, 4),
    st.integers(1, 4),
    st.sampled_from([Fraction(0), Fraction(1, 5), Fraction(1, 4), Fraction(1, 3)]),
)


@given(st.lists(factors, min_size=1, max_size=4))
def test_unitary_round_trip(fs):
    u = UnitaryRep.of(fs)
    assert parse_unitary(format_value(u), fresh()) == u


@given(st.sampled_from([R, S2, T, U, CuspidalLabel("P", 3, "Q", True)]))
def test_label_round_trip(label):
    s = Session()
    parse_statement(format_value(label), s)
    assert s.labels[label.id] == label


def test_format_examples():
    assert format_value(ms((0, 2), (1, 1))) == "[0,2]@R + [1,1]@R"
    assert format_value(ms()) == "0"
    assert format_value(None) == "0"
    assert format_value(GL0) == "GL0"
    assert format_value(L((-HALF, Fraction(5, 2)))) == "L([-1/2,5/2]@R)"
