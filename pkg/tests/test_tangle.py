"""Tangle word parsing, typing, evaluation, closures, and invariant values."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from vtknot import linalg as la
from vtknot import modules as mo
from vtknot import ratfield as rf
from vtknot import tangle as tg

M1 = mo.rank1_simple(1)


def test_parse_and_boundary_types():
    w = tg.parse("up * coev ; qtr * up")
    assert w.source == ("+",)
    assert w.target == ("+",)
    x = tg.parse("xp")
    assert x.source == ("+", "+") and x.target == ("+", "+")
    assert tg.parse("ev").source == ("-", "+")
    assert tg.parse("qtr").source == ("+", "-")
    assert tg.parse("coev").target == ("-", "+")
    assert tg.parse("coqtr").target == ("+", "-")


def test_parse_rejects_bad_words():
    with pytest.raises(tg.TangleError) as info:
        tg.parse("up * spam ; qtr")
    assert "spam" in str(info.value)
    assert "row 1, slot 2" in str(info.value)
    with pytest.raises(tg.TangleError) as info:
        tg.parse("qtr ; up")
    assert "()" in str(info.value) and "(+)" in str(info.value)


def test_compose_and_tensor():
    assert tg.compose(tg.parse("qtr * up"), tg.parse("up * coev")) == tg.parse(
        "up * coev ; qtr * up"
    )
    both = tg.tensorw(tg.parse("up"), tg.parse("dn"))
    assert both.source == ("+", "-") and both.target == ("+", "-")
    with pytest.raises(tg.TangleError):
        tg.compose(tg.parse("up"), tg.parse("qtr"))
    # the shorter factor is padded with identity rows on its boundary
    padded = tg.tensorw(tg.parse("up"), tg.parse("xp ; xm"))
    assert len(padded.rows) == 2
    assert padded.rows[1][0] == "up"


def test_closure_shapes():
    assert tg.closure(tg.parse("up")) == tg.parse("coqtr ; up * dn ; qtr")
    two = tg.closure(tg.parse("xp"))
    assert two.source == () and two.target == ()
    with pytest.raises(tg.TangleError):
        tg.closure(tg.parse("dn"))
    with pytest.raises(tg.TangleError):
        tg.closure(tg.parse("up * coev"))


def test_functor_identity_and_scalars():
    got = tg.functor_T(tg.parse("up * coev ; qtr * up"), M1)
    assert la.mat_eq(got, la.identity(2))
    loop = tg.functor_T(tg.parse("coqtr ; qtr"), M1)
    assert rf.eq(loop[0][0], rf.parse("v + v^-1"))
    xp = tg.functor_T(tg.parse("xp"), M1)
    assert rf.eq(xp[0][0], rf.parse("v"))


def test_invariant_unknot_and_kinks():
    want = rf.parse("v + v^-1")
    assert rf.eq(tg.invariant("unknot", M1), want)
    assert rf.eq(tg.invariant("xp", M1), want)
    assert rf.eq(tg.invariant("xm", M1), want)


def test_invariant_trefoil_and_mirror():
    tre = tg.invariant("trefoil", M1)
    mir = tg.invariant("xm ; xm ; xm", M1)
    assert rf.eq(tre, rf.parse("v + v^3 + v^5 - v^9"))
    assert not rf.eq(tre, rf.parse("v + v^-1"))
    assert rf.eq(mir, rf.bar(tre))
    assert not rf.eq(mir, tre)


def test_invariant_hopf_and_figure8():
    assert rf.eq(tg.invariant("hopf", M1), rf.parse("v^6 + v^4 + v^2 + 1"))
    f8 = tg.invariant("figure8", M1)
    assert rf.eq(f8, rf.bar(f8))
    assert rf.eq(f8, rf.parse("v^5 + v^-5"))


def test_rank1_invariants_are_t_free_laurent():
    for name in tg.BUILTINS:
        val = tg.invariant(name, M1)
        assert rf.is_laurent(val)
        assert rf.eq(val, rf.bar_t(val))


_POOL = (
    "up",
    "dn",
    "xp",
    "xm",
    "up * up",
    "up * dn",
    "xp ; xm",
    "xp * up ; up * xm",
    "up * coev ; qtr * up",
    "coqtr ; up * dn ; qtr",
    "up * coqtr ; xp * dn ; up * qtr",
    "coev * up ; dn * xp",
)


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(_POOL), st.sampled_from(_POOL))
def test_functor_is_strict_on_tensor(ta, tb):
    # identity padding of the shorter factor keeps this a plain kron
    a, b = tg.parse(ta), tg.parse(tb)
    got = tg.functor_T(tg.tensorw(a, b), M1)
    assert la.mat_eq(got, la.kron(tg.functor_T(a, M1), tg.functor_T(b, M1)))


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(_POOL), st.sampled_from(_POOL))
def test_functor_is_strict_on_composition(ta, tb):
    a, b = tg.parse(ta), tg.parse(tb)
    if a.source != b.target:
        with pytest.raises(tg.TangleError):
            tg.compose(a, b)
        return
    got = tg.functor_T(tg.compose(a, b), M1)
    want = la.mat_mul(tg.functor_T(a, M1), tg.functor_T(b, M1))
    assert la.mat_eq(got, want)


@pytest.mark.parametrize("g", ["xp", "xm", "up * up"])
@pytest.mark.parametrize("w", ["xp", "xm", "xp ; xp", "xm ; xp"])
def test_invariant_is_conjugation_stable(g, w):
    gw, ww = tg.parse(g), tg.parse(w)
    lhs = tg.invariant(tg.compose(gw, ww), M1)
    rhs = tg.invariant(tg.compose(ww, gw), M1)
    assert rf.eq(lhs, rhs)


def test_invariant_accepts_words_and_rejects_open_ones():
    assert rf.eq(tg.invariant(tg.parse("up"), M1), rf.parse("v + v^-1"))
    with pytest.raises(tg.TangleError):
        tg.invariant("ev", M1)
