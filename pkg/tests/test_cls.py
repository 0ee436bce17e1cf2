from __future__ import annotations

import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from slinf.cls import (
    E,
    EINF,
    IDENTITY,
    ClsCanonical,
    L,
    Linf,
    R,
    Rinf,
    attach_infinite,
    bound_cls,
    bound_data,
    cls_is_finite_type,
    cls_mul,
    cls_of_dominant,
    duflo_function,
    parse_cls,
    profile_of,
)
from slinf.cls import _increments
from slinf.corpus import CLASSIFY_CORPUS, DOMINANT_CORPUS
from slinf.errors import (
    CriterionFails,
    MalformedFactorList,
    NotDominant,
    NotFiniteType,
    NotIdealOrder,
    NotIntegral,
    ParseError,
)
from slinf.levels import cls_level, highest_weight_level, set_mul
from slinf.orders import Fin, FunctionSpec, Omega, OmegaStar, annihilator_nonzero, is_dominant, parse_function, parse_order
from slinf.scalars import ScalarValue

P = parse_function
ORDERS = [parse_order("omega; omega*"), parse_order("omega; fin(2); omega*")]

index = st.integers(1, 5)
finite_cls = st.builds(
    ClsCanonical,
    left=st.lists(st.tuples(index, st.integers(1, 2)), max_size=3).map(tuple),
    m=st.integers(0, 2),
    right=st.lists(st.tuples(index, st.integers(1, 2)), max_size=3).map(tuple),
)
any_cls = st.one_of(
    st.just(EINF),
    st.builds(
        ClsCanonical,
        v=st.integers(0, 3),
        left=st.lists(st.tuples(index, st.integers(1, 2)), max_size=2).map(tuple),
        m=st.integers(0, 2),
        w=st.integers(0, 3),
        right=st.lists(st.tuples(index, st.integers(1, 2)), max_size=2).map(tuple),
    ),
)


def test_canonical_form_and_printing():
    q = ClsCanonical(v=2, left=((1, 3), (4, 1), (4, 1)), m=1, w=1, right=((1, 1), (3, 2)))
    assert str(q) == "Linf(2) L(4)^2 E Rinf(1) R(3)^2"
    assert str(IDENTITY) == "1" and str(EINF) == "Einf"
    assert ClsCanonical(e_infinity=True, v=3, m=2) == EINF


@given(any_cls)
def test_print_parse_round_trip(q):
    assert parse_cls(str(q)) == q


@pytest.mark.parametrize("text", ["L", "L(x)", "R(2)^", "F", "L(1) *", ""])
def test_parse_cls_rejects(text):
    with pytest.raises(ParseError):
        parse_cls(text)


def test_parse_accepts_explicit_products():
    assert parse_cls("L(1) * L(1) * E^2 R(3)") == ClsCanonical(left=((1, 2),), m=2, right=((3, 1),))


def test_finite_type():
    assert cls_is_finite_type(IDENTITY)
    assert not cls_is_finite_type(Linf(1))
    assert cls_is_finite_type(E(3) * L(2))
    assert not cls_is_finite_type(EINF)


def test_mul_examples():
    assert IDENTITY * L(3) == L(3)
    assert Linf(1) * L(1) == Linf(1)
    assert E(1) * E(2) == E(3)
    assert Rinf(2) * R(1) * R(3) == ClsCanonical(w=2, right=((3, 1),))
    # rows do not add: the product keeps the larger level
    assert Linf(1) * Linf(1) == Linf(1)
    assert Linf(2) * Linf(3) == Linf(3)
    assert EINF * IDENTITY == EINF


@given(any_cls, any_cls, any_cls)
def test_mul_is_a_commutative_monoid(a, b, c):
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * IDENTITY == a
    assert a * EINF == EINF


@settings(max_examples=60, deadline=None)
@given(any_cls.filter(lambda q: not q.e_infinity), any_cls.filter(lambda q: not q.e_infinity))
def test_mul_matches_level_sets(a, b):
    for n in (3, 4):
        assert cls_level(a * b, n, 6).weights == set_mul(cls_level(a, n, 6), cls_level(b, n, 6)).weights


@pytest.mark.parametrize("text,s,d,p,q", [
    ("omega(0)", 0, (math.inf,), 0, 0),
    ("[1,1]; omega(0)", 1, (math.inf, 2), 0, 0),
    ("omega(2); [1]; omega*(0)", 2, (math.inf, 1, math.inf), 0, 2),
    ("[7, 7, 5]", 2, (1, 0, 2), 0, 0),
])
def test_profile_examples(text, s, d, p, q):
    pr = profile_of(P(text))
    assert (pr.s, pr.d, pr.p, pr.q) == (s, d, p, q)


def test_profile_errors():
    with pytest.raises(NotIntegral):
        profile_of(P("[r2]; omega(0)"))
    with pytest.raises(NotDominant):
        profile_of(P("omega(0); [1]"))
    assert cls_of_dominant(P("omega(0, step=-1)")) == EINF


@pytest.mark.parametrize("text,expected", [
    ("omega(0)", "1"),
    ("[1,1]; omega(0)", "L(2)"),
    ("[1]; omega(0)", "L(1)"),
    ("omega(2); [1]; omega*(0)", "E^2"),
    ("omega(0); omega*(0; top=[-1,-1])", "R(2)"),
    ("[3,1,1]; omega(0); omega*(-1; top=[-3,-2])", "L(1)^2 L(3) E R(1) R(2)"),
    ("[2, 1, 1]", "L(1)"),
])
def test_cls_of_dominant_examples(text, expected):
    assert str(cls_of_dominant(P(text))) == expected


@pytest.mark.parametrize("text", DOMINANT_CORPUS)
def test_cls_of_dominant_matches_branching_of_highest_weight(text):
    f = P(text)
    q = cls_of_dominant(f)
    assert cls_is_finite_type(q)
    for n in (3, 4, 5):
        assert cls_level(q, n).weights == highest_weight_level(f, n, n + 2).weights


def test_duflo_examples():
    omega_omega_star = ORDERS[0]
    assert str(duflo_function(IDENTITY, omega_omega_star)) == "omega(0); omega*(0)"
    # values 1 everywhere except 0 on the two greatest positions
    assert str(duflo_function(R(2), omega_omega_star)) == "omega(1); omega*(1; top=[0, 0])"
    assert str(duflo_function(L(2), omega_omega_star)) == "omega(0; head=[1, 1]); omega*(0)"
    assert str(duflo_function(E(2), parse_order("omega; fin(1); omega*"))) == "omega(2); [2]; omega*(0)"


def test_duflo_errors():
    with pytest.raises(NotFiniteType):
        duflo_function(Linf(1), ORDERS[0])
    with pytest.raises(NotIdealOrder):
        duflo_function(L(1), parse_order("omega"))
    # canonical forms never carry such lists; the helper guards the invariant
    with pytest.raises(MalformedFactorList):
        _increments([2, 1], "L")
    with pytest.raises(MalformedFactorList):
        _increments([0, 1], "R")
    assert _increments([1, 1, 4], "L") == [1, 0, 3]


@given(finite_cls, st.sampled_from(ORDERS))
def test_duflo_round_trip(q, o):
    f = duflo_function(q, o)
    assert f.order() == o
    assert is_dominant(f)
    assert cls_of_dominant(f) == q


@pytest.mark.parametrize("text,nint,wid,gamma,cls", [
    ("omega(0); omega*(3)", 3, 0, 0, "Linf(3)"),
    ("omega(5); omega*(2)", 0, 3, 0, "E^3"),
    ("omega(0)", 0, 0, 0, "1"),
    ("[r2+3]; omega(0)", 0, 0, 1, "Linf(1)"),
    ("omega(0); [r2, 4]; omega(2); omega*(1)", 2, 1, 2, "Linf(4) E"),
])
def test_bound_examples(text, nint, wid, gamma, cls):
    f = P(text)
    b = bound_data(f)
    assert (b.nint, b.wid, b.gamma) == (nint, wid, gamma)
    assert str(bound_cls(f)) == cls


@pytest.mark.parametrize("text,_i,_a,_l,verdict", CLASSIFY_CORPUS)
def test_bound_defined_iff_nonvanishing(text, _i, _a, _l, verdict):
    f = P(text)
    assert annihilator_nonzero(f) is verdict
    if verdict:
        bound_cls(f)
    else:
        with pytest.raises(CriterionFails):
            bound_cls(f)


def test_attach_infinite():
    assert attach_infinite(IDENTITY, 0, 0) == IDENTITY
    assert attach_infinite(L(1), 1, 0) == Linf(1)
    assert str(attach_infinite(E(2), 1, 1)) == "Linf(1) E^2 Rinf(1)"
    assert str(attach_infinite(L(1) * L(3) * R(2), 2, 2)) == "Linf(2) L(3) Rinf(2)"
    with pytest.raises(NotFiniteType):
        attach_infinite(Linf(1), 0, 0)


@st.composite
def dominant_functions(draw):
    vals = sorted(draw(st.lists(st.integers(0, 3), min_size=2, max_size=7)), reverse=True)
    v = [ScalarValue("", Fraction(x)) for x in vals]
    i = draw(st.integers(0, len(v) - 1))
    j = draw(st.integers(i, len(v) - 1))
    segs = [Omega(v[i], tuple(v[:i]))]
    if v[i + 1:j]:
        segs.append(Fin(tuple(v[i + 1:j])))
    segs.append(OmegaStar(v[j], tuple(reversed(v[j + 1:]))))
    return FunctionSpec(tuple(segs))


@settings(max_examples=60, deadline=None)
@given(dominant_functions())
def test_closed_form_matches_branching_on_random_dominant_functions(f):
    assert is_dominant(f)
    q = cls_of_dominant(f)
    for n in (3, 4):
        assert cls_level(q, n).weights == highest_weight_level(f, n, n + 2).weights
