from __future__ import annotations

import random
from collections import Counter

import pytest
from hypothesis import given, strategies as st

from slinf.cls import E, EINF, IDENTITY, ClsCanonical, L, Linf, R, Rinf, cls_of_dominant
from slinf.errors import EInfinityNotEnumerable, RankMismatch
from slinf.levels import (
    DominantWeight,
    WeightSet,
    basic_level,
    branch,
    branch_patterns,
    cartan_mul,
    cls_level,
    coherence_check,
    compare_levels,
    degree,
    dual,
    partitions_in_box,
    set_mul,
    trivial_set,
    weyl_dimension,
)
from slinf.orders import parse_function

W = DominantWeight.of


def names(ws):
    return {str(w) for w in ws}


def test_weight_normalization_and_printing():
    assert DominantWeight((3, 2, 2)) == W([1, 0], 3)
    assert str(W([2, 1], 3)) == "(2,1)"
    with pytest.raises(ValueError):
        DominantWeight((0, 1, 0))


def test_cartan_mul_examples():
    assert cartan_mul(W([1], 3), W([1], 3)) == W([2], 3)
    assert cartan_mul(DominantWeight.trivial(4), W([3, 1], 4)) == W([3, 1], 4)
    assert cartan_mul(W([1, 1], 3), W([1], 3)) == W([2, 1], 3)
    with pytest.raises(RankMismatch):
        cartan_mul(W([1], 3), W([1], 4))


def test_set_mul_examples():
    e3 = basic_level("E", 0, 3)
    assert set_mul(trivial_set(3), e3) == e3
    one = WeightSet(2, frozenset([W([1], 2)]))
    assert names(set_mul(one, one)) == {"(2)"}
    assert names(set_mul(e3, e3)) == {"(0,0)", "(1,0)", "(1,1)", "(2,0)", "(2,1)", "(2,2)"}
    with pytest.raises(RankMismatch):
        set_mul(e3, trivial_set(4))


def test_basic_level_examples():
    assert names(basic_level("E", 0, 3)) == {"(0,0)", "(1,0)", "(1,1)"}
    assert names(basic_level("L", 1, 4)) == {"(0,0,0)", "(1,0,0)"}
    assert names(basic_level("R", 1, 4)) == {"(0,0,0)", "(1,1,1)"}
    assert names(basic_level("L", 9, 3)) == names(basic_level("E", 0, 3))
    assert names(basic_level("Linf", 1, 3, cap=3)) == {"(0,0)", "(1,0)", "(2,0)", "(3,0)"}
    assert names(basic_level("Rinf", 1, 3, cap=2)) == {"(0,0)", "(1,1)", "(2,2)"}


def test_cls_level_examples():
    assert names(cls_level(IDENTITY, 5)) == {"(0,0,0,0)"}
    assert names(cls_level(E(2), 3)) == {"(0,0)", "(1,0)", "(1,1)", "(2,0)", "(2,1)", "(2,2)"}
    assert names(cls_level(R(2), 3)) == {"(0,0)", "(1,1)", "(1,0)"}
    assert cls_level(L(2) * R(1), 4).cap is None
    assert cls_level(Linf(1), 4, 5).cap == 5
    with pytest.raises(EInfinityNotEnumerable):
        cls_level(EINF, 3)


def test_degree_and_dual():
    w = W([4, 2, 1], 5)
    assert degree(w) == 4 + 2
    assert dual(dual(w)) == w
    assert degree(dual(w)) == degree(w)
    assert dual(W([1], 3)) == W([1, 1], 3)


@given(st.integers(2, 6), st.data())
def test_degree_is_additive_and_drops_under_branching(n, data):
    parts = st.lists(st.integers(0, 4), min_size=n - 1, max_size=n - 1).map(lambda xs: sorted(xs, reverse=True))
    a, b = W(data.draw(parts), n), W(data.draw(parts), n)
    assert degree(cartan_mul(a, b)) == degree(a) + degree(b)
    assert degree(a) == min(sum(abs(x - c) for x in a.coords) for c in range(max(a.coords) + 1))
    if n >= 3:
        assert all(degree(mu) <= degree(a) for mu in branch(a))


def test_branch_examples():
    assert names(branch(DominantWeight.trivial(4))) == {"(0,0)"}
    assert names(branch(W([1], 4))) == {"(0,0)", "(1,0)"}
    assert names(branch(W([1, 1], 3))) == {"(1)", "(0)"}


def test_branch_dimensions_add_up():
    for n in range(3, 6):
        for size in range(7):
            for parts in partitions_in_box(n - 1, size):
                if sum(parts) != size:
                    continue
                lam = W(parts, n)
                restricted = Counter(DominantWeight(mu) for mu in branch_patterns(lam))
                assert sum(k * weyl_dimension(mu) for mu, k in restricted.items()) == weyl_dimension(lam)


def test_weyl_dimension_examples():
    assert weyl_dimension(W([1], 4)) == 4
    assert weyl_dimension(W([1, 1], 4)) == 6
    assert weyl_dimension(W([2, 1], 3)) == 8


BASICS = [IDENTITY, E(1)] + [k(i) for k in (L, R, Linf, Rinf) for i in range(1, 6)]


@pytest.mark.parametrize("q", BASICS, ids=str)
@pytest.mark.parametrize("n", [3, 4, 5])
def test_basic_cls_are_coherent(q, n):
    report = coherence_check(q, n, 6)
    assert report.coherent, str(report)


def test_coherence_examples():
    assert coherence_check(IDENTITY, 6).coherent
    assert coherence_check(E(2), 4).coherent
    assert coherence_check(cls_of_dominant(parse_function("[1,1]; omega(0)")), 4).coherent


def test_coherence_detects_wrong_level_sets():
    assert not compare_levels(cls_level(E(1), 4), cls_level(L(1), 3)).coherent
    assert not compare_levels(cls_level(Linf(2), 4), cls_level(Linf(1), 3)).coherent
    # the additive guess Linf(1)*Linf(1) = Linf(2) is not what the levels give
    assert cls_level(Linf(2), 3) != set_mul(cls_level(Linf(1), 3), cls_level(Linf(1), 3))


def test_random_finite_type_forms_are_coherent():
    rng = random.Random(7)
    for _ in range(100):
        q = ClsCanonical(
            left=tuple((rng.randint(1, 4), rng.randint(1, 2)) for _ in range(rng.randint(0, 2))),
            m=rng.randint(0, 2),
            right=tuple((rng.randint(1, 4), rng.randint(1, 2)) for _ in range(rng.randint(0, 2))),
        )
        for n in (3, 4):
            assert coherence_check(q, n).coherent, str(q)


@given(st.sampled_from(BASICS), st.sampled_from(BASICS), st.sampled_from(BASICS))
def test_set_mul_is_commutative_and_associative(a, b, c):
    A, B, C = (cls_level(x, 3, 5) for x in (a, b, c))
    assert set_mul(A, B) == set_mul(B, A)
    assert set_mul(set_mul(A, B), C) == set_mul(A, set_mul(B, C))
    assert set_mul(trivial_set(3), A).weights == A.weights
