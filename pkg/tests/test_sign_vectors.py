from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from matroid_schubert import SignVector, compose, sign_of
from matroid_schubert.sign_vectors import perturbation_step

signs = st.lists(st.sampled_from((-1, 0, 1)), min_size=1, max_size=8)
pairs = st.integers(min_value=1, max_value=8).flatmap(
    lambda n: st.tuples(
        st.lists(st.sampled_from((-1, 0, 1)), min_size=n, max_size=n),
        st.lists(st.sampled_from((-1, 0, 1)), min_size=n, max_size=n),
    )
)


def sv(s: str) -> SignVector:
    return SignVector.from_signs(s)


def test_sign_of_examples():
    assert sign_of([1, 1, 2]) == sv("+++")
    assert sign_of([0, 0, 0]) == SignVector.zero(3)
    assert sign_of([0, 2, -1, -1]) == sv("0+--")
    assert sign_of([Fraction(-1, 3), Fraction(0), Fraction(5, 7)]) == sv("-0+")


def test_compose_example():
    assert compose(sv("0++"), sv("-0-")) == sv("-++")


def test_compose_identity_and_idempotence():
    x = sv("+-0+")
    assert compose(SignVector.zero(4), x) == x
    assert compose(x, SignVector.zero(4)) == x
    assert compose(x, x) == x


def test_overlapping_supports_rejected():
    with pytest.raises(ValueError):
        SignVector(2, 0b01, 0b01)


def test_containment_order():
    assert sv("0+0").leq(sv("++-"))
    assert not sv("-+0").leq(sv("++-"))
    assert sv("000").leq(sv("+-0"))


def test_restrict_and_mask():
    x = sv("+-0+")
    assert x.restrict([1, 3]) == sv("-+")
    assert x.mask_to([0, 2]) == sv("+000")
    assert x.reorient([0, 1]) == sv("-+0+")
    assert x.reorient([0, 1]).reorient([0, 1]) == x


def test_zero_set_support():
    x = sv("0+-0")
    assert x.support == {1, 2}
    assert x.zero_set == {0, 3}


@given(pairs)
def test_compose_is_associative_and_closed_signwise(xy):
    xs, ys = xy
    x, y = SignVector.from_signs(xs), SignVector.from_signs(ys)
    z = compose(x, y)
    assert compose(x, z) == z
    assert compose(z, y) == z
    assert compose(compose(x, y), y) == compose(x, compose(y, y))


@given(signs)
def test_double_negation(s):
    x = SignVector.from_signs(s)
    assert -(-x) == x
    assert (-x).plus == x.minus


@given(
    st.integers(min_value=1, max_value=6).flatmap(
        lambda n: st.tuples(
            st.lists(st.integers(min_value=-9, max_value=9), min_size=n, max_size=n),
            st.lists(st.integers(min_value=-9, max_value=9), min_size=n, max_size=n),
        )
    )
)
def test_perturbation_matches_composition(vw):
    v, w = vw
    eps = perturbation_step(v, w)
    moved = [Fraction(a) + eps * Fraction(b) for a, b in zip(v, w)]
    assert sign_of(moved) == compose(sign_of(v), sign_of(w))
