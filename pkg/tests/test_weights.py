from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from osp34.weights import (
    DELTA1, DELTA2, EPSILON, RHO, Weight, WeightParseError, atypicality, bilinear, box_weights,
    bruhat_leq_weights, coroot_pairing, is_antidominant, is_dominant, is_dot_regular, root_by_name,
)

half_odd = st.integers(-15, 15).map(lambda k: 2 * k + 1)
weights = st.builds(Weight, half_odd, half_odd, half_odd)


def W(s):
    return Weight.parse(s)


def test_bilinear_basis():
    assert bilinear(DELTA1, DELTA1) == 1
    assert bilinear(EPSILON, EPSILON) == -1
    assert bilinear(DELTA1, EPSILON) == 0
    assert bilinear(DELTA1, DELTA2) == 0


def test_coroot_pairings():
    assert coroot_pairing(W("5/2,3/2|-5/2"), root_by_name("e")) == -5
    assert coroot_pairing(RHO, root_by_name("d1-d2")) == 1
    w = W("7/2,-3/2|1/2")
    assert coroot_pairing(w, root_by_name("2d2")) == Fraction(-3, 2)


def test_atypicality_examples():
    assert atypicality(W("3/2,1/2|1/2")) == 1
    assert atypicality(W("1/2,1/2|1/2")) == 1
    assert atypicality(W("5/2,3/2|1/2")) == 0


def test_dominance():
    w = W("-3/2,-1/2|-1/2")
    assert is_antidominant(w) and is_dot_regular(w)
    w = W("-1/2,-1/2|-1/2")
    assert is_antidominant(w) and not is_dot_regular(w)
    assert is_dominant(W("5/2,1/2|5/2"))


def test_bruhat_weights_examples():
    lam = W("1/2,-1/2|1/2")
    assert bruhat_leq_weights(lam, W("5/2,1/2|5/2"))
    assert bruhat_leq_weights(lam, W("1/2,3/2|3/2"))
    assert bruhat_leq_weights(lam, lam)
    assert not bruhat_leq_weights(W("5/2,1/2|5/2"), lam)


@pytest.mark.parametrize("text", ["x,y|z", "1/2,1/2", "1/2|1/2|1/2", "1/3,1/2|1/2", ""])
def test_parse_rejects(text):
    with pytest.raises(WeightParseError):
        Weight.parse(text)


def test_parse_integers_hint():
    with pytest.raises(WeightParseError, match="half-odd"):
        Weight.parse("1,2|3", require_shifted=True)


@given(weights)
def test_roundtrip_text_and_json(w):
    assert Weight.parse(str(w)) == w
    assert Weight.from_json(w.to_json()) == w


@given(weights, weights)
def test_bilinear_symmetric(u, v):
    assert bilinear(u, v) == bilinear(v, u)


def test_box_counts():
    # +-1/2, +-3/2 in each slot
    assert len(list(box_weights(3))) == 4 ** 3
