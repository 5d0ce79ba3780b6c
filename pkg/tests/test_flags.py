import pytest
from hypothesis import given, strategies as st

from osp34.flags import (
    ADJOINT, NATURAL, REPS, SYM2, NegativeMultiplicity, VermaFlag, rep_by_name, sigma_sum,
    tensor_flag, typical_projective,
)
from osp34.weights import Weight, ZERO

half_odd = st.integers(-9, 9).map(lambda k: 2 * k + 1)
weights = st.builds(Weight, half_odd, half_odd, half_odd)
flags = st.dictionaries(weights, st.integers(1, 3), max_size=6).map(VermaFlag)


def W(s):
    return Weight.parse(s)


def test_rep_dimensions_and_symmetry():
    assert [r.dim for r in REPS] == [7, 24, 25]
    for rep in REPS:
        offsets = sorted(w.doubled() for w, m in rep.weights for _ in range(m))
        assert offsets == sorted((-w).doubled() for w, m in rep.weights for _ in range(m))
    assert dict(SYM2.weights)[ZERO] == 4 and dict(ADJOINT.weights)[ZERO] == 3
    assert rep_by_name("g") is ADJOINT and rep_by_name("V") is NATURAL


@given(flags)
def test_tensor_length_identity(f):
    for rep in REPS:
        assert len(tensor_flag(f, rep)) == len(f) * rep.dim


def test_tensor_single_natural():
    lam = W("1/2,3/2|5/2")
    out = tensor_flag(VermaFlag([lam]), NATURAL)
    assert len(out.support()) == 7 and out.max_multiplicity() == 1
    assert len(tensor_flag(VermaFlag.of("1/2,3/2|5/2", "3/2,3/2|5/2"), NATURAL)) == 14


@given(flags, flags)
def test_multiset_algebra(f, g):
    assert (f + g) - g == f
    assert (f + g) == (g + f)
    assert f <= f + g


def test_negative_multiplicity():
    with pytest.raises(NegativeMultiplicity):
        VermaFlag.of("1/2,1/2|1/2") - VermaFlag.of("3/2,1/2|3/2")


def test_typical_projectives():
    assert len(typical_projective(W("-5/2,-3/2|-1/2"))) == 16
    assert typical_projective(W("5/2,3/2|1/2")) == VermaFlag.of("5/2,3/2|1/2")
    # singular: stabilized by r
    assert len(typical_projective(W("-3/2,-3/2|-1/2"))) == 8
    with pytest.raises(ValueError):
        typical_projective(W("1/2,1/2|1/2"))


def test_sigma_sum_example():
    got = sigma_sum(W("1/2,-3/2|1/2"))
    assert got == VermaFlag.of("1/2,-3/2|1/2", "1/2,3/2|1/2", "3/2,-1/2|1/2", "3/2,1/2|1/2")
    assert got.render() == "M(1/2,-3/2|1/2) + M(3/2,-1/2|1/2) + M(1/2,3/2|1/2) + M(3/2,1/2|1/2)"
    assert sigma_sum(W("5/2,3/2|1/2")) == VermaFlag.of("5/2,3/2|1/2")


@given(flags)
def test_json_roundtrip(f):
    assert VermaFlag.from_json(f.to_json()) == f
