import pytest

from osp34.jh import (
    OutOfFamily, jh_multiplicities, thm41_check, thm41_family, thm41_mismatch, typical_jh,
)
from osp34.table import TypicalWeightError, table_flag
from osp34.weights import Weight, bruhat_leq_weights
from osp34.linkage import linked


def W(s):
    return Weight.parse(s)


def test_dominant_example():
    d = jh_multiplicities(W("9/2,3/2|9/2"))
    assert d.factors[W("9/2,3/2|9/2")] == 1 and d.factors[W("7/2,3/2|7/2")] == 1
    for lam, m in d.factors.items():
        assert bruhat_leq_weights(lam, d.verma) and linked(lam, d.verma)
        assert table_flag(lam)[d.verma] == m


def test_multiplicity_two_factors():
    d = jh_multiplicities(W("1/2,1/2|1/2"))
    doubles = {w for w, m in d.factors.items() if m == 2}
    assert doubles == {W("-1/2,1/2|-1/2"), W("-1/2,-1/2|1/2"), W("-1/2,-3/2|-3/2"), W("-1/2,-3/2|3/2")}
    assert thm41_family(d.verma) == "3(vii)"


def test_closed_form_examples():
    mu = W("-1/2,5/2|1/2")
    assert jh_multiplicities(mu).factors[W("-5/2,-1/2|1/2")] == 2
    assert thm41_family(mu) == "2(i)" and thm41_check(mu)
    mu = W("5/2,1/2|5/2")
    assert W("1/2,-1/2|1/2") in jh_multiplicities(mu).factors
    assert thm41_family(mu) == "4" and thm41_check(mu)
    assert thm41_family(W("9/2,3/2|9/2")) == "generic" and thm41_check(W("9/2,3/2|9/2"))


def test_known_mismatch_is_reported():
    mu = W("1/2,-3/2|3/2")
    assert not thm41_check(mu)
    assert thm41_mismatch(mu) == {W("-1/2,-1/2|1/2"): (1, 0)}


def test_rejects():
    with pytest.raises(TypicalWeightError):
        jh_multiplicities(W("5/2,3/2|1/2"))
    with pytest.raises(OutOfFamily):
        thm41_family(W("5/2,3/2|1/2"))


def test_typical_jh():
    d = typical_jh(W("5/2,3/2|1/2"))
    assert len(d) == 16 and d.factors[d.verma] == 1
    assert len(typical_jh(W("-5/2,-3/2|-1/2"))) == 1


def test_json_shape():
    doc = jh_multiplicities(W("7/2,3/2|7/2")).to_json()
    assert set(doc) == {"verma", "factors"}
    assert all(set(e) == {"weight", "mult"} for e in doc["factors"])
