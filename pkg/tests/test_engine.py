import pytest

from osp34.engine import (
    Engine, Resolution, derive_flag, disambiguate, known_projective, peel, verify_range,
)
from osp34.flags import ADJOINT, NATURAL, SYM2, NegativeMultiplicity, VermaFlag, tensor_flag
from osp34.linkage import block_label, project_flag
from osp34.table import table_flag
from osp34.weights import Weight


def W(s):
    return Weight.parse(s)


def test_standard_case():
    d = derive_flag(W("7/2,5/2|7/2"))
    assert d.pivot == W("9/2,5/2|7/2") and d.rep is NATURAL
    assert d.ambiguity is None and d.candidates == 1
    assert d.result == table_flag(W("7/2,5/2|7/2"))


def test_adjoint_probe_case():
    lam = W("1/2,-1/2|1/2")
    d = derive_flag(lam)
    amb = d.ambiguity
    assert amb is not None and amb.resolved is Resolution.Q_PLUS_R
    assert len(amb.Q) == 7
    assert amb.R == VermaFlag.of("3/2,1/2|3/2", "5/2,1/2|5/2")
    assert amb.probe_rep is ADJOINT and amb.probe_block == block_label(W("1/2,-5/2|1/2"))
    assert d.result == table_flag(lam)
    assert any("probe" in line for line in d.trace())


def test_disambiguate_examples():
    lam = W("1/2,-1/2|1/2")
    full = table_flag(lam)
    R = VermaFlag.of("3/2,1/2|3/2", "5/2,1/2|5/2")
    assert disambiguate(full - R, R, ADJOINT, block_label(W("1/2,-5/2|1/2"))) is Resolution.Q_PLUS_R

    lam = W("-1/2,-5/2|-1/2")
    Q = table_flag(lam)
    R = VermaFlag.of("5/2,-1/2|-1/2", "5/2,-1/2|1/2", "5/2,1/2|-1/2", "5/2,1/2|1/2")
    got = disambiguate(Q, R, SYM2, block_label(lam), pivot=W("-3/2,-5/2|-3/2"))
    assert got is Resolution.Q_ONLY


def test_disambiguate_shortcut_from_forced_terms():
    lam = W("5/2,3/2|-5/2")
    full = table_flag(lam)
    R = VermaFlag.of("5/2,3/2|5/2")
    # (5/2,3/2|5/2) is forced and missing from Q: no probe needed, any probe block will do
    assert disambiguate(full - R, R, NATURAL, block_label(W("1/2,1/2|1/2"))) is Resolution.Q_PLUS_R


def test_peel_identities():
    q_r = table_flag(W("1/2,-1/2|1/2"))
    flag = project_flag(tensor_flag(q_r, ADJOINT), block_label(W("1/2,-5/2|1/2")))
    assert sorted(peel(flag)) == sorted([
        (W("1/2,-5/2|1/2"), 1), (W("1/2,5/2|-1/2"), 1), (W("5/2,-1/2|1/2"), 1), (W("3/2,5/2|3/2"), 1)])
    flag = project_flag(tensor_flag(table_flag(W("-1/2,-1/2|1/2")), NATURAL), block_label(W("-1/2,-1/2|-1/2")))
    assert sorted(peel(flag)) == sorted([(W("-1/2,-1/2|-1/2"), 3), (W("-1/2,1/2|1/2"), 2)])
    nu = W("3/2,-5/2|1/2")
    assert peel(known_projective(nu)) == [(nu, 1)]


def test_peel_rejects_non_projective():
    with pytest.raises(NegativeMultiplicity):
        peel(VermaFlag.of("1/2,-1/2|1/2"))


def test_verify_small_boxes():
    report = verify_range(1, Engine())
    assert report.ok and report.checked > 0
    assert "0 failures" in report.summary()
    assert verify_range(3, identities=False).ok


def test_no_fallback_needed():
    engine = Engine(allow_fallback=False)
    report = verify_range(7, engine, identities=False)
    assert report.ok, report.first_failure
    assert report.fallbacks == 0
