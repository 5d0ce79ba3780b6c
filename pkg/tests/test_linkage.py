import pytest

from osp34.flags import NATURAL, VermaFlag, tensor_flag
from osp34.linkage import (
    BlockLabel, bfs_linkage_oracle, block_label, canonical_order_key, enumerate_block, linked,
    project_flag,
)
from osp34.table import table_flag
from osp34.weights import Weight, box_weights, bruhat_leq_weights
from osp34.weyl import orbit


def W(s):
    return Weight.parse(s)


def test_labels():
    assert block_label(W("3/2,1/2|1/2")) == BlockLabel.atypical(3) == block_label(W("-3/2,11/2|11/2"))
    assert block_label(W("1/2,1/2|1/2")) == BlockLabel.atypical(1)
    assert block_label(W("7/2,7/2|7/2")) == BlockLabel.atypical(7)
    assert block_label(W("5/2,3/2|1/2")) == BlockLabel.typical(W("5/2,3/2|1/2"))
    assert str(block_label(W("5/2,1/2|5/2"))) == "B_1/2"


def test_linked_examples():
    assert linked(W("3/2,1/2|1/2"), W("-3/2,11/2|11/2"))
    assert not linked(W("1/2,1/2|1/2"), W("7/2,7/2|7/2"))
    w = W("5/2,-7/2|3/2")
    assert linked(w, w)


def test_oracle_examples():
    closure = bfs_linkage_oracle(W("1/2,1/2|1/2"), 9)
    assert W("1/2,3/2|3/2") in closure
    assert W("7/2,7/2|7/2") not in closure
    typ = W("5/2,3/2|1/2")
    assert bfs_linkage_oracle(typ, 9) == orbit(typ)


def test_label_json_roundtrip():
    for lab in (BlockLabel.atypical(5), block_label(W("5/2,3/2|1/2"))):
        assert BlockLabel.from_json(lab.to_json()) == lab
    with pytest.raises(ValueError):
        BlockLabel.atypical(4)


def test_projection():
    lam = W("1/2,-1/2|1/2")
    flag = project_flag(tensor_flag(table_flag(W("3/2,-1/2|1/2")), NATURAL), block_label(lam))
    assert flag == table_flag(lam)
    assert flag[W("3/2,1/2|3/2")] == 2 and W("5/2,1/2|5/2") in flag
    assert project_flag(flag, block_label(lam)) == flag
    assert project_flag(flag, BlockLabel.atypical(13)) == VermaFlag()


def test_enumerate_block():
    got = enumerate_block(BlockLabel.atypical(1), 3)
    for w in ("1/2,1/2|1/2", "1/2,-1/2|1/2", "3/2,1/2|3/2"):
        assert W(w) in got
    assert W("3/2,1/2|1/2") not in got
    assert enumerate_block(BlockLabel.atypical(7), 3) == []


def test_canonical_key_refines_bruhat():
    ws = [w for w in box_weights(5)]
    for u in ws:
        for v in ws:
            if u != v and bruhat_leq_weights(u, v):
                assert canonical_order_key(u) < canonical_order_key(v)
