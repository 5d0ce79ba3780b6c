"""
Linkage classes and blocks.

Two weights of ``X + rho`` are linked when one is obtained from the other by
the Weyl group together with integer moves along an isotropic root that is
orthogonal to the weight.  Typical classes are single Weyl orbits; atypical
classes are indexed by a half-odd ``t >= 1/2``: the block ``B_t`` contains
every weight that is, up to the Weyl group, ``(t, x | x)``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import TYPE_CHECKING, Iterable

from .weights import (
    ISOTROPIC_POSITIVE_ROOTS, Weight, atypicality, bilinear4, box_weights, format_half,
)
from .weyl import ELEMENTS

if TYPE_CHECKING:
    from .flags import VermaFlag

__all__ = [
    "BlockLabel", "block_label", "linked", "bfs_linkage_oracle",
    "project_flag", "enumerate_block", "canonical_order_key",
]


@dataclass(frozen=True)
class BlockLabel:
    kind: str  # "typical" or "atypical"
    t: int | None = None  # doubled block index for atypical labels
    canonical: Weight | None = None

    @classmethod
    def atypical(cls, t: int) -> BlockLabel:
        if t <= 0 or t % 2 == 0:
            raise ValueError(f"atypical block index must be a positive half-odd, got {format_half(t)}")
        return cls("atypical", t=t)

    @classmethod
    def typical(cls, canonical: Weight) -> BlockLabel:
        return cls("typical", canonical=canonical)

    @property
    def is_atypical(self) -> bool:
        return self.kind == "atypical"

    def __str__(self) -> str:
        if self.is_atypical:
            return f"B_{format_half(self.t)}"
        return f"[{self.canonical}]"

    def to_json(self) -> dict:
        if self.is_atypical:
            return {"kind": "atypical", "t": self.t}
        return {"kind": "typical", "canonical": self.canonical.to_json()}

    @classmethod
    def from_json(cls, data: dict) -> BlockLabel:
        if data["kind"] == "atypical":
            return cls.atypical(int(data["t"]))
        return cls.typical(Weight.from_json(data["canonical"]))


def block_label(w: Weight) -> BlockLabel:
    """
    >>> block_label(Weight.parse("-3/2,11/2|11/2"))
    BlockLabel(kind='atypical', t=3, canonical=None)
    """
    if atypicality(w) == 0:
        x, y = sorted((abs(w.da), abs(w.db)), reverse=True)
        return BlockLabel.typical(Weight(x, y, abs(w.dc)))
    rules = set()
    if abs(w.db) == abs(w.dc):
        rules.add(abs(w.da))
    if abs(w.da) == abs(w.dc):
        rules.add(abs(w.db))
    # |a| = |b| = |c| hits both rules with the same answer
    assert len(rules) == 1, w
    return BlockLabel.atypical(rules.pop())


def linked(u: Weight, v: Weight) -> bool:
    return block_label(u) == block_label(v)


def _in_box(w: Weight, box: int) -> bool:
    return max(abs(w.da), abs(w.db), abs(w.dc)) <= box


def bfs_linkage_oracle(w: Weight, box: int) -> set[Weight]:
    """
    Closure of ``{w}`` inside the box under the Weyl group and moves
    ``nu -> nu - k*alpha`` with ``alpha`` isotropic, ``(nu, alpha) = 0``, ``k`` integer.

    Written straight from the definition of linkage; it does not use
    :func:`block_label`.
    """
    if not _in_box(w, box):
        raise ValueError(f"{w} is outside the box {box}")
    seen = {w}
    queue = deque([w])
    while queue:
        nu = queue.popleft()
        nbrs = [g.apply(nu) for g in ELEMENTS]
        for alpha in ISOTROPIC_POSITIVE_ROOTS:
            if bilinear4(nu, alpha.offset) != 0:
                continue
            for k in range(-box - 1, box + 2):
                nbrs.append(nu - alpha.offset * k)
        for x in nbrs:
            if x not in seen and _in_box(x, box):
                seen.add(x)
                queue.append(x)
    return seen


def canonical_order_key(w: Weight) -> tuple[int, int, int, int]:
    """
    Sort key compatible with the Bruhat order.

    Leads with ``3a + 2b + c``, which rises by exactly one along every simple
    root, so ``mu < lam`` always sorts ``mu`` first.  Ties break lexicographically.
    """
    return (3 * w.da + 2 * w.db + w.dc, w.da, w.db, w.dc)


def project_flag(flag: VermaFlag, label: BlockLabel) -> VermaFlag:
    """Keep the Verma modules whose weights lie in the given block."""
    from .flags import VermaFlag

    return VermaFlag({w: m for w, m in flag.items() if block_label(w) == label})


def enumerate_block(label: BlockLabel, box: int) -> list[Weight]:
    """All weights of an atypical block with doubled coordinates bounded by ``box``."""
    if not label.is_atypical:
        raise ValueError("enumerate_block expects an atypical label; typical blocks are single orbits")
    found: Iterable[Weight] = (w for w in box_weights(box) if block_label(w) == label)
    return sorted(found, key=canonical_order_key)
