"""
Verma modules that are forced into ``P_lam`` by positivity criteria.

Starting from ``lam`` itself, ``lam + beta`` for an isotropic ``beta``
orthogonal to ``lam``, and ``lam + beta + gamma`` when in addition
``gamma`` is orthogonal to ``lam + beta`` and higher than ``beta``, every
reflection ``s_alpha`` in an even positive root with negative coroot
pairing again gives a forced term.  Chains of such reflections are handled by
closing the seed set under single steps, since each prefix condition of a
chain is the single-step condition at the intermediate weight.
"""

from __future__ import annotations

from dataclasses import dataclass

from .weights import (
    EVEN_POSITIVE_ROOTS, ISOTROPIC_POSITIVE_ROOTS, Weight, bilinear4, coroot_pairing,
    simple_root_coefficients,
)

__all__ = ["MandatorySet", "mandatory_terms", "reflect"]


@dataclass(frozen=True)
class MandatorySet:
    base: Weight
    forced: frozenset[Weight]

    def __contains__(self, w: Weight) -> bool:
        return w in self.forced

    def __len__(self) -> int:
        return len(self.forced)


def reflect(w: Weight, alpha) -> Weight:
    """``s_alpha w = w - <w, alpha^vee> alpha``; the pairing may be a half-integer when ``alpha = 2 delta_i``."""
    k = coroot_pairing(w, alpha)
    off = alpha.offset
    shifted = [k * d for d in (off.da, off.db, off.dc)]
    assert all(x.denominator == 1 for x in shifted)
    return Weight(w.da - int(shifted[0]), w.db - int(shifted[1]), w.dc - int(shifted[2]))


def _seeds(lam: Weight) -> set[Weight]:
    seeds = {lam}
    for beta in ISOTROPIC_POSITIVE_ROOTS:
        if bilinear4(lam, beta.offset) != 0:
            continue
        first = lam + beta.offset
        seeds.add(first)
        for gamma in ISOTROPIC_POSITIVE_ROOTS:
            if beta.height < gamma.height and bilinear4(first, gamma.offset) == 0:
                seeds.add(first + gamma.offset)
    return seeds


def mandatory_terms(lam: Weight) -> MandatorySet:
    """
    >>> sorted(str(w) for w in mandatory_terms(Weight.parse("5/2,3/2|-5/2")).forced)
    ['5/2,3/2|-5/2', '5/2,3/2|5/2', '7/2,3/2|-7/2', '7/2,3/2|7/2']
    """
    forced = set(_seeds(lam))
    stack = list(forced)
    while stack:
        nu = stack.pop()
        for alpha in EVEN_POSITIVE_ROOTS:
            if coroot_pairing(nu, alpha) < 0:
                up = reflect(nu, alpha)
                # a negative pairing moves strictly up in the simple-root cone
                coeffs = simple_root_coefficients(up - nu)
                assert min(coeffs) >= 0 and up != nu, (nu, alpha)
                if up not in forced:
                    forced.add(up)
                    stack.append(up)
    return MandatorySet(lam, frozenset(forced))
