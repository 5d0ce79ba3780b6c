"""
The Weyl group of osp(3|4): signed permutations of ``delta_1, delta_2`` times
the sign change of ``epsilon``.  Sixteen elements, generated by

* ``r``, the reflection in ``delta_1 - delta_2`` (swap the delta slots),
* ``s``, the reflection in ``2 delta_2`` (negate ``delta_2``),
* ``t``, the reflection in ``epsilon`` (negate ``epsilon``).

Because the engine works in rho-shifted coordinates the dot action is the
plain linear action.

>>> R.apply(Weight.parse("3/2,1/2|1/2"))
Weight(1/2,3/2|1/2)
>>> (R * S * R * S) == (S * R * S * R)
True
>>> len(ELEMENTS)
16
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property

from .weights import EVEN_POSITIVE_ROOTS, Weight, is_antidominant

__all__ = [
    "WeylElement", "ELEMENTS", "E", "R", "S", "T", "DIHEDRAL",
    "from_word", "bruhat_leq_group", "stabilizer", "min_coset_reps",
    "antidominant_representative", "orbit", "coset_decomposition",
]

_TEST = Weight(1, 3, 5)
_EVEN_OFFSETS = frozenset(r.offset for r in EVEN_POSITIVE_ROOTS)


@dataclass(frozen=True)
class WeylElement:
    """Swap the delta slots if ``swap``, then multiply the slots by the signs."""

    swap: bool
    sgn1: int
    sgn2: int
    sgnc: int

    def apply(self, v: Weight) -> Weight:
        x, y = (v.db, v.da) if self.swap else (v.da, v.db)
        return Weight(self.sgn1 * x, self.sgn2 * y, self.sgnc * v.dc)

    def __call__(self, v: Weight) -> Weight:
        return self.apply(v)

    def __mul__(self, other: WeylElement) -> WeylElement:
        return _BY_IMAGE[self.apply(other.apply(_TEST))]

    def inverse(self) -> WeylElement:
        return _BY_IMAGE[_INVERSE_IMAGE[self]]

    @cached_property
    def length(self) -> int:
        """Number of positive even roots sent to negative roots."""
        return sum(1 for off in _EVEN_OFFSETS if -self.apply(off) in _EVEN_OFFSETS)

    @property
    def t_exponent(self) -> int:
        return 0 if self.sgnc == 1 else 1

    @property
    def dihedral_part(self) -> WeylElement:
        return WeylElement(self.swap, self.sgn1, self.sgn2, 1)

    @property
    def dihedral_index(self) -> int:
        return DIHEDRAL.index(self.dihedral_part)

    @property
    def word(self) -> str:
        return _WORDS[self]

    def __str__(self) -> str:
        return self.word or "e"

    def __repr__(self) -> str:
        return f"WeylElement({self})"

    def to_json(self) -> dict:
        return {"dihedral": self.dihedral_index, "t": self.t_exponent}

    @classmethod
    def from_json(cls, data: dict) -> WeylElement:
        g = DIHEDRAL[int(data["dihedral"])]
        return g * T if int(data["t"]) else g


E = WeylElement(False, 1, 1, 1)
R = WeylElement(True, 1, 1, 1)
S = WeylElement(False, 1, -1, 1)
T = WeylElement(False, 1, 1, -1)

_ALL = [WeylElement(sw, s1, s2, sc)
        for sw in (False, True) for s1 in (1, -1) for s2 in (1, -1) for sc in (1, -1)]
_BY_IMAGE = {g.apply(_TEST): g for g in _ALL}
assert len(_BY_IMAGE) == 16


def _inverse_image(g: WeylElement) -> Weight:
    for h in _ALL:
        if g.apply(h.apply(_TEST)) == _TEST:
            return h.apply(_TEST)
    raise AssertionError(g)


_INVERSE_IMAGE = {g: _inverse_image(g) for g in _ALL}


def _reduced_words() -> dict[WeylElement, str]:
    # breadth first from e, generators tried in the order r, s, t
    words = {E: ""}
    queue = deque([E])
    while queue:
        g = queue.popleft()
        for name, gen in (("r", R), ("s", S), ("t", T)):
            h = g * gen
            if h not in words:
                words[h] = words[g] + name
                queue.append(h)
    return words


_WORDS = _reduced_words()

# the dihedral factor W_sp4 listed by (length, reduced word)
DIHEDRAL: tuple[WeylElement, ...] = tuple(sorted(
    (g for g in _ALL if g.sgnc == 1), key=lambda g: (g.length, _WORDS[g])))
ELEMENTS: tuple[WeylElement, ...] = tuple(sorted(_ALL, key=lambda g: (g.length, _WORDS[g])))


def from_word(word: str) -> WeylElement:
    """Multiply out a word over ``r, s, t`` (``"e"`` or ``""`` is the identity)."""
    g = E
    for ch in word.strip():
        if ch == "e":
            continue
        g = g * {"r": R, "s": S, "t": T}[ch]
    return g


def bruhat_leq_group(u: WeylElement, v: WeylElement) -> bool:
    """
    Bruhat order: dihedral part compared by length, ``t`` compared as a chain.

    >>> bruhat_leq_group(R, R * S), bruhat_leq_group(R, S)
    (True, False)
    """
    if u.t_exponent > v.t_exponent:
        return False
    u0, v0 = u.dihedral_part, v.dihedral_part
    return u0 == v0 or u0.length < v0.length


def orbit(lam: Weight) -> set[Weight]:
    return {g.apply(lam) for g in ELEMENTS}


def stabilizer(lam: Weight) -> list[WeylElement]:
    return [g for g in ELEMENTS if g.apply(lam) == lam]


def antidominant_representative(lam: Weight) -> Weight:
    """The unique antidominant point of the orbit: ``a <= b <= 0`` and ``c <= 0``."""
    x, y = sorted((abs(lam.da), abs(lam.db)), reverse=True)
    return Weight(-x, -y, -abs(lam.dc))


def min_coset_reps(lam: Weight) -> list[WeylElement]:
    """
    One minimal-length element per left coset ``w W_lam``, for antidominant ``lam``.

    Ordered by length, then by the image of ``lam``.
    """
    if not is_antidominant(lam):
        raise ValueError(f"{lam} is not antidominant")
    stab = stabilizer(lam)
    reps: dict[Weight, WeylElement] = {}
    for g in ELEMENTS:
        image = g.apply(lam)
        best = reps.get(image)
        if best is None or g.length < best.length:
            reps[image] = g
    # the minimal element of a coset is unique and below every other member
    for image, g in reps.items():
        for h in stab:
            assert bruhat_leq_group(g, g * h), (g, h)
    return sorted(reps.values(), key=lambda g: (g.length, g.apply(lam)))


def coset_decomposition(nu: Weight) -> tuple[Weight, WeylElement]:
    """Return ``(lam0, sigma)`` with ``lam0`` antidominant, ``sigma`` a minimal coset rep and ``sigma lam0 = nu``."""
    lam0 = antidominant_representative(nu)
    for g in min_coset_reps(lam0):
        if g.apply(lam0) == nu:
            return lam0, g
    raise AssertionError(nu)
