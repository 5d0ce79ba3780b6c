"""
Exact weight arithmetic for osp(3|4).

Weights are stored in rho-shifted coordinates ``(a, b | c)`` meaning
``a*delta_1 + b*delta_2 + c*epsilon``.  Every coordinate is kept doubled so
that the half-integers of ``X + rho`` become odd integers and nothing is ever
rounded.

>>> w = Weight.parse("3/2,1/2|1/2")
>>> w
Weight(3/2,1/2|1/2)
>>> atypicality(w)
1
>>> str(w + DELTA1)
'5/2,1/2|1/2'
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator

__all__ = [
    "Weight", "Root", "WeightParseError",
    "DELTA1", "DELTA2", "EPSILON", "ZERO", "RHO",
    "POSITIVE_ROOTS", "EVEN_POSITIVE_ROOTS", "ODD_POSITIVE_ROOTS",
    "ISOTROPIC_POSITIVE_ROOTS", "SIMPLE_ROOTS", "root_by_name",
    "bilinear", "bilinear4", "coroot_pairing", "atypicality",
    "is_antidominant", "is_dominant", "is_dot_regular",
    "simple_root_coefficients", "height", "bruhat_leq_weights",
    "box_weights", "format_half",
]


class WeightParseError(ValueError):
    """Raised when a weight string is not of the form ``a,b|c``."""


def format_half(d: int) -> str:
    """Render a doubled integer as an integer or a fraction with denominator 2."""
    if d % 2 == 0:
        return str(d // 2)
    return f"{d}/2"


_NUMBER = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


def _parse_doubled(text: str) -> int:
    m = _NUMBER.match(text.replace("−", "-"))
    if not m:
        raise WeightParseError(f"not a number: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) else 1
    value = Fraction(num, den) * 2
    if den == 0 or value.denominator != 1:
        raise WeightParseError(f"not a half-integer: {text!r}")
    return int(value)


@dataclass(frozen=True, order=True)
class Weight:
    """A weight ``(a, b | c)`` held as doubled integers ``(2a, 2b, 2c)``."""

    da: int
    db: int
    dc: int

    @classmethod
    def of(cls, a, b, c) -> Weight:
        """Build from (half-)integer coordinates given as ints, Fractions or strings."""
        vals = []
        for x in (a, b, c):
            f = Fraction(x) * 2
            if f.denominator != 1:
                raise ValueError(f"coordinate {x!r} is not a half-integer")
            vals.append(int(f))
        return cls(*vals)

    @classmethod
    def parse(cls, text: str, *, require_shifted: bool = False) -> Weight:
        """Parse the text form ``"a,b|c"``; entries may be ``3/2``, ``-1/2`` or integers."""
        if "|" not in text:
            raise WeightParseError(f"expected 'a,b|c', got {text!r}")
        left, _, right = text.partition("|")
        parts = left.split(",")
        if len(parts) != 2 or "|" in right:
            raise WeightParseError(f"expected 'a,b|c', got {text!r}")
        w = cls(_parse_doubled(parts[0]), _parse_doubled(parts[1]), _parse_doubled(right))
        if require_shifted and not w.is_shifted_integral():
            raise WeightParseError(
                f"{text!r}: coordinates must all be half-odd (e.g. 1/2, -3/2); "
                "weights are given in rho-shifted form (a,b|c)")
        return w

    @classmethod
    def from_json(cls, data) -> Weight:
        da, db, dc = data
        return cls(int(da), int(db), int(dc))

    # coordinates ------------------------------------------------------

    @property
    def a(self) -> Fraction:
        return Fraction(self.da, 2)

    @property
    def b(self) -> Fraction:
        return Fraction(self.db, 2)

    @property
    def c(self) -> Fraction:
        return Fraction(self.dc, 2)

    def doubled(self) -> tuple[int, int, int]:
        return (self.da, self.db, self.dc)

    def is_shifted_integral(self) -> bool:
        """True when the weight lies in ``X + rho`` (all doubled coordinates odd)."""
        return self.da % 2 == 1 and self.db % 2 == 1 and self.dc % 2 == 1

    def coordinate_sum(self) -> int:
        return self.da + self.db + self.dc

    # arithmetic -------------------------------------------------------

    def __add__(self, other: Weight) -> Weight:
        return Weight(self.da + other.da, self.db + other.db, self.dc + other.dc)

    def __sub__(self, other: Weight) -> Weight:
        return Weight(self.da - other.da, self.db - other.db, self.dc - other.dc)

    def __neg__(self) -> Weight:
        return Weight(-self.da, -self.db, -self.dc)

    def __mul__(self, k: int) -> Weight:
        return Weight(k * self.da, k * self.db, k * self.dc)

    __rmul__ = __mul__

    # rendering --------------------------------------------------------

    def __str__(self) -> str:
        return f"{format_half(self.da)},{format_half(self.db)}|{format_half(self.dc)}"

    def __repr__(self) -> str:
        return f"Weight({self})"

    def latex(self) -> str:
        def tex(d: int) -> str:
            if d % 2 == 0:
                return str(d // 2)
            sign = "-" if d < 0 else ""
            return rf"{sign}\frac{{{abs(d)}}}{{2}}"
        return f"{tex(self.da)},{tex(self.db)}|{tex(self.dc)}"

    def to_json(self) -> list[int]:
        return [self.da, self.db, self.dc]


ZERO = Weight(0, 0, 0)
DELTA1 = Weight(2, 0, 0)
DELTA2 = Weight(0, 2, 0)
EPSILON = Weight(0, 0, 2)
RHO = Weight(1, -1, 1)


def bilinear4(u: Weight, v: Weight) -> int:
    """Four times the form ``(u, v)``; an exact integer for doubled coordinates."""
    return u.da * v.da + u.db * v.db - u.dc * v.dc


def bilinear(u: Weight, v: Weight) -> Fraction:
    """The form with ``(delta_j, delta_k) = delta_jk``, ``(eps, eps) = -1``."""
    return Fraction(bilinear4(u, v), 4)


def simple_root_coefficients(delta: Weight) -> tuple[int, int, int]:
    """
    Coefficients of ``delta`` over ``(delta_1 - delta_2, epsilon, delta_2 - epsilon)``.

    Only meaningful for integer-coordinate vectors (even doubled coordinates).
    """
    x = delta.da // 2
    z = (delta.da + delta.db) // 2
    y = (delta.da + delta.db + delta.dc) // 2
    return (x, y, z)


@dataclass(frozen=True)
class Root:
    name: str
    offset: Weight
    even: bool

    @property
    def isotropic(self) -> bool:
        return bilinear4(self.offset, self.offset) == 0

    @property
    def parity(self) -> str:
        return "even" if self.even else "odd"

    @property
    def height(self) -> int:
        return sum(simple_root_coefficients(self.offset))

    @property
    def norm4(self) -> int:
        return bilinear4(self.offset, self.offset)

    def __str__(self) -> str:
        return self.name


EVEN_POSITIVE_ROOTS: tuple[Root, ...] = (
    Root("2d1", DELTA1 * 2, True),
    Root("2d2", DELTA2 * 2, True),
    Root("d1-d2", DELTA1 - DELTA2, True),
    Root("d1+d2", DELTA1 + DELTA2, True),
    Root("e", EPSILON, True),
)
ODD_POSITIVE_ROOTS: tuple[Root, ...] = (
    Root("d1", DELTA1, False),
    Root("d2", DELTA2, False),
    Root("d1-e", DELTA1 - EPSILON, False),
    Root("d1+e", DELTA1 + EPSILON, False),
    Root("d2-e", DELTA2 - EPSILON, False),
    Root("d2+e", DELTA2 + EPSILON, False),
)
POSITIVE_ROOTS = EVEN_POSITIVE_ROOTS + ODD_POSITIVE_ROOTS
ISOTROPIC_POSITIVE_ROOTS = tuple(r for r in ODD_POSITIVE_ROOTS if r.isotropic)
SIMPLE_ROOTS = tuple(r for r in POSITIVE_ROOTS if r.name in ("d1-d2", "e", "d2-e"))

_BY_NAME = {r.name: r for r in POSITIVE_ROOTS}


def root_by_name(name: str) -> Root:
    return _BY_NAME[name]


def height(delta: Weight) -> int:
    return sum(simple_root_coefficients(delta))


def coroot_pairing(w: Weight, alpha: Root) -> Fraction:
    """``<w, alpha^vee> = 2 (w, alpha) / (alpha, alpha)`` for an even root."""
    if not alpha.even:
        raise ValueError(f"coroot pairing needs an even root, got {alpha}")
    return Fraction(2 * bilinear4(w, alpha.offset), alpha.norm4)


def atypicality(w: Weight) -> int:
    """Degree of atypicality; at most 1 since only one of ``c = +-a``, ``c = +-b`` pairs can vanish together."""
    return int(abs(w.dc) == abs(w.da) or abs(w.dc) == abs(w.db))


def _pairings(w: Weight) -> Iterator[Fraction]:
    return (coroot_pairing(w, r) for r in EVEN_POSITIVE_ROOTS)


def is_antidominant(w: Weight) -> bool:
    return all(not (p.denominator == 1 and p > 0) for p in _pairings(w))


def is_dominant(w: Weight) -> bool:
    return all(not (p.denominator == 1 and p < 0) for p in _pairings(w))


def is_dot_regular(w: Weight) -> bool:
    return abs(w.da) != abs(w.db) and w.da != 0 and w.db != 0 and w.dc != 0


def bruhat_leq_weights(mu: Weight, lam: Weight) -> bool:
    """True iff ``mu <= lam``: linked, and ``lam - mu`` is a non-negative sum of simple roots."""
    from .linkage import linked

    delta = lam - mu
    if delta.da % 2 or delta.db % 2 or delta.dc % 2:
        return False
    if any(k < 0 for k in simple_root_coefficients(delta)):
        return False
    return linked(mu, lam)


def box_weights(bound: int, *, shifted: bool = True) -> Iterable[Weight]:
    """All weights with doubled coordinates in ``[-bound, bound]`` (odd ones only when shifted)."""
    if shifted:
        rng = [d for d in range(-bound, bound + 1) if d % 2]
    else:
        rng = list(range(-bound, bound + 1))
    for da in rng:
        for db in rng:
            for dc in rng:
                yield Weight(da, db, dc)
