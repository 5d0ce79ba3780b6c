"""
Closed-form Verma flags of the atypical projective covers.

Every atypical weight ``(a, b | c)`` of ``X + rho`` falls into exactly one case,
keyed by the sign pattern of ``a, b``, their relative size, which of
``+-a, +-b`` the coordinate ``c`` equals, and a handful of boundary values.
``Sum(nu)`` stands for :func:`osp34.flags.sigma_sum`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .flags import VermaFlag, sigma_sum
from .weights import Weight, atypicality

__all__ = ["CaseId", "TypicalWeightError", "classify", "table_flag", "table_terms"]

H = Fraction(1, 2)


class TypicalWeightError(ValueError):
    """The closed forms only cover atypical weights."""


@dataclass(frozen=True, order=True)
class CaseId:
    theorem: str
    case: str

    def __str__(self) -> str:
        return f"{self.theorem} ({self.case})"


# A term is ("M", weight) for a single Verma module or ("S", weight) for Sum(weight).
Term = tuple[str, Weight]


def _w(a, b, c) -> Weight:
    return Weight.of(a, b, c)


def M(a, b, c) -> Term:
    return ("M", _w(a, b, c))


def Sum(a, b, c) -> Term:
    return ("S", _w(a, b, c))


def _thm1(a, b, c) -> tuple[str, list[Term]]:
    # a, b > 0
    if a > b:
        if c == a:
            return "1.1", [M(a, b, a), M(a + 1, b, a + 1)]
        if c == -a:
            return "1.2", [M(a, b, -a), M(a, b, a), M(a + 1, b, -a - 1), M(a + 1, b, a + 1)]
        if c == b:
            if b < a - 1:
                return "1.3", [M(a, b, b), M(a, b + 1, b + 1)]
            return "1.3-b=a-1", [M(a, a - 1, a - 1), M(a, a, a), M(a + 1, a, a + 1)]
        if b < a - 1:
            return "1.4", [M(a, b, -b), M(a, b, b), M(a, b + 1, -b - 1), M(a, b + 1, b + 1)]
        return "1.4-b=a-1", [M(a, a - 1, -a + 1), M(a, a - 1, a - 1), M(a, a, -a), M(a, a, a),
                             M(a + 1, a, -a - 1), M(a + 1, a, a + 1)]
    if b > a:
        if c == a:
            if b > a + 1:
                return "2.1", [M(a, b, a), M(b, a, a), M(a + 1, b, a + 1), M(b, a + 1, a + 1)]
            return "2.1-b=a+1", [M(a, a + 1, a), M(a + 1, a, a), M(a + 1, a + 1, a + 1)]
        if c == -a:
            if b > a + 1:
                return "2.2", [M(a, b, -a), M(a, b, a), M(b, a, -a), M(b, a, a),
                               M(a + 1, b, -a - 1), M(a + 1, b, a + 1),
                               M(b, a + 1, -a - 1), M(b, a + 1, a + 1)]
            return "2.2-b=a+1", [M(a, a + 1, -a), M(a, a + 1, a), M(a + 1, a, -a), M(a + 1, a, a),
                                 M(a + 1, a + 1, -a - 1), M(a + 1, a + 1, a + 1)]
        if c == b:
            return "2.3", [M(a, b, b), M(b, a, b), M(a, b + 1, b + 1), M(b + 1, a, b + 1)]
        return "2.4", [Sum(a, b, -b), Sum(a, b + 1, -b - 1)]
    # a == b
    if c == a:
        return "3.1", [M(a, a, a), M(a, a + 1, a + 1), M(a + 1, a, a + 1)]
    return "3.2", [M(a, a, -a), M(a, a, a), M(a, a + 1, -a - 1), M(a, a + 1, a + 1),
                   M(a + 1, a, -a - 1), M(a + 1, a, a + 1)]


def _thm2(a, b, c) -> tuple[str, list[Term]]:
    # a > 0 > b
    if a > -b:
        if c == a:
            return "1.1", [M(a, b, a), M(a, -b, a), M(a + 1, b, a + 1), M(a + 1, -b, a + 1)]
        if c == -a:
            return "1.2", [M(a, b, -a), M(a, b, a), M(a, -b, -a), M(a, -b, a),
                           M(a + 1, b, -a - 1), M(a + 1, b, a + 1),
                           M(a + 1, -b, -a - 1), M(a + 1, -b, a + 1)]
        if c == -b:
            if b < -H:
                return "1.3", [M(a, b, -b), M(a, -b, -b), M(a, b + 1, -b - 1), M(a, -b - 1, -b - 1)]
            if a > 3 * H:
                return "1.3-b=-1/2", [M(a, -H, H), M(a, H, H), M(a, H, -H), M(a, 3 * H, 3 * H)]
            return "1.3-b=-1/2,a=3/2", [M(3 * H, -H, H), M(3 * H, H, H), M(3 * H, H, -H),
                                        M(3 * H, 3 * H, 3 * H), M(5 * H, 3 * H, 5 * H)]
        if b < -H:
            return "1.4", [M(a, b, b), M(a, b, -b), M(a, -b, b), M(a, -b, -b),
                           M(a, b + 1, b + 1), M(a, b + 1, -b - 1),
                           M(a, -b - 1, b + 1), M(a, -b - 1, -b - 1)]
        return "1.4-b=-1/2", [Sum(a, -H, -H)]
    if -b > a:
        if c == a:
            return "2.1", [Sum(a, b, a), Sum(a + 1, b, a + 1)]
        if c == -a:
            return "2.2", [Sum(a, b, -a), Sum(a + 1, b, -a - 1)]
        if c == -b:
            return "2.3", [Sum(a, b, -b), Sum(a, b + 1, -b - 1)]
        return "2.4", [Sum(a, b, b), Sum(a, b + 1, b + 1)]
    # a == -b
    if c == a:
        if a > H:
            return "3.1", [M(a, -a, a), M(a, a, a), M(a, -a + 1, a - 1), M(a, a - 1, a - 1),
                           M(a + 1, -a, a + 1), M(a + 1, a, a + 1)]
        return "3.1-a=1/2", [M(H, -H, H), M(H, H, H), M(H, H, -H), M(H, 3 * H, 3 * H),
                             M(3 * H, -H, 3 * H), M(3 * H, H, -3 * H),
                             M(3 * H, H, 3 * H), M(3 * H, H, 3 * H), M(5 * H, H, 5 * H)]
    if a > H:
        return "3.2", [Sum(a, -a, -a), Sum(a, -a + 1, -a + 1), Sum(a + 1, -a, -a - 1)]
    return "3.2-a=1/2", [Sum(H, -H, -H), Sum(3 * H, -H, -3 * H)]


def _thm3(a, b, c) -> tuple[str, list[Term]]:
    # b > 0 > a
    if a < -b:
        if c == -a:
            return "1.1", [Sum(a, b, -a), Sum(a + 1, b, -a - 1)]
        if c == a:
            return "1.2", [Sum(a, b, a), Sum(a + 1, b, a + 1)]
        if c == b:
            return "1.3", [Sum(a, b, b), Sum(a, b + 1, b + 1)]
        return "1.4", [Sum(a, b, -b), Sum(a, b + 1, -b - 1)]
    if -b < a:
        if c == -a:
            if a < -H:
                return "2.1", [Sum(a, b, -a), Sum(a + 1, b, -a - 1)]
            if b > 3 * H:
                return "2.1-a=-1/2", [Sum(-H, b, H), M(H, b, -H), M(b, H, -H),
                                      M(3 * H, b, 3 * H), M(b, 3 * H, 3 * H)]
            return "2.1-a=-1/2,b=3/2", [Sum(-H, 3 * H, H), M(H, 3 * H, -H), M(3 * H, H, -H),
                                        M(3 * H, 3 * H, 3 * H)]
        if c == a:
            if a < -H:
                return "2.2", [Sum(a, b, a), Sum(a + 1, b, a + 1)]
            return "2.2-a=-1/2", [Sum(-H, b, -H)]
        if c == b:
            return "2.3", [Sum(a, b, b), Sum(a, b + 1, b + 1)]
        return "2.4", [Sum(a, b, -b), Sum(a, b + 1, -b - 1)]
    # a == -b
    if c == -a:
        if a < -H:
            return "3.1", [Sum(a, -a, -a), M(-a, -a, -a), Sum(a, -a + 1, -a + 1), Sum(a + 1, -a, -a - 1)]
        return "3.1-a=-1/2", [Sum(-H, H, H), M(H, H, -H), Sum(-H, 3 * H, 3 * H)]
    if a < -H:
        return "3.2", [Sum(a, -a, a), M(-a, -a, a), M(-a, -a, -a), Sum(a, -a + 1, a - 1), Sum(a + 1, -a, a + 1)]
    return "3.2-a=-1/2", [Sum(-H, H, -H), M(H, H, -H), M(H, H, H), Sum(-H, 3 * H, -3 * H)]


def _thm4(a, b, c) -> tuple[str, list[Term]]:
    # a, b < 0
    if a < b:
        if c == -a:
            return "1.1", [Sum(a, b, -a), Sum(a + 1, b, -a - 1)]
        if c == a:
            return "1.2", [Sum(a, b, a), Sum(a + 1, b, a + 1)]
        if c == -b:
            if b < -H:
                return "1.3", [Sum(a, b, -b), Sum(a, b + 1, -b - 1)]
            return "1.3-b=-1/2", [Sum(a, -H, H), Sum(-H, -a, H),
                                  M(a, H, -H), M(-H, -a, -H), M(H, a, -H), M(H, -a, -H),
                                  M(-a, -H, -H), M(-a, H, -H), Sum(a, 3 * H, 3 * H)]
        if b < -H:
            return "1.4", [Sum(a, b, b), Sum(a, b + 1, b + 1)]
        return "1.4-b=-1/2", [Sum(a, -H, -H)]
    if b < a:
        if c == -a:
            if a < -H:
                return "2.1", [Sum(a, b, -a), Sum(a + 1, b, -a - 1)]
            return "2.1-a=-1/2", [Sum(-H, b, H), M(-b, -H, H), M(-b, H, H),
                                  M(H, b, -H), M(H, -b, -H), M(-b, -H, -H), M(-b, H, -H),
                                  Sum(3 * H, b, 3 * H)]
        if c == a:
            if a < -H:
                return "2.2", [Sum(a, b, a), Sum(a + 1, b, a + 1)]
            return "2.2-a=-1/2", [Sum(-H, b, -H)]
        if c == -b:
            if b < a - 1:
                return "2.3", [Sum(a, b, -b), Sum(a, b + 1, -b - 1)]
            if a < -H:
                return "2.3-b=a-1", [Sum(a, a - 1, -a + 1), Sum(a + 1, a, -a - 1),
                                     Sum(a, a, -a), Sum(-a, a, -a)]
            return "2.3-b=a-1,a=-1/2", [Sum(-H, -3 * H, 3 * H), M(3 * H, -H, 3 * H), M(3 * H, H, 3 * H),
                                        Sum(-H, -H, H), Sum(H, -H, -H)]
        if b < a - 1:
            return "2.4", [Sum(a, b, b), Sum(a, b + 1, b + 1)]
        if a < -H:
            return "2.4-b=a-1", [Sum(a, a - 1, a - 1), Sum(a + 1, a, a + 1), Sum(a, a, a), Sum(-a, a, a)]
        return "2.4-b=a-1,a=-1/2", [Sum(-H, -3 * H, -3 * H), Sum(-H, -H, -H), Sum(H, -H, -H)]
    # a == b
    if c == -a:
        if a < -H:
            return "3.1", [Sum(a, a, -a), Sum(a, a + 1, -a - 1)]
        return "3.1-a=-1/2", [Sum(-H, -H, H), M(H, H, H), M(-H, H, -H), M(H, -H, -H), M(H, H, -H),
                              Sum(-H, 3 * H, 3 * H)]
    if a < -H:
        return "3.2", [Sum(a, a, a), Sum(a, a + 1, a + 1)]
    return "3.2-a=-1/2", [Sum(-H, -H, -H)]


_THEOREMS: dict[str, Callable] = {"3.1": _thm1, "3.2": _thm2, "3.3": _thm3, "3.4": _thm4}


def table_terms(lam: Weight) -> tuple[CaseId, list[Term]]:
    """The matching case and its formula, with ``Sum`` terms left unexpanded."""
    if not lam.is_shifted_integral():
        raise ValueError(f"{lam} is not in X + rho")
    if atypicality(lam) == 0:
        raise TypicalWeightError(f"{lam} is typical")
    a, b, c = lam.a, lam.b, lam.c
    if a > 0 and b > 0:
        thm = "3.1"
    elif a > 0 > b:
        thm = "3.2"
    elif b > 0 > a:
        thm = "3.3"
    else:
        thm = "3.4"
    case, terms = _THEOREMS[thm](a, b, c)
    return CaseId(thm, case), terms


def classify(lam: Weight) -> CaseId:
    return table_terms(lam)[0]


def expand_terms(terms: list[Term]) -> VermaFlag:
    flag = VermaFlag()
    for kind, w in terms:
        flag = flag + (sigma_sum(w) if kind == "S" else VermaFlag([w]))
    return flag


_CACHE: dict[Weight, VermaFlag] = {}


def table_flag(lam: Weight) -> VermaFlag:
    """
    Verma flag of ``P_lam`` from the closed forms.

    >>> table_flag(Weight.parse("7/2,3/2|7/2")).render()
    'M(7/2,3/2|7/2) + M(9/2,3/2|9/2)'
    """
    flag = _CACHE.get(lam)
    if flag is None:
        flag = _CACHE[lam] = expand_terms(table_terms(lam)[1])
    return flag
