"""
Verma flags as multisets of weights, the three finite-dimensional
representations used for translation, and the typical projectives.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping

from .linkage import canonical_order_key
from .weights import DELTA1, DELTA2, EPSILON, ZERO, Weight, atypicality
from .weyl import bruhat_leq_group, coset_decomposition, min_coset_reps

__all__ = [
    "VermaFlag", "NegativeMultiplicity", "FiniteRep",
    "NATURAL", "SYM2", "ADJOINT", "REPS", "rep_by_name",
    "tensor_flag", "typical_projective", "sigma_sum",
]


class NegativeMultiplicity(ArithmeticError):
    """A flag subtraction would leave a negative multiplicity."""


class VermaFlag:
    """
    An immutable multiset of weights; ``M_w`` appears ``flag[w]`` times.

    >>> f = VermaFlag.of("1/2,1/2|1/2", "3/2,1/2|3/2", "3/2,1/2|3/2")
    >>> len(f), f.render()
    (3, 'M(1/2,1/2|1/2) + 2M(3/2,1/2|3/2)')
    """

    __slots__ = ("_entries", "_hash")

    def __init__(self, entries: Mapping[Weight, int] | Iterable[Weight] = ()):
        if isinstance(entries, Mapping):
            data = {w: int(m) for w, m in entries.items() if m}
        else:
            data = dict(Counter(entries))
        for w, m in data.items():
            if m < 0:
                raise NegativeMultiplicity(f"multiplicity {m} at {w}")
        self._entries = data
        self._hash = None

    @classmethod
    def of(cls, *weights: str | Weight) -> VermaFlag:
        return cls(Weight.parse(w) if isinstance(w, str) else w for w in weights)

    # multiset protocol ------------------------------------------------

    def __getitem__(self, w: Weight) -> int:
        return self._entries.get(w, 0)

    def __contains__(self, w: Weight) -> bool:
        return w in self._entries

    def __len__(self) -> int:
        return sum(self._entries.values())

    def __iter__(self) -> Iterator[Weight]:
        return iter(self.support())

    def __bool__(self) -> bool:
        return bool(self._entries)

    def items(self) -> list[tuple[Weight, int]]:
        return [(w, self._entries[w]) for w in self.support()]

    def support(self) -> list[Weight]:
        return sorted(self._entries, key=canonical_order_key)

    @property
    def entries(self) -> dict[Weight, int]:
        return dict(self._entries)

    def __eq__(self, other) -> bool:
        if not isinstance(other, VermaFlag):
            return NotImplemented
        return self._entries == other._entries

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._entries.items()))
        return self._hash

    def __add__(self, other: VermaFlag) -> VermaFlag:
        out = Counter(self._entries)
        out.update(other._entries)
        return VermaFlag(out)

    def __sub__(self, other: VermaFlag) -> VermaFlag:
        out = dict(self._entries)
        for w, m in other._entries.items():
            left = out.get(w, 0) - m
            if left < 0:
                raise NegativeMultiplicity(f"cannot remove {m} x M({w}); only {out.get(w, 0)} present")
            out[w] = left
        return VermaFlag(out)

    def __mul__(self, k: int) -> VermaFlag:
        if k < 0:
            raise NegativeMultiplicity(f"negative scalar {k}")
        return VermaFlag({w: k * m for w, m in self._entries.items()})

    __rmul__ = __mul__

    def issubset(self, other: VermaFlag) -> bool:
        return all(other[w] >= m for w, m in self._entries.items())

    def __le__(self, other: VermaFlag) -> bool:
        return self.issubset(other)

    def max_multiplicity(self) -> int:
        return max(self._entries.values(), default=0)

    # rendering --------------------------------------------------------

    def render(self, letter: str = "M") -> str:
        if not self._entries:
            return "0"
        terms = []
        for w, m in self.items():
            terms.append(f"{m if m > 1 else ''}{letter}({w})")
        return " + ".join(terms)

    def latex(self, letter: str = "M") -> str:
        if not self._entries:
            return "0"
        terms = []
        for w, m in self.items():
            terms.append(f"{m if m > 1 else ''}{letter}_{{{w.latex()}}}")
        return " + ".join(terms)

    def to_json(self) -> list[dict]:
        return [{"weight": w.to_json(), "mult": m} for w, m in self.items()]

    @classmethod
    def from_json(cls, data: list[dict]) -> VermaFlag:
        return cls({Weight.from_json(e["weight"]): int(e["mult"]) for e in data})

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"VermaFlag({self.render()})"


@dataclass(frozen=True)
class FiniteRep:
    """A finite-dimensional representation, recorded only through its weights."""

    name: str
    weights: tuple[tuple[Weight, int], ...]
    highest_weight: Weight

    @property
    def dim(self) -> int:
        return sum(m for _, m in self.weights)

    def __str__(self) -> str:
        return self.name


def _symmetric(positive: Iterable[Weight], zeros: int) -> tuple[tuple[Weight, int], ...]:
    out: list[tuple[Weight, int]] = []
    for w in positive:
        out.append((w, 1))
        out.append((-w, 1))
    out.append((ZERO, zeros))
    return tuple(out)


NATURAL = FiniteRep("natural", _symmetric([DELTA1, DELTA2, EPSILON], 1), DELTA1)
SYM2 = FiniteRep("sym2", _symmetric([
    DELTA1 + DELTA2, DELTA1 - DELTA2, DELTA1 + EPSILON, DELTA1 - EPSILON, DELTA1,
    DELTA2 + EPSILON, DELTA2 - EPSILON, DELTA2, EPSILON * 2, EPSILON,
], 4), DELTA1 + DELTA2)
ADJOINT = FiniteRep("adjoint", _symmetric([
    DELTA1 * 2, DELTA1 + DELTA2, DELTA1 - DELTA2, DELTA1 + EPSILON, DELTA1 - EPSILON,
    DELTA1, DELTA2 * 2, DELTA2 + EPSILON, DELTA2 - EPSILON, DELTA2, EPSILON,
], 3), DELTA1 * 2)
REPS = (NATURAL, SYM2, ADJOINT)


def rep_by_name(name: str) -> FiniteRep:
    aliases = {"V": "natural", "S2V": "sym2", "g": "adjoint"}
    name = aliases.get(name, name)
    for rep in REPS:
        if rep.name == name:
            return rep
    raise KeyError(name)


def tensor_flag(flag: VermaFlag, rep: FiniteRep) -> VermaFlag:
    """Each ``M_nu`` of the flag contributes ``M_{nu + mu}`` for every weight ``mu`` of ``rep``."""
    out: Counter = Counter()
    for nu, m in flag._entries.items():
        for mu, k in rep.weights:
            out[nu + mu] += m * k
    return VermaFlag(out)


def sigma_sum(nu: Weight) -> VermaFlag:
    """
    ``sum_{tau >= sigma} M_{tau lam0}`` where ``nu = sigma lam0`` with ``lam0``
    antidominant and ``tau, sigma`` minimal coset representatives.

    >>> sigma_sum(Weight.parse("1/2,-3/2|1/2")).render()
    'M(1/2,-3/2|1/2) + M(3/2,-1/2|1/2) + M(1/2,3/2|1/2) + M(3/2,1/2|1/2)'
    """
    lam0, sigma = coset_decomposition(nu)
    return VermaFlag(tau.apply(lam0) for tau in min_coset_reps(lam0)
                     if bruhat_leq_group(sigma, tau))


def typical_projective(lam: Weight) -> VermaFlag:
    """Verma flag of ``P_lam`` for typical ``lam``: every ``M_{tau lam0}`` with ``tau >= sigma``."""
    if atypicality(lam):
        raise ValueError(f"{lam} is atypical; use the engine")
    return sigma_sum(lam)
