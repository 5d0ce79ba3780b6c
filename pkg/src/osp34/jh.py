"""
Composition multiplicities of Verma modules.

BGG reciprocity turns a column of the projective flags into a Jordan-Hoelder
decomposition: ``[M_mu : L_lam] = (P_lam : M_mu)``.  :func:`thm41_check`
compares those numbers with the closed Jordan-Hoelder formulas, which are
stated as a generic orbit sum plus case-by-case extra factors.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

from .flags import typical_projective
from .linkage import block_label
from .table import TypicalWeightError, table_flag
from .weights import ISOTROPIC_POSITIVE_ROOTS, Weight, atypicality, bilinear4, bruhat_leq_weights
from .weyl import ELEMENTS, bruhat_leq_group, coset_decomposition, min_coset_reps, orbit

__all__ = [
    "JHDecomposition", "OutOfFamily", "WindowUnstable",
    "jh_multiplicities", "typical_jh", "sigma_l", "thm41_family", "thm41_prediction", "thm41_check", "thm41_mismatch",
]

H = Fraction(1, 2)


class OutOfFamily(ValueError):
    """The weight matches none of the clauses of the closed formulas."""


class WindowUnstable(AssertionError):
    """Widening the candidate window changed the answer."""


@dataclass
class JHDecomposition:
    verma: Weight
    factors: dict[Weight, int] = field(default_factory=dict)

    def __len__(self) -> int:
        return sum(self.factors.values())

    def items(self) -> list[tuple[Weight, int]]:
        from .linkage import canonical_order_key

        return sorted(self.factors.items(), key=lambda kv: canonical_order_key(kv[0]))

    def render(self) -> str:
        return " + ".join(f"{m if m > 1 else ''}L({w})" for w, m in self.items()) or "0"

    def latex(self) -> str:
        return " + ".join(f"{m if m > 1 else ''}L_{{{w.latex()}}}" for w, m in self.items()) or "0"

    def to_json(self) -> dict:
        return {"verma": self.verma.to_json(),
                "factors": [{"weight": w.to_json(), "mult": m} for w, m in self.items()]}


def _window(mu: Weight, radius: int) -> set[Weight]:
    """
    Weights within ``radius`` of ``mu`` up to the Weyl group.

    Flags move absolute values of coordinates by at most ``radius`` but also
    contain Weyl images, so the window is taken on sorted absolute values and
    then spread over all signed permutations.
    """
    r2 = 2 * radius
    x, y = abs(mu.da), abs(mu.db)
    z = abs(mu.dc)
    out: set[Weight] = set()
    for p, q, s in product(range(x - r2, x + r2 + 1, 2), range(y - r2, y + r2 + 1, 2),
                           range(z - r2, z + r2 + 1, 2)):
        if p < 0 or q < 0 or s < 0:
            continue
        for g in ELEMENTS:
            out.add(g.apply(Weight(p, q, s)))
    return out


def _collect(mu: Weight, radius: int) -> dict[Weight, int]:
    label = block_label(mu)
    factors: dict[Weight, int] = {}
    for lam in _window(mu, radius):
        if lam.da % 2 == 0 or not atypicality(lam) or block_label(lam) != label:
            continue
        if not bruhat_leq_weights(lam, mu):
            continue
        m = table_flag(lam)[mu]
        if m:
            factors[lam] = m
    return factors


def jh_multiplicities(mu: Weight, radius: int = 2, *, check_stable: bool = True) -> JHDecomposition:
    """
    ``[M_mu : L_lam]`` for every ``lam``, read off the projective flags.

    >>> d = jh_multiplicities(Weight.parse("9/2,3/2|9/2"))
    >>> [d.factors[Weight.parse(w)] for w in ("9/2,3/2|9/2", "7/2,3/2|7/2")]
    [1, 1]
    """
    if not atypicality(mu):
        raise TypicalWeightError(f"{mu} is typical; use typical_jh")
    factors = _collect(mu, radius)
    if check_stable:
        wider = _collect(mu, radius + 1)
        if wider != factors:
            raise WindowUnstable(f"window {radius} misses factors of M({mu})")
    assert factors.get(mu) == 1, mu
    return JHDecomposition(mu, factors)


def typical_jh(mu: Weight) -> JHDecomposition:
    """Typical Verma modules: transpose the orbit formula for typical projectives."""
    if atypicality(mu):
        raise ValueError(f"{mu} is atypical")
    factors = {lam: typical_projective(lam)[mu] for lam in orbit(mu)}
    return JHDecomposition(mu, {w: m for w, m in factors.items() if m})


# ---------------------------------------------------------------------------
# closed formulas

def sigma_l(mu: Weight) -> set[Weight]:
    """
    Factors forced by the orbit sum: for ``tau <= sigma`` and ``base = tau lam0``,
    ``base`` itself, ``base - alpha`` for isotropic ``alpha`` orthogonal to
    ``base``, and ``nu = base - alpha - beta`` with ``ht(alpha) > ht(beta)``
    when ``beta`` is orthogonal to ``nu`` and ``alpha`` to ``nu + beta``.
    Only atypical weights in the block of ``mu`` are kept.

    The orthogonality conditions are the transpose of the seeds of the
    mandatory set: ``M_mu`` sits in ``P_nu`` exactly when ``mu = nu + beta``
    (or ``nu + beta + alpha``) under the same conditions.
    """
    lam0, sigma = coset_decomposition(mu)
    label = block_label(mu)
    out: set[Weight] = set()
    iso = ISOTROPIC_POSITIVE_ROOTS
    for tau in min_coset_reps(lam0):
        if not bruhat_leq_group(tau, sigma):
            continue
        base = tau.apply(lam0)
        cands = [base]
        for a in iso:
            if bilinear4(base, a.offset) == 0:
                cands.append(base - a.offset)
            for b in iso:
                if a.height <= b.height:
                    continue
                nu = base - a.offset - b.offset
                if bilinear4(nu, b.offset) == 0 and bilinear4(nu + b.offset, a.offset) == 0:
                    cands.append(nu)
        out.update(w for w in cands if atypicality(w) and block_label(w) == label)
    return out


def _star(a: Fraction, mu: Weight) -> list[Weight]:
    """The starred sum: members of the four-element set strictly below ``mu``."""
    pool = {Weight.of(-a, -H, H), Weight.of(a, -H, H), Weight.of(-H, -a, H), Weight.of(-H, a, H)}
    return [w for w in pool if w != mu and bruhat_leq_weights(w, mu)]


def thm41_family(mu: Weight) -> str:
    """Clause of the closed formulas that covers ``mu``; ``"generic"`` for the plain orbit sum."""
    return _extras(mu)[0]


def _extras(mu: Weight) -> tuple[str, list[Weight]]:
    if not atypicality(mu) or mu.da % 2 == 0:
        raise OutOfFamily(f"{mu} is not an atypical weight of X + rho")
    a, b, c = mu.a, mu.b, mu.c
    W = Weight.of
    # (1): c = 3/2 with a positive coordinate
    if c == 3 * H and (a > 0 or b > 0):
        if (a, b) == (3 * H, -H):
            return "1(i)", [W(-H, -H, H), W(-H, -3 * H, 3 * H)]
        if (a, b) == (3 * H, H):
            return "1(ii)", [W(-H, -H, H), W(-H, -3 * H, 3 * H), W(H, -H, H)]
        if (a, b) == (3 * H, -3 * H):
            return "1(iii)", [W(-H, -3 * H, H), W(-3 * H, -H, H),
                              W(-3 * H, -5 * H, 5 * H), W(-3 * H, -5 * H, -5 * H)]
        if (a, b) == (3 * H, 3 * H):
            return "1(iv)", _star(3 * H, mu) + [W(-3 * H, 3 * H, 3 * H), W(-3 * H, 3 * H, -3 * H),
                                                W(-3 * H, -5 * H, 5 * H), W(-3 * H, -5 * H, -5 * H)]
        other = abs(b) if abs(a) == 3 * H else abs(a)
        return "1", _star(other, mu)
    # (2): c = 1/2 with a coordinate above 1/2
    if c == H and (a > H or b > H):
        if abs(a) == H and b > H:
            return "2(i)", [W(-b, -H, H)]
        if abs(b) == H and a > H:
            return "2(ii)", [W(-H, -a, H), W(-a, -H, H)]
    # (3): a = |b| = |c|
    if a > 0 and abs(b) == a and abs(c) == a:
        if b == -a and c == -a:
            return "3(i)", [W(-a, -a - 1, -a - 1)]
        if b == -a and c == a:
            return "3(ii)", [W(-a, -a - 1, -a - 1), W(-a, -a - 1, a + 1)]
        if b == a and c == -a:
            return "3(iv)", [W(-a, a, -a), W(-a, -a - 1, -a - 1)]
        if a > 3 * H:
            return "3(v)", [W(-a, a, -a), W(-a, a, a), W(-a, -a - 1, -a - 1), W(-a, -a - 1, a + 1)]
        if a == H:
            return "3(vii)", [W(-H, H, -H), W(-H, -H, H), W(-H, -3 * H, -3 * H), W(-H, -3 * H, 3 * H)]
    if (a, b, c) == (5 * H, H, 5 * H):
        return "4", [W(H, -H, H)]
    if (a, b, c) == (5 * H, 3 * H, 5 * H):
        return "5", [W(3 * H, -H, H)]
    return "generic", []


def thm41_prediction(mu: Weight) -> tuple[str, Counter]:
    """
    Composition factors predicted by the closed formulas, with multiplicities.

    The starred sum of clause (1) is read as a set union with the orbit sum
    (a factor already present there is not doubled); the other extras add.
    """
    family, extra = _extras(mu)
    predicted = Counter({w: 1 for w in sigma_l(mu)})
    if family == "1":
        predicted.update(w for w in extra if w not in predicted)
    else:
        predicted.update(extra)
    return family, predicted


def thm41_check(mu: Weight) -> bool:
    """Closed Jordan-Hoelder formula for ``M_mu`` agrees with reciprocity."""
    _, predicted = thm41_prediction(mu)
    return dict(predicted) == jh_multiplicities(mu).factors


def thm41_mismatch(mu: Weight) -> dict[Weight, tuple[int, int]]:
    """``{weight: (predicted, reciprocity)}`` for every disagreeing factor."""
    _, predicted = thm41_prediction(mu)
    got = jh_multiplicities(mu).factors
    return {w: (predicted.get(w, 0), got.get(w, 0)) for w in set(predicted) | set(got)
            if predicted.get(w, 0) != got.get(w, 0)}
