"""
Translation-functor derivation of atypical projective flags.

For a target ``lam`` we take a projective ``P_mu`` whose flag is already known,
tensor with a finite-dimensional representation ``N`` and project onto the
block of ``lam``.  The result is a sum of indecomposable projectives; after
splitting off everything whose top lies below or beside ``lam``, the
remaining flag is ``m P_lam`` plus projectives ``P_nu`` with ``nu > lam``.
Each way of sorting the leftover Verma modules into those summands gives a
candidate for ``P_lam``; when more than one survives, a probe (another
translation in which the candidate must again split into projectives)
decides between them.
"""

from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Iterable, Mapping

from .filprop import mandatory_terms
from .flags import (
    ADJOINT, NATURAL, REPS, SYM2, FiniteRep, NegativeMultiplicity, VermaFlag,
    tensor_flag, typical_projective,
)
from .linkage import BlockLabel, block_label, canonical_order_key, project_flag
from .table import CaseId, classify, table_flag
from .weights import (
    DELTA1, DELTA2, EPSILON, ZERO, Weight, atypicality, box_weights, simple_root_coefficients,
)

__all__ = [
    "DerivationError", "Inconclusive", "MultipleMinima",
    "Probe", "Recipe", "Resolution", "Ambiguity", "Derivation", "Engine",
    "peel", "disambiguate", "known_projective", "RECIPES", "recipe_for",
    "derive_flag", "verify_range", "VerificationReport",
]

log = logging.getLogger(__name__)

FlagLookup = Callable[[Weight], VermaFlag]


class DerivationError(RuntimeError):
    """No recipe produced a unique flag; never papered over with a guess."""


class Inconclusive(DerivationError):
    """A probe could not separate the candidate flags."""


class MultipleMinima(DerivationError):
    """Different orders of splitting off minimal weights disagreed."""


def known_projective(w: Weight) -> VermaFlag:
    """Flag of ``P_w`` from the typical formula or the atypical closed forms."""
    return table_flag(w) if atypicality(w) else typical_projective(w)


def _lookup(overrides: Mapping[Weight, VermaFlag] | None) -> FlagLookup:
    if not overrides:
        return known_projective
    return lambda w: overrides[w] if w in overrides else known_projective(w)


def _minimal(flag: VermaFlag) -> Weight:
    return min(flag.support(), key=canonical_order_key)


def _bruhat_minima(flag: VermaFlag) -> list[Weight]:
    support = flag.support()
    return [w for w in support if not any(v != w and _below(v, w) for v in support)]


def _peel_once(flag: VermaFlag, lookup: FlagLookup, pick_last: bool) -> tuple[list[tuple[Weight, int]], bool]:
    out: list[tuple[Weight, int]] = []
    tied = False
    rest = flag
    while rest:
        minima = _bruhat_minima(rest)
        tied = tied or len(minima) > 1
        nu = minima[-1] if pick_last else minima[0]
        k = rest[nu]
        rest = rest - lookup(nu) * k
        out.append((nu, k))
    return out, tied


def peel(flag: VermaFlag, label: BlockLabel | None = None, *,
         overrides: Mapping[Weight, VermaFlag] | None = None) -> list[tuple[Weight, int]]:
    """
    Split a projective flag into indecomposable projectives, lowest weight first.

    A weight that is minimal in what is left can only be the top of a summand,
    so each of its copies removes one ``P_nu``.  Raises
    :class:`NegativeMultiplicity` when that removal overdraws the flag.  When
    incomparable minima occur, the opposite tie-break is also tried: a unique
    successful decomposition is returned, two different ones raise
    :class:`MultipleMinima`.
    """
    lookup = _lookup(overrides)
    if label is not None:
        stray = [w for w in flag.support() if block_label(w) != label]
        if stray:
            raise ValueError(f"{stray[0]} is not in block {label}")
    first_err = None
    try:
        first, tied = _peel_once(flag, lookup, False)
    except NegativeMultiplicity as exc:
        first, tied, first_err = None, True, exc
    if not tied:
        return first
    try:
        second, _ = _peel_once(flag, lookup, True)
    except NegativeMultiplicity:
        if first is None:
            raise first_err
        return first
    if first is None:
        return second
    if sorted(first) != sorted(second):
        raise MultipleMinima("peeling orders disagree: "
                             f"{_render_parts(first)} vs {_render_parts(second)}")
    return first


def _render_parts(parts: Iterable[tuple[Weight, int]]) -> str:
    return " + ".join(f"{k if k > 1 else ''}P({w})" for w, k in parts) or "0"


def recombine(parts: Iterable[tuple[Weight, int]], overrides=None) -> VermaFlag:
    lookup = _lookup(overrides)
    total = VermaFlag()
    for nu, k in parts:
        total = total + lookup(nu) * k
    return total


@dataclass(frozen=True)
class Probe:
    """
    A translation used to test candidate flags.

    With ``pivot_offset`` unset, the candidate itself is tensored with ``rep``
    and projected onto the block of ``lam + block_offset``; a genuine projective
    flag must split into projectives there.  With ``pivot_offset`` set, the
    known projective at ``lam + pivot_offset`` is translated instead and the
    candidate is substituted for ``P_lam`` while splitting.
    """

    rep: FiniteRep
    block_offset: Weight
    pivot_offset: Weight | None = None

    def describe(self, lam: Weight) -> str:
        target = lam + self.block_offset
        if self.pivot_offset is None:
            return f"pr_{block_label(target)}(candidate x {self.rep})"
        return f"pr_{block_label(target)}(P({lam + self.pivot_offset}) x {self.rep})"

    def resolve(self, lam: Weight) -> tuple[BlockLabel, Weight | None]:
        pivot = None if self.pivot_offset is None else lam + self.pivot_offset
        return block_label(lam + self.block_offset), pivot


@dataclass(frozen=True)
class Recipe:
    pivot_offset: Weight
    rep: FiniteRep = NATURAL
    probes: tuple[Probe, ...] = ()


class Resolution(Enum):
    Q_ONLY = "Q"
    Q_PLUS_R = "Q+R"


def _candidate_survives(lam: Weight, candidate: VermaFlag, rep: FiniteRep, block: BlockLabel,
                        pivot: Weight | None) -> bool:
    source = candidate if pivot is None else known_projective(pivot)
    flag = project_flag(tensor_flag(source, rep), block)
    try:
        peel(flag, overrides={lam: candidate})
    except (NegativeMultiplicity, MultipleMinima):
        return False
    return True


def disambiguate(Q: VermaFlag, R: VermaFlag, probe_rep: FiniteRep, probe_block: BlockLabel, *,
                 pivot: Weight | None = None) -> Resolution:
    """
    Decide whether ``P_lam`` is ``Q`` or ``Q + R``, where ``lam`` is the lowest weight of ``Q``.

    Without ``pivot`` each candidate is translated itself: a projective stays
    projective, so its projection onto ``probe_block`` must split into
    indecomposables.  With ``pivot`` the known projective ``P_pivot`` is
    translated and the candidate stands in for ``P_lam`` while splitting.
    A forced term of ``P_lam`` that occurs in ``R`` but not in ``Q`` settles
    the matter without a probe.
    """
    if not Q or not R:
        raise ValueError("Q and R must be nonempty")
    lam = min(Q.support(), key=canonical_order_key)
    if any(Q[w] == 0 for w in R.support() if w in mandatory_terms(lam).forced):
        return Resolution.Q_PLUS_R
    ok_q = _candidate_survives(lam, Q, probe_rep, probe_block, pivot)
    ok_qr = _candidate_survives(lam, Q + R, probe_rep, probe_block, pivot)
    if ok_q == ok_qr:
        raise Inconclusive(f"probe {probe_rep} on {probe_block} "
                           f"{'accepts' if ok_q else 'rejects'} both candidates for P({lam})")
    return Resolution.Q_ONLY if ok_q else Resolution.Q_PLUS_R


# ---------------------------------------------------------------------------
# recipes transcribed from the case-by-case arguments

D1, D2, EP = DELTA1, DELTA2, EPSILON
_STD_A = Recipe(D1)   # c = +-a: pivot lam + delta_1
_STD_B = Recipe(D2)   # c = +-b: pivot lam + delta_2

RECIPES: dict[tuple[str, str], Recipe | tuple[Recipe, ...]] = {
    ("3.1", "1.1"): _STD_A, ("3.1", "1.2"): _STD_A,
    ("3.1", "1.3"): _STD_B, ("3.1", "1.4"): _STD_B,
    ("3.1", "1.3-b=a-1"): Recipe(D1), ("3.1", "1.4-b=a-1"): Recipe(D1),
    ("3.1", "2.1"): _STD_A, ("3.1", "2.2"): _STD_A,
    ("3.1", "2.1-b=a+1"): _STD_A, ("3.1", "2.2-b=a+1"): _STD_A,
    ("3.1", "2.3"): _STD_B, ("3.1", "2.4"): _STD_B,
    ("3.1", "3.1"): Recipe(EP), ("3.1", "3.2"): Recipe(-EP),

    ("3.2", "1.1"): _STD_A, ("3.2", "1.2"): _STD_A,
    ("3.2", "1.3"): _STD_B, ("3.2", "1.3-b=-1/2"): _STD_B, ("3.2", "1.3-b=-1/2,a=3/2"): _STD_B,
    ("3.2", "1.4"): _STD_B, ("3.2", "1.4-b=-1/2"): Recipe(EP),
    ("3.2", "2.1"): _STD_A, ("3.2", "2.2"): _STD_A, ("3.2", "2.3"): _STD_B, ("3.2", "2.4"): _STD_B,
    ("3.2", "3.1"): Recipe(D1),
    ("3.2", "3.1-a=1/2"): Recipe(D1, NATURAL, (Probe(ADJOINT, D2 * -2),)),
    ("3.2", "3.2"): Recipe(D1), ("3.2", "3.2-a=1/2"): Recipe(D1),

    ("3.3", "1.1"): _STD_A, ("3.3", "1.2"): _STD_A, ("3.3", "1.3"): _STD_B, ("3.3", "1.4"): _STD_B,
    ("3.3", "2.1"): _STD_A,
    # translating P(1/2,b|-1/2) splits as P(-1/2,b|-1/2) + P(1/2,b|-1/2), so step down in b instead
    ("3.3", "2.1-a=-1/2"): (Recipe(-D2), Recipe(D1 - EP)),
    ("3.3", "2.1-a=-1/2,b=3/2"): (Recipe(-D2), Recipe(D1 - EP)),
    ("3.3", "2.2"): _STD_A, ("3.3", "2.2-a=-1/2"): Recipe(EP),
    ("3.3", "2.3"): _STD_B, ("3.3", "2.4"): _STD_B,
    ("3.3", "3.1"): Recipe(D1), ("3.3", "3.1-a=-1/2"): Recipe(D1),
    ("3.3", "3.2"): Recipe(D1), ("3.3", "3.2-a=-1/2"): Recipe(D1),

    ("3.4", "1.1"): _STD_A, ("3.4", "1.2"): _STD_A, ("3.4", "1.3"): _STD_B,
    ("3.4", "1.3-b=-1/2"): Recipe(D2, NATURAL, (Probe(NATURAL, D1),)),
    ("3.4", "1.4"): _STD_B, ("3.4", "1.4-b=-1/2"): Recipe(D1),
    ("3.4", "2.1"): _STD_A,
    ("3.4", "2.1-a=-1/2"): Recipe(D1, NATURAL, (Probe(NATURAL, D2),)),
    ("3.4", "2.2"): _STD_A,
    ("3.4", "2.2-a=-1/2"): (Recipe(EP, NATURAL, (Probe(SYM2, ZERO, -D1 - EP),)), Recipe(-D2)),
    ("3.4", "2.3"): _STD_B, ("3.4", "2.4"): _STD_B,
    ("3.4", "2.3-b=a-1"): Recipe(D1), ("3.4", "2.3-b=a-1,a=-1/2"): Recipe(D1),
    ("3.4", "2.4-b=a-1"): Recipe(D1), ("3.4", "2.4-b=a-1,a=-1/2"): (Recipe(D1), Recipe(EP)),
    ("3.4", "3.1"): Recipe(D1 + D2, SYM2),
    ("3.4", "3.1-a=-1/2"): Recipe(-D1, NATURAL, (Probe(NATURAL, -D1),)),
    ("3.4", "3.2"): Recipe(D1 + D2, SYM2), ("3.4", "3.2-a=-1/2"): Recipe(EP),
}


def recipe_for(case: CaseId) -> tuple[Recipe, ...]:
    """Recipes to try in order for a case; empty when none is transcribed."""
    got = RECIPES.get((case.theorem, case.case), ())
    return got if isinstance(got, tuple) else (got,)


@dataclass
class Ambiguity:
    Q: VermaFlag
    R: VermaFlag
    probe_rep: FiniteRep
    probe_block: BlockLabel
    probe_pivot: Weight | None
    resolved: Resolution
    candidates: int = 2

    def describe(self) -> str:
        src = "candidate" if self.probe_pivot is None else f"P({self.probe_pivot})"
        return f"pr_{self.probe_block}({src} x {self.probe_rep}) -> {self.resolved.value}"


@dataclass
class Derivation:
    target: Weight
    case: CaseId
    pivot: Weight
    rep: FiniteRep
    projected: VermaFlag
    lower: list[tuple[Weight, int]]
    copies: int
    peeled: list[tuple[Weight, int]]
    result: VermaFlag
    candidates: int = 1
    ambiguity: Ambiguity | None = None
    fallback: bool = False

    def trace(self) -> list[str]:
        lines = [
            f"target   P({self.target})  [case {self.case}]",
            f"pivot    P({self.pivot}) x {self.rep}" + ("  (fallback search)" if self.fallback else ""),
            f"project  {len(self.projected)} Verma modules in {block_label(self.target)}",
        ]
        for nu, k in self.lower:
            lines.append(f"split    {k} x P({nu}) below the target")
        lines.append(f"copies   {self.copies} x P({self.target})")
        for nu, k in self.peeled:
            lines.append(f"split    {k} x P({nu}) above the target")
        if self.ambiguity is not None:
            amb = self.ambiguity
            lines.append(f"ambiguous  Q = {amb.Q.render()}")
            lines.append(f"           R = {amb.R.render()}")
            lines.append(f"probe    {amb.describe()}")
        lines.append(f"result   P({self.target}) = {self.result.render()}")
        return lines


def _split_lower(flag: VermaFlag, lam: Weight) -> tuple[VermaFlag, list[tuple[Weight, int]]]:
    """Remove every projective whose top is a minimal weight other than ``lam``."""
    lower: list[tuple[Weight, int]] = []
    rest = flag
    while rest:
        minima = [w for w in _bruhat_minima(rest) if w != lam]
        if not minima:
            break
        nu = minima[0]
        k = rest[nu]
        rest = rest - known_projective(nu) * k
        lower.append((nu, k))
    return rest, lower


def _below(v: Weight, w: Weight) -> bool:
    # v < w inside one block: difference in the simple-root cone
    d = w - v
    if d.da % 2 or d.db % 2 or d.dc % 2:
        return False
    return min(simple_root_coefficients(d)) >= 0


def candidate_flags(lam: Weight, flag: VermaFlag, copies: int) -> list[tuple[VermaFlag, list[tuple[Weight, int]]]]:
    """
    All ``(P_lam, others)`` with ``flag = copies * P_lam + sum of others``.

    ``P_lam`` must contain the forced terms; every remaining Verma module is
    either another copy inside ``P_lam`` or sits in a projective ``P_nu`` with
    ``nu`` above ``lam`` whose flag is known.
    """
    base = VermaFlag(mandatory_terms(lam).forced)
    try:
        rest = flag - base * copies
    except NegativeMultiplicity:
        return []
    results: list[tuple[VermaFlag, list[tuple[Weight, int]]]] = []

    def search(rest: VermaFlag, extra: Counter, others: list[tuple[Weight, int]]) -> None:
        if not rest:
            results.append((base + VermaFlag(extra), list(others)))
            return
        nu = _minimal(rest)
        k = rest[nu]
        if nu == lam:
            return
        for inside in range(k // copies, -1, -1):
            outside = k - inside * copies
            try:
                nxt = rest - VermaFlag({nu: inside * copies}) - known_projective(nu) * outside
            except NegativeMultiplicity:
                continue
            ext = Counter(extra)
            if inside:
                ext[nu] += inside
            search(nxt, ext, others + ([(nu, outside)] if outside else []))

    search(rest, Counter(), [])
    return results


class Engine:
    """
    Memoised derivations.

    Atypical pivots are derived recursively when ``recursive_pivots`` is set
    (falling back to the closed form only to break a cycle); projectives split
    off along the way always use the closed forms.
    """

    max_depth = 64

    def __init__(self, *, recursive_pivots: bool = True, allow_fallback: bool = True):
        self.recursive_pivots = recursive_pivots
        self.allow_fallback = allow_fallback
        self._memo: dict[Weight, Derivation] = {}
        self._active: set[Weight] = set()

    def pivot_flag(self, mu: Weight) -> VermaFlag:
        if not atypicality(mu):
            return typical_projective(mu)
        if self.recursive_pivots and mu not in self._active:
            return self.derive(mu).result
        return table_flag(mu)

    def derive(self, lam: Weight) -> Derivation:
        got = self._memo.get(lam)
        if got is not None:
            return got
        case = classify(lam)
        if len(self._active) >= self.max_depth:
            raise DerivationError(f"pivot chain deeper than {self.max_depth} at P({lam})")
        self._active.add(lam)
        try:
            errors: list[str] = []
            result = None
            for recipe in recipe_for(case):
                try:
                    result = self._attempt(lam, case, recipe)
                    break
                except DerivationError as exc:
                    errors.append(f"recipe {recipe.pivot_offset}/{recipe.rep}: {exc}")
            if result is None and self.allow_fallback:
                result = self._fallback(lam, case, errors)
            if result is None:
                raise DerivationError(f"no derivation for P({lam}) [{case}]: " + "; ".join(errors))
        finally:
            self._active.discard(lam)
        self._memo[lam] = result
        return result

    def _attempt(self, lam: Weight, case: CaseId, recipe: Recipe, *, fallback: bool = False) -> Derivation:
        pivot = lam + recipe.pivot_offset
        projected = project_flag(tensor_flag(self.pivot_flag(pivot), recipe.rep), block_label(lam))
        if lam not in projected:
            raise DerivationError(f"M({lam}) does not occur in P({pivot}) x {recipe.rep}")
        rest, lower = _split_lower(projected, lam)
        copies = rest[lam]
        if copies == 0:
            raise DerivationError(f"P({lam}) is not a summand of P({pivot}) x {recipe.rep}")
        cands = candidate_flags(lam, rest, copies)
        if not cands:
            raise DerivationError(f"no splitting of P({pivot}) x {recipe.rep} is consistent with the forced terms")
        flags = sorted({c for c, _ in cands}, key=len)
        ambiguity = None
        if len(flags) == 1:
            chosen = flags[0]
        else:
            chosen = None
            for probe in recipe.probes:
                block, probe_pivot = probe.resolve(lam)
                survivors = [f for f in flags
                             if _candidate_survives(lam, f, probe.rep, block, probe_pivot)]
                if len(survivors) != 1:
                    log.debug("probe %s/%s keeps %d of %d", probe.rep, block, len(survivors), len(flags))
                    continue
                chosen = survivors[0]
                q, top = flags[0], flags[-1]
                r = top - q if q <= top else VermaFlag()
                res = Resolution.Q_ONLY if chosen == q else Resolution.Q_PLUS_R
                ambiguity = Ambiguity(q, r, probe.rep, block, probe_pivot, res, len(flags))
                break
            if chosen is None:
                raise Inconclusive(f"{len(flags)} candidate flags for P({lam}) via P({pivot}) x {recipe.rep}; "
                                   "no probe leaves exactly one")
        peeled = next(o for c, o in cands if c == chosen)
        self._check(lam, chosen, projected)
        return Derivation(lam, case, pivot, recipe.rep, projected, lower, copies, peeled, chosen,
                          candidates=len(flags), ambiguity=ambiguity, fallback=fallback)

    def _check(self, lam: Weight, flag: VermaFlag, projected: VermaFlag) -> None:
        if flag[lam] != 1:
            raise DerivationError(f"M({lam}) has multiplicity {flag[lam]} in the derived flag")
        if not flag <= projected:
            raise DerivationError("derived flag is not contained in the projection")
        missing = mandatory_terms(lam).forced - set(flag.support())
        if missing:
            raise DerivationError(f"forced terms missing: {sorted(map(str, missing))}")

    def _fallback(self, lam: Weight, case: CaseId, errors: list[str]) -> Derivation | None:
        """Try every pivot one representation weight away; accept only a unique answer."""
        answers: dict[VermaFlag, Derivation] = {}
        for rep in REPS:
            offsets = sorted({-w for w, _ in rep.weights if w != ZERO}, key=lambda w: w.doubled())
            for off in offsets:
                probes = tuple(Probe(r, bo) for r in REPS for bo in _probe_offsets())
                try:
                    d = self._attempt(lam, case, Recipe(off, rep, probes), fallback=True)
                except (DerivationError, RecursionError) as exc:
                    errors.append(f"fallback {rep}/{off}: {exc}")
                    continue
                answers.setdefault(d.result, d)
        if len(answers) == 1:
            return next(iter(answers.values()))
        if len(answers) > 1:
            errors.append(f"fallback pivots disagree ({len(answers)} answers)")
        return None


def _probe_offsets() -> list[Weight]:
    return [ZERO, DELTA1, -DELTA1, DELTA2, -DELTA2, EPSILON, -EPSILON, DELTA2 * -2]


_DEFAULT = Engine()


def derive_flag(lam: Weight, engine: Engine | None = None) -> Derivation:
    return (engine or _DEFAULT).derive(lam)


@dataclass
class VerificationReport:
    bound: int
    checked: int = 0
    failures: list[str] = field(default_factory=list)
    by_case: Counter = field(default_factory=Counter)
    ambiguous: int = 0
    fallbacks: int = 0
    identities: int = 0

    @property
    def ok(self) -> bool:
        return not self.failures

    @property
    def first_failure(self) -> str | None:
        return self.failures[0] if self.failures else None

    def summary(self) -> str:
        return f"{self.checked} weights checked, {len(self.failures)} failures"

    def to_json(self) -> dict:
        return {
            "bound": self.bound, "checked": self.checked, "failures": self.failures,
            "ambiguous": self.ambiguous, "fallbacks": self.fallbacks,
            "identities": self.identities, "by_case": dict(sorted(self.by_case.items())),
        }


def verify_range(bound: int, engine: Engine | None = None, *, identities: bool = True) -> VerificationReport:
    """Derive every atypical weight in the box, compare with the closed forms, replay the golden identities."""
    from .golden import check_identity, load_corpus

    engine = engine or Engine()
    report = VerificationReport(bound)
    for lam in sorted(box_weights(bound), key=canonical_order_key):
        if not atypicality(lam):
            continue
        report.checked += 1
        case = classify(lam)
        report.by_case[str(case)] += 1
        expected = table_flag(lam)
        try:
            d = engine.derive(lam)
        except DerivationError as exc:
            report.failures.append(f"{lam}: {exc}")
            continue
        if d.ambiguity is not None:
            report.ambiguous += 1
        if d.fallback:
            report.fallbacks += 1
        if d.result != expected:
            report.failures.append(
                f"{lam} [{case}]: derived {d.result.render()} but table gives {expected.render()}")
        if not mandatory_terms(lam).forced <= set(expected.support()):
            report.failures.append(f"{lam}: forced terms not in table flag")
    if identities:
        for ident in load_corpus()[1]:
            report.identities += 1
            try:
                ok, msg = check_identity(ident)
            except (NegativeMultiplicity, MultipleMinima) as exc:
                ok, msg = False, f"{ident.name}: {exc}"
            if not ok:
                report.failures.append(msg)
    return report
