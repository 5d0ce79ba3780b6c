"""
Golden corpus: the closed forms written out in a small text notation, and
projection identities used as a regression suite.

The formulas here are an independent transcription of the closed forms; they
are evaluated with :func:`eval_formula` and compared with :mod:`osp34.table`.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from importlib import resources

from .flags import VermaFlag, rep_by_name, sigma_sum, tensor_flag
from .linkage import block_label, project_flag
from .weights import Weight

__all__ = ["FormulaEntry", "Identity", "load_corpus", "eval_formula", "parse_projective_sum",
           "check_identity"]

_TERM = re.compile(r"^\s*(\d*)\s*([MSP])\(([^)]*)\)\s*$")
_ATOM = re.compile(r"([+-]?)\s*(\d+/\d+|\d+|a|b)")


@dataclass(frozen=True)
class FormulaEntry:
    theorem: str
    case: str
    formula: str
    examples: tuple[Weight, ...]
    alternatives: tuple[str, ...] = ()
    inconsistent: tuple[str, ...] = ()


@dataclass(frozen=True)
class Identity:
    name: str
    pivot: Weight
    rep: str
    block: Weight
    result: str
    length: int | None = None


def _coord(expr: str, env: dict[str, Fraction]) -> Fraction:
    expr = expr.replace(" ", "")
    pos, total = 0, Fraction(0)
    for m in _ATOM.finditer(expr):
        if m.start() != pos:
            raise ValueError(f"cannot read coordinate {expr!r}")
        pos = m.end()
        val = env[m.group(2)] if m.group(2) in env else Fraction(m.group(2))
        total += -val if m.group(1) == "-" else val
    if pos != len(expr) or not expr:
        raise ValueError(f"cannot read coordinate {expr!r}")
    return total


def _split_terms(text: str) -> list[str]:
    # split on '+' outside parentheses
    out, depth, cur = [], 0, ""
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "+" and depth == 0:
            out.append(cur)
            cur = ""
        else:
            cur += ch
    out.append(cur)
    return [t for t in out if t.strip()]


def _terms(text: str, env: dict[str, Fraction]):
    for raw in _split_terms(text):
        m = _TERM.match(raw)
        if not m:
            raise ValueError(f"bad term {raw!r}")
        mult = int(m.group(1) or 1)
        left, c = m.group(3).split("|")
        a, b = left.split(",")
        yield mult, m.group(2), Weight.of(_coord(a, env), _coord(b, env), _coord(c, env))


def eval_formula(text: str, lam: Weight) -> VermaFlag:
    """
    >>> eval_formula("M(a,b|a) + M(a+1,b|a+1)", Weight.parse("7/2,3/2|7/2")).render()
    'M(7/2,3/2|7/2) + M(9/2,3/2|9/2)'
    """
    env = {"a": lam.a, "b": lam.b}
    total = VermaFlag()
    for mult, kind, w in _terms(text, env):
        if kind == "P":
            raise ValueError("projective terms are not allowed in a flag formula")
        piece = sigma_sum(w) if kind == "S" else VermaFlag([w])
        total = total + piece * mult
    return total


def parse_projective_sum(text: str) -> list[tuple[Weight, int]]:
    out = []
    for mult, kind, w in _terms(text, {}):
        if kind != "P":
            raise ValueError(f"expected P(...) terms, got {kind}")
        out.append((w, mult))
    return out


@lru_cache(maxsize=1)
def load_corpus() -> tuple[tuple[FormulaEntry, ...], tuple[Identity, ...]]:
    raw = json.loads(resources.files("osp34").joinpath("data/golden.json").read_text())
    formulas = tuple(
        FormulaEntry(e["theorem"], e["case"], e["formula"],
                     tuple(Weight.parse(x) for x in e["examples"]),
                     tuple(e.get("alternatives", ())), tuple(e.get("inconsistent", ())))
        for e in raw["formulas"])
    identities = tuple(
        Identity(e["name"], Weight.parse(e["pivot"]), e["rep"], Weight.parse(e["block"]),
                 e["result"], e.get("length"))
        for e in raw["identities"])
    return formulas, identities


def identity_projection(ident: Identity) -> VermaFlag:
    from .engine import known_projective

    source = known_projective(ident.pivot)
    return project_flag(tensor_flag(source, rep_by_name(ident.rep)), block_label(ident.block))


def check_identity(ident: Identity) -> tuple[bool, str]:
    """Peel the projection and compare with the recorded decomposition."""
    from .engine import peel

    flag = identity_projection(ident)
    got = sorted(peel(flag))
    want = sorted(parse_projective_sum(ident.result))
    if ident.length is not None and len(flag) != ident.length:
        return False, f"{ident.name}: projection has {len(flag)} terms, expected {ident.length}"
    if got != want:
        shown = " + ".join(f"{k if k > 1 else ''}P({w})" for w, k in got)
        return False, f"{ident.name}: peeled {shown}"
    return True, ident.name
