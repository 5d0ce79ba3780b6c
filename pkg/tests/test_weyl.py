import itertools

import pytest

from osp34.weights import Weight, bilinear, box_weights
from osp34.weyl import (
    DIHEDRAL, E, ELEMENTS, R, S, T, WeylElement, bruhat_leq_group, coset_decomposition, from_word,
    min_coset_reps, orbit, stabilizer,
)

# the dihedral Bruhat graph: covering edges between reduced words
HASSE = {
    "": {"r", "s"},
    "r": {"rs", "sr"}, "s": {"rs", "sr"},
    "rs": {"rsr", "srs"}, "sr": {"rsr", "srs"},
    "rsr": {"rsrs"}, "srs": {"rsrs"},
    "rsrs": set(),
}


def _closure(graph):
    reach = {k: {k} for k in graph}
    changed = True
    while changed:
        changed = False
        for k in graph:
            new = set().union(*(reach[n] for n in graph[k])) | reach[k]
            if new != reach[k]:
                reach[k] = new
                changed = True
    return reach


def test_sixteen_elements_group_axioms():
    assert len(set(ELEMENTS)) == 16
    for g, h, k in itertools.product(ELEMENTS, repeat=3):
        assert (g * h) * k == g * (h * k)
    for g in ELEMENTS:
        assert g * E == g == E * g
        assert g * g.inverse() == E


def test_presentation_relations():
    power = lambda g, n: from_word("") if n == 0 else g * power(g, n - 1)
    assert R * R == S * S == T * T == E
    assert power(R * S, 4) == E and power(R * S, 2) != E
    assert power(R * T, 2) == E and power(S * T, 2) == E


def test_action_examples():
    assert R.apply(Weight.parse("3/2,1/2|1/2")) == Weight.parse("1/2,3/2|1/2")
    assert T.apply(Weight.parse("5/2,3/2|7/2")) == Weight.parse("5/2,3/2|-7/2")
    assert S.apply(Weight.parse("5/2,3/2|7/2")) == Weight.parse("5/2,-3/2|7/2")


def test_length_and_form():
    assert sorted({g.length for g in ELEMENTS}) == [0, 1, 2, 3, 4, 5]
    u, v = Weight.parse("3/2,-1/2|5/2"), Weight.parse("1/2,7/2|-3/2")
    for g in ELEMENTS:
        assert bilinear(g.apply(u), g.apply(v)) == bilinear(u, v)
        for gen in (R, S, T):
            assert abs((g * gen).length - g.length) == 1


def test_dihedral_bruhat_matches_graph():
    reach = _closure(HASSE)
    by_word = {from_word(w): w for w in HASSE}
    assert set(by_word) == set(DIHEDRAL)
    for u, v in itertools.product(DIHEDRAL, repeat=2):
        assert bruhat_leq_group(u, v) == (by_word[v] in reach[by_word[u]]), (u, v)


def test_bruhat_group_examples():
    assert bruhat_leq_group(R, R * S)
    assert not bruhat_leq_group(R, S)
    assert all(bruhat_leq_group(E, g) for g in ELEMENTS)


def test_json_roundtrip():
    for g in ELEMENTS:
        assert WeylElement.from_json(g.to_json()) == g
        assert from_word(g.word) == g


@pytest.mark.parametrize("text,stab,reps", [
    ("-3/2,-1/2|-1/2", 1, 16), ("-1/2,-1/2|-1/2", 2, 8), ("-5/2,-3/2|-1/2", 1, 16),
])
def test_stabilizer_and_coset_reps(text, stab, reps):
    lam = Weight.parse(text)
    assert len(stabilizer(lam)) == stab
    assert len(min_coset_reps(lam)) == reps
    assert R in stabilizer(lam) or stab == 1


def test_orbit_stabilizer_and_decomposition():
    for w in box_weights(7):
        assert len(orbit(w)) * len(stabilizer(w)) == 16
        lam0, sigma = coset_decomposition(w)
        assert sigma.apply(lam0) == w
        assert sigma in min_coset_reps(lam0)


def test_min_coset_reps_rejects_non_antidominant():
    with pytest.raises(ValueError):
        min_coset_reps(Weight.parse("1/2,1/2|1/2"))
