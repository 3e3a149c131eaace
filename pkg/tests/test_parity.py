import random

import pytest
from hypothesis import given, settings

from parityknots import (
    MoveKind,
    NotInFiltrationLevel,
    WrongComponentCount,
    apply_move,
    check_parity_axioms,
    classical_corpus,
    component_parity,
    find_all_moves,
    find_moves,
    gaussian_parity,
    hierarchy,
    hierarchy_parity,
    index,
    parse_free,
    parse_virtual,
)
from parityknots.moves import random_move

from helpers import oracle_interlacement, phrases, random_link, virtuals


def test_gaussian_parity_examples():
    assert gaussian_parity(parse_free("1 2 1 2")) == {"1": 1, "2": 1}
    assert gaussian_parity(parse_free("1 2 3 1 2 3")) == {"1": 0, "2": 0, "3": 0}
    assert gaussian_parity(parse_free("1 2 1 3 2 3")) == {"1": 1, "2": 0, "3": 1}


def test_component_parity_examples():
    assert component_parity(parse_free("1 2 / 1 2")) == {"1": 1, "2": 1}
    assert component_parity(parse_free("1 1 3 / 3 2 2")) == {"1": 0, "2": 0, "3": 1}
    with pytest.raises(WrongComponentCount):
        component_parity(parse_free("1 2 1 2"))


def test_index_examples():
    trefoil = parse_virtual("O1+ U2+ O3+ U1+ O2+ U3+")
    assert index(trefoil) == {"1": 0, "2": 0, "3": 0}
    assert index(parse_virtual("O1+ O2+ U1+ U2+")) == {"1": 1, "2": 1}
    assert index(parse_virtual("O1+ U1+ O2- U2-")) == {"1": 0, "2": 0}
    # the word 1 2 1 3 2 3 is not a classical knot: chord 1 has index 1
    assert index(parse_virtual("O1+ O2+ U1+ O3+ U2+ U3+"))["1"] == 1


def test_classical_indices_vanish():
    for d in classical_corpus().values():
        assert set(index(d).values()) == {0}
        assert set(hierarchy_parity(d, 3).values()) == {0}


def test_hierarchy_examples():
    # chord 1 crosses two positive chords heading the same way: index 2
    d = parse_virtual("O1+ O2+ O3+ U1+ U2+ U3+")
    ind = index(d)
    assert ind["1"] == 2
    assert hierarchy_parity(d, 1)["1"] == 1
    with pytest.raises(NotInFiltrationLevel):
        hierarchy_parity(parse_virtual("O1+ O2+ U1+ U2+"), 1)
    e = parse_virtual("U4- U3- O2- O4- U6+ U1+ O5- U2- O3- U5- O1+ O6+")
    assert index(e)["2"] == 4
    assert hierarchy_parity(e, 1)["2"] == 0
    assert hierarchy_parity(e, 2)["2"] == 1
    assert hierarchy(0) is gaussian_parity


def test_axiom_checker_examples():
    p = parse_free("1 1 2 3 2 3")
    (m,) = find_moves(p, MoveKind.R1_MINUS)
    assert check_parity_axioms(gaussian_parity, p, m)
    for m in find_moves(parse_free("1 2 1 2"), MoveKind.R2_MINUS):
        assert check_parity_axioms(gaussian_parity, parse_free("1 2 1 2"), m)
    always_odd = lambda d: {c: 1 for c in d.chords}  # noqa: E731
    (m,) = find_moves(p, MoveKind.R1_MINUS)
    assert not check_parity_axioms(always_odd, p, m)


@given(virtuals(min_chords=1))
def test_parity_is_index_mod_two(d):
    par = gaussian_parity(d)
    ind = index(d)
    assert all(ind[c] % 2 == par[c] for c in d.chords)
    assert par == {c: v % 2 for c, v in oracle_interlacement(d.base).items()}


@settings(max_examples=150)
@given(phrases(max_chords=7))
def test_gaussian_parity_axioms_on_every_move(p):
    for m in find_all_moves(p, p.n_chords + 1):
        assert check_parity_axioms(gaussian_parity, p, m)


@settings(max_examples=80)
@given(virtuals(max_chords=6))
def test_index_under_moves(d):
    for m in find_all_moves(d, d.n_chords + 1):
        e = apply_move(d, m)
        before, after = index(d), index(e)
        for c in set(before) & set(after):
            assert before[c] == after[c]
        if m.kind in (MoveKind.R1_MINUS, MoveKind.R1_PLUS):
            (c,) = m.chords
            assert (before if m.kind is MoveKind.R1_MINUS else after)[c] == 0
        elif m.kind in (MoveKind.R2_MINUS, MoveKind.R2_PLUS):
            side = before if m.kind is MoveKind.R2_MINUS else after
            a, b = m.chords
            assert side[a] == side[b]
        else:
            a, b, c = (before[x] for x in m.chords)
            assert any(a + s * b + t * c == 0 for s in (1, -1) for t in (1, -1))


def test_component_parity_axioms():
    rng = random.Random(12)
    checked = 0
    while checked < 400:
        p = random_link(rng, rng.randint(1, 6))
        m = random_move(p, rng, max_chords=8)
        if m is None or apply_move(p, m).n_components != 2:
            continue
        assert check_parity_axioms(component_parity, p, m)
        checked += 1


def test_hierarchy_axioms_inside_level():
    rng = random.Random(13)
    checked = 0
    while checked < 300:
        if rng.random() < 0.5:
            d = parse_virtual("O1+ O2+ O3+ U1+ U2+ U3+")
        else:
            d = rng.choice(list(classical_corpus().values()))
        for _ in range(3):
            m = random_move(d, rng, max_chords=d.n_chords + 2)
            e = apply_move(d, m)
            if all(v % 2 == 0 for v in index(e).values()):
                d = e
        m = random_move(d, rng, max_chords=d.n_chords + 2)
        e = apply_move(d, m)
        if any(v % 2 for v in index(e).values()):
            continue
        assert check_parity_axioms(hierarchy(1), d, m)
        checked += 1


def test_gaussian_parity_is_not_a_link_parity():
    # A third move on a two-component phrase that changes the parity of a
    # bystander when chords joining the components are declared odd.
    p = parse_free("a b f a c f / b c")
    bad = [m for m in find_moves(p, MoveKind.R3) if not check_parity_axioms(gaussian_parity, p, m)]
    assert bad
    assert all(check_parity_axioms(component_parity, p, m) for m in find_moves(p, MoveKind.R3))
