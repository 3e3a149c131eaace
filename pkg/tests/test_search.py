import random

import pytest

from parityknots import (
    BudgetExceeded,
    L_invariant,
    canonical_key,
    is_irreducibly_odd,
    parse_free,
    parse_virtual,
    random_walk,
)
from parityknots.search import (
    DIFFERENT,
    SAME,
    UNKNOWN,
    enumerate_knots,
    fast_L,
    find_irreducibly_odd,
    find_L_witness,
    find_nonzero_L,
    matching_count,
    oracle_equiv,
    trivializations,
)

from helpers import random_word

# Chord diagrams with n chords up to rotation and reflection.
CHORD_DIAGRAM_COUNTS = [1, 1, 2, 5, 17, 79, 554]


def test_enumeration_counts():
    for n, count in enumerate(CHORD_DIAGRAM_COUNTS):
        assert len(enumerate_knots(n, min_chords=n)) == count
    assert matching_count(4) == 105


def test_enumeration_budget():
    with pytest.raises(BudgetExceeded):
        enumerate_knots(8)


def test_irreducibly_odd_search():
    assert find_irreducibly_odd(3) == []
    assert find_irreducibly_odd(5) == []
    found = find_irreducibly_odd(6)
    assert found and all(k.n_chords == 6 for k in found)
    assert canonical_key(parse_free("1 2 1 3 4 2 5 3 5 6 4 6")) in found
    assert all(is_irreducibly_odd(k.diagram()) for k in found)


def test_nonzero_L_search():
    assert find_nonzero_L(4) == []
    found = find_nonzero_L(5)
    assert found and min(L_invariant(k.diagram()) for k in found) >= 1


def test_trivializable():
    assert trivializations(parse_free("1 2 3 1 2 3")) == [canonical_key(parse_free("()"))]
    g = parse_free("1 2 1 3 4 2 5 3 5 6 4 6")
    assert trivializations(g) == [canonical_key(g)]


def test_fast_L_agrees():
    rng = random.Random(50)
    for _ in range(300):
        w = random_word(rng, rng.randint(1, 9))
        p = parse_free(" ".join(w))
        assert fast_L([int(x) for x in w]) == L_invariant(p)


def test_L_witness_at_nine_chords():
    n, w, log = find_L_witness(4, max_n=9)
    assert n == 9
    assert L_invariant(w) == 4
    assert any("impossible" in line for line in log)


def test_oracle_equiv():
    assert oracle_equiv(parse_free("1 2 1 2"), parse_free("()")) == SAME
    assert oracle_equiv(parse_free("1 2 1 3 4 2 5 3 5 6 4 6"), parse_free("()")) == DIFFERENT
    g = parse_free("1 2 1 3 4 2 5 3 5 6 4 6")
    h = random_walk(g, 4, 1, max_chords=7)
    assert oracle_equiv(g, h, max_chords=7) in (SAME, UNKNOWN)
    trefoil = parse_virtual("O1+ U2+ O3+ U1+ O2+ U3+")
    assert oracle_equiv(trefoil, parse_virtual("()")) == DIFFERENT
    assert oracle_equiv(parse_virtual("O1+ U1+"), parse_virtual("()")) == SAME
