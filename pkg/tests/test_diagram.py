import random

import pytest
from hypothesis import given, settings

from parityknots import (
    GaussPhrase,
    LongGaussDiagram,
    MalformedCode,
    SignMismatch,
    Smoothing,
    UnknownChord,
    canonical_key,
    delete_chords,
    interlacement_counts,
    is_split,
    linked,
    parse_corpus,
    parse_free,
    parse_virtual,
    smooth,
)

from helpers import oracle_interlacement, phrases, random_link, virtuals


def test_parse_free_examples():
    p = parse_free("1 2 1 2")
    assert p.components == (("1", "2", "1", "2"),) and p.free_loops == 0
    q = parse_free("()")
    assert q.components == () and q.free_loops == 1 and q.n_components == 1
    r = parse_free("1 2 / 1 2")
    assert r.n_components == 2
    assert {ci for ci, _ in r.ends["1"]} == {0, 1}
    assert {ci for ci, _ in r.ends["2"]} == {0, 1}


@pytest.mark.parametrize("bad", ["1 2", "1 1 1", "1 2 1 2 /", "", "a-b a-b"])
def test_parse_free_rejects(bad):
    with pytest.raises(MalformedCode):
        parse_free(bad)


def test_parse_virtual_examples():
    d = parse_virtual("O1+ U1+")
    assert d.n_chords == 1 and d.sign == {"1": 1} and d.arrow == {"1": (0, 1)}
    e = parse_virtual("O1+ O2- U1+ U2-")
    assert e.sign == {"1": 1, "2": -1}
    assert linked("1", "2", e)
    with pytest.raises(SignMismatch):
        parse_virtual("O1+ U1-")
    with pytest.raises(MalformedCode):
        parse_virtual("O1+ O1+")


def test_linked_examples():
    assert linked("1", "2", parse_free("1 2 1 2"))
    assert not linked("1", "2", parse_free("1 1 2 2"))
    assert not linked("1", "3", parse_free("1 2 1 3 2 3"))
    assert not linked("1", "1", parse_free("1 2 1 2"))


def test_interlacement_examples():
    assert interlacement_counts(parse_free("1 2 1 2")) == {"1": 1, "2": 1}
    assert interlacement_counts(parse_free("1 2 3 1 2 3")) == {"1": 2, "2": 2, "3": 2}
    assert interlacement_counts(parse_free("()")) == {}


def test_canonical_key_examples():
    assert canonical_key(parse_free("1 2 1 2")) == canonical_key(parse_free("2 1 2 1"))
    assert canonical_key(parse_free("1 2 1 2")) == canonical_key(parse_free("2 1 2 1"[::-1]))
    assert canonical_key(parse_free("1 2 1 2")) != canonical_key(parse_free("1 1 2 2"))
    assert canonical_key(parse_free("1 1 / 2 2")) != canonical_key(parse_free("1 2 / 1 2"))
    assert canonical_key(parse_free("a b / a b")) == canonical_key(parse_free("2 1 / 1 2"))


def test_smooth_examples():
    p = parse_free("1 2 1 2")
    assert canonical_key(smooth(p, "1", Smoothing.SPLIT)) == canonical_key(parse_free("2 / 2"))
    assert canonical_key(smooth(p, "1", "JOIN")) == canonical_key(parse_free("2 2"))
    q = smooth(parse_free("1 1"), "1", Smoothing.SPLIT)
    assert q.components == () and q.free_loops == 2
    with pytest.raises(UnknownChord):
        smooth(p, "9", Smoothing.SPLIT)


def test_string_round_trip_and_corpus():
    for text in ["1 2 1 2", "1 2 / 1 2 / ()", "()"]:
        assert str(parse_free(text)) == text
    ds = parse_corpus(["# comment", "1 1", "", "O1+ U1+"][:3])
    assert len(ds) == 1
    vs = parse_corpus(["O1+ U1+", "O1- U1-"], virtual=True)
    assert [str(v) for v in vs] == ["O1+ U1+", "O1- U1-"]


def test_delete_and_split():
    p = parse_free("1 2 / 1 2 / 3 3")
    assert is_split(p)
    q = delete_chords(p, ["3"])
    assert q.free_loops == 1 and is_split(q)
    assert not is_split(parse_free("2 / 2"))
    assert is_split(parse_free("1 1 / ()"))
    assert not is_split(parse_free("()"))


def test_long_diagram_shift():
    d = LongGaussDiagram(parse_free("1 2 1 3 2 3"), 0)
    assert d.shifted(2).word == ("1", "3", "2", "3", "1", "2")
    assert d.shifted(6).word == d.word
    with pytest.raises(MalformedCode):
        LongGaussDiagram(parse_free("1 / 1"))


@given(phrases())
def test_round_trip_preserves_key(p):
    assert canonical_key(parse_free(str(p))) == canonical_key(p)


@given(virtuals())
def test_virtual_round_trip(d):
    assert parse_virtual(str(d)) == d
    assert canonical_key(canonical_key(d).diagram()) == canonical_key(d)


@given(phrases(min_chords=1))
def test_interlacement_matches_oracle(p):
    assert interlacement_counts(p) == oracle_interlacement(p)
    for c in p.chords:
        assert not linked(c, c, p)
        for d in p.chords:
            assert linked(c, d, p) == linked(d, c, p)


@settings(max_examples=60)
@given(phrases(max_chords=6))
def test_key_invariant_under_symmetries(p):
    rng = random.Random(str(p))
    (w,) = p.components or ((),)
    if not w:
        return
    k = rng.randrange(len(w))
    rotated = w[k:] + w[:k]
    if rng.random() < 0.5:
        rotated = rotated[::-1]
    relabel = {c: f"z{i}" for i, c in enumerate(rng.sample(p.chords, len(p.chords)))}
    q = GaussPhrase((tuple(relabel[c] for c in rotated),))
    assert canonical_key(q) == canonical_key(p)
    assert canonical_key(canonical_key(p).diagram()) == canonical_key(p)


def test_link_key_invariant_under_component_permutation():
    rng = random.Random(4)
    for _ in range(50):
        p = random_link(rng, rng.randint(2, 5), rng.choice((2, 3)))
        comps = list(p.components)
        rng.shuffle(comps)
        comps = [c[::-1] if rng.random() < 0.5 else c for c in comps]
        assert canonical_key(GaussPhrase(tuple(comps), p.free_loops)) == canonical_key(p)


@given(phrases(min_chords=1))
def test_smoothing_component_counts(p):
    for c in p.chords:
        assert smooth(p, c, Smoothing.SPLIT).n_components == 2
        assert smooth(p, c, Smoothing.JOIN).n_components == 1
        assert smooth(p, c, Smoothing.SPLIT).n_chords == p.n_chords - 1


def test_merge_across_components():
    rng = random.Random(8)
    for _ in range(40):
        p = random_link(rng, rng.randint(1, 5), 2)
        for c, ((ci, _), (cj, _)) in p.ends.items():
            if ci != cj:
                assert smooth(p, c, Smoothing.MERGE).n_components == 1
                assert smooth(p, c, Smoothing.JOIN).n_components == 1


@given(phrases(min_chords=1))
def test_join_halves_partition_crossers(p):
    # Splitting at c puts the chords crossing c on both circles, the rest on one.
    for c in p.chords:
        q = smooth(p, c, Smoothing.SPLIT)
        spanning = {d for d, ((ci, _), (cj, _)) in q.ends.items() if ci != cj}
        assert spanning == {d for d in p.chords if linked(c, d, p)}
