"""Exhaustive and targeted searches over small chord diagrams."""

from __future__ import annotations

import random
from typing import Iterator, Optional, Sequence

from .diagram import CanonicalKey, GaussPhrase, VirtualGaussDiagram, canonical_key
from .errors import BudgetExceeded, WrongComponentCount
from .invariants import (
    L_invariant,
    bracket,
    bracket_links,
    default_parity,
    is_irreducibly_odd,
    turaev_delta,
    x_even,
)
from .moves import bfs_reachable

__all__ = [
    "matching_count",
    "matchings",
    "enumerate_knots",
    "find_irreducibly_odd",
    "find_nonzero_L",
    "trivializations",
    "fast_L",
    "find_L_witness",
    "oracle_equiv",
    "SAME",
    "DIFFERENT",
    "UNKNOWN",
]

DEFAULT_BUDGET = 200_000


def matching_count(n: int) -> int:
    """Number of perfect matchings of ``2n`` points, ``(2n - 1)!!``."""
    out = 1
    for k in range(1, 2 * n, 2):
        out *= k
    return out


def matchings(points: Sequence[int]) -> Iterator[list[tuple[int, int]]]:
    if not points:
        yield []
        return
    first, rest = points[0], points[1:]
    for i, other in enumerate(rest):
        remaining = rest[:i] + rest[i + 1:]
        for m in matchings(remaining):
            yield [(first, other)] + m


def _word(pairs: Sequence[tuple[int, int]], length: int) -> tuple[int, ...]:
    w = [0] * length
    for label, (i, j) in enumerate(pairs, 1):
        w[i] = w[j] = label
    return tuple(w)


def enumerate_knots(max_chords: int, budget: int = DEFAULT_BUDGET, min_chords: int = 0) -> list[CanonicalKey]:
    """Canonical keys of all one-component free diagrams with ``min_chords..max_chords`` chords."""
    cost = sum(matching_count(n) for n in range(min_chords, max_chords + 1))
    if cost > budget:
        raise BudgetExceeded(f"enumeration needs {cost} words, budget is {budget}")
    keys: set[CanonicalKey] = set()
    for n in range(min_chords, max_chords + 1):
        if n == 0:
            keys.add(CanonicalKey((), 1))
            continue
        for pairs in matchings(list(range(2 * n))):
            w = tuple(str(x) for x in _word(pairs, 2 * n))
            keys.add(canonical_key(GaussPhrase((w,))))
    return sorted(keys, key=lambda k: (k.n_chords, k))


def find_irreducibly_odd(max_chords: int, budget: int = DEFAULT_BUDGET) -> list[CanonicalKey]:
    return [k for k in enumerate_knots(max_chords, budget) if is_irreducibly_odd(k.diagram())]


def find_nonzero_L(max_chords: int, budget: int = DEFAULT_BUDGET) -> list[CanonicalKey]:
    return [k for k in enumerate_knots(max_chords, budget) if L_invariant(k.diagram())]


def trivializations(p, max_chords: Optional[int] = None, budget: int = DEFAULT_BUDGET) -> list[CanonicalKey]:
    """Smallest diagrams reachable from ``p`` without exceeding ``max_chords`` chords."""
    if max_chords is None:
        max_chords = p.n_chords
    reach = bfs_reachable(p, max_chords, node_cap=budget)
    low = min(k.n_chords for k in reach)
    return sorted(k for k in reach if k.n_chords == low)


# ---------------------------------------------------------------------------
# the search for large L


def fast_L(word: Sequence[int]) -> int:
    """``L`` of a one-component word given as integer labels, computed directly.

    Equivalent to :func:`~parityknots.invariants.L_invariant` on the same
    word; used by the witness search where speed matters.
    """
    ends: dict[int, list[int]] = {}
    for i, c in enumerate(word):
        ends.setdefault(c, []).append(i)
    labels = list(ends)
    span = {c: (ends[c][0], ends[c][1]) for c in labels}
    link = {c: set() for c in labels}
    for a_i, a in enumerate(labels):
        i, j = span[a]
        for b in labels[a_i + 1:]:
            k, m = span[b]
            if (i < k < j) != (i < m < j):
                link[a].add(b)
                link[b].add(a)
    odd = {c for c in labels if len(link[c]) % 2}
    letter = {}
    for c in labels:
        if c not in odd:
            letter[c] = 0
        else:
            letter[c] = 1 if len(link[c] & odd) % 2 else -1
    x = y = 0
    for c in word:
        t = letter[c]
        if t == 0:
            x ^= 1
        else:
            y += t if (x + y) % 2 == 0 else -t
    if x or y % 4:
        raise AssertionError(f"landed at ({x},{y})")
    return abs(y) // 4


def _structured_words(n_odd_half: int) -> Iterator[tuple[int, ...]]:
    # One even chord from position 0 to an odd position; the other chords
    # join positions of equal parity, half on even and half on odd positions.
    length = 2 * (2 * n_odd_half + 1)
    for q in range(1, length, 2):
        evens = [i for i in range(2, length, 2)]
        odds = [i for i in range(1, length, 2) if i != q]
        for me in matchings(evens):
            for mo in matchings(odds):
                yield _word([(0, q)] + me + mo, length)


def find_L_witness(
    target: int = 4,
    max_n: int = 11,
    seed: int = 0,
    samples: int = 200_000,
) -> tuple[Optional[int], Optional[GaussPhrase], list[str]]:
    """Smallest chord count at which a diagram with ``L >= target`` shows up.

    ``|y| = 4L`` is bounded by twice the number of odd chords, so
    ``L = target`` needs at least ``2 * target`` odd chords together with an
    even chord.  At that minimal size the layout is forced (see
    :func:`_structured_words`) and the search is exhaustive; beyond it words
    are sampled at random.  Returns ``(n, witness, log)``.
    """
    log: list[str] = []
    rng = random.Random(seed)
    n_min = 2 * target + 1
    for n in range(1, max_n + 1):
        if n < n_min:
            log.append(f"n={n}: impossible, fewer than {n_min} chords")
            continue
        if n == n_min:
            count = 0
            for w in _structured_words(target):
                count += 1
                if fast_L(w) >= target:
                    log.append(f"n={n}: found after {count} structured words")
                    return n, _as_phrase(w), log
            log.append(f"n={n}: none among {count} structured words (exhaustive)")
            continue
        for _ in range(samples):
            pts = list(range(2 * n))
            rng.shuffle(pts)
            pairs = [(pts[2 * i], pts[2 * i + 1]) for i in range(n)]
            w = _word(pairs, 2 * n)
            if fast_L(w) >= target:
                log.append(f"n={n}: found by random sampling")
                return n, _as_phrase(w), log
        log.append(f"n={n}: none among {samples} random words")
    return None, None, log


def _as_phrase(w: Sequence[int]) -> GaussPhrase:
    return GaussPhrase((tuple(str(x) for x in w),))


# ---------------------------------------------------------------------------
# equivalence oracle

SAME, DIFFERENT, UNKNOWN = "SAME", "DIFFERENT", "UNKNOWN"


def _fingerprint(d):
    if isinstance(d, VirtualGaussDiagram):
        return (x_even(d), bracket(d), turaev_delta(d), L_invariant(d))
    if d.n_components == 1:
        return (bracket(d), turaev_delta(d), L_invariant(d))
    return (d.n_components, bracket_links(d, default_parity(d)))


def oracle_equiv(p, q, max_chords: Optional[int] = None, budget: int = DEFAULT_BUDGET) -> str:
    """Decide equivalence when a move path or a separating invariant is found."""
    if type(p) is not type(q):
        raise TypeError("both diagrams must be of the same kind")
    if canonical_key(p) == canonical_key(q):
        return SAME
    if p.n_components != q.n_components:
        return DIFFERENT
    try:
        if _fingerprint(p) != _fingerprint(q):
            return DIFFERENT
    except WrongComponentCount:
        pass
    if max_chords is None:
        max_chords = max(p.n_chords, q.n_chords)
    max_chords = max(max_chords, p.n_chords, q.n_chords)
    try:
        if canonical_key(q) in bfs_reachable(p, max_chords, node_cap=budget):
            return SAME
    except BudgetExceeded:
        pass
    return UNKNOWN
