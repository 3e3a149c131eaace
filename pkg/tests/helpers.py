"""Random diagram generators and independent oracles used across the tests."""

from __future__ import annotations

import math
import random

from hypothesis import strategies as st

from parityknots import GaussPhrase, VirtualGaussDiagram, canonical_key, find_all_moves, apply_move


def random_word(rng: random.Random, n: int) -> tuple[str, ...]:
    ends = [str(i) for i in range(1, n + 1) for _ in range(2)]
    rng.shuffle(ends)
    return tuple(ends)


def random_phrase(rng: random.Random, n: int) -> GaussPhrase:
    if n == 0:
        return GaussPhrase((), 1)
    return GaussPhrase((random_word(rng, n),))


def random_link(rng: random.Random, n: int, components: int = 2) -> GaussPhrase:
    """Random phrase on ``components`` nonempty circles (chords may span)."""
    while True:
        w = random_word(rng, n)
        cuts = sorted(rng.sample(range(1, 2 * n), components - 1))
        bounds = [0] + cuts + [2 * n]
        comps = tuple(w[a:b] for a, b in zip(bounds, bounds[1:]))
        if all(comps):
            return GaussPhrase(comps)


def random_virtual(rng: random.Random, n: int) -> VirtualGaussDiagram:
    tokens = []
    for i in range(1, n + 1):
        s = rng.choice((1, -1))
        tokens += [(str(i), True, s), (str(i), False, s)]
    rng.shuffle(tokens)
    return VirtualGaussDiagram(tuple(tokens))


def all_even_phrase(rng: random.Random, n: int) -> GaussPhrase:
    """Rejection-sample a one-component phrase whose chords are all even."""
    while True:
        p = random_phrase(rng, n)
        if all(v % 2 == 0 for v in oracle_interlacement(p).values()):
            return p


seeds = st.integers(min_value=0, max_value=2**32 - 1)


@st.composite
def phrases(draw, max_chords: int = 7, min_chords: int = 0):
    n = draw(st.integers(min_chords, max_chords))
    return random_phrase(random.Random(draw(seeds)), n)


@st.composite
def virtuals(draw, max_chords: int = 6, min_chords: int = 0):
    n = draw(st.integers(min_chords, max_chords))
    return random_virtual(random.Random(draw(seeds)), n)


# ---------------------------------------------------------------------------
# oracles written without the package's internals


def oracle_interlacement(p: GaussPhrase) -> dict[str, int]:
    """Count alternations on each circle by brute force over the positions."""
    out = {c: 0 for c in p.chords}
    for comp in p.components:
        pos: dict[str, list[int]] = {}
        for i, c in enumerate(comp):
            pos.setdefault(c, []).append(i)
        inside = {c: v for c, v in pos.items() if len(v) == 2}
        for c, (i, j) in inside.items():
            for d, (k, m) in inside.items():
                if d != c and (i < k < j) != (i < m < j):
                    out[c] += 1
    return out


def oracle_y(p: GaussPhrase) -> int:
    """Landing height of the group word from the closed formula.

    Every letter flips the parity of ``x + y``, so a ``b`` at position ``k``
    moves by ``(-1)**k`` and a ``b'`` by ``-(-1)**k``.
    """
    w = p.components[0] if p.components else ()
    pos: dict[str, list[int]] = {}
    for i, c in enumerate(w):
        pos.setdefault(c, []).append(i)

    def crosses(c, d):
        (i, j), (k, m) = pos[c], pos[d]
        return (i < k < j) != (i < m < j)

    odd = {c for c in pos if sum(crosses(c, d) for d in pos if d != c) % 2}
    y = 0
    for k, c in enumerate(w):
        if c in odd:
            tau = 1 if sum(crosses(c, d) for d in odd if d != c) % 2 else -1
            y += tau * (-1) ** k
    return y


def one_move_apart(a, b) -> bool:
    ka, kb = canonical_key(a), canonical_key(b)
    if ka == kb:
        return True
    for m in find_all_moves(a, max(a.n_chords, b.n_chords)):
        if canonical_key(apply_move(a, m)) == kb:
            return True
    return False


# ---------------------------------------------------------------------------
# three lines in the plane


def _intersect(l1, l2):
    (px, py), (dx, dy) = l1
    (qx, qy), (ex, ey) = l2
    den = dx * ey - dy * ex
    t = ((qx - px) * ey - (qy - py) * ex) / den
    return t, (px + t * dx, py + t * dy)


def random_line(rng: random.Random):
    a = rng.uniform(0, 2 * math.pi)
    return (rng.uniform(-1, 1), rng.uniform(-1, 1)), (math.cos(a), math.sin(a))


def line_triangle(lines, above, order) -> VirtualGaussDiagram:
    """Gauss diagram of three oriented lines cut to segments, read in ``order``.

    ``above(i, j)`` says whether line ``i`` passes over line ``j``.  The sign
    of a crossing is the sign of ``over x under`` (positive crossings turn
    the over strand counter-clockwise onto the under strand).
    """
    names = {frozenset((0, 1)): "x", frozenset((1, 2)): "y", frozenset((0, 2)): "z"}
    tokens = []
    for i in order:
        ends = []
        for j in range(3):
            if j == i:
                continue
            t, _ = _intersect(lines[i], lines[j])
            over = above(i, j)
            o, u = (lines[i][1], lines[j][1]) if over else (lines[j][1], lines[i][1])
            sign = 1 if o[0] * u[1] - o[1] * u[0] > 0 else -1
            ends.append((t, (names[frozenset((i, j))], over, sign)))
        ends.sort()
        tokens += [e for _, e in ends]
    return VirtualGaussDiagram(tuple(tokens))


def pushed_across(lines):
    """Reflect line 0 through the crossing of lines 1 and 2."""
    _, p = _intersect(lines[1], lines[2])
    (p0, d0) = lines[0]
    nrm = (-d0[1], d0[0])
    dist = (p[0] - p0[0]) * nrm[0] + (p[1] - p0[1]) * nrm[1]
    return [((p0[0] + 2 * dist * nrm[0], p0[1] + 2 * dist * nrm[1]), d0), lines[1], lines[2]]
