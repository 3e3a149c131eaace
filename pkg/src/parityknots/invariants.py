"""Invariants of free and virtual knots.

Parity brackets
    :func:`bracket` (knots, values in Z/2 classes of framed graphs),
    :func:`bracket_links` (links, split summands vanish) and Turaev's
    :func:`turaev_delta`.
Polynomials
    :func:`kauffman_bracket`, :func:`even_kauffman` and :func:`x_even`.
The strip group
    :func:`gamma_word`, :func:`eval_group`, :func:`l_invariant` and
    :func:`L_invariant`.
Atoms
    :func:`source_sink`.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence, Union

from .algebra import (
    DELTA,
    FModuleElement,
    LaurentPoly,
    Z2GElement,
    class_of,
    fmodule_normalize,
)
from .diagram import (
    GaussPhrase,
    LongGaussDiagram,
    Smoothing,
    VirtualGaussDiagram,
    linked,
    resolve,
    smooth,
)
from .errors import InvariantViolation, WrongComponentCount
from .moves import MoveKind, find_moves
from .parity import EVEN, ODD, ParityFn, component_parity, gaussian_parity

__all__ = [
    "default_parity",
    "bracket",
    "bracket_summands",
    "bracket_links",
    "is_irreducibly_odd",
    "turaev_delta",
    "writhe",
    "kauffman_bracket",
    "jones_x",
    "even_kauffman",
    "x_even",
    "FIRST",
    "SECOND",
    "chord_type",
    "GammaWord",
    "gamma_word",
    "GroupElement",
    "eval_group",
    "l_invariant",
    "L_invariant",
    "source_sink",
]

Diagram = Union[GaussPhrase, VirtualGaussDiagram]


def _base(d) -> GaussPhrase:
    if isinstance(d, LongGaussDiagram):
        d = d.diagram
    return d.base


def default_parity(p) -> ParityFn:
    """Gaussian parity for knots, component parity for two-component links."""
    n = _base(p).n_components
    if n == 1:
        return gaussian_parity
    if n == 2:
        return component_parity
    raise WrongComponentCount(f"no default parity for {n} components")


def _even_chords(d, parity_fn: ParityFn) -> list[str]:
    par = parity_fn(d)
    return sorted(c for c, v in par.items() if v == EVEN)


def _states(chords: Sequence[str]) -> Iterator[dict[str, bool]]:
    for bits in itertools.product((True, False), repeat=len(chords)):
        yield dict(zip(chords, bits))


# ---------------------------------------------------------------------------
# parity brackets


def bracket_summands(p, parity_fn: ParityFn = gaussian_parity) -> list[GaussPhrase]:
    """One-component graphs obtained by smoothing every even chord."""
    base = _base(p)
    if base.n_components != 1:
        raise WrongComponentCount("the bracket is defined for knots")
    out = []
    for state in _states(_even_chords(p, parity_fn)):
        q = resolve(base, state)
        if q.n_components == 1:
            out.append(q)
    return out


def bracket(p, parity_fn: ParityFn = gaussian_parity) -> Z2GElement:
    """Z/2 sum of the classes of all one-component even smoothings."""
    acc = Z2GElement.zero(1)
    for q in bracket_summands(p, parity_fn):
        acc = acc + class_of(q, 1)
    return acc


def bracket_links(p, parity_fn: ParityFn | None = None) -> Z2GElement:
    """Sum over even smoothings keeping the component count; split graphs vanish."""
    base = _base(p)
    if parity_fn is None:
        parity_fn = default_parity(base)
    n = base.n_components
    acc = Z2GElement.zero(n, tilde=True)
    for state in _states(_even_chords(p, parity_fn)):
        q = resolve(base, state)
        if q.n_components == n:
            acc = acc + class_of(q, n, tilde=True)
    return acc


def is_irreducibly_odd(p, parity_fn: ParityFn = gaussian_parity) -> bool:
    """All chords odd, no decreasing second move, and at least one chord."""
    base = _base(p)
    if not base.n_chords or any(v != ODD for v in parity_fn(p).values()):
        return False
    return not find_moves(base, MoveKind.R2_MINUS)


def turaev_delta(
    p,
    filter: str = "all",
    parity_fn: ParityFn = gaussian_parity,
    refine: bool = True,
) -> Z2GElement:
    """Sum over chords ``c`` of the two-component smoothing ``G_c``.

    ``filter`` restricts ``c`` to even or odd chords.  With ``refine`` each
    summand is replaced by its link bracket under the component parity,
    which removes the curls and triangles that keep the raw classes from
    being invariant; ``refine=False`` returns the raw split-zeroed classes.
    """
    if filter not in ("all", "even", "odd"):
        raise ValueError(f"unknown filter {filter!r}")
    base = _base(p)
    if base.n_components != 1:
        raise WrongComponentCount("delta is defined for knots")
    par = parity_fn(p) if filter != "all" else {}
    acc = Z2GElement.zero(2, tilde=True)
    for c in sorted(base.chords):
        if filter == "even" and par[c] != EVEN:
            continue
        if filter == "odd" and par[c] != ODD:
            continue
        g = smooth(base, c, Smoothing.SPLIT)
        if refine:
            acc = acc + bracket_links(g, component_parity)
        else:
            acc = acc + class_of(g, 2, tilde=True)
    return acc


# ---------------------------------------------------------------------------
# Kauffman brackets
#
# At a positive crossing the A-smoothing is the orientation-preserving one,
# at a negative crossing it is the other; this choice does not look at the
# arrow.  It reproduces the classical bracket with a positive curl worth -a^3.


def writhe(d: VirtualGaussDiagram) -> int:
    if isinstance(d, LongGaussDiagram):
        d = d.diagram
    return sum(d.sign.values())


def _a_choice(sign: int) -> bool:
    return sign > 0


def kauffman_bracket(d: VirtualGaussDiagram) -> LaurentPoly:
    """Full state sum over all crossings."""
    base = d.base
    sign = d.sign
    chords = sorted(sign)
    acc: dict[int, int] = {}
    loops_cache: dict[int, LaurentPoly] = {}
    for state in _states(chords):
        n_a = sum(state[c] == _a_choice(sign[c]) for c in chords)
        exp = 2 * n_a - len(chords)
        circles = resolve(base, state).n_components
        key = (exp, circles)
        acc[key] = acc.get(key, 0) + 1
    total = LaurentPoly()
    for (exp, circles), mult in acc.items():
        if circles not in loops_cache:
            loops_cache[circles] = DELTA ** (circles - 1)
        total = total + loops_cache[circles].shift(exp).scale(mult)
    return total


def _minus_a_power(k: int) -> LaurentPoly:
    return LaurentPoly.monomial(k, -1 if k % 2 else 1)


def jones_x(d: VirtualGaussDiagram) -> LaurentPoly:
    """Writhe-normalised bracket ``(-a)^(-3w) <d>``."""
    return kauffman_bracket(d) * _minus_a_power(-3 * writhe(d))


def even_kauffman(d: VirtualGaussDiagram, parity_fn: ParityFn = gaussian_parity) -> FModuleElement:
    """State sum over even crossings; odd crossings survive as free chords."""
    if isinstance(d, LongGaussDiagram):
        d = d.diagram
    base = d.base
    sign = d.sign
    even = _even_chords(d, parity_fn)
    raw: dict[GaussPhrase, LaurentPoly] = {}
    for state in _states(even):
        n_a = sum(state[c] == _a_choice(sign[c]) for c in even)
        q = resolve(base, state)
        raw[q] = raw.get(q, LaurentPoly()) + LaurentPoly.monomial(2 * n_a - len(even))
    return fmodule_normalize(raw)


def x_even(d: VirtualGaussDiagram, parity_fn: ParityFn = gaussian_parity) -> FModuleElement:
    return even_kauffman(d, parity_fn).scale(_minus_a_power(-3 * writhe(d)))


# ---------------------------------------------------------------------------
# the strip group

FIRST, SECOND = "first", "second"
_LETTER = {"even": "a", FIRST: "b", SECOND: "b'"}


def chord_type(c: str, p) -> str:
    """``"even"``, or the type of an odd chord.

    An odd chord is of the first type when it is linked with an odd number
    of odd chords and of the second type otherwise.
    """
    base = _base(p)
    par = gaussian_parity(base)
    if par[c] == EVEN:
        return "even"
    n_odd = sum(1 for e in base.chords if par[e] == ODD and linked(c, e, base))
    return FIRST if n_odd % 2 else SECOND


@dataclass(frozen=True)
class GammaWord:
    letters: tuple[str, ...]

    def __post_init__(self):
        bad = [x for x in self.letters if x not in ("a", "b", "b'")]
        if bad:
            raise ValueError(f"unknown letters {bad}")

    @classmethod
    def parse(cls, text: str) -> "GammaWord":
        return cls(tuple(text.replace("′", "'").split()))

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return " ".join(self.letters)


def gamma_word(p) -> GammaWord:
    """Letters read from the basepoint: ``a`` for even chords, ``b``/``b'`` for odd ones."""
    if not isinstance(p, LongGaussDiagram):
        p = LongGaussDiagram(p, 0)
    base = p.diagram.base
    types = {c: chord_type(c, base) for c in base.chords}
    return GammaWord(tuple(_LETTER[types[c]] for c in p.word))


def _step(x: int, y: int, letter: str) -> tuple[int, int]:
    if letter == "a":
        return 1 - x, y
    up = (x + y) % 2 == 0
    if letter == "b'":
        up = not up
    return x, y + (1 if up else -1)


@dataclass(frozen=True, order=True)
class GroupElement:
    """Vertex ``(x, y)`` of the strip, identified with a group element via the identity at the origin."""

    x: int = 0
    y: int = 0

    def __post_init__(self):
        if self.x not in (0, 1):
            raise ValueError("x must be 0 or 1")

    def word(self) -> GammaWord:
        """Shortest word leading from the origin to this vertex."""
        x, y, out = 0, 0, []
        while y != self.y:
            want_up = self.y > y
            letter = "b" if ((x + y) % 2 == 0) == want_up else "b'"
            out.append(letter)
            x, y = _step(x, y, letter)
        if self.x:
            out.append("a")
        return GammaWord(tuple(out))

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        return eval_group(other.word(), self)

    def inverse(self) -> "GroupElement":
        return eval_group(GammaWord(tuple(reversed(self.word().letters))))

    def __str__(self) -> str:
        return f"({self.x},{self.y})"


def eval_group(w: GammaWord | Iterable[str], start: GroupElement = GroupElement()) -> GroupElement:
    letters = w.letters if isinstance(w, GammaWord) else tuple(w)
    x, y = start.x, start.y
    for letter in letters:
        x, y = _step(x, y, letter)
    return GroupElement(x, y)


def l_invariant(p) -> int:
    """``y / 4`` where the word of a long diagram lands at ``(0, y)``."""
    g = eval_group(gamma_word(p))
    if g.x != 0 or g.y % 4:
        raise InvariantViolation(f"gamma word landed at {g}")
    return g.y // 4


def L_invariant(p) -> int:
    """Absolute value of ``l``; it does not depend on the basepoint."""
    if isinstance(p, LongGaussDiagram):
        p = p.diagram
    if p.n_components != 1:
        raise WrongComponentCount("L is defined for knots")
    return abs(l_invariant(LongGaussDiagram(p, 0)))


# ---------------------------------------------------------------------------
# source-sink orientations


def source_sink(p) -> bool:
    """Whether the framed graph admits a source-sink orientation.

    Edge orientations must alternate along every circle, so each circle
    carries one free bit; every vertex asks the outgoing edges of its two
    strands to point opposite ways, a XOR constraint between the bits.
    """
    base = _base(p)
    comps = base.components
    if any(len(c) % 2 for c in comps):
        return False
    parent = list(range(len(comps)))
    rel = [0] * len(comps)

    def find(i: int) -> tuple[int, int]:
        r = 0
        while parent[i] != i:
            r ^= rel[i]
            i = parent[i]
        return i, r

    for (ci, i), (cj, j) in base.ends.values():
        need = 1 ^ ((i + j) & 1)
        ri, xi = find(ci)
        rj, xj = find(cj)
        if ri == rj:
            if xi ^ xj != need:
                return False
        else:
            parent[ri] = rj
            rel[ri] = xi ^ xj ^ need
    return True
