"""Parities of chords and the index of virtual crossings.

A parity function takes a diagram and returns ``{label: 0 | 1}`` with 1
meaning odd.  Brackets, Turaev's delta and the projection ``f`` accept any
such callable.
"""

from __future__ import annotations

from typing import Callable, Mapping

from .diagram import LongGaussDiagram, VirtualGaussDiagram, interlacement_counts
from .errors import NotInFiltrationLevel, WrongComponentCount
from .moves import MoveInstance, MoveKind, apply_move

__all__ = [
    "ParityFn",
    "gaussian_parity",
    "component_parity",
    "index",
    "hierarchy_parity",
    "hierarchy",
    "check_parity_axioms",
    "EVEN",
    "ODD",
]

EVEN, ODD = 0, 1
ParityFn = Callable[[object], Mapping[str, int]]


def _unwrap(d):
    return d.diagram if isinstance(d, LongGaussDiagram) else d


def gaussian_parity(p) -> dict[str, int]:
    """Parity of the number of chords linked with each chord.

    On multi-component phrases a chord joining two components is odd, as in
    the two-component parity; this is a convention and not a parity in the
    axiomatic sense for links.
    """
    p = _unwrap(p).base
    counts = interlacement_counts(p)
    out = {}
    for c, n in counts.items():
        (ci, _), (cj, _) = p.ends[c]
        out[c] = ODD if ci != cj else n % 2
    return out


def component_parity(p) -> dict[str, int]:
    """Crossings of a two-component link: even iff both branches lie on one component."""
    p = _unwrap(p).base
    if p.n_components != 2:
        raise WrongComponentCount(f"expected 2 components, got {p.n_components}")
    return {c: EVEN if ci == cj else ODD for c, ((ci, _), (cj, _)) in p.ends.items()}


def _signed_crossing_sums(d: VirtualGaussDiagram) -> dict[str, int]:
    # For chord c the arc strictly after its over end and before its under
    # end is one side; a linked chord with its head on that side counts with
    # its sign, one with its tail there with minus its sign.
    n = len(d.tokens)
    arrow = d.arrow
    sign = d.sign
    out = {}
    for c, (o, u) in arrow.items():
        total = 0
        inside = set()
        k = (o + 1) % n
        while k != u:
            inside.add(k)
            k = (k + 1) % n
        for e, (eo, eu) in arrow.items():
            if e == c:
                continue
            hi, ti = eu in inside, eo in inside
            if hi and not ti:
                total += sign[e]
            elif ti and not hi:
                total -= sign[e]
        out[c] = total
    return out


def index(d: VirtualGaussDiagram) -> dict[str, int]:
    """Absolute signed count of chords crossing each chord."""
    d = _unwrap(d)
    if not isinstance(d, VirtualGaussDiagram):
        raise TypeError("index needs a virtual diagram")
    return {c: abs(v) for c, v in _signed_crossing_sums(d).items()}


def hierarchy_parity(d: VirtualGaussDiagram, k: int) -> dict[str, int]:
    """Level-``k`` parity on diagrams whose indices are all divisible by ``2**k``."""
    if k < 1:
        raise ValueError("k must be at least 1")
    ind = index(d)
    step = 2**k
    bad = [c for c, v in ind.items() if v % step]
    if bad:
        raise NotInFiltrationLevel(f"indices of {bad} are not divisible by {step}")
    return {c: EVEN if v % (2 * step) == 0 else ODD for c, v in ind.items()}


def hierarchy(k: int) -> ParityFn:
    """Parity function for level ``k``; level 0 is the Gaussian parity."""
    if k == 0:
        return gaussian_parity

    def parity(d):
        return hierarchy_parity(_unwrap(d), k)

    parity.__name__ = f"hierarchy_parity_{k}"
    return parity


def check_parity_axioms(parity_fn: ParityFn, p, m: MoveInstance) -> bool:
    """Whether ``parity_fn`` behaves as a parity on the move ``m`` applied to ``p``.

    A kink chord is even, the two chords of a bigon have equal parity, a
    triangle has zero or two odd chords and each keeps its parity, and all
    other chords keep theirs.
    """
    q = apply_move(p, m)
    before = parity_fn(p)
    after = parity_fn(q)
    moved = set(m.chords)
    for c in set(before) & set(after):
        if c not in moved and before[c] != after[c]:
            return False
    if m.kind is MoveKind.R3:
        if any(before[c] != after[c] for c in moved):
            return False
        return sum(before[c] for c in moved) in (0, 2)
    side = before if m.kind in (MoveKind.R1_MINUS, MoveKind.R2_MINUS) else after
    vals = [side[c] for c in m.chords]
    if m.kind in (MoveKind.R1_MINUS, MoveKind.R1_PLUS):
        return vals == [EVEN]
    return vals[0] == vals[1]
