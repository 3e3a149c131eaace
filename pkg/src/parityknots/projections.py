"""The projection ``f`` (delete odd chords) and the index filtration."""

from __future__ import annotations

import math
from typing import Union

from .diagram import GaussPhrase, VirtualGaussDiagram, delete_chords
from .parity import ODD, ParityFn, gaussian_parity, hierarchy, index

__all__ = ["f_map", "f_fixpoint", "in_filtration", "filtration_level", "project_level"]

Diagram = Union[GaussPhrase, VirtualGaussDiagram]


def f_map(p: Diagram, parity_fn: ParityFn = gaussian_parity) -> Diagram:
    """Delete every chord that ``parity_fn`` declares odd."""
    par = parity_fn(p)
    odd = {c for c, v in par.items() if v == ODD}
    if not odd:
        return p
    if isinstance(p, VirtualGaussDiagram):
        return VirtualGaussDiagram(tuple(t for t in p.tokens if t[0] not in odd))
    return delete_chords(p, odd)


def f_fixpoint(p: Diagram, parity_fn: ParityFn = gaussian_parity) -> tuple[Diagram, int]:
    """Iterate :func:`f_map` until every chord is even; returns (diagram, steps)."""
    steps = 0
    while True:
        q = f_map(p, parity_fn)
        if q is p:
            return p, steps
        p, steps = q, steps + 1


def filtration_level(d: VirtualGaussDiagram) -> float:
    """Largest ``k`` with every index divisible by ``2**k`` (``inf`` if all are zero)."""
    vals = [v for v in index(d).values() if v]
    if not vals:
        return math.inf
    return min((v & -v).bit_length() - 1 for v in vals)


def in_filtration(d: VirtualGaussDiagram, k: float) -> bool:
    if k == math.inf:
        return filtration_level(d) == math.inf
    return filtration_level(d) >= k


def project_level(d: VirtualGaussDiagram, k: float) -> VirtualGaussDiagram:
    """Push ``d`` into the ``k``-th filtration level.

    At each step the current level ``j`` is found and ``f`` is applied with
    the level-``j`` parity; the chord count drops every step.
    """
    while not in_filtration(d, k):
        j = int(filtration_level(d))
        d = f_map(d, hierarchy(j))
    return d
