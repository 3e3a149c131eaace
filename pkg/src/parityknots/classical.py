"""Classical knots as closures of braids."""

from __future__ import annotations

from typing import Sequence

from .diagram import VirtualGaussDiagram
from .errors import MalformedCode

__all__ = ["braid_closure", "BRAIDS", "classical_corpus"]

# Generator ``i`` crosses strands ``i`` and ``i + 1``; ``-i`` is its inverse.
BRAIDS: dict[str, tuple[int, ...]] = {
    "3_1": (1, 1, 1),
    "4_1": (1, -2, 1, -2),
    "5_1": (1, 1, 1, 1, 1),
    "5_2": (1, 1, 1, 2, -1, 2),
    "6_1": (1, 1, 2, -1, -3, 2, -3),
    "6_2": (1, 1, 1, -2, 1, -2),
    "7_1": (1, 1, 1, 1, 1, 1, 1),
}


def braid_closure(word: Sequence[int]) -> VirtualGaussDiagram:
    """Gauss diagram of the closure of a braid whose closure is a knot.

    Strands run downwards.  In a positive generator the strand moving from
    right to left passes over and the crossing is positive; in a negative
    one the strand moving left to right passes over and the crossing is
    negative.
    """
    if not word:
        return VirtualGaussDiagram(())
    width = max(abs(g) for g in word) + 1
    tokens: list[tuple[str, bool, int]] = []
    pos = 0
    for _ in range(width):
        for k, g in enumerate(word, 1):
            if g == 0:
                raise MalformedCode("braid generators are nonzero")
            left = abs(g) - 1
            if pos not in (left, left + 1):
                continue
            sign = 1 if g > 0 else -1
            moving_left = pos == left + 1
            over = moving_left if sign > 0 else not moving_left
            tokens.append((str(k), over, sign))
            pos = left if moving_left else left + 1
        if pos == 0:
            break
    if len(tokens) != 2 * len(word):
        raise MalformedCode("the braid closure is not a knot")
    return VirtualGaussDiagram(tuple(tokens))


def classical_corpus() -> dict[str, VirtualGaussDiagram]:
    return {name: braid_closure(w) for name, w in BRAIDS.items()}
