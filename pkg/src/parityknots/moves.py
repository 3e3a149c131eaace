"""Reidemeister moves on Gauss phrases and virtual Gauss diagrams.

Moves act on the cyclic words directly:

* ``R1-`` deletes a chord whose two ends are adjacent, ``R1+`` inserts one.
* ``R2-`` deletes two chords whose four ends form two disjoint adjacent
  pairs, each pair holding one end of either chord (``c d .. c d`` or
  ``c d .. d c``); ``R2+`` inserts such a bigon.
* ``R3`` takes three chords and three disjoint adjacent pairs covering the
  three chord pairs (the sides of a triangle) and swaps the two ends inside
  every pair.  The move is its own inverse.

On virtual diagrams the decorations restrict R2 and R3 to configurations
that occur in a planar picture: a bigon has both over ends on one strand and
opposite signs; a triangle has a top, a middle and a bottom strand and signs
compatible with the orientations of its sides (see :func:`_r3_consistent`).
"""

from __future__ import annotations

import enum
import itertools
import random
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Union

from .diagram import (
    CanonicalKey,
    GaussPhrase,
    LongGaussDiagram,
    VirtualGaussDiagram,
    canonical_key,
)
from .errors import BudgetExceeded, InvalidInstance, UnknownChord

__all__ = [
    "MoveKind",
    "MoveInstance",
    "find_moves",
    "find_all_moves",
    "apply_move",
    "inverse",
    "reduce_r2",
    "random_move",
    "random_walk",
    "bfs_reachable",
    "virtualise",
]

Diagram = Union[GaussPhrase, VirtualGaussDiagram]
Pos = tuple[int, int]
Pair = tuple[Pos, Pos]


class MoveKind(enum.Enum):
    R1_MINUS = "R1-"
    R1_PLUS = "R1+"
    R2_MINUS = "R2-"
    R2_PLUS = "R2+"
    R3 = "R3"

    @property
    def delta(self) -> int:
        """Change in chord count."""
        return {"R1-": -1, "R1+": 1, "R2-": -2, "R2+": 2, "R3": 0}[self.value]


ALL_KINDS = tuple(MoveKind)


@dataclass(frozen=True)
class MoveInstance:
    """A located move.

    For ``R1-``, ``R2-`` and ``R3`` the sites are adjacent position pairs
    ``((comp, i), (comp, i + 1))`` read along the orientation.  For the
    increasing moves the sites are insertions ``(gap, tokens)``: ``gap`` is
    ``(comp, i)`` meaning "before index i"; free loops are addressed as
    components numbered after the stored ones.
    """

    kind: MoveKind
    chords: tuple[str, ...]
    sites: tuple

    def __str__(self) -> str:
        return f"{self.kind.value}{{{','.join(self.chords)}}}"


# ---------------------------------------------------------------------------
# uniform view on both diagram kinds


def _label(tok) -> str:
    return tok if isinstance(tok, str) else tok[0]


def _unpack(d: Diagram) -> tuple[list[tuple], int, bool]:
    if isinstance(d, VirtualGaussDiagram):
        if d.tokens:
            return [d.tokens], 0, True
        return [], 1, True
    if isinstance(d, GaussPhrase):
        return list(d.components), d.free_loops, False
    raise TypeError(f"not a diagram: {d!r}")


def _pack(comps: Sequence[Sequence], loops: int, virtual: bool) -> Diagram:
    if virtual:
        if len(comps) + loops != 1:
            raise InvalidInstance("a virtual knot diagram must keep one component")
        return VirtualGaussDiagram(tuple(comps[0]) if comps else ())
    return GaussPhrase(tuple(tuple(c) for c in comps), loops)


def _adjacent_pairs(comps: Sequence[Sequence]) -> list[Pair]:
    out = []
    for ci, comp in enumerate(comps):
        n = len(comp)
        if n < 2:
            continue
        for i in range(n if n > 2 else 1):
            out.append(((ci, i), (ci, (i + 1) % n)))
    return out


def _gaps(comps: Sequence[Sequence], loops: int) -> list[Pos]:
    out = [(ci, i) for ci, comp in enumerate(comps) for i in range(len(comp))]
    out += [(len(comps) + k, 0) for k in range(loops)]
    return out


def _fresh_labels(d: Diagram, k: int) -> list[str]:
    used = set(d.chords)
    nums = [int(x) for x in used if x.isdigit()]
    start = max(nums, default=0) + 1
    out = []
    while len(out) < k:
        if str(start) not in used:
            out.append(str(start))
        start += 1
    return out


# ---------------------------------------------------------------------------
# detection


def _r1_minus(comps, virtual) -> list[MoveInstance]:
    out = []
    seen = set()
    for a, b in _adjacent_pairs(comps):
        la = _label(comps[a[0]][a[1]])
        lb = _label(comps[b[0]][b[1]])
        if la == lb and la not in seen:
            seen.add(la)
            out.append(MoveInstance(MoveKind.R1_MINUS, (la,), ((a, b),)))
    return out


def _pair_chords(comps, pair: Pair) -> tuple[str, str]:
    (ci, i), (cj, j) = pair
    return _label(comps[ci][i]), _label(comps[cj][j])


def _is_over(comps, pos: Pos) -> bool:
    return comps[pos[0]][pos[1]][1]


def _sign_at(comps, pos: Pos) -> int:
    return comps[pos[0]][pos[1]][2]


def _r2_valid(comps, virtual, p1: Pair, p2: Pair) -> bool:
    if not virtual:
        return True
    # over strand holds both tails, signs opposite
    o1 = [_is_over(comps, x) for x in p1]
    o2 = [_is_over(comps, x) for x in p2]
    if not ((all(o1) and not any(o2)) or (all(o2) and not any(o1))):
        return False
    return _sign_at(comps, p1[0]) == -_sign_at(comps, p1[1])


def _r2_minus(comps, virtual) -> list[MoveInstance]:
    groups: dict[frozenset, list[Pair]] = {}
    for pr in _adjacent_pairs(comps):
        la, lb = _pair_chords(comps, pr)
        if la != lb:
            groups.setdefault(frozenset((la, lb)), []).append(pr)
    out = []
    for key, prs in groups.items():
        for p1, p2 in itertools.combinations(prs, 2):
            if set(p1) & set(p2):
                continue
            if _r2_valid(comps, virtual, p1, p2):
                out.append(MoveInstance(MoveKind.R2_MINUS, tuple(sorted(key)), (p1, p2)))
                break
    out.sort(key=lambda m: m.chords)
    return out


def _r3_consistent(comps, segs: Sequence[Pair]) -> bool:
    """Planar-triangle test for three decorated sides.

    Each side is a piece of a strand that meets the other two sides at the
    triangle's corners.  Put the sides in counter-clockwise order; a side
    whose strand runs along that order meets the previous side first.  Call
    this orientation ``t = +1`` (else ``-1``).  At the corner of side ``i``
    and the next side ``j`` the crossing sign is ``t_i * t_j`` if side ``i``
    is the over strand and the negative otherwise.  The configuration is
    planar iff the signs fit one of the two cyclic orders, and the heights
    are not cyclic.
    """
    tails = [sum(_is_over(comps, x) for x in s) for s in segs]
    if sorted(tails) != [0, 1, 2]:
        return False
    labels = [_pair_chords(comps, s) for s in segs]
    corner: dict[frozenset, tuple[str, int, int]] = {}
    for i, j in itertools.combinations(range(3), 2):
        shared = set(labels[i]) & set(labels[j])
        (lab,) = shared
        over = None
        sign = 0
        for side in (i, j):
            for pos in segs[side]:
                if _label(comps[pos[0]][pos[1]]) == lab:
                    sign = _sign_at(comps, pos)
                    if _is_over(comps, pos):
                        over = side
        corner[frozenset((i, j))] = (lab, over, sign)
    for order in ((0, 1, 2), (0, 2, 1)):
        nxt = {order[k]: order[(k + 1) % 3] for k in range(3)}
        prv = {v: k for k, v in nxt.items()}
        t = {}
        for i in range(3):
            shared_prev = corner[frozenset((i, prv[i]))][0]
            t[i] = 1 if labels[i][0] == shared_prev else -1
        ok = True
        for i in range(3):
            j = nxt[i]
            _, over, sign = corner[frozenset((i, j))]
            pred = t[i] * t[j] if over == i else -t[i] * t[j]
            if pred != sign:
                ok = False
                break
        if ok:
            return True
    return False


def _r3(comps, virtual) -> list[MoveInstance]:
    prs = []
    for pr in _adjacent_pairs(comps):
        la, lb = _pair_chords(comps, pr)
        if la != lb:
            prs.append((pr, frozenset((la, lb))))
    by_label: dict[str, list[int]] = {}
    for k, (_, labs) in enumerate(prs):
        for lab in labs:
            by_label.setdefault(lab, []).append(k)
    out = []
    seen = set()
    for k1, (p1, labs1) in enumerate(prs):
        a, b = sorted(labs1)
        for k2 in by_label[a]:
            p2, labs2 = prs[k2]
            if k2 == k1 or b in labs2 or set(p1) & set(p2):
                continue
            (c,) = labs2 - {a}
            for k3 in by_label[b]:
                p3, labs3 = prs[k3]
                if labs3 != frozenset((b, c)):
                    continue
                if set(p3) & set(p1) or set(p3) & set(p2):
                    continue
                ident = frozenset((k1, k2, k3))
                if ident in seen:
                    continue
                seen.add(ident)
                segs = tuple(sorted((p1, p2, p3)))
                if virtual and not _r3_consistent(comps, segs):
                    continue
                out.append(MoveInstance(MoveKind.R3, tuple(sorted((a, b, c))), segs))
    out.sort(key=lambda m: (m.chords, m.sites))
    return out


def _r1_plus(d: Diagram, comps, loops, virtual) -> list[MoveInstance]:
    (x,) = _fresh_labels(d, 1)
    out = []
    for g in _gaps(comps, loops):
        if not virtual:
            out.append(MoveInstance(MoveKind.R1_PLUS, (x,), ((g, (x, x)),)))
            continue
        for sign in (1, -1):
            for over_first in (True, False):
                seq = ((x, over_first, sign), (x, not over_first, sign))
                out.append(MoveInstance(MoveKind.R1_PLUS, (x,), ((g, seq),)))
    return out


def _r2_plus_options(x: str, y: str, g1: Pos, g2: Pos, virtual: bool) -> list[tuple]:
    """Insertion site tuples for a bigon between gaps g1 and g2."""
    if not virtual:
        if g1 == g2:
            return [((g1, (x, y, x, y)),), ((g1, (x, y, y, x)),)]
        return [((g1, (x, y)), (g2, (x, y))), ((g1, (x, y)), (g2, (y, x)))]
    out = []
    for sign in (1, -1):
        over = ((x, True, sign), (y, True, -sign))
        for anti in (False, True):
            under = ((x, False, sign), (y, False, -sign))
            if anti:
                under = under[::-1]
            if g1 == g2:
                out.append(((g1, over + under),))
                out.append(((g1, under + over),))
            else:
                out.append(((g1, over), (g2, under)))
    return out


def _r2_plus(d: Diagram, comps, loops, virtual) -> list[MoveInstance]:
    x, y = _fresh_labels(d, 2)
    gaps = _gaps(comps, loops)
    out = []
    if virtual:
        pairs = itertools.product(gaps, gaps)
    else:
        pairs = itertools.combinations_with_replacement(gaps, 2)
    for g1, g2 in pairs:
        for sites in _r2_plus_options(x, y, g1, g2, virtual):
            out.append(MoveInstance(MoveKind.R2_PLUS, (x, y), sites))
    return out


def find_moves(d: Diagram, kind: MoveKind | str) -> list[MoveInstance]:
    """All instances of ``kind`` on ``d`` (decreasing moves deduplicated by chords)."""
    kind = MoveKind(kind)
    comps, loops, virtual = _unpack(d)
    if kind is MoveKind.R1_MINUS:
        return _r1_minus(comps, virtual)
    if kind is MoveKind.R2_MINUS:
        return _r2_minus(comps, virtual)
    if kind is MoveKind.R3:
        return _r3(comps, virtual)
    if kind is MoveKind.R1_PLUS:
        return _r1_plus(d, comps, loops, virtual)
    return _r2_plus(d, comps, loops, virtual)


def find_all_moves(
    d: Diagram, max_chords: Optional[int] = None, kinds: Iterable[MoveKind] = ALL_KINDS
) -> list[MoveInstance]:
    out = []
    for kind in kinds:
        if max_chords is not None and d.n_chords + kind.delta > max_chords:
            continue
        out.extend(find_moves(d, kind))
    return out


# ---------------------------------------------------------------------------
# application


def _check_pair(comps, pair: Pair) -> None:
    (ci, i), (cj, j) = pair
    if ci != cj or not (0 <= ci < len(comps)):
        raise InvalidInstance(f"bad pair {pair}")
    n = len(comps[ci])
    if not (0 <= i < n and j == (i + 1) % n and n >= 2):
        raise InvalidInstance(f"positions {pair} are not adjacent")


def _delete(comps, loops, labels: set[str]):
    new = []
    for comp in comps:
        kept = tuple(t for t in comp if _label(t) not in labels)
        if kept:
            new.append(kept)
        else:
            loops += 1
    return new, loops


def _insert(comps, loops, insertions) -> tuple[list, int]:
    comps = [list(c) for c in comps]
    n0 = len(comps)
    new_loops: dict[int, list] = {}
    per_gap: dict[Pos, list] = {}
    for gap, seq in insertions:
        per_gap.setdefault(tuple(gap), []).extend(seq)
    for (ci, i), seq in sorted(per_gap.items(), key=lambda kv: (kv[0][0], -kv[0][1])):
        if ci < n0:
            if not 0 <= i < len(comps[ci]):
                raise InvalidInstance(f"bad gap {(ci, i)}")
            comps[ci][i:i] = seq
        else:
            k = ci - n0
            if not (0 <= k < loops and i == 0):
                raise InvalidInstance(f"bad gap {(ci, i)}")
            new_loops[k] = list(seq)
    comps.extend(new_loops[k] for k in sorted(new_loops))
    return comps, loops - len(new_loops)


def apply_move(d: Diagram, m: MoveInstance) -> Diagram:
    comps, loops, virtual = _unpack(d)
    kind = m.kind
    if kind in (MoveKind.R1_MINUS, MoveKind.R2_MINUS, MoveKind.R3):
        for pr in m.sites:
            _check_pair(comps, pr)
        used = [p for pr in m.sites for p in pr]
        if len(set(used)) != len(used):
            raise InvalidInstance("overlapping sites")
        seen = sorted(_label(comps[c][i]) for c, i in used)
        expected = sorted(x for x in m.chords for _ in range(2))
        if seen != expected:
            raise InvalidInstance(f"sites do not carry chords {m.chords}")
        if kind is MoveKind.R1_MINUS:
            if len(m.sites) != 1:
                raise InvalidInstance("R1- needs one pair")
            new, loops = _delete(comps, loops, set(m.chords))
            return _pack(new, loops, virtual)
        if kind is MoveKind.R2_MINUS:
            if len(m.sites) != 2 or any(
                len(set(_pair_chords(comps, pr))) != 2 for pr in m.sites
            ):
                raise InvalidInstance("R2- needs two mixed pairs")
            if not _r2_valid(comps, virtual, *m.sites):
                raise InvalidInstance("not a bigon of a planar diagram")
            new, loops = _delete(comps, loops, set(m.chords))
            return _pack(new, loops, virtual)
        if len(m.sites) != 3:
            raise InvalidInstance("R3 needs three pairs")
        pairsets = {frozenset(_pair_chords(comps, pr)) for pr in m.sites}
        if len(pairsets) != 3 or any(len(s) != 2 for s in pairsets):
            raise InvalidInstance("pairs do not form a triangle")
        if virtual and not _r3_consistent(comps, m.sites):
            raise InvalidInstance("not a planar triangle")
        new = [list(c) for c in comps]
        for (ci, i), (_, j) in m.sites:
            new[ci][i], new[ci][j] = new[ci][j], new[ci][i]
        return _pack(new, loops, virtual)

    expected_len = {MoveKind.R1_PLUS: 2, MoveKind.R2_PLUS: 4}[kind]
    toks = [t for _, seq in m.sites for t in seq]
    if len(toks) != expected_len:
        raise InvalidInstance("wrong number of inserted ends")
    if set(m.chords) & set(d.chords):
        raise InvalidInstance("inserted labels already present")
    if sorted(_label(t) for t in toks) != sorted(x for x in m.chords for _ in range(2)):
        raise InvalidInstance("insertion does not match chords")
    new, loops = _insert(comps, loops, m.sites)
    out = _pack(new, loops, virtual)
    if kind is MoveKind.R1_PLUS:
        if not any(i.chords == m.chords for i in find_moves(out, MoveKind.R1_MINUS)):
            raise InvalidInstance("insertion is not a kink")
    elif not any(set(i.chords) == set(m.chords) for i in find_moves(out, MoveKind.R2_MINUS)):
        raise InvalidInstance("insertion is not a bigon")
    return out


def inverse(d: Diagram, m: MoveInstance) -> MoveInstance:
    """A move taking ``apply_move(d, m)`` back to a diagram isomorphic to ``d``."""
    out = apply_move(d, m)
    if m.kind is MoveKind.R3:
        return m
    if m.kind in (MoveKind.R1_PLUS, MoveKind.R2_PLUS):
        back = MoveKind.R1_MINUS if m.kind is MoveKind.R1_PLUS else MoveKind.R2_MINUS
        for cand in find_moves(out, back):
            if set(cand.chords) == set(m.chords):
                return cand
        raise InvalidInstance("no inverse found")
    target = canonical_key(d)
    up = MoveKind.R1_PLUS if m.kind is MoveKind.R1_MINUS else MoveKind.R2_PLUS
    for cand in find_moves(out, up):
        if canonical_key(apply_move(out, cand)) == target:
            return cand
    raise InvalidInstance("no inverse found")


# ---------------------------------------------------------------------------
# reduction, random walks, search


def reduce_r2(p: Diagram, rng: Optional[random.Random] = None) -> Diagram:
    """Apply decreasing second moves until none is left.

    With ``rng`` the instance is chosen at random at every step; otherwise
    the first one found.  First moves are never applied.
    """
    while True:
        ms = find_moves(p, MoveKind.R2_MINUS)
        if not ms:
            return p
        p = apply_move(p, rng.choice(ms) if rng else ms[0])


def _sample_increasing(d: Diagram, kind: MoveKind, rng: random.Random) -> MoveInstance:
    comps, loops, virtual = _unpack(d)
    gaps = _gaps(comps, loops)
    if kind is MoveKind.R1_PLUS:
        (x,) = _fresh_labels(d, 1)
        g = rng.choice(gaps)
        if virtual:
            sign = rng.choice((1, -1))
            first = rng.random() < 0.5
            seq = ((x, first, sign), (x, not first, sign))
        else:
            seq = (x, x)
        return MoveInstance(kind, (x,), ((g, seq),))
    x, y = _fresh_labels(d, 2)
    g1, g2 = rng.choice(gaps), rng.choice(gaps)
    return MoveInstance(kind, (x, y), rng.choice(_r2_plus_options(x, y, g1, g2, virtual)))


def random_move(
    d: Diagram,
    rng: random.Random,
    kinds: Iterable[MoveKind] = ALL_KINDS,
    max_chords: Optional[int] = None,
) -> Optional[MoveInstance]:
    """Pick a kind uniformly among those applicable, then an instance of it."""
    options = []
    for kind in kinds:
        if kind in (MoveKind.R1_PLUS, MoveKind.R2_PLUS):
            if max_chords is None or d.n_chords + kind.delta <= max_chords:
                options.append((kind, None))
        else:
            found = find_moves(d, kind)
            if found:
                options.append((kind, found))
    if not options:
        return None
    kind, found = rng.choice(options)
    if found is None:
        return _sample_increasing(d, kind, rng)
    return rng.choice(found)


def random_walk(
    p: Diagram,
    steps: int,
    seed: int | random.Random = 0,
    kinds: Iterable[MoveKind] = ALL_KINDS,
    max_chords: Optional[int] = None,
) -> Diagram:
    """Apply ``steps`` random moves; deterministic for a given seed.

    Increasing moves are allowed while the chord count stays within
    ``max_chords`` (default: four more than the start).
    """
    if steps < 0:
        raise ValueError("steps must be non-negative")
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    kinds = tuple(MoveKind(k) for k in kinds)
    if max_chords is None:
        max_chords = p.n_chords + 4
    for _ in range(steps):
        m = random_move(p, rng, kinds, max_chords)
        if m is None:
            break
        p = apply_move(p, m)
    return p


def bfs_reachable(p: Diagram, max_chords: int, node_cap: int = 200_000) -> set[CanonicalKey]:
    """Canonical keys reachable from ``p`` through diagrams with at most ``max_chords`` chords."""
    if max_chords < p.n_chords:
        raise ValueError("max_chords is below the chord count of the start diagram")
    start = canonical_key(p)
    seen = {start}
    queue = deque([start])
    while queue:
        key = queue.popleft()
        cur = key.diagram()
        for m in find_all_moves(cur, max_chords):
            nk = canonical_key(apply_move(cur, m))
            if nk not in seen:
                seen.add(nk)
                if len(seen) > node_cap:
                    raise BudgetExceeded(f"more than {node_cap} diagrams reached")
                queue.append(nk)
    return seen


def virtualise(d: VirtualGaussDiagram, c: str) -> VirtualGaussDiagram:
    """Reverse the arrow of chord ``c``; its sign is kept."""
    if isinstance(d, LongGaussDiagram):
        d = d.diagram
    if c not in d.sign:
        raise UnknownChord(c)
    return VirtualGaussDiagram(
        tuple((l, (not o) if l == c else o, s) for l, o, s in d.tokens)
    )
