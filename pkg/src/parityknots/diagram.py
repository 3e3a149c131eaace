"""Chord diagrams and Gauss phrases.

A :class:`GaussPhrase` is a multi-component double-occurrence word: every
chord label occurs exactly twice across the cyclic components.  It encodes a
framed 4-graph (a free link diagram); chordless circles are kept as a counter
``free_loops``.  A :class:`VirtualGaussDiagram` is a one-circle Gauss diagram
whose chords also carry a writhe sign and an over/under arrow.

Cyclic words are stored with an arbitrary anchor.  Structural equality of the
dataclasses therefore depends on the anchor; isomorphism is decided by
:func:`canonical_key`.
"""

from __future__ import annotations

import enum
import itertools
import re
from collections import Counter
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, Mapping, Sequence, Union

from .errors import MalformedCode, SignMismatch, UnknownChord

__all__ = [
    "GaussPhrase",
    "VirtualGaussDiagram",
    "LongGaussDiagram",
    "CanonicalKey",
    "Smoothing",
    "parse_free",
    "parse_virtual",
    "parse_corpus",
    "linked",
    "interlacement_counts",
    "canonical_key",
    "smooth",
    "resolve",
    "delete_chords",
    "is_split",
]

Position = tuple[int, int]
Token = tuple[str, bool, int]

_LABEL = re.compile(r"^[A-Za-z0-9_]+$")
_VTOKEN = re.compile(r"^([OU])([A-Za-z0-9_]+)([+-])$")
FREE_LOOP = "()"


@dataclass(frozen=True)
class GaussPhrase:
    """Framed 4-graph as cyclic double-occurrence words plus free loops."""

    components: tuple[tuple[str, ...], ...] = ()
    free_loops: int = 0

    def __post_init__(self):
        comps = tuple(tuple(str(t) for t in c) for c in self.components)
        object.__setattr__(self, "components", comps)
        if self.free_loops < 0:
            raise MalformedCode("negative free loop count")
        if any(len(c) == 0 for c in comps):
            raise MalformedCode("empty component; use free_loops instead")
        counts = Counter(t for c in comps for t in c)
        bad = sorted(k for k, v in counts.items() if v != 2)
        if bad:
            raise MalformedCode(f"labels not occurring exactly twice: {bad}")

    @cached_property
    def ends(self) -> dict[str, tuple[Position, Position]]:
        found: dict[str, list[Position]] = {}
        for ci, comp in enumerate(self.components):
            for i, t in enumerate(comp):
                found.setdefault(t, []).append((ci, i))
        return {k: (v[0], v[1]) for k, v in found.items()}

    @property
    def chords(self) -> tuple[str, ...]:
        """Chord labels in order of first occurrence."""
        return tuple(self.ends)

    @property
    def n_chords(self) -> int:
        return len(self.ends)

    @property
    def n_components(self) -> int:
        """Number of unicursal components, free loops included."""
        return len(self.components) + self.free_loops

    @property
    def base(self) -> "GaussPhrase":
        return self

    def __str__(self) -> str:
        parts = [" ".join(c) for c in self.components]
        parts += [FREE_LOOP] * self.free_loops
        return " / ".join(parts)


@dataclass(frozen=True)
class VirtualGaussDiagram:
    """One-circle Gauss diagram with signed, oriented chords.

    ``tokens`` lists the chord ends along the oriented circle; each token is
    ``(label, is_over, sign)``.  The arrow of a chord runs from its over end
    to its under end.
    """

    tokens: tuple[Token, ...] = ()

    def __post_init__(self):
        toks = tuple((str(l), bool(o), int(s)) for l, o, s in self.tokens)
        object.__setattr__(self, "tokens", toks)
        seen: dict[str, list[Token]] = {}
        for t in toks:
            if t[2] not in (1, -1):
                raise MalformedCode(f"bad sign in {t}")
            seen.setdefault(t[0], []).append(t)
        for label, ts in seen.items():
            if len(ts) != 2:
                raise MalformedCode(f"label {label} occurs {len(ts)} times")
            if ts[0][1] == ts[1][1]:
                raise MalformedCode(f"label {label} needs one O and one U end")
            if ts[0][2] != ts[1][2]:
                raise SignMismatch(f"label {label} has disagreeing signs")

    @property
    def word(self) -> tuple[str, ...]:
        return tuple(t[0] for t in self.tokens)

    @cached_property
    def base(self) -> GaussPhrase:
        if not self.tokens:
            return GaussPhrase((), 1)
        return GaussPhrase((self.word,), 0)

    @cached_property
    def sign(self) -> dict[str, int]:
        return {t[0]: t[2] for t in self.tokens}

    @cached_property
    def arrow(self) -> dict[str, tuple[int, int]]:
        """Label -> (over-end position, under-end position)."""
        over: dict[str, int] = {}
        under: dict[str, int] = {}
        for i, (label, is_over, _) in enumerate(self.tokens):
            (over if is_over else under)[label] = i
        return {k: (over[k], under[k]) for k in over}

    @property
    def chords(self) -> tuple[str, ...]:
        return tuple(dict.fromkeys(self.word))

    @property
    def n_chords(self) -> int:
        return len(self.tokens) // 2

    @property
    def n_components(self) -> int:
        return 1

    def __str__(self) -> str:
        if not self.tokens:
            return FREE_LOOP
        return " ".join(
            f"{'O' if o else 'U'}{l}{'+' if s > 0 else '-'}" for l, o, s in self.tokens
        )


Diagram = Union[GaussPhrase, VirtualGaussDiagram]


@dataclass(frozen=True)
class LongGaussDiagram:
    """A one-component diagram cut open at a point distinct from chord ends.

    ``basepoint`` is the index of the chord end immediately after the cut.
    """

    diagram: Diagram
    basepoint: int = 0

    def __post_init__(self):
        if self.diagram.n_components != 1:
            raise MalformedCode("long diagrams need exactly one component")
        n = 2 * self.diagram.n_chords
        if n and not 0 <= self.basepoint < n:
            raise MalformedCode(f"basepoint {self.basepoint} out of range")
        if not n and self.basepoint != 0:
            raise MalformedCode("a chordless circle only has basepoint 0")

    @property
    def word(self) -> tuple[str, ...]:
        """Chord labels read from the basepoint along the orientation."""
        if isinstance(self.diagram, VirtualGaussDiagram):
            w = self.diagram.word
        else:
            w = self.diagram.components[0] if self.diagram.components else ()
        return w[self.basepoint:] + w[: self.basepoint]

    def shifted(self, k: int = 1) -> "LongGaussDiagram":
        n = 2 * self.diagram.n_chords
        return LongGaussDiagram(self.diagram, (self.basepoint + k) % n if n else 0)


@dataclass(frozen=True, order=True)
class CanonicalKey:
    """Minimal relabelled representative of an isomorphism class.

    For free phrases ``components`` holds chord indices (1-based, numbered by
    first occurrence).  For decorated (virtual) diagrams each entry encodes
    ``4 * index + 2 * is_under + is_negative``.
    """

    components: tuple[tuple[int, ...], ...]
    free_loops: int = 0
    decorated: bool = False

    def diagram(self) -> Diagram:
        if self.decorated:
            if not self.components:
                return VirtualGaussDiagram(())
            return VirtualGaussDiagram(
                tuple(
                    (str(v // 4), not (v & 2), -1 if v & 1 else 1)
                    for v in self.components[0]
                )
            )
        return GaussPhrase(
            tuple(tuple(str(v) for v in c) for c in self.components), self.free_loops
        )

    @property
    def n_chords(self) -> int:
        return sum(len(c) for c in self.components) // 2

    def __str__(self) -> str:
        return str(self.diagram())


# ---------------------------------------------------------------------------
# parsing


def parse_free(text: str) -> GaussPhrase:
    """Parse ``"1 2 1 2 / 3 3 / ()"`` style Gauss phrases."""
    comps: list[tuple[str, ...]] = []
    loops = 0
    if not text.strip():
        raise MalformedCode("empty code")
    for segment in text.split("/"):
        toks = segment.split()
        if not toks:
            raise MalformedCode("empty component literal")
        if all(t == FREE_LOOP for t in toks):
            loops += len(toks)
            continue
        for t in toks:
            if not _LABEL.match(t):
                raise MalformedCode(f"bad token {t!r}")
        comps.append(tuple(toks))
    return GaussPhrase(tuple(comps), loops)


def parse_virtual(text: str) -> VirtualGaussDiagram:
    """Parse ``"O1+ U2- ..."``; ``"()"`` is the crossingless circle."""
    toks = text.split()
    if not toks:
        raise MalformedCode("empty code")
    if toks == [FREE_LOOP]:
        return VirtualGaussDiagram(())
    out = []
    for t in toks:
        m = _VTOKEN.match(t)
        if not m:
            raise MalformedCode(f"bad virtual token {t!r}")
        out.append((m.group(2), m.group(1) == "O", 1 if m.group(3) == "+" else -1))
    return VirtualGaussDiagram(tuple(out))


def parse_corpus(lines: Iterable[str], virtual: bool = False) -> list[Diagram]:
    """One diagram per line; ``#`` starts a comment, blank lines are skipped."""
    parse = parse_virtual if virtual else parse_free
    out = []
    for line in lines:
        line = line.split("#", 1)[0].strip()
        if line:
            out.append(parse(line))
    return out


# ---------------------------------------------------------------------------
# interlacement


def _phrase(p) -> GaussPhrase:
    if isinstance(p, LongGaussDiagram):
        p = p.diagram
    return p.base


def linked(c: str, d: str, p) -> bool:
    """Whether chords ``c`` and ``d`` alternate on their common circle.

    Chords with ends on different components are never linked.
    """
    p = _phrase(p)
    for x in (c, d):
        if x not in p.ends:
            raise UnknownChord(x)
    if c == d:
        return False
    (ci, i), (cj, j) = p.ends[c]
    (di, k), (dj, l) = p.ends[d]
    if not (ci == cj == di == dj):
        return False
    return (i < k < j) != (i < l < j)


def interlacement_counts(p) -> dict[str, int]:
    """Number of chords linked with each chord."""
    p = _phrase(p)
    counts = dict.fromkeys(p.ends, 0)
    for ci, comp in enumerate(p.components):
        own = [t for t in dict.fromkeys(comp) if p.ends[t][0][0] == p.ends[t][1][0] == ci]
        spans = {t: (p.ends[t][0][1], p.ends[t][1][1]) for t in own}
        for a, b in itertools.combinations(own, 2):
            i, j = spans[a]
            k, l = spans[b]
            if (i < k < j) != (i < l < j):
                counts[a] += 1
                counts[b] += 1
    return counts


# ---------------------------------------------------------------------------
# canonical forms


def _relabel(seqs: Iterable[Sequence[str]]) -> tuple[tuple[int, ...], ...]:
    mapping: dict[str, int] = {}
    out = []
    for seq in seqs:
        row = []
        for t in seq:
            k = mapping.get(t)
            if k is None:
                k = mapping[t] = len(mapping) + 1
            row.append(k)
        out.append(tuple(row))
    return tuple(out)


def _orientations(comp: tuple[str, ...]) -> list[tuple[str, ...]]:
    n = len(comp)
    rev = comp[::-1]
    return [comp[i:] + comp[:i] for i in range(n)] + [rev[i:] + rev[:i] for i in range(n)]


@lru_cache(maxsize=200_000)
def _free_key(components: tuple[tuple[str, ...], ...], free_loops: int) -> CanonicalKey:
    if not components:
        return CanonicalKey((), free_loops)
    if len(components) == 1:
        best = min(_relabel((w,)) for w in _orientations(components[0]))
        return CanonicalKey(best, free_loops)
    comps = sorted(components, key=len, reverse=True)
    groups = [list(g) for _, g in itertools.groupby(comps, key=len)]
    best = None
    for perm in itertools.product(*(itertools.permutations(g) for g in groups)):
        ordered = [c for grp in perm for c in grp]
        for choice in itertools.product(*(_orientations(c) for c in ordered)):
            cand = _relabel(choice)
            if best is None or cand < best:
                best = cand
    return CanonicalKey(best, free_loops)


def _encode_token(index: int, is_over: bool, sign: int) -> int:
    return 4 * index + (0 if is_over else 2) + (0 if sign > 0 else 1)


@lru_cache(maxsize=200_000)
def _virtual_key(tokens: tuple[Token, ...]) -> CanonicalKey:
    if not tokens:
        return CanonicalKey((), 0, True)
    n = len(tokens)
    best = None
    for r in range(n):
        rot = tokens[r:] + tokens[:r]
        mapping: dict[str, int] = {}
        row = []
        for label, is_over, sign in rot:
            k = mapping.get(label)
            if k is None:
                k = mapping[label] = len(mapping) + 1
            row.append(_encode_token(k, is_over, sign))
        cand = tuple(row)
        if best is None or cand < best:
            best = cand
    return CanonicalKey((best,), 0, True)


def canonical_key(p) -> CanonicalKey:
    """Isomorphism-class key.

    Free phrases are taken up to component permutation, rotation and
    reflection of each component, and relabelling.  Virtual diagrams keep
    their orientation, signs and arrows, so only rotation and relabelling
    act on them.
    """
    if isinstance(p, VirtualGaussDiagram):
        return _virtual_key(p.tokens)
    if isinstance(p, CanonicalKey):
        return p
    return _free_key(p.components, p.free_loops)


# ---------------------------------------------------------------------------
# smoothing


class Smoothing(enum.Enum):
    """The two reconnections at a vertex.

    ``SPLIT`` follows the orientation of the word (it splits a one-component
    chord into two circles); ``JOIN`` reverses one of the arcs.  At a chord
    joining two components both reconnections merge them.
    """

    SPLIT = "SPLIT"
    JOIN = "JOIN"

    MERGE = "SPLIT"


def resolve(p: GaussPhrase, oriented: Mapping[str, bool]) -> GaussPhrase:
    """Smooth every chord in ``oriented`` at once.

    ``oriented[c]`` selects the orientation-preserving reconnection (True) or
    the one reversing an arc (False).  Chords not mentioned are kept; the
    result lists them along the traced circles.
    """
    comps = p.components
    labels: list[str] = []
    nxt: list[int] = []
    prv: list[int] = []
    for comp in comps:
        base, n = len(labels), len(comp)
        labels.extend(comp)
        nxt.extend(base + (i + 1) % n for i in range(n))
        prv.extend(base + (i - 1) % n for i in range(n))
    first: dict[str, int] = {}
    partner = [0] * len(labels)
    for f, lab in enumerate(labels):
        if lab in first:
            partner[f] = first[lab]
            partner[first[lab]] = f
        else:
            first[lab] = f
    for lab in oriented:
        if lab not in first:
            raise UnknownChord(lab)

    seen = [False] * len(labels)
    out: list[tuple[str, ...]] = []
    loops = p.free_loops
    for start in range(len(labels)):
        if seen[start]:
            continue
        seen[start] = True
        seq: list[str] = []
        pos, d = nxt[start], 1
        while True:
            lab = labels[pos]
            choice = oriented.get(lab)
            if choice is None:
                seq.append(lab)
                src = pos
            else:
                src = partner[pos]
                if not choice:
                    d = -d
            if d == 1:
                arc, pos = src, nxt[src]
            else:
                arc = pos = prv[src]
            if arc == start:
                break
            seen[arc] = True
        if seq:
            out.append(tuple(seq))
        else:
            loops += 1
    return GaussPhrase(tuple(out), loops)


def smooth(p: GaussPhrase, c: str, mode: Smoothing | str) -> GaussPhrase:
    """Smooth a single chord; see :class:`Smoothing` for the two modes."""
    p = _phrase(p)
    if c not in p.ends:
        raise UnknownChord(c)
    mode = Smoothing(mode) if isinstance(mode, str) else mode
    return resolve(p, {c: mode is Smoothing.SPLIT})


def delete_chords(p: GaussPhrase, labels: Iterable[str]) -> GaussPhrase:
    """Remove chords; components left without chords become free loops."""
    drop = set(labels)
    for lab in drop:
        if lab not in p.ends:
            raise UnknownChord(lab)
    comps = []
    loops = p.free_loops
    for comp in p.components:
        kept = tuple(t for t in comp if t not in drop)
        if kept:
            comps.append(kept)
        else:
            loops += 1
    return GaussPhrase(tuple(comps), loops)


def is_split(p: GaussPhrase) -> bool:
    """Whether the components fall into two groups with no chord between them.

    Free loops always form such a group when anything else is present.
    """
    n = p.n_components
    if n <= 1:
        return False
    if p.free_loops:
        return True
    parent = list(range(len(p.components)))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for (ci, _), (cj, _) in p.ends.values():
        parent[find(ci)] = find(cj)
    return len({find(i) for i in range(len(p.components))}) > 1
