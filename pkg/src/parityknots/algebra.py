"""Coefficient rings and the quotient modules the brackets take values in.

* :class:`LaurentPoly` -- exact sparse polynomials in ``a, a^-1`` over the integers.
* :class:`Z2GElement` -- Z/2 combinations of framed graphs modulo second
  Reidemeister moves; with ``tilde`` set, graphs with a split component
  vanish.
* :class:`FModuleElement` -- combinations over ``Z[a, a^-1]`` modulo second
  moves and the circle relation ``L + O = (-a^2 - a^-2) L``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Mapping, Union

from .diagram import CanonicalKey, GaussPhrase, canonical_key, is_split
from .errors import ArityMismatch, MalformedCode, Mismatch
from .moves import reduce_r2

__all__ = [
    "LaurentPoly",
    "A",
    "DELTA",
    "Z2GElement",
    "FModuleElement",
    "UNIT",
    "class_of",
    "z2_add",
    "fmodule_normalize",
]


class LaurentPoly:
    """Immutable sparse Laurent polynomial; zero coefficients are never stored."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[int, int] = {}
        for e, c in items:
            acc[int(e)] = acc.get(int(e), 0) + int(c)
        self._terms = {e: c for e, c in sorted(acc.items()) if c}
        self._hash = None

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1) -> "LaurentPoly":
        return cls({exp: coeff})

    @classmethod
    def constant(cls, c: int) -> "LaurentPoly":
        return cls({0: c})

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def _coerce(self, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        acc = dict(self._terms)
        for e, c in other._terms.items():
            acc[e] = acc.get(e, 0) + c
        return LaurentPoly(acc)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        acc: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                acc[e1 + e2] = acc.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(acc)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if len(self._terms) != 1:
                raise ValueError("only monomials are invertible")
            ((e, c),) = self._terms.items()
            if c not in (1, -1):
                raise ValueError("only unit monomials are invertible")
            return LaurentPoly.monomial(-e * -n, c ** (-n))
        result = LaurentPoly.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by ``a**k``."""
        return LaurentPoly({e + k: c for e, c in self._terms.items()})

    def scale(self, c: int) -> "LaurentPoly":
        return LaurentPoly({e: c * v for e, v in self._terms.items()})

    def mirror(self) -> "LaurentPoly":
        """Substitute ``a -> a^-1``."""
        return LaurentPoly({-e: c for e, c in self._terms.items()})

    def evaluate(self, x):
        """Value at ``x``; integer and Fraction inputs stay exact."""
        if isinstance(x, int):
            x = Fraction(x)
        return sum((c * x**e for e, c in self._terms.items()), 0)

    @property
    def min_degree(self) -> int:
        return min(self._terms) if self._terms else 0

    @property
    def max_degree(self) -> int:
        return max(self._terms) if self._terms else 0

    @property
    def span(self) -> int:
        return self.max_degree - self.min_degree

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple(self._terms.items()))
        return self._hash

    def __repr__(self):
        return f"LaurentPoly({self})"

    def __str__(self):
        if not self._terms:
            return "0"
        return " + ".join(f"{c}*a^{e}" for e, c in self._terms.items())

    @classmethod
    def parse(cls, text: str) -> "LaurentPoly":
        """Inverse of ``str``: ``"1*a^-7 + -1*a^-3"``."""
        text = text.strip()
        if text == "0":
            return cls()
        terms = []
        for part in text.split(" + "):
            m = re.fullmatch(r"\s*(-?\d+)\*a\^(-?\d+)\s*", part)
            if not m:
                raise MalformedCode(f"bad polynomial term {part!r}")
            terms.append((int(m.group(2)), int(m.group(1))))
        return cls(terms)


A = LaurentPoly.monomial(1)
DELTA = -LaurentPoly.monomial(2) - LaurentPoly.monomial(-2)
UNIT = CanonicalKey((), 1)


@lru_cache(maxsize=200_000)
def _reduced(p: GaussPhrase) -> GaussPhrase:
    return reduce_r2(p)


@dataclass(frozen=True)
class Z2GElement:
    """A finite set of R2-irreducible classes, read as a Z/2 sum."""

    classes: frozenset = field(default_factory=frozenset)
    arity: int = 1
    tilde: bool = False

    @classmethod
    def zero(cls, arity: int = 1, tilde: bool = False) -> "Z2GElement":
        return cls(frozenset(), arity, tilde)

    def __add__(self, other: "Z2GElement") -> "Z2GElement":
        if not isinstance(other, Z2GElement):
            return NotImplemented
        if (self.arity, self.tilde) != (other.arity, other.tilde):
            raise Mismatch("elements of different modules")
        return Z2GElement(self.classes ^ other.classes, self.arity, self.tilde)

    def __bool__(self) -> bool:
        return bool(self.classes)

    def __len__(self) -> int:
        return len(self.classes)

    def __iter__(self) -> Iterator[CanonicalKey]:
        return iter(sorted(self.classes))

    def __contains__(self, key) -> bool:
        if not isinstance(key, CanonicalKey):
            key = canonical_key(key)
        return key in self.classes

    def codes(self) -> list[str]:
        return [str(k) for k in self]

    def __str__(self) -> str:
        return "0" if not self.classes else " + ".join(f"[{c}]" for c in self.codes())


def z2_add(x: Z2GElement, y: Z2GElement) -> Z2GElement:
    return x + y


def class_of(p: GaussPhrase, arity: int | None = None, tilde: bool = False) -> Z2GElement:
    """The class of a graph: reduce by second moves, then canonicalise.

    With ``tilde`` the class is zero when the reduced graph has a split
    component.  The split test runs on the reduced graph, which keeps the
    class constant on R2 orbits.
    """
    p = p.base
    if arity is None:
        arity = p.n_components
    if p.n_components != arity:
        raise ArityMismatch(f"{p.n_components} components, expected {arity}")
    q = _reduced(p)
    if tilde and is_split(q):
        return Z2GElement.zero(arity, tilde)
    return Z2GElement(frozenset((canonical_key(q),)), arity, tilde)


class FModuleElement:
    """Finite sum of (class, Laurent polynomial) terms with no zero coefficient."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[CanonicalKey, LaurentPoly] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[CanonicalKey, LaurentPoly] = {}
        for k, v in items:
            acc[k] = acc.get(k, LaurentPoly()) + v
        self._terms = {k: v for k, v in sorted(acc.items()) if v}

    @classmethod
    def unit(cls, coeff: LaurentPoly | int = 1) -> "FModuleElement":
        if isinstance(coeff, int):
            coeff = LaurentPoly.constant(coeff)
        return cls({UNIT: coeff})

    def items(self):
        return self._terms.items()

    def keys(self):
        return self._terms.keys()

    def __getitem__(self, key: CanonicalKey) -> LaurentPoly:
        return self._terms.get(key, LaurentPoly())

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __add__(self, other: "FModuleElement") -> "FModuleElement":
        if not isinstance(other, FModuleElement):
            return NotImplemented
        return FModuleElement(list(self._terms.items()) + list(other._terms.items()))

    def scale(self, c: LaurentPoly | int) -> "FModuleElement":
        if isinstance(c, int):
            c = LaurentPoly.constant(c)
        return FModuleElement({k: v * c for k, v in self._terms.items()})

    def is_unit_multiple(self) -> bool:
        return set(self._terms) <= {UNIT}

    def __eq__(self, other):
        if not isinstance(other, FModuleElement):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(tuple(self._terms.items()))

    def __repr__(self):
        return f"FModuleElement({self})"

    def __str__(self):
        if not self._terms:
            return "0"
        return " + ".join(f"({v})*[{k}]" for k, v in self._terms.items())


@lru_cache(maxsize=200_000)
def _normal_form(p: GaussPhrase) -> tuple[CanonicalKey, int]:
    q = _reduced(p)
    if q.components:
        return canonical_key(GaussPhrase(q.components, 0)), q.free_loops
    return UNIT, q.free_loops - 1


def fmodule_normalize(
    raw: Mapping[Union[GaussPhrase, CanonicalKey], Union[LaurentPoly, int]]
) -> FModuleElement:
    """Reduce each graph by second moves and trade free loops for ``DELTA`` factors."""
    acc: dict[CanonicalKey, LaurentPoly] = {}
    for g, coeff in raw.items():
        if isinstance(coeff, int):
            coeff = LaurentPoly.constant(coeff)
        if isinstance(g, CanonicalKey):
            g = g.diagram()
        key, loops = _normal_form(g.base)
        term = coeff * DELTA**loops if loops else coeff
        acc[key] = acc.get(key, LaurentPoly()) + term
    return FModuleElement(acc)
