"""The free word algebra: noncommutative polynomials in observable ids.

Coefficients are Laurent polynomials in hbar over the Gaussian rationals.
Concatenation is the product and the empty word is the unit, so scalars
embed as multiples of the empty word.  No relations are imposed: any
identity that holds here holds for purely combinatorial reasons.
"""

from __future__ import annotations

from typing import Iterable

from .lincomb import LinComb
from .scalars import HBAR_ONE, HbarPoly, as_hbar


class WordElem:
    """A finite linear combination of words (tuples of id strings)."""

    __slots__ = ("lc",)

    def __init__(self, lc: LinComb | None = None):
        object.__setattr__(self, "lc", lc if lc is not None else LinComb())

    def __setattr__(self, *a):
        raise AttributeError("WordElem is immutable")

    @staticmethod
    def zero() -> "WordElem":
        return WordElem()

    @staticmethod
    def unit() -> "WordElem":
        return WordElem(LinComb.single((), HBAR_ONE))

    @staticmethod
    def word(ids: Iterable[str], coeff=HBAR_ONE) -> "WordElem":
        c = as_hbar(coeff)
        return WordElem(LinComb.single(tuple(ids), c))

    @staticmethod
    def scalar(coeff) -> "WordElem":
        return WordElem.word((), coeff)

    def is_zero(self) -> bool:
        return self.lc.is_zero()

    def __eq__(self, other):
        return isinstance(other, WordElem) and self.lc == other.lc

    def __hash__(self):
        raise TypeError("WordElem is not hashable")

    def __add__(self, other: "WordElem") -> "WordElem":
        if not isinstance(other, WordElem):
            return NotImplemented
        return WordElem(self.lc + other.lc)

    def __sub__(self, other: "WordElem") -> "WordElem":
        if not isinstance(other, WordElem):
            return NotImplemented
        return WordElem(self.lc - other.lc)

    def __neg__(self):
        return WordElem(-self.lc)

    def scale(self, c) -> "WordElem":
        return WordElem(self.lc.scale(as_hbar(c)))

    def __mul__(self, other: "WordElem") -> "WordElem":
        if not isinstance(other, WordElem):
            return NotImplemented
        terms: dict[tuple, HbarPoly] = {}
        for w1, c1 in self.lc:
            for w2, c2 in other.lc:
                w = w1 + w2
                c = c1 * c2
                if w in terms:
                    c = terms[w] + c
                if c:
                    terms[w] = c
                else:
                    terms.pop(w, None)
        return WordElem(LinComb(terms, _trusted=True))

    def scalar_part(self) -> HbarPoly:
        c = self.lc.coeff(())
        return c if c is not None else as_hbar(0)

    def __repr__(self):
        if self.lc.is_zero():
            return "0"
        bits = []
        for w, c in self.lc.items_sorted():
            name = ".".join(w) if w else "1"
            bits.append(f"({c})*{name}")
        return " + ".join(bits)
