"""Sparse exact linear combinations over an arbitrary basis-key type.

Keys are opaque hashable values; coefficients are any exact ring elements
supporting ``+``, ``*``, unary ``-``, ``==`` and truthiness as a zero test
(Fraction, QI and HbarPoly all qualify).  Zero coefficients are never stored.
"""

from __future__ import annotations

from typing import Any, Callable, Iterable


def default_sort_key(key):
    """Deterministic ordering for the key types used in this package."""
    sk = getattr(key, "sort_key", None)
    if sk is not None:
        return sk() if callable(sk) else sk
    if isinstance(key, tuple):
        return tuple(default_sort_key(k) for k in key)
    return key


class LinComb:
    """A finite formal sum  sum_k  c_k * k  with nonzero exact coefficients."""

    __slots__ = ("t",)

    def __init__(self, terms: dict | None = None, _trusted: bool = False):
        if _trusted:
            object.__setattr__(self, "t", terms if terms is not None else {})
            return
        t = {}
        if terms:
            for k, v in terms.items():
                if v:
                    t[k] = v
        object.__setattr__(self, "t", t)

    def __setattr__(self, *a):
        raise AttributeError("LinComb is immutable")

    @staticmethod
    def zero() -> "LinComb":
        return LinComb()

    @staticmethod
    def single(key, coeff) -> "LinComb":
        return LinComb({key: coeff} if coeff else {})

    def is_zero(self) -> bool:
        return not self.t

    def __bool__(self):
        return bool(self.t)

    def __len__(self):
        return len(self.t)

    def __iter__(self):
        return iter(self.t.items())

    def coeff(self, key):
        return self.t.get(key)

    def keys(self):
        return self.t.keys()

    def items_sorted(self, key: Callable = default_sort_key):
        return sorted(self.t.items(), key=lambda kv: key(kv[0]))

    def __add__(self, other: "LinComb") -> "LinComb":
        if not isinstance(other, LinComb):
            return NotImplemented
        t = dict(self.t)
        for k, v in other.t.items():
            if k in t:
                w = t[k] + v
                if w:
                    t[k] = w
                else:
                    del t[k]
            else:
                t[k] = v
        return LinComb(t, _trusted=True)

    def __neg__(self):
        return LinComb({k: -v for k, v in self.t.items()}, _trusted=True)

    def __sub__(self, other: "LinComb") -> "LinComb":
        if not isinstance(other, LinComb):
            return NotImplemented
        return self + (-other)

    def scale(self, c) -> "LinComb":
        if not c:
            return LinComb()
        return LinComb({k: c * v for k, v in self.t.items()})

    def __eq__(self, other):
        if not isinstance(other, LinComb):
            return NotImplemented
        return self.t == other.t

    def __hash__(self):
        raise TypeError("LinComb is not hashable")

    def map_keys(self, f: Callable[[Any], Any]) -> "LinComb":
        """Apply an injective key transform; colliding images are summed."""
        t: dict = {}
        for k, v in self.t.items():
            k2 = f(k)
            if k2 in t:
                w = t[k2] + v
                if w:
                    t[k2] = w
                else:
                    del t[k2]
            else:
                t[k2] = v
        return LinComb(t, _trusted=True)

    def map_coeffs(self, f) -> "LinComb":
        return LinComb({k: f(v) for k, v in self.t.items()})

    def __repr__(self):
        if not self.t:
            return "0"
        bits = []
        for k, v in self.items_sorted():
            bits.append(f"({v})*{k}")
        return " + ".join(bits)


def lincomb_sum(parts: Iterable[LinComb]) -> LinComb:
    t: dict = {}
    for p in parts:
        for k, v in p.t.items():
            if k in t:
                w = t[k] + v
                if w:
                    t[k] = w
                else:
                    del t[k]
            else:
                t[k] = v
    return LinComb(t, _trusted=True)
