"""Series of the composition algebra, product systems and T-exponentials.

A ``SigmaSeries`` assigns to each degree n an element over the canonical
set [n] (validated to be invariant under relabeling); convolution sums the
concatenation products over ordered splits.  A ``ProductSystem`` evaluates
basis compositions with one decoration per label into the word algebra.
T-exponentials and their coderivation/arrow perturbations assemble those
evaluations into truncated formal power series in the symbols g and j with
hbar-Laurent coefficients.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Any, Callable, Iterable, Mapping

from .arrows import advanced_element, retarded_element, reverse_convolution_element
from .compositions import (
    Composition,
    canonical_set,
    one_lump,
    ordered_splits,
    proper_splits,
    star_labels,
)
from .errors import DomainError
from .hopf import (
    H,
    DecoratedElem,
    SigmaElem,
    antipode,
    basis_elem,
    delta_split,
    mu,
    relabel,
    unit_elem,
    zero_elem,
)
from .lincomb import LinComb
from .scalars import C_QFT, HBAR_ONE, QI_ONE, as_hbar
from .words import WordElem

DEFAULT_ORDER = 4


# ---------------------------------------------------------------------------
# series of the composition algebra


def _order_embedding(k: int, target: tuple) -> dict[int, int]:
    return {i + 1: target[i] for i in range(k)}


class SigmaSeries:
    """Degreewise elements over [n], 0 <= n <= max_n, H-basis, S_n-invariant."""

    __slots__ = ("terms", "max_n")

    def __init__(self, terms: Mapping[int, SigmaElem], max_n: int, validate: bool = True):
        store: dict[int, SigmaElem] = {}
        for n, elem in terms.items():
            if n < 0 or n > max_n:
                raise DomainError(f"degree {n} outside truncation 0..{max_n}")
            if elem.basis != H:
                raise DomainError("series terms must be in the H-basis")
            if elem.ground != canonical_set(n):
                raise DomainError(f"degree-{n} term must live over [{n}]")
            if not elem.is_zero():
                store[n] = elem
        if validate:
            for n, elem in store.items():
                for i in range(1, n):
                    swap = {j: j for j in elem.ground}
                    swap[i], swap[i + 1] = i + 1, i
                    if relabel(elem, swap) != elem:
                        raise DomainError(f"degree-{n} term is not relabeling-invariant")
        object.__setattr__(self, "terms", store)
        object.__setattr__(self, "max_n", max_n)

    def __setattr__(self, *a):
        raise AttributeError("SigmaSeries is immutable")

    def term(self, n: int) -> SigmaElem:
        if n in self.terms:
            return self.terms[n]
        return zero_elem(canonical_set(n), H)

    def __eq__(self, other):
        return (
            isinstance(other, SigmaSeries)
            and self.max_n == other.max_n
            and self.terms == other.terms
        )

    def map_terms(self, f: Callable[[SigmaElem], SigmaElem]) -> "SigmaSeries":
        return SigmaSeries({n: f(t) for n, t in self.terms.items()}, self.max_n, validate=False)

    def __repr__(self):
        return "SigmaSeries{" + ", ".join(f"{n}: {t}" for n, t in sorted(self.terms.items())) + "}"


def unit_series(max_n: int) -> SigmaSeries:
    return SigmaSeries({0: unit_elem(H)}, max_n, validate=False)


def universal_series(c, max_n: int) -> SigmaSeries:
    """Degree n |-> c^n * H_([n]) (the group-like exponential-type series)."""
    terms = {}
    for n in range(max_n + 1):
        coeff = _power(c, n)
        terms[n] = basis_elem(one_lump(canonical_set(n)), H, coeff)
    return SigmaSeries(terms, max_n, validate=False)


def _power(c, n: int):
    out = None
    for _ in range(n):
        out = c if out is None else out * c
    if out is None:
        return QI_ONE if not hasattr(c, "c") else HBAR_ONE
    return out


def series_antipode(s: SigmaSeries) -> SigmaSeries:
    return s.map_terms(antipode)


def convolve(s: SigmaSeries, t: SigmaSeries) -> SigmaSeries:
    """Degreewise sum over ordered splits of the concatenation products."""
    if s.max_n != t.max_n:
        raise DomainError("convolution requires matching truncation orders")
    out: dict[int, SigmaElem] = {}
    for n in range(s.max_n + 1):
        ground = canonical_set(n)
        acc = None
        for S, T in ordered_splits(ground):
            left = s.term(len(S))
            right = t.term(len(T))
            if left.is_zero() or right.is_zero():
                continue
            piece = mu(
                relabel(left, _order_embedding(len(S), S)),
                relabel(right, _order_embedding(len(T), T)),
            )
            acc = piece if acc is None else acc + piece
        if acc is not None and not acc.is_zero():
            out[n] = acc
    return SigmaSeries(out, s.max_n, validate=False)


def is_group_like(s: SigmaSeries) -> bool:
    """Delta_{S,T}(s_n) = s_(|S|) (x) s_(|T|) under canonical relabeling, all splits."""
    if s.term(0) != unit_elem(H):
        return False
    for n in range(1, s.max_n + 1):
        ground = canonical_set(n)
        sn = s.term(n)
        for S, T in proper_splits(ground):
            left = relabel(s.term(len(S)), _order_embedding(len(S), S))
            right = relabel(s.term(len(T)), _order_embedding(len(T), T))
            expected: dict = {}
            for F, a in left.lc:
                for G, b in right.lc:
                    c = a * b
                    if c:
                        expected[(F, G)] = c
            if delta_split(sn, S, T) != LinComb(expected):
                return False
    return True


# ---------------------------------------------------------------------------
# product systems


class ProductSystem:
    """An evaluator of decorated basis compositions into the word algebra.

    ``eval_comp(F, dec)`` must be linear-extension-ready: it receives a
    single composition and a decoration for every ground label, and returns
    a WordElem.  ``claims_homomorphism`` declares whether the evaluator is
    multiplicative (checked by homomorphism_check, not assumed).
    """

    __slots__ = ("name", "eval_comp", "claims_homomorphism")

    def __init__(self, name: str, eval_comp: Callable, claims_homomorphism: bool = True):
        object.__setattr__(self, "name", name)
        object.__setattr__(self, "eval_comp", eval_comp)
        object.__setattr__(self, "claims_homomorphism", claims_homomorphism)

    def __setattr__(self, *a):
        raise AttributeError("ProductSystem is immutable")

    def __repr__(self):
        return f"ProductSystem({self.name})"


def polynomial_system(pairings: Mapping[Any, object]) -> ProductSystem:
    """Pointwise products of linear functionals evaluated at a fixed point.

    ``pairings`` maps decoration symbols to the exact value of their pairing
    with the chosen point; evaluation multiplies the values of all labels,
    so the target is commutative and the system is algebraic.
    """

    def eval_comp(F: Composition, dec: Mapping[int, Any]) -> WordElem:
        c = HBAR_ONE
        for l in F.ground:
            c = c * as_hbar(pairings[dec[l]])
        return WordElem.scalar(c)

    return ProductSystem("polynomial", eval_comp, claims_homomorphism=True)


def eval_system(sys: ProductSystem, x: SigmaElem | DecoratedElem, dec: Mapping[int, Any] | None = None) -> WordElem:
    """Linear extension of the evaluator over the H-basis."""
    if isinstance(x, DecoratedElem):
        if dec is not None:
            raise DomainError("decorated elements carry their own decoration")
        dec = x.decoration
        x = x.elem
    if x.basis != H:
        raise DomainError("eval_system expects an H-basis element")
    if dec is None:
        dec = {}
    missing = [l for l in x.ground if l not in dec]
    if missing:
        raise DomainError(f"decoration missing for labels {missing}")
    out = WordElem.zero()
    for F, c in x.lc:
        out = out + sys.eval_comp(F, dec).scale(c)
    return out


def homomorphism_check(sys: ProductSystem, n: int, decorations: Mapping[int, Any]) -> bool:
    """eta(mu(x,y) (x) A_S A_T) = eta(x (x) A_S) * eta(y (x) A_T) on basis inputs."""
    from .compositions import compositions_of

    ground = canonical_set(n)
    for l in ground:
        if l not in decorations:
            raise DomainError(f"decoration missing for label {l}")
    if sys.eval_comp(Composition(()), {}) != WordElem.unit():
        return False
    for m in range(0, n + 1):
        sub = canonical_set(m)
        for S, T in ordered_splits(sub):
            dec_s = {l: decorations[l] for l in S}
            dec_t = {l: decorations[l] for l in T}
            dec = {**dec_s, **dec_t}
            for F in compositions_of(S):
                for G in compositions_of(T):
                    lhs = eval_system(sys, mu(basis_elem(F, H), basis_elem(G, H)), dec)
                    rhs = eval_system(sys, basis_elem(F, H), dec_s) * eval_system(
                        sys, basis_elem(G, H), dec_t
                    )
                    if lhs != rhs:
                        return False
    return True


# ---------------------------------------------------------------------------
# truncated bivariate series with word-algebra coefficients


class TruncSeries:
    """Truncated formal power series in (g, j) with WordElem coefficients."""

    __slots__ = ("order", "terms")

    def __init__(self, order: int, terms: Mapping[tuple[int, int], WordElem] | None = None):
        store: dict[tuple[int, int], WordElem] = {}
        if terms:
            for (r, n), v in terms.items():
                if r < 0 or n < 0:
                    raise DomainError("negative exponents are not allowed")
                if r + n > order:
                    raise DomainError(f"term g^{r} j^{n} beyond truncation order {order}")
                if not v.is_zero():
                    store[(r, n)] = v
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "terms", store)

    def __setattr__(self, *a):
        raise AttributeError("TruncSeries is immutable")

    @staticmethod
    def unit(order: int) -> "TruncSeries":
        return TruncSeries(order, {(0, 0): WordElem.unit()})

    def coeff(self, r: int, n: int) -> WordElem:
        return self.terms.get((r, n), WordElem.zero())

    def __eq__(self, other):
        return (
            isinstance(other, TruncSeries)
            and self.order == other.order
            and self.terms == other.terms
        )

    def __add__(self, other: "TruncSeries") -> "TruncSeries":
        if self.order != other.order:
            raise DomainError("truncation orders differ")
        keys = set(self.terms) | set(other.terms)
        return TruncSeries(
            self.order, {k: self.coeff(*k) + other.coeff(*k) for k in keys}
        )

    def __sub__(self, other: "TruncSeries") -> "TruncSeries":
        if self.order != other.order:
            raise DomainError("truncation orders differ")
        keys = set(self.terms) | set(other.terms)
        return TruncSeries(
            self.order, {k: self.coeff(*k) - other.coeff(*k) for k in keys}
        )

    def __mul__(self, other: "TruncSeries") -> "TruncSeries":
        if self.order != other.order:
            raise DomainError("truncation orders differ")
        terms: dict[tuple[int, int], WordElem] = {}
        for (r1, n1), v1 in self.terms.items():
            for (r2, n2), v2 in other.terms.items():
                r, n = r1 + r2, n1 + n2
                if r + n > self.order:
                    continue
                prod = v1 * v2
                if (r, n) in terms:
                    terms[(r, n)] = terms[(r, n)] + prod
                else:
                    terms[(r, n)] = prod
        return TruncSeries(self.order, terms)

    def scale(self, c) -> "TruncSeries":
        return TruncSeries(self.order, {k: v.scale(c) for k, v in self.terms.items()})

    def truncate(self, order: int) -> "TruncSeries":
        return TruncSeries(
            order, {k: v for k, v in self.terms.items() if k[0] + k[1] <= order}
        )

    def at_g_zero(self) -> "TruncSeries":
        return TruncSeries(self.order, {k: v for k, v in self.terms.items() if k[0] == 0})

    def at_j_zero(self) -> "TruncSeries":
        return TruncSeries(self.order, {k: v for k, v in self.terms.items() if k[1] == 0})

    def __repr__(self):
        if not self.terms:
            return f"0 (order {self.order})"
        bits = []
        for (r, n) in sorted(self.terms, key=lambda k: (k[0] + k[1], k[0])):
            bits.append(f"g^{r} j^{n} [{self.terms[(r, n)]}]")
        return " + ".join(bits)


def formal_diff(ts: TruncSeries, symbol: str) -> TruncSeries:
    """The degree-lowering derivative d/dg or d/dj with the (n+1) shift."""
    if symbol not in ("g", "j"):
        raise DomainError("symbol must be 'g' or 'j'")
    terms: dict[tuple[int, int], WordElem] = {}
    for (r, n), v in ts.terms.items():
        if symbol == "g" and r >= 1:
            terms[(r - 1, n)] = v.scale(Fraction(r))
        elif symbol == "j" and n >= 1:
            terms[(r, n - 1)] = v.scale(Fraction(n))
    return TruncSeries(max(ts.order - 1, 0), terms)


# ---------------------------------------------------------------------------
# T-exponentials and perturbations


def _const_decoration(labels: Iterable[int], value) -> dict:
    return {l: value for l in labels}


def t_exponential(sys: ProductSystem, s: SigmaSeries, A, order: int) -> TruncSeries:
    """sum_n j^n / n!  eta(s_n (x) A^n), truncated at the given order."""
    if s.max_n < order:
        raise DomainError("series truncation is below the requested order")
    terms: dict[tuple[int, int], WordElem] = {}
    for n in range(order + 1):
        sn = s.term(n)
        if sn.is_zero():
            continue
        dec = _const_decoration(canonical_set(n), A)
        terms[(0, n)] = eval_system(sys, sn, dec).scale(Fraction(1, factorial(n)))
    return TruncSeries(order, terms)


def _universal_coupling(s: SigmaSeries):
    """Extract c from a universal series, validating every degree."""
    c1 = s.term(1).lc.coeff(one_lump((1,)))
    c = c1 if c1 is not None else 0
    for n in range(s.max_n + 1):
        expected = basis_elem(one_lump(canonical_set(n)), H, _power(c, n))
        if s.term(n) != expected and not (s.term(n).is_zero() and expected.is_zero()):
            raise DomainError("perturbation requires the universal series G(c)")
    return c


def perturb_coderivation(
    sys: ProductSystem, s: SigmaSeries, S_dec, A_dec, order: int
) -> TruncSeries:
    """The double series  sum g^r j^n c^(r+n) / (r! n!)  T^r_n(S^r A^n).

    The r adjoined interaction labels extend the single lump, which is the
    up-coderivation perturbation of the one-lump products; the result
    equals the two-argument expansion of the T-exponential at g S + j A.
    """
    c = _universal_coupling(s)
    terms: dict[tuple[int, int], WordElem] = {}
    for r in range(order + 1):
        stars = star_labels(r)
        for n in range(order + 1 - r):
            ground = tuple(sorted(stars + canonical_set(n)))
            dec = {**_const_decoration(stars, S_dec), **_const_decoration(canonical_set(n), A_dec)}
            val = sys.eval_comp(one_lump(ground), dec)
            scal = as_hbar(_power(c, r + n)) * Fraction(1, factorial(r) * factorial(n))
            terms[(r, n)] = val.scale(scal)
    return TruncSeries(order, terms)


def reverse_exponential(sys: ProductSystem, c, S_dec, order: int) -> TruncSeries:
    """S^{-1}(g S): the T-exponential of the antipode-composed universal series."""
    terms: dict[tuple[int, int], WordElem] = {}
    for r in range(order + 1):
        stars = star_labels(r)
        elem = antipode(basis_elem(one_lump(stars), H)) if stars else unit_elem(H)
        dec = _const_decoration(stars, S_dec)
        scal = as_hbar(_power(c, r)) * Fraction(1, factorial(r))
        terms[(r, 0)] = eval_system(sys, elem, dec).scale(scal)
    return TruncSeries(order, terms)


def perturb_arrow(
    sys: ProductSystem,
    S_dec,
    A_dec,
    order: int,
    direction: str = "down",
    c=None,
) -> TruncSeries:
    """sum g^r j^n c^(r+n) / (r! n!)  eta(R_(r;n) (x) S^r A^n)  (or A_(r;n) up).

    c defaults to 1/(i hbar), the coupling of the causal constructions.
    """
    if direction not in ("down", "up"):
        raise DomainError("direction must be 'down' or 'up'")
    if c is None:
        c = C_QFT
    terms: dict[tuple[int, int], WordElem] = {}
    for r in range(order + 1):
        stars = star_labels(r)
        for n in range(order + 1 - r):
            labels = canonical_set(n)
            if n == 0:
                elem = reverse_convolution_element(stars, mirror=(direction == "up"))
            elif direction == "down":
                elem = retarded_element(stars, labels)
            else:
                elem = advanced_element(stars, labels)
            dec = {**_const_decoration(stars, S_dec), **_const_decoration(labels, A_dec)}
            scal = as_hbar(_power(c, r + n)) * Fraction(1, factorial(r) * factorial(n))
            terms[(r, n)] = eval_system(sys, elem, dec).scale(scal)
    return TruncSeries(order, terms)
