"""The Hopf monoid of set compositions, in its H- and Q-bases.

Elements are exact linear combinations of compositions of a fixed ground
set, tagged with the basis they are expressed in.  Multiplication is the
linearization of concatenation, comultiplication the linearization of
restriction (deshuffling in the Q-basis), and the antipode has the closed
form  s(H_F) = sum over refinements G of the reversed composition of
(-1)^(number of lumps of G) H_G,  cross-checked against Takeuchi's
alternating-sum formula.

Mixed-basis arithmetic is rejected rather than silently converted.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .compositions import (
    Composition,
    EMPTY_COMPOSITION,
    canonical_set,
    compositions_of,
    concat,
    deshuffle,
    labelset,
    opposite,
    proper_splits,
    quotient_stats,
    refinements,
    restrict,
)
from .errors import DomainError, SizeLimitError
from .lincomb import LinComb, lincomb_sum
from .linalg import kernel_basis
from .scalars import QI_ONE, QI_ZERO

H = "H"
Q = "Q"

PRIMITIVE_PART_BOUND = 5


@lru_cache(maxsize=None)
def _restrict_cached(F: Composition, S: tuple) -> Composition:
    return restrict(F, S)


class SigmaElem:
    """An element of the composition Hopf algebra over a fixed ground set."""

    __slots__ = ("ground", "basis", "lc")

    def __init__(self, ground: Iterable[int], lc: LinComb, basis: str = H):
        ground = labelset(ground)
        if basis not in (H, Q):
            raise DomainError(f"unknown basis tag {basis!r}")
        for F, _ in lc:
            if F.ground != ground:
                raise DomainError(f"term {F} does not live over ground {ground}")
        object.__setattr__(self, "ground", ground)
        object.__setattr__(self, "basis", basis)
        object.__setattr__(self, "lc", lc)

    def __setattr__(self, *a):
        raise AttributeError("SigmaElem is immutable")

    def is_zero(self) -> bool:
        return self.lc.is_zero()

    def __eq__(self, other):
        return (
            isinstance(other, SigmaElem)
            and self.ground == other.ground
            and self.basis == other.basis
            and self.lc == other.lc
        )

    def __hash__(self):
        raise TypeError("SigmaElem is not hashable")

    def __add__(self, other: "SigmaElem") -> "SigmaElem":
        self._check_compatible(other)
        return SigmaElem(self.ground, self.lc + other.lc, self.basis)

    def __sub__(self, other: "SigmaElem") -> "SigmaElem":
        self._check_compatible(other)
        return SigmaElem(self.ground, self.lc - other.lc, self.basis)

    def __neg__(self):
        return SigmaElem(self.ground, -self.lc, self.basis)

    def scale(self, c) -> "SigmaElem":
        return SigmaElem(self.ground, self.lc.scale(c), self.basis)

    def _check_compatible(self, other: "SigmaElem"):
        if not isinstance(other, SigmaElem):
            raise DomainError("expected a SigmaElem")
        if self.ground != other.ground:
            raise DomainError("ground sets differ")
        if self.basis != other.basis:
            raise DomainError("mixed-basis arithmetic is not allowed; convert first")

    def __repr__(self):
        if self.lc.is_zero():
            return f"0[{self.basis};{self.ground}]"
        bits = []
        for F, c in self.lc.items_sorted():
            bits.append(f"({c})*{self.basis}{F}")
        return " + ".join(bits)


def basis_elem(F: Composition, basis: str = H, coeff=QI_ONE) -> SigmaElem:
    return SigmaElem(F.ground, LinComb.single(F, coeff), basis)


def h_elem(*lumps) -> SigmaElem:
    return basis_elem(Composition(lumps), H)


def q_elem(*lumps) -> SigmaElem:
    return basis_elem(Composition(lumps), Q)


def zero_elem(ground: Iterable[int], basis: str = H) -> SigmaElem:
    return SigmaElem(ground, LinComb.zero(), basis)


def unit_elem(basis: str = H) -> SigmaElem:
    return basis_elem(EMPTY_COMPOSITION, basis)


def sigma_basis(I: Iterable[int], basis: str = H) -> list[SigmaElem]:
    return [basis_elem(F, basis) for F in compositions_of(I)]


def relabel(a: SigmaElem, mapping: dict[int, int]) -> SigmaElem:
    """Push a along a label bijection (applied lump-wise to every term)."""
    if set(mapping.keys()) != set(a.ground):
        raise DomainError("relabel mapping must be defined exactly on the ground set")
    if len(set(mapping.values())) != len(mapping):
        raise DomainError("relabel mapping must be injective")

    def move(F: Composition) -> Composition:
        return Composition(tuple(tuple(sorted(mapping[x] for x in l)) for l in F.lumps))

    return SigmaElem(sorted(mapping.values()), a.lc.map_keys(move), a.basis)


def mu(a: SigmaElem, b: SigmaElem) -> SigmaElem:
    """Bilinear concatenation product; the same rule serves both bases."""
    if set(a.ground) & set(b.ground):
        raise DomainError("mu requires disjoint ground sets")
    if a.basis != b.basis:
        raise DomainError("mixed-basis mu; convert first")
    terms = {}
    for F, cf in a.lc:
        for G, cg in b.lc:
            K = concat(F, G)
            c = cf * cg
            if K in terms:
                c = terms[K] + c
            if c:
                terms[K] = c
            else:
                terms.pop(K, None)
    return SigmaElem(a.ground + b.ground, LinComb(terms, _trusted=True), a.basis)


def mu_many(parts: Sequence[SigmaElem]) -> SigmaElem:
    out = unit_elem(parts[0].basis if parts else H)
    for p in parts:
        out = mu(out, p)
    return out


def delta_split(a: SigmaElem, S: Iterable[int], T: Iterable[int]) -> LinComb:
    """Delta_{S,T}(a) as a LinComb over pairs (left composition, right composition)."""
    S = labelset(S)
    T = labelset(T)
    if tuple(sorted(S + T)) != a.ground or set(S) & set(T):
        raise DomainError("(S, T) must be an ordered disjoint decomposition of the ground set")
    terms = {}
    for F, c in a.lc:
        if a.basis == H:
            key = (_restrict_cached(F, S), _restrict_cached(F, T))
        else:
            left = deshuffle(F, S)
            right = deshuffle(F, T)
            if left is None or right is None:
                continue
            key = (left, right)
        if key in terms:
            w = terms[key] + c
            if w:
                terms[key] = w
            else:
                del terms[key]
        else:
            terms[key] = c
    return LinComb(terms, _trusted=True)


def delta(S: Iterable[int], T: Iterable[int], a: SigmaElem) -> list[tuple[SigmaElem, SigmaElem]]:
    """Delta_{S,T}(a) as an explicit finite sum of pure tensors."""
    S = labelset(S)
    T = labelset(T)
    pairs = delta_split(a, S, T)
    out = []
    for (L, R), c in pairs.items_sorted():
        out.append((basis_elem(L, a.basis, c), basis_elem(R, a.basis)))
    return out


def delta_iterated(a: SigmaElem, parts: Sequence[Iterable[int]]) -> LinComb:
    """Iterated comultiplication along an ordered decomposition of the ground.

    Returns a LinComb over tuples of compositions, one entry per part.  For
    the H-basis this is simultaneous restriction; for the Q-basis iterated
    deshuffling.
    """
    parts = [labelset(P) for P in parts]
    flat = sorted(x for P in parts for x in P)
    if tuple(flat) != a.ground or len(set(flat)) != len(flat):
        raise DomainError("parts must decompose the ground set")
    terms = {}
    for F, c in a.lc:
        if a.basis == H:
            key = tuple(_restrict_cached(F, P) for P in parts)
        else:
            factors = []
            ok = True
            for P in parts:
                piece = deshuffle(F, P)
                if piece is None:
                    ok = False
                    break
                factors.append(piece)
            if not ok:
                continue
            key = tuple(factors)
        if key in terms:
            w = terms[key] + c
            if w:
                terms[key] = w
            else:
                del terms[key]
        else:
            terms[key] = c
    return LinComb(terms, _trusted=True)


def counit(a: SigmaElem):
    """The counit: the coefficient of the empty composition on the empty ground."""
    if a.ground:
        return QI_ZERO
    c = a.lc.coeff(EMPTY_COMPOSITION)
    return c if c is not None else QI_ZERO


@lru_cache(maxsize=None)
def _antipode_of_comp(F: Composition) -> LinComb:
    rev = opposite(F)
    terms = {}
    for G in refinements(rev):
        sign = QI_ONE if len(G) % 2 == 0 else -QI_ONE
        terms[G] = sign
    return LinComb(terms, _trusted=True)


def antipode(a: SigmaElem) -> SigmaElem:
    """Closed-form antipode on the H-basis."""
    if a.basis != H:
        raise DomainError("antipode expects the H-basis; convert first")
    parts = [_antipode_of_comp(F).scale(c) for F, c in a.lc]
    return SigmaElem(a.ground, lincomb_sum(parts), H)


def takeuchi_antipode(a: SigmaElem) -> SigmaElem:
    """Antipode via the alternating sum over all Hopf-power composites."""
    if a.basis != H:
        raise DomainError("takeuchi_antipode expects the H-basis; convert first")
    if not a.ground:
        return a
    terms: dict[Composition, object] = {}
    for F in compositions_of(a.ground):
        sign = QI_ONE if len(F) % 2 == 0 else -QI_ONE
        pieces = delta_iterated(a, F.lumps)
        for key, c in pieces:
            K = Composition(tuple(l for piece in key for l in piece.lumps))
            w = terms.get(K, QI_ZERO) + sign * c
            if w:
                terms[K] = w
            else:
                terms.pop(K, None)
    return SigmaElem(a.ground, LinComb(terms), H)


@lru_cache(maxsize=None)
def _h_in_q(F: Composition) -> LinComb:
    terms = {}
    for G in refinements(F):
        _, fact = quotient_stats(G, F)
        terms[G] = QI_ONE * Fraction(1, fact)
    return LinComb(terms, _trusted=True)


@lru_cache(maxsize=None)
def _q_in_h(F: Composition) -> LinComb:
    terms = {}
    for G in refinements(F):
        length, _ = quotient_stats(G, F)
        sign = QI_ONE if (len(G) - len(F)) % 2 == 0 else -QI_ONE
        terms[G] = sign * Fraction(1, length)
    return LinComb(terms, _trusted=True)


def to_q(a: SigmaElem) -> SigmaElem:
    """Express a in the Q-basis (identity if already there)."""
    if a.basis == Q:
        return a
    parts = [_h_in_q(F).scale(c) for F, c in a.lc]
    return SigmaElem(a.ground, lincomb_sum(parts), Q)


def to_h(a: SigmaElem) -> SigmaElem:
    """Express a in the H-basis (identity if already there)."""
    if a.basis == H:
        return a
    parts = [_q_in_h(F).scale(c) for F, c in a.lc]
    return SigmaElem(a.ground, lincomb_sum(parts), H)


def is_primitive(a: SigmaElem) -> bool:
    """True iff every proper comultiplication split kills a."""
    for S, T in proper_splits(a.ground):
        if not delta_split(a, S, T).is_zero():
            return False
    return True


def primitive_part_basis(n: int, bound: int = PRIMITIVE_PART_BOUND) -> list[SigmaElem]:
    """Exact basis of the intersection of the kernels of all proper splits."""
    if n > bound:
        raise SizeLimitError(f"n = {n} exceeds primitive-part bound {bound}")
    ground = canonical_set(n)
    domain = list(compositions_of(ground))
    splits = list(proper_splits(ground))
    mapping = []
    for F in domain:
        img = {}
        for S, T in splits:
            img[((S, T), restrict(F, S), restrict(F, T))] = QI_ONE
        mapping.append((F, LinComb(img, _trusted=True)))
    vectors = kernel_basis(mapping, domain)
    return [SigmaElem(ground, v, H) for v in vectors]


class DecoratedElem:
    """A composition-algebra element tensored with one decoration per label."""

    __slots__ = ("elem", "decoration")

    def __init__(self, elem: SigmaElem, decoration: dict):
        if set(decoration.keys()) != set(elem.ground):
            raise DomainError("decoration must assign exactly the ground labels")
        object.__setattr__(self, "elem", elem)
        object.__setattr__(self, "decoration", dict(decoration))

    def __setattr__(self, *a):
        raise AttributeError("DecoratedElem is immutable")

    def __eq__(self, other):
        return (
            isinstance(other, DecoratedElem)
            and self.elem == other.elem
            and self.decoration == other.decoration
        )

    def __repr__(self):
        return f"{self.elem} (x) {self.decoration}"


def decorated_mu(x: DecoratedElem, y: DecoratedElem) -> DecoratedElem:
    overlap = set(x.decoration) & set(y.decoration)
    if overlap:
        raise DomainError(f"decoration collision on labels {sorted(overlap)}")
    return DecoratedElem(mu(x.elem, y.elem), {**x.decoration, **y.decoration})


def decorated_delta(
    x: DecoratedElem, S: Iterable[int], T: Iterable[int]
) -> list[tuple[DecoratedElem, DecoratedElem]]:
    S = labelset(S)
    T = labelset(T)
    dec_s = {i: x.decoration[i] for i in S}
    dec_t = {i: x.decoration[i] for i in T}
    return [
        (DecoratedElem(left, dec_s), DecoratedElem(right, dec_t))
        for left, right in delta(S, T, x.elem)
    ]


def decorated_antipode(x: DecoratedElem) -> DecoratedElem:
    return DecoratedElem(antipode(x.elem), x.decoration)
