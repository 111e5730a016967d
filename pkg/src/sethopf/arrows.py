"""Raising biderivations and the retarded/advanced arrows.

``u_ab`` adjoins one fresh marker label to every lump position of every
term, with weights (-a, a+b, -b) for the three insertion modes; the
retarded arrow is u_{1,0}, the advanced arrow u_{0,1}.  Iterating over a
set of fresh labels is order-independent (a tested property), which is
what makes the arrows an action of the exponential species.

Fresh labels are always chosen by the caller (negative integers by
convention); no operation invents names.
"""

from __future__ import annotations

from typing import Iterable

from .compositions import Composition, labelset, one_lump
from .cells import Cell
from .errors import DomainError
from .hopf import H, SigmaElem, antipode, basis_elem, mu, unit_elem
from .lincomb import LinComb, lincomb_sum
from .scalars import QI, as_qi


def _insertions(F: Composition, star: int, a: QI, b: QI) -> LinComb:
    terms: dict[Composition, QI] = {}

    def put(lumps: tuple, coeff: QI):
        if not coeff:
            return
        K = Composition(lumps)
        c = terms.get(K)
        c = coeff if c is None else c + coeff
        if c:
            terms[K] = c
        else:
            terms.pop(K, None)

    ab = a + b
    for m in range(len(F.lumps)):
        before = F.lumps[:m]
        lump = F.lumps[m]
        after = F.lumps[m + 1 :]
        put(before + ((star,),) + (lump,) + after, -a)
        put(before + (tuple(sorted(lump + (star,))),) + after, ab)
        put(before + (lump,) + ((star,),) + after, -b)
    return LinComb(terms)


def u_ab(a, b, star: int, x: SigmaElem) -> SigmaElem:
    """The biderivation with u(H_(I)) = -a H_(*,I) + (a+b) H_(*I) - b H_(I,*)."""
    a = as_qi(a)
    b = as_qi(b)
    if x.basis != H:
        raise DomainError("u_ab expects an H-basis element")
    if star in x.ground:
        raise DomainError(f"label {star} already occurs in the ground set")
    parts = [_insertions(F, star, a, b).scale(c) for F, c in x.lc]
    return SigmaElem(tuple(sorted(x.ground + (star,))), lincomb_sum(parts), H)


def arrow_down_single(star: int, x: SigmaElem) -> SigmaElem:
    return u_ab(1, 0, star, x)


def arrow_up_single(star: int, x: SigmaElem) -> SigmaElem:
    return u_ab(0, 1, star, x)


def arrow_down(Y: Iterable[int], x: SigmaElem) -> SigmaElem:
    """Iterated retarded arrow over a fresh label set (order-independent)."""
    Y = labelset(Y)
    if set(Y) & set(x.ground):
        raise DomainError("arrow labels must be disjoint from the ground set")
    out = x
    for y in Y:
        out = arrow_down_single(y, out)
    return out


def arrow_up(Y: Iterable[int], x: SigmaElem) -> SigmaElem:
    Y = labelset(Y)
    if set(Y) & set(x.ground):
        raise DomainError("arrow labels must be disjoint from the ground set")
    out = x
    for y in Y:
        out = arrow_up_single(y, out)
    return out


def _lump_elem(labels) -> SigmaElem:
    return basis_elem(one_lump(labels), H) if labels else unit_elem(H)


def _subsets(Y: tuple) -> list[tuple]:
    out = [()]
    for y in Y:
        out += [s + (y,) for s in out]
    return out


def retarded_element(Y: Iterable[int], I: Iterable[int]) -> SigmaElem:
    """R_(Y;I) = sum over splits Y1 | Y2 of Y of  s(H_(Y1)) H_(Y2 u I)."""
    Y = labelset(Y)
    I = labelset(I)
    if set(Y) & set(I):
        raise DomainError("Y and I must be disjoint")
    if not I:
        raise DomainError("retarded elements need a nonempty observable set")
    out = None
    yset = set(Y)
    for Y1 in _subsets(Y):
        Y2 = tuple(sorted(yset - set(Y1)))
        term = mu(antipode(_lump_elem(Y1)), _lump_elem(tuple(sorted(Y2 + I))))
        out = term if out is None else out + term
    return out


def advanced_element(Y: Iterable[int], I: Iterable[int]) -> SigmaElem:
    """A_(Y;I) = sum over splits Y1 | Y2 of Y of  H_(Y1 u I) s(H_(Y2))."""
    Y = labelset(Y)
    I = labelset(I)
    if set(Y) & set(I):
        raise DomainError("Y and I must be disjoint")
    if not I:
        raise DomainError("advanced elements need a nonempty observable set")
    out = None
    yset = set(Y)
    for Y1 in _subsets(Y):
        Y2 = tuple(sorted(yset - set(Y1)))
        term = mu(_lump_elem(tuple(sorted(Y1 + I))), antipode(_lump_elem(Y2)))
        out = term if out is None else out + term
    return out


def reverse_convolution_element(Y: Iterable[int], mirror: bool = False) -> SigmaElem:
    """sum over splits of  s(H_(Y1)) H_(Y2)  (H_(Y1) s(H_(Y2)) when mirrored);
    the unit for Y empty, zero otherwise by the antipode axiom."""
    Y = labelset(Y)
    out = None
    yset = set(Y)
    for Y1 in _subsets(Y):
        Y2 = tuple(sorted(yset - set(Y1)))
        if mirror:
            term = mu(_lump_elem(Y1), antipode(_lump_elem(Y2)))
        else:
            term = mu(antipode(_lump_elem(Y1)), _lump_elem(Y2))
        out = term if out is None else out + term
    return out if out is not None else unit_elem(H)


def _arrow_cell(Y: tuple, c: Cell, down: bool) -> Cell:
    full = tuple(sorted(Y + c.ground))
    I = c.ground
    sides = set()
    channels = list(c.channels())
    if down:
        channels.append((I, ()))
    else:
        channels.append(((), I))
    yset = set(Y)
    for Y1 in _subsets(Y):
        Y2 = tuple(sorted(yset - set(Y1)))
        for S, T in channels:
            U = tuple(sorted(Y1 + S))
            V = tuple(sorted(Y2 + T))
            if U and V:
                sides.add(U)
    return Cell(full, sides)


def arrow_cell_down(Y: Iterable[int], c: Cell) -> Cell:
    """The cell of the arrowed Dynkin element: adds (Y1 u S, Y2 u T) for each
    oriented channel, plus every channel with the old ground on the left."""
    Y = labelset(Y)
    if set(Y) & set(c.ground):
        raise DomainError("arrow labels must be disjoint from the cell ground")
    out = _arrow_cell(Y, c, down=True)
    from .cells import is_cell

    ok, _ = is_cell(out.ground, out.positive)
    if not ok:
        raise RuntimeError("internal invariant violation: arrowed family is not a cell")
    return out


def arrow_cell_up(Y: Iterable[int], c: Cell) -> Cell:
    Y = labelset(Y)
    if set(Y) & set(c.ground):
        raise DomainError("arrow labels must be disjoint from the cell ground")
    out = _arrow_cell(Y, c, down=False)
    from .cells import is_cell

    ok, _ = is_cell(out.ground, out.positive)
    if not ok:
        raise RuntimeError("internal invariant violation: arrowed family is not a cell")
    return out
