"""Exact rational linear programming, sized for cell-feasibility queries.

The only consumer is the chamber machinery: decide whether a family of
subset-sum inequalities  sum_{i in S} x_i > 0  admits a sum-zero rational
solution, and produce a witness when it does.  Strictness is handled by the
bounded-slack trick: maximize the common slack t of the constraints under a
norm bound; the system is strictly feasible iff the optimum is positive.

The sum-zero condition is eliminated by centering: a nonnegative variable
vector x represents the witness x - avg(x), which shrinks the tableau.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

ZERO = Fraction(0)
ONE = Fraction(1)

_BLAND_AFTER = 64  # pivot-rule switch that guarantees termination


def simplex_max(
    c: Sequence[Fraction], A: Sequence[Sequence[Fraction]], b: Sequence[Fraction]
) -> tuple[Fraction, list[Fraction]]:
    """Maximize c.x subject to A x <= b, x >= 0, where b >= 0.

    Primal simplex from the slack basis; largest-coefficient pivoting with a
    switch to Bland's rule to rule out cycling.  Returns (value, argmax).
    Raises on an unbounded program.
    """
    m = len(A)
    n = len(c)
    tab = [[Fraction(A[i][j]) for j in range(n)]
           + [ONE if k == i else ZERO for k in range(m)]
           + [Fraction(b[i])]
           for i in range(m)]
    obj = [Fraction(-c[j]) for j in range(n)] + [ZERO] * (m + 1)
    basis = [n + i for i in range(m)]

    iteration = 0
    while True:
        iteration += 1
        enter = -1
        if iteration <= _BLAND_AFTER:
            best_c = ZERO
            for j in range(n + m):
                if obj[j] < best_c:
                    best_c = obj[j]
                    enter = j
        else:
            for j in range(n + m):
                if obj[j] < 0:
                    enter = j
                    break
        if enter < 0:
            break
        leave = -1
        best = None
        for i in range(m):
            a = tab[i][enter]
            if a > 0:
                ratio = tab[i][-1] / a
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best = ratio
                    leave = i
        if leave < 0:
            raise ArithmeticError("unbounded linear program")
        piv = tab[leave][enter]
        prow = tab[leave]
        if piv != 1:
            prow = [x / piv for x in prow]
            tab[leave] = prow
        for i in range(m):
            if i != leave:
                f = tab[i][enter]
                if f:
                    row = tab[i]
                    tab[i] = [x - f * y for x, y in zip(row, prow)]
        f = obj[enter]
        if f:
            obj = [x - f * y for x, y in zip(obj, prow)]
        basis[leave] = enter

    x = [ZERO] * n
    for i, bv in enumerate(basis):
        if bv < n:
            x[bv] = tab[i][-1]
    value = sum(ci * xi for ci, xi in zip(c, x))
    return value, x


def strict_positive_witness(
    ground: Sequence[int], sides: Sequence[Sequence[int]]
) -> dict[int, Fraction] | None:
    """A rational x with sum(x) = 0 and x(S) > 0 for every S, or None.

    Encodes the witness as y - avg(y) for y >= 0 with sum(y) <= |ground|,
    then maximizes the common slack t of the constraints.
    """
    labels = list(ground)
    n = len(labels)
    pos = {l: i for i, l in enumerate(labels)}
    nvars = n + 1  # y_0..y_{n-1}, t
    c = [ZERO] * n + [ONE]

    A: list[list[Fraction]] = []
    b: list[Fraction] = []
    for S in sides:
        # t + (|S|/n) sum(y) - y(S) <= 0
        w = Fraction(len(S), n)
        row = [w] * n + [ONE]
        for l in S:
            row[pos[l]] -= 1
        A.append(row)
        b.append(ZERO)
    A.append([ONE] * n + [ZERO])  # sum(y) <= n
    b.append(Fraction(n))

    value, x = simplex_max(c, A, b)
    if value <= 0:
        return None
    avg = sum(x[:n], ZERO) / n
    return {l: x[pos[l]] - avg for l in labels}


def balanced_combination_exists(
    ground: Sequence[int], sides: Sequence[Sequence[int]]
) -> bool:
    """Whether some convex combination of the side indicators is constant.

    By Gordan's alternative on the sum-zero subspace this holds iff the
    strict system x(S) > 0, sum(x) = 0 is infeasible, so it is the exact
    complement of strict feasibility, decided on a smaller tableau (rows
    scale with the ground, not with the number of sides).
    """
    labels = list(ground)
    n = len(labels)
    pos = {l: i for i, l in enumerate(labels)}
    k = len(sides)
    nvars = k + 1  # w_0..w_{k-1}, c
    obj = [ZERO] * k + [ONE]
    A: list[list[Fraction]] = []
    b: list[Fraction] = []
    for i in range(n):
        # sum_A w_A 1_A(i) - c = 0, encoded as two <= 0 rows
        row = [ONE if labels[i] in set(S) else ZERO for S in sides] + [-ONE]
        A.append(row)
        b.append(ZERO)
        A.append([-x for x in row])
        b.append(ZERO)
    A.append([ONE] * k + [ZERO])  # sum w <= 1
    b.append(ONE)
    value, _ = simplex_max(obj, A, b)
    return value > 0


def transfer_witness_across(
    ground: Sequence[int],
    sides: Sequence[Sequence[int]],
    witness: dict[int, Fraction],
    new_side: Sequence[int],
) -> dict[int, Fraction] | None:
    """Try to move a strict witness to the other side of the new hyperplane.

    Walks from the witness along the (centered) indicator of the new side;
    if the segment leaves the new side's halfspace before violating any
    prior side, the midpoint past the crossing is a valid witness for the
    flipped orientation.  Cheap, exact and sound (the result is fully
    re-checked); returns None when the straight walk fails.
    """
    n = len(ground)
    size = len(new_side)
    new_set = set(new_side)
    w = {l: (Fraction(n - size, n) if l in new_set else Fraction(-size, n)) for l in ground}
    val_new = sum(witness[l] for l in new_side)
    w_new = sum(w[l] for l in new_side)  # = size (n - size) / n > 0
    t_flip = val_new / w_new
    t_max = None
    for S in sides:
        wS = sum(w[l] for l in S)
        if wS > 0:
            bound = sum(witness[l] for l in S) / wS
            if t_max is None or bound < t_max:
                t_max = bound
    if t_max is not None and t_max <= t_flip:
        return None
    t = t_flip * 2 if t_max is None else (t_flip + t_max) / 2
    candidate = {l: witness[l] - t * w[l] for l in ground}
    if sum(candidate.values()) != 0:
        return None
    if sum(candidate[l] for l in new_side) >= 0:
        return None
    for S in sides:
        if sum(candidate[l] for l in S) <= 0:
            return None
    return candidate


def partition_infeasible(
    ground_size: int, side_sets: Sequence[frozenset], new_side: frozenset
) -> bool:
    """Cheap sufficient test: the new side plus one or two already-chosen
    disjoint sides partitioning the ground forces the sum of strictly
    positive quantities to be zero."""
    rest = ground_size - len(new_side)
    if rest == 0:
        return False
    for A in side_sets:
        if len(A) == rest and not (A & new_side):
            # does A equal the complement?  sizes and disjointness suffice
            return True
        if len(A) < rest and not (A & new_side):
            need = rest - len(A)
            for B in side_sets:
                if len(B) == need and not (B & new_side) and not (B & A):
                    return True
    return False
