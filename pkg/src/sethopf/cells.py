"""Cells of the adjoint braid arrangement, Dynkin elements, and the
Steinmann/Ruelle/GLZ identities of the primitive-part Lie algebra.

A cell over I orients every two-lump channel (S, I\\S) so that the chosen
positive sides are simultaneously realizable by a sum-zero rational vector
(a maximal unbalanced family).  Realizability is decided by exact linear
programming; enumeration inserts one channel hyperplane at a time and
prunes infeasible sign prefixes, which is what makes n = 6 reachable.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from .compositions import (
    Composition,
    LabelSet,
    canonical_set,
    compositions_of,
    labelset,
    opposite,
    proper_splits,
    restrict,
    set_partitions,
    two_lump_coarsenings,
    zie_dimension,
)
from .errors import DomainError, SizeLimitError
from .hopf import (
    H,
    Q,
    SigmaElem,
    basis_elem,
    is_primitive,
    mu,
    primitive_part_basis,
    to_h,
)
from .lincomb import LinComb
from .linalg import integer_rows, rank, rank_mod_prime
from .lp import (
    balanced_combination_exists,
    partition_infeasible,
    strict_positive_witness,
    transfer_witness_across,
)
from .scalars import QI, QI_ONE
from .hadamard import tits, tits_unit

CELL_ENUM_BOUND = 6
DYNKIN_RANK_BOUND = 5
PRIMITIVE_CHECK_BOUND = 4


# ---------------------------------------------------------------------------
# cells


class Cell:
    """An orientation of all two-lump channels over a ground set."""

    __slots__ = ("ground", "positive")

    def __init__(self, ground: Iterable[int], positive: Iterable[Iterable[int]]):
        ground = labelset(ground)
        pos = frozenset(labelset(S) for S in positive)
        gset = set(ground)
        seen = set()
        for S in pos:
            if not S or not set(S) < gset:
                raise DomainError(f"{S} is not a proper nonempty subset of the ground")
            comp = tuple(sorted(gset - set(S)))
            if comp in pos:
                raise DomainError(f"both orientations of channel {S} present")
            seen.add(frozenset(S))
            seen.add(frozenset(comp))
        expected = 2 ** len(ground) - 2 if len(ground) >= 1 else 0
        if len(seen) != expected:
            raise DomainError("family does not orient every complementary pair")
        object.__setattr__(self, "ground", ground)
        object.__setattr__(self, "positive", pos)

    def __setattr__(self, *a):
        raise AttributeError("Cell is immutable")

    def channels(self) -> Iterator[tuple[LabelSet, LabelSet]]:
        gset = set(self.ground)
        for S in sorted(self.positive):
            yield S, tuple(sorted(gset - set(S)))

    def contains(self, S: Iterable[int]) -> bool:
        return labelset(S) in self.positive

    def flip(self, S: Iterable[int]) -> "Cell":
        """The family with the channel of S reoriented (may or may not be a cell)."""
        S = labelset(S)
        comp = tuple(sorted(set(self.ground) - set(S)))
        if S in self.positive:
            return Cell(self.ground, (self.positive - {S}) | {comp})
        if comp in self.positive:
            return Cell(self.ground, (self.positive - {comp}) | {S})
        raise DomainError(f"{S} is not a channel side of this ground set")

    def sort_key(self):
        return (self.ground, tuple(sorted(self.positive)))

    def __eq__(self, other):
        return (
            isinstance(other, Cell)
            and self.ground == other.ground
            and self.positive == other.positive
        )

    def __hash__(self):
        return hash((self.ground, self.positive))

    def __repr__(self):
        def fmt(labels):
            if all(1 <= x <= 9 for x in labels):
                return "".join(map(str, labels))
            return "{" + " ".join(map(str, labels)) + "}"

        sides = ",".join(fmt(S) for S in sorted(self.positive))
        return f"Cell[{fmt(self.ground)}:{sides}]"


def channel_representatives(ground: LabelSet) -> list[LabelSet]:
    """One canonical side per complementary pair: the side missing max(ground)."""
    ground = labelset(ground)
    if len(ground) < 2:
        return []
    top = ground[-1]
    rest = [x for x in ground if x != top]
    reps = []
    for r in range(1, len(rest) + 1):
        for S in itertools.combinations(rest, r):
            reps.append(tuple(S))
    reps.sort(key=lambda S: (len(S), S))
    return reps


def is_cell(
    ground: Iterable[int], positive: Iterable[Iterable[int]]
) -> tuple[bool, dict[int, Fraction] | None]:
    """Decide realizability of an oriented family; returns (flag, witness)."""
    family = Cell(ground, positive)  # validates the pair structure
    if len(family.ground) < 2:
        return True, {l: Fraction(0) for l in family.ground}
    witness = strict_positive_witness(family.ground, sorted(family.positive))
    return (witness is not None), witness


@lru_cache(maxsize=None)
def _enumerate_cells_cached(ground: LabelSet) -> tuple[tuple[Cell, dict], ...]:
    reps = channel_representatives(ground)
    gset = set(ground)
    if not reps:
        return ((Cell(ground, ()), {l: Fraction(0) for l in ground}),)

    # states: (oriented sides chosen so far, their frozensets, rational witness)
    states: list[tuple[list[LabelSet], list[frozenset], dict[int, Fraction]]] = [
        ([], [], {l: Fraction(0) for l in ground})
    ]
    n = len(ground)
    for S in reps:
        comp = tuple(sorted(gset - set(S)))
        nxt: list[tuple[list[LabelSet], list[frozenset], dict[int, Fraction]]] = []
        for sides, fsets, wit in states:
            val = sum((wit[x] for x in S), Fraction(0))
            kept, other = (S, comp) if val > 0 else (comp, S)
            if val == 0:
                # witness sits on the new hyperplane: the chamber is split or
                # lies on one side; find a strict witness for some side
                w0 = strict_positive_witness(ground, sides + [kept])
                if w0 is None:
                    kept, other = other, kept
                    w0 = strict_positive_witness(ground, sides + [kept])
                    if w0 is None:
                        raise ArithmeticError("chamber lost both sides of a hyperplane")
                wit = w0
            nxt.append((sides + [kept], fsets + [frozenset(kept)], wit))
            # the opposite side needs its own proof or refutation
            if partition_infeasible(n, fsets, frozenset(other)):
                continue
            moved = transfer_witness_across(ground, sides, wit, kept)
            if moved is None:
                if balanced_combination_exists(ground, sides + [other]):
                    continue
                moved = strict_positive_witness(ground, sides + [other])
                if moved is None:
                    raise ArithmeticError("LP and duality test disagree on feasibility")
            nxt.append((sides + [other], fsets + [frozenset(other)], moved))
        states = nxt
    out = [(Cell(ground, sides), wit) for sides, _, wit in states]
    out.sort(key=lambda cw: cw[0].sort_key())
    return tuple(out)


def enumerate_cells(I: Iterable[int], bound: int = CELL_ENUM_BOUND) -> list[Cell]:
    """All cells over I, deterministically ordered."""
    ground = labelset(I)
    if len(ground) > bound:
        raise SizeLimitError(f"|I| = {len(ground)} exceeds cell enumeration bound {bound}")
    return [c for c, _ in _enumerate_cells_cached(ground)]


def enumerate_cells_with_witnesses(
    I: Iterable[int], bound: int = CELL_ENUM_BOUND
) -> list[tuple[Cell, dict[int, Fraction]]]:
    ground = labelset(I)
    if len(ground) > bound:
        raise SizeLimitError(f"|I| = {len(ground)} exceeds cell enumeration bound {bound}")
    # witnesses are copied so callers cannot corrupt the cache
    return [(c, dict(w)) for c, w in _enumerate_cells_cached(ground)]


# ---------------------------------------------------------------------------
# Dynkin elements


def dynkin(cell: Cell) -> SigmaElem:
    """- sum over compositions F whose reversed two-lump coarsenings lie in
    the cell of (-1)^(number of lumps) H_F."""
    terms: dict[Composition, QI] = {}
    for F in compositions_of(cell.ground):
        rev = opposite(F)
        if all(S in cell.positive for S, _ in two_lump_coarsenings(rev)):
            terms[F] = -QI_ONE if len(F) % 2 == 0 else QI_ONE
    return SigmaElem(cell.ground, LinComb(terms), H)


def dynkin_tits_factorization(cell: Cell) -> SigmaElem:
    """The same element as the Tits product of the factors H_(I) - H_(T,S)."""
    ground = cell.ground
    out = tits_unit(ground)
    for S, T in cell.channels():
        factor = tits_unit(ground) - basis_elem(Composition((T, S)), H)
        out = tits(out, factor)
    return out


def total_retarded_cell(I: Iterable[int], i: int) -> Cell:
    """The cell whose positive sides are exactly the subsets containing i."""
    ground = labelset(I)
    if i not in ground:
        raise DomainError(f"label {i} not in ground set")
    rest = [x for x in ground if x != i]
    sides = []
    for r in range(len(rest)):
        for extra in itertools.combinations(rest, r):
            side = tuple(sorted((i,) + extra))
            if len(side) < len(ground):
                sides.append(side)
    return Cell(ground, sides)


def total_advanced_cell(I: Iterable[int], i: int) -> Cell:
    ground = labelset(I)
    cell = total_retarded_cell(ground, i)
    gset = set(ground)
    return Cell(ground, [tuple(sorted(gset - set(S))) for S in cell.positive])


def total_retarded_dynkin(I: Iterable[int], i: int) -> SigmaElem:
    return dynkin(total_retarded_cell(I, i))


def total_advanced_dynkin(I: Iterable[int], i: int) -> SigmaElem:
    return dynkin(total_advanced_cell(I, i))


# ---------------------------------------------------------------------------
# Steinmann relations


def _crossing_channel_pairs(ground: LabelSet) -> list[tuple[LabelSet, LabelSet]]:
    """Unordered pairs of channels whose four mutual intersections are nonempty."""
    reps = channel_representatives(ground)
    gset = set(ground)
    out = []
    for a_idx in range(len(reps)):
        for b_idx in range(a_idx + 1, len(reps)):
            A = set(reps[a_idx])
            B = set(reps[b_idx])
            if A & B and A - B and B - A and gset - (A | B):
                out.append((reps[a_idx], reps[b_idx]))
    return out


def steinmann_quadruples(
    I: Iterable[int], bound: int = CELL_ENUM_BOUND
) -> list[tuple[Cell, Cell, Cell, Cell]]:
    """All quadruples of genuine cells differing only in the four orientation
    patterns of one fixed pair of overlapping channels."""
    ground = labelset(I)
    cells = enumerate_cells(ground, bound)
    present = {c.positive for c in cells}
    gset = set(ground)
    quads = []
    for A, B in _crossing_channel_pairs(ground):
        Ac = tuple(sorted(gset - set(A)))
        Bc = tuple(sorted(gset - set(B)))
        for c in cells:
            if A not in c.positive or B not in c.positive:
                continue
            rest = c.positive - {A, B}
            s1 = rest | {A, B}
            s2 = rest | {Ac, B}
            s3 = rest | {Ac, Bc}
            s4 = rest | {A, Bc}
            if all(s in present for s in (s2, s3, s4)):
                quads.append(
                    (
                        Cell(ground, s1),
                        Cell(ground, s2),
                        Cell(ground, s3),
                        Cell(ground, s4),
                    )
                )
    quads.sort(key=lambda q: tuple(c.sort_key() for c in q))
    return quads


def steinmann_relation_holds(quad: Sequence[Cell]) -> bool:
    s1, s2, s3, s4 = quad
    total = dynkin(s1) - dynkin(s2) + dynkin(s3) - dynkin(s4)
    return total.is_zero()


def steinmann_relation_vectors(I: Iterable[int], bound: int = CELL_ENUM_BOUND) -> list[LinComb]:
    """The alternating-sum vectors e1 - e2 + e3 - e4 in the span of cells."""
    out = []
    for s1, s2, s3, s4 in steinmann_quadruples(I, bound):
        vec = (
            LinComb.single(s1, QI_ONE)
            + LinComb.single(s2, -QI_ONE)
            + LinComb.single(s3, QI_ONE)
            + LinComb.single(s4, -QI_ONE)
        )
        out.append(vec)
    return out


# ---------------------------------------------------------------------------
# trees and the embedding of the free Lie structure


class Tree:
    """A full binary tree whose leaves are disjoint nonempty label blocks."""

    __slots__ = ("block", "left", "right", "ground")

    def __init__(self, block=None, left=None, right=None):
        if block is not None:
            block = labelset(block)
            if not block:
                raise DomainError("tree leaves must be nonempty")
            object.__setattr__(self, "block", block)
            object.__setattr__(self, "left", None)
            object.__setattr__(self, "right", None)
            object.__setattr__(self, "ground", block)
            return
        if not isinstance(left, Tree) or not isinstance(right, Tree):
            raise DomainError("internal tree nodes need two subtrees")
        if set(left.ground) & set(right.ground):
            raise DomainError("tree subtrees must have disjoint grounds")
        object.__setattr__(self, "block", None)
        object.__setattr__(self, "left", left)
        object.__setattr__(self, "right", right)
        object.__setattr__(self, "ground", tuple(sorted(left.ground + right.ground)))

    def __setattr__(self, *a):
        raise AttributeError("Tree is immutable")

    def is_leaf(self) -> bool:
        return self.block is not None

    def __repr__(self):
        if self.is_leaf():
            return "".join(map(str, self.block))
        return f"[{self.left!r},{self.right!r}]"


def leaf(labels: Iterable[int]) -> Tree:
    return Tree(block=labels)


def node(left: Tree, right: Tree) -> Tree:
    return Tree(left=left, right=right)


def debracketing(t: Tree) -> Composition:
    lumps: list[LabelSet] = []

    def walk(s: Tree):
        if s.is_leaf():
            lumps.append(s.block)
        else:
            walk(s.left)
            walk(s.right)

    walk(t)
    return Composition(tuple(lumps))


def _signed_debracketings(t: Tree) -> list[tuple[tuple, int]]:
    if t.is_leaf():
        return [((t.block,), 1)]
    out = []
    for la, sa in _signed_debracketings(t.left):
        for lb, sb in _signed_debracketings(t.right):
            out.append((la + lb, sa * sb))
            out.append((lb + la, -sa * sb))
    return out


def tree_to_primitive(t: Tree) -> SigmaElem:
    """The alternating sum over node flips, in the Q-basis."""
    terms: dict[Composition, QI] = {}
    for lumps, sign in _signed_debracketings(t):
        K = Composition(lumps)
        c = terms.get(K)
        s = QI_ONE if sign > 0 else -QI_ONE
        c = s if c is None else c + s
        if c:
            terms[K] = c
        else:
            terms.pop(K, None)
    return SigmaElem(t.ground, LinComb(terms), Q)


def commutator(a: SigmaElem, b: SigmaElem) -> SigmaElem:
    """The species commutator mu(a (x) b) - mu(b (x) a) over disjoint grounds."""
    return mu(a, b) - mu(b, a)


# ---------------------------------------------------------------------------
# Ruelle's identity


def is_ruelle_bridge(cell1: Cell, cell2: Cell, bridge: Cell) -> bool:
    """Whether bridge sits over the face spanned by cell1 and cell2, on the
    (S, T) side of the separating hyperplane."""
    S, T = cell1.ground, cell2.ground
    if set(S) & set(T):
        raise DomainError("cell grounds must be disjoint")
    if bridge.ground != tuple(sorted(S + T)):
        raise DomainError("bridge ground must be the union of the cell grounds")
    if S not in bridge.positive:
        return False
    Sset, Tset = set(S), set(T)
    for U in bridge.positive:
        Uset = set(U)
        if Uset == Sset:
            continue
        A = tuple(sorted(Uset & Sset))
        C = tuple(sorted(Uset & Tset))
        if A and set(A) != Sset and A not in cell1.positive:
            return False
        if C and set(C) != Tset and C not in cell2.positive:
            return False
    return True


def ruelle_check(cell1: Cell, cell2: Cell, bridge: Cell) -> bool:
    """[D_cell1, D_cell2] = D_bridge - D_(bridge with (S,T) flipped)."""
    S = cell1.ground
    if not is_ruelle_bridge(cell1, cell2, bridge):
        raise DomainError("bridge does not dominate the pair of cells on the (S,T) side")
    flipped = bridge.flip(S)
    ok, _ = is_cell(flipped.ground, flipped.positive)
    if not ok:
        raise DomainError("flipped bridge family is not realizable")
    lhs = commutator(dynkin(cell1), dynkin(cell2))
    rhs = dynkin(bridge) - dynkin(flipped)
    return lhs == rhs


def ruelle_configurations(
    I: Iterable[int], bound: int = CELL_ENUM_BOUND
) -> Iterator[tuple[Cell, Cell, Cell]]:
    """All (cell1, cell2, bridge) triples satisfying the bridge condition."""
    ground = labelset(I)
    all_cells = enumerate_cells(ground, bound)
    for S, T in proper_splits(ground):
        cells_s = enumerate_cells(S, bound)
        cells_t = enumerate_cells(T, bound)
        for c1 in cells_s:
            for c2 in cells_t:
                for bridge in all_cells:
                    if is_ruelle_bridge(c1, c2, bridge):
                        yield c1, c2, bridge


# ---------------------------------------------------------------------------
# GLZ relation


def glz_check(I: Iterable[int], i1: int, i2: int) -> bool:
    """D_{i1} - D_{i2} = sum over (S,T) with i1 in S, i2 in T of the species
    commutators of the lump-internal total Dynkin elements."""
    ground = labelset(I)
    if i1 not in ground or i2 not in ground or i1 == i2:
        raise DomainError("need two distinct labels inside the ground set")
    lhs = total_retarded_dynkin(ground, i1) - total_retarded_dynkin(ground, i2)
    rhs = None
    for S, T in proper_splits(ground):
        if i1 in S and i2 in T:
            term = commutator(total_retarded_dynkin(S, i1), total_retarded_dynkin(T, i2))
            rhs = term if rhs is None else rhs + term
    return rhs is not None and lhs == rhs


# ---------------------------------------------------------------------------
# rank of the Dynkin span / primitive-part dimensions


def _left_normed_tree_images(n: int) -> list[SigmaElem]:
    """Primitive elements from left-nested trees, one family per partition.

    For a partition with blocks b1 < ... < bk (ordered by minimum), the
    trees [[..[[b1, bs(2)], bs(3)]..], bs(k)] over all permutations s of the
    non-initial blocks give (k-1)! elements; over all partitions this
    matches the primitive-part dimension count.
    """
    out = []
    for P in set_partitions(canonical_set(n)):
        blocks = sorted(P, key=min)
        first, rest = blocks[0], blocks[1:]
        for perm in itertools.permutations(rest):
            t = leaf(first)
            for b in perm:
                t = node(t, leaf(b))
            out.append(to_h(tree_to_primitive(t)))
    return out


def primitive_dimension_certified(n: int) -> int:
    """dim of the primitive part, by exact kernel for small n and by a
    certified modular squeeze at n = 5.

    The squeeze: explicit tree images are checked primitive exactly and
    independent over GF(p), which bounds the dimension from below; the
    GF(p) nullity of the stacked-split matrix bounds it from above (its
    kernel contains the rational kernel).  Equality of the two bounds pins
    the exact value without large exact eliminations.
    """
    if n <= 4:
        return len(primitive_part_basis(n))
    ground = canonical_set(n)
    candidates = _left_normed_tree_images(n)
    for v in candidates:
        if not is_primitive(v):
            raise ArithmeticError("tree image unexpectedly fails primitivity")
    cand_rows, _ = integer_rows([v.lc for v in candidates])
    low = rank_mod_prime(cand_rows)
    if low != len(candidates):
        raise ArithmeticError("modular fast path failed; rerun with exact rank")

    comps = list(compositions_of(ground))
    splits = list(proper_splits(ground))
    pair_index: dict = {}
    rows_by_pair: dict[int, dict[int, int]] = {}
    for j, F in enumerate(comps):
        for S, T in splits:
            key = ((S, T), restrict(F, S), restrict(F, T))
            i = pair_index.setdefault(key, len(pair_index))
            rows_by_pair.setdefault(i, {})[j] = 1
    mat = [[0] * len(comps) for _ in range(len(pair_index))]
    for i, row in rows_by_pair.items():
        for j, v in row.items():
            mat[i][j] = v
    up = len(comps) - rank_mod_prime(mat)
    if low != up:
        raise ArithmeticError("modular bounds disagree; rerun with exact rank")
    return low


def dynkin_rank(
    I: Iterable[int], bound: int = DYNKIN_RANK_BOUND, exact: bool | None = None
) -> tuple[int, int, int]:
    """(number of cells, rank of their Dynkin span, primitive-part dimension).

    Asserts that the rank equals both the partition-count dimension formula
    and the kernel-computed primitive dimension.  For n = 5 the default is
    the certified modular squeeze; pass exact=True to force Bareiss.
    """
    ground = labelset(I)
    n = len(ground)
    if n > bound:
        raise SizeLimitError(f"|I| = {n} exceeds dynkin rank bound {bound}")
    cells = enumerate_cells(ground)
    vectors = [dynkin(c) for c in cells]
    zdim = zie_dimension(n)
    if exact is None:
        exact = n <= 4
    if exact:
        r = rank([v.lc for v in vectors])
        pdim = len(primitive_part_basis(n, bound=max(n, 5)))
    else:
        for v in vectors:
            if not is_primitive(v):
                raise ArithmeticError("Dynkin element unexpectedly fails primitivity")
        pdim = primitive_dimension_certified(n)
        int_rows, _ = integer_rows([v.lc for v in vectors])
        low = rank_mod_prime(int_rows)
        # low <= exact rank <= pdim since every Dynkin element is primitive
        if low != pdim:
            raise ArithmeticError("modular bounds disagree; rerun with exact=True")
        r = low
    if r != zdim or pdim != zdim:
        raise ArithmeticError(
            f"rank {r} / primitive dim {pdim} do not match the dimension formula {zdim}"
        )
    return len(cells), r, zdim
