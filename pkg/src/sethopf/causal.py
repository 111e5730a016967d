"""A desk-scale causal model: timed observables in a free word algebra.

Observables carry a single rational time instant; "later" means causally
not-earlier, and the time-ordered product writes later factors to the left
(ties broken by ascending id, a documented convention that makes every
output deterministic).  The ambient algebra is the free word algebra, so
any identity verified here holds by Hopf/causal combinatorics alone.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .compositions import Composition, canonical_set, labelset, one_lump, set_partitions, star_labels
from .errors import DomainError
from .hopf import SigmaElem, antipode, basis_elem
from .scalars import C_QFT, I_HBAR, as_hbar
from .series import (
    ProductSystem,
    TruncSeries,
    eval_system,
    formal_diff,
    perturb_arrow,
    perturb_coderivation,
    reverse_exponential,
    t_exponential,
    universal_series,
)
from .hadamard import tits
from .words import WordElem


class TimedObservable:
    """A symbolic local observable supported at a single rational time."""

    __slots__ = ("id", "time")

    def __init__(self, id: str, time):
        object.__setattr__(self, "id", str(id))
        object.__setattr__(self, "time", Fraction(time))

    def __setattr__(self, *a):
        raise AttributeError("TimedObservable is immutable")

    def __eq__(self, other):
        return (
            isinstance(other, TimedObservable)
            and self.id == other.id
            and self.time == other.time
        )

    def __hash__(self):
        return hash((self.id, self.time))

    def __repr__(self):
        return f"{self.id}@{self.time}"


def _sorted_ids(obs: Iterable[TimedObservable]) -> tuple[str, ...]:
    return tuple(o.id for o in sorted(obs, key=lambda o: (-o.time, o.id)))


def time_ordered(observables: Sequence[TimedObservable]) -> WordElem:
    """The single word with ids sorted by strictly decreasing time (later left)."""
    return WordElem.word(_sorted_ids(observables))


def causal_word_system() -> ProductSystem:
    """Lumpwise time-ordering followed by concatenation across lumps."""

    def eval_comp(F: Composition, dec: Mapping[int, TimedObservable]) -> WordElem:
        ids: tuple[str, ...] = ()
        for lump in F.lumps:
            ids = ids + _sorted_ids(dec[l] for l in lump)
        return WordElem.word(ids)

    return ProductSystem("causal-words", eval_comp, claims_homomorphism=True)


CAUSAL_SYSTEM = causal_word_system()


def generalized_T(x: SigmaElem, dec: Mapping[int, TimedObservable]) -> WordElem:
    return eval_system(CAUSAL_SYSTEM, x, dec)


def respects(dec: Mapping[int, TimedObservable], G: Composition) -> bool:
    """Every label in an earlier (left) lump is at a time >= every later one."""
    for p in range(len(G.lumps)):
        for q in range(p + 1, len(G.lumps)):
            for i1 in G.lumps[p]:
                for i2 in G.lumps[q]:
                    if dec[i1].time < dec[i2].time:
                        return False
    return True


def causal_factorization_check(
    x: SigmaElem, G: Composition, dec: Mapping[int, TimedObservable]
) -> bool:
    """T_I(a (x) A_I) = T_I(a |> H_G (x) A_I) whenever the decoration respects G."""
    if not respects(dec, G):
        raise DomainError("decoration does not respect the composition")
    lhs = generalized_T(x, dec)
    rhs = generalized_T(tits(x, basis_elem(G)), dec)
    return lhs == rhs


def reverse_T(x: SigmaElem, dec: Mapping[int, TimedObservable]) -> WordElem:
    """The reverse product: evaluation after the antipode."""
    return generalized_T(antipode(x), dec)


def retarded_product(
    Y_dec: Mapping[int, TimedObservable], I_dec: Mapping[int, TimedObservable]
) -> WordElem:
    """Evaluation of the retarded element on interaction copies over Y."""
    if set(Y_dec) & set(I_dec):
        raise DomainError("interaction and observable labels must be disjoint")
    from .arrows import retarded_element

    if not Y_dec:
        return generalized_T(basis_elem(one_lump(labelset(I_dec))), I_dec)
    elem = retarded_element(labelset(Y_dec), labelset(I_dec))
    return generalized_T(elem, {**Y_dec, **I_dec})


def interacting_observable(
    A: TimedObservable, S_int: TimedObservable, order: int
) -> TruncSeries:
    """sum_r (g^r / r!) (1/(i hbar))^r R_(r;1)(S^r; A), a series in g alone."""
    from .arrows import retarded_element

    terms: dict[tuple[int, int], WordElem] = {}
    for r in range(order + 1):
        stars = star_labels(r)
        if r == 0:
            val = time_ordered([A])
        else:
            elem = retarded_element(stars, (1,))
            dec = {**{s: S_int for s in stars}, 1: A}
            val = generalized_T(elem, dec)
        scal = as_hbar(_c_pow(r)) * Fraction(1, _fact(r))
        terms[(r, 0)] = val.scale(scal)
    return TruncSeries(order, terms)


def _fact(r: int) -> int:
    out = 1
    for k in range(2, r + 1):
        out *= k
    return out


def _c_pow(r: int):
    return C_QFT**r


def smatrix(A: TimedObservable, order: int) -> TruncSeries:
    """The T-exponential for the universal series at coupling 1/(i hbar)."""
    return t_exponential(CAUSAL_SYSTEM, universal_series(C_QFT, order), A, order)


def smatrix_two_arg(A: TimedObservable, S_int: TimedObservable, order: int) -> TruncSeries:
    """S(g S + j A), expanded exactly as a (g, j) double series."""
    return perturb_coderivation(
        CAUSAL_SYSTEM, universal_series(C_QFT, order), S_int, A, order
    )


def smatrix_inverse_of_interaction(S_int: TimedObservable, order: int) -> TruncSeries:
    """S^(-1)(g S): the reverse T-exponential of the interaction alone."""
    return reverse_exponential(CAUSAL_SYSTEM, C_QFT, S_int, order)


def generating_function(
    A: TimedObservable, S_int: TimedObservable, order: int, direction: str = "down"
) -> TruncSeries:
    """Z_(gS)(jA): the arrow-perturbed T-exponential (retarded by default)."""
    return perturb_arrow(CAUSAL_SYSTEM, S_int, A, order, direction=direction)


def z_factorization_check(A: TimedObservable, S_int: TimedObservable, order: int) -> bool:
    """Z = S^(-1)(gS) * S(gS + jA)  and the advanced mirror, exactly."""
    z = generating_function(A, S_int, order, "down")
    w = generating_function(A, S_int, order, "up")
    sinv = smatrix_inverse_of_interaction(S_int, order)
    stwo = smatrix_two_arg(A, S_int, order)
    return z == sinv * stwo and w == stwo * sinv


def bogoliubov_extract(A: TimedObservable, S_int: TimedObservable, order: int) -> TruncSeries:
    """i hbar * d/dj at j = 0 of the generating function."""
    z = generating_function(A, S_int, order, "down")
    return formal_diff(z, "j").at_j_zero().scale(I_HBAR)


def bogoliubov_check(A: TimedObservable, S_int: TimedObservable, order: int) -> bool:
    """Bogoliubov's formula: the extraction equals the interacting series."""
    lhs = bogoliubov_extract(A, S_int, order)
    rhs = interacting_observable(A, S_int, max(order - 1, 0))
    return lhs == rhs


class CausalModel:
    """A named family of timed observables with a distinguished interaction."""

    __slots__ = ("observables", "interaction")

    def __init__(self, observables: Iterable[TimedObservable], interaction: str):
        table = {}
        for o in observables:
            if o.id in table:
                raise DomainError(f"duplicate observable id {o.id!r}")
            table[o.id] = o
        if interaction not in table:
            raise DomainError(f"interaction id {interaction!r} is not an observable")
        object.__setattr__(self, "observables", table)
        object.__setattr__(self, "interaction", interaction)

    def __setattr__(self, *a):
        raise AttributeError("CausalModel is immutable")

    @property
    def interaction_observable(self) -> TimedObservable:
        return self.observables[self.interaction]

    def first_field_observable(self) -> TimedObservable:
        for oid in sorted(self.observables):
            if oid != self.interaction:
                return self.observables[oid]
        raise DomainError("model needs at least one non-interaction observable")


def recompose_system(sys: ProductSystem, z_combine) -> ProductSystem:
    """Renormalization-style recombination of one-lump products.

    ``z_combine(labels, dec)`` maps a block of decorated labels to a new
    decoration value, or None for a vanishing contribution.  The new
    one-lump evaluator sums over set partitions, evaluating the block
    values time-ordered; other compositions evaluate lumpwise as always.
    Whether a nontrivial combiner preserves causal factorization is left
    to the caller: rerun homomorphism_check and the causal suite on the result.
    """

    def eval_one_lump(labels: tuple, dec: Mapping) -> WordElem:
        out = WordElem.zero()
        for P in set_partitions(labels):
            values = [z_combine(block, dec) for block in P]
            if any(v is None for v in values):
                continue
            fresh = {i + 1: v for i, v in enumerate(values)}
            out = out + sys.eval_comp(one_lump(canonical_set(len(values))), fresh)
        return out

    def eval_comp(F: Composition, dec: Mapping) -> WordElem:
        out = WordElem.unit()
        for lump in F.lumps:
            out = out * eval_one_lump(lump, dec)
        return out

    return ProductSystem(f"{sys.name}+recomposed", eval_comp, claims_homomorphism=True)
