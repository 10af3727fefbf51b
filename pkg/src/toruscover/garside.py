"""
Garside left-canonical form and the braid word problem.

Every element of B_m factors uniquely as Delta^p A_1 ... A_k where Delta is
the positive half twist, each A_j is a permutation braid (a positive braid
in which any two strands cross at most once, so A_j is determined by its
permutation), no A_j is trivial or Delta, and each adjacent pair is
left-weighted: every generator that can start A_{j+1} already finishes A_j.
Two words represent the same braid exactly when these forms coincide, which
turns the word problem into a tuple comparison.

Conventions used throughout: permutations are stored as image tuples with
pi(i) = final position of the strand entering at position i, words act top
to bottom, and composition is left-to-right ("then").  With that reading,
the generators that can start a permutation braid are the descents of its
permutation and the generators that can finish it are the descents of the
inverse permutation.

The normalisation below is the classical greedy one: negative letters are
rewritten as Delta^-1 times a permutation braid, Delta powers are pushed to
the front through the twist automorphism, and crossings are then slid
leftwards between adjacent factors until every pair is left-weighted.
"""

from __future__ import annotations

from dataclasses import dataclass

from .braids import BraidWord, Permutation, concat

# Internal representation: permutations as 0-based image tuples.
_Perm = tuple[int, ...]


def _identity(m: int) -> _Perm:
    return tuple(range(m))

def _reversal(m: int) -> _Perm:
    return tuple(range(m - 1, -1, -1))

def _transposition(m: int, i: int) -> _Perm:
    images = list(range(m))
    images[i], images[i + 1] = images[i + 1], images[i]
    return tuple(images)

def _then(a: _Perm, b: _Perm) -> _Perm:
    return tuple(b[v] for v in a)

def _inverse(a: _Perm) -> _Perm:
    images = [0] * len(a)
    for x, v in enumerate(a):
        images[v] = x
    return tuple(images)

def _descents(a: _Perm) -> set[int]:
    """0-based indices i with a(i) > a(i+1); the generators starting the braid."""
    return {i for i in range(len(a) - 1) if a[i] > a[i + 1]}

def _twist(a: _Perm, rev: _Perm) -> _Perm:
    """Conjugation by the half twist: x -> rev(a(rev(x)))."""
    return tuple(rev[a[rev[x]]] for x in range(len(a)))

def _append_generator(a: _Perm, i: int) -> _Perm:
    """a followed by one crossing at i (post-compose with the transposition)."""
    swap = list(a)
    for x, v in enumerate(swap):
        if v == i:
            swap[x] = i + 1
        elif v == i + 1:
            swap[x] = i
    return tuple(swap)

def _drop_leading_generator(b: _Perm, i: int) -> _Perm:
    """b with a leading crossing at i removed (pre-compose with the transposition)."""
    images = list(b)
    images[i], images[i + 1] = images[i + 1], images[i]
    return tuple(images)


def _slide(a: _Perm, b: _Perm) -> tuple[_Perm, _Perm]:
    """Make the pair (a, b) left-weighted by moving crossings from b into a.

    While some generator starts b but does not finish a, that crossing can be
    transferred without a double crossing appearing in a.  The result is the
    unique left-weighted pair with the same product.
    """
    while True:
        movable = _descents(b) - _descents(_inverse(a))
        if not movable:
            return a, b
        i = min(movable)
        a = _append_generator(a, i)
        b = _drop_leading_generator(b, i)


def _normalise(m: int, power: int, factors: list[_Perm]) -> tuple[int, tuple[_Perm, ...]]:
    identity = _identity(m)
    reversal = _reversal(m)
    half_twist_is_trivial = m == 1
    while True:
        cleaned: list[_Perm] = []
        for factor in factors:
            if factor == identity:
                continue
            if factor == reversal and not half_twist_is_trivial:
                power += 1
                cleaned = [_twist(g, reversal) for g in cleaned]
                continue
            cleaned.append(factor)
        factors = cleaned
        moved = False
        for k in range(len(factors) - 1):
            a, b = _slide(factors[k], factors[k + 1])
            if (a, b) != (factors[k], factors[k + 1]):
                factors[k], factors[k + 1] = a, b
                moved = True
        if not moved:
            return power, tuple(factors)


@dataclass(frozen=True)
class NormalForm:
    """Delta^infimum followed by left-weighted permutation braid factors."""

    degree: int
    infimum: int
    factors: tuple[Permutation, ...]

    @property
    def canonical_length(self) -> int:
        return len(self.factors)

    def is_trivial(self) -> bool:
        return self.infimum == 0 and not self.factors


def left_canonical_form(word: BraidWord) -> NormalForm:
    """The unique left-weighted normal form of the word."""
    m = word.degree
    reversal = _reversal(m)
    power = 0
    factors: list[_Perm] = []
    for index, sign in word.letters:
        crossing = _transposition(m, index - 1)
        if sign > 0:
            factors.append(crossing)
        else:
            # s_i^-1 = Delta^-1 (Delta s_i^-1), and Delta s_i^-1 is the
            # permutation braid for reversal-then-crossing; the Delta^-1
            # travels to the front twisting everything already collected.
            power -= 1
            factors = [_twist(f, reversal) for f in factors]
            factors.append(_then(reversal, crossing))
    power, normalised = _normalise(m, power, factors)
    return NormalForm(
        degree=m,
        infimum=power,
        factors=tuple(Permutation(tuple(v + 1 for v in f)) for f in normalised),
    )


def words_equal(a: BraidWord, b: BraidWord) -> bool:
    """Whether a and b represent the same element of B_m."""
    if a.degree != b.degree:
        raise ValueError(f"degree mismatch: {a.degree} vs {b.degree}")
    return left_canonical_form(a) == left_canonical_form(b)


def is_trivial(word: BraidWord) -> bool:
    """Whether the word represents the identity braid."""
    return left_canonical_form(word).is_trivial()


def commute(a: BraidWord, b: BraidWord) -> bool:
    """Whether ab = ba in B_m."""
    return words_equal(concat(a, b), concat(b, a))
