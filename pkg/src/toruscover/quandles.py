"""
Finite quandles and coloring counts of closed braids.

A quandle is a set X with a binary operation * such that every element is
idempotent (a*a = a), right translation by any element is a bijection, and
* distributes over itself on the right: (a*b)*c = (a*c)*(b*c).  The dihedral
quandle on Z/p has a*b = 2b - a; for p = 3 this is the classical
three-coloring rule.

Colorings of the closure of a braid word are computed strand-wise: a color
vector assigned to the strand tops is pushed through the word one crossing
at a time, and it extends to the closure exactly when the vector comes back
to itself at the bottom.  The number of such fixed vectors is a link
invariant.  For dihedral quandles over a prime p each crossing acts
linearly on (Z/p)^m, so the count is also p**dim ker(M - I) for the product
matrix M; that fast path is kept separate from the brute-force enumeration
so each can check the other.

A ColoringSystem additionally pins chosen grid positions to equal colors,
which is how surgery experiments on the closed braid are expressed.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property

from .braids import BraidWord

# Brute-force enumeration refuses state spaces beyond this many vectors.
STATE_CAP = 10**8

Violation = tuple[str, tuple[int, ...]]


class StateCapExceeded(RuntimeError):
    """The requested brute-force enumeration is larger than STATE_CAP."""


def validate_quandle(table: list[list[int]] | tuple[tuple[int, ...], ...]) -> list[Violation]:
    """Check the three quandle axioms; return a list of (axiom, witness) pairs.

    An empty list means the table is a quandle.  Witnesses name the elements
    at which the axiom fails.  A non-square table or out-of-range entries
    raise ValueError instead (that is malformed input, not an axiom failure).
    """
    n = len(table)
    for row in table:
        if len(row) != n:
            raise ValueError(f"quandle table is not square: {n} rows, row of length {len(row)}")
        for entry in row:
            if not 0 <= entry < n:
                raise ValueError(f"table entry {entry} outside 0..{n - 1}")
    violations: list[Violation] = []
    for a in range(n):
        if table[a][a] != a:
            violations.append(("idempotence", (a,)))
    for b in range(n):
        if len({table[a][b] for a in range(n)}) != n:
            violations.append(("right-invertibility", (b,)))
    for a in range(n):
        for b in range(n):
            for c in range(n):
                if table[table[a][b]][c] != table[table[a][c]][table[b][c]]:
                    violations.append(("self-distributivity", (a, b, c)))
    return violations


@dataclass(frozen=True)
class Quandle:
    """A finite quandle given by its operation table: table[a][b] = a*b."""

    table: tuple[tuple[int, ...], ...]

    @classmethod
    def from_table(cls, table) -> Quandle:
        frozen = tuple(tuple(row) for row in table)
        violations = validate_quandle(frozen)
        if violations:
            detail = "; ".join(f"{axiom} fails at {witness}" for axiom, witness in violations)
            raise ValueError(f"not a quandle: {detail}")
        return cls(frozen)

    @property
    def order(self) -> int:
        return len(self.table)

    def op(self, a: int, b: int) -> int:
        return self.table[a][b]

    @cached_property
    def inverse_table(self) -> tuple[tuple[int, ...], ...]:
        """inverse_table[a][b] is the unique c with c*b = a."""
        n = self.order
        inverse = [[0] * n for _ in range(n)]
        for b in range(n):
            for c in range(n):
                inverse[self.table[c][b]][b] = c
        return tuple(tuple(row) for row in inverse)

    def inv_op(self, a: int, b: int) -> int:
        return self.inverse_table[a][b]


def dihedral(p: int) -> Quandle:
    """The dihedral quandle on Z/p with a*b = 2b - a (p >= 3)."""
    if p < 3:
        raise ValueError(f"dihedral quandle needs p >= 3, got {p}")
    table = tuple(tuple((2 * b - a) % p for b in range(p)) for a in range(p))
    return Quandle(table)


def parse_quandle_table(text: str) -> Quandle:
    """Load a quandle from text: first line the order n, then n rows of n entries."""
    lines = [line for line in text.splitlines() if line.strip()]
    if not lines:
        raise ValueError("empty quandle table")
    n = int(lines[0])
    if len(lines) != n + 1:
        raise ValueError(f"expected {n} table rows, got {len(lines) - 1}")
    table = [[int(tok) for tok in line.split()] for line in lines[1:]]
    return Quandle.from_table(table)


def format_quandle_table(quandle: Quandle) -> str:
    rows = [" ".join(str(v) for v in row) for row in quandle.table]
    return "\n".join([str(quandle.order)] + rows) + "\n"


def crossing_action(
    quandle: Quandle, word: BraidWord, colors: tuple[int, ...]
) -> tuple[int, ...]:
    """Push a color vector through the word, top to bottom.

    A positive crossing at i sends (c_i, c_{i+1}) to (c_{i+1}, c_i * c_{i+1});
    a negative crossing inverts that.  All other coordinates are untouched.
    """
    if len(colors) != word.degree:
        raise ValueError(f"expected {word.degree} colors, got {len(colors)}")
    table = quandle.table
    inverse = quandle.inverse_table
    current = list(colors)
    for index, sign in word.letters:
        i = index - 1
        a, b = current[i], current[i + 1]
        if sign > 0:
            current[i], current[i + 1] = b, table[a][b]
        else:
            current[i], current[i + 1] = inverse[b][a], a
    return tuple(current)


def _check_state_cap(order: int, degree: int) -> None:
    if order**degree > STATE_CAP:
        raise StateCapExceeded(
            f"{order}**{degree} color vectors exceeds the enumeration cap {STATE_CAP}; "
            "use the dihedral fast path for large prime dihedral quandles"
        )


def coloring_count(quandle: Quandle, word: BraidWord) -> int:
    """Number of colorings of the braid closure: vectors fixed by the word action."""
    _check_state_cap(quandle.order, word.degree)
    table = quandle.table
    inverse = quandle.inverse_table
    ops = [(index - 1, sign) for index, sign in word.letters]
    count = 0
    for start in itertools.product(range(quandle.order), repeat=word.degree):
        current = list(start)
        for i, sign in ops:
            a, b = current[i], current[i + 1]
            if sign > 0:
                current[i], current[i + 1] = b, table[a][b]
            else:
                current[i], current[i + 1] = inverse[b][a], a
        if tuple(current) == start:
            count += 1
    return count


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _gfp_rank(matrix: list[list[int]], p: int) -> int:
    """Rank over Z/p by Gaussian elimination (p prime)."""
    rows = [row[:] for row in matrix]
    n_rows = len(rows)
    n_cols = len(rows[0]) if rows else 0
    rank = 0
    for col in range(n_cols):
        pivot = next((r for r in range(rank, n_rows) if rows[r][col] % p != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = pow(rows[rank][col], p - 2, p)
        rows[rank] = [(v * inv) % p for v in rows[rank]]
        for r in range(n_rows):
            if r != rank and rows[r][col] % p != 0:
                factor = rows[r][col]
                rows[r] = [(v - factor * w) % p for v, w in zip(rows[r], rows[rank])]
        rank += 1
        if rank == n_rows:
            break
    return rank


def dihedral_coloring_count_fast(p: int, word: BraidWord) -> int:
    """Coloring count for the dihedral quandle over prime p via linear algebra.

    Each crossing acts linearly on (Z/p)^m, so the count is
    p**dim ker(M - I) with M the product of the crossing matrices.  Must
    agree with coloring_count(dihedral(p), word) everywhere.
    """
    if p < 3:
        raise ValueError(f"dihedral fast path needs p >= 3, got {p}")
    if not _is_prime(p):
        raise ValueError(f"dihedral fast path needs a prime modulus, got composite {p}")
    m = word.degree
    # matrix[r] = row r of M as a function of the input coordinates
    matrix = [[1 if r == c else 0 for c in range(m)] for r in range(m)]
    for index, sign in word.letters:
        i = index - 1
        row_i, row_j = matrix[i], matrix[i + 1]
        if sign > 0:
            # (a, b) -> (b, 2b - a)
            matrix[i] = row_j
            matrix[i + 1] = [(2 * bj - ai) % p for ai, bj in zip(row_i, row_j)]
        else:
            # (a, b) -> (2a - b, a)
            matrix[i] = [(2 * ai - bj) % p for ai, bj in zip(row_i, row_j)]
            matrix[i + 1] = row_i
    for r in range(m):
        matrix[r][r] = (matrix[r][r] - 1) % p
    return p ** (m - _gfp_rank(matrix, p))


GridPosition = tuple[int, int]  # (level 0..k, strand 1..m)


@dataclass(frozen=True)
class ColoringSystem:
    """A braid coloring problem with extra equalities between grid positions.

    The grid has one color per (level, strand): level 0 is the top of the
    braid, level k the bottom after all k letters.  The closure identifies
    level k with level 0.  Constraints are pairs of positions whose colors
    must agree.
    """

    quandle: Quandle
    word: BraidWord
    constraints: tuple[tuple[GridPosition, GridPosition], ...] = field(default=())

    def __post_init__(self) -> None:
        k = len(self.word.letters)
        m = self.word.degree
        for pair in self.constraints:
            for level, strand in pair:
                if not 0 <= level <= k:
                    raise ValueError(f"constraint level {level} outside 0..{k}")
                if not 1 <= strand <= m:
                    raise ValueError(f"constraint strand {strand} outside 1..{m}")


def propagate_grid(
    quandle: Quandle, word: BraidWord, top: tuple[int, ...]
) -> list[tuple[int, ...]]:
    """All k+1 color levels obtained by pushing the top vector through the word."""
    if len(top) != word.degree:
        raise ValueError(f"expected {word.degree} colors, got {len(top)}")
    table = quandle.table
    inverse = quandle.inverse_table
    levels = [tuple(top)]
    current = list(top)
    for index, sign in word.letters:
        i = index - 1
        a, b = current[i], current[i + 1]
        if sign > 0:
            current[i], current[i + 1] = b, table[a][b]
        else:
            current[i], current[i + 1] = inverse[b][a], a
        levels.append(tuple(current))
    return levels


def constrained_count(system: ColoringSystem) -> int:
    """Level-0 vectors whose grid closes up and satisfies every constraint."""
    word = system.word
    quandle = system.quandle
    _check_state_cap(quandle.order, word.degree)
    count = 0
    for start in itertools.product(range(quandle.order), repeat=word.degree):
        levels = propagate_grid(quandle, word, start)
        if levels[-1] != start:
            continue
        ok = True
        for (l1, s1), (l2, s2) in system.constraints:
            if levels[l1][s1 - 1] != levels[l2][s2 - 1]:
                ok = False
                break
        if ok:
            count += 1
    return count
