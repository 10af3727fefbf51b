"""
Words in the Artin braid groups B_m.

A braid word is a sequence of signed Artin generators together with the
number of strands m it lives on.  Generators are 1-based (s1 .. s(m-1)) to
match the usual notation, and the degree is carried explicitly because the
trivial word of B_2 and the trivial word of B_3 are different objects (they
close up to different links).

Words are parsed from and formatted to a small text grammar:

    word   := token (whitespace token)*
    token  := "e" | "s" digits | "s" digits "^" signed-digits

so ``s1^3 s2^-1`` is the word with letters (1,+)(1,+)(1,+)(2,-).  Exponents
are expanded on parse; formatting collapses runs of the same letter back
into powers.

Everything here is a pure function on immutable values.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass

# Guard against pathological inputs like "s1^99999999999": words store
# expanded letters, so exponents are capped.
MAX_EXPONENT = 10**6

_TOKEN_RE = re.compile(r"^s(\d+)(?:\^(-?\d+))?$")


@dataclass(frozen=True)
class BraidWord:
    """A word in B_m: strand count plus a tuple of (generator, sign) letters."""

    degree: int
    letters: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        if self.degree < 1:
            raise ValueError(f"braid degree must be >= 1, got {self.degree}")
        for index, sign in self.letters:
            if not 1 <= index <= self.degree - 1:
                raise ValueError(
                    f"generator s{index} out of range for degree {self.degree} "
                    f"(valid: 1..{self.degree - 1})"
                )
            if sign not in (-1, 1):
                raise ValueError(f"letter sign must be +1 or -1, got {sign}")

    def __len__(self) -> int:
        return len(self.letters)

    def is_trivial_word(self) -> bool:
        """True if the letter list is empty (the word e, not just e in B_m)."""
        return not self.letters

    def __str__(self) -> str:
        return format_braid(self)


@dataclass(frozen=True)
class Permutation:
    """A permutation of {1..m}, stored as the tuple of images of 1..m."""

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError(f"not a permutation of 1..{len(self.images)}: {self.images}")

    @property
    def degree(self) -> int:
        return len(self.images)

    @classmethod
    def identity(cls, m: int) -> Permutation:
        return cls(tuple(range(1, m + 1)))

    @classmethod
    def transposition(cls, m: int, i: int) -> Permutation:
        """The adjacent transposition (i, i+1) in S_m."""
        if not 1 <= i <= m - 1:
            raise ValueError(f"transposition index {i} out of range for m={m}")
        images = list(range(1, m + 1))
        images[i - 1], images[i] = images[i], images[i - 1]
        return cls(tuple(images))

    def __call__(self, x: int) -> int:
        return self.images[x - 1]

    def then(self, other: Permutation) -> Permutation:
        """Composite mapping x to other(self(x))."""
        return Permutation(tuple(other.images[v - 1] for v in self.images))

    def inverse(self) -> Permutation:
        images = [0] * len(self.images)
        for x, v in enumerate(self.images, start=1):
            images[v - 1] = x
        return Permutation(tuple(images))

    def is_identity(self) -> bool:
        return all(v == x for x, v in enumerate(self.images, start=1))

    def cycle_count(self) -> int:
        seen = [False] * len(self.images)
        cycles = 0
        for start in range(1, len(self.images) + 1):
            if seen[start - 1]:
                continue
            cycles += 1
            x = start
            while not seen[x - 1]:
                seen[x - 1] = True
                x = self.images[x - 1]
        return cycles


def parse_braid(text: str, degree: int) -> BraidWord:
    """Parse the word grammar into a BraidWord of the given degree.

    ``e`` tokens contribute nothing; ``s2^-3`` expands to three letters
    (2,-1).  Raises ValueError on malformed tokens, indices outside
    1..degree-1, degree < 1, or exponents beyond MAX_EXPONENT.
    """
    if degree < 1:
        raise ValueError(f"braid degree must be >= 1, got {degree}")
    letters: list[tuple[int, int]] = []
    for token in text.split():
        if token == "e":
            continue
        match = _TOKEN_RE.match(token)
        if match is None:
            raise ValueError(f"bad braid token {token!r} (expected e, sN or sN^K)")
        index = int(match.group(1))
        exponent = 1 if match.group(2) is None else int(match.group(2))
        if not 1 <= index <= degree - 1:
            raise ValueError(
                f"generator s{index} out of range for degree {degree} "
                f"(valid: 1..{degree - 1})"
            )
        if abs(exponent) > MAX_EXPONENT:
            raise ValueError(f"exponent {exponent} exceeds limit {MAX_EXPONENT}")
        sign = 1 if exponent > 0 else -1
        letters.extend((index, sign) for _ in range(abs(exponent)))
    return BraidWord(degree, tuple(letters))


def format_braid(word: BraidWord) -> str:
    """Format a word back into the grammar, collapsing runs into powers."""
    if not word.letters:
        return "e"
    parts = []
    for (index, sign), run in itertools.groupby(word.letters):
        count = sum(1 for _ in run)
        exponent = count * sign
        parts.append(f"s{index}" if exponent == 1 else f"s{index}^{exponent}")
    return " ".join(parts)


def invert(word: BraidWord) -> BraidWord:
    """The inverse word: letters reversed, signs flipped."""
    return BraidWord(word.degree, tuple((i, -s) for i, s in reversed(word.letters)))


def concat(a: BraidWord, b: BraidWord) -> BraidWord:
    """Concatenation ab (no reduction is applied)."""
    if a.degree != b.degree:
        raise ValueError(f"degree mismatch: {a.degree} vs {b.degree}")
    return BraidWord(a.degree, a.letters + b.letters)


def power(word: BraidWord, n: int) -> BraidWord:
    """word^n for n >= 0."""
    if n < 0:
        raise ValueError("power expects n >= 0; invert first for negative powers")
    return BraidWord(word.degree, word.letters * n)


def free_reduce(word: BraidWord) -> BraidWord:
    """Delete adjacent cancelling pairs s_i s_i^-1 until none remain."""
    stack: list[tuple[int, int]] = []
    for letter in word.letters:
        if stack and stack[-1][0] == letter[0] and stack[-1][1] == -letter[1]:
            stack.pop()
        else:
            stack.append(letter)
    return BraidWord(word.degree, tuple(stack))


def permutation(word: BraidWord) -> Permutation:
    """The underlying permutation: strand starting at position i ends at position perm(i)."""
    m = word.degree
    strand_at = list(range(m))  # strand_at[p] = strand currently at position p (0-based)
    for index, _sign in word.letters:
        i = index - 1
        strand_at[i], strand_at[i + 1] = strand_at[i + 1], strand_at[i]
    images = [0] * m
    for position, strand in enumerate(strand_at):
        images[strand] = position + 1
    return Permutation(tuple(images))


def exponent_sum(word: BraidWord) -> int:
    """Sum of letter signs; invariant under the braid relations."""
    return sum(sign for _index, sign in word.letters)


def closure_component_count(word: BraidWord) -> int:
    """Number of link components of the braid closure (cycles of the permutation)."""
    return permutation(word).cycle_count()


def infer_degree(text: str) -> int:
    """Smallest degree admitting the word: max generator index + 1 (1 for e)."""
    best = 1
    for token in text.split():
        if token == "e":
            continue
        match = _TOKEN_RE.match(token)
        if match is None:
            raise ValueError(f"bad braid token {token!r} (expected e, sN or sN^K)")
        best = max(best, int(match.group(1)) + 1)
    return best
