"""Words over a finite alphabet: lex order, primitivity, conjugates, Lyndon tools.

Letters are integer codes 0..size-1. The lexicographic order used throughout is
the standard one on variable-length words: a proper prefix sorts before its
extensions, otherwise the first differing letter decides. Python tuple
comparison implements exactly this order, which the Word dunders lean on.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import total_ordering
from typing import Iterator

from .errors import AlphabetMismatchError


@dataclass(frozen=True, slots=True)
class Alphabet:
    """A totally ordered alphabet of `size` letters, coded 0..size-1."""

    size: int

    def __post_init__(self):
        if self.size < 2:
            raise ValueError(f"alphabet size must be >= 2, got {self.size}")

    def letters(self) -> list[Word]:
        return [Word((c,), self) for c in range(self.size)]

    def render(self, letters: tuple[int, ...]) -> str:
        if self.size <= 10:
            return "".join(str(c) for c in letters)
        return ",".join(str(c) for c in letters)

    def parse(self, text: str) -> tuple[int, ...]:
        """Inverse of render: digit string for size <= 10, comma codes otherwise."""
        text = text.strip()
        if not text:
            raise ValueError("empty word")
        if "," in text:
            codes = tuple(int(part) for part in text.split(","))
        elif self.size <= 10:
            codes = tuple(int(ch) for ch in text)
        else:
            # A bare number is ambiguous for big alphabets; require commas there
            # except for the single-letter case.
            codes = (int(text),)
        return codes


BINARY = Alphabet(2)
TERNARY = Alphabet(3)


@total_ordering
@dataclass(frozen=True, slots=True)
class Word:
    """A nonempty immutable word; ordered lexicographically within its alphabet."""

    letters: tuple[int, ...]
    alphabet: Alphabet = field(default=BINARY)

    def __post_init__(self):
        if not isinstance(self.letters, tuple):
            object.__setattr__(self, "letters", tuple(self.letters))
        if len(self.letters) == 0:
            raise ValueError("words are nonempty")
        size = self.alphabet.size
        for c in self.letters:
            if not 0 <= c < size:
                raise ValueError(f"letter {c} out of range for alphabet of size {size}")

    @classmethod
    def parse(cls, text: str, alphabet: Alphabet = BINARY) -> Word:
        return cls(alphabet.parse(text), alphabet)

    def __str__(self) -> str:
        return self.alphabet.render(self.letters)

    def __repr__(self) -> str:
        return f"Word({str(self)!r}, size={self.alphabet.size})"

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[int]:
        return iter(self.letters)

    def __getitem__(self, index):
        if isinstance(index, slice):
            return Word(self.letters[index], self.alphabet)
        return self.letters[index]

    def _check_same_alphabet(self, other: Word) -> None:
        if self.alphabet != other.alphabet:
            raise AlphabetMismatchError(
                f"cannot combine words over alphabets of size "
                f"{self.alphabet.size} and {other.alphabet.size}"
            )

    def __lt__(self, other: Word) -> bool:
        self._check_same_alphabet(other)
        return self.letters < other.letters

    def __add__(self, other: Word) -> Word:
        self._check_same_alphabet(other)
        return Word(self.letters + other.letters, self.alphabet)

    def __mul__(self, k: int) -> Word:
        if k < 1:
            raise ValueError("word powers need k >= 1")
        return Word(self.letters * k, self.alphabet)

    def rotate(self, offset: int) -> Word:
        """Left rotation: rotate(1) moves the first letter to the end."""
        k = offset % len(self.letters)
        return Word(self.letters[k:] + self.letters[:k], self.alphabet)

    def is_suffix_of(self, other: Word) -> bool:
        self._check_same_alphabet(other)
        n = len(self.letters)
        return other.letters[len(other.letters) - n:] == self.letters


def lex_compare(u: Word, v: Word) -> int:
    """Three-way lexicographic comparison: -1, 0 or 1."""
    u._check_same_alphabet(v)
    if u.letters == v.letters:
        return 0
    return -1 if u.letters < v.letters else 1


@dataclass(frozen=True)
class Factorization:
    """A tuple of factors plus the order they are claimed to satisfy.

    `order_witness` is "<policy>:<direction>", e.g. "lex:nondecreasing" for
    stack factorizations or "lex:nonincreasing" for Chen-Fox-Lyndon.
    """

    factors: tuple[Word, ...]
    order_witness: str = "lex:nondecreasing"

    def __post_init__(self):
        if not self.factors:
            raise ValueError("a factorization has at least one factor")

    @property
    def word(self) -> Word:
        joined = self.factors[0]
        for f in self.factors[1:]:
            joined = joined + f
        return joined

    def __len__(self) -> int:
        return len(self.factors)

    def __iter__(self) -> Iterator[Word]:
        return iter(self.factors)

    def verify(self, source: Word | None = None) -> bool:
        """Check concatenation (against `source` if given) and factor order."""
        if source is not None and self.word != source:
            return False
        policy_id, _, direction = self.order_witness.partition(":")
        from .order import get_policy

        cmp = get_policy(policy_id).compare
        pairs = zip(self.factors, self.factors[1:])
        if direction == "nonincreasing":
            return all(cmp(a.letters, b.letters) >= 0 for a, b in pairs)
        return all(cmp(a.letters, b.letters) <= 0 for a, b in pairs)


def _failure_function(letters: tuple[int, ...]) -> list[int]:
    """Longest proper border length of each prefix (KMP table)."""
    n = len(letters)
    fail = [0] * n
    k = 0
    for i in range(1, n):
        while k and letters[i] != letters[k]:
            k = fail[k - 1]
        if letters[i] == letters[k]:
            k += 1
        fail[i] = k
    return fail


def minimal_period_length(letters: tuple[int, ...]) -> int:
    n = len(letters)
    border = _failure_function(letters)[-1]
    p = n - border
    return p if n % p == 0 else n


def minimal_period(w: Word) -> Word:
    """Shortest u with w = u^k; equals w itself iff w is primitive."""
    return w[: minimal_period_length(w.letters)]


def is_primitive(w: Word) -> bool:
    return minimal_period_length(w.letters) == len(w)


def conjugates(w: Word) -> list[Word]:
    """All rotations of w in offset order; duplicates retained if w is a power."""
    return [w.rotate(k) for k in range(len(w))]


def duval_lyndon_factorization(w: Word) -> Factorization:
    """Chen-Fox-Lyndon factorization: nonincreasing Lyndon factors, Duval's algorithm."""
    s = w.letters
    n = len(s)
    factors = []
    i = 0
    while i < n:
        j, k = i + 1, i
        while j < n and s[k] <= s[j]:
            k = i if s[k] < s[j] else k + 1
            j += 1
        while i <= k:
            factors.append(Word(s[i : i + j - k], w.alphabet))
            i += j - k
    return Factorization(tuple(factors), "lex:nonincreasing")


def is_lyndon(w: Word) -> bool:
    """Single-factor test on Duval's algorithm."""
    return len(duval_lyndon_factorization(w)) == 1


def lyndon_words(alphabet: Alphabet, max_len: int) -> Iterator[Word]:
    """Generate all Lyndon words of length <= max_len in lex order (FKM algorithm)."""
    size = alphabet.size
    w = [0]
    while True:
        yield Word(tuple(w), alphabet)
        # Extend w periodically to full length, then bump the last letter that
        # can still grow; what remains is the next Lyndon word.
        w = [w[i % len(w)] for i in range(max_len)]
        while w and w[-1] == size - 1:
            w.pop()
        if not w:
            return
        w[-1] += 1


def words_up_to(alphabet: Alphabet, max_len: int) -> Iterator[Word]:
    """All words of length 1..max_len in shortlex order."""
    for n in range(1, max_len + 1):
        for tup in itertools.product(range(alphabet.size), repeat=n):
            yield Word(tup, alphabet)
