"""Reduced words: application, validation, counting, enumeration.

A word is a sequence of generator indices in 1..n-1, stored as ``bytes``
(one letter per byte).  Applying the word to the identity reads it left to
right; letter i swaps the entries in positions i and i+1 of the current
one-line notation.  This convention is the one that sends 12321 to 4231.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Iterator

from .errors import PreconditionError, TooLargeError
from .perms import Perm, identity

__all__ = [
    "DEFAULT_WORD_CAP",
    "Word",
    "apply_word",
    "is_reduced",
    "count_words",
    "iter_words",
    "words_of",
    "word_str",
    "parse_word",
]

DEFAULT_WORD_CAP = 500_000

Word = bytes


def apply_word(word: Iterable[int], n: int) -> Perm:
    """Apply a word to the identity of S_n, first letter first.

    >>> apply_word([1, 2, 3, 2, 1], 4)
    Perm('4231')
    """
    p = list(range(1, n + 1))
    for i in word:
        if not 1 <= i <= n - 1:
            raise PreconditionError(f"letter {i} out of range 1..{n - 1}")
        p[i - 1], p[i] = p[i], p[i - 1]
    return Perm(p)


def is_reduced(word: Iterable[int], n: int) -> bool:
    """True iff the word's length equals the length of the permutation it reaches."""
    w = bytes(word)
    return len(w) == apply_word(w, n).length()


def _left_descents(p: Perm) -> list[int]:
    # i is a left descent iff i+1 occurs before i in the one-line notation;
    # equivalently swapping the values i, i+1 shortens p.
    n = len(p)
    pos = [0] * (n + 1)
    for idx, v in enumerate(p):
        pos[v] = idx
    return [i for i in range(1, n) if pos[i + 1] < pos[i]]


def _swap_values(p: Perm, i: int) -> Perm:
    q = list(p)
    a, b = q.index(i), q.index(i + 1)
    q[a], q[b] = q[b], q[a]
    return Perm(q)


@lru_cache(maxsize=None)
def count_words(p: Perm) -> int:
    """|R(p)| without enumerating.

    Recursion over the first letter: every reduced word starts with a left
    descent i, followed by a reduced word of p with values i, i+1 swapped.

    >>> count_words(Perm.parse("4321"))
    16
    """
    lds = _left_descents(p)
    if not lds:
        return 1
    return sum(count_words(_swap_values(p, i)) for i in lds)


def iter_words(p: Perm) -> Iterator[Word]:
    """Yield every reduced word of p, depth first by smallest first letter."""
    word = bytearray()
    out: list[Word] = []

    def rec(q: Perm) -> None:
        lds = _left_descents(q)
        if not lds:
            out.append(bytes(word))
            return
        for i in lds:
            word.append(i)
            rec(_swap_values(q, i))
            word.pop()

    rec(p)
    return iter(out)


@lru_cache(maxsize=8)
def _words_sorted(p: Perm) -> tuple[Word, ...]:
    return tuple(sorted(iter_words(p)))


def words_of(p: Perm, cap: int | None = DEFAULT_WORD_CAP) -> tuple[Word, ...]:
    """R(p) in lexicographic order.

    Raises TooLargeError when |R(p)| exceeds ``cap`` (the count is cheap to
    obtain in advance, so no partial enumeration is attempted).
    """
    total = count_words(p)
    if cap is not None and total > cap:
        raise TooLargeError(
            f"|R({p})| = {total} exceeds the enumeration cap {cap}"
        )
    return _words_sorted(p)


def word_str(word: Iterable[int]) -> str:
    """Text form of a word: digits when all letters fit one digit, else commas."""
    letters = list(word)
    if not letters:
        return "e"
    if max(letters) <= 9:
        return "".join(map(str, letters))
    return ",".join(map(str, letters))


def parse_word(text: str) -> Word:
    text = text.strip()
    if not text or text == "e":
        return b""
    if "," in text:
        return bytes(int(tok) for tok in text.split(","))
    if not text.isdigit():
        raise PreconditionError(f"cannot parse word {text!r}")
    return bytes(int(ch) for ch in text)
