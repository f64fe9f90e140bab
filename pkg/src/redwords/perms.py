"""Permutations in one-line notation: patterns, inflations, symmetries.

A permutation of size n is a rearrangement of 1..n.  The empty permutation
(size 0) is a legal value; it shows up as an inflation block.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import InvalidPermutationError, PreconditionError

__all__ = [
    "Perm",
    "identity",
    "descending",
    "all_perms",
    "inversions",
    "contains_pattern",
    "count_321",
    "inflate",
    "decompose_312",
    "decompose_231",
    "symmetry",
    "SYMMETRY_OPS",
]


class Perm(tuple):
    """A permutation of 1..n in one-line notation.

    >>> Perm([4, 2, 3, 1])
    Perm('4231')
    >>> Perm([4, 2, 3, 1]).length()
    5
    """

    __slots__ = ()

    def __new__(cls, entries: Iterable[int] = ()):
        t = tuple(entries)
        n = len(t)
        if t and sorted(t) != list(range(1, n + 1)):
            raise InvalidPermutationError(
                f"not a rearrangement of 1..{n}: {t!r}"
            )
        return super().__new__(cls, t)

    @property
    def n(self) -> int:
        return len(self)

    @classmethod
    def parse(cls, text: str) -> "Perm":
        """Parse the compact text form: digits for n <= 9, else commas.

        >>> Perm.parse("4231")
        Perm('4231')
        >>> Perm.parse("10,2,3,4,5,6,7,8,9,1").n
        10
        """
        text = text.strip()
        if not text or text == "e":
            return cls(())
        if "," in text:
            return cls(int(tok) for tok in text.split(","))
        if not text.isdigit():
            raise InvalidPermutationError(f"cannot parse permutation {text!r}")
        return cls(int(ch) for ch in text)

    def __str__(self) -> str:
        if not self:
            return "e"
        if len(self) <= 9:
            return "".join(map(str, self))
        return ",".join(map(str, self))

    def __repr__(self) -> str:
        return f"Perm({str(self)!r})"

    def length(self) -> int:
        """Number of inversions; equals the length of any reduced word."""
        return _length(self)

    def inverse(self) -> "Perm":
        q = [0] * len(self)
        for i, v in enumerate(self):
            q[v - 1] = i + 1
        return Perm(q)

    def is_identity(self) -> bool:
        return all(v == i + 1 for i, v in enumerate(self))

    def avoids(self, sigma: "Perm") -> bool:
        return not contains_pattern(self, sigma)


@lru_cache(maxsize=None)
def _length(p: Perm) -> int:
    n = len(p)
    return sum(1 for i in range(n) for j in range(i + 1, n) if p[i] > p[j])


def identity(n: int) -> Perm:
    return Perm(range(1, n + 1))


def descending(n: int) -> Perm:
    """The longest permutation n(n-1)...1."""
    return Perm(range(n, 0, -1))


def all_perms(n: int):
    """All of S_n in lexicographic order."""
    for t in itertools.permutations(range(1, n + 1)):
        yield Perm(t)


def inversions(p: Perm) -> list[tuple[int, int]]:
    """All pairs (i, j), 1-based, with i < j and p_i > p_j.

    >>> inversions(Perm.parse("4231"))
    [(1, 2), (1, 3), (1, 4), (2, 4), (3, 4)]
    """
    n = len(p)
    return [
        (i + 1, j + 1)
        for i in range(n)
        for j in range(i + 1, n)
        if p[i] > p[j]
    ]


def contains_pattern(p: Sequence[int], sigma: Sequence[int]) -> bool:
    """True iff some subsequence of p is order-isomorphic to sigma.

    Brute-force subsequence search; fine for the sizes this package targets.
    """
    k = len(sigma)
    if k == 0:
        return True
    if k > len(p):
        return False
    rank = _pattern_ranks(tuple(sigma))
    return _find_pattern(tuple(p), rank)


def _pattern_ranks(sigma: tuple) -> tuple:
    order = sorted(sigma)
    return tuple(order.index(v) for v in sigma)


@lru_cache(maxsize=None)
def _find_pattern(p: tuple, rank: tuple) -> bool:
    k = len(rank)
    for combo in itertools.combinations(p, k):
        if _pattern_ranks(combo) == rank:
            return True
    return False


def count_321(p: Perm) -> int:
    """Number of triples i < j < k with p_i > p_j > p_k.

    >>> count_321(Perm.parse("4312"))
    2
    """
    n = len(p)
    count = 0
    for j in range(n):
        bigger_before = sum(1 for i in range(j) if p[i] > p[j])
        smaller_after = sum(1 for k in range(j + 1, n) if p[k] < p[j])
        count += bigger_before * smaller_after
    return count


def inflate(sigma: Perm, blocks: Sequence[Perm]) -> Perm:
    """Inflate sigma by replacing entry i with a block shaped like blocks[i].

    Blocks may be empty.

    >>> inflate(Perm.parse("231"), [Perm.parse("21"), Perm(()), Perm.parse("213")])
    Perm('54213')
    """
    if len(blocks) != len(sigma):
        raise PreconditionError(
            f"inflation of size-{len(sigma)} pattern needs {len(sigma)} blocks, "
            f"got {len(blocks)}"
        )
    sizes = [len(b) for b in blocks]
    # offset for slot i: total size of blocks whose sigma-value is smaller
    offsets = []
    for i, v in enumerate(sigma):
        offsets.append(sum(sizes[j] for j in range(len(sigma)) if sigma[j] < v))
    out: list[int] = []
    for i, block in enumerate(blocks):
        out.extend(x + offsets[i] for x in block)
    return Perm(out)


def _pattern_of(values: Sequence[int]) -> Perm:
    order = sorted(values)
    return Perm(order.index(v) + 1 for v in values)


def decompose_312(p: Perm) -> tuple[Perm, Perm, int]:
    """Split a 312-avoider as p = 12[21[p', 1], p''] around the entry 1.

    Returns (p', p'', m) with p_m = 1 (1-based m).
    """
    if len(p) == 0:
        raise PreconditionError("cannot decompose the empty permutation")
    if contains_pattern(p, Perm((3, 1, 2))):
        raise PreconditionError(f"{p} contains 312")
    m = p.index(1) + 1
    left = _pattern_of(p[: m - 1])
    right = _pattern_of(p[m:])
    return left, right, m


def decompose_231(p: Perm) -> tuple[Perm, Perm, int]:
    """Split a 231-avoider as p = 12[p', 21[1, p'']] around the entry n."""
    if len(p) == 0:
        raise PreconditionError("cannot decompose the empty permutation")
    if contains_pattern(p, Perm((2, 3, 1))):
        raise PreconditionError(f"{p} contains 231")
    m = p.index(len(p)) + 1
    left = _pattern_of(p[: m - 1])
    right = _pattern_of(p[m:])
    return left, right, m


SYMMETRY_OPS = ("R180", "R1", "RM1")


def symmetry(p: Perm, op: str) -> Perm:
    """Apply a dihedral symmetry of the permutation diagram.

    R180 rotates by 180 degrees, R1 reflects over the main diagonal
    (inverse), RM1 is the composition of the two.

    >>> symmetry(Perm.parse("3241"), "R180")
    Perm('4132')
    >>> symmetry(Perm.parse("3241"), "R1")
    Perm('4213')
    >>> symmetry(Perm.parse("3241"), "RM1")
    Perm('2431')
    """
    n = len(p)
    if op == "R180":
        return Perm(n - p[n - 1 - i] + 1 for i in range(n))
    if op == "R1":
        return p.inverse()
    if op == "RM1":
        return symmetry(p, "R180").inverse()
    raise PreconditionError(f"unknown symmetry op {op!r}")
