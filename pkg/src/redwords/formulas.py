"""Recursive diameter formulas for inflations and pattern avoiders.

Everything here is exact arithmetic on small integers; the graph-side
oracles live in wordgraphs.  Base cases are permutations of size <= 1,
whose graphs are single vertices.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb

from .errors import PreconditionError
from .perms import Perm, decompose_231, decompose_312, descending, identity, inflate

__all__ = [
    "DiameterTriple",
    "DiameterBounds",
    "ZERO_TRIPLE",
    "diam_12",
    "bounds_21_iota",
    "diam_21_single",
    "delta_recursion",
    "diam_312_avoiding",
    "diam_231_avoiding",
    "diam_low_family",
    "low_family_perm",
    "twelve_splits",
    "twentyone_iota_forms",
    "low_family_forms",
]


@dataclass(frozen=True)
class DiameterTriple:
    """Diameters of the three graphs on R(pi): full, commutation, braid."""

    g: int
    c: int
    b: int

    def as_dict(self) -> dict:
        return {"g": self.g, "c": self.c, "b": self.b}


ZERO_TRIPLE = DiameterTriple(0, 0, 0)


@dataclass(frozen=True)
class DiameterBounds:
    """Bounds for 21[alpha, iota_b]: exact for C, an interval for G and B."""

    g_lower: int
    g_upper: int
    c_exact: int
    b_lower: int
    b_upper: int

    def contains(self, t: DiameterTriple) -> bool:
        return (
            self.g_lower <= t.g <= self.g_upper
            and t.c == self.c_exact
            and self.b_lower <= t.b <= self.b_upper
        )


def diam_12(
    da: DiameterTriple, db: DiameterTriple, la: int, lb: int
) -> DiameterTriple:
    """Diameters of 12[alpha, beta] from the block diameters and lengths."""
    return DiameterTriple(
        da.g + db.g + la * lb,
        da.c + db.c,
        da.b + db.b + la * lb,
    )


def bounds_21_iota(da: DiameterTriple, la: int, a: int, b: int) -> DiameterBounds:
    """Diameter bounds for 21[alpha, iota_b], |alpha| = a >= 1, b >= 1."""
    if a < 1 or b < 1:
        raise PreconditionError("bounds need a >= 1 and b >= 1")
    gap = comb(a, 2) * comb(b, 2)
    g_base = da.g + la * b * (a - 1)
    b_base = da.b + la * b * (a - 2)
    return DiameterBounds(
        g_lower=g_base + gap,
        g_upper=g_base + 2 * gap,
        c_exact=da.c + la * b,
        b_lower=b_base + gap,
        b_upper=b_base + 2 * gap,
    )


def diam_21_single(da: DiameterTriple, la: int, a: int) -> DiameterTriple:
    """Exact diameters of 21[alpha, 1]; the b = 1 case has no bound gap."""
    return DiameterTriple(
        da.g + la * (a - 1),
        da.c + la,
        da.b + la * (a - 2),
    )


def delta_recursion(n: int) -> DiameterTriple:
    """Diameters for the longest permutation of size n, iterated from n = 1.

    >>> delta_recursion(5)
    DiameterTriple(g=25, c=10, b=15)
    """
    if n < 1:
        raise PreconditionError("n must be at least 1")
    g = c = b = 0
    for k in range(1, n):
        step = comb(k, 2)
        g += (k - 1) * step
        c += step
        b += (k - 2) * step
    return DiameterTriple(g, c, b)


@lru_cache(maxsize=None)
def diam_312_avoiding(p: Perm) -> DiameterTriple:
    """Exact diameters for a 312-avoider via the entry-1 split.

    Both split parts avoid 312 again, so the recursion never needs a
    graph; the brute-force check lives in the tests.
    """
    if len(p) <= 1:
        return ZERO_TRIPLE
    left, right, m = decompose_312(p)
    dl, dr = diam_312_avoiding(left), diam_312_avoiding(right)
    ll, lr = left.length(), right.length()
    both = (m - 1) * (ll + lr)
    return DiameterTriple(
        dl.g + dr.g + both + ll * (lr - 1),
        dl.c + dr.c + ll,
        dl.b + dr.b + both + ll * (lr - 2),
    )


@lru_cache(maxsize=None)
def diam_231_avoiding(p: Perm) -> DiameterTriple:
    """Exact diameters for a 231-avoider via the entry-n split."""
    if len(p) <= 1:
        return ZERO_TRIPLE
    left, right, m = decompose_231(p)
    dl, dr = diam_231_avoiding(left), diam_231_avoiding(right)
    ll, lr = left.length(), right.length()
    both = (len(p) - m) * (ll + lr)
    return DiameterTriple(
        dl.g + dr.g + both + lr * (ll - 1),
        dl.c + dr.c + lr,
        dl.b + dr.b + both + lr * (ll - 2),
    )


def diam_low_family(a: int, b: int, c: int = 0, d: int = 0) -> int:
    """diam(G) for 12[iota_c, 21[iota_a, iota_b], iota_d]: C(a,2)C(b,2).

    The identity wrappers do not change the diameter.
    """
    if a < 2 or b < 2:
        raise PreconditionError("the lower-bound family needs a, b >= 2")
    if c < 0 or d < 0:
        raise PreconditionError("wrapper sizes must be nonnegative")
    return comb(a, 2) * comb(b, 2)


def low_family_perm(a: int, b: int, c: int = 0, d: int = 0) -> Perm:
    """The permutation 12[iota_c, 21[iota_a, iota_b], iota_d]."""
    core = inflate(Perm((2, 1)), [identity(a), identity(b)])
    with_d = inflate(Perm((1, 2)), [core, identity(d)])
    return inflate(Perm((1, 2)), [identity(c), with_d])


# ---------------------------------------------------------------------------
# decomposition detectors


def twelve_splits(p: Perm) -> list[tuple[Perm, Perm]]:
    """All ways to write p = 12[alpha, beta] with both blocks nonempty."""
    n = len(p)
    out = []
    top = 0
    for k in range(1, n):
        top = max(top, p[k - 1])
        if top == k:
            alpha = Perm(p[:k])
            beta = Perm(v - k for v in p[k:])
            out.append((alpha, beta))
    return out


def twentyone_iota_forms(p: Perm) -> list[tuple[Perm, int]]:
    """All ways to write p = 21[alpha, iota_b] with |alpha| >= 1, b >= 1."""
    n = len(p)
    out = []
    for b in range(1, n):
        a = n - b
        if tuple(p[a:]) == tuple(range(1, b + 1)) and min(p[:a]) == b + 1:
            out.append((Perm(v - b for v in p[:a]), b))
    return out


def low_family_forms(p: Perm) -> list[tuple[int, int, int, int]]:
    """All (a, b, c, d) with p = 12[iota_c, 21[iota_a, iota_b], iota_d]."""
    n = len(p)
    out = []
    for c in range(0, n):
        if tuple(p[:c]) != tuple(range(1, c + 1)):
            break
        for d in range(0, n - c):
            if tuple(p[n - d :]) != tuple(range(n - d + 1, n + 1)):
                continue
            mid = [v - c for v in p[c : n - d]]
            m = len(mid)
            for a in range(2, m - 1):
                b = m - a
                if b < 2:
                    continue
                expect = list(range(b + 1, b + a + 1)) + list(range(1, b + 1))
                if mid == expect:
                    out.append((a, b, c, d))
    return out
