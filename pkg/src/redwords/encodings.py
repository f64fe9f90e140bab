"""Encodings of reduced words for inflations by 12 and by 21.

Words of R(12[alpha, beta]) are encoded as shuffles of an underlined
reduced word of alpha with an overlined reduced word of beta (the set U).
Words of R(21[alpha, beta]) additionally interleave a ballot sequence over
1..a with b copies of each letter, subject to two prefix-count conditions
(the set V).  The decoding maps eta and psi land exactly in R(pi), move
for move.

Letters are packed one per byte: a plain letter j is stored as j, an
underlined j as UNDER + j, an overlined j as OVER + j.  Text form uses
sigils: ``j``, ``_j``, ``^j``, whitespace separated.
"""

from __future__ import annotations

import random
from math import comb
from itertools import combinations
from typing import Iterable, Sequence

from .errors import PreconditionError, TooLargeError
from .perms import Perm
from .wordgraphs import EdgeKind, LabeledGraph, graph_from_payloads
from .words import DEFAULT_WORD_CAP, Word, words_of

__all__ = [
    "UNDER",
    "OVER",
    "under",
    "over",
    "is_plain",
    "is_under",
    "is_over",
    "letter_value",
    "render_encoded",
    "parse_encoded",
    "shuffles",
    "build_U",
    "eta",
    "shift",
    "ballot_sequences",
    "is_ballot",
    "f_map",
    "f_inverse",
    "build_V",
    "psi",
    "u_neighbors",
    "v_neighbors",
    "encoded_edges",
    "build_U_graph",
    "build_V_graph",
    "stats_21",
    "path_lemma_targets",
    "path_to_u_xtilde",
    "path_to_xtilde_u",
    "path_21_iota",
    "random_v_word",
]

UNDER = 100
OVER = 200


def under(j: int) -> int:
    return UNDER + j


def over(j: int) -> int:
    return OVER + j


def is_plain(letter: int) -> bool:
    return letter < UNDER


def is_under(letter: int) -> bool:
    return UNDER <= letter < OVER


def is_over(letter: int) -> bool:
    return letter >= OVER


def letter_value(letter: int) -> int:
    if letter >= OVER:
        return letter - OVER
    if letter >= UNDER:
        return letter - UNDER
    return letter


def render_encoded(w: Iterable[int]) -> str:
    """Sigil text: plain ``j``, underlined ``_j``, overlined ``^j``.

    >>> render_encoded(bytes([under(2), under(1), over(1), 1, 1, 2]))
    '_2 _1 ^1 1 1 2'
    """
    parts = []
    for letter in w:
        if is_over(letter):
            parts.append(f"^{letter - OVER}")
        elif is_under(letter):
            parts.append(f"_{letter - UNDER}")
        else:
            parts.append(str(letter))
    return " ".join(parts) if parts else "e"


def parse_encoded(text: str) -> bytes:
    out = bytearray()
    text = text.strip()
    if not text or text == "e":
        return b""
    for tok in text.split():
        if tok.startswith("_"):
            out.append(UNDER + int(tok[1:]))
        elif tok.startswith("^"):
            out.append(OVER + int(tok[1:]))
        else:
            out.append(int(tok))
    return bytes(out)


def shuffles(u: Sequence[int], v: Sequence[int]) -> tuple[bytes, ...]:
    """Every interleaving of u and v that preserves each internal order."""
    u = bytes(u)
    v = bytes(v)
    k, l = len(u), len(v)
    seen = set()
    for upos in combinations(range(k + l), k):
        word = bytearray(k + l)
        us = set(upos)
        iu = iv = 0
        for i in range(k + l):
            if i in us:
                word[i] = u[iu]
                iu += 1
            else:
                word[i] = v[iv]
                iv += 1
        seen.add(bytes(word))
    return tuple(sorted(seen))


# ---------------------------------------------------------------------------
# 12-inflations: the set U and the map eta


def build_U(
    alpha: Perm, beta: Perm, cap: int | None = DEFAULT_WORD_CAP
) -> tuple[bytes, ...]:
    """All shuffles of underlined R(alpha) with overlined R(beta)."""
    wa = words_of(alpha, cap)
    wb = words_of(beta, cap)
    la, lb = alpha.length(), beta.length()
    total = len(wa) * len(wb) * comb(la + lb, la)
    if cap is not None and total > cap:
        raise TooLargeError(f"|U| = {total} exceeds cap {cap}")
    out = []
    for u in wa:
        uu = bytes(UNDER + x for x in u)
        for v in wb:
            vv = bytes(OVER + x for x in v)
            out.extend(shuffles(uu, vv))
    return tuple(sorted(set(out)))


def eta(w: Iterable[int], a: int) -> Word:
    """Decode a U-word: underlined j maps to j, overlined j to j + a.

    >>> from redwords.words import word_str
    >>> word_str(eta(parse_encoded("^1 _1 ^2 ^1"), a=2))
    '3143'
    """
    out = bytearray()
    for letter in w:
        if is_under(letter):
            out.append(letter - UNDER)
        elif is_over(letter):
            out.append(letter - OVER + a)
        else:
            raise PreconditionError("U-words contain no plain letters")
    return bytes(out)


def shift(w: Iterable[int]) -> int:
    """Pairs i < i' with w_i underlined and w_i' overlined."""
    count = 0
    unders_seen = 0
    for letter in w:
        if is_under(letter):
            unders_seen += 1
        elif is_over(letter):
            count += unders_seen
    return count


# ---------------------------------------------------------------------------
# ballot sequences and the bijection f


def ballot_sequences(a: int, b: int) -> tuple[bytes, ...]:
    """All rearrangements of {1^b, ..., a^b} whose prefixes keep N_1 >= N_2 >= ...

    >>> [w.hex() for w in ballot_sequences(2, 1)]
    ['0102']
    """
    if a < 0 or b < 0:
        raise PreconditionError("a and b must be nonnegative")
    total = a * b
    out: list[bytes] = []
    counts = [0] * (a + 1)
    word = bytearray()

    def rec(placed: int) -> None:
        if placed == total:
            out.append(bytes(word))
            return
        for j in range(1, a + 1):
            if counts[j] < b and (j == 1 or counts[j - 1] > counts[j]):
                counts[j] += 1
                word.append(j)
                rec(placed + 1)
                word.pop()
                counts[j] -= 1

    rec(0)
    return tuple(out)


def is_ballot(x: Iterable[int]) -> bool:
    counts: dict[int, int] = {}
    for letter in x:
        counts[letter] = counts.get(letter, 0) + 1
        if letter > 1 and counts.get(letter - 1, 0) < counts[letter]:
            return False
    return True


def _infer_b(w: Iterable[int]) -> int:
    counts: dict[int, int] = {}
    for letter in w:
        if is_plain(letter):
            counts[letter] = counts.get(letter, 0) + 1
    if not counts:
        return 0
    values = set(counts.values())
    if len(values) != 1:
        raise PreconditionError("plain letters do not have equal multiplicity")
    return values.pop()


def f_map(w: Iterable[int], b: int | None = None) -> bytes:
    """Replace plain letter j at prefix count c by b - c; tagged letters stay.

    The plain subsequence of a ballot sequence maps to a reverse ballot
    sequence; f is a bijection.

    >>> f_map(bytes([1, 1, 2, 3, 2, 3])).hex()
    '020102020101'
    """
    w = bytes(w)
    if b is None:
        b = _infer_b(w)
    counts: dict[int, int] = {}
    out = bytearray()
    for letter in w:
        if is_plain(letter):
            c = counts.get(letter, 0)
            out.append(b - c)
            counts[letter] = c + 1
        else:
            out.append(letter)
    return bytes(out)


def f_inverse(z: Iterable[int], b: int | None = None) -> bytes:
    """Inverse of f_map: rebuild the unique ballot word with this image."""
    z = bytes(z)
    if b is None:
        b = _infer_b(z)
    counts: dict[int, int] = {}
    out = bytearray()
    for letter in z:
        if not is_plain(letter):
            out.append(letter)
            continue
        target = b - letter
        j = 1
        while counts.get(j, 0) != target:
            j += 1
        out.append(j)
        counts[j] = counts.get(j, 0) + 1
    return bytes(out)


# ---------------------------------------------------------------------------
# 21-inflations: the set V and the map psi


def build_V(
    alpha: Perm, beta: Perm, cap: int | None = DEFAULT_WORD_CAP
) -> tuple[bytes, ...]:
    """The restricted shuffles encoding R(21[alpha, beta]).

    A word interleaves a ballot sequence over 1..a (b copies each), an
    underlined word of R(alpha) and an overlined word of R(beta), subject
    to the placement conditions: an underlined j needs equal prefix counts
    of plain j and j+1; an overlined j needs the same in the f-image.
    """
    a, b = len(alpha), len(beta)
    wa = words_of(alpha, cap)
    wb = words_of(beta, cap)
    out: list[bytes] = []
    for u in wa:
        for v in wb:
            _restricted_shuffles(u, v, a, b, out, cap)
    return tuple(sorted(out))


def _restricted_shuffles(
    u: Word, v: Word, a: int, b: int, out: list[bytes], cap: int | None
) -> None:
    total = a * b + len(u) + len(v)
    counts = [0] * (a + 2)
    fcounts = [0] * (b + 2)
    word = bytearray()

    def rec(iu: int, iv: int) -> None:
        if len(word) == total:
            if cap is not None and len(out) >= cap:
                raise TooLargeError(f"|V| exceeds cap {cap}")
            out.append(bytes(word))
            return
        for j in range(1, a + 1):
            if counts[j] < b and (j == 1 or counts[j - 1] > counts[j]):
                z = b - counts[j]
                counts[j] += 1
                fcounts[z] += 1
                word.append(j)
                rec(iu, iv)
                word.pop()
                fcounts[z] -= 1
                counts[j] -= 1
        if iu < len(u):
            j = u[iu]
            if counts[j] == counts[j + 1]:
                word.append(UNDER + j)
                rec(iu + 1, iv)
                word.pop()
        if iv < len(v):
            j = v[iv]
            if fcounts[j] == fcounts[j + 1]:
                word.append(OVER + j)
                rec(iu, iv + 1)
                word.pop()

    rec(0, 0)


def psi(w: Iterable[int], b: int) -> Word:
    """Decode a V-word into a reduced word of 21[alpha, beta].

    >>> from redwords.words import word_str
    >>> word_str(psi(parse_encoded("_2 _1 ^1 1 1 2 3 2 3"), b=2))
    '431213423'
    """
    w = bytes(w)
    counts = [0] * UNDER
    fcounts = [0] * (b + 2)
    out = bytearray(len(w))
    for i, letter in enumerate(w):
        if letter < UNDER:
            c = counts[letter]
            out[i] = letter + b - c - 1
            counts[letter] = c + 1
            fcounts[b - c] += 1
        elif letter < OVER:
            j = letter - UNDER
            out[i] = j + b - counts[j]
        else:
            j = letter - OVER
            out[i] = j + fcounts[j]
    return bytes(out)


def valid_v_word(w: Iterable[int], alpha: Perm, beta: Perm) -> bool:
    """Full membership test for V_{alpha,beta}."""
    w = bytes(w)
    a, b = len(alpha), len(beta)
    plains = bytes(x for x in w if is_plain(x))
    unders = bytes(x - UNDER for x in w if is_under(x))
    overs = bytes(x - OVER for x in w if is_over(x))
    if sorted(plains) != sorted(bytes(j for j in range(1, a + 1)) * b):
        return False
    if not is_ballot(plains):
        return False
    if unders not in set(words_of(alpha)):
        return False
    if overs not in set(words_of(beta)):
        return False
    counts: dict[int, int] = {}
    fcounts: dict[int, int] = {}
    for letter in w:
        if is_under(letter):
            j = letter - UNDER
            if counts.get(j, 0) != counts.get(j + 1, 0):
                return False
        elif is_over(letter):
            j = letter - OVER
            if fcounts.get(j, 0) != fcounts.get(j + 1, 0):
                return False
        else:
            c = counts.get(letter, 0)
            counts[letter] = c + 1
            fcounts[b - c] = fcounts.get(b - c, 0) + 1
    return True


# ---------------------------------------------------------------------------
# moves on encoded words


def u_neighbors(w: bytes) -> list[tuple[bytes, EdgeKind]]:
    """All single moves on a U-word (12-inflation encoding)."""
    out = []
    n = len(w)
    for i in range(n - 1):
        x, y = w[i], w[i + 1]
        ux, uy = is_under(x), is_under(y)
        vx, vy = letter_value(x), letter_value(y)
        if ux == uy:
            legal = abs(vx - vy) > 1
        else:
            legal = True  # underlined against overlined always commutes
        if legal:
            out.append((w[:i] + bytes((y, x)) + w[i + 2 :], EdgeKind.COMMUTATION))
    for i in range(n - 2):
        x, y, z = w[i], w[i + 1], w[i + 2]
        if x == z and is_under(x) == is_under(y) and abs(letter_value(x) - letter_value(y)) == 1:
            out.append((w[:i] + bytes((y, x, y)) + w[i + 3 :], EdgeKind.LONG_BRAID))
    return out


def _v_direct_neighbors(w: bytes, b: int) -> list[tuple[bytes, EdgeKind]]:
    out = []
    n = len(w)
    counts: dict[int, int] = {}
    prefix_counts: list[dict[int, int]] = []
    for letter in w:
        prefix_counts.append(dict(counts))
        if is_plain(letter):
            counts[letter] = counts.get(letter, 0) + 1
    for i in range(n - 1):
        x, y = w[i], w[i + 1]
        swapped = w[:i] + bytes((y, x)) + w[i + 2 :]
        if is_under(x) and is_under(y) or is_over(x) and is_over(y):
            if abs(letter_value(x) - letter_value(y)) > 1:
                out.append((swapped, EdgeKind.COMMUTATION))
        elif is_plain(x) and is_plain(y):
            pre = prefix_counts[i]
            if x > y or (x < y and pre.get(x, 0) > pre.get(y, 0)):
                out.append((swapped, EdgeKind.COMMUTATION))
        elif (is_under(x) and is_over(y)) or (is_over(x) and is_under(y)):
            out.append((swapped, EdgeKind.COMMUTATION))
        elif is_under(x) and is_plain(y) or is_plain(x) and is_under(y):
            p = letter_value(x) if is_under(x) else letter_value(y)
            q = y if is_under(x) else x
            if abs(p - q) > 1 or p > q:
                out.append((swapped, EdgeKind.COMMUTATION))
        # over against plain is handled on the f-image
    for i in range(n - 2):
        x, y, z = w[i], w[i + 1], w[i + 2]
        if x == z and (
            (is_under(x) and is_under(y)) or (is_over(x) and is_over(y))
        ):
            if abs(letter_value(x) - letter_value(y)) == 1:
                out.append(
                    (w[:i] + bytes((y, x, y)) + w[i + 3 :], EdgeKind.LONG_BRAID)
                )
        if is_under(x) and is_plain(y) and is_plain(z):
            p = x - UNDER
            if y == p and z == p + 1:
                out.append(
                    (w[:i] + bytes((y, z, x)) + w[i + 3 :], EdgeKind.LONG_BRAID)
                )
        if is_plain(x) and is_plain(y) and is_under(z):
            p = z - UNDER
            if x == p and y == p + 1:
                out.append(
                    (w[:i] + bytes((z, x, y)) + w[i + 3 :], EdgeKind.LONG_BRAID)
                )
    return out


def _v_fside_neighbors(w: bytes, b: int) -> list[tuple[bytes, EdgeKind]]:
    out = []
    z = f_map(w, b)
    n = len(z)
    counts: dict[int, int] = {}
    prefix_counts: list[dict[int, int]] = []
    for letter in z:
        prefix_counts.append(dict(counts))
        if is_plain(letter):
            counts[letter] = counts.get(letter, 0) + 1
    for i in range(n - 1):
        x, y = z[i], z[i + 1]
        if is_over(x) and is_plain(y) or is_plain(x) and is_over(y):
            p = letter_value(x) if is_over(x) else letter_value(y)
            q = y if is_over(x) else x
            if abs(p - q) > 1 or p > q:
                z2 = z[:i] + bytes((y, x)) + z[i + 2 :]
                out.append((f_inverse(z2, b), EdgeKind.COMMUTATION))
    for i in range(n - 2):
        x, y, zz = z[i], z[i + 1], z[i + 2]
        if is_over(x) and is_plain(y) and is_plain(zz):
            p = x - OVER
            if y == p + 1 and zz == p:
                z2 = z[:i] + bytes((y, zz, x)) + z[i + 3 :]
                out.append((f_inverse(z2, b), EdgeKind.LONG_BRAID))
        if is_plain(x) and is_plain(y) and is_over(zz):
            p = zz - OVER
            if x == p + 1 and y == p:
                z2 = z[:i] + bytes((zz, x, y)) + z[i + 3 :]
                out.append((f_inverse(z2, b), EdgeKind.LONG_BRAID))
    return out


def v_neighbors(w: bytes, b: int) -> list[tuple[bytes, EdgeKind]]:
    """All single moves on a V-word (21-inflation encoding)."""
    return _v_direct_neighbors(w, b) + _v_fside_neighbors(w, b)


def encoded_edges(
    w: bytes, w2: bytes, family: str, b: int | None = None
) -> EdgeKind | None:
    """The kind of the move joining two encoded words, or None.

    ``family`` is "12" for U-words and "21" for V-words; the latter needs
    the block size b of beta.
    """
    if w == w2:
        return None
    if family == "12":
        neighbors = u_neighbors(w)
    elif family == "21":
        if b is None:
            raise PreconditionError("family '21' needs the beta size b")
        neighbors = v_neighbors(w, b)
    else:
        raise PreconditionError(f"unknown encoding family {family!r}")
    for cand, kind in neighbors:
        if cand == w2:
            return kind
    return None


def build_U_graph(alpha: Perm, beta: Perm, cap: int | None = DEFAULT_WORD_CAP) -> LabeledGraph:
    words = build_U(alpha, beta, cap)
    present = set(words)

    def edges():
        for w in words:
            for w2, kind in u_neighbors(w):
                if w2 > w and w2 in present:
                    yield w, w2, kind

    return graph_from_payloads(words, edges())


def build_V_graph(alpha: Perm, beta: Perm, cap: int | None = DEFAULT_WORD_CAP) -> LabeledGraph:
    words = build_V(alpha, beta, cap)
    present = set(words)
    b = len(beta)

    def edges():
        for w in words:
            for w2, kind in v_neighbors(w, b):
                if w2 > w and w2 in present:
                    yield w, w2, kind

    return graph_from_payloads(words, edges())


# ---------------------------------------------------------------------------
# statistics and explicit paths on V_{alpha, iota_b}


def stats_21(w: Iterable[int]) -> tuple[int, int, int]:
    """(Cshift, Bshift, ballot) of a word in V_{alpha, iota_b}.

    Cshift counts plain-j-before-underlined-k pairs with j not in {k, k+1},
    Bshift the pairs with j = k, and ballot the plain inversions.
    """
    w = bytes(w)
    cshift = bshift = ballot = 0
    for i, x in enumerate(w):
        if not is_plain(x):
            continue
        for y in w[i + 1 :]:
            if is_under(y):
                k = y - UNDER
                if x == k:
                    bshift += 1
                elif x != k + 1:
                    cshift += 1
            elif is_plain(y) and x > y:
                ballot += 1
    return cshift, bshift, ballot


def _normalize_blocks(word: list[int], lo: int, hi: int, emit) -> None:
    # repeatedly extract the first occurrences of 1..max into ascending runs
    pos = lo
    while pos < hi:
        m = max(word[pos:hi])
        for k in range(1, m + 1):
            q = pos
            while word[q] != k:
                q += 1
            while q > pos:
                word[q - 1], word[q] = word[q], word[q - 1]
                emit(EdgeKind.COMMUTATION)
                q -= 1
            pos += 1


def _move_under_left(word: list[int], p: int, idx: int, emit) -> None:
    # slide the underlined letter at p down to idx through a block-form prefix
    j = word[p] - UNDER
    t = p
    while t > idx:
        left = word[t - 1]
        if left == j + 1:
            # the block guarantees a plain j right before this j+1
            word[t - 2], word[t - 1], word[t] = word[t], word[t - 2], word[t - 1]
            emit(EdgeKind.LONG_BRAID)
            t -= 2
        else:
            word[t - 1], word[t] = word[t], word[t - 1]
            emit(EdgeKind.COMMUTATION)
            t -= 1


def path_to_u_xtilde(w: bytes) -> list[tuple[bytes, EdgeKind]]:
    """Edge-by-edge path from w to u x~ with x~ = (12...a)^b.

    Realizes the constructive bound: Cshift(w) + C(a,2)C(b,2) - ballot(w)
    commutation steps plus Bshift(w) long braid steps.
    """
    word = list(w)
    n = len(word)
    path: list[tuple[bytes, EdgeKind]] = []

    def emit(kind: EdgeKind) -> None:
        path.append((bytes(word), kind))

    idx = 0
    while True:
        p = None
        for t in range(idx, n):
            if is_under(word[t]):
                p = t
                break
        if p is None:
            _normalize_blocks(word, idx, n, emit)
            break
        _normalize_blocks(word, idx, p, emit)
        _move_under_left(word, p, idx, emit)
        idx += 1
    return path


def _reverse_complement(w: Iterable[int], a: int) -> bytes:
    out = bytearray()
    for letter in reversed(bytes(w)):
        if is_under(letter):
            out.append(UNDER + a - (letter - UNDER))
        elif is_over(letter):
            raise PreconditionError("paths are defined for beta = iota only")
        else:
            out.append(a + 1 - letter)
    return bytes(out)


def path_to_xtilde_u(w: bytes, a: int) -> list[tuple[bytes, EdgeKind]]:
    """Edge-by-edge path from w to x~ u, the mirror of path_to_u_xtilde.

    Reversing the word and complementing letters is a move-preserving
    involution that swaps the two targets, so the mirror path is the image
    of the direct construction.
    """
    mirrored = path_to_u_xtilde(_reverse_complement(w, a))
    return [(_reverse_complement(step, a), kind) for step, kind in mirrored]


path_lemma_targets = ("UXtilde", "XtildeU")


def path_21_iota(w: bytes, a: int, target: str) -> list[tuple[bytes, EdgeKind]]:
    """Constructive path for a word of V_{alpha, iota_b}.

    target "UXtilde" ends at u x~; "XtildeU" ends at x~ u.
    """
    if target == "UXtilde":
        return path_to_u_xtilde(w)
    if target == "XtildeU":
        return path_to_xtilde_u(w, a)
    raise PreconditionError(f"unknown path target {target!r}")


def random_v_word(alpha: Perm, b: int, rng: random.Random) -> bytes:
    """A uniformly-constructed random element of V_{alpha, iota_b}.

    At every step one of the currently legal placements is chosen at
    random; all remaining plain letters can always be placed, so the walk
    never dead-ends.
    """
    a = len(alpha)
    u = rng.choice(words_of(alpha))
    counts = [0] * (a + 2)
    word = bytearray()
    iu = 0
    total = a * b + len(u)
    while len(word) < total:
        options: list[int] = []
        for j in range(1, a + 1):
            if counts[j] < b and (j == 1 or counts[j - 1] > counts[j]):
                options.append(j)
        if iu < len(u) and counts[u[iu]] == counts[u[iu] + 1]:
            options.append(UNDER + u[iu])
        pick = rng.choice(options)
        if is_under(pick):
            iu += 1
        else:
            counts[pick] += 1
        word.append(pick)
    return bytes(word)
