"""Codimension-two statistics and the diameter-bounds classification.

For a permutation pi, L2 counts the disjoint pairs of inversions (I2)
together with the 321-pattern triples (I3).  The conjectured bounds say
half of L2 <= diam(G_pi) <= L2; every covered permutation is classified
against them with exact integer arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import TooLargeError
from .perms import Perm, all_perms, contains_pattern, count_321, inversions, symmetry
from .wordgraphs import DEFAULT_VERTEX_CAP
from .words import count_words
from .formulas import twelve_splits, twentyone_iota_forms

__all__ = [
    "L2Breakdown",
    "ConjectureReport",
    "CLASSES",
    "l2",
    "classify",
    "orbit_representative",
    "graph_diameter_of",
    "sweep",
    "at_lower_perms",
    "conjecture_3412_violations",
    "check_2413",
]

CLASSES = ("BelowLower", "AtLower", "Interior", "AtUpper", "AboveUpper")


@dataclass(frozen=True)
class L2Breakdown:
    i2: int
    i3: int

    @property
    def l2(self) -> int:
        return self.i2 + self.i3


@dataclass(frozen=True)
class ConjectureReport:
    perm: Perm
    diam_g: int | None
    breakdown: L2Breakdown | None
    klass: str
    reason: str | None = None

    def as_dict(self) -> dict:
        rec: dict = {"perm": str(self.perm)}
        if self.klass == "Skipped":
            rec["class"] = "Skipped"
            rec["reason"] = self.reason
            return rec
        rec["diam_g"] = self.diam_g
        rec["i2"] = self.breakdown.i2
        rec["i3"] = self.breakdown.i3
        rec["class"] = self.klass
        return rec


def l2(p: Perm) -> L2Breakdown:
    """Count disjoint inversion pairs and 321 triples.

    >>> l2(Perm.parse("4312"))
    L2Breakdown(i2=2, i3=2)
    """
    inv = inversions(p)
    i2 = sum(
        1
        for (a, b), (c, d) in combinations(inv, 2)
        if len({a, b, c, d}) == 4
    )
    return L2Breakdown(i2=i2, i3=count_321(p))


def classify(p: Perm, diam_g: int) -> ConjectureReport:
    """Compare a known diameter against the L2 bounds, exactly in integers.

    When the bounds collide (L2 = 0, identity-like cases) the upper-bound
    label wins.
    """
    br = l2(p)
    bound = br.l2
    if diam_g > bound:
        klass = "AboveUpper"
    elif diam_g == bound:
        klass = "AtUpper"
    elif 2 * diam_g == bound:
        klass = "AtLower"
    elif 2 * diam_g < bound:
        klass = "BelowLower"
    else:
        klass = "Interior"
    return ConjectureReport(p, diam_g, br, klass)


def orbit_representative(p: Perm) -> Perm:
    """Smallest permutation in the dihedral orbit; all share their graphs."""
    return min(p, symmetry(p, "R180"), symmetry(p, "R1"), symmetry(p, "RM1"))


_diam_cache: dict[Perm, int] = {}


def graph_diameter_of(
    p: Perm,
    vertex_cap: int | None = DEFAULT_VERTEX_CAP,
    threads: int | None = None,
    use_symmetry: bool = True,
) -> int:
    """Brute-force diam(G_p), cached per dihedral orbit representative."""
    rep = orbit_representative(p) if use_symmetry else p
    if rep not in _diam_cache:
        n = count_words(rep)
        if vertex_cap is not None and n > vertex_cap:
            raise TooLargeError(
                f"|R({rep})| = {n} exceeds the vertex cap {vertex_cap}"
            )
        from .oracle import graph_diameter

        _diam_cache[rep] = graph_diameter(rep, word_cap=None, threads=threads)
    return _diam_cache[rep]


def sweep(
    n: int,
    vertex_cap: int | None = DEFAULT_VERTEX_CAP,
    threads: int | None = None,
    use_symmetry: bool = True,
) -> list[ConjectureReport]:
    """Classify every permutation of S_n whose graph fits under the cap.

    Oversized permutations are reported as Skipped rather than dropped.
    Results come back in lexicographic order of the permutation.
    """
    reports = []
    for p in all_perms(n):
        size = count_words(p)
        if vertex_cap is not None and size > vertex_cap:
            reports.append(
                ConjectureReport(
                    p,
                    None,
                    None,
                    "Skipped",
                    reason=f"|R| = {size} exceeds vertex cap {vertex_cap}",
                )
            )
            continue
        diam_g = graph_diameter_of(
            p, vertex_cap=vertex_cap, threads=threads, use_symmetry=use_symmetry
        )
        reports.append(classify(p, diam_g))
    return reports


def at_lower_perms(reports) -> list[Perm]:
    return [r.perm for r in reports if r.klass == "AtLower"]


_PATTERN_3412 = Perm((3, 4, 1, 2))


def conjecture_3412_violations(reports) -> list[Perm]:
    """Covered permutations containing 3412 whose diameter reaches L2.

    The conjecture says containing 3412 forces a strict upper bound, so a
    non-empty result would be a counterexample.
    """
    out = []
    for r in reports:
        if r.klass == "Skipped":
            continue
        if contains_pattern(r.perm, _PATTERN_3412) and r.diam_g >= r.breakdown.l2:
            out.append(r.perm)
    return out


def check_2413() -> tuple[ConjectureReport, dict[str, bool]]:
    """The 2413 example: at the upper bound without any known reason.

    Returns its report plus the three family conditions it fails: being a
    proper 12-inflation, being 21[alpha, 1], avoiding one of 231/312.
    """
    p = Perm((2, 4, 1, 3))
    report = classify(p, graph_diameter_of(p))
    conditions = {
        "is_12_inflation": bool(twelve_splits(p)),
        "is_21_alpha_1": any(b == 1 for _, b in twentyone_iota_forms(p)),
        "avoids_231_or_312": p.avoids(Perm((2, 3, 1))) or p.avoids(Perm((3, 1, 2))),
    }
    return report, conditions
