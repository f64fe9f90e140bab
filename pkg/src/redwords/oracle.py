"""Brute-force graph measurements used to validate the closed formulas."""

from __future__ import annotations

import numpy as np

from .errors import TooLargeError
from .formulas import DiameterTriple
from .perms import Perm, symmetry
from .wordgraphs import (
    DEFAULT_VERTEX_CAP,
    EdgeKind,
    LabeledGraph,
    build_word_graph,
    contract,
    diameter,
)
from .words import DEFAULT_WORD_CAP

__all__ = ["graphs_of", "brute_triple", "word_automorphisms", "orbit_transversal"]


def graphs_of(
    p: Perm, cap: int | None = DEFAULT_WORD_CAP
) -> tuple[LabeledGraph, LabeledGraph, LabeledGraph]:
    """(G, C, B) for one permutation: the word graph and both quotients."""
    g = build_word_graph(p, cap)
    c = contract(g, EdgeKind.COMMUTATION)
    b = contract(g, EdgeKind.LONG_BRAID)
    return g, c, b


def word_automorphisms(p: Perm) -> list:
    """Kind-preserving word maps that fix R(p) setwise.

    Reversal when p is an involution, letter complement when p is its own
    half-turn image, and their composition when only the product symmetry
    fixes p.  Eccentricities are constant on the orbits of these maps.
    """
    n = len(p)
    maps = []
    if symmetry(p, "R1") == p:
        maps.append(lambda w: w[::-1])
    if symmetry(p, "R180") == p:
        maps.append(lambda w: bytes(n - x for x in w))
    if symmetry(p, "RM1") == p and len(maps) < 2:
        maps.append(lambda w: bytes(n - x for x in reversed(w)))
    return maps


def _map_payload(payload, fn):
    if isinstance(payload, bytes):
        return fn(payload)
    return tuple(sorted(fn(w) for w in payload))


def orbit_transversal(g: LabeledGraph, maps) -> np.ndarray | None:
    """Ids of the orbit-minimal vertices under the given payload maps."""
    if not maps:
        return None
    reps = []
    for i, payload in enumerate(g.vertices):
        orbit = {payload}
        frontier = [payload]
        while frontier:
            nxt = []
            for q in frontier:
                for fn in maps:
                    img = _map_payload(q, fn)
                    if img not in orbit:
                        orbit.add(img)
                        nxt.append(img)
            frontier = nxt
        if payload == min(orbit):
            reps.append(i)
    return np.asarray(reps, dtype=np.int64)


_g_diam_cache: dict[Perm, int] = {}


def graph_diameter(
    p: Perm,
    word_cap: int | None = DEFAULT_WORD_CAP,
    threads: int | None = None,
    graph: LabeledGraph | None = None,
) -> int:
    """diam(G_p) alone, applying automorphism reduction when available."""
    if p in _g_diam_cache:
        return _g_diam_cache[p]
    g = build_word_graph(p, word_cap) if graph is None else graph
    maps = word_automorphisms(p)
    candidates = (
        orbit_transversal(g, maps) if maps and g.n_vertices > 4096 else None
    )
    value = diameter(g, vertex_cap=None, threads=threads, candidates=candidates)
    _g_diam_cache[p] = value
    return value


_triple_cache: dict[Perm, DiameterTriple] = {}


def brute_triple(
    p: Perm,
    word_cap: int | None = DEFAULT_WORD_CAP,
    vertex_cap: int | None = DEFAULT_VERTEX_CAP,
    threads: int | None = None,
) -> DiameterTriple:
    """All three diameters by BFS, cached per permutation."""
    if p in _triple_cache:
        return _triple_cache[p]
    g, c, b = graphs_of(p, word_cap)
    if vertex_cap is not None and g.n_vertices > vertex_cap:
        raise TooLargeError(
            f"graph has {g.n_vertices} vertices, above the cap {vertex_cap}"
        )
    maps = word_automorphisms(p)

    def cands(graph):
        if maps and graph.n_vertices > 4096:
            return orbit_transversal(graph, maps)
        return None

    triple = DiameterTriple(
        graph_diameter(p, word_cap, threads, graph=g),
        diameter(c, vertex_cap, threads),
        diameter(b, vertex_cap, threads, candidates=cands(b)),
    )
    _triple_cache[p] = triple
    return triple
