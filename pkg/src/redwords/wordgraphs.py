"""Graphs on reduced words: typed edges, contraction, distances, export.

The graph on R(p) joins two words when they differ by a single move:
swapping adjacent letters j, k with |j - k| > 1 (a commutation edge), or
replacing j(j+1)j by (j+1)j(j+1) at consecutive positions (a long braid
edge).  Contracting all edges of one kind yields the quotient graphs on
commutation classes and braid classes.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Sequence

import numpy as np

from . import _bfs
from .errors import PreconditionError, TooLargeError
from .perms import Perm
from .words import DEFAULT_WORD_CAP, Word, word_str, words_of

__all__ = [
    "EdgeKind",
    "LabeledGraph",
    "DEFAULT_VERTEX_CAP",
    "build_word_graph",
    "typed_word_edges",
    "graph_from_payloads",
    "contract",
    "diameter",
    "diameter_all_pairs",
    "distances_from",
    "move_counts_along",
    "payload_label",
    "export_dot",
    "graph_json",
    "is_bipartite",
    "cycle_parity_consistent",
]

DEFAULT_VERTEX_CAP = 200_000

# pure-python all-pairs BFS is kept below this size; it doubles as the
# reference implementation the hybrid engine is tested against
_ALL_PAIRS_LIMIT = 1024


class EdgeKind(str, Enum):
    COMMUTATION = "C"
    LONG_BRAID = "B"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True, eq=False)
class LabeledGraph:
    """An undirected simple graph with typed edges and opaque payloads."""

    vertices: tuple
    edges: tuple[tuple[int, int, EdgeKind], ...]
    index: dict = field(repr=False)

    @property
    def n_vertices(self) -> int:
        return len(self.vertices)

    def edge_count(self, kind: EdgeKind | None = None) -> int:
        if kind is None:
            return len(self.edges)
        return sum(1 for _, _, k in self.edges if k is kind)

    def adjacency(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in self.vertices]
        for u, v, _ in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        for row in adj:
            row.sort()
        return adj

    def typed_adjacency(self) -> list[list[tuple[int, EdgeKind]]]:
        adj: list[list[tuple[int, EdgeKind]]] = [[] for _ in self.vertices]
        for u, v, k in self.edges:
            adj[u].append((v, k))
            adj[v].append((u, k))
        for row in adj:
            row.sort(key=lambda t: t[0])
        return adj

    def csr(self) -> tuple[np.ndarray, np.ndarray]:
        return _bfs.csr_arrays(
            len(self.vertices), [(u, v) for u, v, _ in self.edges]
        )

    def vertex_id(self, payload) -> int:
        try:
            return self.index[payload]
        except KeyError:
            raise PreconditionError(f"vertex {payload!r} not in graph") from None


def graph_from_payloads(
    payloads: Iterable,
    typed_edges: Iterable[tuple[object, object, EdgeKind]],
) -> LabeledGraph:
    """Build a LabeledGraph with vertices sorted for deterministic ids."""
    vertices = tuple(sorted(payloads))
    index = {p: i for i, p in enumerate(vertices)}
    edges = set()
    for pu, pv, k in typed_edges:
        u, v = index[pu], index[pv]
        if u == v:
            continue
        if u > v:
            u, v = v, u
        edges.add((u, v, k))
    return LabeledGraph(vertices, tuple(sorted(edges)), index)


def typed_word_edges(words: Sequence[Word]):
    """Yield (w, w', kind) for every move between words in the collection.

    Each word is scanned once: adjacent pairs for commutations, adjacent
    triples for the braid pattern; the partner is found by index lookup.
    """
    index = set(words)
    for w in words:
        length = len(w)
        for i in range(length - 1):
            a, b = w[i], w[i + 1]
            if a - b > 1 or b - a > 1:
                w2 = w[:i] + bytes((b, a)) + w[i + 2 :]
                if w2 > w and w2 in index:
                    yield w, w2, EdgeKind.COMMUTATION
        for i in range(length - 2):
            a, b, c = w[i], w[i + 1], w[i + 2]
            if a == c and (b == a + 1 or b == a - 1):
                w2 = w[:i] + bytes((b, a, b)) + w[i + 3 :]
                if w2 > w and w2 in index:
                    yield w, w2, EdgeKind.LONG_BRAID


def build_word_graph(p: Perm, cap: int | None = DEFAULT_WORD_CAP) -> LabeledGraph:
    """The graph on R(p) with commutation and long braid edges.

    >>> g = build_word_graph(Perm.parse("4231"))
    >>> g.n_vertices, g.edge_count(EdgeKind.COMMUTATION), g.edge_count(EdgeKind.LONG_BRAID)
    (6, 4, 2)
    """
    words = words_of(p, cap)
    return graph_from_payloads(words, typed_word_edges(words))


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


def contract(g: LabeledGraph, kind: EdgeKind) -> LabeledGraph:
    """Contract every edge of the given kind.

    New vertices are the connected components of the chosen subgraph, with
    payload the sorted tuple of member payloads; surviving edges are the
    other kind, deduplicated and with loops dropped.
    """
    uf = _UnionFind(g.n_vertices)
    for u, v, k in g.edges:
        if k is kind:
            uf.union(u, v)
    members: dict[int, list] = {}
    for i in range(g.n_vertices):
        members.setdefault(uf.find(i), []).append(i)
    payload_of = {
        root: tuple(sorted(g.vertices[i] for i in idxs))
        for root, idxs in members.items()
    }
    typed = (
        (payload_of[uf.find(u)], payload_of[uf.find(v)], k)
        for u, v, k in g.edges
        if k is not kind
    )
    return graph_from_payloads(payload_of.values(), typed)


def distances_from(g: LabeledGraph, src: int) -> list[int]:
    """BFS distance list from one vertex id; -1 marks unreachable."""
    dist = [-1] * g.n_vertices
    dist[src] = 0
    adj = g.adjacency()
    queue = deque([src])
    while queue:
        u = queue.popleft()
        for v in adj[u]:
            if dist[v] < 0:
                dist[v] = dist[u] + 1
                queue.append(v)
    return dist


def diameter_all_pairs(g: LabeledGraph) -> int:
    """Reference diameter: max eccentricity over every BFS source."""
    adj = g.adjacency()
    n = g.n_vertices
    if n == 0:
        raise PreconditionError("diameter of the empty graph is undefined")
    best = 0
    for src in range(n):
        dist = [-1] * n
        dist[src] = 0
        queue = deque([src])
        far = 0
        while queue:
            u = queue.popleft()
            far = dist[u]
            for v in adj[u]:
                if dist[v] < 0:
                    dist[v] = dist[u] + 1
                    queue.append(v)
        if min(dist) < 0:
            raise PreconditionError("graph is not connected")
        best = max(best, far)
    return best


def diameter(
    g: LabeledGraph,
    vertex_cap: int | None = DEFAULT_VERTEX_CAP,
    threads: int | None = None,
    candidates=None,
) -> int:
    """Exact diameter of a connected graph.

    Refuses graphs above ``vertex_cap`` (pass None to lift the cap).  Small
    graphs use all-pairs BFS; larger ones the pruned engine in _bfs, which
    computes the same maximum eccentricity.  ``candidates`` optionally
    restricts eccentricity sources to an orbit transversal of a known
    automorphism.
    """
    n = g.n_vertices
    if vertex_cap is not None and n > vertex_cap:
        raise TooLargeError(
            f"graph has {n} vertices, above the diameter cap {vertex_cap}"
        )
    if n == 0:
        raise PreconditionError("diameter of the empty graph is undefined")
    if n <= _ALL_PAIRS_LIMIT and candidates is None:
        return diameter_all_pairs(g)
    indptr, indices = g.csr()
    return _bfs.exact_diameter(
        indptr, indices, n, threads=threads, candidates=candidates
    )


def move_counts_along(g: LabeledGraph, u_payload, v_payload) -> tuple[int, int]:
    """Per-kind edge counts along one shortest path from u to v.

    The path is made deterministic by always taking the lowest-id parent.
    Returns (commutation, long_braid); the sum is d(u, v).
    """
    src = g.vertex_id(u_payload)
    dst = g.vertex_id(v_payload)
    tadj = g.typed_adjacency()
    parent: dict[int, tuple[int, EdgeKind] | None] = {src: None}
    level = [src]
    while level and dst not in parent:
        nxt = []
        for u in sorted(level):
            for v, k in tadj[u]:
                if v not in parent:
                    parent[v] = (u, k)
                    nxt.append(v)
        level = nxt
    if dst not in parent:
        raise PreconditionError("vertices are not connected")
    comm = braid = 0
    cur = dst
    while parent[cur] is not None:
        cur, kind = parent[cur]
        if kind is EdgeKind.COMMUTATION:
            comm += 1
        else:
            braid += 1
    return comm, braid


def payload_label(payload) -> str:
    """Text label for a vertex payload (a word or a class of words)."""
    if isinstance(payload, bytes):
        return word_str(payload)
    if isinstance(payload, tuple):
        return "{" + ",".join(payload_label(p) for p in payload) + "}"
    return str(payload)


def export_dot(g: LabeledGraph) -> str:
    """DOT text; long braid edges are drawn with double pen width."""
    lines = ["graph reducedwords {"]
    for payload in g.vertices:
        lines.append(f'  "{payload_label(payload)}";')
    for u, v, k in g.edges:
        lu, lv = payload_label(g.vertices[u]), payload_label(g.vertices[v])
        style = " [penwidth=2]" if k is EdgeKind.LONG_BRAID else ""
        lines.append(f'  "{lu}" -- "{lv}"{style};')
    lines.append("}")
    return "\n".join(lines) + "\n"


def graph_json(g: LabeledGraph) -> dict:
    """JSON-ready dump with stable ordering."""
    return {
        "vertices": [payload_label(p) for p in g.vertices],
        "edges": [[u, v, str(k)] for u, v, k in g.edges],
    }


def is_bipartite(g: LabeledGraph) -> bool:
    color = [-1] * g.n_vertices
    adj = g.adjacency()
    for start in range(g.n_vertices):
        if color[start] >= 0:
            continue
        color[start] = 0
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for v in adj[u]:
                if color[v] < 0:
                    color[v] = color[u] ^ 1
                    queue.append(v)
                elif color[v] == color[u]:
                    return False
    return True


def cycle_parity_consistent(g: LabeledGraph) -> bool:
    """Check that every cycle uses an even number of each edge kind.

    BFS assigns each vertex a (commutation parity, braid parity) pair;
    every non-tree edge must close a cycle consistently.
    """
    tadj = g.typed_adjacency()
    parity: list[tuple[int, int] | None] = [None] * g.n_vertices
    for start in range(g.n_vertices):
        if parity[start] is not None:
            continue
        parity[start] = (0, 0)
        queue = deque([start])
        while queue:
            u = queue.popleft()
            pc, pb = parity[u]
            for v, k in tadj[u]:
                qc = pc ^ (1 if k is EdgeKind.COMMUTATION else 0)
                qb = pb ^ (1 if k is EdgeKind.LONG_BRAID else 0)
                if parity[v] is None:
                    parity[v] = (qc, qb)
                    queue.append(v)
                elif parity[v] != (qc, qb):
                    return False
    return True
