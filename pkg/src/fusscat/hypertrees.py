"""Unlabeled uniform hypertrees via their bicolored incidence trees.

A hypertree with n hyperedges of size r+1 is stored as its incidence
tree: one white vertex per hyperedge (degree exactly r+1) and one black
vertex per hypergraph vertex (any degree). Isomorphism of hypertrees is
color-preserving isomorphism of incidence trees. Every leaf of an
incidence tree is black, so the diameter is even and the tree center is
a single vertex; canonical forms are rooted there.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

CanonicalCode = str


@dataclass(frozen=True)
class Hypertree:
    """Incidence tree of an (r+1)-uniform hypertree.

    Vertices 0..white_count-1 are white (hyperedges); the remaining
    r*white_count+1 are black (hypergraph vertices).
    """

    r: int
    white_count: int
    adj: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        """Number of hyperedges."""
        return self.white_count

    @property
    def vertex_count(self) -> int:
        return len(self.adj)

    def is_white(self, v: int) -> bool:
        return v < self.white_count

    def black_vertices(self) -> range:
        return range(self.white_count, len(self.adj))

    def validate(self) -> None:
        n, total = self.white_count, len(self.adj)
        if total != n + self.r * n + 1:
            raise ValueError("wrong vertex count for an (r+1)-uniform hypertree")
        edges = sum(len(nb) for nb in self.adj)
        if edges != 2 * (self.r + 1) * n:
            raise ValueError("wrong edge count")
        for w in range(n):
            if len(self.adj[w]) != self.r + 1:
                raise ValueError(f"white vertex {w} has degree {len(self.adj[w])}")
            if any(u < n for u in self.adj[w]):
                raise ValueError("white vertices must only touch black vertices")
        # connected + |E| = |V|-1  =>  tree
        seen = {0 if n else n}
        stack = [next(iter(seen))]
        while stack:
            u = stack.pop()
            for v in self.adj[u]:
                if v not in seen:
                    seen.add(v)
                    stack.append(v)
        if len(seen) != total:
            raise ValueError("incidence graph is not connected")

    @classmethod
    def from_hyperedges(cls, r: int, hyperedges: Iterable[Iterable[int]]) -> Hypertree:
        """Build the incidence tree from hyperedges given as vertex labels."""
        edges = [tuple(e) for e in hyperedges]
        labels = sorted({v for e in edges for v in e})
        if not edges:
            t = cls(r=r, white_count=0, adj=((),))
            t.validate()
            return t
        index = {lab: len(edges) + i for i, lab in enumerate(labels)}
        adj: list[list[int]] = [[] for _ in range(len(edges) + len(labels))]
        for w, e in enumerate(edges):
            for v in e:
                adj[w].append(index[v])
                adj[index[v]].append(w)
        t = cls(r=r, white_count=len(edges), adj=tuple(tuple(a) for a in adj))
        t.validate()
        return t


# ---------------------------------------------------------------------------
# Canonical codes and automorphism orders
# ---------------------------------------------------------------------------


def _center(adj: tuple[tuple[int, ...], ...]) -> int:
    """Unique center of an incidence tree (all leaves black => even diameter)."""
    n = len(adj)
    if n == 1:
        return 0
    deg = [len(a) for a in adj]
    layer = [v for v in range(n) if deg[v] == 1]
    removed = len(layer)
    while removed < n:
        nxt = []
        for u in layer:
            deg[u] = 0
            for v in adj[u]:
                if deg[v] > 0:
                    deg[v] -= 1
                    if deg[v] == 1:
                        nxt.append(v)
        removed += len(nxt)
        layer = nxt
    if len(layer) != 1:
        raise AssertionError("incidence tree has no unique center")
    return layer[0]


def _rooted_code(
    v: int, parent: int, adj: tuple[tuple[int, ...], ...], n_white: int
) -> tuple[str, int]:
    """AHU code of the subtree at v plus its rooted automorphism order.

    The automorphism order is the product of the children's orders times
    k! for every group of k identical child codes.
    """
    children = [u for u in adj[v] if u != parent]
    results = sorted(_rooted_code(u, v, adj, n_white) for u in children)
    aut = 1
    run = 0
    prev_code = None
    for code, sub_aut in results:
        aut *= sub_aut
        if code == prev_code:
            run += 1
            aut *= run + 1  # builds k! incrementally over a run of k equals
        else:
            run = 0
            prev_code = code
    color = "w" if v < n_white else "b"
    return color + "(" + "".join(code for code, _ in results) + ")", aut


@lru_cache(maxsize=None)
def _canonize(adj: tuple[tuple[int, ...], ...], n_white: int) -> tuple[str, int]:
    return _rooted_code(_center(adj), -1, adj, n_white)


def canonical_code(t: Hypertree) -> CanonicalCode:
    """Isomorphism-invariant code: equal iff the hypertrees are isomorphic."""
    return _canonize(t.adj, t.white_count)[0]


def automorphism_order(t: Hypertree) -> int:
    """Order of the color-preserving automorphism group of the incidence tree
    (equivalently, of the hypertree's hypergraph automorphism group)."""
    return _canonize(t.adj, t.white_count)[1]


# ---------------------------------------------------------------------------
# Enumeration up to isomorphism
# ---------------------------------------------------------------------------


def _attach(
    colors: list[bool], adj: list[list[int]], v: int, r: int
) -> tuple[list[bool], list[list[int]]]:
    """New tree with a fresh hyperedge glued to black vertex v."""
    cs = list(colors)
    new_adj = [list(a) for a in adj]
    w = len(cs)
    cs.append(True)
    new_adj.append([v])
    new_adj[v].append(w)
    for _ in range(r):
        b = len(cs)
        cs.append(False)
        new_adj.append([w])
        new_adj[w].append(b)
    return cs, new_adj


def _loose_code(colors: list[bool], adj: list[list[int]]) -> str:
    """Canonical code for a working tree whose whites are not yet relabeled."""

    def rec(v: int, parent: int) -> str:
        subs = sorted(rec(u, v) for u in adj[v] if u != parent)
        return ("w" if colors[v] else "b") + "(" + "".join(subs) + ")"

    # center via the same peeling as _center, on list adjacency
    n = len(adj)
    if n == 1:
        return rec(0, -1)
    deg = [len(a) for a in adj]
    layer = [v for v in range(n) if deg[v] == 1]
    removed = len(layer)
    while removed < n:
        nxt = []
        for u in layer:
            deg[u] = 0
            for v in adj[u]:
                if deg[v] > 0:
                    deg[v] -= 1
                    if deg[v] == 1:
                        nxt.append(v)
        removed += len(nxt)
        layer = nxt
    return rec(layer[0], -1)


def _to_hypertree(r: int, colors: list[bool], adj: list[list[int]]) -> Hypertree:
    """Relabel a working tree to the whites-first vertex convention."""
    whites = [v for v in range(len(colors)) if colors[v]]
    blacks = [v for v in range(len(colors)) if not colors[v]]
    new_id = {old: i for i, old in enumerate(whites + blacks)}
    out: list[tuple[int, ...]] = [()] * len(colors)
    for old, nbs in enumerate(adj):
        out[new_id[old]] = tuple(sorted(new_id[u] for u in nbs))
    t = Hypertree(r=r, white_count=len(whites), adj=tuple(out))
    t.validate()
    return t


def enumerate_hypertrees(r: int, n: int) -> list[Hypertree]:
    """One representative per isomorphism class of (r+1)-uniform hypertrees
    on n hyperedges, sorted by canonical code.

    Grows trees one hyperedge at a time: every hypertree with n >= 1 edges
    has a pendant hyperedge, so gluing a fresh hyperedge to every black
    vertex of every (n-1)-edge class and deduplicating by canonical code
    reaches every class.
    """
    if r < 1:
        raise ValueError("r must be a positive integer")
    if n < 0:
        raise ValueError("n must be nonnegative")
    level: dict[str, tuple[list[bool], list[list[int]]]] = {"b()": ([False], [[]])}
    for _ in range(n):
        nxt: dict[str, tuple[list[bool], list[list[int]]]] = {}
        for colors, adj in level.values():
            for v in range(len(colors)):
                if colors[v]:
                    continue
                cs, na = _attach(colors, adj, v, r)
                code = _loose_code(cs, na)
                if code not in nxt:
                    nxt[code] = (cs, na)
        level = nxt
    trees = [_to_hypertree(r, colors, adj) for colors, adj in level.values()]
    return sorted(trees, key=canonical_code)
