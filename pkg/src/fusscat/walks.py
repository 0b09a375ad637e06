"""Constrained closed-walk counting on incidence trees.

A walk at a black vertex v must return to v, use every incidence-tree
edge exactly m times in each direction (away from v / toward v, with the
tree rooted at v), and never take a black-white-black immediate
backtrack. Summing these counts over vertices and isomorphism classes
with 1/|Aut| weights gives the hypergraph Fuss-Catalan numbers; that sum
is kept as an exact rational and asserted to be an integer.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterator

from .errors import BudgetExceededError, ConsistencyError
from .hypertrees import Hypertree, automorphism_order, enumerate_hypertrees

# Refuse searches whose one-direction edge budget (r+1)*n*m exceeds this.
DEFAULT_WALK_BUDGET = 18


def _check_budget(r: int, n: int, m: int, max_budget: int) -> None:
    units = (r + 1) * n * m
    if units > max_budget:
        raise BudgetExceededError(
            f"walk budget {units} = (r+1)*n*m exceeds cap {max_budget}"
        )


def _root(tree: Hypertree, v: int) -> tuple[list[int], list[list[int]]]:
    """Parent array and child lists for the incidence tree rooted at v."""
    parent = [-2] * tree.vertex_count
    children: list[list[int]] = [[] for _ in range(tree.vertex_count)]
    parent[v] = -1
    stack = [v]
    while stack:
        u = stack.pop()
        for w in tree.adj[u]:
            if parent[w] == -2:
                parent[w] = u
                children[u].append(w)
                stack.append(w)
    return parent, children


class _WalkSearch:
    """Depth-first search over directed edge budgets.

    Every non-root vertex c names its parent edge; away[c]/toward[c] hold
    the remaining crossings in each direction. subtree[c] tracks the total
    budget left on edges inside c's subtree (parent edge included): when
    the last return crossing of an edge happens while its subtree still
    has budget, that budget is stranded and the branch dies.
    """

    def __init__(self, tree: Hypertree, v: int, m: int):
        if v not in tree.black_vertices():
            raise ValueError(f"walks must start at a black vertex, got {v}")
        if m < 1:
            raise ValueError("m must be a positive integer")
        self.tree = tree
        self.v = v
        self.m = m
        self.parent, self.children = _root(tree, v)
        self.away = [m] * tree.vertex_count
        self.toward = [m] * tree.vertex_count
        self.subtree = [0] * tree.vertex_count
        for c in range(tree.vertex_count):
            if c == v:
                continue
            u = c
            while u != v:
                self.subtree[u] += 2 * m
                u = self.parent[u]
        self.total_steps = 2 * m * sum(len(ch) for ch in self.children)

    def _moves(self, u: int, prev: int) -> list[int]:
        # at a white vertex the walk may not bounce straight back
        blocked = prev if self.tree.is_white(u) else -1
        out = []
        p = self.parent[u]
        if p >= 0 and p != blocked and self.toward[u] > 0:
            out.append(p)
        for w in self.children[u]:
            if w != blocked and self.away[w] > 0:
                out.append(w)
        return out

    def _cross(self, u: int, w: int) -> bool:
        """Apply the crossing u->w; returns False if it strands budget."""
        child = w if self.parent[w] == u else u
        if child == w:
            self.away[child] -= 1
        else:
            self.toward[child] -= 1
        x = child
        while x != self.v:
            self.subtree[x] -= 1
            x = self.parent[x]
        if child == u and self.away[child] == 0 and self.subtree[child] > 0:
            return False
        return True

    def _uncross(self, u: int, w: int) -> None:
        child = w if self.parent[w] == u else u
        if child == w:
            self.away[child] += 1
        else:
            self.toward[child] += 1
        x = child
        while x != self.v:
            self.subtree[x] += 1
            x = self.parent[x]

    def count(self) -> int:
        def rec(u: int, prev: int, remaining: int) -> int:
            if remaining == 0:
                return 1
            total = 0
            for w in self._moves(u, prev):
                ok = self._cross(u, w)
                if ok:
                    total += rec(w, u, remaining - 1)
                self._uncross(u, w)
            return total

        return rec(self.v, -1, self.total_steps)

    def walks(self) -> Iterator[tuple[int, ...]]:
        path = [self.v]

        def rec(u: int, prev: int, remaining: int) -> Iterator[tuple[int, ...]]:
            if remaining == 0:
                yield tuple(path)
                return
            for w in self._moves(u, prev):
                ok = self._cross(u, w)
                if ok:
                    path.append(w)
                    yield from rec(w, u, remaining - 1)
                    path.pop()
                self._uncross(u, w)

        return rec(self.v, -1, self.total_steps)


def count_walks(
    tree: Hypertree, v: int, m: int, max_budget: int = DEFAULT_WALK_BUDGET
) -> int:
    """Number of closed walks at black vertex v using every edge m times in
    each direction with no black-white-black backtrack."""
    _check_budget(tree.r, tree.n, m, max_budget)
    if v not in tree.black_vertices():
        raise ValueError(f"walks must start at a black vertex, got {v}")
    if tree.n == 0:
        return 1  # the empty walk
    return _WalkSearch(tree, v, m).count()


def iter_walks(
    tree: Hypertree, v: int, m: int, max_budget: int = DEFAULT_WALK_BUDGET
) -> Iterator[tuple[int, ...]]:
    """The walks behind count_walks, as vertex sequences starting and ending at v."""
    _check_budget(tree.r, tree.n, m, max_budget)
    if v not in tree.black_vertices():
        raise ValueError(f"walks must start at a black vertex, got {v}")
    if tree.n == 0:
        yield (v,)
        return
    yield from _WalkSearch(tree, v, m).walks()


def fc_bruteforce(
    r: int, m: int, n: int, max_budget: int = DEFAULT_WALK_BUDGET
) -> int:
    """Hypergraph Fuss-Catalan number straight from its definition: walks
    summed over all black vertices of all hypertree classes, weighted by
    1/|Aut|. The total is a theorem-guaranteed integer, asserted here."""
    if m < 1:
        raise ValueError("m must be a positive integer")
    _check_budget(r, n, m, max_budget)
    total = Fraction(0)
    for tree in enumerate_hypertrees(r, n):
        walks = sum(count_walks(tree, v, m, max_budget) for v in tree.black_vertices())
        total += Fraction(walks, automorphism_order(tree))
    if total.denominator != 1:
        raise ConsistencyError(
            f"walk sum {total} for (r={r}, m={m}, n={n}) is not an integer"
        )
    return total.numerator


# ---------------------------------------------------------------------------
# Walk <-> word bijection on the single-hyperedge tree
# ---------------------------------------------------------------------------


def walk_to_word(walk: tuple[int, ...], tree: Hypertree) -> tuple[int, ...]:
    """Image of a single-hyperedge walk as a word: the sequence of black
    vertices visited after the start. Adjacent letters differ, the word ends
    at the start vertex and does not begin with it."""
    if tree.n != 1:
        raise ValueError("walk_to_word applies to single-hyperedge trees only")
    if len(walk) < 1 or tree.is_white(walk[0]):
        raise ValueError("walk must start at a black vertex")
    return walk[2::2]


def word_to_walk(word: tuple[int, ...], tree: Hypertree, v: int) -> tuple[int, ...]:
    """Inverse of walk_to_word: interleave the hub between the letters."""
    if tree.n != 1:
        raise ValueError("word_to_walk applies to single-hyperedge trees only")
    if not word or word[-1] != v or word[0] == v:
        raise ValueError("word must end at v and not start with it")
    hub = 0  # the unique white vertex
    walk = [v]
    for letter in word:
        walk.append(hub)
        walk.append(letter)
    return tuple(walk)
