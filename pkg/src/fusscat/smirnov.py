"""Counting Smirnov words (no equal adjacent letters) with fixed content.

A content vector gives the multiplicity of each letter. Linear counting
asks for arrangements with all adjacent letters distinct; circular
counting additionally requires the first and last letters to differ.
Dividing the circular count at content (m, ..., m) over r+1 letters by
(r+1)! gives the n=1 hypergraph Fuss-Catalan value, which seeds the
generating-function route.

The counting DP compresses states by letter symmetry: only the multiset
of remaining counts matters, plus the remaining count of the letter just
placed and of the letter banned from the final position. That keeps rows
with many letters (r = 7, 8) reachable.
"""

from __future__ import annotations

from math import factorial
from typing import Iterable, Sequence

from .errors import BudgetExceededError, ConsistencyError

ContentVector = Sequence[int]

# Term-count guard for the multivariate generating-function route.
DEFAULT_GF_TERM_CAP = 200_000


def _validate_content(content: ContentVector) -> tuple[int, ...]:
    counts = tuple(int(c) for c in content)
    if any(c < 0 for c in counts):
        raise ValueError("content counts must be nonnegative")
    return tuple(c for c in counts if c > 0)


def _arrangements(
    rest: tuple[int, ...],
    prev: int | None,
    banned: int | None,
    prev_is_banned: bool,
    memo: dict,
) -> int:
    """Arrangements of the remaining letters with no equal adjacents.

    `rest` holds the remaining counts (sorted, zeros dropped) of letters
    that are neither the letter just placed nor the banned final letter;
    `prev` and `banned` hold those two counts, or None when absent. When
    `prev_is_banned` the two letters coincide and `banned` is None. The
    word is complete when everything is placed; it is then valid unless
    its last letter (the current `prev`) is the banned one.
    """
    if not rest and not prev and not banned:
        return 0 if prev_is_banned else 1
    # A zero-count special letter can never be placed again, so its identity
    # no longer affects the future (including the final-letter ban).
    if prev == 0:
        prev, prev_is_banned = None, False
    if banned == 0:
        banned = None
    key = (rest, prev, banned, prev_is_banned)
    cached = memo.get(key)
    if cached is not None:
        return cached

    total = 0
    # Place a letter from the ordinary pool; group choices by count value.
    seen = set()
    for idx, c in enumerate(rest):
        if c in seen:
            continue
        seen.add(c)
        mult = rest.count(c)
        pool = list(rest)
        pool.remove(c)
        if prev_is_banned:
            new_banned = prev
        else:
            new_banned = banned
            if prev:
                pool.append(prev)
        total += mult * _arrangements(
            tuple(sorted(pool)), c - 1, new_banned, False, memo
        )
    # Place the banned letter itself (allowed anywhere but the final slot;
    # the base case rejects it there).
    if banned is not None:
        pool = list(rest)
        if prev:
            pool.append(prev)
        total += _arrangements(tuple(sorted(pool)), banned - 1, None, True, memo)

    memo[key] = total
    return total


def linear_smirnov_count(content: ContentVector) -> int:
    """Number of words with the given letter multiplicities and no equal
    adjacent letters. The empty content counts 1 (the empty word)."""
    counts = _validate_content(content)
    return _arrangements(tuple(sorted(counts)), None, None, False, {})


def circular_smirnov_count(content: ContentVector) -> int:
    """Linear Smirnov count restricted to first letter != last letter.

    Computed by fixing the first letter (grouped by count class) and
    carrying it through the DP as the banned final letter.
    """
    counts = _validate_content(content)
    if sum(counts) < 2:
        raise ValueError("circular counting needs total length >= 2")
    memo: dict = {}
    total = 0
    for c in sorted(set(counts)):
        mult = counts.count(c)
        pool = list(counts)
        pool.remove(c)
        total += mult * _arrangements(tuple(sorted(pool)), c - 1, None, True, memo)
    return total


def fc1(r: int, m: int) -> int:
    """FC_1 for parameters (r, m): circular Smirnov words of content
    (m, ..., m) over r+1 letters, divided by the star automorphisms (r+1)!.

    m = 0 returns 1 by the tables' convention (the walk definition would
    give the non-integer (r+1)/(r+1)! there).
    """
    if r < 1:
        raise ValueError("r must be a positive integer")
    if m < 0:
        raise ValueError("m must be nonnegative")
    if m == 0:
        return 1
    cs = circular_smirnov_count((m,) * (r + 1))
    q, rem = divmod(cs, factorial(r + 1))
    if rem:
        raise ConsistencyError(
            f"circular count {cs} not divisible by ({r}+1)! for m={m}"
        )
    return q


# ---------------------------------------------------------------------------
# Generating-function route: multivariate truncated polynomials, one degree
# cap per variable. Kept as an independent cross-check of the DP; also the
# only executable form of the circular-word generating function.
# ---------------------------------------------------------------------------

_MPoly = dict  # exponent tuple -> int coefficient


def _mv_add(a: _MPoly, b: _MPoly) -> _MPoly:
    out = dict(a)
    for e, c in b.items():
        v = out.get(e, 0) + c
        if v:
            out[e] = v
        else:
            out.pop(e, None)
    return out


def _mv_mul(a: _MPoly, b: _MPoly, cap: int) -> _MPoly:
    out: _MPoly = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            if any(x > cap for x in e):
                continue
            v = out.get(e, 0) + ca * cb
            if v:
                out[e] = v
            else:
                out.pop(e, None)
    return out


def _mv_geometric(u: _MPoly, nvars: int, cap: int) -> _MPoly:
    """Sum of u**k for k >= 0; u must have no constant term, so the sum
    terminates once u**k is empty under the caps."""
    if u.get((0,) * nvars):
        raise ValueError("geometric sum requires zero constant term")
    one = {(0,) * nvars: 1}
    acc = dict(one)
    term = one
    while True:
        term = _mv_mul(term, u, cap)
        if not term:
            return acc
        acc = _mv_add(acc, term)


def _smirnov_gf(active: Iterable[int], nvars: int, cap: int) -> _MPoly:
    """Smirnov-word generating function 1/(1 - sum x_i/(1+x_i)) restricted
    to the given set of active variables."""
    u: _MPoly = {}
    for i in active:
        for k in range(1, cap + 1):
            e = [0] * nvars
            e[i] = k
            u = _mv_add(u, {tuple(e): 1 if k % 2 == 1 else -1})
    return _mv_geometric(u, nvars, cap)


def circular_smirnov_gf_coefficient(
    r: int, m: int, max_terms: int = DEFAULT_GF_TERM_CAP
) -> int:
    """Coefficient of x_1**m ... x_{r+1}**m in the circular-word generating
    function built from blocks "first letter, then a nonempty Smirnov word
    over the remaining letters", summed over the starting letter.

    Exact truncated expansion, each variable capped at degree m; must agree
    with circular_smirnov_count on content (m, ..., m).
    """
    if r < 1 or m < 1:
        raise ValueError("r and m must be positive")
    nvars = r + 1
    if (m + 1) ** nvars > max_terms:
        raise BudgetExceededError(
            f"(m+1)^(r+1) = {(m + 1) ** nvars} terms exceeds cap {max_terms}"
        )
    one = {(0,) * nvars: 1}
    total: _MPoly = {}
    for i in range(nvars):
        others = [j for j in range(nvars) if j != i]
        s_minus_1 = _mv_add(_smirnov_gf(others, nvars, m), {(0,) * nvars: -1})
        xi = [0] * nvars
        xi[i] = 1
        w = _mv_mul({tuple(xi): 1}, s_minus_1, m)
        # x_i + w/(1-w): the lone x_i term only matters for one-letter words.
        block = _mv_add({tuple(xi): 1}, _mv_mul(w, _mv_geometric(w, nvars, m), m))
        total = _mv_add(total, block)
    return total.get((m,) * nvars, 0)
