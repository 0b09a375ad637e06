"""Admissible-labeling counts and the generating-function route.

Two independent derivations of the same numbers live here. The series
route solves f = x * (l_m(f))**r by fixed-point iteration and reads the
labeling counts off x*h_m(f); the direct route recurses over plane
hypertrees (each vertex holding an ordered list of child hyperedges),
weighting a vertex with d*m children by the number of ways to group them
into label blocks of size m and to spread the blocks over the m parent
copies. Their agreement is the strongest check available that the
informal labeling rules were read correctly.

Multiplying the labeling counts by FC_1**n converts them into hypergraph
Fuss-Catalan numbers.
"""

from __future__ import annotations

from math import comb, factorial

from .errors import ConsistencyError
from .series import TruncatedSeries, solve_power_fixed_point
from .smirnov import fc1


def w_partitions(m: int, k: int) -> int:
    """Ways to partition a k-set into blocks of size m: k!/((m!)^(k/m) (k/m)!)."""
    if m < 1:
        raise ValueError("m must be a positive integer")
    if k < 0:
        raise ValueError("k must be nonnegative")
    blocks, rem = divmod(k, m)
    if rem:
        raise ValueError(f"block size {m} does not divide {k}")
    return factorial(k) // (factorial(m) ** blocks * factorial(blocks))


def lambda_dim(r: int, g: int) -> int:
    """Number of degree-g monomials in r variables: C(r-1+g, r-1)."""
    if r < 1:
        raise ValueError("r must be a positive integer")
    if g < 0:
        raise ValueError("g must be nonnegative")
    return comb(r - 1 + g, r - 1)


def ell_series(m: int, order: int) -> TruncatedSeries:
    """Sum over d of W_m(dm) * lambda(m, dm) * x**d, truncated."""
    return TruncatedSeries(
        [w_partitions(m, d * m) * lambda_dim(m, d * m) for d in range(order + 1)],
        order,
    )


def h_series(m: int, order: int) -> TruncatedSeries:
    """Sum over d of W_m(dm) * x**d, truncated."""
    return TruncatedSeries(
        [w_partitions(m, d * m) for d in range(order + 1)], order
    )


def _as_int(value, what: str) -> int:
    if value.denominator != 1 or value < 0:
        raise ConsistencyError(f"{what} is not a nonnegative integer: {value}")
    return int(value)


def _labeling_gf(r: int, m: int, order: int) -> TruncatedSeries:
    """h_m(f) where f = x*(l_m(f))**r; coefficient n is the labeling count."""
    f = solve_power_fixed_point(ell_series(m, order), r, order)
    return h_series(m, order).compose(f)


def a_sequence(r: int, m: int, n_max: int) -> list[int]:
    """Admissible-labeling counts for n = 0..n_max via the series route."""
    if r < 1 or m < 1:
        raise ValueError("r and m must be positive")
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    gf = _labeling_gf(r, m, n_max + 1)
    return [_as_int(gf.coefficient(n), f"labeling count n={n}") for n in range(n_max + 1)]


def fc_sequence(r: int, m: int, n_max: int) -> list[int]:
    """FC_n for n = 0..n_max, by scaling the argument of the labeling
    generating function with FC_1; each value is asserted to agree with
    FC_1**n times the labeling count."""
    if r < 1 or m < 1:
        raise ValueError("r and m must be positive")
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    order = n_max + 1
    c1 = fc1(r, m)
    f = solve_power_fixed_point(ell_series(m, order), r, order)
    gf = h_series(m, order).compose(f.scale_argument(c1))
    values = [_as_int(gf.coefficient(n), f"FC n={n}") for n in range(n_max + 1)]
    labelings = a_sequence(r, m, n_max)
    for n, (value, a) in enumerate(zip(values, labelings)):
        if value != c1**n * a:
            raise ConsistencyError(
                f"FC_{n} = {value} differs from FC_1^{n} * {a} = {c1 ** n * a}"
            )
    return values


def a_direct(r: int, m: int, n: int) -> int:
    """Labeling count by direct recursion over plane hypertrees, avoiding
    the series machinery entirely.

    edge(k): weighted trees hanging below one hyperedge with k hyperedges
    total; its r non-root vertices split the remaining k-1. vertex(g):
    weighted ordered forests of d edge-subtrees at a non-root vertex,
    carrying the W*lambda weight; the root vertex carries W only.
    """
    if r < 1 or m < 1:
        raise ValueError("r and m must be positive")
    if n < 0:
        raise ValueError("n must be nonnegative")

    edge_memo: dict[int, int] = {}
    vertex_memo: dict[int, int] = {}

    def forests(total: int, parts: int, f) -> int:
        # ordered tuples of `parts` values with the given total, product-weighted
        if parts == 0:
            return 1 if total == 0 else 0
        return sum(f(g) * forests(total - g, parts - 1, f) for g in range(total + 1))

    def seqs(total: int, d: int) -> int:
        # ordered d-tuples of positive edge-subtree sizes summing to total
        if d == 0:
            return 1 if total == 0 else 0
        return sum(edge(k) * seqs(total - k, d - 1) for k in range(1, total - d + 2))

    def edge(k: int) -> int:
        if k not in edge_memo:
            edge_memo[k] = forests(k - 1, r, vertex)
        return edge_memo[k]

    def vertex(g: int) -> int:
        if g not in vertex_memo:
            vertex_memo[g] = sum(
                w_partitions(m, d * m) * lambda_dim(m, d * m) * seqs(g, d)
                for d in range(g + 1)
            )
        return vertex_memo[g]

    return sum(w_partitions(m, d * m) * seqs(n, d) for d in range(n + 1))
