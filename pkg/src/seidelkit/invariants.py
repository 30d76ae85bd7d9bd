"""Exact spectral invariants of the Seidel matrix."""

from __future__ import annotations

from .graphs import Graph

CHAR_POLY_MAX_ORDER = 16


def seidel_matrix(g: Graph) -> list[list[int]]:
    """0 on the diagonal, -1 between adjacent pairs, +1 otherwise."""
    n = g.n
    return [
        [0 if i == j else (-1 if (g.adj[i] >> j) & 1 else 1) for j in range(n)]
        for i in range(n)
    ]


def seidel_char_poly(g: Graph) -> tuple[int, ...]:
    """Characteristic polynomial of the Seidel matrix, exactly.

    Coefficients ascending (constant term first), leading coefficient 1.
    Faddeev-LeVerrier recursion over Python integers; every division in
    it is exact, which the remainder check enforces.  Invariant under
    both relabeling and switching, hence constant on a switching class.
    """
    n = g.n
    if n > CHAR_POLY_MAX_ORDER:
        raise ValueError(f"order {n} above supported bound {CHAR_POLY_MAX_ORDER}")
    s = seidel_matrix(g)
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    m = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for k in range(1, n + 1):
        am = [
            [sum(s[i][t] * m[t][j] for t in range(n)) for j in range(n)]
            for i in range(n)
        ]
        tr = sum(am[i][i] for i in range(n))
        q, r = divmod(tr, k)
        if r != 0:
            raise AssertionError("inexact trace division in char poly recursion")
        ck = -q
        coeffs[n - k] = ck
        if k < n:
            for i in range(n):
                m[i] = [am[i][j] + (ck if i == j else 0) for j in range(n)]
    return tuple(coeffs)


def class_signature(g: Graph) -> tuple[int, tuple[int, ...]]:
    """(order, Seidel characteristic polynomial).

    Equal signatures are necessary but not sufficient for two graphs to
    share a switching class; use as a cheap prefilter only.
    """
    return (g.n, seidel_char_poly(g))
