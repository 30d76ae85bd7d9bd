"""Independent oracles the tests compare the package against.

Everything here is deliberately naive: permutation search instead of
refinement, sympy instead of the hand-rolled recursion.  Slow and
obviously correct beats fast and clever for reference values.
"""

from __future__ import annotations

import itertools

from seidelkit import Graph, relabel, seidel_matrix


def brute_canonical_code(g: Graph) -> int:
    """Minimum upper-triangle code over every relabeling, by full scan."""
    best = None
    for q in itertools.permutations(range(g.n)):
        code = 0
        t = 0
        for j in range(1, g.n):
            for i in range(j):
                if (g.adj[q[i]] >> q[j]) & 1:
                    code |= 1 << t
                t += 1
        if best is None or code < best:
            best = code
    return best


def brute_is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n:
        return False
    return any(relabel(g, p) == h for p in itertools.permutations(range(g.n)))


def brute_find_isomorphism(g: Graph, h: Graph):
    """Degree-filtered backtracking; practical up to order 8."""
    if g.n != h.n:
        return None
    n = g.n
    dg = [g.degree(v) for v in range(n)]
    dh = [h.degree(v) for v in range(n)]
    if sorted(dg) != sorted(dh):
        return None
    cand = [[w for w in range(n) if dh[w] == dg[v]] for v in range(n)]
    phi = [-1] * n
    used = [False] * n

    def dfs(v: int) -> bool:
        if v == n:
            return True
        for w in cand[v]:
            if used[w]:
                continue
            if all(((g.adj[v] >> u) & 1) == ((h.adj[w] >> phi[u]) & 1) for u in range(v)):
                phi[v] = w
                used[w] = True
                if dfs(v + 1):
                    return True
                used[w] = False
                phi[v] = -1
        return False

    return tuple(phi) if dfs(0) else None


def brute_automorphism_count(g: Graph) -> int:
    return sum(1 for p in itertools.permutations(range(g.n)) if relabel(g, p) == g)


def sympy_seidel_poly(g: Graph) -> tuple[int, ...]:
    import sympy

    x = sympy.symbols("x")
    poly = sympy.Matrix(seidel_matrix(g)).charpoly(x)
    return tuple(int(c) for c in reversed(poly.all_coeffs()))
