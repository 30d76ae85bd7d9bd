"""Named graph families and pinned example fixtures.

Vertex labels are part of the contract here: tests and the command line
lean on the exact indices documented per constructor.
"""

from __future__ import annotations

from .graphs import Graph, make_graph


def complete(n: int) -> Graph:
    return make_graph(n, ((i, j) for j in range(n) for i in range(j)))


def empty(n: int) -> Graph:
    return make_graph(n, ())


def path(n: int) -> Graph:
    """Path on n vertices (n - 1 edges), labeled 0..n-1 along the path."""
    return make_graph(n, ((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs at least 3 vertices")
    return make_graph(n, [(i, (i + 1) % n) for i in range(n)])


def star(n: int) -> Graph:
    """Star on n vertices with center 0."""
    return make_graph(n, ((0, i) for i in range(1, n)))


def complete_bipartite(m: int, n: int) -> Graph:
    """Parts 0..m-1 and m..m+n-1."""
    if m < 1 or n < 1:
        raise ValueError("both parts must be nonempty")
    return make_graph(m + n, ((i, m + j) for i in range(m) for j in range(n)))


def cube_q3() -> Graph:
    """3-cube on vertices 0..7; i and j adjacent when they differ in one bit."""
    return make_graph(8, ((i, j) for j in range(8) for i in range(j) if (i ^ j).bit_count() == 1))


def prism_c3p2() -> Graph:
    """Triangular prism: triangles {0,1,2} and {3,4,5}, matching i -- i+3."""
    return make_graph(6, [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5), (0, 3), (1, 4), (2, 5)])


def tadpole(cycle_len: int = 3, tail: int = 4) -> Graph:
    """Cycle 0..cycle_len-1 with a path of `tail` vertices grafted at cycle_len-1.

    The junction vertex is shared, so the order is cycle_len + tail - 1.
    """
    if cycle_len < 3:
        raise ValueError("cycle part needs at least 3 vertices")
    if tail < 2:
        raise ValueError("tail needs at least 2 vertices")
    n = cycle_len + tail - 1
    edges = [(i, (i + 1) % cycle_len) for i in range(cycle_len)]
    edges += [(i, i + 1) for i in range(cycle_len - 1, n - 1)]
    return make_graph(n, edges)


def paw() -> Graph:
    """Triangle {0,1,2} with a pendant vertex 3 attached at 2."""
    return make_graph(4, [(0, 1), (0, 2), (1, 2), (2, 3)])


def path_with_isolated(p: int, k: int) -> Graph:
    """Path on vertices 0..p-1 plus k isolated vertices."""
    if k < 0:
        raise ValueError("isolated vertex count must be nonnegative")
    return make_graph(p + k, ((i, i + 1) for i in range(p - 1)))


def half_join(m: int, n: int, a_complete: bool = True, b_complete: bool = True) -> Graph:
    """Two blocks joined across exactly half of the m*n cross pairs.

    Block A is 0..m-1, block B is m..m+n-1; each block is complete or
    empty by flag.  When n is even, vertex a_i picks the n/2 cyclically
    consecutive partners b_((i*n/2 + j) mod n); otherwise m must be even
    and the same rule runs from the B side.
    """
    if m < 1 or n < 1:
        raise ValueError("both blocks must be nonempty")
    if (m * n) % 2:
        raise ValueError("m*n must be even to split the cross pairs in half")
    edges: list[tuple[int, int]] = []
    if a_complete:
        edges += [(i, j) for j in range(m) for i in range(j)]
    if b_complete:
        edges += [(m + i, m + j) for j in range(n) for i in range(j)]
    if n % 2 == 0:
        half = n // 2
        edges += [(i, m + (i * half + j) % n) for i in range(m) for j in range(half)]
    else:
        half = m // 2
        edges += [((i * half + j) % m, m + i) for i in range(n) for j in range(half)]
    return make_graph(m + n, edges)


def path_plus_clique(p: int, edges_to_x: int) -> Graph:
    """Edge 0--1 plus a p-clique on 2..p+1, each clique vertex tied to one end.

    The first edges_to_x clique vertices attach to 0, the rest to 1.
    """
    if p < 1:
        raise ValueError("clique must be nonempty")
    if not 0 <= edges_to_x <= p:
        raise ValueError("edges_to_x out of range")
    edges = [(0, 1)]
    edges += [(i, j) for j in range(2, p + 2) for i in range(2, j)]
    edges += [(0, v) for v in range(2, 2 + edges_to_x)]
    edges += [(1, v) for v in range(2 + edges_to_x, p + 2)]
    return make_graph(p + 2, edges)


FAMILIES: dict[str, tuple] = {
    "complete": (complete, ("n",)),
    "empty": (empty, ("n",)),
    "path": (path, ("n",)),
    "cycle": (cycle, ("n",)),
    "star": (star, ("n",)),
    "complete_bipartite": (complete_bipartite, ("m", "n")),
    "cube_q3": (cube_q3, ()),
    "prism_c3p2": (prism_c3p2, ()),
    "tadpole": (tadpole, ("cycle_len", "tail")),
    "paw": (paw, ()),
    "path_with_isolated": (path_with_isolated, ("p", "k")),
    "half_join": (half_join, ("m", "n")),
    "path_plus_clique": (path_plus_clique, ("p", "edges_to_x")),
}


def gen(family: str, *params: int, **flags: bool) -> Graph:
    """Build a registered family by name; flags reach half_join only."""
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r} (choose from {', '.join(sorted(FAMILIES))})")
    fn, names = FAMILIES[family]
    if len(params) != len(names):
        raise ValueError(f"{family} takes {len(names)} parameter(s): {', '.join(names) or 'none'}")
    if flags and family != "half_join":
        raise ValueError("block flags only apply to half_join")
    return fn(*params, **flags)
