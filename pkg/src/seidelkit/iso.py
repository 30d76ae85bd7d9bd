"""Canonical forms, isomorphism, automorphisms, and graph enumeration.

The canonical form of a graph is the minimal relabeled upper-triangle
bit string found by the refinement-and-backtracking search in _kernels.
Equal forms characterize isomorphic graphs, and (n, bits) tuples give a
total order used for class representatives throughout the package.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, NamedTuple, Optional

import numpy as np

from . import _kernels
from .graphs import Graph, Permutation, graph_from_code, relabel

CANONICAL_MAX_ORDER = 12
AUTOMORPHISM_MAX_ORDER = 10


class CanonicalForm(NamedTuple):
    n: int
    bits: bytes


def _check_bound(n: int, bound: int) -> None:
    if n > bound:
        raise ValueError(f"order {n} above supported bound {bound}")


def _rows_of(g: Graph) -> np.ndarray:
    return np.array(g.adj, dtype=np.int64)


def _bits_from_lab(g: Graph, lab: Permutation) -> bytes:
    # upper triangle of the relabeled graph, column-major, 8 bits per byte
    npairs = g.n * (g.n - 1) // 2
    buf = bytearray((npairs + 7) // 8)
    t = 0
    for j in range(1, g.n):
        vj = lab[j]
        for i in range(j):
            if (g.adj[lab[i]] >> vj) & 1:
                buf[t >> 3] |= 0x80 >> (t & 7)
            t += 1
    return bytes(buf)


@lru_cache(maxsize=1 << 16)
def _canon_record(g: Graph) -> tuple[CanonicalForm, Permutation]:
    _check_bound(g.n, CANONICAL_MAX_ORDER)
    c0, c1, cnt, lab, orbit = _kernels.run_canon(_rows_of(g), g.n)
    lab_t = tuple(int(x) for x in lab)
    return CanonicalForm(g.n, _bits_from_lab(g, lab_t)), lab_t


def canonical_form(g: Graph) -> CanonicalForm:
    """Canonical form of g; equal forms mean isomorphic graphs."""
    return _canon_record(g)[0]


def canonical_labeling(g: Graph) -> Permutation:
    """The labeling behind canonical_form: position p holds old vertex lab[p]."""
    return _canon_record(g)[1]


def canonical_graph(cf: CanonicalForm) -> Graph:
    """The representative graph encoded by a canonical form."""
    code = 0
    npairs = cf.n * (cf.n - 1) // 2
    for t in range(npairs):
        if cf.bits[t >> 3] & (0x80 >> (t & 7)):
            code |= 1 << t
    return graph_from_code(cf.n, code)


def form_from_word(n: int, word: int) -> CanonicalForm:
    """Rebuild a CanonicalForm from the kernel's first code word (needs n <= 11)."""
    if n > 11:
        raise ValueError("single-word forms stop at order 11")
    npairs = n * (n - 1) // 2
    buf = bytearray((npairs + 7) // 8)
    for t in range(npairs):
        if (word >> (62 - t)) & 1:
            buf[t >> 3] |= 0x80 >> (t & 7)
    return CanonicalForm(n, bytes(buf))


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n:
        return False
    return canonical_form(g) == canonical_form(h)


def find_isomorphism(g: Graph, h: Graph) -> Optional[Permutation]:
    """A vertex bijection carrying E(g) onto E(h), or None."""
    if g.n != h.n or canonical_form(g) != canonical_form(h):
        return None
    labg = canonical_labeling(g)
    labh = canonical_labeling(h)
    phi = [0] * g.n
    for p in range(g.n):
        phi[labg[p]] = labh[p]
    phi_t = tuple(phi)
    if relabel(g, phi_t) != h:
        raise AssertionError("canonical labelings produced a non-isomorphism")
    return phi_t


@dataclass(frozen=True)
class AutomorphismGroup:
    elements: tuple[Permutation, ...]

    @property
    def order(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[Permutation]:
        return iter(self.elements)


def automorphisms(g: Graph) -> AutomorphismGroup:
    """The full automorphism group, element by element."""
    _check_bound(g.n, AUTOMORPHISM_MAX_ORDER)
    rows = _rows_of(g)
    cnt = _kernels.run_canon(rows, g.n)[2]
    aut = np.empty((cnt, g.n), np.int8)
    cnt2 = _kernels.run_canon(rows, g.n, aut_cap=cnt, aut_rows=aut)[2]
    if cnt2 != cnt:
        raise AssertionError("canonical search count changed between passes")
    elements = tuple(tuple(int(x) for x in row) for row in aut)
    return AutomorphismGroup(elements)


def automorphism_count(g: Graph) -> int:
    """Group order alone, without storing elements."""
    _check_bound(g.n, CANONICAL_MAX_ORDER)
    return _kernels.run_canon(_rows_of(g), g.n)[2]


def similarity_orbits(g: Graph) -> tuple[tuple[int, ...], ...]:
    """Vertex orbits under the automorphism group, sorted by smallest member."""
    _check_bound(g.n, AUTOMORPHISM_MAX_ORDER)
    orbit = _kernels.run_canon(_rows_of(g), g.n)[4]
    blocks: dict[int, list[int]] = {}
    for v in range(g.n):
        blocks.setdefault(int(orbit[v]), []).append(v)
    return tuple(tuple(blocks[r]) for r in sorted(blocks))


def all_graphs(n: int) -> Iterator[Graph]:
    """Every labeled graph of order n, in upper-triangle code order."""
    npairs = n * (n - 1) // 2
    for code in range(1 << npairs):
        yield graph_from_code(n, code)


@lru_cache(maxsize=16)
def nonisomorphic_graphs(n: int) -> tuple[Graph, ...]:
    """One representative per isomorphism class, sorted by canonical form.

    Grown by vertex augmentation from order 1, which stays cheap well
    past the range where scanning all labeled graphs is an option.
    """
    _check_bound(n, CANONICAL_MAX_ORDER)
    k1 = Graph(1, (0,))
    reps: dict[CanonicalForm, Graph] = {canonical_form(k1): k1}
    for k in range(2, n + 1):
        nxt: dict[CanonicalForm, Graph] = {}
        for g in reps.values():
            for mask in range(1 << (k - 1)):
                rows = [row | (((mask >> i) & 1) << (k - 1)) for i, row in enumerate(g.adj)]
                rows.append(mask)
                h = Graph(k, tuple(rows))
                cf = canonical_form(h)
                if cf not in nxt:
                    nxt[cf] = h
        reps = nxt
    return tuple(reps[cf] for cf in sorted(reps))
