"""Partition refinement, isomorphism testing, canonical forms and induced-subgraph search.

All searches use the same label-invariant refinement: an ordered partition is
split by the vector of neighbour counts into every current cell, and the
fragments are ordered by that vector.  Because the procedure never looks at
vertex names, isomorphic inputs produce corresponding partitions.
"""
from __future__ import annotations

from typing import Iterator

from .graph import Graph, VertexSet, iter_bits

Cells = list[list[int]]


def refine(rows: tuple[int, ...], cells: Cells) -> tuple[Cells, tuple]:
    """Coarsest equitable refinement of an ordered partition, plus a trace.

    The trace records every split signature; two partitions can only
    correspond under an isomorphism if their traces are equal.
    """
    trace = []
    while True:
        masks = [sum(1 << v for v in c) for c in cells]
        out: Cells = []
        split = False
        for idx, cell in enumerate(cells):
            if len(cell) == 1:
                out.append(cell)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                r = rows[v]
                groups.setdefault(tuple((r & m).bit_count() for m in masks), []).append(v)
            if len(groups) == 1:
                out.append(cell)
                continue
            split = True
            keys = sorted(groups)
            trace.append((idx, tuple((k, len(groups[k])) for k in keys)))
            out.extend(groups[k] for k in keys)
        cells = out
        if not split:
            return cells, tuple(trace)


def _individualize(cells: Cells, idx: int, v: int) -> Cells:
    rest = [u for u in cells[idx] if u != v]
    return cells[:idx] + [[v], rest] + cells[idx + 1:]


def _target(cells: Cells) -> int:
    for i, c in enumerate(cells):
        if len(c) > 1:
            return i
    return -1


def _quick_invariant(g: Graph) -> tuple:
    return g.n, g.num_edges, g.degree_sequence()


def find_isomorphism(g: Graph, h: Graph) -> list[int] | None:
    """A list ``phi`` with ``g.has_edge(u, v) == h.has_edge(phi[u], phi[v])``, or None."""
    if _quick_invariant(g) != _quick_invariant(h):
        return None
    all_g, all_h = list(range(g.n)), list(range(h.n))
    cg, tg = refine(g.rows, [all_g])
    ch, th = refine(h.rows, [all_h])
    if tg != th:
        return None

    def search(cg: Cells, ch: Cells) -> list[int] | None:
        idx = _target(cg)
        if idx < 0:
            phi = [0] * g.n
            for a, b in zip(cg, ch):
                phi[a[0]] = b[0]
            for u in range(g.n):
                image = 0
                for w in iter_bits(g.rows[u]):
                    image |= 1 << phi[w]
                if image != h.rows[phi[u]]:
                    return None
            return phi
        cg2, tg2 = refine(g.rows, _individualize(cg, idx, cg[idx][0]))
        for w in ch[idx]:
            ch2, th2 = refine(h.rows, _individualize(ch, idx, w))
            if th2 == tg2:
                phi = search(cg2, ch2)
                if phi is not None:
                    return phi
        return None

    return search(cg, ch)


def are_isomorphic(g: Graph, h: Graph) -> bool:
    return find_isomorphism(g, h) is not None


def _orbit_roots(n: int, gens: list[list[int]]) -> list[int]:
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for gamma in gens:
        for v, w in enumerate(gamma):
            a, b = find(v), find(w)
            if a != b:
                parent[max(a, b)] = min(a, b)
    return [find(v) for v in range(n)]


def canonical_labeling(g: Graph) -> tuple[tuple[int, ...], list[int]]:
    """Certificate and labeling such that isomorphic graphs share the certificate.

    The certificate is the tuple of relabeled bit rows, maximised over the
    leaves of the individualisation-refinement tree.  Subtrees equivalent
    under an automorphism already discovered (fixing the current path) are
    skipped.
    """
    n, rows = g.n, g.rows
    best: list = [None, None]  # certificate, labeling
    first: list = [None, None]
    auts: list[list[int]] = []

    def leaf(cells: Cells) -> None:
        lab = [0] * n
        for i, c in enumerate(cells):
            lab[c[0]] = i
        relabeled = [0] * n
        for v in range(n):
            m = 0
            for u in iter_bits(rows[v]):
                m |= 1 << lab[u]
            relabeled[lab[v]] = m
        cert = tuple(relabeled)
        if first[0] is None:
            first[0], first[1] = cert, lab
            best[0], best[1] = cert, lab
            return
        for ref_cert, ref_lab in (first, best):
            if cert == ref_cert:
                inv = [0] * n
                for v, i in enumerate(ref_lab):
                    inv[i] = v
                auts.append([inv[lab[v]] for v in range(n)])
                return
        if cert > best[0]:
            best[0], best[1] = cert, lab

    def search(cells: Cells, path: list[int]) -> None:
        idx = _target(cells)
        if idx < 0:
            leaf(cells)
            return
        done: list[int] = []
        for v in cells[idx]:
            if done:
                stab = [a for a in auts if all(a[p] == p for p in path)]
                if stab:
                    roots = _orbit_roots(n, stab)
                    if any(roots[v] == roots[u] for u in done):
                        continue
            child, _ = refine(rows, _individualize(cells, idx, v))
            search(child, path + [v])
            done.append(v)

    start, _ = refine(rows, [list(range(n))])
    search(start, [])
    return best[0], best[1]


def canonical_form(g: Graph) -> Graph:
    _, lab = canonical_labeling(g)
    return g.relabel(lab)


def certificate(g: Graph) -> tuple[int, tuple[int, ...]]:
    return g.n, canonical_labeling(g)[0]


def iter_induced(g: Graph, h: Graph) -> Iterator[list[int]]:
    """Injective maps ``phi`` (h-vertex -> g-vertex) preserving adjacency and non-adjacency.

    Assignments are produced in lexicographic order of ``(phi[0], phi[1], ...)``.
    """
    k = h.n
    if k > g.n:
        return
    gdeg = g.degrees()
    hdeg = h.degrees()
    full = (1 << g.n) - 1
    phi = [0] * k

    def extend(i: int, used: int) -> Iterator[list[int]]:
        if i == k:
            yield list(phi)
            return
        cand = full & ~used
        hi = h.rows[i]
        for j in range(i):
            if hi >> j & 1:
                cand &= g.rows[phi[j]]
            else:
                cand &= ~g.rows[phi[j]]
        for x in iter_bits(cand):
            if gdeg[x] < hdeg[i]:
                continue
            phi[i] = x
            yield from extend(i + 1, used | 1 << x)

    yield from extend(0, 0)


def contains_induced(g: Graph, h: Graph) -> VertexSet | None:
    """First witness set S (in assignment order) with g[S] isomorphic to h, or None."""
    for phi in iter_induced(g, h):
        return VertexSet.of(phi)
    return None


def all_induced_witnesses(g: Graph, h: Graph) -> list[VertexSet]:
    """Distinct witness vertex sets, in order of first discovery."""
    seen: dict[int, VertexSet] = {}
    for phi in iter_induced(g, h):
        s = VertexSet.of(phi)
        seen.setdefault(s.mask, s)
    return list(seen.values())
