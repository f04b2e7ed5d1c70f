"""Isomorph-free generation of all simple graphs on up to 8 vertices.

Every graph on n vertices arises from a graph on n - 1 vertices by adding a
vertex of minimum degree, so children are only formed from neighbourhoods
that keep the new vertex's degree no larger than any other degree.
Duplicates are removed through canonical certificates.
"""
from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from typing import Iterator

from .graph import Graph
from .iso import canonical_labeling

MAX_BUILTIN_N = 8


def _children(parent: Graph) -> Iterator[Graph]:
    n = parent.n
    degs = parent.degrees()
    for size in range(n + 1):
        for nbrs in combinations(range(n), size):
            # new vertex must have minimum degree in the child
            mask = 0
            for v in nbrs:
                mask |= 1 << v
            if any(d + (mask >> v & 1) < size for v, d in enumerate(degs)):
                continue
            rows = tuple(r | ((mask >> v & 1) << n) for v, r in enumerate(parent.rows)) + (mask,)
            yield Graph._trusted(n + 1, rows)


@lru_cache(maxsize=None)
def _graphs(n: int) -> tuple[Graph, ...]:
    if n == 1:
        return (Graph._trusted(1, (0,)),)
    found: dict[tuple[int, ...], Graph] = {}
    for parent in _graphs(n - 1):
        for child in _children(parent):
            cert, lab = canonical_labeling(child)
            if cert not in found:
                found[cert] = child.relabel(lab)
    # deterministic order: by edge count, then certificate
    return tuple(found[c] for c in sorted(found, key=lambda c: (sum(r.bit_count() for r in c), c)))


def enumerate_graphs(n: int) -> Iterator[Graph]:
    """One canonical representative per isomorphism class on ``n`` vertices."""
    if n < 1:
        raise ValueError("n must be at least 1")
    if n > MAX_BUILTIN_N:
        raise ValueError(
            f"built-in generation stops at n = {MAX_BUILTIN_N}; "
            "supply a graph6 stream (e.g. from nauty's geng) for larger n"
        )
    return iter(_graphs(n))
