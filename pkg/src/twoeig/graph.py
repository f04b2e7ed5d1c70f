"""Immutable simple graphs stored as packed bit rows.

Row ``i`` of a :class:`Graph` is an int whose bit ``j`` is set iff ``i ~ j``.
Every operation returns a new value; nothing is mutated after construction.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import CapacityError

MAX_VERTICES = 512


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class VertexSet:
    """A set of vertices packed into a bit mask."""

    mask: int = 0

    @classmethod
    def of(cls, vertices: Iterable[int]) -> VertexSet:
        mask = 0
        for v in vertices:
            if v < 0:
                raise ValueError(f"negative vertex {v}")
            mask |= 1 << v
        return cls(mask)

    @classmethod
    def full(cls, n: int) -> VertexSet:
        return cls((1 << n) - 1)

    def __iter__(self) -> Iterator[int]:
        return iter_bits(self.mask)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __contains__(self, v: object) -> bool:
        return isinstance(v, int) and v >= 0 and bool(self.mask >> v & 1)

    def __bool__(self) -> bool:
        return self.mask != 0

    def __or__(self, other: VertexSet) -> VertexSet:
        return VertexSet(self.mask | other.mask)

    def __and__(self, other: VertexSet) -> VertexSet:
        return VertexSet(self.mask & other.mask)

    def sorted(self) -> list[int]:
        return list(self)

    def __repr__(self) -> str:
        return f"VertexSet({self.sorted()})"


@dataclass(frozen=True)
class Graph:
    n: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        n, rows = self.n, self.rows
        if not 1 <= n <= MAX_VERTICES:
            if n > MAX_VERTICES:
                raise CapacityError(f"{n} vertices exceeds the limit of {MAX_VERTICES}")
            raise ValueError("a graph needs at least one vertex")
        if len(rows) != n:
            raise ValueError(f"expected {n} rows, got {len(rows)}")
        limit = 1 << n
        for i, r in enumerate(rows):
            if r < 0 or r >= limit:
                raise ValueError(f"row {i} refers to vertices outside 0..{n - 1}")
            if r >> i & 1:
                raise ValueError(f"loop at vertex {i}")
            for j in iter_bits(r):
                if not rows[j] >> i & 1:
                    raise ValueError(f"adjacency not symmetric at ({i}, {j})")

    @classmethod
    def _trusted(cls, n: int, rows: tuple[int, ...]) -> Graph:
        # skips validation; callers guarantee symmetry and range
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "rows", rows)
        return g

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) outside 0..{n - 1}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def from_matrix(cls, matrix: Sequence[Sequence[int]]) -> Graph:
        n = len(matrix)
        rows = []
        for i, row in enumerate(matrix):
            if len(row) != n:
                raise ValueError("adjacency matrix must be square")
            mask = 0
            for j, x in enumerate(row):
                if x not in (0, 1):
                    raise ValueError(f"entry ({i}, {j}) = {x} is not 0/1")
                if x:
                    mask |= 1 << j
            rows.append(mask)
        return cls(n, tuple(rows))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def neighbors(self, v: int) -> VertexSet:
        return VertexSet(self.rows[v])

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self.rows]

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted(self.degrees(), reverse=True))

    @property
    def num_edges(self) -> int:
        return sum(self.degrees()) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i, r in enumerate(self.rows) for j in iter_bits(r >> (i + 1) << (i + 1))]

    def adjacency_matrix(self) -> list[list[int]]:
        return [[r >> j & 1 for j in range(self.n)] for r in self.rows]

    def vertices(self) -> VertexSet:
        return VertexSet.full(self.n)

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Graph in which old vertex ``v`` becomes ``perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise ValueError("perm is not a permutation of the vertices")
        rows = [0] * self.n
        for v, r in enumerate(self.rows):
            m = 0
            for u in iter_bits(r):
                m |= 1 << perm[u]
            rows[perm[v]] = m
        return Graph._trusted(self.n, tuple(rows))

    def flip_edge(self, u: int, v: int) -> Graph:
        if u == v:
            raise ValueError("cannot toggle a loop")
        rows = list(self.rows)
        rows[u] ^= 1 << v
        rows[v] ^= 1 << u
        return Graph._trusted(self.n, tuple(rows))

    def complement(self) -> Graph:
        full = (1 << self.n) - 1
        return Graph._trusted(self.n, tuple(full ^ r ^ (1 << i) for i, r in enumerate(self.rows)))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.num_edges})"


def disjoint_union(g: Graph, h: Graph) -> Graph:
    n = g.n + h.n
    if n > MAX_VERTICES:
        raise CapacityError(f"union would have {n} vertices (limit {MAX_VERTICES})")
    return Graph._trusted(n, g.rows + tuple(r << g.n for r in h.rows))


def matching(k: int) -> Graph:
    """``k`` disjoint copies of K2."""
    if 2 * k > MAX_VERTICES:
        raise CapacityError(f"{k}K2 exceeds {MAX_VERTICES} vertices")
    return Graph.from_edges(2 * k, [(2 * i, 2 * i + 1) for i in range(k)])


def add_isolated_edges(g: Graph, alpha: int) -> Graph:
    if alpha < 0:
        raise ValueError("alpha must be nonnegative")
    if alpha == 0:
        return g
    if g.n + 2 * alpha > MAX_VERTICES:
        raise CapacityError(f"{g.n} + 2*{alpha} vertices exceeds {MAX_VERTICES}")
    return disjoint_union(g, matching(alpha))


def induced_subgraph(g: Graph, s: VertexSet | Iterable[int]) -> Graph:
    """Subgraph on ``s`` with vertices renumbered in ascending order."""
    if not isinstance(s, VertexSet):
        s = VertexSet.of(s)
    if not s:
        raise ValueError("induced subgraph of an empty vertex set")
    if s.mask >> g.n:
        raise ValueError("vertex set is not contained in the graph")
    verts = s.sorted()
    rows = []
    for v in verts:
        r = g.rows[v]
        rows.append(sum(1 << i for i, u in enumerate(verts) if r >> u & 1))
    return Graph._trusted(len(verts), tuple(rows))


def connected_components(g: Graph) -> list[VertexSet]:
    """Components ordered by smallest member."""
    seen = 0
    out = []
    for v in range(g.n):
        if seen >> v & 1:
            continue
        comp = frontier = 1 << v
        while frontier:
            nxt = 0
            for u in iter_bits(frontier):
                nxt |= g.rows[u]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        out.append(VertexSet(comp))
    return out


def is_connected(g: Graph) -> bool:
    return len(connected_components(g)) == 1


def is_bipartite(g: Graph) -> bool:
    side = [-1] * g.n
    for s in range(g.n):
        if side[s] >= 0:
            continue
        side[s] = 0
        stack = [s]
        while stack:
            u = stack.pop()
            for w in iter_bits(g.rows[u]):
                if side[w] < 0:
                    side[w] = 1 - side[u]
                    stack.append(w)
                elif side[w] == side[u]:
                    return False
    return True


def is_clique(g: Graph, s: VertexSet) -> bool:
    return all((g.rows[v] | 1 << v) & s.mask == s.mask for v in s)


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << i) for i in range(n)))


def empty_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def star_graph(k: int) -> Graph:
    """K_{1,k} with the centre at vertex 0."""
    return Graph.from_edges(k + 1, [(0, i) for i in range(1, k + 1)])


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)
