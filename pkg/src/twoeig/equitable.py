"""Equitable partitions and their quotient matrices."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .charpoly import char_poly_matrix
from .errors import ContractViolation
from .graph import Graph, VertexSet
from .poly import divides, primitive_part
from .spectra import char_poly


@dataclass(frozen=True)
class Partition:
    """Ordered list of disjoint nonempty cells covering ``0..n-1``."""

    n: int
    cells: tuple[VertexSet, ...]

    def __post_init__(self) -> None:
        seen = 0
        for c in self.cells:
            if not c:
                raise ValueError("partition has an empty cell")
            if seen & c.mask:
                raise ValueError("partition cells overlap")
            seen |= c.mask
        if seen != (1 << self.n) - 1:
            raise ValueError(f"partition does not cover vertices 0..{self.n - 1}")

    @classmethod
    def of(cls, n: int, cells: Iterable[Iterable[int]]) -> Partition:
        return cls(n, tuple(c if isinstance(c, VertexSet) else VertexSet.of(c) for c in cells))

    @classmethod
    def unit(cls, n: int) -> Partition:
        return cls(n, (VertexSet.full(n),))

    def __len__(self) -> int:
        return len(self.cells)

    def __str__(self) -> str:
        return "|".join(",".join(map(str, c.sorted())) for c in self.cells)


def parse_partition(text: str, n: int) -> Partition:
    """Parse ``"0|1,2,3,4"``."""
    try:
        cells = [[int(v) for v in cell.split(",") if v.strip()] for cell in text.strip().split("|")]
    except ValueError:
        raise ValueError(f"cannot parse partition {text!r}") from None
    if any(v < 0 or v >= n for c in cells for v in c):
        raise ValueError(f"partition {text!r} names a vertex outside 0..{n - 1}")
    if sum(map(len, cells)) != len({v for c in cells for v in c}):
        raise ValueError(f"partition {text!r} repeats a vertex")
    return Partition.of(n, cells)


def _check(g: Graph, p: Partition) -> None:
    if p.n != g.n:
        raise ValueError(f"partition is on {p.n} vertices, graph has {g.n}")


def _row_sums(g: Graph, p: Partition) -> list[list[set[int]]]:
    return [[{(g.rows[v] & cj.mask).bit_count() for v in ci} for cj in p.cells] for ci in p.cells]


def is_equitable(g: Graph, p: Partition) -> bool:
    _check(g, p)
    return all(len(s) == 1 for row in _row_sums(g, p) for s in row)


def average_quotient(g: Graph, p: Partition) -> list[list[Fraction]]:
    """Mean row sums of every block; integral exactly when ``p`` is equitable."""
    _check(g, p)
    return [
        [Fraction(sum((g.rows[v] & cj.mask).bit_count() for v in ci), len(ci)) for cj in p.cells]
        for ci in p.cells
    ]


def quotient_matrix(g: Graph, p: Partition) -> list[list[Fraction]]:
    if not is_equitable(g, p):
        raise ContractViolation(f"partition {p} is not equitable")
    return average_quotient(g, p)


def quotient_char_poly(q: Sequence[Sequence[Fraction]]) -> tuple[int, ...]:
    ints = [[int(x) for x in row] for row in q]
    if any(Fraction(v) != x for row, irow in zip(q, ints) for x, v in zip(row, irow)):
        raise ContractViolation("quotient matrix is not integral")
    return char_poly_matrix(ints)


def verify_quotient_divides(g: Graph, p: Partition) -> bool:
    """Does the quotient's characteristic polynomial divide the graph's?"""
    qp = quotient_char_poly(quotient_matrix(g, p))
    return divides(primitive_part(qp), char_poly(g))


def coarsest_equitable_refinement(g: Graph, seed: Partition) -> Partition:
    """Iterate splitting on neighbour counts until stable.

    A cell splits into fragments ordered by their count vector, and the
    fragments replace the cell in place, so the output order is by
    (original cell index, signature).
    """
    _check(g, seed)
    cells = list(seed.cells)
    while True:
        masks = [c.mask for c in cells]
        new: list[VertexSet] = []
        for c in cells:
            groups: dict[tuple[int, ...], int] = {}
            for v in c:
                sig = tuple((g.rows[v] & m).bit_count() for m in masks)
                groups[sig] = groups.get(sig, 0) | (1 << v)
            new.extend(VertexSet(groups[s]) for s in sorted(groups))
        if len(new) == len(cells):
            return Partition(g.n, tuple(new))
        cells = new
