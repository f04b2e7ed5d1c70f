"""Exact adjacency spectra, +/-1 factor stripping and spectral classification."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .charpoly import char_poly_graph, char_poly_matrix
from .errors import ConsistencyError, ContractViolation
from .graph import Graph, VertexSet, connected_components, is_clique
from .poly import ROOT_TOLERANCE, Poly, RootCounter, divmod_poly, evaluate, mul, power, trim


@lru_cache(maxsize=4096)
def char_poly(g: Graph) -> Poly:
    """det(xI - A), coefficients lowest degree first."""
    return char_poly_graph(g)


@dataclass(frozen=True)
class SpectrumSummary:
    p: int  # multiplicity of +1
    q: int  # multiplicity of -1
    residual: Poly

    def reconstruct(self) -> Poly:
        return mul(mul(power((-1, 1), self.p), power((1, 1), self.q)), self.residual)


@dataclass(frozen=True)
class TwoEigCertificate:
    """Spectrum {r, s, 1^p, -1^q} with r + s = t, r * s = d, r > 1 > -1 > s."""

    p: int
    q: int
    t: int
    d: int

    @property
    def residual(self) -> Poly:
        return (self.d, -self.t, 1)

    @property
    def discriminant(self) -> int:
        return self.t * self.t - 4 * self.d

    @property
    def signature(self) -> tuple[int, int, int, int]:
        return self.p, self.q, self.t, self.d

    def roots(self) -> tuple[float, float]:
        s = self.discriminant ** 0.5
        return (self.t + s) / 2, (self.t - s) / 2


def _strip(cp: Poly, root: int) -> tuple[int, Poly]:
    m = 0
    lin = (-root, 1)
    while len(cp) > 1:
        quot, rem = divmod_poly(cp, lin)
        if rem:
            break
        m, cp = m + 1, quot
    return m, cp


def strip_pm_one(cp: Sequence[int]) -> SpectrumSummary:
    cp = trim(cp)
    if not cp or cp[-1] != 1:
        raise ContractViolation("characteristic polynomial must be monic")
    p, rest = _strip(cp, 1)
    q, rest = _strip(rest, -1)
    return SpectrumSummary(p, q, rest)


@dataclass(frozen=True)
class Classification:
    """Three-way spectral classification of a graph.

    ``kind`` is ``AllPmOne``, ``OneExtra``, ``TwoExtra`` or ``MoreThanTwo``.
    For ``TwoExtra`` either ``certificate`` is set (r > 1 and s < -1) or
    ``clique_union`` is true.
    """

    kind: str
    summary: SpectrumSummary
    root: int | None = None
    certificate: TwoEigCertificate | None = None
    clique_union: bool = False


def _is_clique_union(g: Graph) -> tuple[bool, int]:
    comps = connected_components(g)
    ok = all(is_clique(g, c) for c in comps)
    return ok, sum(1 for c in comps if len(c) != 2)


def classify_spectrum(g: Graph) -> Classification:
    summary = strip_pm_one(char_poly(g))
    res = summary.residual
    deg = len(res) - 1
    if deg == 0:
        if any(d != 1 for d in g.degrees()):
            raise ConsistencyError("all eigenvalues are +/-1 but the graph is not a perfect matching")
        return Classification("AllPmOne", summary)
    if deg == 1:
        root = -res[0]
        ok, big = _is_clique_union(g)
        if not (ok and big == 1):
            raise ConsistencyError("one eigenvalue off +/-1 but the graph is not K_m plus isolated edges")
        return Classification("OneExtra", summary, root=root)
    if deg == 2:
        d, mt = res[0], res[1]
        t = -mt
        if evaluate(res, 1) < 0 and evaluate(res, -1) < 0:
            cert = TwoEigCertificate(summary.p, summary.q, t, d)
            extra = [c for c in connected_components(g) if not (len(c) == 2 and _edge_count(g, c) == 1)]
            if len(extra) != 1:
                raise ConsistencyError("r > 1, s < -1 but more than one component differs from K2")
            return Classification("TwoExtra", summary, certificate=cert)
        ok, big = _is_clique_union(g)
        if not (ok and big == 2):
            raise ConsistencyError("two eigenvalues off +/-1 without r > 1, s < -1, yet not a clique union")
        return Classification("TwoExtra", summary, clique_union=True)
    return Classification("MoreThanTwo", summary)


def _edge_count(g: Graph, s: VertexSet) -> int:
    return sum((g.rows[v] & s.mask).bit_count() for v in s) // 2


def in_class_G(g: Graph) -> TwoEigCertificate | None:
    """Certificate iff g is connected with spectrum {r, s, +/-1...}, r > 1, s < -1."""
    if len(connected_components(g)) != 1:
        return None
    c = classify_spectrum(g)
    return c.certificate if c.kind == "TwoExtra" else None


def count_roots_above(cp: Sequence[int], threshold: int | Fraction, strict: bool = True) -> int:
    """Distinct real roots above (or at, if not strict) the threshold."""
    return RootCounter(cp).distinct_above(threshold, strict)


def count_roots_with_multiplicity(cp: Sequence[int], threshold: int | Fraction, strict: bool = True) -> int:
    return RootCounter(cp).above(threshold, strict)


def approx_root(cp: Sequence[int], which: int, tol: Fraction = ROOT_TOLERANCE) -> tuple[Fraction, Fraction]:
    """Interval (lo, hi] of width <= tol containing the which-th largest real root.

    Roots are counted with multiplicity, largest first.
    """
    try:
        return RootCounter(cp).kth_largest(which, tol)
    except ValueError as exc:
        raise ContractViolation(str(exc)) from None


@dataclass(frozen=True)
class PsdReport:
    rank: int
    c1: int  # trace of A^2 - I restricted to its nonzero part
    c0: int
    min_principal_minor: int


def shifted_square(g: Graph) -> list[list[int]]:
    """A^2 - I as an integer matrix."""
    n = g.n
    return [
        [(g.rows[u] & g.rows[v]).bit_count() - (u == v) for v in range(n)]
        for u in range(n)
    ]


def psd_rank_check(g: Graph, cert: TwoEigCertificate | None = None) -> PsdReport:
    """Verify exactly that A^2 - I is positive semidefinite of rank 2."""
    if cert is None:
        cert = in_class_G(g)
    if cert is None:
        raise ContractViolation("graph is not in the class; no certificate")
    n = g.n
    b = shifted_square(g)
    cp = char_poly_matrix(b)
    if any(cp[:n - 2]) or len(cp) != n + 1:
        raise ConsistencyError("A^2 - I does not have rank 2")
    c0, c1 = cp[n - 2], -cp[n - 1]
    t, d = cert.t, cert.d
    # nonzero eigenvalues are r^2 - 1 and s^2 - 1
    if c1 != t * t - 2 * d - 2 or c0 != d * d - t * t + 2 * d + 1:
        raise ConsistencyError("A^2 - I spectrum disagrees with the certificate")
    if not (c1 > 0 and c0 > 0):
        raise ConsistencyError("A^2 - I is not positive semidefinite")
    minors = [b[u][u] for u in range(n)]
    minors += [b[u][u] * b[v][v] - b[u][v] * b[v][u] for u in range(n) for v in range(u + 1, n)]
    worst = min(minors)
    if worst < 0:
        raise ConsistencyError("A^2 - I has a negative principal minor")
    return PsdReport(rank=2, c1=c1, c0=c0, min_principal_minor=worst)
