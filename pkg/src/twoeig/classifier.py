"""Exhaustive verification of the classification on small orders, cospectral
mates built from the families, and determined-by-spectrum status."""
from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import IO, Iterable, Iterator

from . import graph6
from .catalog import scan_forbidden
from .errors import ConsistencyError, ContractViolation
from .families import FamilySpec, construct, enumerate_instances, expected_certificate, friendship
from .generate import MAX_BUILTIN_N, enumerate_graphs
from .graph import Graph, add_isolated_edges, connected_components, is_clique
from .iso import are_isomorphic, certificate
from .poly import Poly
from .spectra import TwoEigCertificate, char_poly, classify_spectrum, psd_rank_check

__all__ = [
    "enumerate_graphs",
    "StructureReport",
    "check_structure_rules",
    "ClassificationReport",
    "verify_classification",
    "CospectralPair",
    "cospectral_mate_pairs",
    "DsStatus",
    "ds_status",
    "pairwise_distinct_spectra",
    "spectral_collisions",
]


# --- structure rules -------------------------------------------------------

@dataclass(frozen=True)
class StructureReport:
    low_degree: tuple[int, ...]  # degree <= 1 vertices outside K2 components
    dominated_pairs: tuple[tuple[int, int], ...]  # (u, v): N(u) in N(v), d_v - d_u <= 2

    @property
    def ok(self) -> bool:
        return not self.low_degree and not self.dominated_pairs


def check_structure_rules(g: Graph) -> StructureReport:
    in_k2 = 0
    for c in connected_components(g):
        if len(c) == 2:
            in_k2 |= c.mask
    degs = g.degrees()
    low = tuple(v for v in range(g.n) if degs[v] <= 1 and not in_k2 >> v & 1)
    pairs = []
    for u in range(g.n):
        nu = g.rows[u]
        for v in range(g.n):
            if u != v and nu & ~g.rows[v] == 0 and degs[v] - degs[u] <= 2:
                pairs.append((u, v))
    return StructureReport(low, tuple(pairs))


# --- exhaustive sweep ------------------------------------------------------

@dataclass(frozen=True)
class _Outcome:
    kind: str
    connected: bool
    certificate: TwoEigCertificate | None
    error: str | None


def _examine(g: Graph) -> _Outcome:
    connected = len(connected_components(g)) == 1
    try:
        c = classify_spectrum(g)
    except ConsistencyError as exc:
        return _Outcome("Error", connected, None, str(exc))
    return _Outcome(c.kind, connected, c.certificate if connected else None, None)


def _examine_g6(line: str) -> _Outcome:
    return _examine(graph6.decode(line))


@dataclass
class ClassificationReport:
    n_max: int
    members_found: list[tuple[Graph, TwoEigCertificate]] = field(default_factory=list)
    matched_specs: list[FamilySpec] = field(default_factory=list)
    unmatched: list[Graph] = field(default_factory=list)
    missing_specs: list[FamilySpec] = field(default_factory=list)
    duplicate_specs: list[FamilySpec] = field(default_factory=list)
    graphs_examined: dict[int, int] = field(default_factory=dict)
    connected_examined: dict[int, int] = field(default_factory=dict)
    kind_counts: dict[str, int] = field(default_factory=dict)
    structural_errors: list[tuple[Graph, str]] = field(default_factory=list)
    soundness_failures: list[tuple[Graph, str]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not (
            self.unmatched
            or self.missing_specs
            or self.duplicate_specs
            or self.structural_errors
            or self.soundness_failures
        )

    def to_json(self) -> dict:
        return {
            "n_max": self.n_max,
            "ok": self.ok,
            "graphs_examined": {str(k): v for k, v in sorted(self.graphs_examined.items())},
            "connected_examined": {str(k): v for k, v in sorted(self.connected_examined.items())},
            "kind_counts": dict(sorted(self.kind_counts.items())),
            "members": [
                {"graph6": graph6.encode(g), "n": g.n, "p": c.p, "q": c.q, "t": c.t, "d": c.d}
                for g, c in self.members_found
            ],
            "matched_specs": [str(s) for s in self.matched_specs],
            "unmatched": [graph6.encode(g) for g in self.unmatched],
            "missing_specs": [str(s) for s in self.missing_specs],
            "duplicate_specs": [str(s) for s in self.duplicate_specs],
            "structural_errors": [[graph6.encode(g), msg] for g, msg in self.structural_errors],
            "soundness_failures": [[graph6.encode(g), msg] for g, msg in self.soundness_failures],
        }


def _sources(n_max: int, external: IO[str] | None) -> Iterator[Graph]:
    for n in range(1, min(n_max, MAX_BUILTIN_N) + 1):
        yield from enumerate_graphs(n)
    if external is not None:
        # the stream only supplies orders the generator does not cover
        for g in graph6.read_graph6(external):
            if MAX_BUILTIN_N < g.n <= n_max:
                yield g


def _soundness(g: Graph, cert: TwoEigCertificate) -> str | None:
    hits = scan_forbidden(g)
    if hits:
        return f"contains forbidden subgraph {hits[0][0]}"
    try:
        psd_rank_check(g, cert)
    except ConsistencyError as exc:
        return str(exc)
    if not check_structure_rules(g).ok:
        return "violates the degree/neighbourhood rules"
    return None


def verify_classification(
    n_max: int, external_stream: IO[str] | None = None, jobs: int = 1
) -> ClassificationReport:
    """Sweep every graph on at most ``n_max`` vertices and match the class members."""
    if n_max < 1:
        raise ValueError("n_max must be positive")
    if n_max > MAX_BUILTIN_N and external_stream is None:
        raise ValueError(
            f"n_max > {MAX_BUILTIN_N} needs an external graph6 stream for orders above {MAX_BUILTIN_N}"
        )
    report = ClassificationReport(n_max)
    graphs = list(_sources(n_max, external_stream))
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            outcomes = list(pool.map(_examine_g6, [graph6.encode(g) for g in graphs], chunksize=256))
    else:
        outcomes = [_examine(g) for g in graphs]

    members: list[tuple[Graph, TwoEigCertificate]] = []
    for g, out in zip(graphs, outcomes):
        report.graphs_examined[g.n] = report.graphs_examined.get(g.n, 0) + 1
        if out.connected:
            report.connected_examined[g.n] = report.connected_examined.get(g.n, 0) + 1
        report.kind_counts[out.kind] = report.kind_counts.get(out.kind, 0) + 1
        if out.error is not None:
            report.structural_errors.append((g, out.error))
        elif out.certificate is not None:
            members.append((g, out.certificate))
    members.sort(key=lambda m: (m[0].n, certificate(m[0])))
    report.members_found = members

    instances = enumerate_instances(max(n_max, 5)) if n_max >= 5 else []
    found: dict[FamilySpec, int] = {s: 0 for s in instances}
    for g, cert in members:
        problem = _soundness(g, cert)
        if problem:
            report.soundness_failures.append((g, problem))
        hit = None
        for s in instances:
            if s.n == g.n and expected_certificate(s) == cert and are_isomorphic(g, construct(s)):
                hit = s
                break
        if hit is None:
            report.unmatched.append(g)
        else:
            found[hit] += 1
    report.matched_specs = [s for s in instances if found[s] >= 1]
    report.missing_specs = [s for s in instances if found[s] == 0]
    report.duplicate_specs = [s for s in instances if found[s] > 1]
    return report


def proposition_structure_ok(g: Graph) -> bool:
    """The exact structure forced by each spectral kind (used as an extra audit)."""
    c = classify_spectrum(g)
    comps = connected_components(g)
    if c.kind == "AllPmOne":
        return all(len(x) == 2 for x in comps)
    if c.kind == "OneExtra" or c.clique_union:
        want = 1 if c.kind == "OneExtra" else 2
        return all(is_clique(g, x) for x in comps) and sum(len(x) != 2 for x in comps) == want
    return True


# --- cospectral mates ------------------------------------------------------

@dataclass(frozen=True)
class CospectralPair:
    bullet: int  # which of the four mate families, 1..4
    left: FamilySpec
    left_alpha: int
    right: FamilySpec
    right_alpha: int
    char_poly: Poly

    @property
    def n(self) -> int:
        return self.left.n + 2 * self.left_alpha

    def graphs(self) -> tuple[Graph, Graph]:
        return (
            add_isolated_edges(construct(self.left), self.left_alpha),
            add_isolated_edges(construct(self.right), self.right_alpha),
        )

    def to_json(self) -> dict:
        c = expected_certificate(self.left)
        return {
            "bullet": self.bullet,
            "left": str(self.left),
            "left_alpha": self.left_alpha,
            "right": str(self.right),
            "right_alpha": self.right_alpha,
            "n": self.n,
            "p": c.p + self.left_alpha,
            "q": c.q + self.left_alpha,
            "residual_coeffs": [c.d, -c.t, 1],
        }


def _candidate_pairs(n_max: int) -> Iterator[tuple[int, FamilySpec, FamilySpec]]:
    """(bullet, larger H, smaller H') before padding."""
    iii = [s for s in enumerate_instances(max(n_max, 5)) if s.kind == "iii"]
    for s in iii:
        for t in iii:
            if s != t and s.l * s.m == t.l * t.m and s.n > t.n:
                yield 1, s, t
    for s in iii:
        k = s.l * s.m
        yield 2, FamilySpec("ii", (2, k)), s
    yield 3, FamilySpec("iv", (1,)), FamilySpec("i", (4,))
    yield 3, FamilySpec("iv", (2,)), FamilySpec("i", (5,))
    yield 4, friendship(16), FamilySpec("vi", (3, 5))
    yield 4, FamilySpec("ii", (2, 7)), FamilySpec("vi", (4, 4))


def cospectral_mate_pairs(n_max: int, all_paddings: bool = False) -> list[CospectralPair]:
    """Certified cospectral pairs G + alpha K2, G' + alpha' K2 with at most n_max vertices.

    By default the larger graph is unpadded and the smaller one receives just
    enough K2 components; ``all_paddings`` adds every common extra padding.
    """
    if n_max < 10:
        raise ValueError("n_max must be at least 10")
    out: list[CospectralPair] = []
    for bullet, big, small in _candidate_pairs(n_max):
        if big.n > n_max:
            continue
        diff = big.n - small.n
        if diff <= 0 or diff % 2:
            raise ConsistencyError(f"{big} and {small} cannot be padded to equal size")
        extras = range((n_max - big.n) // 2 + 1) if all_paddings else range(1)
        for beta in extras:
            if big.n + 2 * beta > n_max:
                break
            out.append(_certify(bullet, big, beta, small, diff // 2 + beta))
    out.sort(key=lambda p: (p.n, p.bullet, p.left.sort_key, p.right.sort_key, p.left_alpha))
    return out


def _certify(bullet: int, left: FamilySpec, la: int, right: FamilySpec, ra: int) -> CospectralPair:
    g = add_isolated_edges(construct(left), la)
    h = add_isolated_edges(construct(right), ra)
    cp = char_poly(g)
    if cp != char_poly(h):
        raise ConsistencyError(f"{left}+{la}K2 and {right}+{ra}K2 are not cospectral")
    if g.num_edges != h.num_edges or are_isomorphic(g, h):
        raise ConsistencyError(f"{left}+{la}K2 and {right}+{ra}K2 are isomorphic")
    return CospectralPair(bullet, left, la, right, ra, cp)


# --- determined by spectrum -------------------------------------------------

@dataclass(frozen=True)
class DsStatus:
    ds: bool
    reason: str
    mate: FamilySpec | None = None
    mate_alpha: int = 0

    def __str__(self) -> str:
        return ("DS" if self.ds else "NotDS") + f": {self.reason}"


def _is_composite(k: int) -> bool:
    return k >= 4 and any(k % d == 0 for d in range(2, math.isqrt(k) + 1))


def ds_status(spec: FamilySpec) -> DsStatus:
    s = spec.normalized()
    kind, p = s.kind, s.params
    if kind == "ii":
        a, k = p
        if (a, k) == (1, 16):
            return DsStatus(False, "cospectral with (vi) a=3, m=5 plus 10K2", FamilySpec("vi", (3, 5)), 10)
        if (a, k) == (2, 7):
            return DsStatus(False, "cospectral with (vi) a=4, m=4 plus 2K2", FamilySpec("vi", (4, 4)), 2)
        if a == 2 and _is_composite(k):
            m = max(d for d in range(2, math.isqrt(k) + 1) if k % d == 0)
            mate = FamilySpec("iii", (k // m, m))
            return DsStatus(False, f"a = 2 and k = {k} is composite; mate {mate}", mate, (k // m - 1) * (m - 1))
    if kind == "iii":
        l, m = p
        prod = l * m
        inner = [d for d in range(m + 1, l) if prod % d == 0]
        if inner:
            mm = min(max(d, prod // d) for d in inner)
            mate = FamilySpec("iii", (mm, prod // mm))
            return DsStatus(False, f"lm = {prod} has divisor {inner[0]} strictly between m and l; mate {mate}",
                            mate, (l + m - mate.l - mate.m))
    if kind == "iv":
        mate = FamilySpec("i", (4 if p[0] == 1 else 5,))
        return DsStatus(False, f"cospectral with {mate} plus K2", mate, 1)
    return DsStatus(True, "no cospectral mate")


# --- distinctness -------------------------------------------------------------

def spectral_collisions(specs: Iterable[FamilySpec]) -> list[tuple[FamilySpec, FamilySpec]]:
    seen: dict[tuple[int, int, int, int], FamilySpec] = {}
    clashes = []
    for s in specs:
        key = expected_certificate(s).signature
        if key in seen:
            clashes.append((seen[key], s))
        else:
            seen[key] = s
    return clashes


def pairwise_distinct_spectra(n_max: int) -> bool:
    """No two members with at most n_max vertices share a spectrum."""
    if n_max < 5:
        raise ContractViolation("n_max must be at least 5")
    return not spectral_collisions(enumerate_instances(n_max))
