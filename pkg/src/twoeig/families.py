"""The connected graphs with exactly two eigenvalues r > 1 and s < -1 besides +/-1.

Six cases (three infinite families, seven sporadic graphs), plus the
friendship graphs F_k as an alias for case (ii) with a = 1.  Adjacency
matrices are assembled block by block in the printed block order, so vertex
indices are reproducible:

    (i)   [[O, J-I_m], [J-I_m, O]]                       m >= 3
    (ii)  [[J-I_a, J], [J, R_2k]]                        a >= 1, k >= 2
    (iii) [[R_2l, J], [J, R_2m]]                         l >= m >= 2
    (iv)  [[O, N], [N^T, O]],  N = [[1, 1^T], [1, I_4]] or [[J-I_3, J], [O, J-I_3]]
    (v)   [[J-I_a, J, 1], [J, J-I_b, 0], [1^T, 0^T, 0]]  (a, b) in {(6,5), (4,6), (3,8)}
    (vi)  [[J-I_a, J, O], [J, O, J-I_m], [O, J-I_m, O]]  (a, m) in {(3,5), (4,4)}

R_2k is the reverse identity of order 2k: vertex i is matched to 2k-1-i.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Sequence

from .graph import Graph, VertexSet
from .spectra import SpectrumSummary, TwoEigCertificate, char_poly, in_class_G, strip_pm_one

KINDS = ("i", "ii", "iii", "iv", "v", "vi", "friendship")
SPORADIC_V = ((6, 5), (4, 6), (3, 8))
SPORADIC_VI = ((3, 5), (4, 4))

# (p, q, t, d) read off the printed spectra of the sporadic cases
_SPORADIC_SPECTRA = {
    ("iv", 1): (4, 4, 0, -9),  # {+-3, 1^4, -1^4}
    ("iv", 2): (5, 5, 0, -16),  # {+-4, 1^5, -1^5}
    ("v", (6, 5)): (1, 9, 8, -24),  # 4 +- 2 sqrt(10)
    ("v", (4, 6)): (1, 8, 7, -20),  # (7 +- sqrt(129)) / 2
    ("v", (3, 8)): (1, 9, 8, -21),  # 4 +- sqrt(37)
    ("vi", (3, 5)): (5, 6, 1, -32),  # (1 +- sqrt(129)) / 2
    ("vi", (4, 4)): (4, 6, 2, -27),  # 1 +- 2 sqrt(7)
}

_PARAM_NAMES = {
    "i": ("m",),
    "ii": ("a", "k"),
    "iii": ("l", "m"),
    "iv": ("variant",),
    "v": ("a", "b"),
    "vi": ("a", "m"),
    "friendship": ("k",),
}


@dataclass(frozen=True)
class FamilySpec:
    """One member of a family, e.g. ``FamilySpec("ii", (2, 7))`` for a = 2, k = 7."""

    kind: str
    params: tuple[int, ...] = field(default=())

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise ValueError(f"unknown family {self.kind!r}")
        object.__setattr__(self, "params", tuple(int(x) for x in self.params))
        names = _PARAM_NAMES[self.kind]
        if len(self.params) != len(names):
            raise ValueError(f"family {self.kind} takes parameters {names}")
        _check_bounds(self.kind, self.params)

    def __getattr__(self, name: str) -> int:
        names = _PARAM_NAMES.get(self.__dict__.get("kind", ""), ())
        if name in names:
            return self.params[names.index(name)]
        raise AttributeError(name)

    @property
    def n(self) -> int:
        return vertex_count(self)

    def normalized(self) -> FamilySpec:
        """Friendship(k) as case (ii) with a = 1; other specs unchanged."""
        if self.kind == "friendship":
            return FamilySpec("ii", (1, self.params[0]))
        return self

    def __str__(self) -> str:
        if self.kind == "iv":
            return f"iv:{self.params[0]}"
        names = _PARAM_NAMES[self.kind]
        return f"{self.kind}:" + ",".join(f"{k}={v}" for k, v in zip(names, self.params))

    @property
    def sort_key(self) -> tuple[int, tuple[int, ...]]:
        return KINDS.index(self.kind), self.params


def _check_bounds(kind: str, p: tuple[int, ...]) -> None:
    ok = {
        "i": lambda: p[0] >= 3,
        "ii": lambda: p[0] >= 1 and p[1] >= 2,
        "iii": lambda: p[0] >= p[1] >= 2,
        "iv": lambda: p[0] in (1, 2),
        "v": lambda: p in SPORADIC_V,
        "vi": lambda: p in SPORADIC_VI,
        "friendship": lambda: p[0] >= 1,
    }[kind]()
    if not ok:
        raise ValueError(f"parameters {p} out of range for family {kind}")


def friendship(k: int) -> FamilySpec:
    return FamilySpec("friendship", (k,))


_SPEC_RE = re.compile(r"^\s*(friendship|iii|ii|iv|vi|v|i)\s*:\s*(.*?)\s*$", re.IGNORECASE)


def parse_family_spec(text: str) -> FamilySpec:
    """Parse ``"ii:a=1,k=16"``, ``"iv:1"``, ``"friendship:k=16"`` and similar."""
    m = _SPEC_RE.match(text)
    if not m:
        raise ValueError(f"cannot parse family spec {text!r}")
    kind, body = m.group(1).lower(), m.group(2)
    names = _PARAM_NAMES[kind]
    if kind == "iv" and "=" not in body:
        body = f"variant={body}"
    values: dict[str, int] = {}
    for part in filter(None, (s.strip() for s in body.split(","))):
        key, sep, val = part.partition("=")
        key = key.strip().lower()
        if key == "ell":
            key = "l"
        if not sep or key not in names or key in values:
            raise ValueError(f"bad parameter {part!r} in {text!r}")
        try:
            values[key] = int(val)
        except ValueError:
            raise ValueError(f"parameter {key} must be an integer in {text!r}") from None
    missing = [k for k in names if k not in values]
    if missing:
        raise ValueError(f"missing parameter(s) {missing} in {text!r}")
    return FamilySpec(kind, tuple(values[k] for k in names))


def vertex_count(spec: FamilySpec) -> int:
    kind, p = spec.kind, spec.params
    if kind == "i":
        return 2 * p[0]
    if kind == "ii":
        return p[0] + 2 * p[1]
    if kind == "friendship":
        return 1 + 2 * p[0]
    if kind == "iii":
        return 2 * p[0] + 2 * p[1]
    if kind == "iv":
        return 10 if p[0] == 1 else 12
    if kind == "v":
        return p[0] + p[1] + 1
    return p[0] + 2 * p[1]


# --- block matrix helpers -------------------------------------------------

Block = list[list[int]]


def _j(r: int, c: int) -> Block:
    return [[1] * c for _ in range(r)]


def _o(r: int, c: int) -> Block:
    return [[0] * c for _ in range(r)]


def _i(n: int) -> Block:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def _j_minus_i(n: int) -> Block:
    return [[int(i != j) for j in range(n)] for i in range(n)]


def _reverse_identity(n: int) -> Block:
    return [[int(i + j == n - 1) for j in range(n)] for i in range(n)]


def _transpose(b: Block) -> Block:
    return [list(col) for col in zip(*b)] if b else []


def assemble(blocks: Sequence[Sequence[Block]]) -> list[list[int]]:
    """Concatenate a grid of blocks into one matrix."""
    out: list[list[int]] = []
    for row_of_blocks in blocks:
        height = len(row_of_blocks[0])
        for r in range(height):
            out.append([x for b in row_of_blocks for x in b[r]])
    return out


def block_matrix(spec: FamilySpec) -> tuple[list[list[int]], list[int]]:
    """Adjacency matrix and the sizes of its printed diagonal blocks."""
    kind, p = spec.kind, spec.params
    if kind == "i":
        m = p[0]
        return assemble([[_o(m, m), _j_minus_i(m)], [_j_minus_i(m), _o(m, m)]]), [m, m]
    if kind in ("ii", "friendship"):
        a, k = (p[0], p[1]) if kind == "ii" else (1, p[0])
        return assemble([[_j_minus_i(a), _j(a, 2 * k)], [_j(2 * k, a), _reverse_identity(2 * k)]]), [a, 2 * k]
    if kind == "iii":
        l, m = p
        return (
            assemble([[_reverse_identity(2 * l), _j(2 * l, 2 * m)], [_j(2 * m, 2 * l), _reverse_identity(2 * m)]]),
            [2 * l, 2 * m],
        )
    if kind == "iv":
        if p[0] == 1:
            nmat = assemble([[_j(1, 1), _j(1, 4)], [_j(4, 1), _i(4)]])
            sizes = [1, 4, 1, 4]
        else:
            nmat = assemble([[_j_minus_i(3), _j(3, 3)], [_o(3, 3), _j_minus_i(3)]])
            sizes = [3, 3, 3, 3]
        s = len(nmat)
        return assemble([[_o(s, s), nmat], [_transpose(nmat), _o(s, s)]]), sizes
    if kind == "v":
        a, b = p
        return (
            assemble([
                [_j_minus_i(a), _j(a, b), _j(a, 1)],
                [_j(b, a), _j_minus_i(b), _o(b, 1)],
                [_j(1, a), _o(1, b), _o(1, 1)],
            ]),
            [a, b, 1],
        )
    a, m = p
    return (
        assemble([
            [_j_minus_i(a), _j(a, m), _o(a, m)],
            [_j(m, a), _o(m, m), _j_minus_i(m)],
            [_o(m, a), _j_minus_i(m), _o(m, m)],
        ]),
        [a, m, m],
    )


def construct(spec: FamilySpec) -> Graph:
    return Graph.from_matrix(block_matrix(spec)[0])


def printed_partition(spec: FamilySpec) -> list[VertexSet]:
    """Vertex partition given by the printed diagonal blocks."""
    _, sizes = block_matrix(spec)
    cells, start = [], 0
    for s in sizes:
        cells.append(VertexSet(((1 << s) - 1) << start))
        start += s
    return cells


def expected_certificate(spec: FamilySpec) -> TwoEigCertificate:
    """Closed-form (p, q, t, d) with residual x^2 - t x + d."""
    spec_n = spec.normalized()
    kind, p = spec_n.kind, spec_n.params
    if kind == "ii" and p[1] < 2:
        raise ValueError("F_1 = K3 is not in the class; closed form needs k >= 2")
    if kind == "i":
        m = p[0]
        return TwoEigCertificate(m - 1, m - 1, 0, -(m - 1) ** 2)
    if kind == "ii":
        a, k = p
        # roots (a +- sqrt(a^2 + 8ak - 4a + 4)) / 2
        return TwoEigCertificate(k - 1, a + k - 1, a, a - 2 * a * k - 1)
    if kind == "iii":
        l, m = p
        # roots 1 +- 2 sqrt(lm)
        return TwoEigCertificate(l + m - 2, l + m, 2, 1 - 4 * l * m)
    key = (kind, p[0]) if kind == "iv" else (kind, p)
    return TwoEigCertificate(*_SPORADIC_SPECTRA[key])


def expected_spectrum(spec: FamilySpec) -> SpectrumSummary:
    c = expected_certificate(spec)
    return SpectrumSummary(c.p, c.q, c.residual)


def verify_family(spec: FamilySpec, graph: Graph | None = None) -> bool:
    """Exact check of the constructed (or supplied) graph against the closed form."""
    g = construct(spec) if graph is None else graph
    expected = expected_spectrum(spec)
    if strip_pm_one(char_poly(g)) != expected:
        return False
    cert = in_class_G(g)
    return cert is not None and cert == expected_certificate(spec)


def enumerate_instances(n_max: int) -> list[FamilySpec]:
    """Every member of the six cases with at most ``n_max`` vertices, once each."""
    if n_max < 5:
        raise ValueError("n_max must be at least 5")
    out: list[FamilySpec] = []
    out += [FamilySpec("i", (m,)) for m in range(3, n_max // 2 + 1)]
    out += [FamilySpec("ii", (a, k)) for a in range(1, n_max - 3) for k in range(2, (n_max - a) // 2 + 1)]
    out += [
        FamilySpec("iii", (l, m))
        for l in range(2, n_max // 2)
        for m in range(2, l + 1)
        if 2 * (l + m) <= n_max
    ]
    out += [FamilySpec("iv", (v,)) for v in (1, 2) if (10, 12)[v - 1] <= n_max]
    out += [FamilySpec("v", ab) for ab in SPORADIC_V if sum(ab) + 1 <= n_max]
    out += [FamilySpec("vi", am) for am in SPORADIC_VI if am[0] + 2 * am[1] <= n_max]
    return sorted(out, key=lambda s: s.sort_key)
