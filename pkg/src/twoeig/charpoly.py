"""Exact characteristic polynomials of integer matrices.

Two independent routes:

* ``leverrier``: the Faddeev-LeVerrier recurrence over Python integers
  (every division by k is exact).  O(n^4) additions; used for small orders.
* ``modular``: Hessenberg reduction modulo several primes below 2**26 and
  Chinese remaindering.  The number of primes comes from a rigorous bound on
  the coefficients, so the result is exact, not probabilistic.
"""
from __future__ import annotations

import math
from functools import lru_cache
from typing import Sequence

import numpy as np

from .graph import Graph, iter_bits
from .poly import Poly, trim

LEVERRIER_MAX_N = 20
_PRIME_CEILING = 1 << 26


def _leverrier(sparse_rows: list[list[tuple[int, int]]], n: int) -> Poly:
    c = [0] * (n + 1)
    c[n] = 1
    m = [[0] * n for _ in range(n)]
    for k in range(1, n + 1):
        # M_k = A M_{k-1} + c_{n-k+1} I ; then AM = A M_k
        for i in range(n):
            m[i][i] += c[n - k + 1]
        am = []
        for row in sparse_rows:
            acc = [0] * n
            for j, a in row:
                mj = m[j]
                if a == 1:
                    acc = [x + y for x, y in zip(acc, mj)]
                else:
                    acc = [x + a * y for x, y in zip(acc, mj)]
            am.append(acc)
        tr = sum(am[i][i] for i in range(n))
        q, r = divmod(-tr, k)
        if r:
            raise ArithmeticError("non-exact division in Faddeev-LeVerrier")
        c[n - k] = q
        m = am
    return tuple(c)


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    for d in range(2, math.isqrt(p) + 1):
        if p % d == 0:
            return False
    return True


@lru_cache(maxsize=None)
def _primes(count: int) -> tuple[int, ...]:
    out: list[int] = []
    p = _PRIME_CEILING - 1
    while len(out) < count:
        if _is_prime(p):
            out.append(p)
        p -= 2
    return tuple(out)


def _charpoly_mod(a: np.ndarray, p: int) -> list[int]:
    n = a.shape[0]
    h = a % p
    for j in range(n - 2):
        nz = np.flatnonzero(h[j + 1:, j])
        if nz.size == 0:
            continue
        piv = j + 1 + int(nz[0])
        if piv != j + 1:
            h[[piv, j + 1], j:] = h[[j + 1, piv], j:]
            h[:, [piv, j + 1]] = h[:, [j + 1, piv]]
        rows = np.flatnonzero(h[j + 2:, j]) + (j + 2)
        if rows.size == 0:
            continue
        inv = pow(int(h[j + 1, j]), p - 2, p)
        f = h[rows, j] * inv % p
        # columns left of j are already zero in these rows
        h[rows, j:] = (h[rows, j:] - f[:, None] * h[j + 1, j:]) % p
        h[:, j + 1] = (h[:, j + 1] + h[:, rows] @ f) % p
    diag = h.diagonal().tolist()
    sub = [0] + h.diagonal(-1).tolist()
    polys = np.zeros((n + 1, n + 1), dtype=np.int64)
    polys[0, 0] = 1
    for m in range(1, n + 1):
        prev = polys[m - 1]
        cur = np.zeros(n + 1, dtype=np.int64)
        cur[1:] = prev[:-1]
        cur = (cur - diag[m - 1] * prev) % p
        if m > 1:
            col = h[: m - 1, m - 1].tolist()
            w = [0] * (m - 1)
            prod = 1
            for i in range(m - 1, 0, -1):
                prod = prod * sub[i] % p
                if prod == 0:
                    break
                w[i - 1] = col[i - 1] * prod % p
            cur = (cur - (np.array(w, dtype=np.int64) @ polys[: m - 1]) % p) % p
        polys[m] = cur
    return polys[n].tolist()


def coefficient_bound_bits(matrix: Sequence[Sequence[int]]) -> int:
    """Bits needed to hold twice the largest |coefficient| of det(xI - M).

    Sum |c_j| <= prod (1 + |lambda_i|) <= (1 + sqrt(F / n))**n where F is the
    squared Frobenius norm (Schur's inequality plus AM-GM).
    """
    n = len(matrix)
    frob = sum(x * x for row in matrix for x in row)
    bits = n * math.log2(1 + math.sqrt(frob / n)) if frob else 0.0
    return int(bits) + 8


def _modular(matrix: Sequence[Sequence[int]]) -> Poly:
    n = len(matrix)
    if max((abs(x) for row in matrix for x in row), default=0) >= _PRIME_CEILING:
        raise ValueError("matrix entries too large for the modular route")
    a = np.array(matrix, dtype=np.int64).reshape(n, n)
    # sparse rows first keeps the Hessenberg reduction from filling in early
    order = np.argsort(np.count_nonzero(a, axis=1), kind="stable")
    a = a[np.ix_(order, order)]
    bits = coefficient_bound_bits(matrix)
    primes = _primes(bits // 25 + 1)
    modulus = 1
    coeffs = [0] * (n + 1)
    for p in primes:
        res = _charpoly_mod(a.copy(), p)
        inv = pow(modulus % p, -1, p)
        for i in range(n + 1):
            t = (res[i] - coeffs[i]) * inv % p
            coeffs[i] += modulus * t
        modulus *= p
    half = modulus // 2
    return tuple(c - modulus if c > half else c for c in coeffs)


def char_poly_matrix(matrix: Sequence[Sequence[int]], method: str | None = None) -> Poly:
    """det(xI - M) for a square integer matrix, coefficients lowest degree first."""
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise ValueError("matrix must be square")
    if n == 0:
        return (1,)
    if method is None:
        method = "leverrier" if n <= LEVERRIER_MAX_N else "modular"
    if method == "leverrier":
        sparse = [[(j, int(x)) for j, x in enumerate(row) if x] for row in matrix]
        return trim(_leverrier(sparse, n))
    if method == "modular":
        return trim(_modular([[int(x) for x in row] for row in matrix]))
    raise ValueError(f"unknown method {method!r}")


def char_poly_graph(g: Graph, method: str | None = None) -> Poly:
    n = g.n
    if method is None:
        method = "leverrier" if n <= LEVERRIER_MAX_N else "modular"
    if method == "leverrier":
        sparse = [[(j, 1) for j in iter_bits(r)] for r in g.rows]
        return _leverrier(sparse, n)
    return char_poly_matrix(g.adjacency_matrix(), method)
