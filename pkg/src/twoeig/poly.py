"""Exact arithmetic on integer polynomials and Sturm-sequence root counting.

Polynomials are tuples of Python ints, lowest degree first; the zero
polynomial is the empty tuple.  Nothing here touches floating point.
"""
from __future__ import annotations

from fractions import Fraction
from functools import cached_property
from math import gcd as igcd
from typing import Iterable, Sequence

Poly = tuple[int, ...]

ROOT_TOLERANCE = Fraction(1, 10**9)


def trim(coeffs: Iterable[int]) -> Poly:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def degree(p: Sequence[int]) -> int:
    """Degree of ``p``; -1 for the zero polynomial."""
    return len(p) - 1


def add(p: Sequence[int], q: Sequence[int]) -> Poly:
    if len(p) < len(q):
        p, q = q, p
    out = list(p)
    for i, c in enumerate(q):
        out[i] += c
    return trim(out)


def neg(p: Sequence[int]) -> Poly:
    return tuple(-c for c in p)


def sub(p: Sequence[int], q: Sequence[int]) -> Poly:
    return add(p, neg(q))


def scale(p: Sequence[int], k: int) -> Poly:
    return trim(c * k for c in p)


def mul(p: Sequence[int], q: Sequence[int]) -> Poly:
    if not p or not q:
        return ()
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return trim(out)


def power(p: Sequence[int], e: int) -> Poly:
    out: Poly = (1,)
    for _ in range(e):
        out = mul(out, p)
    return out


def derivative(p: Sequence[int]) -> Poly:
    return trim(i * c for i, c in enumerate(p) if i)


def evaluate(p: Sequence[int], x: int | Fraction) -> int | Fraction:
    v: int | Fraction = 0
    for c in reversed(p):
        v = v * x + c
    return v


def content(p: Sequence[int]) -> int:
    g = 0
    for c in p:
        g = igcd(g, c)
    return g


def primitive_part(p: Sequence[int]) -> Poly:
    """``p`` divided by its content, normalised to a positive leading coefficient."""
    p = trim(p)
    if not p:
        return ()
    g = content(p)
    if p[-1] < 0:
        g = -g
    return tuple(c // g for c in p)


def divmod_poly(p: Sequence[int], q: Sequence[int]) -> tuple[Poly, Poly]:
    """Division over the integers; raises if a quotient coefficient is not integral."""
    q = trim(q)
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(trim(p))
    dq, lc = len(q) - 1, q[-1]
    if len(rem) - 1 < dq:
        return (), tuple(rem)
    quot = [0] * (len(rem) - dq)
    for i in range(len(rem) - 1, dq - 1, -1):
        c = rem[i]
        if c == 0:
            continue
        f, r = divmod(c, lc)
        if r:
            raise ArithmeticError("quotient is not an integer polynomial")
        quot[i - dq] = f
        for j in range(dq + 1):
            rem[i - dq + j] -= f * q[j]
    return trim(quot), trim(rem)


def exact_div(p: Sequence[int], q: Sequence[int]) -> Poly:
    """``p / q``, which must be exact."""
    quot, rem = divmod_poly(p, q)
    if rem:
        raise ArithmeticError("division leaves a nonzero remainder")
    return quot


def divides(q: Sequence[int], p: Sequence[int]) -> bool:
    """True iff ``q`` divides ``p`` over Q (equivalently over Z for primitive ``q``)."""
    q = primitive_part(q)
    try:
        exact_div(p, q)
    except ArithmeticError:
        return False
    return True


def pseudo_remainder(p: Sequence[int], q: Sequence[int]) -> Poly:
    """Remainder of ``|lc(q)|**(deg p - deg q + 1) * p`` by ``q``.

    The multiplier is positive, so signs are preserved as Sturm chains require.
    """
    q = trim(q)
    rem = list(trim(p))
    dq = len(q) - 1
    if len(rem) - 1 < dq:
        return tuple(rem)
    lc = q[-1]
    alc = abs(lc)
    sgn = 1 if lc > 0 else -1
    for i in range(len(rem) - 1, dq - 1, -1):
        c = rem[i]
        rem = [alc * x for x in rem]
        if c:
            f = c * sgn
            for j in range(dq + 1):
                rem[i - dq + j] -= f * q[j]
        rem.pop()
    return trim(rem)


def gcd(p: Sequence[int], q: Sequence[int]) -> Poly:
    """Primitive gcd with positive leading coefficient (``()`` if both are zero)."""
    a, b = primitive_part(p), primitive_part(q)
    if len(a) < len(b):
        a, b = b, a
    while b:
        a, b = b, primitive_part(pseudo_remainder(a, b))
    return a


def squarefree_part(p: Sequence[int]) -> Poly:
    p = primitive_part(p)
    g = gcd(p, derivative(p))
    return exact_div(p, g)


def multiplicity(p: Sequence[int], root: int) -> int:
    """Multiplicity of the integer ``root`` as a root of ``p``."""
    lin = (-root, 1)
    m, p = 0, trim(p)
    while p:
        quot, rem = divmod_poly(p, lin)
        if rem:
            break
        m, p = m + 1, quot
    return m


def sign_at(p: Sequence[int], x: Fraction) -> int:
    """Sign of ``p(x)`` for rational ``x``, using integer-only Horner evaluation."""
    a, b = x.numerator, x.denominator
    v, bpow = 0, 1
    for c in reversed(p):
        v = v * a + c * bpow
        bpow *= b
    # v = b**deg * p(a/b) and b > 0
    return (v > 0) - (v < 0)


def sturm_chain(p: Sequence[int]) -> list[Poly]:
    """Primitive-normalised Sturm sequence p, p', -prem(...), ..."""
    p = primitive_part(p)
    if len(p) <= 1:
        return [p] if p else []
    chain = [p, primitive_part(derivative(p))]
    while True:
        r = pseudo_remainder(chain[-2], chain[-1])
        if not r:
            break
        # divide by the positive content only; the sign is what Sturm counts
        g = content(r)
        chain.append(tuple(-c // g for c in r))
    return chain


def _variations(signs: Iterable[int]) -> int:
    count, last = 0, 0
    for s in signs:
        if s == 0:
            continue
        s = 1 if s > 0 else -1
        if last and s != last:
            count += 1
        last = s
    return count


def cauchy_bound(p: Sequence[int]) -> int:
    """Integer ``B`` with every real root strictly inside ``(-B, B)``."""
    p = trim(p)
    lc = abs(p[-1])
    return 2 + max((abs(c) + lc - 1) // lc for c in p[:-1]) if len(p) > 1 else 1


class RootCounter:
    """Counts real roots of an integer polynomial above a rational threshold.

    The square-free decomposition ``g0 = p, g_{i+1} = gcd(g_i, g_i')`` is
    computed once.  A root of multiplicity ``m`` is a simple root of each of
    ``g0/g1, ..., g(m-1)/gm``, so summing distinct counts over the levels
    counts multiplicities.
    """

    def __init__(self, p: Sequence[int]):
        p = trim(p)
        if not p:
            raise ValueError("the zero polynomial has no well-defined roots")
        self.poly: Poly = p
        self.levels: list[list[Poly]] = []
        g = primitive_part(p)
        while len(g) > 1:
            d = gcd(g, derivative(g))
            self.levels.append(sturm_chain(exact_div(g, d)))
            g = d

    @cached_property
    def bound(self) -> int:
        return cauchy_bound(self.poly)

    @property
    def degree(self) -> int:
        return len(self.poly) - 1

    @staticmethod
    def _above(chain: list[Poly], x: Fraction, strict: bool) -> int:
        at_x = _variations(sign_at(q, x) for q in chain)
        at_inf = _variations(q[-1] for q in chain)
        n = at_x - at_inf
        if not strict and sign_at(chain[0], x) == 0:
            n += 1
        return n

    def distinct_above(self, x: int | Fraction, strict: bool = True) -> int:
        return self._above(self.levels[0], Fraction(x), strict) if self.levels else 0

    def above(self, x: int | Fraction, strict: bool = True) -> int:
        x = Fraction(x)
        return sum(self._above(chain, x, strict) for chain in self.levels)

    def real_root_count(self) -> int:
        return self.above(-self.bound)

    def kth_largest(self, which: int, tol: Fraction = ROOT_TOLERANCE) -> tuple[Fraction, Fraction]:
        """Interval ``(lo, hi]`` of width <= tol holding the which-th largest root."""
        total = self.real_root_count()
        if not 1 <= which <= total:
            raise ValueError(f"root index {which} out of range 1..{total}")
        lo, hi = Fraction(-self.bound), Fraction(self.bound)
        while hi - lo > tol:
            mid = (lo + hi) / 2
            if self.above(mid) >= which:
                lo = mid
            else:
                hi = mid
        return lo, hi

    def isolate_all(self, tol: Fraction = ROOT_TOLERANCE) -> list[tuple[Fraction, Fraction, int]]:
        """Intervals ``(lo, hi]`` with root counts, largest roots first."""
        out: list[tuple[Fraction, Fraction, int]] = []
        lo, hi = Fraction(-self.bound), Fraction(self.bound)
        stack = [(lo, hi, self.above(lo), self.above(hi))]
        while stack:
            lo, hi, n_lo, n_hi = stack.pop()
            k = n_lo - n_hi
            if k == 0:
                continue
            if hi - lo <= tol:
                out.append((lo, hi, k))
                continue
            mid = (lo + hi) / 2
            n_mid = self.above(mid)
            # push the lower half first so the upper half is processed first
            stack.append((lo, mid, n_lo, n_mid))
            stack.append((mid, hi, n_mid, n_hi))
        return out
