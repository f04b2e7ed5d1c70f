"""Text helpers shared by the command line: exact decimals and radical forms."""
from __future__ import annotations

import math
from fractions import Fraction


def decimal_string(x: Fraction | int, digits: int = 10) -> str:
    """``x`` rounded half-away-from-zero to ``digits`` places, computed exactly."""
    x = Fraction(x)
    scale = 10**digits
    num = abs(x) * scale
    q, r = divmod(num.numerator, num.denominator)
    if 2 * r >= num.denominator:
        q += 1
    sign = "-" if x < 0 and q else ""
    whole, frac = divmod(q, scale)
    return f"{sign}{whole}.{frac:0{digits}d}" if digits else f"{sign}{whole}"


def _square_split(n: int) -> tuple[int, int]:
    """n = f*f*s with s square-free."""
    f, s = 1, n
    d = 2
    while d * d <= s:
        while s % (d * d) == 0:
            s //= d * d
            f *= d
        d += 1
    return f, s


def quadratic_roots_text(t: int, d: int) -> str:
    """Roots of x^2 - t x + d, e.g. ``(1±√129)/2`` or ``1±2√7`` or ``5, -3``."""
    disc = t * t - 4 * d
    if disc < 0:
        raise ValueError("complex roots")
    root = math.isqrt(disc)
    if root * root == disc:
        hi, lo = Fraction(t + root, 2), Fraction(t - root, 2)
        return f"{hi}, {lo}" if hi != lo else f"{hi}"
    f, s = _square_split(disc)
    if t % 2 == 0 and f % 2 == 0:
        a, b = t // 2, f // 2
        surd = f"{b}√{s}" if b != 1 else f"√{s}"
        return f"{a}±{surd}" if a else f"±{surd}"
    surd = f"{f}√{s}" if f != 1 else f"√{s}"
    return f"({t}±{surd})/2" if t else f"±{surd}/2"


def poly_text(coeffs: tuple[int, ...]) -> str:
    """Human form of a polynomial given lowest degree first."""
    terms = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if c == 0:
            continue
        mag = abs(c)
        if i == 0:
            body = str(mag)
        else:
            var = "x" if i == 1 else f"x^{i}"
            body = var if mag == 1 else f"{mag}{var}"
        if not terms:
            terms.append(("-" if c < 0 else "") + body)
        else:
            terms.append(("- " if c < 0 else "+ ") + body)
    return " ".join(terms) if terms else "0"
