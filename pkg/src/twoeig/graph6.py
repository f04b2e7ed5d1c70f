"""graph6 encoding and decoding.

Header: ``chr(63 + n)`` for n <= 62, otherwise ``'~'`` followed by n as three
6-bit groups.  Body: the upper triangle read column by column
(x(0,1), x(0,2), x(1,2), x(0,3), ...), packed six bits per byte, big-endian,
zero padded, each byte offset by 63.
"""
from __future__ import annotations

from typing import IO, Iterable, Iterator

from .graph import MAX_VERTICES, Graph


def _encode_n(n: int) -> str:
    if n <= 62:
        return chr(63 + n)
    if n <= 258047:
        return "~" + "".join(chr(63 + (n >> s & 63)) for s in (12, 6, 0))
    raise ValueError(f"graph6 cannot encode n = {n} with the short header")


def encode(g: Graph) -> str:
    n = g.n
    out = [_encode_n(n)]
    acc = nbits = 0
    for j in range(1, n):
        rj = g.rows[j]
        for i in range(j):
            acc = acc << 1 | (rj >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(63 + acc))
                acc = nbits = 0
    if nbits:
        out.append(chr(63 + (acc << (6 - nbits))))
    return "".join(out)


def decode(line: str) -> Graph:
    s = line.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise ValueError("empty graph6 string")
    data = [ord(c) - 63 for c in s]
    if any(not 0 <= x <= 63 for x in data):
        raise ValueError(f"invalid graph6 character in {line!r}")
    if data[0] == 63:
        if len(data) >= 2 and data[1] == 63:
            raise ValueError("graph6 8-byte header (n > 258047) is not supported")
        if len(data) < 4:
            raise ValueError("truncated graph6 header")
        n = data[1] << 12 | data[2] << 6 | data[3]
        body = data[4:]
    else:
        n = data[0]
        body = data[1:]
    if n == 0:
        raise ValueError("graph6 string encodes the empty graph; at least one vertex required")
    if n > MAX_VERTICES:
        raise ValueError(f"graph6 string has {n} vertices; limit is {MAX_VERTICES}")
    need = n * (n - 1) // 2
    if len(body) != (need + 5) // 6:
        raise ValueError(f"graph6 body has {len(body)} bytes, expected {(need + 5) // 6}")
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if body[k // 6] >> (5 - k % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    return Graph._trusted(n, tuple(rows))


def read_graph6(stream: IO[str]) -> Iterator[Graph]:
    """Yield graphs from a stream, one per non-blank line."""
    for line in stream:
        if line.strip():
            yield decode(line)


def write_graph6(graphs: Iterable[Graph], stream: IO[str]) -> None:
    for g in graphs:
        stream.write(encode(g) + "\n")
