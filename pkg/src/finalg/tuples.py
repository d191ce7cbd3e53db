"""Mixed-radix codes for tuples.

Coordinate 0 is the least significant digit everywhere: over a uniform
carrier of size ``n`` the tuple ``(t0, t1, t2)`` has code ``t0 + t1*n + t2*n*n``.
Operation tables and product carriers are laid out in this order.
"""

from __future__ import annotations

from itertools import product
from typing import Iterator, Sequence


def encode(t: Sequence[int], n: int) -> int:
    code = 0
    mult = 1
    for x in t:
        code += x * mult
        mult *= n
    return code


def decode(code: int, n: int, k: int) -> tuple:
    out = []
    for _ in range(k):
        code, r = divmod(code, n)
        out.append(r)
    return tuple(out)


def encode_mixed(t: Sequence[int], sizes: Sequence[int]) -> int:
    code = 0
    mult = 1
    for x, s in zip(t, sizes):
        code += x * mult
        mult *= s
    return code


def decode_mixed(code: int, sizes: Sequence[int]) -> tuple:
    out = []
    for s in sizes:
        code, r = divmod(code, s)
        out.append(r)
    return tuple(out)


def table_order(n: int, k: int) -> Iterator[tuple]:
    """All k-tuples over n elements in table (little-endian) order."""
    for rev in product(range(n), repeat=k):
        yield rev[::-1]


def lex_tuples(n: int, k: int) -> Iterator[tuple]:
    """All k-tuples in lexicographic order (coordinate 0 most significant)."""
    return product(range(n), repeat=k)


def restricted_growth_strings(n: int) -> Iterator[list]:
    """Restricted growth strings of length ``n`` in lexicographic order.

    Each string labels a set partition (blocks numbered by least element).
    The same list object is mutated and re-yielded; copy it to keep it.
    """
    if n == 0:
        yield []
        return
    a = [0] * n
    m = [0] * n  # m[i] = max(a[:i+1])
    while True:
        yield a
        i = n - 1
        while i > 0 and a[i] > m[i - 1]:
            i -= 1
        if i == 0:
            return
        a[i] += 1
        m[i] = max(m[i - 1], a[i])
        for j in range(i + 1, n):
            a[j] = 0
            m[j] = m[i]
