"""Pure-Python kernels; the fallback when the compiled extension is absent.

Conventions shared with ``_ckernels.pyx``:

* an operation of arity ``k`` on ``n`` elements is a flat table of length
  ``n**k``; the tuple ``(t0, ..., tk-1)`` lives at ``t0 + t1*n + ... ``
  (coordinate 0 varies fastest);
* a binary relation is a flat ``n*n`` byte mask, ``rel[a*n + b]``;
* a partition is its restricted growth string ``block_of``;
* counterexample searches walk argument tuples in lexicographic order with
  coordinate 0 most significant, so the first hit is deterministic.
"""

from __future__ import annotations

from itertools import product

from finalg.tuples import restricted_growth_strings as _rgs_iter


def _index(t, n):
    idx = 0
    mult = 1
    for x in t:
        idx += x * mult
        mult *= n
    return idx


def binary_violation(table, n, k, rel):
    """First ``(u, v)`` with ``rel(u_i, v_i)`` for all i but not ``rel(f u, f v)``."""
    if n == 0:
        return None
    table = list(table)
    rel = bytes(rel)
    nbrs = [[y for y in range(n) if rel[x * n + y]] for x in range(n)]
    for u in product(range(n), repeat=k):
        fu = table[_index(u, n)]
        for v in product(*(nbrs[x] for x in u)):
            fv = table[_index(v, n)]
            if not rel[fu * n + fv]:
                return u, v
    return None


def _single_coordinate_neighbours(u, block_members):
    # lexicographic order of tuples differing from u in exactly one slot
    k = len(u)
    for i in range(k):
        for b in block_members[u[i]]:
            if b < u[i]:
                yield i, b
    for i in range(k - 1, -1, -1):
        for b in block_members[u[i]]:
            if b > u[i]:
                yield i, b


def partition_violation(table, n, k, block_of):
    """First single-coordinate counterexample to compatibility with a partition.

    For an equivalence this decides compatibility exactly: related tuples are
    joined by a chain of one-coordinate changes.
    """
    table = list(table)
    block_of = list(block_of)
    members = {}
    for x, b in enumerate(block_of):
        members.setdefault(b, []).append(x)
    block_members = [members[block_of[x]] for x in range(n)]
    for u in product(range(n), repeat=k):
        iu = _index(u, n)
        bu = block_of[table[iu]]
        for i, b in _single_coordinate_neighbours(u, block_members):
            v = u[:i] + (b,) + u[i + 1:]
            if block_of[table[_index(v, n)]] != bu:
                return u, v
    return None


def _respects(table, n, k, blk, rep):
    size = len(table)
    stride = 1
    for _ in range(k):
        for idx in range(size):
            d = (idx // stride) % n
            r = rep[d]
            if r != d and blk[table[idx]] != blk[table[idx + (r - d) * stride]]:
                return False
        stride *= n
    return True


def enumerate_congruences(tables, arities, n):
    """All restricted growth strings whose partition respects every table."""
    tables = [list(t) for t in tables]
    ops = [(t, k) for t, k in zip(tables, arities) if k > 0]
    out = []
    for a in _rgs_iter(n):
        rep = [0] * n
        first = {}
        for x, b in enumerate(a):
            rep[x] = first.setdefault(b, x)
        if all(_respects(t, n, k, a, rep) for t, k in ops):
            out.append(tuple(a))
    return out


def _canonical(find, n):
    ids = {}
    out = []
    for x in range(n):
        out.append(ids.setdefault(find(x), len(ids)))
    return tuple(out)


def congruence_closure(tables, arities, n, pairs):
    """Restricted growth string of the least congruence containing ``pairs``."""
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    queue = []

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            if ra < rb:
                parent[rb] = ra
            else:
                parent[ra] = rb
            queue.append((a, b))

    for a, b in pairs:
        union(a, b)
    ops = [(list(t), k) for t, k in zip(tables, arities) if k > 0]
    while queue:
        a, b = queue.pop()
        for t, k in ops:
            size = len(t)
            stride = 1
            for _ in range(k):
                delta = (b - a) * stride
                for idx in range(size):
                    if (idx // stride) % n == a:
                        union(t[idx], t[idx + delta])
                stride *= n
    return _canonical(find, n)


def dep_violation(tables, sizes, m, mask, members):
    """First choice of ``m`` member columns whose row-wise image leaves the relation.

    ``tables[i]`` is an ``m``-ary table over ``sizes[i]`` elements, ``mask``
    is indexed by the mixed-radix code of a tuple (coordinate 0 least
    significant), and ``members`` lists the relation's tuples in lexicographic
    order. Returns the chosen member positions, or ``None``.
    """
    k = len(sizes)
    tables = [list(t) for t in tables]
    mask = bytes(mask)
    place = []
    p = 1
    for s in sizes:
        place.append(p)
        p *= s
    for choice in product(range(len(members)), repeat=m):
        code = 0
        for i in range(k):
            s = sizes[i]
            row = 0
            mult = 1
            for c in choice:
                row += members[c][i] * mult
                mult *= s
            code += tables[i][row] * place[i]
        if not mask[code]:
            return list(choice)
    return None
