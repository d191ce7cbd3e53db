# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled kernels. Same signatures and results as ``_pykernels``."""

import numpy as np
from libc.stdint cimport int64_t, uint8_t


cdef inline int64_t _tuple_index(int64_t[::1] t, Py_ssize_t k, int64_t n) noexcept nogil:
    cdef int64_t idx = 0, mult = 1
    cdef Py_ssize_t i
    for i in range(k):
        idx += t[i] * mult
        mult *= n
    return idx


def binary_violation(const int64_t[::1] table, int64_t n, Py_ssize_t k, const uint8_t[::1] rel):
    cdef int64_t[:, ::1] nb = np.zeros((max(n, 1), max(n, 1)), dtype=np.int64)
    cdef int64_t[::1] cnt = np.zeros(max(n, 1), dtype=np.int64)
    cdef int64_t[::1] u = np.zeros(max(k, 1), dtype=np.int64)
    cdef int64_t[::1] v = np.zeros(max(k, 1), dtype=np.int64)
    cdef int64_t[::1] pos = np.zeros(max(k, 1), dtype=np.int64)
    cdef int64_t x, y, fu, fv, iu
    cdef Py_ssize_t i
    cdef bint live
    if n == 0:
        return None
    for x in range(n):
        for y in range(n):
            if rel[x * n + y]:
                nb[x, cnt[x]] = y
                cnt[x] += 1
    while True:
        iu = _tuple_index(u, k, n)
        fu = table[iu]
        live = True
        for i in range(k):
            pos[i] = 0
            if cnt[u[i]] == 0:
                live = False
        while live:
            for i in range(k):
                v[i] = nb[u[i], pos[i]]
            fv = table[_tuple_index(v, k, n)]
            if not rel[fu * n + fv]:
                return (tuple(int(u[i]) for i in range(k)),
                        tuple(int(v[i]) for i in range(k)))
            i = k - 1
            while i >= 0:
                pos[i] += 1
                if pos[i] < cnt[u[i]]:
                    break
                pos[i] = 0
                i -= 1
            if i < 0:
                break
        i = k - 1
        while i >= 0:
            u[i] += 1
            if u[i] < n:
                break
            u[i] = 0
            i -= 1
        if i < 0:
            return None


def partition_violation(const int64_t[::1] table, int64_t n, Py_ssize_t k, const int64_t[::1] block_of):
    cdef int64_t[::1] u = np.zeros(max(k, 1), dtype=np.int64)
    cdef int64_t[::1] pw = np.ones(max(k, 1), dtype=np.int64)
    cdef int64_t iu, bu, b, d
    cdef Py_ssize_t i
    if n == 0 or k == 0:
        return None
    for i in range(1, k):
        pw[i] = pw[i - 1] * n
    while True:
        iu = _tuple_index(u, k, n)
        bu = block_of[table[iu]]
        # smaller neighbours, leftmost coordinate first
        for i in range(k):
            for b in range(u[i]):
                if block_of[b] == block_of[u[i]]:
                    if block_of[table[iu + (b - u[i]) * pw[i]]] != bu:
                        return _pair(u, k, i, b)
        for i in range(k - 1, -1, -1):
            for b in range(u[i] + 1, n):
                if block_of[b] == block_of[u[i]]:
                    if block_of[table[iu + (b - u[i]) * pw[i]]] != bu:
                        return _pair(u, k, i, b)
        i = k - 1
        while i >= 0:
            u[i] += 1
            if u[i] < n:
                break
            u[i] = 0
            i -= 1
        if i < 0:
            return None


cdef tuple _pair(int64_t[::1] u, Py_ssize_t k, Py_ssize_t i, int64_t b):
    ut = tuple(int(u[j]) for j in range(k))
    vt = ut[:i] + (int(b),) + ut[i + 1:]
    return ut, vt


cdef bint _respects(const int64_t[::1] flat, int64_t off, int64_t size, Py_ssize_t k, int64_t n,
                    int64_t[::1] blk, int64_t[::1] rep) noexcept nogil:
    cdef int64_t stride = 1, idx, d, r
    cdef Py_ssize_t i
    for i in range(k):
        for idx in range(size):
            d = (idx // stride) % n
            r = rep[d]
            if r != d and blk[flat[off + idx]] != blk[flat[off + idx + (r - d) * stride]]:
                return False
        stride *= n
    return True


def enumerate_congruences(const int64_t[::1] flat, const int64_t[::1] offsets,
                          const int64_t[::1] arities, int64_t n):
    cdef Py_ssize_t nops = arities.shape[0]
    cdef int64_t[::1] a = np.zeros(max(n, 1), dtype=np.int64)
    cdef int64_t[::1] m = np.zeros(max(n, 1), dtype=np.int64)
    cdef int64_t[::1] rep = np.zeros(max(n, 1), dtype=np.int64)
    cdef int64_t[::1] first = np.zeros(max(n, 1), dtype=np.int64)
    cdef int64_t i, j, x, size
    cdef Py_ssize_t s
    cdef bint ok
    out = []
    if n == 0:
        return [()]
    while True:
        for x in range(n):
            first[x] = -1
        for x in range(n):
            if first[a[x]] < 0:
                first[a[x]] = x
            rep[x] = first[a[x]]
        ok = True
        for s in range(nops):
            if arities[s] == 0:
                continue
            size = offsets[s + 1] - offsets[s]
            if not _respects(flat, offsets[s], size, arities[s], n, a, rep):
                ok = False
                break
        if ok:
            out.append(tuple(int(a[x]) for x in range(n)))
        i = n - 1
        while i > 0 and a[i] > m[i - 1]:
            i -= 1
        if i == 0:
            return out
        a[i] += 1
        m[i] = m[i - 1] if m[i - 1] > a[i] else a[i]
        for j in range(i + 1, n):
            a[j] = 0
            m[j] = m[i]


cdef inline int64_t _find(int64_t[::1] parent, int64_t x) noexcept nogil:
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


def congruence_closure(const int64_t[::1] flat, const int64_t[::1] offsets,
                       const int64_t[::1] arities, int64_t n, const int64_t[:, ::1] pairs):
    cdef int64_t[::1] parent = np.arange(max(n, 1), dtype=np.int64)
    cdef int64_t[::1] qa = np.zeros(max(n, 1), dtype=np.int64)
    cdef int64_t[::1] qb = np.zeros(max(n, 1), dtype=np.int64)
    cdef Py_ssize_t qlen = 0, p, s, i
    cdef int64_t a, b, ra, rb, x, y, stride, size, off, idx, delta
    for p in range(pairs.shape[0]):
        a = pairs[p, 0]
        b = pairs[p, 1]
        ra = _find(parent, a)
        rb = _find(parent, b)
        if ra != rb:
            if ra < rb:
                parent[rb] = ra
            else:
                parent[ra] = rb
            qa[qlen] = a
            qb[qlen] = b
            qlen += 1
    while qlen > 0:
        qlen -= 1
        a = qa[qlen]
        b = qb[qlen]
        for s in range(arities.shape[0]):
            if arities[s] == 0:
                continue
            off = offsets[s]
            size = offsets[s + 1] - off
            stride = 1
            for i in range(arities[s]):
                delta = (b - a) * stride
                for idx in range(size):
                    if (idx // stride) % n == a:
                        x = flat[off + idx]
                        y = flat[off + idx + delta]
                        ra = _find(parent, x)
                        rb = _find(parent, y)
                        if ra != rb:
                            if ra < rb:
                                parent[rb] = ra
                            else:
                                parent[ra] = rb
                            qa[qlen] = x
                            qb[qlen] = y
                            qlen += 1
                stride *= n
    ids = {}
    return tuple(ids.setdefault(int(_find(parent, x)), len(ids)) for x in range(n))


def dep_violation(const int64_t[::1] flat, const int64_t[::1] offsets, const int64_t[::1] sizes,
                  Py_ssize_t m, const uint8_t[::1] mask, const int64_t[:, ::1] members):
    cdef Py_ssize_t k = sizes.shape[0], i, j
    cdef Py_ssize_t count = members.shape[0]
    cdef int64_t[::1] choice = np.zeros(max(m, 1), dtype=np.int64)
    cdef int64_t[::1] place = np.ones(max(k, 1), dtype=np.int64)
    cdef int64_t code, row, mult, s
    if count == 0 and m > 0:
        return None
    for i in range(1, k):
        place[i] = place[i - 1] * sizes[i - 1]
    while True:
        code = 0
        for i in range(k):
            s = sizes[i]
            row = 0
            mult = 1
            for j in range(m):
                row += members[choice[j], i] * mult
                mult *= s
            code += flat[offsets[i] + row] * place[i]
        if not mask[code]:
            return [int(choice[j]) for j in range(m)]
        j = m - 1
        while j >= 0:
            choice[j] += 1
            if choice[j] < count:
                break
            choice[j] = 0
            j -= 1
        if j < 0:
            return None
