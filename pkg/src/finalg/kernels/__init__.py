"""Hot loops behind the algebra API.

The compiled extension ``_ckernels`` is used when it was built; otherwise the
pure-Python ``_pykernels`` module is used. Both expose the same functions and
return identical results. ``use("python")`` / ``use("c")`` switch at runtime,
which the test-suite uses to cross-check the two.
"""

from __future__ import annotations

import numpy as np

from finalg.kernels import _pykernels

try:
    from finalg.kernels import _ckernels
except ImportError:  # extension not built
    _ckernels = None

_BACKENDS = {"python": _pykernels}
if _ckernels is not None:
    _BACKENDS["c"] = _ckernels

_active = _ckernels if _ckernels is not None else _pykernels


def available() -> list[str]:
    return sorted(_BACKENDS)


def backend() -> str:
    return "c" if _active is _ckernels and _ckernels is not None else "python"


def use(name: str) -> str:
    """Select a backend by name; returns the previously active one."""
    global _active
    if name not in _BACKENDS:
        raise ValueError(f"kernel backend {name!r} unavailable; have {available()}")
    prev = backend()
    _active = _BACKENDS[name]
    return prev


def _i64(seq) -> np.ndarray:
    return np.ascontiguousarray(np.asarray(seq, dtype=np.int64).reshape(-1))


def _u8(data) -> np.ndarray:
    return np.frombuffer(bytes(data), dtype=np.uint8).copy() if len(data) else np.zeros(1, np.uint8)


def _flatten(tables):
    offsets = [0]
    for t in tables:
        offsets.append(offsets[-1] + len(t))
    flat = np.zeros(max(offsets[-1], 1), dtype=np.int64)
    for t, off in zip(tables, offsets):
        flat[off:off + len(t)] = t
    return flat, _i64(offsets)


def binary_violation(table, n: int, k: int, rel: bytes):
    if _active is _pykernels:
        return _pykernels.binary_violation(table, n, k, rel)
    return _ckernels.binary_violation(_i64(table), n, k, _u8(rel))


def partition_violation(table, n: int, k: int, block_of):
    if _active is _pykernels:
        return _pykernels.partition_violation(table, n, k, block_of)
    return _ckernels.partition_violation(_i64(table), n, k, _i64(block_of))


def enumerate_congruences(tables, arities, n: int) -> list[tuple]:
    if _active is _pykernels:
        return _pykernels.enumerate_congruences(tables, arities, n)
    flat, offsets = _flatten(tables)
    return _ckernels.enumerate_congruences(flat, offsets, _i64(arities), n)


def congruence_closure(tables, arities, n: int, pairs) -> tuple:
    if _active is _pykernels:
        return _pykernels.congruence_closure(tables, arities, n, pairs)
    flat, offsets = _flatten(tables)
    arr = np.ascontiguousarray(np.asarray(list(pairs), dtype=np.int64).reshape(-1, 2))
    return _ckernels.congruence_closure(flat, offsets, _i64(arities), n, arr)


def dep_violation(tables, sizes, m: int, mask: bytes, members):
    if _active is _pykernels:
        return _pykernels.dep_violation(tables, sizes, m, mask, members)
    flat, offsets = _flatten(tables)
    k = len(sizes)
    mem = np.ascontiguousarray(np.asarray(members, dtype=np.int64).reshape(len(members), k))
    if k == 0:
        mem = np.zeros((len(members), 1), dtype=np.int64)
    return _ckernels.dep_violation(flat, offsets, _i64(sizes), m, _u8(mask), mem)
