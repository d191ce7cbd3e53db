"""Finite carriers and total functions between them.

Elements of a carrier of size ``n`` are the integers ``0..n-1``.  Every
notion below (fibers, image witnesses, epic/monic/embedding/bijective) is a
decidable check on the function table.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

from finalg.errors import CarrierMismatchError, RangeError, ShapeError


@dataclass(frozen=True)
class Carrier:
    """A finite set ``{0, ..., size-1}``."""

    size: int

    def __post_init__(self):
        if not isinstance(self.size, int) or self.size < 0:
            raise ValueError(f"carrier size must be a natural number, got {self.size!r}")

    def __len__(self) -> int:
        return self.size

    def __iter__(self) -> Iterator[int]:
        return iter(range(self.size))

    def __contains__(self, x) -> bool:
        return isinstance(x, int) and 0 <= x < self.size

    def check(self, x: int, what: str = "element") -> int:
        if not (isinstance(x, int) and 0 <= x < self.size):
            raise RangeError(f"{what} {x!r} not in carrier of size {self.size}")
        return x


def as_carrier(c) -> Carrier:
    return c if isinstance(c, Carrier) else Carrier(int(c))


@dataclass(frozen=True)
class FiniteFunction:
    """A total map ``dom -> cod`` stored as its value table.

    Equality is table equality, so two functions are equal exactly when they
    agree at every point.
    """

    dom: Carrier
    cod: Carrier
    table: tuple

    def __post_init__(self):
        object.__setattr__(self, "dom", as_carrier(self.dom))
        object.__setattr__(self, "cod", as_carrier(self.cod))
        object.__setattr__(self, "table", tuple(int(v) for v in self.table))
        if len(self.table) != self.dom.size:
            raise ShapeError(
                f"table has {len(self.table)} entries, domain has {self.dom.size}")
        for x, y in enumerate(self.table):
            if not 0 <= y < self.cod.size:
                raise RangeError(f"f({x}) = {y} outside codomain of size {self.cod.size}")

    def __call__(self, x: int) -> int:
        return self.table[self.dom.check(x)]

    @classmethod
    def identity(cls, n) -> "FiniteFunction":
        c = as_carrier(n)
        return cls(c, c, tuple(range(c.size)))

    @classmethod
    def from_callable(cls, dom, cod, fn) -> "FiniteFunction":
        dom = as_carrier(dom)
        return cls(dom, cod, tuple(fn(x) for x in dom))

    def compose(self, inner: "FiniteFunction") -> "FiniteFunction":
        """``self ∘ inner``."""
        if inner.cod != self.dom:
            raise CarrierMismatchError("cannot compose: codomain/domain mismatch")
        return FiniteFunction(inner.dom, self.cod, tuple(self.table[y] for y in inner.table))

    def image(self) -> frozenset:
        return frozenset(self.table)


def fiber(f: FiniteFunction, b: int) -> list[int]:
    """All ``x`` with ``f(x) == b``, ascending."""
    f.cod.check(b, "codomain element")
    return [x for x, y in enumerate(f.table) if y == b]


def image_witness(f: FiniteFunction, b: int) -> Optional[int]:
    """Smallest preimage of ``b``, or ``None`` when ``b`` is not in the image.

    When present the result ``a`` satisfies ``f(a) == b``.
    """
    f.cod.check(b, "codomain element")
    for x, y in enumerate(f.table):
        if y == b:
            return x
    return None


def _fiber_sizes(f: FiniteFunction) -> list[int]:
    counts = [0] * f.cod.size
    for y in f.table:
        counts[y] += 1
    return counts


def is_epic(f: FiniteFunction) -> Optional[FiniteFunction]:
    """Return a right inverse ``g`` (``f ∘ g == id``) if ``f`` is onto, else ``None``."""
    witnesses: list[Optional[int]] = [None] * f.cod.size
    for x in range(f.dom.size - 1, -1, -1):
        witnesses[f.table[x]] = x
    if any(w is None for w in witnesses):
        return None
    return FiniteFunction(f.cod, f.dom, tuple(witnesses))


def is_monic(f: FiniteFunction) -> bool:
    seen = set()
    for y in f.table:
        if y in seen:
            return False
        seen.add(y)
    return True


def is_embedding(f: FiniteFunction) -> bool:
    """True iff every fiber has at most one element."""
    return all(c <= 1 for c in _fiber_sizes(f))


def is_bijective(f: FiniteFunction) -> bool:
    return all(c == 1 for c in _fiber_sizes(f))


def left_inverse_on_image(f: FiniteFunction) -> dict[int, int]:
    # maps each image point back to its smallest preimage
    out: dict[int, int] = {}
    for x, y in enumerate(f.table):
        out.setdefault(y, x)
    return out


def all_functions(dom_size: int, cod_size: int) -> Iterator[FiniteFunction]:
    """Every function between two carriers, tables in lexicographic order."""
    from itertools import product

    dom, cod = Carrier(dom_size), Carrier(cod_size)
    for table in product(range(cod_size), repeat=dom_size):
        yield FiniteFunction(dom, cod, table)


def check_tuple(carrier: Carrier, t: Sequence[int], length: Optional[int] = None) -> tuple:
    if length is not None and len(t) != length:
        raise ShapeError(f"expected a {length}-tuple, got length {len(t)}")
    for x in t:
        carrier.check(x)
    return tuple(t)
