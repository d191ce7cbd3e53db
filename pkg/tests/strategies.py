"""Random algebras for property tests, both seeded and as hypothesis strategies."""

import random

from hypothesis import strategies as st

from finalg.algebra import FinAlgebra, Signature
from finalg.relations import FiniteOperation


def random_algebra(rng: random.Random, max_size=5, max_symbols=3, max_arity=2, min_size=1):
    n = rng.randint(min_size, max_size)
    arities = [rng.randint(0, max_arity) for _ in range(rng.randint(1, max_symbols))]
    sig = Signature(tuple((f"f{i}", k) for i, k in enumerate(arities)))
    ops = tuple(FiniteOperation(n, k, [rng.randrange(n) for _ in range(n ** k)]) for k in arities)
    return FinAlgebra("R", sig, n, ops)


@st.composite
def algebras(draw, max_size=4, max_symbols=3, max_arity=2):
    n = draw(st.integers(1, max_size))
    arities = draw(st.lists(st.integers(0, max_arity), min_size=1, max_size=max_symbols))
    sig = Signature(tuple((f"f{i}", k) for i, k in enumerate(arities)))
    ops = tuple(
        FiniteOperation(n, k, draw(st.lists(st.integers(0, n - 1), min_size=n ** k, max_size=n ** k)))
        for k in arities)
    return FinAlgebra("H", sig, n, ops)


# --------------------------------------------------------------------------
# random .ual documents

_WORDS = ["op", "carrier", "arity", "on", "signature", "algebra", "relation", "partition",
          "f", "g", "Mul", "x_1", "_t", "Z"]


def _ident(rng: random.Random, used: set) -> str:
    while True:
        name = rng.choice(_WORDS) if rng.random() < 0.4 else \
            rng.choice("abcXYZ_") + "".join(rng.choice("ab09_") for _ in range(rng.randint(0, 4)))
        if name not in used:
            used.add(name)
            return name


def _space(rng: random.Random) -> str:
    r = rng.random()
    if r < 0.6:
        return " "
    if r < 0.8:
        return "\n" + " " * rng.randint(0, 6)
    return "  # note\n\t"


def _nested(rng, n, k, space):
    if k == 0:
        return str(rng.randrange(n))
    parts = [_nested(rng, n, k - 1, space) for _ in range(n)]
    return "[" + space() + ("," + space()).join(parts) + space() + "]"


def random_document_text(rng: random.Random) -> str:
    """A well-formed document with irregular layout and comments."""
    sp = lambda: _space(rng)
    chunks = []
    sigs = []
    names = {"signature": set(), "algebra": set(), "relation": set(), "partition": set()}
    for _ in range(rng.randint(1, 2)):
        sname = _ident(rng, names["signature"])
        syms, used = [], set()
        for _ in range(rng.randint(0, 3)):
            syms.append((_ident(rng, used), rng.randint(0, 2)))
        sigs.append((sname, syms))
        body = "".join(f"op {s} {k};{sp()}" for s, k in syms)
        chunks.append(f"signature {sname}{sp()}{{{sp()}{body}}}")
    algs = []
    for _ in range(rng.randint(0, 3)):
        sname, syms = rng.choice(sigs)
        n = rng.randint(1, 3)
        aname = _ident(rng, names["algebra"])
        algs.append((aname, n))
        order = syms[:]
        rng.shuffle(order)
        ops = "".join(f"op {s}{sp()}={sp()}{_nested(rng, n, k, sp)};{sp()}" for s, k in order)
        chunks.append(f"algebra {aname} : {sname} {{{sp()}carrier {n};{sp()}{ops}}}")
    for aname, n in algs:
        if rng.random() < 0.5:
            k = rng.randint(1, 3)
            tuples = [tuple(rng.randrange(n) for _ in range(k)) for _ in range(rng.randint(0, 4))]
            body = "".join("(" + ", ".join(map(str, t)) + f");{sp()}" for t in tuples)
            chunks.append(f"relation {_ident(rng, names['relation'])} on {aname} arity {k} {{{sp()}{body}}}")
        if rng.random() < 0.5:
            labels = [rng.randrange(n) for _ in range(n)]
            blocks = [[x for x in range(n) if labels[x] == b] for b in set(labels)]
            rng.shuffle(blocks)
            body = "".join("{" + ", ".join(map(str, rng.sample(b, len(b)))) + f"}};{sp()}" for b in blocks)
            chunks.append(f"partition {_ident(rng, names['partition'])} on {aname} {{{sp()}{body}}}")
    return ("\n" if rng.random() < 0.5 else sp()).join(chunks) + sp()
