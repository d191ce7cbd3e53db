from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from finalg.base import Carrier, FiniteFunction, all_functions
from finalg.equivalence import Partition
from finalg.errors import CarrierMismatchError, RangeError, ShapeError
from finalg.relations import (
    BinaryRelation,
    FiniteOperation,
    Subset,
    compatibility_witness,
    compatible_op,
    disjoint_union,
    empty,
    eval_rel,
    image_in,
    is_subset,
    ker,
    kernel,
    member,
    projection_op,
    pullback,
    rel_implies,
    rel_implies_under,
    singleton,
    total_rel,
    union,
    zero_rel,
)
from finalg.tuples import decode, encode, table_order

from oracles import naive_compatible

PARITY = FiniteFunction(4, 2, (0, 1, 0, 1))


def add_mod(n):
    return FiniteOperation.from_function(n, 2, lambda x, y: (x + y) % n)


def all_relations(n):
    for bits in product((0, 1), repeat=n * n):
        yield BinaryRelation(n, n, bytes(bits))


class TestSubsets:
    def test_subset(self):
        assert is_subset(Subset.of(3, [0]), Subset.of(3, [0, 1]))
        assert not is_subset(Subset.of(3, [0, 2]), Subset.of(3, [0, 1]))

    def test_union(self):
        assert union(Subset.of(3, [0]), Subset.of(3, [2])) == Subset.of(3, [0, 2])

    def test_image_in(self):
        assert not image_in(PARITY, Subset.of(2, [0]))
        assert image_in(PARITY, Subset.of(2, [0, 1]))

    def test_empty_and_singleton(self):
        assert list(empty(3)) == []
        assert list(singleton(3, 1)) == [1]
        assert member(singleton(3, 1), 1) and not member(singleton(3, 1), 0)

    def test_member_range(self):
        with pytest.raises(RangeError):
            member(empty(2), 2)

    def test_carrier_mismatch(self):
        with pytest.raises(CarrierMismatchError):
            union(empty(2), empty(3))

    def test_extensionality(self):
        # mutual inclusion forces identical values
        for a in product((0, 1), repeat=3):
            for b in product((0, 1), repeat=3):
                s, t = Subset(3, a), Subset(3, b)
                if is_subset(s, t) and is_subset(t, s):
                    assert s == t


class TestDisjointUnion:
    def test_offsets(self):
        c, i1, i2 = disjoint_union(2, 3)
        assert c.size == 5 and i2(0) == 2 and i1(1) == 1

    def test_empty_left(self):
        c, _, i2 = disjoint_union(0, 2)
        assert c.size == 2 and i2.table == (0, 1)

    def test_images_partition(self):
        c, i1, i2 = disjoint_union(1, 1)
        assert i1.image() == {0} and i2.image() == {1}
        for a, b in product(range(4), repeat=2):
            _, j1, j2 = disjoint_union(a, b)
            assert not (j1.image() & j2.image())
            assert j1.image() | j2.image() == set(range(a + b))


class TestKernel:
    def test_parity(self):
        assert set(ker(PARITY).pairs()) == {(0, 0), (0, 2), (2, 0), (2, 2),
                                             (1, 1), (1, 3), (3, 1), (3, 3)}

    def test_identity(self):
        assert ker(FiniteFunction.identity(3)) == zero_rel(3)

    def test_constant(self):
        assert len(ker(FiniteFunction(3, 1, (0, 0, 0)))) == 9

    def test_subset_view(self):
        k = kernel(PARITY)
        assert k.carrier.size == 16
        assert set(k) == {encode(p, 4) for p in ker(PARITY).pairs()}


class TestZeroAndPullback:
    def test_zero(self):
        assert set(zero_rel(3).pairs()) == {(0, 0), (1, 1), (2, 2)}
        assert len(zero_rel(0)) == 0

    def test_pullback_of_diagonal_is_kernel(self):
        for d, c in product(range(5), range(1, 5)):
            for f in all_functions(d, c):
                assert pullback(zero_rel(c), f) == ker(f)

    def test_pullback_total(self):
        assert pullback(total_rel(2), PARITY) == total_rel(4)

    def test_pullback_example(self):
        r = BinaryRelation.from_pairs(2, [(0, 1)])
        assert set(pullback(r, PARITY).pairs()) == {(0, 1), (0, 3), (2, 1), (2, 3)}

    def test_pullback_mismatch(self):
        with pytest.raises(CarrierMismatchError):
            pullback(zero_rel(3), PARITY)


class TestImplication:
    def test_vacuous(self):
        assert rel_implies(BinaryRelation(3, 3, bytes(9)), zero_rel(3))

    def test_diagonal_total(self):
        assert rel_implies(zero_rel(3), total_rel(3))
        assert not rel_implies(total_rel(3), zero_rel(3))

    def test_under(self):
        assert rel_implies_under(ker(PARITY), PARITY, zero_rel(2))


class TestProjectionAndEval:
    def test_projection_values(self):
        assert projection_op(2, 2, 0)(0, 1) == 0
        assert projection_op(2, 1, 0).table == (0, 1)
        assert projection_op(2, 3, 2)(1, 0, 1) == 1

    def test_projection_range(self):
        with pytest.raises(RangeError):
            projection_op(2, 2, 2)

    def test_eval_rel(self):
        assert eval_rel(zero_rel(2), (), ())
        assert eval_rel(zero_rel(3), (1, 2), (1, 2))
        assert eval_rel(ker(PARITY), (0, 1), (2, 3))
        with pytest.raises(ShapeError):
            eval_rel(zero_rel(2), (0,), (0, 1))


class TestFiniteOperation:
    def test_table_order(self):
        # coordinate 0 varies fastest
        f = FiniteOperation.from_function(3, 2, lambda x, y: 3 * x + y)
        assert f.table[:3] == (0, 3, 6)
        assert list(table_order(2, 2)) == [(0, 0), (1, 0), (0, 1), (1, 1)]
        for i, t in enumerate(table_order(3, 3)):
            assert encode(t, 3) == i and decode(i, 3, 3) == t

    def test_nullary(self):
        c = FiniteOperation.constant(3, 2)
        assert c() == 2 and c.table == (2,)

    def test_problems(self):
        assert FiniteOperation(2, 1, (0, 2)).problems == [((1,), "value 2 out of range")]
        assert FiniteOperation(2, 2, (0, 1)).problems
        with pytest.raises(RangeError):
            compatible_op(FiniteOperation(2, 1, (0, 5)), zero_rel(2))


class TestCompatibleOp:
    def test_total_always(self, backend):
        assert compatible_op(add_mod(3), total_rel(3))

    def test_z3_counterexample(self, backend):
        r = Partition.from_blocks(3, [[0], [1, 2]]).to_relation()
        assert not compatible_op(add_mod(3), r)
        u, v = compatibility_witness(add_mod(3), r)
        assert (u, v) == ((1, 1), (1, 2))

    def test_z4_parity(self, backend):
        r = Partition.from_blocks(4, [[0, 2], [1, 3]]).to_relation()
        assert compatible_op(add_mod(4), r)

    def test_projection_compatible_exhaustive(self, backend):
        for n in range(1, 4):
            rels = list(all_relations(n))
            for k in range(1, 4):
                for i in range(k):
                    p = projection_op(n, k, i)
                    assert all(compatible_op(p, r) for r in rels)

    def test_agrees_with_naive(self, backend):
        for n in range(1, 3):
            for table in product(range(n), repeat=n * n):
                f = FiniteOperation(n, 2, table)
                for r in all_relations(n):
                    assert compatible_op(f, r) == naive_compatible(
                        f.apply, n, 2, r), (table, r)

    @settings(max_examples=150, deadline=None)
    @given(st.integers(1, 4).flatmap(lambda n: st.tuples(
        st.just(n), st.integers(0, 3),
        st.lists(st.integers(0, n - 1), min_size=n ** 3, max_size=n ** 3),
        st.lists(st.booleans(), min_size=n * n, max_size=n * n))))
    def test_agrees_with_naive_random(self, backend, data):
        n, k, values, bits = data
        f = FiniteOperation(n, k, values[:n ** k])
        r = BinaryRelation(n, n, bytes(bits))
        hit = compatibility_witness(f, r)
        assert (hit is None) == naive_compatible(f.apply, n, k, r)
        if hit is not None:
            u, v = hit
            assert eval_rel(r, u, v) and not r(f.apply(u), f.apply(v))

    def test_nullary_needs_reflexive_point(self, backend):
        c = FiniteOperation.constant(2, 1)
        assert compatible_op(c, zero_rel(2))
        assert not compatible_op(c, BinaryRelation.from_pairs(2, [(0, 0)]))

    def test_carrier_mismatch(self):
        with pytest.raises(CarrierMismatchError):
            compatible_op(add_mod(3), zero_rel(2))


class TestKernelIsEquivalence:
    def test_all_small_functions(self):
        from finalg.equivalence import relation_properties
        for d, c in product(range(4), range(1, 4)):
            for f in all_functions(d, c):
                assert relation_properties(ker(f)).is_equivalence
