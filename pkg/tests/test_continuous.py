import random
from itertools import product

import pytest

from finalg.continuous import (
    ContRelation,
    DepRelation,
    binary_as_cont,
    cont_as_binary,
    cont_as_dep,
    cont_compatibility_witness,
    cont_compatible_op,
    dep_compatible_ops,
    eval_cont_rel,
    eval_dep_rel,
)
from finalg.errors import CarrierMismatchError, ShapeError
from finalg.relations import BinaryRelation, FiniteOperation, compatible_op, zero_rel

from oracles import naive_cont_compatible


def add_mod(n):
    return FiniteOperation.from_function(n, 2, lambda x, y: (x + y) % n)


class TestEval:
    def test_empty_matrix(self):
        assert eval_cont_rel(ContRelation.of(2, 2, []), [[], []])

    def test_equal_rows(self):
        diag = binary_as_cont(zero_rel(2))
        assert eval_cont_rel(diag, [[0, 1], [0, 1]])

    def test_failing_column(self):
        r = ContRelation.of(2, 2, [(0, 1)])
        assert not eval_cont_rel(r, [[0, 0], [1, 0]])

    def test_single_column_is_membership(self):
        r = ContRelation.of(3, 3, [(0, 1, 2), (2, 2, 2)])
        for t in product(range(3), repeat=3):
            assert eval_cont_rel(r, [[x] for x in t]) == (t in r)

    def test_shape_errors(self):
        r = ContRelation.of(2, 2, [(0, 1)])
        with pytest.raises(ShapeError):
            eval_cont_rel(r, [[0]])
        with pytest.raises(ShapeError):
            eval_cont_rel(r, [[0], [0, 1]])

    def test_dep_eval(self):
        r = DepRelation((2, 3), [(0, 0), (1, 2)])
        assert eval_dep_rel(r, [[0, 1], [0, 2]])
        assert not eval_dep_rel(r, [[0, 1], [2, 2]])


class TestContCompatible:
    def test_full_relation(self, backend):
        for k in range(4):
            assert cont_compatible_op(add_mod(3), ContRelation.full(3, k))

    def test_binary_view_z4(self, backend):
        r = BinaryRelation.from_predicate(4, lambda x, y: x % 2 == y % 2)
        assert cont_compatible_op(add_mod(4), binary_as_cont(r))
        assert compatible_op(add_mod(4), r)

    def test_unary_subset(self, backend):
        assert cont_compatible_op(add_mod(3), ContRelation.of(3, 1, [(0,)]))
        r = ContRelation.of(3, 1, [(1,)])
        assert not cont_compatible_op(add_mod(3), r)
        assert cont_compatibility_witness(add_mod(3), r) == [[1, 1]]

    def test_witness_is_genuine(self, backend):
        r = ContRelation.of(3, 2, [(0, 1), (1, 2), (2, 0)])
        f = FiniteOperation.from_function(3, 2, lambda x, y: x * y % 3)
        a = cont_compatibility_witness(f, r)
        assert a is not None
        assert eval_cont_rel(r, a)
        assert tuple(f.apply(row) for row in a) not in r

    def test_arity_zero_relation(self, backend):
        assert cont_compatible_op(add_mod(2), ContRelation.of(2, 0, []))
        assert cont_compatible_op(add_mod(2), ContRelation.of(2, 0, [()]))

    def test_nullary_operation(self, backend):
        c = FiniteOperation.constant(3, 2)
        assert cont_compatible_op(c, ContRelation.of(3, 2, [(2, 2)]))
        assert not cont_compatible_op(c, ContRelation.of(3, 2, [(2, 1)]))

    def test_against_naive(self, backend):
        rng = random.Random(7)
        for _ in range(150):
            n = rng.randint(1, 3)
            k = rng.randint(1, 3)
            m = rng.randint(0, 2)
            f = FiniteOperation(n, m, [rng.randrange(n) for _ in range(n ** m)])
            tuples = list(product(range(n), repeat=k))
            members = [t for t in tuples if rng.random() < 0.5]
            r = ContRelation.of(n, k, members)
            assert cont_compatible_op(f, r) == naive_cont_compatible(f.apply, n, m, members, k)

    def test_carrier_mismatch(self):
        with pytest.raises(CarrierMismatchError):
            cont_compatible_op(add_mod(3), ContRelation.full(2, 2))


class TestDep:
    def test_full(self, backend):
        fs = [add_mod(2), add_mod(3)]
        assert dep_compatible_ops(fs, DepRelation.full((2, 3)))

    def test_unary_identity(self, backend):
        r = DepRelation((2, 3), [(0, 0), (1, 2)])
        fs = [FiniteOperation.from_function(2, 1, lambda x: x),
              FiniteOperation.from_function(3, 1, lambda x: x)]
        assert dep_compatible_ops(fs, r)

    def test_mixed_counterexample(self, backend):
        r = DepRelation((2, 3), [(0, 0), (1, 2)])
        fs = [FiniteOperation.from_function(2, 1, lambda x: 1 - x),
              FiniteOperation.from_function(3, 1, lambda x: x)]
        assert not dep_compatible_ops(fs, r)

    def test_constant_family_degenerates(self, backend):
        rng = random.Random(11)
        for _ in range(100):
            n, k, m = rng.randint(1, 3), rng.randint(1, 3), rng.randint(0, 2)
            f = FiniteOperation(n, m, [rng.randrange(n) for _ in range(n ** m)])
            members = [t for t in product(range(n), repeat=k) if rng.random() < 0.4]
            r = ContRelation.of(n, k, members)
            assert dep_compatible_ops([f] * k, cont_as_dep(r)) == cont_compatible_op(f, r)

    def test_errors(self):
        r = DepRelation((2, 3), [(0, 0)])
        with pytest.raises(ShapeError):
            dep_compatible_ops([add_mod(2)], r)
        with pytest.raises(CarrierMismatchError):
            dep_compatible_ops([add_mod(3), add_mod(3)], r)
        with pytest.raises(ShapeError):
            dep_compatible_ops([add_mod(2), FiniteOperation.constant(3, 0)], r)


class TestAdapters:
    def test_diagonal(self):
        assert binary_as_cont(zero_rel(2)).members == {(0, 0), (1, 1)}

    def test_round_trip(self):
        for bits in product((0, 1), repeat=9):
            r = BinaryRelation(3, 3, bytes(bits))
            c = binary_as_cont(r)
            assert cont_as_binary(c) == r
            d = cont_as_dep(c)
            assert len(r) == len(c) == len(d)
            assert d.members == c.members

    def test_heterogeneous_rejected(self):
        with pytest.raises(CarrierMismatchError):
            binary_as_cont(BinaryRelation.from_pairs(2, [(0, 1)], dom_b=3))
