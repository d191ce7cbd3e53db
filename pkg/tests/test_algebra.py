import random
from itertools import product

import pytest
from hypothesis import given

from finalg.algebra import (
    FinAlgebra,
    Signature,
    compatibility_failure,
    compatible,
    cont_compatible,
    cyclic_group,
    dep_compatible,
    ensure_valid,
    interpret,
    monoid_signature,
    validate,
    z2_monoid,
)
from finalg.continuous import ContRelation, DepRelation, binary_as_cont
from finalg.errors import InvalidAlgebraError, RangeError, ShapeError, SignatureMismatchError
from finalg.relations import BinaryRelation, FiniteOperation, total_rel, zero_rel

from oracles import naive_compatible
from strategies import algebras, random_algebra

MON = monoid_signature()


class TestSignature:
    def test_monoid_symbols(self):
        assert list(MON) == [("e", 0), ("·", 2)]
        assert MON.arity("·") == 2 and "e" in MON

    def test_duplicates_rejected(self):
        with pytest.raises(ValueError):
            Signature((("f", 1), ("f", 2)))

    def test_negative_arity(self):
        with pytest.raises(ValueError):
            Signature((("f", -1),))

    def test_of(self):
        assert Signature.of(a=0, b=2).names == ("a", "b")


class TestValidate:
    def test_z2(self):
        assert validate(z2_monoid()) == []

    def test_out_of_range_entry(self):
        bad = FinAlgebra(
            "B", MON, 2, (FiniteOperation.constant(2, 0), FiniteOperation(2, 2, (0, 1, 1, 2))))
        vs = validate(bad)
        assert [(v.symbol, v.args) for v in vs] == [("·", (1, 1))]
        with pytest.raises(InvalidAlgebraError):
            ensure_valid(bad)

    def test_wrong_arity(self):
        bad = FinAlgebra("B", MON, 2, (FiniteOperation.constant(2, 0), FiniteOperation(2, 1, (0, 1))))
        assert "arity" in validate(bad)[0].reason

    def test_short_table(self):
        bad = FinAlgebra("B", MON, 2, (FiniteOperation.constant(2, 0), FiniteOperation(2, 2, (0, 1))))
        assert validate(bad)

    def test_nullary_on_empty_carrier(self):
        bad = FinAlgebra("E", MON, 0, (FiniteOperation(0, 0, ()), FiniteOperation(0, 2, ())))
        assert any("empty" in v.reason for v in validate(bad))

    def test_empty_carrier_without_constants(self):
        a = FinAlgebra("E", Signature.of(f=2), 0, (FiniteOperation(0, 2, ()),))
        assert validate(a) == []

    def test_op_count(self):
        with pytest.raises(ShapeError):
            FinAlgebra("B", MON, 2, (FiniteOperation.constant(2, 0),))

    def test_mapping_checks(self):
        with pytest.raises(SignatureMismatchError):
            FinAlgebra.from_mapping("B", MON, 2, {"e": FiniteOperation.constant(2, 0)})


class TestInterpret:
    def test_z2(self):
        z = z2_monoid()
        assert interpret(z, "·", (1, 1)) == 0
        assert interpret(z, "e", ()) == 0
        assert interpret(z, "·", (0, 1)) == 1

    def test_errors(self):
        z = z2_monoid()
        with pytest.raises(ShapeError):
            interpret(z, "·", (1,))
        with pytest.raises(RangeError):
            interpret(z, "·", (1, 2))
        with pytest.raises(KeyError):
            interpret(z, "inv", (1,))

    def test_monoid_laws(self):
        z = z2_monoid()
        for x, y, w in product(range(2), repeat=3):
            assert interpret(z, "·", (interpret(z, "e", ()), x)) == x
            assert interpret(z, "·", (interpret(z, "·", (x, y)), w)) == \
                interpret(z, "·", (x, interpret(z, "·", (y, w))))


class TestCompatible:
    def test_examples(self, backend):
        z4 = cyclic_group(4)
        parity = BinaryRelation.from_predicate(4, lambda x, y: x % 2 == y % 2)
        assert compatible(z4, parity)
        z3 = cyclic_group(3)
        r = BinaryRelation.from_pairs(3, [(0, 0), (1, 1), (2, 2), (1, 2), (2, 1)])
        assert compatibility_failure(z3, r) == ("+", (1, 1), (1, 2))

    def test_monoid_small_relations(self, backend):
        z = z2_monoid()
        assert compatible(z, zero_rel(2)) and compatible(z, total_rel(2))
        assert compatible(z, BinaryRelation.from_pairs(2, [(0, 0)]))
        assert compatibility_failure(z, BinaryRelation.from_pairs(2, [(1, 1)])) == ("e", (), ())

    @given(algebras())
    def test_zero_and_total(self, backend, a):
        n = a.carrier.size
        assert compatible(a, zero_rel(n))
        assert compatible(a, total_rel(n))

    def test_against_quadruple_loop(self, backend):
        rng = random.Random(3)
        for _ in range(60):
            a = random_algebra(rng, max_size=3)
            n = a.carrier.size
            for bits in product((0, 1), repeat=n * n):
                r = BinaryRelation(n, n, bytes(bits))
                expect = all(naive_compatible(f.apply, n, f.arity, r) for f in a.ops)
                assert compatible(a, r) == expect

    def test_cont_matches_binary(self, backend):
        rng = random.Random(5)
        for _ in range(40):
            a = random_algebra(rng, max_size=3)
            n = a.carrier.size
            for bits in product((0, 1), repeat=n * n):
                r = BinaryRelation(n, n, bytes(bits))
                assert cont_compatible(a, binary_as_cont(r)) == compatible(a, r)

    def test_dep_family(self, backend):
        r = DepRelation((2, 4), [(0, 0), (1, 1), (0, 2), (1, 3)])
        # reduction mod 2 is a homomorphism Z4 -> Z2, so its graph is preserved
        z2 = cyclic_group(2)
        z4 = cyclic_group(4)
        assert dep_compatible([z2, z4], r)
        assert not dep_compatible([z2, z4], DepRelation((2, 4), [(0, 0), (1, 1)]))

    def test_dep_signature_mismatch(self):
        with pytest.raises(SignatureMismatchError):
            dep_compatible([z2_monoid(), cyclic_group(2)], DepRelation.full((2, 2)))

    def test_cont_unary_subalgebra(self, backend):
        assert cont_compatible(cyclic_group(4), ContRelation.of(4, 1, [(0,), (2,)]))
        assert not cont_compatible(cyclic_group(4), ContRelation.of(4, 1, [(0,), (1,)]))
