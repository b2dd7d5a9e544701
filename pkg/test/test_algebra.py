"""
CUTSPEC - Cut monoids, quasi-valuations and prime spectra
MIT License

Copyright (c) 2026 cutspec developers

Permission is hereby granted, free of charge, to any person obtaining a copy
of this software and associated documentation files (the "Software"), to deal
in the Software without restriction, including without limitation the rights
to use, copy, modify, merge, publish, distribute, sublicense, and/or sell
copies of the Software, and to permit persons to whom the Software is
furnished to do so, subject to the following conditions:

The above copyright notice and this permission notice shall be included in all
copies or substantial portions of the Software.

THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM,
OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN THE
SOFTWARE.
"""
import random

from cutspec.algebra import (
    Algebra,
    MonomialAlgebra,
    PatternAlgebra,
    check_condition_a,
    check_condition_b,
    check_condition_c,
    contraction,
    filter_qv,
    full_matrix_algebra,
    support,
    validate,
)
from cutspec.exceptions import (
    HypothesisError,
    InstanceSpecError,
    InvalidAlgebraError,
    MembershipError,
)
from cutspec.field_model import ModelElem, iv, ov, zero_ideal
from cutspec.instances import load_instance, read_instance_spec
from cutspec.ordered_values import Cut, GroupElem, embed
from cutspec.random import random_pattern_algebra, sample_elements

from . import TestCase, fixture_names, load_json, test_instances


def t(*exponent, coefficient=1):
    return [[coefficient, 1, list(exponent)]]


class TestInstanceSpec(TestCase):
    def test_factory_dispatch(self):
        self.assertIsInstance(load_instance("m2_ov"), PatternAlgebra)
        self.assertIsInstance(load_instance("dualnum_ax_x2"), MonomialAlgebra)

    def test_not_a_dict(self):
        with self.assertRaises(InstanceSpecError):
            Algebra(["pattern"])

    def test_unknown_kind(self):
        with self.assertRaises(InstanceSpecError):
            Algebra({"kind": "ring", "rank": 1})

    def test_missing_key(self):
        with self.assertRaises(InstanceSpecError):
            Algebra({"kind": "pattern", "rank": 1, "n": 1})

    def test_unexpected_key(self):
        spec = read_instance_spec("m2_ov")
        spec["colour"] = "red"
        with self.assertRaises(InstanceSpecError):
            Algebra(spec)

    def test_bad_component_names_path(self):
        spec = {
            "kind": "pattern",
            "rank": 1,
            "n": 2,
            "components": [["Ov", "Ov"], ["Ov", "Q"]],
        }
        with self.assertRaisesRegex(InstanceSpecError, r"components\[1\]"):
            Algebra(spec)

    def test_infty_component(self):
        spec = {
            "kind": "pattern",
            "rank": 1,
            "n": 1,
            "components": [[{"cut": "infty"}]],
        }
        with self.assertRaisesRegex(InstanceSpecError, "infty"):
            Algebra(spec)

    def test_bad_rank(self):
        spec = read_instance_spec("m2_ov")
        spec["rank"] = 9
        with self.assertRaises(InstanceSpecError):
            Algebra(spec)

    def test_qv_choice(self):
        spec = read_instance_spec("m2_ov")
        spec["qv"] = "largest"
        with self.assertRaises(InstanceSpecError):
            Algebra(spec)

    def test_monomial_must_be_unital(self):
        spec = read_instance_spec("dualnum_ax_x2")
        spec["unital"] = False
        with self.assertRaises(InstanceSpecError):
            Algebra(spec)

    def test_fixtures_round_trip(self):
        for name in fixture_names:
            with self.subTest(name):
                R = load_instance(name)
                self.assertEqual(Algebra(R.to_spec()), R)


class TestValidate(TestCase):
    def test_m2(self):
        report = validate(full_matrix_algebra(2, 2))
        self.assertEqual(report["dim"], 4)
        self.assertTrue(report["torsion_free"])
        self.assertTrue(report["unital"])
        self.assertTrue(report["finitely_generated"])

    def test_fixtures_are_valid(self):
        for name in fixture_names:
            with self.subTest(name):
                self.assertTrue(validate(load_instance(name))["valid"])

    def test_corrupted_closure(self):
        spec = load_json(test_instances["corrupted_closure"])
        with self.assertRaises(InvalidAlgebraError) as ctx:
            validate(Algebra(spec))
        self.assertEqual(ctx.exception.witness, (0, 1, 0))

    def test_missing_identity(self):
        spec = read_instance_spec("r2_example")
        del spec["unital"]
        with self.assertRaises(InvalidAlgebraError) as ctx:
            validate(Algebra(spec))
        self.assertEqual(ctx.exception.witness, (1, 1))

    def test_annihilator_must_be_proper(self):
        spec = read_instance_spec("dualnum_ax_x2")
        spec["ann"] = ["Ov", "Iv"]
        with self.assertRaises(InvalidAlgebraError) as ctx:
            validate(Algebra(spec))
        self.assertEqual(ctx.exception.witness, (0,))

    def test_identity_row(self):
        spec = read_instance_spec("dualnum_ax_x2")
        spec["table"][0][1] = [[1], 1]
        with self.assertRaises(InvalidAlgebraError):
            validate(Algebra(spec))

    def test_structure(self):
        R = load_instance("torsion_trunc_px")
        report = validate(R)
        self.assertFalse(report["torsion_free"])
        self.assertTrue(report["faithful"])
        self.assertEqual(report["dim"], 1)
        self.assertEqual(load_instance("root_p_quotient").dim, 0)
        self.assertFalse(load_instance("root_p_quotient").faithful)
        self.assertFalse(load_instance("diag_f_ov").finitely_generated)
        self.assertEqual(load_instance("diag_f_ov").dim, 2)

    def test_random_pattern_algebras(self):
        for seed in range(24):
            rank, n = seed % 3 + 1, (seed // 3) % 3 + 1
            with self.subTest(seed=seed):
                R = Algebra(random_pattern_algebra(rank, n, seed))
                self.assertTrue(validate(R)["valid"])


class TestElements(TestCase):
    def test_matrix_product(self):
        R = full_matrix_algebra(2, 1)
        e01, e10 = R.monomial_at(1), R.monomial_at(2)
        self.assertTrue(R.equal(R.mul(e01, e10), R.monomial_at(0)))
        self.assertTrue(R.is_zero(R.mul(e01, e01)))
        self.assertTrue(R.equal(R.mul(R.one(), e10), e10))

    def test_monomial_product(self):
        R = load_instance("torsion_trunc_px")
        x = R.monomial_at(1)
        self.assertTrue(R.equal(R.mul(x, x), R.monomial_at(2)))
        x3 = R.mul(R.mul(x, x), x)
        self.assertTrue(R.is_zero(R.mul(x3, x)))
        self.assertTrue(R.is_zero(R.monomial_at(1, [1])))

    def test_root_p_relations(self):
        R = load_instance("root_p_quotient")
        z, y = R.monomial_at(1), R.monomial_at(3)
        z3 = R.mul(R.mul(z, z), z)
        self.assertTrue(R.equal(z3, R.mul(y, y)))
        self.assertTrue(R.equal(z3, R.monomial_at(0, [6])))

    def test_element_json_forms(self):
        R = full_matrix_algebra(2, 1)
        rows = [[t(2), []], [[], t(3)]]
        flat = [t(2), [], [], t(3)]
        labelled = {"e00": t(2), "e11": t(3)}
        x = R.element_from_json(rows)
        self.assertEqual(R.element_from_json(flat), x)
        self.assertEqual(R.element_from_json(labelled), x)
        self.assertEqual(R.element_to_json(x), rows)
        with self.assertRaises(InstanceSpecError):
            R.element_from_json({"e22": t(0)})
        with self.assertRaises(InstanceSpecError):
            R.element_from_json([t(0)])

    def test_membership(self):
        R = load_instance("r1_example")
        inside = R.element_from_json({"e10": t(-1)})
        outside = R.element_from_json({"e01": t(0)})
        self.assertTrue(R.contains(inside))
        self.assertFalse(R.contains(outside))
        with self.assertRaises(MembershipError):
            R.check_member(outside)


class TestSupport(TestCase):
    def test_diagonal(self):
        R = full_matrix_algebra(2, 1)
        x = R.element_from_json([[t(2), []], [[], t(3)]])
        self.assertEqual(support(x, R), embed([2]))
        self.assertEqual(filter_qv(R.zero(), R), Cut.infty(1))

    def test_whole_field_component(self):
        R = load_instance("diag_f_ov")
        self.assertEqual(filter_qv(R.monomial_at(0), R), Cut.top(1))
        self.assertEqual(filter_qv(R.monomial_at(3), R), embed([0]))

    def test_monomial_support(self):
        R = load_instance("dualnum_ax_x2")
        self.assertEqual(filter_qv(R.monomial_at(1), R), embed([0]))
        self.assertEqual(filter_qv(R.monomial_at(1, [1]), R), Cut.infty(1))

    def test_not_a_member(self):
        R = full_matrix_algebra(2, 1)
        with self.assertRaises(MembershipError):
            support(R.element_from_json({"e00": t(-1)}), R)

    def test_support_is_divisibility(self):
        """embed(α) <= w(x) exactly when t^-α·x stays in R."""
        for name in ("m2_ov", "r1_example", "diag_f_ov"):
            R = load_instance(name)
            zero = [0] * R.rank
            for x in sample_elements(R, 40, 7):
                if R.is_zero(x):
                    continue
                value = filter_qv(x, R)
                for step in range(5):
                    alpha = zero[:-1] + [step]
                    shifted = R.scale(ModelElem.monomial([-a for a in alpha]),
                                      x)
                    with self.subTest(name=name, alpha=alpha):
                        self.assertEqual(
                            embed(alpha) <= value, R.contains(shifted)
                        )


class TestConditions(TestCase):
    def test_m2(self):
        R = full_matrix_algebra(2, 2)
        self.assertTrue(check_condition_a(R))
        self.assertTrue(check_condition_b(R))
        self.assertReport(check_condition_c(R, 50, 0))

    def test_localization(self):
        R = load_instance("localization_subring")
        self.assertFalse(check_condition_a(R))
        self.assertFalse(check_condition_b(R))
        self.assertEqual(R.condition_b_witness(), [0, 1])

    def test_torsion(self):
        R = load_instance("torsion_trunc_px")
        self.assertFalse(check_condition_a(R))
        self.assertFalse(check_condition_b(R))
        self.assertEqual(
            R.condition_b_witness(), {"torsion": "x", "killed_by": [1]}
        )
        self.assertTrue(R.units_condition())

    def test_a_iff_b_on_fixtures(self):
        for name in fixture_names:
            R = load_instance(name)
            if R.one() is None:
                continue
            with self.subTest(name):
                self.assertEqual(check_condition_a(R), check_condition_b(R))

    def test_non_unital(self):
        R = load_instance("r2_example")
        self.assertIsNone(R.one())
        with self.assertRaises(HypothesisError):
            check_condition_b(R)


class TestIdealsOfR(TestCase):
    def test_ideal_and_prime(self):
        R = full_matrix_algebra(2, 1)
        K = (iv(1),) * 4
        self.assertTrue(R.is_ideal(K))
        self.assertTrue(R.is_prime_ideal(K))
        self.assertEqual(contraction(K, R), iv(1))
        self.assertFalse(R.is_prime_ideal(R.whole_ideal()))

    def test_not_an_ideal(self):
        R = full_matrix_algebra(2, 1)
        K = (iv(1), ov(1), ov(1), ov(1))
        self.assertFalse(R.is_ideal(K))
        with self.assertRaises(InvalidAlgebraError):
            contraction(K, R)

    def test_upper_triangular_primes(self):
        R = Algebra(load_json(test_instances["upper_triangular"]))
        Z = zero_ideal(1)
        prime = (ov(1), ov(1), Z, iv(1))
        product = (iv(1), ov(1), Z, iv(1))
        self.assertTrue(R.is_prime_ideal(prime))
        self.assertTrue(R.is_ideal(product))
        self.assertFalse(R.is_prime_ideal(product))
        self.assertEqual(R.prime_witness(product), ((0, 0), (1, 1)))

    def test_monomial_primes(self):
        R = load_instance("dualnum_ax_x2")
        xR = (zero_ideal(1), ov(1))
        self.assertTrue(R.is_prime_ideal(xR))
        self.assertEqual(R.contraction_of(xR), zero_ideal(1))
        self.assertFalse(R.is_ideal((zero_ideal(1), zero_ideal(1))))

    def test_root_p_zero_is_not_prime(self):
        R = load_instance("root_p_quotient")
        self.assertFalse(R.is_prime_ideal(R.extend_ideal(zero_ideal(1))))
        self.assertFalse(R.is_prime_ideal(R.extend_ideal(iv(1))))
        maximal = (iv(1),) + (ov(1),) * 5
        self.assertTrue(R.is_prime_ideal(maximal))
        self.assertEqual(R.contraction_of(maximal), iv(1))

    def test_random_elements_are_members(self):
        gen = random.Random(3)
        for name in fixture_names:
            R = load_instance(name)
            with self.subTest(name):
                for _ in range(20):
                    self.assertTrue(R.contains(R.random_element(gen)))

    def test_group_elem_shifts(self):
        R = load_instance("root_p_quotient")
        self.assertEqual(R.table[1][2], (GroupElem([6]), 0))
