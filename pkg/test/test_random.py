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
from cutspec import random as crandom
from cutspec.algebra import Algebra, validate
from cutspec.field_model import ModelElem, valuation
from cutspec.instances import load_instance
from cutspec.ordered_values import (
    PREFIX,
    Cut,
    GroupElem,
    IsolatedSubgroup,
    embed,
)

from . import TestCase


class TestRandomValues(TestCase):
    n_tests = 300

    def test_same_seed_same_stream(self):
        first = [crandom.rng(7).randint(0, 10 ** 6) for _ in range(3)]
        second = [crandom.rng(7).randint(0, 10 ** 6) for _ in range(3)]
        self.assertEqual(first, second)

    def test_signs(self):
        gen = crandom.rng(1)
        zero = GroupElem.zero(3)
        for _ in range(self.n_tests):
            self.assertGreaterEqual(crandom.random_nonnegative(3, gen), zero)
            self.assertGreater(crandom.random_positive(3, gen), zero)

    def test_minimal_value(self):
        self.assertEqual(
            crandom.minimal_value(Cut(PREFIX, 2, [1, 2])), GroupElem([1, 3])
        )
        self.assertEqual(
            crandom.minimal_value(Cut(PREFIX, 2, [1])), GroupElem([2, 0])
        )
        self.assertEqual(
            crandom.minimal_value(Cut.bottom(2)), GroupElem([0, 0])
        )
        self.assertIsNone(crandom.minimal_value(Cut.top(2)))

    def test_value_above(self):
        gen = crandom.rng(2)
        cuts = [
            Cut(PREFIX, 3, [0]),
            Cut(PREFIX, 3, [1, -2]),
            Cut(PREFIX, 3, [4, 0, -1]),
            Cut.bottom(3),
        ]
        for cut in cuts:
            for _ in range(self.n_tests // len(cuts)):
                value = crandom.random_value_above(cut, gen)
                self.assertGreater(embed(value), cut)
        self.assertIsNone(crandom.random_value_above(Cut.top(3), gen))

    def test_value_in_h(self):
        gen = crandom.rng(3)
        for index in range(4):
            h = IsolatedSubgroup(rank=3, index=index)
            for _ in range(50):
                value = crandom.random_value_in_h(3, index, gen)
                self.assertTrue(h.contains(value))
                self.assertGreaterEqual(value, GroupElem.zero(3))

    def test_model_elem_valuation(self):
        gen = crandom.rng(4)
        for _ in range(self.n_tests):
            leading = crandom.random_group_elem(2, gen)
            x = crandom.random_model_elem(leading, gen)
            self.assertEqual(valuation(x), leading)


class TestSamples(TestCase):
    def test_scalars(self):
        scalars = crandom.sample_scalars(2, 40, 5)
        self.assertEqual(len(scalars), 40)
        self.assertEqual(scalars[0], ModelElem.one(2))
        self.assertEqual(scalars[1], ModelElem.monomial(GroupElem([0, 1])))
        for c in scalars:
            self.assertGreaterEqual(valuation(c), GroupElem.zero(2))
        self.assertEqual(scalars, crandom.sample_scalars(2, 40, 5))

    def test_elements_are_members(self):
        for name in ["m2_ov", "r1_example", "dualnum_ax_x2"]:
            R = load_instance(name)
            elements = crandom.sample_elements(R, 30, 11)
            with self.subTest(instance=name):
                self.assertEqual(len(elements), 30)
                self.assertTrue(all(R.contains(x) for x in elements))
                self.assertEqual(
                    elements, crandom.sample_elements(R, 30, 11)
                )

    def test_engineered_pairs(self):
        R = load_instance("m2_ov")
        eps = ModelElem.monomial(GroupElem([0, 1]))
        pairs = crandom.sample_pairs(R, 20, 12)
        for x, y in pairs[4::5]:
            self.assertTrue(R.equal(R.add(x, y), R.scale(eps, x)))

    def test_random_pattern_algebra(self):
        spec = crandom.random_pattern_algebra(2, 3, 9)
        self.assertEqual(spec["name"], "random_r2_n3_s9")
        self.assertEqual(spec, crandom.random_pattern_algebra(2, 3, 9))
        self.assertTrue(validate(Algebra(spec))["valid"])

    def test_seeds(self):
        derived = crandom.seeds(0, 8)
        self.assertEqual(derived, crandom.seeds(0, 8))
        self.assertEqual(len(set(derived)), 8)
