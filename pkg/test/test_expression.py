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
from cutspec.exceptions import CutExpressionError
from cutspec.expression import parse_cut, tokenize
from cutspec.ordered_values import Cut, embed

from . import TestCase


class TestTokenize(TestCase):
    def test_positions(self):
        self.assertEqual(
            tokenize("embed(1) + top"),
            [
                ("name", "embed", 0),
                ("op", "(", 5),
                ("int", "1", 6),
                ("op", ")", 7),
                ("op", "+", 9),
                ("name", "top", 11),
                ("end", "", 14),
            ],
        )

    def test_bad_character(self):
        with self.assertRaises(CutExpressionError) as ctx:
            tokenize("embed([1,2]) $")
        self.assertEqual(ctx.exception.position, 13)


class TestParseCut(TestCase):
    cases = [
        ("prefix([3]) + principal([0, 7])", 2, Cut.from_prefix([3], 2)),
        ("embed([1,2]) + embed([3,4])", 2, embed([4, 6])),
        ("[1, 2] + [0, -5]", 2, embed([1, -3])),
        ("2 * prefix([1])", 2, Cut.from_prefix([2], 2)),
        ("3·embed(1)", 1, embed([3])),
        ("5", 1, embed([5])),
        ("-3", 1, embed([-3])),
        ("Hplus(1)", 2, Cut.from_prefix([0], 2)),
        ("Hplus(2)", 2, Cut.top(2)),
        ("Hplus(0)", 2, embed([0, 0])),
        ("principal([0, 0])", 2, Cut.from_prefix([0, -1], 2)),
        ("top + bottom", 1, Cut.bottom(1)),
        ("infty + bottom", 1, Cut.infty(1)),
        ("embed([1,2]) - [1,1]", 2, embed([0, 1])),
        ("(prefix([1]) + embed([0,5])) - [1, 0]", 2, Cut.from_prefix([0], 2)),
        ("2 * (Hplus(1) + embed([1, 1]))", 2, Cut.from_prefix([2], 2)),
    ]

    def test_cases(self):
        for text, rank, expected in self.cases:
            with self.subTest(text):
                self.assertEqual(parse_cut(text, rank), expected)

    def test_errors(self):
        errors = [
            ("5", 2, 0),
            ("foo", 1, 0),
            ("embed([1,2]", 2, 11),
            ("prefix([1,2,3])", 2, 7),
            ("embed([1])", 2, 6),
            ("top top", 1, 4),
            ("Hplus(3)", 2, 6),
        ]
        for text, rank, position in errors:
            with self.subTest(text):
                with self.assertRaises(CutExpressionError) as ctx:
                    parse_cut(text, rank)
                self.assertEqual(ctx.exception.position, position)

    def test_multiples_must_be_positive(self):
        with self.assertRaises(CutExpressionError):
            parse_cut("0 * top", 1)

    def test_rank(self):
        with self.assertRaises(ValueError):
            parse_cut("top", 0)
