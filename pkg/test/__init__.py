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
import functools
import itertools
import json
import unittest

from hypothesis import strategies as st

from cutspec.ordered_values import BOTTOM, PREFIX, TOP, Cut

fixture_names = [
    "diag_f_ov",
    "dualnum_ax_x2",
    "localization_subring",
    "m2_ov",
    "r1_example",
    "r2_example",
    "root_p_quotient",
    "torsion_trunc_px",
]

test_instances = {
    "corrupted_closure": "test/json/corrupted_closure.json",
    "upper_triangular": "test/json/upper_triangular.json",
}


def load_json(filename):
    with open(filename, "r") as fp:
        return json.load(fp)


# ---------------------------------------------------------------------
# BOX ORACLES
# ---------------------------------------------------------------------
def in_left_set(cut, point):
    """Brute-force membership of a point of Z^r in the left set."""
    if cut.kind == BOTTOM:
        return False
    if cut.kind == TOP:
        return True
    return tuple(point[: len(cut.prefix)]) <= cut.prefix


def corner(cut):
    """The prefix padded with zeros; the origin for bottom and top."""
    if cut.kind == PREFIX:
        return cut.prefix + (0,) * (cut.rank - len(cut.prefix))
    return (0,) * cut.rank


def corner_sum(cuts):
    return tuple(map(sum, zip(*(corner(cut) for cut in cuts))))


def box(rank, width, center=None):
    center = center or (0,) * rank
    for offset in itertools.product(range(-width, width + 1), repeat=rank):
        yield tuple(c + o for c, o in zip(center, offset))


def oracle_left_set(cut, window, center=None):
    return frozenset(
        point
        for point in box(cut.rank, window, center)
        if in_left_set(cut, point)
    )


@functools.lru_cache(maxsize=4096)
def box_peak(cut, reach):
    """Lex-largest point of A^L in the box around the corner, or None."""
    points = [
        x for x in box(cut.rank, reach, corner(cut)) if in_left_set(cut, x)
    ]
    return max(points) if points else None


def oracle_sum(cuts, window, reach):
    """
    Left set of the left sum of `cuts` in the window around the sum of
    their corners. Left sets are lower sets, so z is in the sum iff z
    minus the box peaks of all but the last cut is in the last left set.
    Exact while reach > window.
    """
    *head, last = cuts
    offset = (0,) * last.rank
    for cut in head:
        peak = box_peak(cut, reach)
        if peak is None:
            return frozenset()
        offset = tuple(p + q for p, q in zip(offset, peak))
    return frozenset(
        z
        for z in box(last.rank, window, corner_sum(cuts))
        if in_left_set(last, tuple(p - q for p, q in zip(z, offset)))
    )


def oracle_le(a, b):
    """
    A^L ⊆ B^L, checked on the unit boxes around both corners. Those boxes
    hold a point of A^L outside B^L whenever there is one: either the
    corner of A or the corner of B stepped once at its last prefix
    coordinate.
    """
    points = set(box(a.rank, 1, corner(a))) | set(box(b.rank, 1, corner(b)))
    return all(in_left_set(b, z) for z in points if in_left_set(a, z))


def random_cut(rank, gen, low=-8, high=8):
    """Bottom and top one time in ten each, otherwise a random prefix."""
    roll = gen.random()
    if roll < 0.1:
        return Cut.bottom(rank)
    if roll < 0.2:
        return Cut.top(rank)
    k = gen.randint(1, rank)
    return Cut(PREFIX, rank, [gen.randint(low, high) for _ in range(k)])


def oracle_closure(rank, index, window):
    """Downward closure of the isolated subgroup H_index in the window."""
    subgroup = [
        h for h in box(rank, window) if not any(h[: rank - index])
    ]
    return frozenset(
        z for z in box(rank, window) if any(z <= h for h in subgroup)
    )


def cut_strategy(rank, low=-2, high=2):
    """Bottom, top and prefix cuts with coordinates in [low, high]."""
    prefix = st.integers(1, rank).flatmap(
        lambda k: st.lists(st.integers(low, high), min_size=k, max_size=k)
    )
    return st.one_of(
        st.just(Cut.bottom(rank)),
        st.just(Cut.top(rank)),
        prefix.map(lambda p: Cut(PREFIX, rank, p)),
    )


def group_strategy(rank, low=-6, high=6):
    return st.lists(st.integers(low, high), min_size=rank, max_size=rank)


class TestCase(unittest.TestCase):
    def assertVerdict(self, verdict, status, error_msg=""):
        error_msg = (
            error_msg
            if error_msg
            else "Verdict {0} is not '{1}'".format(verdict, status)
        )
        self.assertEqual(verdict["status"], status, error_msg)
        if status == "fail":
            self.assertIsNotNone(verdict["witness"], error_msg)

    def assertReport(self, report, error_msg=""):
        error_msg = (
            error_msg if error_msg else "Report failed: {0}".format(report)
        )
        self.assertTrue(report["passed"], error_msg)

    def assertIdeals(self, algebra, ideals, expected):
        self.assertEqual(
            [algebra.ideal_to_json(K) for K in ideals],
            [algebra.ideal_to_json(algebra.ideal_from_json(K))
             for K in expected],
        )
