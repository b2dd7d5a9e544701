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
import random as _random
from fractions import Fraction

from .field_model import (
    IdealCut,
    ModelElem,
    ideal_product,
    ideal_shift,
    ov,
    prime,
    principal,
)
from .ordered_values import Cut, GroupElem, validate_rank
from .typing import Iterable, List, Optional, Tuple

SAMPLE_BOX = 6


def rng(seed: int) -> _random.Random:
    """
    Independent generator for a sampling run. Nothing in the package
    touches the module level random state.
    """
    return _random.Random(seed)


def random_group_elem(rank: int, gen: _random.Random, box: int = SAMPLE_BOX):
    return GroupElem(gen.randint(-box, box) for _ in range(rank))


def random_nonnegative(
    rank: int, gen: _random.Random, box: int = SAMPLE_BOX
) -> GroupElem:
    value = random_group_elem(rank, gen, box)
    return -value if value < GroupElem.zero(rank) else value


def random_positive(
    rank: int, gen: _random.Random, box: int = SAMPLE_BOX
) -> GroupElem:
    value = random_nonnegative(rank, gen, box)
    return value if not value.is_zero() else GroupElem.epsilon(rank)


def minimal_value(cut: Cut) -> Optional[GroupElem]:
    """
    A value just above `cut`: the least one when the cut is principal.
    None for the top cut, whose right set is empty.
    """
    if cut.kind == "top":
        return None
    if cut.kind == "bottom":
        return GroupElem.zero(cut.rank)
    head = cut.prefix[:-1] + (cut.prefix[-1] + 1,)
    return GroupElem(head + (0,) * (cut.rank - len(head)))


def random_value_above(cut: Cut, gen: _random.Random) -> Optional[GroupElem]:
    """
    A random value in the right set of `cut`.
    """
    if cut.kind == "top":
        return None
    if cut.kind == "bottom":
        return random_group_elem(cut.rank, gen)
    head = cut.prefix[:-1] + (cut.prefix[-1] + gen.randint(1, 3),)
    tail = tuple(
        gen.randint(-SAMPLE_BOX, SAMPLE_BOX)
        for _ in range(cut.rank - len(head))
    )
    return GroupElem(head + tail)


def random_value_in_h(
    rank: int, index: int, gen: _random.Random
) -> GroupElem:
    """
    A random nonnegative value of the isolated subgroup H_index.
    """
    if index == 0:
        return GroupElem.zero(rank)
    tail = random_nonnegative(index, gen).coords
    return GroupElem((0,) * (rank - index) + tail)


def random_coefficient(gen: _random.Random) -> Fraction:
    num = gen.choice([-5, -4, -3, -2, -1, 1, 2, 3, 4, 5])
    return Fraction(num, gen.randint(1, 3))


def random_model_elem(
    leading: GroupElem, gen: _random.Random, max_terms: int = 3
) -> ModelElem:
    """
    Builds an element of valuation `leading` with 1 to `max_terms` terms.
    """
    terms = [(leading, random_coefficient(gen))]
    for _ in range(gen.randint(0, max_terms - 1)):
        terms.append(
            (leading + random_positive(leading.rank, gen),
             random_coefficient(gen))
        )
    return ModelElem(terms, leading.rank)


def sample_scalars(rank: int, count: int, seed: int) -> List[ModelElem]:
    """
    Reproducible nonzero elements of O_v, starting with 1 and t^ε.
    """
    validate_rank(rank)
    gen = rng(seed)
    scalars = [
        ModelElem.one(rank),
        ModelElem.monomial(GroupElem.epsilon(rank)),
    ]
    while len(scalars) < count:
        scalars.append(random_model_elem(random_nonnegative(rank, gen), gen))
    return scalars[:count]


def sample_elements(algebra, count: int, seed: int) -> List[Tuple]:
    """
    Reproducible pseudo-random elements of `algebra`.

    Args:
        algebra: A PatternAlgebra or MonomialAlgebra.
        count (int): Number of elements.
        seed (int): Sampling seed.

    Returns:
        elements (list): Elements of the algebra, as coordinate tuples.
    """
    gen = rng(seed)
    return [algebra.random_element(gen) for _ in range(count)]


def sample_pairs(algebra, count: int, seed: int) -> List[Tuple]:
    """
    Reproducible pairs (x, y) of elements. One pair in five is engineered
    as y = t^ε·x - x so that x + y cancels the leading terms of x.
    """
    gen = rng(seed)
    eps = ModelElem.monomial(GroupElem.epsilon(algebra.rank))
    pairs = []
    for idx in range(count):
        x = algebra.random_element(gen)
        if idx % 5 == 4:
            y = algebra.sub(algebra.scale(eps, x), x)
        else:
            y = algebra.random_element(gen)
        pairs.append((x, y))
    return pairs


def random_pattern_algebra(rank: int, n: int, seed: int) -> dict:
    """
    Instance specification of a random valid pattern algebra. The
    components are J_ij = A_ij·t^(d_i - d_j)·O_v for a random shift d,
    with A_ij = O_v on the diagonal, a prime or principal ideal of O_v
    above it and O_v or {0} below it.
    """
    gen = rng(seed)
    shifts = [random_group_elem(rank, gen, 2) for _ in range(n)]
    upper = gen.choice(
        [ov(rank), prime(rank, gen.randint(0, rank - 1)),
         principal(random_nonnegative(rank, gen, 2))]
    )
    lower_zero = gen.random() < 0.5
    components = []
    for i in range(n):
        row = []
        for j in range(n):
            base = ideal_shift(shifts[i] - shifts[j], ov(rank))
            if i < j:
                component = ideal_product(upper, base)
            elif i > j and lower_zero:
                component = IdealCut(Cut.top(rank))
            else:
                component = base
            row.append(component.to_json())
        components.append(row)
    return {
        "name": f"random_r{rank}_n{n}_s{seed}",
        "kind": "pattern",
        "rank": rank,
        "n": n,
        "components": components,
    }


def seeds(seed: int, count: int) -> Iterable[int]:
    """Derived seeds for independent sub-runs."""
    gen = rng(seed)
    return [gen.randrange(2 ** 31) for _ in range(count)]
