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
import re
from dataclasses import dataclass
from fractions import Fraction

from .ordered_values import (
    INFINITY,
    Cut,
    GroupElem,
    GroupLike,
    IsolatedSubgroup,
    add_cut,
    as_group,
    cut_max,
    cut_min,
    embed,
    isolated_plus,
    residual,
    right_sum,
    validate_rank,
)
from .typing import Any, CutSpec, Dict, Iterable, List, Optional, Tuple, Union

Scalar = Union[int, Fraction]


class ModelElem:
    """
    Finite formal sum Σ c_γ t^γ with rational coefficients, an exact
    model of elements of the valued field F. Terms are kept sorted by
    exponent and never hold a zero coefficient.

    Args:
        terms (iterable): Pairs (exponent, coefficient).
        rank (int): Rank of the value group.
    """

    __slots__ = ("rank", "terms")

    def __init__(self, terms: Iterable[Tuple[GroupLike, Scalar]], rank: int):
        validate_rank(rank)
        collected: Dict[GroupElem, Fraction] = {}
        for exponent, coefficient in terms:
            exponent = as_group(exponent)
            if exponent.rank != rank:
                raise ValueError(
                    f"exponent {exponent} does not have rank {rank}"
                )
            collected[exponent] = collected.get(exponent, 0) + Fraction(
                coefficient
            )
        self.rank = rank
        self.terms: Tuple[Tuple[GroupElem, Fraction], ...] = tuple(
            sorted(
                ((e, c) for e, c in collected.items() if c != 0),
                key=lambda term: term[0].coords,
            )
        )

    @classmethod
    def zero(cls, rank: int) -> "ModelElem":
        return cls((), rank)

    @classmethod
    def one(cls, rank: int) -> "ModelElem":
        return cls(((GroupElem.zero(rank), 1),), rank)

    @classmethod
    def monomial(
        cls, exponent: GroupLike, coefficient: Scalar = 1
    ) -> "ModelElem":
        exponent = as_group(exponent)
        return cls(((exponent, coefficient),), exponent.rank)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def __eq__(self, other):
        if not isinstance(other, ModelElem):
            return NotImplemented
        return self.rank == other.rank and self.terms == other.terms

    def __hash__(self):
        return hash((self.rank, self.terms))

    def __repr__(self):
        if not self.terms:
            return f"ModelElem.zero({self.rank})"
        body = " + ".join(f"{c}*t^{e.coords}" for e, c in self.terms)
        return f"ModelElem({body})"

    def __neg__(self):
        return ModelElem(((e, -c) for e, c in self.terms), self.rank)

    def __add__(self, other):
        if not isinstance(other, ModelElem):
            return NotImplemented
        return ModelElem(self.terms + other.terms, self.rank)

    def __sub__(self, other):
        if not isinstance(other, ModelElem):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return ModelElem(
                ((e, c * other) for e, c in self.terms), self.rank
            )
        if not isinstance(other, ModelElem):
            return NotImplemented
        return ModelElem(
            (
                (e1 + e2, c1 * c2)
                for e1, c1 in self.terms
                for e2, c2 in other.terms
            ),
            self.rank,
        )

    __rmul__ = __mul__

    def shift(self, exponent: GroupLike) -> "ModelElem":
        """Multiplication by t^γ."""
        exponent = as_group(exponent)
        return ModelElem(((e + exponent, c) for e, c in self.terms), self.rank)

    def divide_monomial(self, divisor: "ModelElem") -> "ModelElem":
        """
        Exact division by a single-term element.

        Raises:
            ZeroDivisionError: If divisor is zero.
            ValueError: If divisor has more than one term.
        """
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero element")
        if not divisor.is_monomial():
            raise ValueError(f"{divisor} is not a monomial")
        exponent, coefficient = divisor.terms[0]
        return ModelElem(
            ((e - exponent, c / coefficient) for e, c in self.terms),
            self.rank,
        )

    def leading_term(self) -> Optional[Tuple[GroupElem, Fraction]]:
        return self.terms[0] if self.terms else None

    def truncate(self, ideal: "IdealCut") -> "ModelElem":
        """Drops the terms whose exponent lies in `ideal`."""
        return ModelElem(
            ((e, c) for e, c in self.terms if not ideal_member(e, ideal)),
            self.rank,
        )

    def to_json(self) -> List[List[Any]]:
        return [
            [c.numerator, c.denominator, list(e.coords)]
            for e, c in self.terms
        ]

    @classmethod
    def from_json(cls, obj: List[Any], rank: int) -> "ModelElem":
        """
        Raises:
            TypeError, ValueError: On a malformed term list.
        """
        if not isinstance(obj, list):
            raise TypeError(f"element expected to be a list, got {obj}")
        terms = []
        for term in obj:
            if not isinstance(term, list) or len(term) != 3:
                raise ValueError(
                    f"term {term} must be [numerator, denominator, exponent]"
                )
            num, den, exponent = term
            terms.append((exponent, Fraction(num, den)))
        return cls(terms, rank)


def valuation(x: ModelElem):
    """
    v(x): the lexicographically least exponent, INFINITY for zero.
    """
    return x.terms[0][0] if x.terms else INFINITY


@dataclass(frozen=True)
class IdealCut:
    """
    O_v-submodule J = {0} ∪ {x : v(x) > boundary} of F.
    """

    boundary: Cut

    @property
    def rank(self) -> int:
        return self.boundary.rank

    def __repr__(self):
        name = _SHORT_NAMES.get(self.boundary.kind)
        if name:
            return f"IdealCut({name})"
        return f"IdealCut({self.boundary!r})"

    def to_json(self) -> Dict[str, Any]:
        return self.boundary.to_json()


_SHORT_NAMES = {"bottom": "F", "top": "zero"}


def ideal_member(value, J: IdealCut) -> bool:
    """
    Membership of a value (a GroupElem or INFINITY) in the value set of
    `J`.
    """
    if value is INFINITY:
        return True
    return embed(value) > J.boundary


def element_in(x: ModelElem, J: IdealCut) -> bool:
    return ideal_member(valuation(x), J)


def ideal_contains(J1: IdealCut, J2: IdealCut) -> bool:
    """J1 ⊇ J2."""
    return J1.boundary <= J2.boundary


def ideal_shift(value: GroupLike, J: IdealCut) -> IdealCut:
    """The module t^γ·J."""
    return IdealCut(add_cut(J.boundary, embed(value)))


def ideal_product(J1: IdealCut, J2: IdealCut) -> IdealCut:
    """The module J1·J2."""
    return IdealCut(right_sum(J1.boundary, J2.boundary))


def product_contained(J1: IdealCut, J2: IdealCut, J3: IdealCut) -> bool:
    """J1·J2 ⊆ J3."""
    return ideal_contains(J3, ideal_product(J1, J2))


def ideal_join(*ideals: IdealCut) -> IdealCut:
    """J1 + J2 + ...; modules of a valuation domain are a chain."""
    return IdealCut(cut_min(*(J.boundary for J in ideals)))


def ideal_meet(*ideals: IdealCut) -> IdealCut:
    return IdealCut(cut_max(*(J.boundary for J in ideals)))


def ideal_colon(J3: IdealCut, J2: IdealCut) -> IdealCut:
    """
    (J3 : J2) = {x ∈ F : x·J2 ⊆ J3}. For J3 = O_v this is J2⁻¹.
    """
    return IdealCut(residual(J2.boundary, J3.boundary, strict=True))


def ov(rank: int) -> IdealCut:
    return principal(GroupElem.zero(rank))


def iv(rank: int) -> IdealCut:
    return IdealCut(embed(GroupElem.zero(rank)))


def whole_field(rank: int) -> IdealCut:
    return IdealCut(Cut.bottom(rank))


def zero_ideal(rank: int) -> IdealCut:
    return IdealCut(Cut.top(rank))


def principal(value: GroupLike) -> IdealCut:
    """t^γ·O_v = {x : v(x) >= γ}."""
    value = as_group(value)
    return IdealCut(Cut.strict(value.coords, value.rank))


def prime(rank: int, index: int) -> IdealCut:
    """P_H for the isolated subgroup H_index."""
    return IdealCut(isolated_plus(IsolatedSubgroup(rank, index)))


def localization(rank: int, index: int) -> IdealCut:
    """
    (O_v)_P for P = P_H with H = H_index: values whose first
    r - index coordinates are lexicographically nonnegative.
    """
    h = IsolatedSubgroup(rank, index)
    if h.index == rank:
        return whole_field(rank)
    return IdealCut(Cut.strict((0,) * (rank - index), rank))


def spec_base(rank: int) -> List[Tuple[IsolatedSubgroup, IdealCut]]:
    """
    The chain {0} = P_Γ ⊂ ... ⊂ P_{H_0} = I_v of the r + 1 primes of O_v,
    in increasing order.
    """
    validate_rank(rank)
    return [
        (IsolatedSubgroup(rank, j), prime(rank, j))
        for j in range(rank, -1, -1)
    ]


def base_chain(rank: int) -> List[IdealCut]:
    return [P for _, P in spec_base(rank)]


def prime_index(J: IdealCut) -> Optional[int]:
    """
    Position of `J` in the base chain or None if it is not prime.
    """
    for pos, P in enumerate(base_chain(J.rank)):
        if P == J:
            return pos
    return None


_PRIME_RE = re.compile(r"^P(\d+)$")


def ideal_from_json(obj: CutSpec, rank: int) -> IdealCut:
    """
    Parses a cut object or one of the shorthands "Ov", "Iv", "F",
    "zero", "P0".."Pr".

    Raises:
        ValueError: On an unknown shorthand or an infty boundary.
    """
    if isinstance(obj, str):
        shorthands = {
            "Ov": ov,
            "Iv": iv,
            "F": whole_field,
            "zero": zero_ideal,
        }
        if obj in shorthands:
            return shorthands[obj](rank)
        match = _PRIME_RE.match(obj)
        if match:
            return prime(rank, int(match.group(1)))
        raise ValueError(f"Unknown ideal shorthand '{obj}'")
    boundary = Cut.from_json(obj, rank)
    if not boundary.is_finite:
        raise ValueError("infty is not a module boundary")
    return IdealCut(boundary)
