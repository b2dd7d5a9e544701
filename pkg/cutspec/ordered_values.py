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
import math
from dataclasses import dataclass

from .exceptions import RankMismatchError
from .typing import Any, Coords, Dict, Iterable, Optional, Tuple, Union

MAX_RANK = 4

BOTTOM = "bottom"
PREFIX = "prefix"
TOP = "top"
INFTY = "infty"
_KIND_ORDER = {BOTTOM: 0, PREFIX: 1, TOP: 2, INFTY: 3}


def validate_rank(rank: int) -> int:
    """
    Checks that `rank` is an integer in [1, MAX_RANK].

    Raises:
        TypeError: If rank is not an integer.
        ValueError: If rank is out of bounds.
    """
    if not isinstance(rank, int) or isinstance(rank, bool):
        raise TypeError(f"rank must be an integer, got {type(rank)}")
    if not 1 <= rank <= MAX_RANK:
        raise ValueError(f"rank must be in [1, {MAX_RANK}], got {rank}")
    return rank


def _validate_ints(values: Iterable[Any], name: str) -> Coords:
    values = tuple(values)
    for value in values:
        if not isinstance(value, int) or isinstance(value, bool):
            raise TypeError(f"{name} must hold integers, got {values}")
    return values


def _same_rank(a, b) -> int:
    if a.rank != b.rank:
        raise RankMismatchError(f"Rank mismatch: {a.rank} != {b.rank}")
    return a.rank


@functools.total_ordering
class _Infinity:
    """
    The element ∞ adjoined to Γ. Greater than every group element and
    absorbing for addition and translation.
    """

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __reduce__(self):
        return (_Infinity, ())

    def __repr__(self):
        return "INFINITY"

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("cutspec.INFINITY")

    def __lt__(self, other):
        return False

    def __add__(self, other):
        return self

    __radd__ = __add__

    def __sub__(self, other):
        return self


INFINITY = _Infinity()


@functools.total_ordering
class GroupElem:
    """
    Element of Z^r under the lexicographic order.

    Args:
        coords (iterable): The r integer coordinates.
    """

    __slots__ = ("coords",)

    def __init__(self, coords: Iterable[int]) -> None:
        coords = _validate_ints(coords, "coords")
        validate_rank(len(coords))
        self.coords: Coords = coords

    @classmethod
    def zero(cls, rank: int) -> "GroupElem":
        return cls((0,) * validate_rank(rank))

    @classmethod
    def epsilon(cls, rank: int) -> "GroupElem":
        """The minimal positive element (0, ..., 0, 1)."""
        return cls((0,) * (validate_rank(rank) - 1) + (1,))

    @property
    def rank(self) -> int:
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __len__(self):
        return len(self.coords)

    def __getitem__(self, idx):
        return self.coords[idx]

    def __repr__(self):
        return f"GroupElem({self.coords})"

    def __hash__(self):
        return hash(self.coords)

    def __eq__(self, other):
        if isinstance(other, GroupElem):
            return self.coords == other.coords
        return NotImplemented

    def __lt__(self, other):
        if other is INFINITY:
            return True
        if isinstance(other, GroupElem):
            _same_rank(self, other)
            return self.coords < other.coords
        return NotImplemented

    def __add__(self, other):
        if other is INFINITY:
            return INFINITY
        _same_rank(self, other)
        return GroupElem(a + b for a, b in zip(self.coords, other.coords))

    def __sub__(self, other):
        _same_rank(self, other)
        return GroupElem(a - b for a, b in zip(self.coords, other.coords))

    def __neg__(self):
        return GroupElem(-a for a in self.coords)

    def __mul__(self, n: int):
        return GroupElem(n * a for a in self.coords)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not any(self.coords)


GroupLike = Union[GroupElem, Iterable[int]]


def as_group(value: GroupLike) -> GroupElem:
    """
    Coerces a sequence of integers to a GroupElem.
    """
    if isinstance(value, GroupElem):
        return value
    return GroupElem(value)


@functools.total_ordering
class Cut:
    """
    Canonical element of the cut monoid M(Γ) of Γ = Z^r, or the adjoined
    ∞.

    A cut is stored through its left set A^L:
        bottom: A^L = ∅
        top: A^L = Γ
        prefix: A^L = {x : x[:k] <= p}, 1 <= k <= rank
        infty: the adjoined ∞, above every cut

    Every initial subset of Z^r is exactly one of these, so equality is
    structural.
    """

    __slots__ = ("kind", "rank", "prefix")

    def __init__(self, kind: str, rank: int, prefix: Iterable[int] = ()):
        if kind not in _KIND_ORDER:
            raise ValueError(f"Unknown cut kind '{kind}'")
        validate_rank(rank)
        prefix = _validate_ints(prefix, "prefix")
        if kind == PREFIX:
            if not 1 <= len(prefix) <= rank:
                raise ValueError(
                    f"prefix length must be in [1, {rank}], got {prefix}"
                )
        elif prefix:
            raise ValueError(f"Cut '{kind}' takes no prefix")
        self.kind = kind
        self.rank = rank
        self.prefix: Coords = prefix

    @classmethod
    def bottom(cls, rank: int) -> "Cut":
        return cls(BOTTOM, rank)

    @classmethod
    def top(cls, rank: int) -> "Cut":
        return cls(TOP, rank)

    @classmethod
    def infty(cls, rank: int) -> "Cut":
        return cls(INFTY, rank)

    @classmethod
    def from_prefix(cls, prefix: Iterable[int], rank: int) -> "Cut":
        return cls(PREFIX, rank, prefix)

    @classmethod
    def strict(cls, prefix: Iterable[int], rank: int) -> "Cut":
        """
        The cut whose left set is {x : x[:k] < p}. An empty tail is
        folded by decrementing the last prefix coordinate.
        """
        prefix = tuple(prefix)
        return cls(PREFIX, rank, prefix[:-1] + (prefix[-1] - 1,))

    @property
    def is_finite(self) -> bool:
        return self.kind != INFTY

    def _key(self) -> Tuple:
        if self.kind == PREFIX:
            pad = (math.inf,) * (self.rank - len(self.prefix))
            return (1,) + self.prefix + pad
        return (_KIND_ORDER[self.kind],)

    def __eq__(self, other):
        if not isinstance(other, Cut):
            return NotImplemented
        return (self.kind, self.rank, self.prefix) == (
            other.kind,
            other.rank,
            other.prefix,
        )

    def __hash__(self):
        return hash((self.kind, self.rank, self.prefix))

    def __lt__(self, other):
        if not isinstance(other, Cut):
            return NotImplemented
        _same_rank(self, other)
        return self._key() < other._key()

    def __add__(self, other):
        return add_cut(self, other)

    def __repr__(self):
        if self.kind == PREFIX:
            return f"Cut.from_prefix({list(self.prefix)}, {self.rank})"
        return f"Cut.{self.kind}({self.rank})"

    def to_json(self) -> Dict[str, Any]:
        if self.kind == PREFIX:
            return {"cut": PREFIX, "p": list(self.prefix)}
        return {"cut": self.kind}

    @classmethod
    def from_json(cls, obj: Dict[str, Any], rank: int) -> "Cut":
        """
        Builds a cut from its JSON form.

        Raises:
            KeyError: When the 'cut' key is missing.
            ValueError, TypeError: On an invalid kind or prefix.
        """
        if not isinstance(obj, dict):
            raise TypeError(f"cut expected to be a dict, got {type(obj)}")
        if "cut" not in obj:
            raise KeyError(f"cut {obj} must have key 'cut'")
        extra_keys = [key for key in obj if key not in ("cut", "p")]
        if extra_keys:
            raise ValueError(f"Found unexpected keys {extra_keys} in cut.")
        if obj["cut"] == PREFIX:
            if not isinstance(obj.get("p"), list):
                raise TypeError(f"prefix cut {obj} needs a list 'p'")
            return cls(PREFIX, rank, obj["p"])
        return cls(obj["cut"], rank)


@dataclass(frozen=True)
class IsolatedSubgroup:
    """
    H_j = {x : x_1 = ... = x_{r-j} = 0}; H_0 = {0}, H_r = Γ.
    """

    rank: int
    index: int

    def __post_init__(self):
        validate_rank(self.rank)
        if not 0 <= self.index <= self.rank:
            raise ValueError(
                f"isolated subgroup index must be in [0, {self.rank}], "
                f"got {self.index}"
            )

    def contains(self, value: GroupLike) -> bool:
        value = as_group(value)
        return not any(value.coords[: self.rank - self.index])


def cmp_group(a: GroupElem, b: GroupElem) -> int:
    """
    Lexicographic comparison.

    Returns:
        ordering (int): -1, 0 or 1.

    Raises:
        RankMismatchError: When ranks differ.
    """
    a, b = as_group(a), as_group(b)
    _same_rank(a, b)
    return (a.coords > b.coords) - (a.coords < b.coords)


def embed(value: GroupLike) -> Cut:
    """
    The order and addition preserving monomorphism Γ -> M(Γ),
    γ -> {γ}⁺.
    """
    value = as_group(value)
    return Cut(PREFIX, value.rank, value.coords)


def cmp_cut(a: Cut, b: Cut) -> int:
    """
    Compares cuts by inclusion of left sets.

    Returns:
        ordering (int): -1, 0 or 1.

    Raises:
        RankMismatchError: When ranks differ.
    """
    _same_rank(a, b)
    return (a > b) - (a < b)


def add_cut(a: Cut, b: Cut) -> Cut:
    """
    Left sum: (A + B)^L = A^L + B^L, with ∞ absorbing.

    Raises:
        RankMismatchError: When ranks differ.
    """
    rank = _same_rank(a, b)
    kinds = {a.kind, b.kind}
    if INFTY in kinds:
        return Cut.infty(rank)
    if BOTTOM in kinds:
        return Cut.bottom(rank)
    if TOP in kinds:
        return Cut.top(rank)
    m = min(len(a.prefix), len(b.prefix))
    return Cut(PREFIX, rank, (p + q for p, q in zip(a.prefix, b.prefix[:m])))


def scale_cut(n: int, a: Cut) -> Cut:
    """
    n-fold left sum of `a` with itself.

    Raises:
        ValueError: If n < 1.
    """
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ValueError(f"scale factor must be a positive integer, got {n}")
    if a.kind != PREFIX:
        return a
    return Cut(PREFIX, a.rank, (n * p for p in a.prefix))


def sub_group(a: Cut, alpha: GroupLike) -> Cut:
    """
    Translation A - α. Only the first k coordinates of α act on a prefix
    of length k.
    """
    alpha = as_group(alpha)
    _same_rank(a, alpha)
    if a.kind != PREFIX:
        return a
    return Cut(
        PREFIX, a.rank, (p - q for p, q in zip(a.prefix, alpha.coords))
    )


def isolated_plus(h: IsolatedSubgroup) -> Cut:
    """
    H⁺, the smallest cut whose left set contains H.
    """
    if h.index == h.rank:
        return Cut.top(h.rank)
    return Cut(PREFIX, h.rank, (0,) * (h.rank - h.index))


def is_cancellative(a: Cut) -> bool:
    """
    True iff `a` lies in the image of embed.
    """
    return a.kind == PREFIX and len(a.prefix) == a.rank


def cancellation_witness(a: Cut) -> Optional[Tuple[Cut, Cut]]:
    """
    Returns a pair b != c with a + b == a + c, or None if `a` is
    cancellative.
    """
    if is_cancellative(a):
        return None
    zero = GroupElem.zero(a.rank)
    return embed(zero), embed(zero - GroupElem.epsilon(a.rank))


def cut_min(*cuts: Cut) -> Cut:
    return min(cuts)


def cut_max(*cuts: Cut) -> Cut:
    return max(cuts)


def right_sum(a: Cut, b: Cut) -> Cut:
    """
    The cut whose right set is A^R + B^R. This is the value set of the
    product of two O_v-submodules of F.

    Raises:
        ValueError: For the adjoined ∞.
    """
    rank = _same_rank(a, b)
    kinds = {a.kind, b.kind}
    if INFTY in kinds:
        raise ValueError("right_sum is not defined for infty")
    if TOP in kinds:
        return Cut.top(rank)
    if BOTTOM in kinds:
        return Cut.bottom(rank)
    if len(a.prefix) != len(b.prefix):
        return add_cut(a, b)
    summed = tuple(p + q for p, q in zip(a.prefix, b.prefix))
    return Cut(PREFIX, rank, summed[:-1] + (summed[-1] + 1,))


def residual(b: Cut, c: Cut, strict: bool = False) -> Cut:
    """
    The cut whose left set is {α : b + α <= c}, or {α : b + α < c} when
    `strict` is set.

    Raises:
        ValueError: For the adjoined ∞.
    """
    rank = _same_rank(b, c)
    if INFTY in (b.kind, c.kind):
        raise ValueError("residual is not defined for infty")
    if b.kind == BOTTOM:
        if strict and c.kind == BOTTOM:
            return Cut.bottom(rank)
        return Cut.top(rank)
    if b.kind == TOP:
        if c.kind == TOP and not strict:
            return Cut.top(rank)
        return Cut.bottom(rank)
    if c.kind == BOTTOM:
        return Cut.bottom(rank)
    if c.kind == TOP:
        return Cut.top(rank)
    k, l = len(b.prefix), len(c.prefix)
    m = min(k, l)
    d = tuple(q - p for p, q in zip(b.prefix[:m], c.prefix[:m]))
    if (k > l) if strict else (k >= l):
        return Cut(PREFIX, rank, d)
    return Cut.strict(d, rank)
