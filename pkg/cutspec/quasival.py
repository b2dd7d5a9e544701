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
import logging
from dataclasses import dataclass

from .algebra import AlgebraBase, PatternAlgebra
from .exceptions import (
    HypothesisError,
    InstanceSpecError,
    MembershipError,
    NotFinitelyGeneratedError,
)
from .field_model import ModelElem, element_in, ov, valuation
from .ordered_values import (
    INFINITY,
    Cut,
    GroupElem,
    add_cut,
    as_group,
    embed,
    is_cancellative,
    sub_group,
)
from .random import (
    random_nonnegative,
    rng,
    sample_elements,
    sample_pairs,
    sample_scalars,
)
from .typing import Any, Callable, Dict, Element, List, Optional, Report

logger = logging.getLogger(__name__)

CUT_MONOID = "cut_monoid"
GAMMA = "gamma"


class QuasiValuation:
    """
    A quasi-valuation on an algebra. Values are cuts: Γ-valued
    quasi-valuations return embedded group elements, tagged "gamma".

    Args:
        evaluate (callable): Element -> Cut, infty for zero.
        algebra (AlgebraBase): The algebra the evaluator is defined on.
        value_monoid_tag (str): "cut_monoid" or "gamma".
        provenance (str): "filter", "min_formula", "entry_min" or
            "natural_extension".
        base (QuasiValuation): The extended quasi-valuation, if any.
        basis (GeneratingSet): The generating set of a min-formula
            quasi-valuation.
    """

    def __init__(
        self,
        evaluate: Callable[[Any], Cut],
        algebra: AlgebraBase,
        value_monoid_tag: str,
        provenance: str,
        base: Optional["QuasiValuation"] = None,
        basis: Optional["GeneratingSet"] = None,
    ) -> None:
        if value_monoid_tag not in (CUT_MONOID, GAMMA):
            raise ValueError(f"Unknown value monoid tag '{value_monoid_tag}'")
        self.evaluate = evaluate
        self.algebra = algebra
        self.value_monoid_tag = value_monoid_tag
        self.provenance = provenance
        self.base = base
        self.basis = basis

    def __call__(self, x) -> Cut:
        return self.evaluate(x)

    def __repr__(self):
        return f"QuasiValuation({self.provenance}, {self.algebra!r})"


@dataclass(frozen=True)
class ExtendedElem:
    """
    r ⊗ 1/b with b = t^denominator, an element of R ⊗ F.
    """

    numerator: Element
    denominator: GroupElem

    def __post_init__(self):
        denominator = as_group(self.denominator)
        if denominator < GroupElem.zero(denominator.rank):
            raise ValueError(
                f"denominator must be nonnegative, got {denominator}"
            )
        object.__setattr__(self, "denominator", denominator)
        object.__setattr__(self, "numerator", tuple(self.numerator))

    def ambient(self) -> Element:
        """The coordinates of r/b in the ambient F-space."""
        return tuple(c.shift(-self.denominator) for c in self.numerator)

    def same_as(self, other: "ExtendedElem", R: AlgebraBase) -> bool:
        """r ⊗ 1/b = r' ⊗ 1/b' iff b'·r = b·r'."""
        left = R.scale(ModelElem.monomial(other.denominator), self.numerator)
        right = R.scale(ModelElem.monomial(self.denominator), other.numerator)
        return R.equal(left, right)

    def to_json(self, R: AlgebraBase) -> Dict[str, Any]:
        return {
            "numerator": R.element_to_json(self.numerator),
            "denominator": list(self.denominator.coords),
        }

    @classmethod
    def from_json(cls, obj: Dict[str, Any], R: AlgebraBase) -> "ExtendedElem":
        if not isinstance(obj, dict) or set(obj) != {
            "numerator",
            "denominator",
        }:
            raise InstanceSpecError(
                "extended element needs 'numerator' and 'denominator'"
            )
        try:
            numerator = R.element_from_json(obj["numerator"])
            return cls(numerator, obj["denominator"])
        except (TypeError, ValueError) as err:
            raise InstanceSpecError(f"extended element: {err}") from err


# ---------------------------------------------------------------------
# QUASI-VALUATIONS
# ---------------------------------------------------------------------
def filter_quasi_valuation(R: AlgebraBase) -> QuasiValuation:
    """The filter quasi-valuation induced by (R, v)."""
    return QuasiValuation(R.filter_qv, R, CUT_MONOID, "filter")


def entry_min_qv(R: AlgebraBase) -> QuasiValuation:
    """
    w(x) = min_ij v(x_ij) on a pattern algebra.

    Raises:
        HypothesisError: For monomial algebras, which have no entries.
    """
    if not isinstance(R, PatternAlgebra):
        raise HypothesisError(f"entry minimum needs a pattern algebra: {R}")

    def evaluate(x):
        R.check_member(x)
        least = min((valuation(c) for c in x), default=INFINITY)
        if least is INFINITY:
            return Cut.infty(R.rank)
        return embed(least)

    return QuasiValuation(evaluate, R, GAMMA, "entry_min")


class GeneratingSet:
    """
    Minimal generating set {1, c_i·u_i} of a finitely generated
    torsion-free algebra, where u_i runs over the coordinates R reaches
    and c_i is a monomial scalar of minimal value.

    The generator of the anchor coordinate is exchanged for 1_R, so
    an element x has coordinates
        α_anchor = x_anchor
        α_i = (x_i - α_anchor·1_i) / c_i
    which are all in O_v exactly when x ∈ R.

    Args:
        algebra (AlgebraBase): The algebra.
        scalars (dict): Coordinate index -> monomial scalar c_i.
        anchor (int): Coordinate whose generator is exchanged for 1_R.
        trace (list): Exchange steps, human readable.
    """

    def __init__(
        self,
        algebra: AlgebraBase,
        scalars: Dict[int, ModelElem],
        anchor: int,
        trace: List[str],
    ) -> None:
        self.algebra = algebra
        self.scalars = dict(scalars)
        self.anchor = anchor
        self.trace = list(trace)
        self.unit = algebra.one()
        self.indices = [idx for idx in sorted(self.scalars) if idx != anchor]

    def __len__(self):
        return 1 + len(self.indices)

    @property
    def labels(self) -> List[str]:
        names = self.algebra.labels()
        return ["1"] + [names[idx] for idx in self.indices]

    @property
    def generators(self) -> List[Element]:
        R = self.algebra
        elements = [self.unit]
        for idx in self.indices:
            coords = list(R.zero())
            coords[idx] = self.scalars[idx]
            elements.append(tuple(coords))
        return elements

    def coordinates(self, x: Element) -> List[ModelElem]:
        """
        Coordinates of x in the generating set.

        Raises:
            MembershipError: When x is not in the O_v-span.
        """
        R = self.algebra
        x = R.reduce(x)
        if len(x) != R.size:
            raise MembershipError(f"{x} has {len(x)} coordinates")
        for idx, c in enumerate(x):
            if c and idx not in self.scalars:
                raise MembershipError(
                    f"coordinate {R.labels()[idx]} is not reached by R"
                )
        Ov = ov(R.rank)
        head = x[self.anchor]
        coords = [head]
        for idx in self.indices:
            rest = x[idx] - head * self.unit[idx]
            coords.append(rest.divide_monomial(self.scalars[idx]))
        for label, alpha in zip(self.labels, coords):
            if not element_in(alpha, Ov):
                raise MembershipError(
                    f"coordinate {label} of {x} is not in O_v: {alpha}"
                )
        return coords

    def combine(self, coords: List[ModelElem]) -> Element:
        """Σ α_i g_i."""
        R = self.algebra
        total = R.zero()
        for alpha, generator in zip(coords, self.generators):
            total = R.add(total, R.scale(alpha, generator))
        return total

    def to_json(self) -> Dict[str, Any]:
        R = self.algebra
        return {
            "labels": self.labels,
            "generators": [R.element_to_json(g) for g in self.generators],
            "trace": self.trace,
        }


def _support_index(x: Element) -> Optional[int]:
    nonzero = [idx for idx, c in enumerate(x) if c]
    return nonzero[0] if len(nonzero) == 1 else None


def minimal_generators(
    R: AlgebraBase, generators: Optional[List[Any]] = None
) -> GeneratingSet:
    """
    Minimal generating set of R containing 1_R.

    Args:
        R (AlgebraBase): A unital, torsion-free, finitely generated
            algebra.
        generators (list): Optional generator list in element JSON, each
            a monomial in a single coordinate. Defaults to the
            instance's "generators" key, then to the coordinate
            generators of minimal value.

    Returns:
        basis (GeneratingSet)

    Raises:
        HypothesisError: On a non-unital or torsion algebra, or an
            unusable generator list.
        NotFinitelyGeneratedError: When a component is not principal.
    """
    one = R.require_unital("minimal generators")
    if not R.torsion_free:
        raise HypothesisError(f"minimal generators need torsion-free R: {R}")
    if not R.finitely_generated:
        raise NotFinitelyGeneratedError(
            f"{R} has a component that is not a principal module"
        )
    if generators is None:
        generators = R.generators
    labels = R.labels()
    minimal = {}
    for _, element in R.coordinate_elements():
        idx = _support_index(element)
        minimal[idx] = element[idx]

    trace = []
    if generators is None:
        scalars = dict(minimal)
    else:
        scalars = {}
        for position, obj in enumerate(generators):
            g = R.element_from_json(obj)
            R.check_member(g)
            idx = _support_index(g)
            if idx is None or not g[idx].is_monomial():
                raise HypothesisError(
                    f"generator {position} is not a monomial in one coordinate"
                )
            current = scalars.get(idx)
            if current is None or valuation(g[idx]) < valuation(current):
                if current is not None:
                    trace.append(f"drop {current} at {labels[idx]}")
                scalars[idx] = g[idx]
            else:
                trace.append(f"drop {g[idx]} at {labels[idx]}")
        for idx, least in minimal.items():
            if idx not in scalars or valuation(scalars[idx]) != valuation(
                least
            ):
                raise HypothesisError(
                    f"generators do not span R at coordinate {labels[idx]}"
                )
    anchor = next(idx for idx, c in enumerate(one) if c)
    trace.append(f"{scalars[anchor]}*{labels[anchor]} -> 1")
    basis = GeneratingSet(R, scalars, anchor, trace)
    logger.debug("minimal generators of %r: %s", R, basis.labels)
    return basis


def min_formula_qv(
    R: AlgebraBase, B: Optional[GeneratingSet] = None
) -> QuasiValuation:
    """
    w(Σ α_i g_i) = min_i v(α_i) over a minimal generating set with 1.

    Args:
        R (AlgebraBase): A finitely generated torsion-free algebra.
        B (GeneratingSet): Defaults to minimal_generators(R).

    Returns:
        qv (QuasiValuation): Γ-valued, extends v, w(1) = 0.
    """
    basis = minimal_generators(R) if B is None else B

    def evaluate(x):
        R.check_member(x)
        least = min(
            (valuation(alpha) for alpha in basis.coordinates(x)),
            default=INFINITY,
        )
        if least is INFINITY:
            return Cut.infty(R.rank)
        return embed(least)

    return QuasiValuation(evaluate, R, GAMMA, "min_formula", basis=basis)


def natural_extension(
    w: QuasiValuation, R: AlgebraBase, samples: int = 200, seed: int = 0
) -> QuasiValuation:
    """
    W(r ⊗ 1/b) = w(r) - v(b) on R ⊗ F.

    Args:
        w (QuasiValuation): A v-quasi-valuation on R.
        R (AlgebraBase): A torsion-free algebra.
        samples (int): Sample budget of the homogeneity gate.
        seed (int): Sampling seed.

    Returns:
        W (QuasiValuation): Evaluates ExtendedElem.

    Raises:
        HypothesisError: When R has torsion, w is not homogeneous or,
            for unital R, w(1) != 0.
    """
    if not R.torsion_free:
        raise HypothesisError(f"natural extension needs torsion-free R: {R}")
    report = check_v_qv(w, R, samples, seed)
    if not report["passed"]:
        raise HypothesisError(
            f"{w} is not a v-quasi-valuation: {report['homogeneity']}"
        )
    if report["w_one_zero"] is False:
        raise HypothesisError(f"{w} does not satisfy w(1) = 0")

    def evaluate(x: ExtendedElem):
        return sub_group(w(x.numerator), x.denominator)

    logger.debug("natural extension of %r", w)
    return QuasiValuation(
        evaluate, R, w.value_monoid_tag, "natural_extension", base=w
    )


def ow_member(W: QuasiValuation, x: ExtendedElem) -> bool:
    """x ∈ O_W, that is W(x) >= 0."""
    return W(x) >= embed(GroupElem.zero(W.algebra.rank))


def in_tensor_one(R: AlgebraBase, x: ExtendedElem) -> bool:
    """x ∈ R ⊗ 1, that is r/b ∈ R."""
    return R.contains(x.ambient())


def coordinate_divisibility(B: GeneratingSet, x: ExtendedElem) -> bool:
    """Every coordinate of the numerator in B is divisible by b."""
    return all(
        not valuation(alpha) < x.denominator
        for alpha in B.coordinates(x.numerator)
    )


# ---------------------------------------------------------------------
# CHECKS
# ---------------------------------------------------------------------
def _values_json(*values: Cut) -> List[Any]:
    return [value.to_json() for value in values]


def check_axioms(
    w: QuasiValuation, R: AlgebraBase, samples: int, seed: int
) -> Report:
    """
    Checks w(0) = ∞, w(xy) >= w(x) + w(y) and w(x + y) >= min(w(x), w(y))
    on sampled pairs, and that the cut (∅, Γ) is never a value.

    Returns:
        report (dict): {"passed", "checked", "axioms", "witness"}, each
            axiom as {"passed", "witness"}.
    """
    infty = Cut.infty(R.rank)
    bottom = Cut.bottom(R.rank)
    found: Dict[str, Any] = dict.fromkeys(("B1", "B2", "B3", "bottom"))
    if w(R.zero()) != infty:
        found["B1"] = {"value": w(R.zero()).to_json()}
    for x, y in sample_pairs(R, samples, seed):
        wx, wy = w(x), w(y)
        if found["B2"] is None:
            wxy = w(R.mul(x, y))
            if wxy < add_cut(wx, wy):
                found["B2"] = {
                    "x": R.element_to_json(x),
                    "y": R.element_to_json(y),
                    "values": _values_json(wx, wy, wxy),
                }
        if found["B3"] is None:
            wsum = w(R.add(x, y))
            if wsum < min(wx, wy):
                found["B3"] = {
                    "x": R.element_to_json(x),
                    "y": R.element_to_json(y),
                    "values": _values_json(wx, wy, wsum),
                }
        if found["bottom"] is None and bottom in (wx, wy):
            culprit = x if wx == bottom else y
            found["bottom"] = {"x": R.element_to_json(culprit)}
    axioms = {
        name: {"passed": witness is None, "witness": witness}
        for name, witness in found.items()
    }
    failed = [name for name, witness in found.items() if witness is not None]
    logger.debug("axioms of %r on %d pairs: failed %s", w, samples, failed)
    return {
        "passed": not failed,
        "checked": samples,
        "axioms": axioms,
        "witness": None if not failed else {failed[0]: found[failed[0]]},
    }


def check_v_qv(
    w: QuasiValuation, R: AlgebraBase, samples: int, seed: int
) -> Report:
    """
    Homogeneity w(c·x) = v(c) + w(x) on sampled scalars and elements.
    Also reports whether w extends v (w(c·1) = v(c)) and w(1) = 0; both
    are None for a non-unital algebra.

    Returns:
        report (dict): {"passed", "checked", "homogeneity", "extends_v",
            "w_one_zero"}.
    """
    scalars = sample_scalars(R.rank, samples, seed)
    elements = sample_elements(R, samples, seed + 1)
    witness = None
    for c, x in zip(scalars, elements):
        lhs = w(R.scale(c, x))
        rhs = add_cut(embed(valuation(c)), w(x))
        if lhs != rhs:
            witness = {
                "scalar": c.to_json(),
                "x": R.element_to_json(x),
                "values": _values_json(lhs, rhs),
            }
            break
    extends_v, w_one_zero = None, None
    one = R.one()
    if one is not None:
        w_one_zero = w(one) == embed(GroupElem.zero(R.rank))
        extends_v = {"passed": True, "witness": None}
        for c in scalars:
            value = w(R.scale(c, one))
            if value != embed(valuation(c)):
                extends_v = {
                    "passed": False,
                    "witness": {
                        "scalar": c.to_json(),
                        "value": value.to_json(),
                    },
                }
                break
    return {
        "passed": witness is None,
        "checked": len(scalars),
        "homogeneity": {"passed": witness is None, "witness": witness},
        "extends_v": extends_v,
        "w_one_zero": w_one_zero,
    }


def check_stability(
    w: QuasiValuation,
    R: AlgebraBase,
    c: Element,
    samples: int,
    seed: int = 0,
    side: str = "left",
) -> bool:
    """
    True iff w(c·r) = w(c) + w(r) (left) or w(r·c) = w(r) + w(c)
    (right) on every sampled r.
    """
    if side not in ("left", "right"):
        raise ValueError(f"side must be 'left' or 'right', got {side}")
    wc = w(c)
    for r in sample_elements(R, samples, seed) + [
        element for _, element in R.coordinate_elements()
    ]:
        product = R.mul(c, r) if side == "left" else R.mul(r, c)
        if w(product) != add_cut(wc, w(r)):
            return False
    return True


def check_inverse_stability(
    w: QuasiValuation,
    R: AlgebraBase,
    x: Element,
    y: Element,
    samples: int,
    seed: int = 0,
) -> Report:
    """
    For x with right inverse y and w(1) = 0: x left stable implies
    w(y) = -w(x), which implies x right stable.

    Raises:
        HypothesisError: When x·y != 1 or w(1) != 0.
    """
    one = R.require_unital("inverse stability")
    if not R.equal(R.mul(x, y), one):
        raise HypothesisError("y is not a right inverse of x")
    if w(one) != embed(GroupElem.zero(R.rank)):
        raise HypothesisError(f"{w} does not satisfy w(1) = 0")
    left = check_stability(w, R, x, samples, seed, "left")
    wx = w(x)
    inverse = is_cancellative(wx) and w(y) == embed(
        -GroupElem(wx.prefix)
    )
    right = check_stability(w, R, x, samples, seed, "right")
    return {
        "passed": (not left or inverse) and (not inverse or right),
        "left_stable": left,
        "inverse_value": inverse,
        "right_stable": right,
    }


def check_lemma_outside_prime(
    R: AlgebraBase, w: QuasiValuation, Q, samples: int, seed: int
) -> Report:
    """
    For a prime Q over P = P_H: w(b) <= H⁺ for every sampled b ∉ Q.
    The boundary of P is H⁺.
    """
    bound = R.contraction_of(Q).boundary
    checked = 0
    for b in sample_elements(R, samples, seed) + [
        element for _, element in R.coordinate_elements()
    ]:
        if R.ideal_member(b, Q):
            continue
        checked += 1
        value = w(b)
        if value > bound:
            return {
                "passed": False,
                "checked": checked,
                "witness": {
                    "b": R.element_to_json(b),
                    "value": value.to_json(),
                    "bound": bound.to_json(),
                },
            }
    return {"passed": True, "checked": checked, "witness": None}


def image_scan(
    w: QuasiValuation, R: AlgebraBase, samples: int, seed: int
) -> Report:
    """
    Scans the values of w on sampled nonzero elements and the
    coordinate elements.

    Returns:
        report (dict): {"cancellative", "nonzero_infty", "values",
            "witness", "checked"}; "values" holds up to 12 attained
            values.
    """
    elements = [element for _, element in R.coordinate_elements()]
    elements += sample_elements(R, samples, seed)
    attained = []
    witness = None
    nonzero_infty = False
    checked = 0
    for x in elements:
        if R.is_zero(x):
            continue
        checked += 1
        value = w(x)
        if not value.is_finite:
            nonzero_infty = True
            witness = witness or {"x": R.element_to_json(x), "value": "infty"}
        elif not is_cancellative(value) and witness is None:
            witness = {"x": R.element_to_json(x), "value": value.to_json()}
        if value not in attained and len(attained) < 12:
            attained.append(value)
    return {
        "cancellative": witness is None,
        "nonzero_infty": nonzero_infty,
        "values": [value.to_json() for value in sorted(attained)],
        "witness": witness,
        "checked": checked,
    }


def _sample_extended(R: AlgebraBase, samples: int, seed: int):
    gen = rng(seed)
    extended = []
    for idx, r in enumerate(sample_elements(R, samples, seed + 1)):
        b = random_nonnegative(R.rank, gen, 3)
        if idx % 2:
            r = R.scale(ModelElem.monomial(b), r)
        extended.append(ExtendedElem(r, b))
    return extended


def check_ow_equals_r(
    R: AlgebraBase,
    B: Optional[GeneratingSet],
    samples: int,
    seed: int,
) -> Report:
    """
    For the min-formula quasi-valuation w over B and its natural
    extension W: w(x) >= 0 on R, and on sampled r ⊗ 1/b the tests
    "W >= 0", "r/b ∈ R" and "every coordinate divisible by b" agree.
    Half the samples have r divisible by b.
    """
    w = min_formula_qv(R, B)
    basis = w.basis
    W = natural_extension(w, R, min(samples, 200), seed)
    zero = embed(GroupElem.zero(R.rank))
    for r in sample_elements(R, samples, seed):
        if w(r) < zero:
            return {
                "passed": False,
                "checked": samples,
                "witness": {"r": R.element_to_json(r)},
            }
    for x in _sample_extended(R, samples, seed):
        verdicts = (
            ow_member(W, x),
            in_tensor_one(R, x),
            coordinate_divisibility(basis, x),
        )
        if len(set(verdicts)) != 1:
            return {
                "passed": False,
                "checked": samples,
                "witness": {"x": x.to_json(R), "verdicts": list(verdicts)},
            }
    return {"passed": True, "checked": samples, "witness": None}


def check_extension(
    W: QuasiValuation, R: AlgebraBase, samples: int, seed: int
) -> Report:
    """
    W is well defined (r ⊗ 1/b and t^δ·r ⊗ 1/(b·t^δ) agree) and extends
    w (W(r ⊗ 1) = w(r)) on sampled elements.
    """
    w = W.base
    gen = rng(seed)
    zero = GroupElem.zero(R.rank)
    for x in _sample_extended(R, samples, seed):
        delta = random_nonnegative(R.rank, gen, 3)
        y = ExtendedElem(
            R.scale(ModelElem.monomial(delta), x.numerator),
            x.denominator + delta,
        )
        if not x.same_as(y, R) or W(x) != W(y):
            return {
                "passed": False,
                "checked": samples,
                "witness": {"x": x.to_json(R), "y": y.to_json(R)},
            }
        if W(ExtendedElem(x.numerator, zero)) != w(x.numerator):
            return {
                "passed": False,
                "checked": samples,
                "witness": {"x": x.to_json(R)},
            }
    return {"passed": True, "checked": samples, "witness": None}


def ow_witnesses(
    R: AlgebraBase, W: QuasiValuation, samples: int, seed: int
) -> Report:
    """
    Searches witnesses comparing O_W with R ⊗ 1.

        outside_r: x ∈ O_W with x ∉ R ⊗ 1, searched as t^m·u ⊗ 1/t^m
            for each coordinate generator t^m·u with m > 0.
        outside_ow: r ∈ R with W(r ⊗ 1) < 0, among the coordinate
            generators.
        contained: every sampled r ∈ R has r ⊗ 1 ∈ O_W.
        strict: contained and outside_r found, so R ⊗ 1 ⊂ O_W.
    """
    zero = GroupElem.zero(R.rank)
    generators = [element for _, element in R.coordinate_elements()]
    outside_r = None
    outside_ow = None
    for element in generators:
        idx = _support_index(element)
        m = valuation(element[idx])
        if outside_r is None and zero < m:
            x = ExtendedElem(element, m)
            if ow_member(W, x) and not in_tensor_one(R, x):
                outside_r = x.to_json(R)
        if outside_ow is not None:
            continue
        if not ow_member(W, ExtendedElem(element, zero)):
            outside_ow = R.element_to_json(element)
    contained = {"passed": True, "witness": None}
    for r in generators + sample_elements(R, samples, seed):
        if not ow_member(W, ExtendedElem(r, zero)):
            contained = {"passed": False, "witness": R.element_to_json(r)}
            break
    return {
        "outside_r": outside_r,
        "outside_ow": outside_ow,
        "contained": contained,
        "strict": contained["passed"] and outside_r is not None,
    }
