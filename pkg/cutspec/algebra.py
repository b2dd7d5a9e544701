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
import abc
import copy
import itertools
import logging
import random as _random

from .exceptions import (
    HypothesisError,
    InstanceSpecError,
    InvalidAlgebraError,
    MembershipError,
)
from .field_model import (
    IdealCut,
    ModelElem,
    base_chain,
    element_in,
    ideal_contains,
    ideal_from_json,
    ideal_join,
    ideal_meet,
    ideal_member,
    ideal_product,
    ideal_shift,
    iv,
    ov,
    product_contained,
    valuation,
    zero_ideal,
)
from .ordered_values import (
    INFINITY,
    Cut,
    GroupElem,
    add_cut,
    as_group,
    cut_max,
    cut_min,
    embed,
    is_cancellative,
    residual,
    sub_group,
    validate_rank,
)
from .random import (
    minimal_value,
    random_model_elem,
    random_nonnegative,
    random_value_above,
    sample_scalars,
)
from .typing import (
    Any,
    Dict,
    Element,
    Ideal,
    InstanceSpec,
    List,
    Optional,
    Report,
    Tuple,
)
from .utils import canonical_json, rows, validate_grid, validate_keys

logger = logging.getLogger(__name__)


# ---------------------------------------------------------------------
# ALGEBRA ABC
# ---------------------------------------------------------------------
class AlgebraBase(abc.ABC):
    """
    Algebra ABC

    An O_v-algebra R given by a finite description. Elements are flat
    tuples of ModelElem, one coordinate per component (row-major for
    pattern algebras) or per basis element (monomial algebras). Ideals
    are flat tuples of IdealCut in the same layout.

    Required and optional instance keys are described in the class
    attributes with the same name.
    """

    kind: str = ""
    required: Dict[str, Any] = {}
    optional: Dict[str, Any] = {
        "name": {"type": str, "default": None},
        "notes": {"type": str, "default": ""},
        "unital": {"type": bool, "default": True},
        "generators": {"type": list, "default": None},
        "qv": {
            "type": str,
            "default": "filter",
            "choices": ["filter", "min_formula"],
        },
        "sampling": {"type": dict, "default": {}},
        "expect": {"type": dict, "default": {}},
    }

    def __init__(self, instance_spec: InstanceSpec) -> None:
        self.instance_spec = copy.deepcopy(instance_spec)
        self.validate_instance_spec_keys()
        self.initialize_algebra()

    def __repr__(self):
        label = self.name or self.kind
        return f"{type(self).__name__}({label}, rank={self.rank})"

    def __eq__(self, other):
        if not isinstance(other, AlgebraBase):
            return NotImplemented
        return canonical_json(self.structure()) == canonical_json(
            other.structure()
        )

    __hash__ = None  # type: ignore

    def validate_instance_spec_keys(self) -> None:
        """
        Validates the keys of `instance_spec` against `required` and
        `optional`, then sets them as attributes.
        """
        required = {"kind": str, "rank": int, **self.required}
        validate_keys(self.instance_spec, required, self.optional)
        try:
            self.rank = validate_rank(self.instance_spec["rank"])
        except (TypeError, ValueError) as err:
            raise InstanceSpecError(f"instance.rank: {err}") from err
        for key in self.required:
            setattr(self, key, copy.deepcopy(self.instance_spec[key]))
        for key, opt in self.optional.items():
            setattr(
                self,
                key,
                copy.deepcopy(self.instance_spec.get(key, opt["default"])),
            )
        sampling_optional = {
            "count": {"type": int, "default": None},
            "seed": {"type": int, "default": None},
        }
        validate_keys(
            self.sampling, {}, sampling_optional, "instance.sampling"
        )

    def parse_ideal(self, obj: Any, path: str) -> IdealCut:
        """
        Parses one component cut, naming `path` on failure.
        """
        try:
            ideal = ideal_from_json(obj, self.rank)
        except (KeyError, TypeError, ValueError) as err:
            raise InstanceSpecError(f"{path}: {err}") from err
        return ideal

    @abc.abstractmethod
    def initialize_algebra(self):
        """
        Required method: parses the kind specific keys.
        """

    @abc.abstractmethod
    def structure(self) -> InstanceSpec:
        """
        Required method: the normalised instance specification of the
        algebra, without the descriptive keys.
        """

    def to_spec(self) -> InstanceSpec:
        spec = self.structure()
        for key, opt in self.optional.items():
            value = getattr(self, key)
            if key != "unital" and value != opt["default"]:
                spec[key] = copy.deepcopy(value)
        return spec

    # -----------------------------------------------------------------
    # Elements
    # -----------------------------------------------------------------
    @property
    @abc.abstractmethod
    def size(self) -> int:
        """Number of coordinates of an element."""

    def labels(self) -> List[str]:
        return [str(idx) for idx in range(self.size)]

    def zero(self) -> Element:
        return (ModelElem.zero(self.rank),) * self.size

    @abc.abstractmethod
    def one(self) -> Optional[Element]:
        """The identity, or None for a non-unital algebra."""

    def monomial_at(self, index: int, exponent=None) -> Element:
        """The element t^exponent at coordinate `index`, zero elsewhere."""
        exponent = (
            GroupElem.zero(self.rank) if exponent is None else exponent
        )
        coords = list(self.zero())
        coords[index] = ModelElem.monomial(as_group(exponent))
        return self.reduce(tuple(coords))

    def reduce(self, x: Element) -> Element:
        return tuple(x)

    def add(self, x: Element, y: Element) -> Element:
        return self.reduce(tuple(a + b for a, b in zip(x, y)))

    def sub(self, x: Element, y: Element) -> Element:
        return self.reduce(tuple(a - b for a, b in zip(x, y)))

    def scale(self, c: ModelElem, x: Element) -> Element:
        """The module action c·x."""
        return self.reduce(tuple(c * a for a in x))

    @abc.abstractmethod
    def mul(self, x: Element, y: Element) -> Element:
        """Product in the algebra."""

    def is_zero(self, x: Element) -> bool:
        return not any(self.reduce(x))

    def equal(self, x: Element, y: Element) -> bool:
        return self.is_zero(self.sub(x, y))

    @abc.abstractmethod
    def contains(self, x: Element) -> bool:
        """Membership of an element of the ambient F-space in R."""

    def check_member(self, x: Element) -> None:
        """
        Raises:
            MembershipError: When `x` is not an element of the algebra.
        """
        if len(x) != self.size or not self.contains(x):
            raise MembershipError(f"{x} is not an element of {self}")

    @abc.abstractmethod
    def random_element(self, gen: _random.Random) -> Element:
        """A pseudo-random element of R."""

    @abc.abstractmethod
    def coordinate_elements(self) -> List[Tuple[str, Element]]:
        """
        One nonzero element of minimal value per coordinate that R
        reaches, labelled.
        """

    def element_to_json(self, x: Element) -> Any:
        return [c.to_json() for c in x]

    def element_from_json(self, obj: Any) -> Element:
        """
        Parses an element: a list of term lists, one per coordinate, or
        a dict from coordinate labels to term lists.

        Raises:
            InstanceSpecError: On a malformed element.
        """
        if isinstance(obj, dict):
            labels = self.labels()
            unknown = [key for key in obj if key not in labels]
            if unknown:
                raise InstanceSpecError(
                    f"element: unknown coordinates {unknown}"
                )
            obj = [obj.get(label, []) for label in labels]
        if not isinstance(obj, list) or len(obj) != self.size:
            raise InstanceSpecError(
                f"element: expected {self.size} coordinates, got {obj}"
            )
        coords = []
        for idx, terms in enumerate(obj):
            try:
                coords.append(ModelElem.from_json(terms, self.rank))
            except (TypeError, ValueError, ZeroDivisionError) as err:
                raise InstanceSpecError(f"element[{idx}]: {err}") from err
        return self.reduce(tuple(coords))

    # -----------------------------------------------------------------
    # Quasi-valuation
    # -----------------------------------------------------------------
    @abc.abstractmethod
    def support(self, x: Element) -> Cut:
        """
        The cut of values of the O_v-support S_x, with the negative
        values adjoined.
        """

    def filter_qv(self, x: Element) -> Cut:
        """
        The filter quasi-valuation w(x): infty for x = 0, otherwise the
        support cut.

        Raises:
            MembershipError: When x is not in R.
        """
        self.check_member(x)
        x = self.reduce(x)
        if not any(x):
            return Cut.infty(self.rank)
        return self.support(x)

    # -----------------------------------------------------------------
    # Structure
    # -----------------------------------------------------------------
    @property
    @abc.abstractmethod
    def dim(self) -> int:
        """dim_F(R ⊗ F)."""

    @property
    @abc.abstractmethod
    def torsion_free(self) -> bool:
        """True when no nonzero element is killed by a nonzero scalar."""

    @property
    @abc.abstractmethod
    def faithful(self) -> bool:
        """True when a·1_R = 0 forces a = 0."""

    @property
    @abc.abstractmethod
    def finitely_generated(self) -> bool:
        """True when R is a finitely generated O_v-module."""

    @abc.abstractmethod
    def invariant_witness(self) -> Optional[Tuple[str, Tuple]]:
        """
        Required method: the first violated algebra invariant as
        (message, witness), or None.
        """

    def validate(self) -> Report:
        """
        Confirms the algebra invariants.

        Returns:
            report (dict): dim, torsion-freeness, faithfulness, unitality
                and finite generation.

        Raises:
            InvalidAlgebraError: With the witness of the first violated
                invariant.
        """
        violation = self.invariant_witness()
        if violation is not None:
            message, witness = violation
            raise InvalidAlgebraError(message, witness)
        report = {
            "valid": True,
            "kind": self.kind,
            "rank": self.rank,
            "dim": self.dim,
            "torsion_free": self.torsion_free,
            "faithful": self.faithful,
            "unital": self.unital,
            "finitely_generated": self.finitely_generated,
        }
        logger.debug("validated %r: %s", self, report)
        return report

    # -----------------------------------------------------------------
    # Scalars and conditions
    # -----------------------------------------------------------------
    def require_unital(self, what: str) -> Element:
        """
        Raises:
            HypothesisError: On a non-unital algebra.
        """
        one = self.one()
        if one is None:
            raise HypothesisError(
                f"{what} needs a unital algebra, {self} is not"
            )
        return one

    @abc.abstractmethod
    def condition_b_witness(self) -> Optional[Any]:
        """
        None when (R^× ∩ O_v) ⊆ O_v^× holds, a witness otherwise.
        """

    @abc.abstractmethod
    def condition_a(self) -> bool:
        """R ∩ F = O_v."""

    @abc.abstractmethod
    def units_condition(self) -> bool:
        """No a·1_R with v(a) > 0 is a unit of R."""

    # -----------------------------------------------------------------
    # Ideals
    # -----------------------------------------------------------------
    @abc.abstractmethod
    def whole_ideal(self) -> Ideal:
        """R itself as an ideal."""

    def zero_ideal(self) -> Ideal:
        return (zero_ideal(self.rank),) * self.size

    @abc.abstractmethod
    def ideal_witness(self, K: Ideal) -> Optional[Tuple]:
        """
        None when K is a two-sided ideal of R, otherwise the index tuple
        of a violated closure condition.
        """

    def is_ideal(self, K: Ideal) -> bool:
        return len(K) == self.size and self.ideal_witness(K) is None

    @abc.abstractmethod
    def is_proper(self, K: Ideal) -> bool:
        """K ≠ R."""

    @abc.abstractmethod
    def prime_witness(self, K: Ideal) -> Optional[Tuple]:
        """
        None when the ideal K is prime over monomial witnesses,
        otherwise the index pair (x, y) with xRy ⊆ K.
        """

    def is_prime_ideal(self, K: Ideal) -> bool:
        return (
            self.is_ideal(K)
            and self.is_proper(K)
            and self.prime_witness(K) is None
        )

    @abc.abstractmethod
    def ideal_candidates(self) -> List[List[IdealCut]]:
        """Candidate values per coordinate for prime ideal search."""

    @abc.abstractmethod
    def contraction_of(self, K: Ideal) -> IdealCut:
        """{a ∈ O_v : a·1_R ∈ K}."""

    @abc.abstractmethod
    def extend_ideal(self, P: IdealCut) -> Ideal:
        """The ideal P·R for an ideal P of O_v."""

    @abc.abstractmethod
    def ideal_member(self, x: Element, K: Ideal) -> bool:
        """x ∈ K."""

    def ideal_join(self, K1: Ideal, K2: Ideal) -> Ideal:
        """The sum K1 + K2, componentwise."""
        return tuple(ideal_join(a, b) for a, b in zip(K1, K2))

    def ideal_le(self, K1: Ideal, K2: Ideal) -> bool:
        """K1 ⊆ K2."""
        return all(ideal_contains(b, a) for a, b in zip(K1, K2))

    def ideal_to_json(self, K: Ideal) -> Any:
        return [J.to_json() for J in K]

    def ideal_from_json(self, obj: Any) -> Ideal:
        if not isinstance(obj, list) or len(obj) != self.size:
            raise InstanceSpecError(
                f"ideal: expected {self.size} components, got {obj}"
            )
        return tuple(
            self.parse_ideal(item, f"ideal[{idx}]")
            for idx, item in enumerate(obj)
        )


# ---------------------------------------------------------------------
# TYPES
# ---------------------------------------------------------------------
class PatternAlgebra(AlgebraBase):
    """
    R = ⊕ J_ij e_ij inside M_n(F), each J_ij an O_v-submodule of F.
    """

    kind = "pattern"
    required = {"n": int, "components": list}

    def initialize_algebra(self):
        if self.n < 1:
            raise InstanceSpecError(
                f"instance.n: must be positive, got {self.n}"
            )
        validate_grid(self.components, self.n, "instance.components")
        self.components = tuple(
            self.parse_ideal(obj, f"instance.components[{i}][{j}]")
            for i, row in enumerate(self.components)
            for j, obj in enumerate(row)
        )

    def structure(self):
        spec = {
            "kind": self.kind,
            "rank": self.rank,
            "n": self.n,
            "components": rows([J.to_json() for J in self.components], self.n),
        }
        if not self.unital:
            spec["unital"] = False
        return spec

    def component(self, i: int, j: int) -> IdealCut:
        return self.components[i * self.n + j]

    def diagonal(self) -> List[IdealCut]:
        return [self.component(i, i) for i in range(self.n)]

    @property
    def size(self):
        return self.n * self.n

    def labels(self):
        return [f"e{i}{j}" for i in range(self.n) for j in range(self.n)]

    def one(self):
        if not self.unital:
            return None
        return tuple(
            ModelElem.one(self.rank) if i == j else ModelElem.zero(self.rank)
            for i in range(self.n)
            for j in range(self.n)
        )

    def mul(self, x, y):
        n = self.n
        return tuple(
            sum(
                (x[i * n + m] * y[m * n + l] for m in range(n)),
                ModelElem.zero(self.rank),
            )
            for i in range(n)
            for l in range(n)
        )

    def contains(self, x):
        return all(
            c.rank == self.rank and element_in(c, J)
            for c, J in zip(x, self.components)
        )

    def random_element(self, gen):
        coords = []
        for J in self.components:
            if J == zero_ideal(self.rank) or gen.random() < 0.2:
                coords.append(ModelElem.zero(self.rank))
                continue
            leading = random_value_above(J.boundary, gen)
            coords.append(random_model_elem(leading, gen))
        return tuple(coords)

    def coordinate_elements(self):
        elements = []
        for idx, (label, J) in enumerate(zip(self.labels(), self.components)):
            value = minimal_value(J.boundary)
            if value is not None:
                elements.append((label, self.monomial_at(idx, value)))
        return elements

    def element_to_json(self, x):
        return rows([c.to_json() for c in x], self.n)

    def element_from_json(self, obj):
        """
        Accepts n rows of n term lists besides the flat and labelled
        forms.
        """
        if (
            isinstance(obj, list)
            and len(obj) == self.n
            and all(
                isinstance(row, list)
                and len(row) == self.n
                and all(_is_term_list(terms) for terms in row)
                for row in obj
            )
        ):
            obj = [terms for row in obj for terms in row]
        return super().element_from_json(obj)

    def support_from_values(self, values) -> Cut:
        """
        Support cut from the entrywise values of x.

        xR ⊆ aR iff x_km·J_ml ⊆ a·J_kl for all k, m, l. Each constraint
        bounds v(a) by a residual cut; the support is the minimum of
        those bounds with the negative values adjoined.

        Args:
            values (list): n·n values, GroupElem or INFINITY, row-major.

        Returns:
            support (Cut)
        """
        n = self.n
        zero = zero_ideal(self.rank)
        bound = Cut.top(self.rank)
        for k, m, l in itertools.product(range(n), repeat=3):
            value = values[k * n + m]
            J_ml = self.component(m, l)
            if value is INFINITY or J_ml == zero:
                continue
            reach = add_cut(J_ml.boundary, embed(value))
            bound = cut_min(
                bound, residual(self.component(k, l).boundary, reach)
            )
        return cut_max(bound, embed(-GroupElem.epsilon(self.rank)))

    def support(self, x):
        return self.support_from_values([valuation(c) for c in x])

    @property
    def dim(self):
        zero = zero_ideal(self.rank)
        return sum(1 for J in self.components if J != zero)

    @property
    def torsion_free(self):
        return True

    @property
    def faithful(self):
        return True

    @property
    def finitely_generated(self):
        zero = zero_ideal(self.rank)
        return all(
            is_cancellative(J.boundary)
            for J in self.components
            if J != zero
        )

    def invariant_witness(self):
        if self.unital:
            for i, J in enumerate(self.diagonal()):
                if not ideal_member(GroupElem.zero(self.rank), J):
                    return "not unital: 0 is not a value of J_ii", (i, i)
        for i, m, l in itertools.product(range(self.n), repeat=3):
            if not product_contained(
                self.component(i, m),
                self.component(m, l),
                self.component(i, l),
            ):
                return "not closed: J_im·J_ml ⊄ J_il", (i, m, l)
        return None

    def diagonal_meet(self) -> IdealCut:
        return ideal_meet(*self.diagonal())

    def condition_a(self):
        self.require_unital("condition (a)")
        return self.diagonal_meet() == ov(self.rank)

    def condition_b_witness(self):
        self.require_unital("condition (b)")
        eps = GroupElem.epsilon(self.rank)
        if self.diagonal_meet().boundary < embed(-eps):
            return list(eps.coords)
        return None

    def units_condition(self):
        return self.condition_b_witness() is None

    def whole_ideal(self):
        return self.components

    def ideal_witness(self, K):
        n = self.n
        for idx, (J, Kc) in enumerate(zip(self.components, K)):
            if not ideal_contains(J, Kc):
                return (idx // n, idx % n)
        for i, m, l in itertools.product(range(n), repeat=3):
            K_il = K[i * n + l]
            left = product_contained(self.component(i, m), K[m * n + l], K_il)
            right = product_contained(K[i * n + m], self.component(m, l), K_il)
            if not (left and right):
                return (i, m, l)
        return None

    def is_proper(self, K):
        return tuple(K) != self.components

    def prime_witness(self, K):
        n = self.n
        gaps = [
            idx
            for idx, (J, Kc) in enumerate(zip(self.components, K))
            if J != Kc
        ]
        for first, second in itertools.product(gaps, repeat=2):
            i, j = divmod(first, n)
            k, l = divmod(second, n)
            reach = add_cut(K[first].boundary, K[second].boundary)
            room = residual(
                self.component(j, k).boundary,
                K[i * n + l].boundary,
                strict=True,
            )
            if reach > room:
                return ((i, j), (k, l))
        return None

    def ideal_candidates(self):
        zero = zero_ideal(self.rank)
        primes = [P for P in base_chain(self.rank) if P != zero]
        candidates = []
        for J in self.components:
            options = [J] + [ideal_product(P, J) for P in reversed(primes)]
            options.append(zero)
            candidates.append(list(dict.fromkeys(options)))
        return candidates

    def contraction_of(self, K):
        self.require_unital("contraction")
        diagonal = (K[i * self.n + i] for i in range(self.n))
        return ideal_meet(ov(self.rank), *diagonal)

    def extend_ideal(self, P):
        return tuple(ideal_product(P, J) for J in self.components)

    def ideal_member(self, x, K):
        return all(element_in(c, Kc) for c, Kc in zip(x, K))

    def ideal_to_json(self, K):
        return rows([J.to_json() for J in K], self.n)

    def ideal_from_json(self, obj):
        if (
            isinstance(obj, list)
            and len(obj) == self.n
            and all(isinstance(row, list) for row in obj)
        ):
            obj = [item for row in obj for item in row]
        return super().ideal_from_json(obj)


class MonomialAlgebra(AlgebraBase):
    """
    R = ⊕ (O_v / Ann_i)·b_i with b_0 = 1_R and b_i·b_j either 0 or
    t^γ_ij·b_k.
    """

    kind = "monomial"
    required = {"basis": list, "ann": list, "table": list}

    def validate_instance_spec_keys(self):
        super().validate_instance_spec_keys()
        if self.instance_spec.get("unital", True) is not True:
            raise InstanceSpecError(
                "instance.unital: monomial algebras contain b_0 = 1"
            )

    def initialize_algebra(self):
        size = len(self.basis)
        if size < 1:
            raise InstanceSpecError("instance.basis: must not be empty")
        for idx, name in enumerate(self.basis):
            if not isinstance(name, str):
                raise InstanceSpecError(
                    f"instance.basis[{idx}]: expected a string, got {name}"
                )
        if len(set(self.basis)) != size:
            raise InstanceSpecError("instance.basis: duplicate names")
        self.basis = tuple(self.basis)
        if len(self.ann) != size:
            raise InstanceSpecError(
                f"instance.ann: expected {size} cuts, got {len(self.ann)}"
            )
        self.ann = tuple(
            self.parse_ideal(obj, f"instance.ann[{idx}]")
            for idx, obj in enumerate(self.ann)
        )
        validate_grid(self.table, size, "instance.table")
        self.table = tuple(
            tuple(
                self._parse_entry(entry, f"instance.table[{i}][{j}]")
                for j, entry in enumerate(row)
            )
            for i, row in enumerate(self.table)
        )

    def _parse_entry(self, entry, path):
        if entry is None:
            return None
        if not isinstance(entry, list) or len(entry) != 2:
            raise InstanceSpecError(f"{path}: expected null or [shift, index]")
        shift, target = entry
        try:
            shift = GroupElem(shift)
        except (TypeError, ValueError) as err:
            raise InstanceSpecError(f"{path}: {err}") from err
        if shift.rank != self.rank:
            raise InstanceSpecError(
                f"{path}: shift must have rank {self.rank}"
            )
        if (
            not isinstance(target, int)
            or isinstance(target, bool)
            or not 0 <= target < len(self.basis)
        ):
            raise InstanceSpecError(f"{path}: invalid basis index {target}")
        return shift, target

    def structure(self):
        return {
            "kind": self.kind,
            "rank": self.rank,
            "basis": list(self.basis),
            "ann": [J.to_json() for J in self.ann],
            "table": [
                [
                    None if entry is None else [list(entry[0]), entry[1]]
                    for entry in row
                ]
                for row in self.table
            ],
        }

    @property
    def size(self):
        return len(self.basis)

    def labels(self):
        return list(self.basis)

    def one(self):
        return self.monomial_at(0)

    def reduce(self, x):
        return tuple(c.truncate(A) for c, A in zip(x, self.ann))

    def mul(self, x, y):
        coords = list(self.zero())
        for i, a in enumerate(x):
            if not a:
                continue
            for j, b in enumerate(y):
                entry = self.table[i][j]
                if not b or entry is None:
                    continue
                shift, target = entry
                coords[target] = coords[target] + (a * b).shift(shift)
        return self.reduce(tuple(coords))

    def contains(self, x):
        Ov = ov(self.rank)
        return all(c.rank == self.rank and element_in(c, Ov) for c in x)

    def random_element(self, gen):
        coords = []
        for _ in range(self.size):
            if gen.random() < 0.25:
                coords.append(ModelElem.zero(self.rank))
            else:
                leading = random_nonnegative(self.rank, gen)
                coords.append(random_model_elem(leading, gen))
        return self.reduce(tuple(coords))

    def coordinate_elements(self):
        return [
            (name, self.monomial_at(idx))
            for idx, name in enumerate(self.basis)
        ]

    def support(self, x):
        least = INFINITY
        for j in range(self.size):
            for c in self.mul(x, self.monomial_at(j)):
                least = min(least, valuation(c))
        if least is INFINITY:
            return Cut.top(self.rank)
        return embed(least)

    def basis_product(self, entry, j):
        """
        (t^γ·b_k)·b_j as a reduced (shift, index) pair or None.
        """
        if entry is None:
            return None
        shift, k = entry
        step = self.table[k][j]
        if step is None:
            return None
        return self._reduced((shift + step[0], step[1]))

    def product_basis(self, i, entry):
        """b_i·(t^γ·b_k) as a reduced (shift, index) pair or None."""
        if entry is None:
            return None
        shift, k = entry
        step = self.table[i][k]
        if step is None:
            return None
        return self._reduced((shift + step[0], step[1]))

    def _reduced(self, entry):
        if entry is None or ideal_member(entry[0], self.ann[entry[1]]):
            return None
        return entry

    @property
    def dim(self):
        zero = zero_ideal(self.rank)
        return sum(1 for A in self.ann if A == zero)

    @property
    def torsion_free(self):
        zero = zero_ideal(self.rank)
        return all(A == zero for A in self.ann)

    @property
    def faithful(self):
        return self.ann[0] == zero_ideal(self.rank)

    @property
    def finitely_generated(self):
        return True

    def invariant_witness(self):
        size = self.size
        zero = GroupElem.zero(self.rank)
        Iv = iv(self.rank)
        for idx, A in enumerate(self.ann):
            if not ideal_contains(Iv, A):
                return "annihilator is not a proper ideal of O_v", (idx,)
        for j in range(size):
            if self.table[0][j] != (zero, j) or self.table[j][0] != (zero, j):
                return "b_0 is not the identity", (0, j)
        for i, j in itertools.product(range(size), repeat=2):
            entry = self.table[i][j]
            if entry is None:
                continue
            shift, k = entry
            if shift < zero:
                return "negative structure shift", (i, j)
            for source in (i, j):
                if not ideal_contains(
                    self.ann[k], ideal_shift(shift, self.ann[source])
                ):
                    return "annihilators not compatible", (i, j, k)
        for i, j, l in itertools.product(range(size), repeat=3):
            ij = self._reduced(self.table[i][j])
            jl = self._reduced(self.table[j][l])
            if self.basis_product(ij, l) != self.product_basis(i, jl):
                return "table is not associative", (i, j, l)
        return None

    def condition_a(self):
        return self.torsion_free and self.faithful

    def condition_b_witness(self):
        for idx, A in enumerate(self.ann):
            if A != zero_ideal(self.rank):
                return {
                    "torsion": self.basis[idx],
                    "killed_by": list(minimal_value(A.boundary).coords),
                }
        return None

    def units_condition(self):
        return True

    def whole_ideal(self):
        return (ov(self.rank),) * self.size

    def ideal_witness(self, K):
        Ov = ov(self.rank)
        for idx, (A, Kc) in enumerate(zip(self.ann, K)):
            if not ideal_contains(Kc, A) or not ideal_contains(Ov, Kc):
                return (idx,)
        for i, j in itertools.product(range(self.size), repeat=2):
            entry = self.table[i][j]
            if entry is None:
                continue
            shift, k = entry
            for source in (i, j):
                if not ideal_contains(K[k], ideal_shift(shift, K[source])):
                    return (i, j, k)
        return None

    def is_proper(self, K):
        return K[0] != ov(self.rank)

    def prime_witness(self, K):
        Ov = ov(self.rank)
        gaps = [idx for idx, Kc in enumerate(K) if Kc != Ov]
        for i, j in itertools.product(gaps, repeat=2):
            reach = add_cut(K[i].boundary, K[j].boundary)
            room = Cut.bottom(self.rank)
            for l in range(self.size):
                path = self.basis_product(self._reduced(self.table[i][l]), j)
                if path is not None:
                    shift, target = path
                    room = max(room, sub_group(K[target].boundary, shift))
            if reach > room:
                return ((i,), (j,))
        return None

    def ideal_candidates(self):
        Ov = ov(self.rank)
        primes = list(reversed(base_chain(self.rank)))
        return [
            list(dict.fromkeys([Ov] + [ideal_join(P, A) for P in primes]))
            for A in self.ann
        ]

    def contraction_of(self, K):
        return K[0]

    def extend_ideal(self, P):
        return tuple(ideal_join(P, A) for A in self.ann)

    def ideal_member(self, x, K):
        return all(element_in(c, Kc) for c, Kc in zip(self.reduce(x), K))


class Algebra:
    """
    Generic constructor for the algebra kinds.

    Args:
        instance_spec (dict): Instance specification with key "kind".
    """

    ALGEBRA_KINDS = {
        "pattern": PatternAlgebra,
        "monomial": MonomialAlgebra,
    }

    def __new__(cls, instance_spec):
        cls.validate_instance_spec(cls, instance_spec)
        return cls.ALGEBRA_KINDS[instance_spec["kind"]](instance_spec)

    @staticmethod
    def validate_instance_spec(cls, instance_spec):
        """
        Checks the general keys of an instance specification.

        Raises:
            InstanceSpecError: When `instance_spec` is not a dict or has
                no known 'kind'.
        """
        if not isinstance(instance_spec, dict):
            raise InstanceSpecError(
                f"instance: expected to be a dict, got {type(instance_spec)}"
            )
        if "kind" not in instance_spec:
            raise InstanceSpecError("instance: missing required key 'kind'")
        if instance_spec["kind"] not in cls.ALGEBRA_KINDS:
            raise InstanceSpecError(
                f"instance.kind: unknown kind '{instance_spec['kind']}'"
            )


def full_matrix_algebra(n: int, rank: int) -> PatternAlgebra:
    """M_n(O_v)."""
    return Algebra(
        {
            "kind": "pattern",
            "rank": rank,
            "n": n,
            "components": [["Ov"] * n for _ in range(n)],
        }
    )


def validate(R: AlgebraBase) -> Report:
    return R.validate()


def support(x: Element, R: AlgebraBase) -> Cut:
    """
    Support cut of an element of R.

    Raises:
        MembershipError: When x is not in R.
    """
    R.check_member(x)
    return R.support(R.reduce(x))


def filter_qv(x: Element, R: AlgebraBase) -> Cut:
    return R.filter_qv(x)


def check_condition_a(R: AlgebraBase) -> bool:
    return R.condition_a()


def check_condition_b(R: AlgebraBase) -> bool:
    """
    (R^× ∩ O_v) ⊆ O_v^×. For pattern algebras this fails exactly when
    t^ε·1_R is invertible; monomial algebras must also be torsion-free.
    """
    return R.condition_b_witness() is None


def check_condition_c(R: AlgebraBase, samples: int, seed: int) -> Report:
    """
    Checks w(a·1_R) = v(a) for the filter quasi-valuation on sampled
    scalars, zero included.

    Returns:
        report (dict): {"passed", "checked", "witness"}.

    Raises:
        HypothesisError: On a non-unital algebra.
    """
    one = R.require_unital("condition (c)")
    scalars = sample_scalars(R.rank, max(samples, 2), seed)
    scalars.append(ModelElem.zero(R.rank))
    for a in scalars:
        value = R.filter_qv(R.scale(a, one))
        expected = Cut.infty(R.rank) if not a else embed(valuation(a))
        if value != expected:
            return {
                "passed": False,
                "checked": len(scalars),
                "witness": {
                    "scalar": a.to_json(),
                    "value": value.to_json(),
                    "expected": expected.to_json(),
                },
            }
    return {"passed": True, "checked": len(scalars), "witness": None}


def contraction(K: Ideal, R: AlgebraBase) -> IdealCut:
    """
    The ideal {a ∈ O_v : a·1_R ∈ K} of O_v.

    Raises:
        InvalidAlgebraError: When K is not an ideal of R.
    """
    witness = R.ideal_witness(K) if len(K) == R.size else (len(K),)
    if witness is not None:
        raise InvalidAlgebraError("not an ideal", witness)
    return R.contraction_of(K)


def _is_term_list(obj: Any) -> bool:
    return isinstance(obj, list) and all(
        isinstance(term, list)
        and len(term) == 3
        and isinstance(term[0], int)
        for term in obj
    )
