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
import itertools
import logging
import math
import warnings
from dataclasses import dataclass

from .algebra import AlgebraBase
from .exceptions import (
    BoundExceededError,
    CandidateFamilyWarning,
    NotFinitelyGeneratedError,
)
from .field_model import (
    IdealCut,
    ModelElem,
    base_chain,
    ideal_contains,
    prime_index,
)
from .ordered_values import validate_rank
from .quasival import (
    QuasiValuation,
    check_lemma_outside_prime,
    check_v_qv,
    image_scan,
)
from .random import (
    random_value_above,
    random_value_in_h,
    rng,
    sample_elements,
)
from .typing import Any, Dict, Ideal, List, Optional, Report, Verdict
from .utils import (
    FAIL,
    NOT_APPLICABLE,
    PASS,
    UNKNOWN,
    canonical_json,
    passes,
    verdict,
)

logger = logging.getLogger(__name__)

DEFAULT_BOUND = 200000
COMPLETENESS = "within candidate family"


# ---------------------------------------------------------------------
# TYPES
# ---------------------------------------------------------------------
@dataclass(frozen=True)
class SpecNode:
    """
    A prime ideal of R together with its contraction to O_v and the
    position of that contraction in the base chain.
    """

    ideal: Ideal
    contraction: IdealCut
    position: int

    def to_json(self, algebra: Optional[AlgebraBase] = None) -> Dict:
        if algebra is None:
            ideal = [J.to_json() for J in self.ideal]
        else:
            ideal = algebra.ideal_to_json(self.ideal)
        return {"ideal": ideal, "over": self.position}


class ContractionMap:
    """
    The finite poset of enumerated primes of R with the contraction
    arrows onto the base chain {0} = P_r ⊂ ... ⊂ P_0 = I_v, listed by
    position 0..rank.

    Args:
        nodes (list): SpecNode objects.
        rank (int): Rank of the value group.
        algebra: The algebra the ideals belong to, or None for the base.
    """

    def __init__(
        self,
        nodes: List[SpecNode],
        rank: int,
        algebra: Optional[AlgebraBase] = None,
        completeness: str = COMPLETENESS,
    ) -> None:
        validate_rank(rank)
        self.nodes = list(nodes)
        self.rank = rank
        self.algebra = algebra
        self.completeness = completeness
        self.base = base_chain(rank)
        self.le = [
            [self._contained(a, b) for b in self.nodes] for a in self.nodes
        ]

    @staticmethod
    def _contained(a: SpecNode, b: SpecNode) -> bool:
        return all(
            ideal_contains(Kb, Ka) for Ka, Kb in zip(a.ideal, b.ideal)
        )

    def __len__(self):
        return len(self.nodes)

    def __repr__(self):
        return f"ContractionMap(rank={self.rank}, nodes={len(self)})"

    def lt(self, a: int, b: int) -> bool:
        return a != b and self.le[a][b]

    def positions(self) -> List[int]:
        return [node.position for node in self.nodes]

    def fiber(self, position: int) -> List[int]:
        """Indices of the nodes lying over the base prime at `position`."""
        return [
            idx for idx, node in enumerate(self.nodes)
            if node.position == position
        ]

    def minimal_nodes(self) -> List[int]:
        return [
            b for b in range(len(self))
            if not any(self.lt(a, b) for a in range(len(self)))
        ]

    def maximal_nodes(self) -> List[int]:
        return [
            a for a in range(len(self))
            if not any(self.lt(a, b) for b in range(len(self)))
        ]

    def covers(self, a: int) -> List[int]:
        """Nodes directly above `a`."""
        above = [b for b in range(len(self)) if self.lt(a, b)]
        return [
            b for b in above
            if not any(self.lt(c, b) for c in above if c != b)
        ]

    def maximal_chains(self) -> List[List[int]]:
        """
        Saturated chains from a minimal to a maximal node, each listed in
        increasing order.
        """
        chains = []

        def walk(chain):
            up = self.covers(chain[-1])
            if not up:
                chains.append(list(chain))
            for b in up:
                walk(chain + [b])

        for a in self.minimal_nodes():
            walk([a])
        return chains

    def longest_chain(self) -> int:
        """Number of nodes of the longest chain, 0 for an empty map."""
        return max((len(chain) for chain in self.maximal_chains()), default=0)

    def to_json(self) -> Report:
        return {
            "rank": self.rank,
            "base": [P.to_json() for P in self.base],
            "spec_size": len(self),
            "map": [node.to_json(self.algebra) for node in self.nodes],
            "order": [
                [a, b]
                for a in range(len(self))
                for b in range(len(self))
                if self.lt(a, b)
            ],
            "completeness": self.completeness,
        }


# ---------------------------------------------------------------------
# ENUMERATION
# ---------------------------------------------------------------------
def base_map(rank: int) -> ContractionMap:
    """The identity map of Spec(O_v) onto itself."""
    nodes = [
        SpecNode((P,), P, position)
        for position, P in enumerate(base_chain(rank))
    ]
    return ContractionMap(nodes, rank, completeness="exact")


def enumerate_spec(
    R: AlgebraBase, bound: int = DEFAULT_BOUND
) -> ContractionMap:
    """
    Enumerates the prime ideals of R whose components come from the
    candidate family of the algebra.

    Args:
        R: A unital PatternAlgebra or MonomialAlgebra.
        bound (int): Maximum number of candidate ideals to examine.

    Returns:
        map (ContractionMap): The primes found, sorted by contraction
            position and then by their JSON form.

    Raises:
        HypothesisError: On a non-unital algebra.
        BoundExceededError: When the candidate family is larger than
            `bound`.
    """
    R.require_unital("enumerate_spec")
    candidates = R.ideal_candidates()
    total = math.prod(len(options) for options in candidates)
    logger.debug("%s: %d candidate ideals", R, total)
    if total > bound:
        raise BoundExceededError(
            f"{R} has {total} candidate ideals, bound is {bound}"
        )
    nodes = []
    for K in itertools.product(*candidates):
        if not R.is_prime_ideal(K):
            continue
        P = R.contraction_of(K)
        position = prime_index(P)
        if position is None:
            warnings.warn(
                f"{R}: prime {K} contracts to {P}, not a base prime",
                CandidateFamilyWarning,
            )
            continue
        nodes.append(SpecNode(tuple(K), P, position))
    nodes.sort(
        key=lambda node: (
            node.position, canonical_json(R.ideal_to_json(node.ideal))
        )
    )
    logger.info("%s: %d prime ideals", R, len(nodes))
    return ContractionMap(nodes, R.rank, R)


def _node_json(m: ContractionMap, idx: int) -> Dict:
    return m.nodes[idx].to_json(m.algebra)


# ---------------------------------------------------------------------
# PROPERTIES
# ---------------------------------------------------------------------
def check_LO(m: ContractionMap) -> Verdict:
    """Every base prime is the contraction of some node."""
    hit = set(m.positions())
    for position, P in enumerate(m.base):
        if position not in hit:
            return verdict(FAIL, {"unhit": position, "prime": P.to_json()})
    return verdict(PASS)


def check_GD(m: ContractionMap) -> Verdict:
    """
    For P1 ⊂ P2 and Q2 over P2 there is Q1 ⊆ Q2 over P1.
    """
    for q2 in range(len(m)):
        p2 = m.nodes[q2].position
        for p1 in range(p2):
            if not any(m.le[q1][q2] for q1 in m.fiber(p1)):
                return verdict(
                    FAIL, {"Q2": _node_json(m, q2), "P1": p1}
                )
    return verdict(PASS)


def check_GU(m: ContractionMap) -> Verdict:
    """
    For P1 ⊂ P2 and Q1 over P1 there is Q2 ⊇ Q1 over P2.
    """
    for q1 in range(len(m)):
        p1 = m.nodes[q1].position
        for p2 in range(p1 + 1, m.rank + 1):
            if not any(m.le[q1][q2] for q2 in m.fiber(p2)):
                return verdict(
                    FAIL, {"Q1": _node_json(m, q1), "P2": p2}
                )
    return verdict(PASS)


def check_INC(m: ContractionMap) -> Verdict:
    """Comparable distinct nodes have distinct contractions."""
    for a in range(len(m)):
        for b in range(len(m)):
            if m.lt(a, b) and m.nodes[a].position == m.nodes[b].position:
                return verdict(
                    FAIL, {"Q1": _node_json(m, a), "Q2": _node_json(m, b)}
                )
    return verdict(PASS)


def check_SGB(m: ContractionMap) -> Verdict:
    """
    For P1 ⊂ P2 ⊂ P3 and Q1 ⊆ Q3 over P1 and P3 there is Q2 over P2 with
    Q1 ⊆ Q2 ⊆ Q3.
    """
    for q1 in range(len(m)):
        for q3 in range(len(m)):
            if not m.le[q1][q3]:
                continue
            p1, p3 = m.nodes[q1].position, m.nodes[q3].position
            for p2 in range(p1 + 1, p3):
                if not any(
                    m.le[q1][q2] and m.le[q2][q3] for q2 in m.fiber(p2)
                ):
                    return verdict(
                        FAIL,
                        {
                            "Q1": _node_json(m, q1),
                            "Q3": _node_json(m, q3),
                            "P2": p2,
                        },
                    )
    return verdict(PASS)


def _cover_chain(
    m: ContractionMap, top: int, below: List[int]
) -> Optional[List[int]]:
    """
    A chain of nodes under `top` lying over every position of `below`
    (decreasing), or None.
    """
    if not below:
        return [top]
    head, rest = below[0], below[1:]
    for q in m.fiber(head):
        if not m.lt(q, top):
            continue
        chain = _cover_chain(m, q, rest)
        if chain is not None:
            return [top] + chain
    return None


def _base_chains(rank: int):
    positions = range(rank + 1)
    for size in range(1, rank + 2):
        for chain in itertools.combinations(positions, size):
            yield list(chain)


def check_GGD(m: ContractionMap) -> Verdict:
    """
    For every chain D of base primes with largest element P0 and every
    Q0 over P0 there is a chain of nodes covering D that ends at Q0.
    """
    for D in _base_chains(m.rank):
        below = sorted(D[:-1], reverse=True)
        for q0 in m.fiber(D[-1]):
            if _cover_chain(m, q0, below) is None:
                return verdict(FAIL, {"chain": D, "Q0": _node_json(m, q0)})
    return verdict(PASS)


def check_chain_cover(m: ContractionMap) -> Verdict:
    """Every chain of base primes is covered by some chain of nodes."""
    for D in _base_chains(m.rank):
        below = sorted(D[:-1], reverse=True)
        if not any(
            _cover_chain(m, q0, below) is not None for q0 in m.fiber(D[-1])
        ):
            return verdict(FAIL, {"chain": D})
    return verdict(PASS)


def check_gd_criterion(m: ContractionMap) -> Verdict:
    """
    GD holds exactly when every minimal node lies over {0}. The verdict
    fails when the two computations disagree.
    """
    gd = passes(check_GD(m))
    stray = [q for q in m.minimal_nodes() if m.nodes[q].position != 0]
    criterion = not stray
    if gd != criterion:
        witness = {"gd": gd, "minimal_over_zero": criterion}
        if stray:
            witness["minimal_node"] = _node_json(m, stray[0])
        return verdict(FAIL, witness)
    return verdict(PASS, gd=gd, minimal_over_zero=criterion)


def check_contractions_are_base(m: ContractionMap) -> Verdict:
    for idx, node in enumerate(m.nodes):
        if prime_index(node.contraction) != node.position:
            return verdict(FAIL, {"node": _node_json(m, idx)})
    return verdict(PASS)


def check_bounds(
    m: ContractionMap,
    dim: int,
    condition_b: bool,
    torsion_free: bool = True,
) -> Verdict:
    """
    Fiber and cardinality bounds of the spectrum in terms of the
    dimension of R⊗F, plus the lower bound and the Krull dimension
    equality under condition (b).

    Args:
        m (ContractionMap): Enumerated spectrum.
        dim (int): dim_F(R⊗F).
        condition_b (bool): Whether condition (b) holds.
        torsion_free (bool): Whether R is torsion-free over O_v.

    Returns:
        verdict (dict): With the entry "clauses" listing each bound.
    """
    size = len(m)
    base_size = m.rank + 1
    clauses = {}
    for position in range(base_size):
        fiber = len(m.fiber(position))
        if fiber > dim:
            clauses["fiber"] = {"position": position, "size": fiber}
            break
    else:
        clauses["fiber"] = True
    clauses["upper"] = size <= dim * base_size or {
        "spec_size": size, "bound": dim * base_size
    }
    if condition_b:
        clauses["lower"] = base_size <= size or {
            "spec_size": size, "bound": base_size
        }
        kdim = m.longest_chain() - 1
        clauses["krull_eq"] = kdim == m.rank or {
            "krull_dim": kdim, "rank": m.rank
        }
    else:
        clauses["lower"] = NOT_APPLICABLE
        clauses["krull_eq"] = NOT_APPLICABLE
    readings = {"rank": m.rank, "spectrum_size": base_size}
    if not torsion_free:
        return verdict(
            NOT_APPLICABLE,
            reason="R has O_v-torsion",
            clauses=clauses,
            kdim_readings=readings,
        )
    failed = {
        name: value for name, value in clauses.items()
        if isinstance(value, dict)
    }
    if failed:
        return verdict(FAIL, failed, clauses=clauses, kdim_readings=readings)
    return verdict(PASS, clauses=clauses, kdim_readings=readings)


def check_krull_eq(
    m: ContractionMap, condition_b: bool, torsion_free: bool
) -> Verdict:
    if not (condition_b and torsion_free):
        return verdict(
            NOT_APPLICABLE, reason="needs condition (b) and no torsion"
        )
    kdim = m.longest_chain() - 1
    if kdim != m.rank:
        return verdict(FAIL, {"krull_dim": kdim, "rank": m.rank})
    return verdict(PASS, krull_dim=kdim)


def check_max_over_iv(
    m: ContractionMap, torsion_free: bool, dim: int
) -> Verdict:
    """
    Every node over I_v is maximal, and with GU and INC the maximal
    nodes are exactly the fiber over I_v.
    """
    if not torsion_free or dim <= 0:
        return verdict(
            NOT_APPLICABLE, reason="needs torsion-free, finite dimension"
        )
    maximal = set(m.maximal_nodes())
    top = m.fiber(m.rank)
    for q in top:
        if q not in maximal:
            return verdict(FAIL, {"node": _node_json(m, q)})
    if passes(check_GU(m)) and passes(check_INC(m)):
        if maximal != set(top):
            stray = sorted(maximal - set(top))
            return verdict(FAIL, {"maximal": _node_json(m, stray[0])})
        return verdict(PASS, max_is_fiber=True)
    return verdict(PASS, max_is_fiber=None)


def check_chain_bijection(
    m: ContractionMap, qv_evidence: Dict[str, Any]
) -> Verdict:
    """
    Each maximal chain of nodes maps bijectively and in order onto the
    base chain, and Max(R) is the fiber over I_v.

    Args:
        m (ContractionMap): Enumerated spectrum.
        qv_evidence (dict): {"qualifying_qv": bool, "finitely_generated":
            bool, "torsion_free": bool}; the check applies to a
            qualifying quasi-valuation or to a finitely generated
            torsion-free algebra.
    """
    generated = qv_evidence.get("finitely_generated") and qv_evidence.get(
        "torsion_free", True
    )
    if not (qv_evidence.get("qualifying_qv") or generated):
        return verdict(
            NOT_APPLICABLE,
            reason="no cancellative v-quasi-valuation with w(1) = 0",
        )
    expected = list(range(m.rank + 1))
    for chain in m.maximal_chains():
        positions = [m.nodes[q].position for q in chain]
        if positions != expected:
            return verdict(
                FAIL,
                {
                    "chain": [_node_json(m, q) for q in chain],
                    "positions": positions,
                },
            )
    if set(m.maximal_nodes()) != set(m.fiber(m.rank)):
        return verdict(
            FAIL, {"maximal": m.maximal_nodes(), "fiber": m.fiber(m.rank)}
        )
    return verdict(PASS)


# ---------------------------------------------------------------------
# VALUE-LEVEL CHECKS
# ---------------------------------------------------------------------
def gd_separation(
    R: AlgebraBase,
    w: QuasiValuation,
    p1: int,
    Q2: SpecNode,
    samples: int = 200,
    seed: int = 0,
) -> Verdict:
    """
    Separates P1·R from the multiplicative set S = (O_v ∖ P1)·(R ∖ Q2):
    w(x) > H1⁺ on sampled x ∈ P1·R and w(s) <= H1⁺ on sampled s ∈ S,
    where P1 = P_H1 has boundary H1⁺.

    Args:
        R: A torsion-free unital algebra.
        w (QuasiValuation): A v-quasi-valuation on R.
        p1 (int): Base position of P1, below the position of Q2.
        Q2 (SpecNode): A prime of R.
    """
    if not R.torsion_free or R.one() is None:
        return verdict(
            NOT_APPLICABLE, reason="needs a unital torsion-free algebra"
        )
    if p1 >= Q2.position:
        raise ValueError(
            f"P1 at position {p1} is not below P2 at {Q2.position}"
        )
    P1 = base_chain(R.rank)[p1]
    bound = P1.boundary
    h_index = R.rank - p1
    gen = rng(seed)
    elements = sample_elements(R, samples, seed + 1)
    elements += [element for _, element in R.coordinate_elements()]
    checked = 0
    for r in elements:
        gamma = random_value_above(bound, gen)
        if gamma is None:
            break
        if R.is_zero(r):
            continue
        x = R.scale(ModelElem.monomial(gamma), r)
        checked += 1
        value = w(x)
        if not value > bound:
            return verdict(
                FAIL,
                {"x": R.element_to_json(x), "value": value.to_json()},
            )
    extended = R.extend_ideal(P1)
    for b in elements:
        if R.ideal_member(b, Q2.ideal):
            continue
        delta = random_value_in_h(R.rank, h_index, gen)
        s = R.scale(ModelElem.monomial(delta), b)
        checked += 1
        value = w(s)
        if value > bound or R.ideal_member(s, extended):
            return verdict(
                FAIL,
                {"s": R.element_to_json(s), "value": value.to_json()},
            )
    lemma = check_lemma_outside_prime(R, w, Q2.ideal, samples, seed + 2)
    if not lemma["passed"]:
        return verdict(FAIL, lemma["witness"], checked=checked)
    return verdict(PASS, checked=checked + lemma["checked"])


def qv_evidence(
    w: QuasiValuation, R: AlgebraBase, samples: int, seed: int
) -> Dict[str, Any]:
    """
    Whether `w` is a v-quasi-valuation with w(1) = 0 whose nonzero values
    are cancellative.
    """
    vqv = check_v_qv(w, R, samples, seed)
    scan = image_scan(w, R, samples, seed + 1)
    qualifying = bool(
        vqv["passed"]
        and vqv["w_one_zero"]
        and scan["cancellative"]
        and not scan["nonzero_infty"]
    )
    return {
        "provenance": w.provenance,
        "v_qv": vqv["passed"],
        "w_one_zero": vqv["w_one_zero"],
        "cancellative": scan["cancellative"],
        "nonzero_infty": scan["nonzero_infty"],
        "qualifying_qv": qualifying,
        "finitely_generated": R.finitely_generated,
        "torsion_free": R.torsion_free,
    }


def gu_lift(
    R: AlgebraBase,
    m: ContractionMap,
    w: QuasiValuation,
    I0: SpecNode,
    p1: int,
    evidence: Optional[Dict[str, Any]] = None,
    samples: int = 200,
    seed: int = 0,
) -> Verdict:
    """
    Lifts a prime I0 over P0 to a prime over P1 ⊇ P0: the ideal
    I0 + P1·R contracts to P1 and lies inside a node over P1.
    """
    if evidence is None:
        evidence = qv_evidence(w, R, samples, seed)
    if not evidence["qualifying_qv"] or R.dim <= 0:
        return verdict(
            NOT_APPLICABLE,
            reason=f"{w.provenance} is not a cancellative v-quasi-valuation",
        )
    if p1 < I0.position:
        raise ValueError(
            f"P1 at position {p1} is below P0 at {I0.position}"
        )
    P1 = base_chain(R.rank)[p1]
    J = R.ideal_join(I0.ideal, R.extend_ideal(P1))
    contraction = R.contraction_of(J)
    if contraction != P1:
        return verdict(
            FAIL,
            {
                "ideal": R.ideal_to_json(J),
                "contraction": contraction.to_json(),
            },
        )
    for q in m.fiber(p1):
        if R.ideal_le(J, m.nodes[q].ideal):
            return verdict(PASS, lifted=_node_json(m, q))
    return verdict(FAIL, {"ideal": R.ideal_to_json(J), "over": p1})


def fg_gu_check(R: AlgebraBase, m: ContractionMap) -> Verdict:
    """
    Going up for a finitely generated algebra: maximal nodes lie over
    I_v, GU holds and no a·1_R with v(a) > 0 is a unit.

    Raises:
        NotFinitelyGeneratedError: When R is not finitely generated.
    """
    if not R.finitely_generated:
        raise NotFinitelyGeneratedError(f"{R} is not finitely generated")
    for q in m.maximal_nodes():
        if m.nodes[q].position != m.rank:
            return verdict(FAIL, {"maximal": _node_json(m, q)})
    gu = check_GU(m)
    if not passes(gu):
        return verdict(FAIL, gu["witness"])
    if not R.units_condition():
        return verdict(FAIL, {"units_condition": False})
    return verdict(PASS)


def property_report(
    R: Optional[AlgebraBase],
    m: ContractionMap,
    evidence: Optional[Dict[str, Any]] = None,
) -> Report:
    """
    Runs the poset property suite on an enumerated spectrum.

    Args:
        R: The algebra, or None for the base map.
        m (ContractionMap): Its enumerated spectrum.
        evidence (dict): Quasi-valuation evidence, see qv_evidence.

    Returns:
        report (dict): {"completeness", "verdicts", "witnesses",
            "open_questions"}.
    """
    if R is None:
        dim, torsion_free, condition_b = 1, True, True
        evidence = evidence or {"finitely_generated": True}
    else:
        dim = R.dim
        torsion_free = R.torsion_free
        condition_b = R.condition_b_witness() is None
        evidence = evidence or {
            "finitely_generated": R.finitely_generated,
            "torsion_free": torsion_free,
        }
    verdicts = {
        "LO": check_LO(m),
        "GD": check_GD(m),
        "GU": check_GU(m),
        "INC": check_INC(m),
        "SGB": check_SGB(m),
        "GGD": check_GGD(m),
        "gd_criterion": check_gd_criterion(m),
        "contractions_are_base": check_contractions_are_base(m),
        "max_over_Iv": check_max_over_iv(m, torsion_free, dim),
        "bounds": check_bounds(m, dim, condition_b, torsion_free),
        "krull_eq": check_krull_eq(m, condition_b, torsion_free),
        "chain_bijection": check_chain_bijection(m, evidence),
    }
    if torsion_free and condition_b:
        verdicts["chain_cover"] = check_chain_cover(m)
    else:
        verdicts["chain_cover"] = verdict(
            NOT_APPLICABLE, reason="needs condition (b) and no torsion"
        )
    return {
        "completeness": m.completeness,
        "verdicts": verdicts,
        "witnesses": {
            name: item["witness"]
            for name, item in verdicts.items()
            if item["status"] == FAIL
        },
        "open_questions": {"gu_implies_qualifying_qv": UNKNOWN},
    }
