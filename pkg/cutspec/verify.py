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
import logging
import time
import warnings
from concurrent.futures import ProcessPoolExecutor

from .algebra import Algebra, AlgebraBase, check_condition_c
from .checks import instance_digest
from .exceptions import (
    HypothesisError,
    InstanceSpecError,
    InvalidAlgebraError,
    NonUnitalWarning,
    NotFinitelyGeneratedError,
)
from .quasival import (
    QuasiValuation,
    check_axioms,
    check_extension,
    check_ow_equals_r,
    check_v_qv,
    entry_min_qv,
    filter_quasi_valuation,
    image_scan,
    min_formula_qv,
    natural_extension,
    ow_witnesses,
)
from .spectrum import (
    DEFAULT_BOUND,
    enumerate_spec,
    fg_gu_check,
    gd_separation,
    gu_lift,
    property_report,
    qv_evidence,
)
from .typing import Any, Dict, InstanceSpec, List, Optional, Report, Tuple
from .utils import FAIL, NOT_APPLICABLE, PASS, holds_or_skipped, verdict

logger = logging.getLogger(__name__)

SCHEMA = "cutspec/1"
DEFAULT_SAMPLES = 1000
DEFAULT_SEED = 0


# ---------------------------------------------------------------------
# SUITES
# ---------------------------------------------------------------------
def quasi_valuations(R: AlgebraBase) -> Dict[str, QuasiValuation]:
    """
    The quasi-valuations checked on R: the filter quasi-valuation, the
    min formula when R is unital, torsion-free and finitely generated,
    and the entrywise minimum for pattern algebras.
    """
    qvs = {"filter": filter_quasi_valuation(R)}
    if R.one() is not None and R.torsion_free and R.finitely_generated:
        try:
            qvs["min_formula"] = min_formula_qv(R)
        except (HypothesisError, NotFinitelyGeneratedError) as err:
            logger.info("%s: no min formula: %s", R, err)
    if R.kind == "pattern":
        qvs["entry_min"] = entry_min_qv(R)
    return qvs


def _axioms_suite(R, qvs, samples, seed) -> Report:
    suite = {}
    for name, w in qvs.items():
        suite[name] = {
            "axioms": check_axioms(w, R, samples, seed),
            "v_qv": check_v_qv(w, R, samples, seed + 1),
            "image": image_scan(w, R, min(samples, 200), seed + 2),
        }
    return suite


def _conditions_suite(R, samples, seed) -> Report:
    if R.one() is None:
        return {
            "a": None,
            "b": None,
            "b_witness": None,
            "units": None,
            "c": None,
            **verdict(NOT_APPLICABLE, reason="R has no identity"),
        }
    b_witness = R.condition_b_witness()
    suite = {
        "a": R.condition_a(),
        "b": b_witness is None,
        "b_witness": b_witness,
        "units": R.units_condition(),
        "c": check_condition_c(R, samples, seed),
    }
    return suite


def _min_formula_suite(R, qvs, samples, seed) -> Optional[Report]:
    if "min_formula" not in qvs:
        return None
    w = qvs["min_formula"]
    try:
        W = natural_extension(w, R, min(samples, 200), seed)
    except HypothesisError as err:
        failed = {"passed": False, "witness": str(err)}
        return {"ow_equals_r": failed, "extension": failed}
    return {
        "generators": w.basis.to_json(),
        "ow_equals_r": check_ow_equals_r(R, w.basis, samples, seed),
        "extension": check_extension(W, R, min(samples, 500), seed + 1),
    }


def _worked_example_suite(R, qvs, expect, samples, seed) -> Optional[Report]:
    if "ow" not in expect:
        return None
    expected = dict(expect["ow"])
    w = qvs[expected.pop("qv", "entry_min")]
    try:
        W = natural_extension(w, R, min(samples, 200), seed)
    except HypothesisError as err:
        return {"expected": expected, "passed": False, "error": str(err)}
    found = ow_witnesses(R, W, samples, seed)
    observed = {
        "outside_r": found["outside_r"] is not None,
        "outside_ow": found["outside_ow"] is not None,
        "strict": found["strict"],
    }
    mismatch = {
        key: value
        for key, value in expected.items()
        if observed.get(key) != value
    }
    return {
        "witnesses": found,
        "expected": expected,
        "passed": not mismatch,
        "mismatch": mismatch or None,
    }


def _separation_suite(R, m, w, samples, seed) -> Report:
    if not R.torsion_free:
        return verdict(NOT_APPLICABLE, reason="R has O_v-torsion")
    budget = max(samples // 10, 20)
    checked = 0
    for node in m.nodes:
        for p1 in range(node.position):
            result = gd_separation(R, w, p1, node, budget, seed + checked)
            checked += 1
            if result["status"] == FAIL:
                return result
    return verdict(PASS, pairs=checked)


def _lift_suite(R, m, w, evidence, samples, seed) -> Report:
    if not evidence["qualifying_qv"]:
        return verdict(
            NOT_APPLICABLE,
            reason="no cancellative v-quasi-valuation with w(1) = 0",
        )
    lifted = 0
    for node in m.nodes:
        for p1 in range(node.position, m.rank + 1):
            result = gu_lift(R, m, w, node, p1, evidence, samples, seed)
            if result["status"] == FAIL:
                return result
            lifted += 1
    return verdict(PASS, lifts=lifted)


def _spectrum_suites(R, qvs, samples, seed, bound) -> Report:
    m = enumerate_spec(R, bound)
    best = "min_formula" if "min_formula" in qvs else "filter"
    evidence = qv_evidence(qvs[best], R, min(samples, 200), seed)
    report = property_report(R, m, evidence)
    suites = {
        "map": m.to_json(),
        "evidence": evidence,
        "properties": report,
        "gd_separation": _separation_suite(
            R, m, qvs["filter"], samples, seed
        ),
        "gu_lift": _lift_suite(
            R, m, qvs[best], evidence, min(samples, 200), seed
        ),
    }
    try:
        suites["fg_gu"] = fg_gu_check(R, m)
    except NotFinitelyGeneratedError as err:
        suites["fg_gu"] = verdict(NOT_APPLICABLE, reason=str(err))
    return suites


# ---------------------------------------------------------------------
# CONFORMANCE
# ---------------------------------------------------------------------
def _status(suites: Report, name: str) -> Optional[str]:
    spectrum = suites.get("spectrum")
    if not spectrum:
        return None
    if name in spectrum["properties"]["verdicts"]:
        return spectrum["properties"]["verdicts"][name]["status"]
    if name in spectrum and isinstance(spectrum[name], dict):
        return spectrum[name].get("status")
    return None


def conformance(R: AlgebraBase, suites: Report) -> List[Tuple[str, bool]]:
    """
    The theorem-level checks of an instance as (name, holds) pairs.
    """
    checks = []
    for name, qv in suites["quasi_valuations"].items():
        checks.append((f"axioms:{name}", qv["axioms"]["passed"]))
        if R.torsion_free:
            checks.append((f"homogeneity:{name}", qv["v_qv"]["passed"]))
    conditions = suites["conditions"]
    if conditions["a"] is not None:
        checks.append(("a_iff_b", conditions["a"] == conditions["b"]))
    if conditions["c"] is not None:
        checks.append(
            ("b_implies_c", not conditions["b"] or conditions["c"]["passed"])
        )
    mf = suites.get("min_formula")
    if mf:
        checks.append(("ow_equals_r", mf["ow_equals_r"]["passed"]))
        checks.append(("extension", mf["extension"]["passed"]))
    example = suites.get("worked_example")
    if example:
        checks.append(("worked_example", example["passed"]))
    spectrum = suites.get("spectrum")
    if spectrum:
        finite = R.dim > 0

        def holds(name):
            return _status(suites, name) == PASS

        checks.append(("b_implies_LO", not conditions["b"] or holds("LO")))
        checks.append(("SGB", holds("SGB")))
        checks.append(("gd_criterion", holds("gd_criterion")))
        checks.append(
            ("contractions_are_base", holds("contractions_are_base"))
        )
        if R.torsion_free:
            checks.append(("GD", holds("GD")))
            checks.append(("GGD", holds("GGD")))
            checks.append(
                ("gd_separation", spectrum["gd_separation"]["status"] == PASS)
            )
            if finite:
                checks.append(("INC", holds("INC")))
                checks.append(("max_over_Iv", holds("max_over_Iv")))
        if R.finitely_generated:
            checks.append(("fg_gu", holds("fg_gu")))
        verdicts = spectrum["properties"]["verdicts"]
        for name in ("bounds", "krull_eq", "chain_bijection", "chain_cover"):
            checks.append((name, holds_or_skipped(verdicts[name])))
        checks.append(
            ("gu_lift", holds_or_skipped(spectrum["gu_lift"]))
        )
    for name, expected in suites.get("expect", {}).items():
        checks.append((f"expect:{name}", expected["passed"]))
    return checks


def _expectations(R, expect: Dict[str, Any], suites: Report) -> Report:
    observed = {}
    spectrum = suites.get("spectrum")
    for key, value in expect.items():
        if key == "ow":
            continue
        if key == "spec_size":
            found = spectrum["map"]["spec_size"] if spectrum else None
        elif key == "condition_b":
            found = suites["conditions"]["b"]
        else:
            found = _status(suites, key)
        observed[key] = {
            "expected": value,
            "found": found,
            "passed": found == value,
        }
    return observed


# ---------------------------------------------------------------------
# DRIVER
# ---------------------------------------------------------------------
def verify_instance(
    instance_spec: InstanceSpec,
    samples: int = DEFAULT_SAMPLES,
    seed: int = DEFAULT_SEED,
    bound: int = DEFAULT_BOUND,
    timing: bool = False,
) -> Report:
    """
    Runs every applicable suite on one instance.

    Args:
        instance_spec (dict): The instance specification.
        samples (int): Sample budget per randomized check.
        seed (int): Sampling seed.
        bound (int): Enumeration bound.
        timing (bool): Adds wall-clock seconds per suite.

    Returns:
        report (dict): {"fixture", "instance_digest", "suites",
            "conformance", "passed"[, "timing"]}.
    """
    name = (
        instance_spec.get("name") if isinstance(instance_spec, dict) else None
    )
    report = {
        "fixture": name,
        "instance_digest": instance_digest(instance_spec),
    }
    clock = {}
    started = time.perf_counter()
    try:
        R = Algebra(instance_spec)
        validation = R.validate()
    except (InstanceSpecError, InvalidAlgebraError) as err:
        witness = getattr(err, "witness", None)
        report["suites"] = {
            "validate": {"valid": False, "error": str(err), "witness": witness}
        }
        report["conformance"] = {"validate": False}
        report["passed"] = False
        logger.warning("%s: invalid instance: %s", name, err)
        return report
    if R.sampling.get("seed") is not None:
        seed = R.sampling["seed"]
    if R.sampling.get("count") is not None:
        samples = R.sampling["count"]
    suites: Report = {"validate": validation}

    marks = [started]

    def lap(suite):
        marks.append(time.perf_counter())
        clock[suite] = round(marks[-1] - marks[-2], 3)

    lap("validate")
    qvs = quasi_valuations(R)
    suites["quasi_valuations"] = _axioms_suite(R, qvs, samples, seed)
    lap("quasi_valuations")
    suites["conditions"] = _conditions_suite(R, samples, seed)
    suites["min_formula"] = _min_formula_suite(R, qvs, samples, seed)
    suites["worked_example"] = _worked_example_suite(
        R, qvs, R.expect, samples, seed
    )
    lap("min_formula")
    if R.one() is None:
        warnings.warn(
            f"{R} is not unital, spectrum suites skipped", NonUnitalWarning
        )
        suites["spectrum"] = None
    else:
        suites["spectrum"] = _spectrum_suites(R, qvs, samples, seed, bound)
    lap("spectrum")
    suites["expect"] = _expectations(R, R.expect, suites)
    checks = conformance(R, suites)
    report["suites"] = suites
    report["conformance"] = dict(checks)
    report["passed"] = all(holds for _, holds in checks)
    if timing:
        report["timing"] = clock
    logger.info(
        "%s: %s", R, "conformant" if report["passed"] else "NOT conformant"
    )
    return report


def build_run_report(
    reports: List[Report],
    samples: int,
    seed: int,
    bound: int,
    version: str,
) -> Report:
    failures = [
        report["fixture"] for report in reports if not report["passed"]
    ]
    return {
        "schema": SCHEMA,
        "version": version,
        "samples": samples,
        "seed": seed,
        "bound": bound,
        "instances": reports,
        "failures": failures,
        "passed": not failures,
    }


def verify_all(
    instance_specs: List[InstanceSpec],
    samples: int = DEFAULT_SAMPLES,
    seed: int = DEFAULT_SEED,
    bound: int = DEFAULT_BOUND,
    timing: bool = False,
    jobs: int = 1,
) -> List[Report]:
    """
    Verifies several instances, in parallel worker processes when
    `jobs` > 1. Reports keep the order of `instance_specs`.
    """
    run = functools.partial(
        verify_instance, samples=samples, seed=seed, bound=bound, timing=timing
    )
    if jobs > 1 and len(instance_specs) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as executor:
            return list(executor.map(run, instance_specs))
    return [run(spec) for spec in instance_specs]
